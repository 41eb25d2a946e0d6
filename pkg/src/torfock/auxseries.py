"""Polynomial-truncated series in one auxiliary variable (z, w or v)
whose coefficients are truncated epsilon-series.

The auxiliary variable carries its own precision aux_prec: powers var^k
are tracked for k < aux_prec.  Analytic maps (exp, log, sqrt, inv)
iterate until the running term vanishes in the combined filtration
(epsilon-order plus variable-order); a guard raises NotNilpotent when
the argument has a unit component that can never die out.
"""

from ._rat import Rat
from .cyclo import CycloNumber
from .errors import BadLeadingTerm, NonUnit, NotNilpotent
from .series import TruncSeries


class AuxSeries:
    __slots__ = ("ctx", "var", "c", "aux_prec")

    def __init__(self, ctx, var, coeffs, aux_prec):
        self.ctx = ctx
        self.var = var
        full = ctx.cap + 1
        self.c = {
            k: v
            for k, v in coeffs.items()
            if k < aux_prec and (v.c or v.prec < full)
        }
        self.aux_prec = aux_prec

    # -- constructors ----------------------------------------------------

    @classmethod
    def constant(cls, ctx, var, ts, aux_prec):
        return cls(ctx, var, {0: ts}, aux_prec)

    @classmethod
    def one(cls, ctx, var, aux_prec):
        return cls(ctx, var, {0: ctx.one()}, aux_prec)

    @classmethod
    def variable(cls, ctx, var, aux_prec):
        return cls(ctx, var, {1: ctx.one()}, aux_prec)

    @classmethod
    def exp_linear(cls, ctx, var, coeff, aux_prec):
        """exp(coeff * var) truncated in both directions."""
        c = {}
        pw = ctx.one()
        k = 0
        while k < aux_prec:
            if pw.c or pw.prec <= ctx.cap:
                c[k] = pw
            if not pw.c:
                break
            pw = pw * coeff
            k += 1
            pw = pw.scalar_mul(Rat(1, k))
        return cls(ctx, var, c, aux_prec)

    # -- structure -------------------------------------------------------

    def get(self, k):
        return self.c.get(k, self.ctx.zero())

    def var_val(self):
        return min(self.c) if self.c else self.aux_prec

    def is_structurally_zero(self):
        return all(not v.c for v in self.c.values())

    def _check(self, other):
        if self.var != other.var:
            raise ValueError("mixed auxiliary variables %r and %r" % (self.var, other.var))
        if self.ctx is not other.ctx:
            raise ValueError("mixed series contexts")

    # -- linear operations -------------------------------------------------

    def __add__(self, other):
        if isinstance(other, AuxSeries):
            self._check(other)
            prec = min(self.aux_prec, other.aux_prec)
            c = dict(self.c)
            for k, v in other.c.items():
                cur = c.get(k)
                c[k] = v if cur is None else cur + v
            return AuxSeries(self.ctx, self.var, c, prec)
        return self + AuxSeries.constant(self.ctx, self.var, self._scalar(other), self.aux_prec)

    __radd__ = __add__

    def __neg__(self):
        return AuxSeries(self.ctx, self.var, {k: -v for k, v in self.c.items()}, self.aux_prec)

    def __sub__(self, other):
        return self + (-(other if isinstance(other, AuxSeries) else AuxSeries.constant(
            self.ctx, self.var, self._scalar(other), self.aux_prec)))

    def _scalar(self, s):
        if isinstance(s, TruncSeries):
            return s
        if isinstance(s, CycloNumber):
            return self.ctx.cyc(s)
        return self.ctx.rat(s)

    def scalar_mul(self, s):
        s = self._scalar(s)
        return AuxSeries(self.ctx, self.var, {k: v * s for k, v in self.c.items()}, self.aux_prec)

    def shift(self, j):
        return AuxSeries(self.ctx, self.var, {k + j: v for k, v in self.c.items()}, self.aux_prec + j)

    def truncate_aux(self, p):
        if p >= self.aux_prec:
            return self
        return AuxSeries(self.ctx, self.var, self.c, p)

    def derivative(self):
        c = {k - 1: v.scalar_mul(k) for k, v in self.c.items() if k != 0}
        return AuxSeries(self.ctx, self.var, c, self.aux_prec - 1)

    # -- multiplicative operations -----------------------------------------

    def __mul__(self, other):
        if not isinstance(other, AuxSeries):
            return self.scalar_mul(other)
        self._check(other)
        v1 = min(self.c) if self.c else self.aux_prec
        v2 = min(other.c) if other.c else other.aux_prec
        prec = min(v1 + other.aux_prec, v2 + self.aux_prec, self.aux_prec + other.aux_prec)
        out = {}
        for k1, a in self.c.items():
            for k2, b in other.c.items():
                k = k1 + k2
                if k >= prec:
                    continue
                p = a * b
                cur = out.get(k)
                out[k] = p if cur is None else cur + p
        return AuxSeries(self.ctx, self.var, out, prec)

    __rmul__ = __mul__

    def inv(self):
        c0 = self.get(0)
        if not c0.c:
            raise NonUnit("auxiliary series with non-invertible constant term")
        inv0 = c0.inv()
        r = self.scalar_mul(inv0) - 1
        acc = AuxSeries.one(self.ctx, self.var, self.aux_prec)
        term = acc
        maxiter = self.ctx.cap + self.aux_prec + 2
        for _ in range(maxiter):
            term = (term * (-r)).truncate_aux(self.aux_prec)
            acc = acc + term
            if term.is_structurally_zero():
                break
        else:
            raise NotNilpotent("inverse iteration did not converge")
        return acc.scalar_mul(inv0)

    def _iterate(self, coefs_of_k, needs_unit_one, what):
        """Sum coefs_of_k(k) * u^k for u = self (or self - 1), guarded."""
        if needs_unit_one:
            lead = self.get(0) - 1
            if lead.c and min(lead.c) < 1:
                raise BadLeadingTerm("%s needs constant coefficient 1 + O(eps)" % what)
            u = self - 1
        else:
            lead = self.get(0)
            if lead.c and min(lead.c) < 1:
                raise BadLeadingTerm("%s needs a topologically nilpotent argument" % what)
            u = self
        out = AuxSeries.one(self.ctx, self.var, self.aux_prec).scalar_mul(coefs_of_k(0))
        term = AuxSeries.one(self.ctx, self.var, self.aux_prec)
        maxiter = self.ctx.cap + self.aux_prec + 2
        for k in range(1, maxiter + 1):
            term = (term * u).truncate_aux(self.aux_prec)
            out = out + term.scalar_mul(coefs_of_k(k))
            if term.is_structurally_zero():
                return out
        raise NotNilpotent("%s did not converge within the combined filtration" % what)

    def exp(self):
        fact = [Rat(1)]

        def coef(k):
            while len(fact) <= k:
                fact.append(fact[-1] / len(fact))
            return self.ctx.rat(fact[k])

        return self._iterate(coef, needs_unit_one=False, what="exp")

    def log(self):
        def coef(k):
            if k == 0:
                return self.ctx.zero()
            return self.ctx.rat(Rat(1 if k % 2 else -1, k))

        return self._iterate(coef, needs_unit_one=True, what="log")

    def sqrt(self):
        binom = [Rat(1)]

        def coef(k):
            while len(binom) <= k:
                j = len(binom)
                binom.append(binom[-1] * (Rat(1, 2) - (j - 1)) / j)
            return self.ctx.rat(binom[k])

        return self._iterate(coef, needs_unit_one=True, what="sqrt")

    # -- evaluation --------------------------------------------------------

    def substitute(self, arg):
        """Replace the auxiliary variable by an epsilon-series of order >= 1.

        The tail bound assumes the coefficients beyond aux_prec have
        nonnegative epsilon-order, which holds for every construction in
        this kernel (exponentials and logarithms of order >= 0 data).
        """
        if self.c and min(self.c) < 0:
            raise ValueError("substitution into a series with variable poles")
        if arg.c and min(arg.c) < 1:
            raise NotNilpotent("substitution argument must have epsilon-order >= 1")
        vlow = max(arg.val_lower(), 1)
        out = self.ctx.zero()
        pw = self.ctx.one()
        for k in range(self.aux_prec):
            ck = self.c.get(k)
            if ck is not None:
                out = out + ck * pw
            pw = pw * arg
        return out.with_prec(min(out.prec, self.aux_prec * vlow))

    def eval_at_rat(self, r, per_power_val):
        """Evaluate at a scalar point, certified by an epsilon-valuation slope.

        Valid only when the caller knows coeff(var^k) has epsilon-order at
        least per_power_val * k; the tail beyond aux_prec is then controlled.
        """
        if self.c and min(self.c) < 0:
            raise ValueError("evaluation of a series with variable poles")
        field = self.ctx.field
        scal = field.from_rat(r) if not isinstance(r, CycloNumber) else r
        out = self.ctx.zero()
        pw = field.one()
        for k in range(self.aux_prec):
            ck = self.c.get(k)
            if ck is not None:
                out = out + ck * pw
            pw = pw * scal
        return out.with_prec(min(out.prec, self.aux_prec * per_power_val))

    # -- comparison and display ---------------------------------------------

    def eq_upto(self, other, aux_order=None, eps_order=None):
        diff = self - other
        return diff.is_zero_upto(aux_order, eps_order)

    def is_zero_upto(self, aux_order=None, eps_order=None):
        if aux_order is None:
            aux_order = self.aux_prec - 1
        if aux_order >= self.aux_prec:
            raise ValueError("auxiliary order %d beyond certified %d" % (aux_order, self.aux_prec))
        for k in range(aux_order + 1):
            if not self.get(k).is_zero_upto(eps_order):
                return False
        return True

    def render(self):
        parts = ["%s:[%s]" % (k, self.c[k].render()) for k in sorted(self.c)]
        parts.append("Ovar@%d" % self.aux_prec)
        return " ".join(parts)

    def __repr__(self):
        return "Aux<%s>{%s}" % (self.var, self.render())
