"""Truncated epsilon-Laurent series over a cyclotomic number field.

Every series carries its own certified precision: the coefficient of
eps^k is trusted exactly for k < prec and unknown beyond.  Arithmetic
propagates precision pessimistically, and eq_upto refuses to answer a
comparison past the certified range (PrecisionError) instead of
guessing.  Exponents are plain integers; the global context caps them
at cap = D + guard, so a series is a small dict.
"""

from ._rat import R0, R1, Rat, rat_str
from .cyclo import CycloNumber, get_field
from .errors import (
    BadLeadingTerm,
    InexactDivision,
    NonUnit,
    PrecisionError,
)

_INF = 10 ** 9


class SeriesContext:
    """Shared truncation and specialization data for one verification run.

    c1, c2 are the rational specialization slopes: hbar_1 = c1*eps,
    hbar_2 = c2*eps, hbar_3 = -(c1+c2)*eps.
    """

    __slots__ = ("field", "D", "guard", "cap", "c1", "c2", "c3", "_zero", "_one")

    def __init__(self, field_or_L, D, c1, c2, guard=6):
        self.field = field_or_L if not isinstance(field_or_L, int) else get_field(field_or_L)
        self.D = D
        self.guard = guard
        self.cap = D + guard
        self.c1 = Rat(c1)
        self.c2 = Rat(c2)
        self.c3 = -(self.c1 + self.c2)
        self._zero = TruncSeries(self, {}, self.cap + 1)
        self._one = TruncSeries(self, {0: self.field.one()}, self.cap + 1)

    def zero(self):
        return self._zero

    def one(self):
        return self._one

    def rat(self, x):
        x = Rat(x)
        if not x:
            return self._zero
        return TruncSeries(self, {0: self.field.from_rat(x)}, self.cap + 1)

    def cyc(self, c):
        if c.field.L != self.field.L:
            raise ValueError("coefficient from the wrong field")
        if c.is_zero():
            return self._zero
        return TruncSeries(self, {0: c}, self.cap + 1)

    def zeta(self, k=1):
        return self.cyc(self.field.zeta(k))

    def eps(self, k=1):
        return TruncSeries(self, {k: self.field.one()}, self.cap + 1)

    def monomial(self, coeff, k):
        if isinstance(coeff, (int, type(R0))):
            coeff = self.field.from_rat(coeff)
        if coeff.is_zero():
            return self._zero
        return TruncSeries(self, {k: coeff}, self.cap + 1)

    def hbar(self, i):
        slope = {1: self.c1, 2: self.c2, 3: self.c3}[i]
        return self.monomial(slope, 1)

    def exp_rat_eps(self, r):
        """exp(r*eps) for rational r, built termwise (exact to the cap)."""
        r = Rat(r)
        c = {}
        term = R1
        for k in range(self.cap + 1):
            if term:
                c[k] = self.field.from_rat(term)
            term = term * r / (k + 1)
        return TruncSeries(self, c, self.cap + 1)

    def sinh_ratio(self, r):
        """sinh(r*eps)/(r*eps) for rational r: sum r^(2k) eps^(2k)/(2k+1)!."""
        r = Rat(r)
        c = {}
        term = R1
        k = 0
        while 2 * k <= self.cap:
            if term:
                c[2 * k] = self.field.from_rat(term)
            term = term * r * r / ((2 * k + 2) * (2 * k + 3))
            k += 1
        return TruncSeries(self, c, self.cap + 1)

    def __repr__(self):
        return "SeriesContext(L=%d, D=%d, guard=%d, c1=%s, c2=%s)" % (
            self.field.L,
            self.D,
            self.guard,
            rat_str(self.c1),
            rat_str(self.c2),
        )


class TruncSeries:
    __slots__ = ("ctx", "c", "prec")

    def __init__(self, ctx, coeffs, prec, _normalized=False):
        self.ctx = ctx
        if prec > ctx.cap + 1:
            prec = ctx.cap + 1
        if _normalized:
            self.c = coeffs
        else:
            self.c = {k: v for k, v in coeffs.items() if k < prec and not v.is_zero()}
        self.prec = prec

    # -- inspection ----------------------------------------------------

    def val_lower(self):
        """A lower bound on the epsilon-order: exact if nonzero, prec if zero."""
        return min(self.c) if self.c else self.prec

    def val(self):
        """Exact valuation; None when the series is zero to certified precision."""
        return min(self.c) if self.c else None

    def is_zero_upto(self, order=None):
        if order is None:
            order = self.ctx.D
        if self.prec <= order:
            raise PrecisionError(
                "zero test to order %d but certified only below %d" % (order, self.prec)
            )
        return all(k > order for k in self.c)

    def coeff(self, k):
        if k >= self.prec:
            raise PrecisionError("coefficient of eps^%d beyond certified prec %d" % (k, self.prec))
        return self.c.get(k, self.ctx.field.zero())

    def get(self, k):
        return self.c.get(k, self.ctx.field.zero())

    def freeze(self):
        """Hashable exact snapshot (used as a radical-atom key)."""
        return (tuple(sorted((k, v.coeffs) for k, v in self.c.items())), self.prec)

    # -- ring operations -----------------------------------------------

    def _coerce(self, other):
        if isinstance(other, TruncSeries):
            return other
        if isinstance(other, CycloNumber):
            return self.ctx.cyc(other)
        return self.ctx.rat(other)

    def __add__(self, other):
        other = self._coerce(other)
        prec = min(self.prec, other.prec)
        c = dict(self.c)
        for k, v in other.c.items():
            cur = c.get(k)
            c[k] = v if cur is None else cur + v
        return TruncSeries(self.ctx, c, prec)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(self.ctx, {k: -v for k, v in self.c.items()}, self.prec, _normalized=True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, type(R0), CycloNumber)):
            return self.scalar_mul(other)
        v1 = min(self.c) if self.c else _INF
        v2 = min(other.c) if other.c else _INF
        prec = min(v1 + other.prec, v2 + self.prec, self.prec + other.prec, self.ctx.cap + 1)
        cap = self.ctx.cap
        out = {}
        for k1, a in self.c.items():
            for k2, b in other.c.items():
                k = k1 + k2
                if k >= prec or k > cap:
                    continue
                p = a * b
                cur = out.get(k)
                out[k] = p if cur is None else cur + p
        return TruncSeries(self.ctx, out, prec)

    def __rmul__(self, other):
        return self.scalar_mul(other)

    def scalar_mul(self, s):
        if isinstance(s, (int, type(R0))):
            if not s:
                return TruncSeries(self.ctx, {}, self.prec, _normalized=True)
            s = Rat(s)
            return TruncSeries(
                self.ctx, {k: v * s for k, v in self.c.items()}, self.prec, _normalized=True
            )
        if s.is_zero():
            return TruncSeries(self.ctx, {}, self.prec, _normalized=True)
        return TruncSeries(self.ctx, {k: v * s for k, v in self.c.items()}, self.prec)

    def shift(self, k):
        """Multiply by eps^k."""
        return TruncSeries(self.ctx, {e + k: v for e, v in self.c.items()}, self.prec + k)

    def with_prec(self, p):
        return TruncSeries(self.ctx, self.c, min(self.prec, p))

    def inv(self):
        if not self.c:
            raise NonUnit("inverting a series that is zero to certified precision")
        v = min(self.c)
        a = self.c[v]
        ainv = a.inv()
        rel_prec = self.prec - v  # certified relative orders of the shifted unit
        jmax = min(rel_prec, self.ctx.cap + v + 1)
        w = {e - v: c for e, c in self.c.items()}
        x = {0: ainv}
        for n in range(1, jmax):
            acc = None
            for k, wk in w.items():
                if 0 < k <= n:
                    xb = x.get(n - k)
                    if xb is not None:
                        t = wk * xb
                        acc = t if acc is None else acc + t
            if acc is not None:
                x[n] = -(ainv * acc)
        out = {e - v: c for e, c in x.items() if not c.is_zero()}
        return TruncSeries(self.ctx, out, self.prec - 2 * v)

    def __truediv__(self, other):
        return self * self._coerce(other).inv()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inv()

    def div_exact_eps(self, k):
        """Divide by eps^k, requiring every certified coefficient below k to vanish."""
        bad = [e for e in self.c if e < k]
        if bad:
            raise InexactDivision(
                "division by eps^%d hits nonzero coefficient at eps^%d" % (k, min(bad))
            )
        return TruncSeries(self.ctx, {e - k: v for e, v in self.c.items()}, self.prec - k)

    def pow_int(self, k):
        if k < 0:
            return self.inv().pow_int(-k)
        out = self.ctx.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- analytic maps on the maximal ideal ------------------------------

    def exp(self):
        if self.c and min(self.c) < 1:
            raise BadLeadingTerm("exp needs a series of positive epsilon-order")
        out = self.ctx.one().with_prec(self.prec) if not self.c else None
        if out is not None:
            return out
        out = self.ctx.one()
        term = self.ctx.one()
        k = 1
        while True:
            term = term * self
            if not term.c:
                break
            term = term.scalar_mul(Rat(1, k))
            out = out + term
            k += 1
        return out.with_prec(self.prec)

    def _unit_part(self, what):
        if self.get(0) != self.ctx.field.one() or (self.c and min(self.c) < 0):
            raise BadLeadingTerm("%s needs leading coefficient exactly 1" % what)
        return self - 1

    def log(self):
        u = self._unit_part("log")
        out = self.ctx.zero().with_prec(self.prec)
        term = self.ctx.one()
        k = 1
        while True:
            term = term * u
            if not term.c:
                break
            piece = term.scalar_mul(Rat(1 if k % 2 else -1, k))
            out = out + piece
            k += 1
        return out.with_prec(self.prec)

    def sqrt(self):
        u = self._unit_part("sqrt")
        out = self.ctx.one()
        term = self.ctx.one()
        coef = R1
        k = 1
        while True:
            term = term * u
            if not term.c:
                break
            coef = coef * (Rat(1, 2) - (k - 1)) / k
            out = out + term.scalar_mul(coef)
            k += 1
        return out.with_prec(self.prec)

    # -- comparison and display ------------------------------------------

    def eq_upto(self, other, order=None):
        if order is None:
            order = self.ctx.D
        other = self._coerce(other)
        return (self - other).is_zero_upto(order)

    def render(self):
        parts = []
        for k in sorted(self.c):
            cr = self.c[k].render()
            if ("+" in cr[1:]) or ("-" in cr[1:]):
                cr = "(%s)" % cr
            parts.append("%s@%d" % (cr, k))
        parts.append("O@%d" % self.prec)
        return "+".join(parts)

    def __repr__(self):
        return "TS[%s]" % self.render()


def qnum(q, N):
    """The balanced q-integer [N]_q as a Laurent polynomial in q (never a quotient)."""
    ctx = q.ctx
    if N == 0:
        return ctx.zero()
    sign = 1
    if N < 0:
        sign, N = -1, -N
    out = ctx.zero()
    p = q.pow_int(N - 1)
    qinv2 = q.inv().pow_int(2)
    for _ in range(N):
        out = out + p
        p = p * qinv2
    return out if sign > 0 else -out
