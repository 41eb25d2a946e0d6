"""Values with deferred square roots.

A FactoredValue is unit * prod_a sqrt(atom_a)^(n_a) with the unit an
ordinary truncated series and each atom an invertible truncated series
whose square root need not exist in the coefficient field.  Products
and inverses stay in this form; equality is decided by comparing
squares exactly and fixing the overall sign through the complex
embedding (principal square root per atom).
"""

import cmath

from ._rat import Rat
from .errors import NonUnit, TorfockError
from .series import TruncSeries

_SIGN_TOL = 1e-6


class FactoredValue:
    __slots__ = ("ctx", "unit", "radicals")

    def __init__(self, ctx, unit, radicals=None):
        self.ctx = ctx
        self.unit = unit
        self.radicals = radicals or {}

    @classmethod
    def from_series(cls, ts):
        return cls(ts.ctx, ts)

    @classmethod
    def one(cls, ctx):
        return cls(ctx, ctx.one())

    @classmethod
    def from_sqrt_factor(cls, ts, count=1):
        """sqrt(ts)^count; ts must be certified nonzero."""
        if ts.val() is None:
            raise NonUnit("square-root atom is zero to certified precision")
        out = cls(ts.ctx, ts.ctx.one(), {ts.freeze(): (ts, count)})
        return out._reduced()

    def _reduced(self):
        unit = self.unit
        rad = {}
        for key, (atom, n) in self.radicals.items():
            if n == 0:
                continue
            if n % 2 == 0:
                unit = unit * atom.pow_int(n // 2)
            else:
                keep = 1 if n > 0 else -1
                if n - keep:
                    unit = unit * atom.pow_int((n - keep) // 2)
                rad[key] = (atom, keep)
        return FactoredValue(self.ctx, unit, rad)

    # -- algebra ---------------------------------------------------------

    def __mul__(self, other):
        if not isinstance(other, FactoredValue):
            return FactoredValue(self.ctx, self.unit * other, self.radicals)
        rad = dict(self.radicals)
        for key, (atom, n) in other.radicals.items():
            if key in rad:
                rad[key] = (atom, rad[key][1] + n)
            else:
                rad[key] = (atom, n)
        return FactoredValue(self.ctx, self.unit * other.unit, rad)._reduced()

    __rmul__ = __mul__

    def inv(self):
        rad = {key: (atom, -n) for key, (atom, n) in self.radicals.items()}
        return FactoredValue(self.ctx, self.unit.inv(), rad)

    def scalar_mul(self, s):
        return FactoredValue(self.ctx, self.unit.scalar_mul(s), self.radicals)

    def __neg__(self):
        return self.scalar_mul(-1)

    def square(self):
        out = self.unit * self.unit
        for atom, n in self.radicals.values():
            out = out * atom.pow_int(n)
        return out

    # -- structure ---------------------------------------------------------

    def is_zero(self, order=None):
        return self.unit.is_zero_upto(order)

    def signature(self):
        """Hashable radical part, for linear comparisons over a common part."""
        return tuple(sorted((key, n) for key, (atom, n) in self.radicals.items()))

    def total_order(self):
        """Exact epsilon-order as a rational, or None when the unit vanishes."""
        v = self.unit.val()
        if v is None:
            return None
        tot = Rat(v)
        for atom, n in self.radicals.values():
            tot += Rat(n * atom.val(), 2)
        return tot

    def leading_complex(self):
        v = self.unit.val()
        if v is None:
            return 0j
        z = self.unit.c[v].to_complex()
        for atom, n in self.radicals.values():
            a = atom.c[atom.val()].to_complex()
            z *= cmath.sqrt(a) ** n
        return z

    def render(self):
        parts = ["unit=%s" % self.unit.render()]
        for key in sorted(self.radicals):
            atom, n = self.radicals[key]
            parts.append("sqrt[%s]^%d" % (atom.render(), n))
        return " * ".join(parts)

    def __repr__(self):
        return "FV(%s)" % self.render()


def fv_eq(a, b, order=None):
    """Equality of factored values: equal squares plus a consistent sign.

    Squares are compared as plain series to the given order; the sign is
    fixed through the complex embedding with principal square roots per
    atom.  An embedding ratio away from +/-1 means the exact comparison
    and the numeric one disagree, which indicates a kernel bug, so it
    raises instead of answering.
    """
    if order is None:
        order = a.ctx.D
    az = a.unit.is_zero_upto(order)
    bz = b.unit.is_zero_upto(order)
    if az or bz:
        return az and bz
    if a.total_order() != b.total_order():
        return False
    if not a.square().eq_upto(b.square(), order=order):
        return False
    ratio = a.leading_complex() / b.leading_complex()
    if abs(ratio - 1) < _SIGN_TOL:
        return True
    if abs(ratio + 1) < _SIGN_TOL:
        return False
    raise TorfockError(
        "factored comparison is numerically inconsistent (ratio %r)" % (ratio,)
    )


def fv_linear_eq(pairs_lhs, pairs_rhs, order=None):
    """Compare sums of factored values that share one radical signature.

    pairs_* are lists of (coefficient, FactoredValue) with coefficient a
    series, cyclotomic number or rational.  All terms on both sides must
    carry the same radical signature; the comparison then reduces to the
    units.  Zero-unit terms are ignored.
    """
    sig = None
    ctx = None
    sides = []
    for pairs in (pairs_lhs, pairs_rhs):
        acc = None
        for coeff, fv in pairs:
            ctx = fv.ctx
            if fv.unit.val() is None:
                continue
            if sig is None:
                sig = fv.signature()
            elif fv.signature() != sig:
                raise TorfockError("mixed radical signatures in a linear comparison")
            term = fv.unit * coeff if isinstance(coeff, TruncSeries) else fv.unit.scalar_mul(coeff)
            acc = term if acc is None else acc + term
        sides.append(acc)
    lhs, rhs = sides
    if lhs is None and rhs is None:
        return True
    if ctx is None:
        return True
    if lhs is None:
        return rhs.is_zero_upto(order if order is not None else ctx.D)
    if rhs is None:
        return lhs.is_zero_upto(order if order is not None else ctx.D)
    return lhs.eq_upto(rhs, order=order if order is not None else ctx.D)
