"""Cyclotomic number fields Q(zeta_L) with exact arithmetic.

Numbers are represented on the power basis 1, zeta, ..., zeta^(phi(L)-1)
modulo the L-th cyclotomic polynomial, with rational coordinates.  The
field object precomputes the reduction of every power zeta^k that can
appear in a product, so multiplication is one convolution plus a few
row additions.
"""

from ._rat import R0, R1, Rat, rat_str
from .errors import DivisionByZero


def _poly_mul(a, b):
    out = [R0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] += ai * bj
    return out


def _poly_divmod(num, den):
    """Exact division of polynomial coefficient lists (lowest degree first)."""
    num = list(num)
    dd = len(den) - 1
    lead = den[-1]
    quot = [R0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k] / lead
        if c:
            quot[k - dd] = c
            for j in range(dd + 1):
                num[k - dd + j] -= c * den[j]
    while num and not num[-1]:
        num.pop()
    return quot, num


def _divisors(n):
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


_CYCLO_CACHE = {}


def cyclotomic_poly(L):
    """Coefficient list (lowest degree first) of the L-th cyclotomic polynomial."""
    if L in _CYCLO_CACHE:
        return _CYCLO_CACHE[L]
    # x^L - 1 divided by the product of all lower cyclotomic polynomials.
    num = [R0] * (L + 1)
    num[0] = -R1
    num[L] = R1
    den = [R1]
    for d in _divisors(L):
        if d < L:
            den = _poly_mul(den, cyclotomic_poly(d))
    quot, rem = _poly_divmod(num, den)
    if rem:
        raise ArithmeticError("cyclotomic division left a remainder at L=%d" % L)
    _CYCLO_CACHE[L] = quot
    return quot


class CycloField:
    """The field Q(zeta_L), zeta_L a primitive L-th root of unity."""

    __slots__ = ("L", "degree", "modulus", "_rows", "_zeta_cache", "_one", "_zero")

    def __init__(self, L):
        if L < 1:
            raise ValueError("root-of-unity order must be positive")
        self.L = L
        mod = cyclotomic_poly(L)
        self.degree = len(mod) - 1
        self.modulus = tuple(mod)
        deg = self.degree
        # Reduction rows: x^k mod Phi_L for deg <= k <= max(2 deg - 2, L - 1).
        top = max(2 * deg - 2, L - 1)
        rows = {}
        if deg > 0:
            base = [-c for c in mod[:deg]]
            rows[deg] = base
            prev = base
            for k in range(deg + 1, top + 1):
                nxt = [R0] + prev[: deg - 1]
                hi = prev[deg - 1]
                if hi:
                    for i in range(deg):
                        nxt[i] += hi * rows[deg][i]
                rows[k] = nxt
                prev = nxt
        self._rows = {k: tuple(v) for k, v in rows.items()}
        self._zeta_cache = {}
        self._zero = CycloNumber(self, (R0,) * deg)
        self._one = CycloNumber(self, (R1,) + (R0,) * (deg - 1))

    def zero(self):
        return self._zero

    def one(self):
        return self._one

    def from_rat(self, x):
        x = Rat(x)
        return CycloNumber(self, (x,) + (R0,) * (self.degree - 1))

    def zeta(self, k=1):
        """zeta_L^k as a field element."""
        k %= self.L
        hit = self._zeta_cache.get(k)
        if hit is not None:
            return hit
        deg = self.degree
        if k < deg:
            coeffs = [R0] * deg
            coeffs[k] = R1
            val = CycloNumber(self, tuple(coeffs))
        else:
            val = CycloNumber(self, self._rows[k])
        self._zeta_cache[k] = val
        return val

    def reduce(self, raw):
        """Reduce a raw coefficient list (len <= 2 deg - 1) to the power basis."""
        deg = self.degree
        out = list(raw[:deg]) + [R0] * (deg - min(deg, len(raw)))
        for k in range(deg, len(raw)):
            c = raw[k]
            if c:
                row = self._rows[k]
                for i in range(deg):
                    if row[i]:
                        out[i] += c * row[i]
        return CycloNumber(self, tuple(out))

    def __repr__(self):
        return "CycloField(%d)" % self.L

    def __eq__(self, other):
        return isinstance(other, CycloField) and other.L == self.L

    def __hash__(self):
        return hash(("CycloField", self.L))


_FIELD_CACHE = {}


def get_field(L):
    field = _FIELD_CACHE.get(L)
    if field is None:
        field = CycloField(L)
        _FIELD_CACHE[L] = field
    return field


class CycloNumber:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs

    def is_zero(self):
        return not any(self.coeffs)

    def is_rational(self):
        return not any(self.coeffs[1:])

    def rational_part(self):
        return self.coeffs[0]

    def __add__(self, other):
        if not isinstance(other, (CycloNumber, int, type(R0))):
            return NotImplemented
        other = self._coerce(other)
        return CycloNumber(self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, (CycloNumber, int, type(R0))):
            return NotImplemented
        other = self._coerce(other)
        return CycloNumber(self.field, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return CycloNumber(self.field, tuple(-a for a in self.coeffs))

    def _coerce(self, other):
        if isinstance(other, CycloNumber):
            if other.field.L != self.field.L:
                raise ValueError("mixed cyclotomic fields: L=%d vs L=%d" % (self.field.L, other.field.L))
            return other
        return self.field.from_rat(other)

    def __mul__(self, other):
        if not isinstance(other, CycloNumber):
            if not isinstance(other, (int, type(R0))):
                return NotImplemented
            x = Rat(other)
            return CycloNumber(self.field, tuple(a * x for a in self.coeffs))
        if other.field.L != self.field.L:
            raise ValueError("mixed cyclotomic fields: L=%d vs L=%d" % (self.field.L, other.field.L))
        raw = _poly_mul(list(self.coeffs), list(other.coeffs))
        return self.field.reduce(raw)

    def __rmul__(self, other):
        x = Rat(other)
        return CycloNumber(self.field, tuple(a * x for a in self.coeffs))

    def inv(self):
        """Multiplicative inverse via extended Euclid in Q[x] mod Phi_L."""
        if self.is_zero():
            raise DivisionByZero("inverse of zero in Q(zeta_%d)" % self.field.L)
        if self.is_rational():
            return self.field.from_rat(R1 / self.coeffs[0])
        # r0 = modulus, r1 = self; maintain t-coefficients with t0=0, t1=1.
        r0 = list(self.field.modulus)
        r1 = list(self.coeffs)
        while r1 and not r1[-1]:
            r1.pop()
        t0, t1 = [R0], [R1]
        while True:
            if len(r1) == 1:
                c = R1 / r1[0]
                inv_raw = [x * c for x in t1]
                return self.field.reduce(inv_raw)
            quot, rem = _poly_divmod(r0, r1)
            t2 = list(t0)
            qt = _poly_mul(quot, t1)
            if len(t2) < len(qt):
                t2 += [R0] * (len(qt) - len(t2))
            for i, q in enumerate(qt):
                t2[i] -= q
            while t2 and not t2[-1]:
                t2.pop()
            r0, r1 = r1, rem
            t0, t1 = t1, t2 if t2 else [R0]
            if not r1:
                raise ArithmeticError("element not invertible mod cyclotomic polynomial")

    def __truediv__(self, other):
        other = self._coerce(other)
        return self * other.inv()

    def __pow__(self, k):
        if k < 0:
            return self.inv() ** (-k)
        out = self.field.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, CycloNumber):
            return self.field.L == other.field.L and self.coeffs == other.coeffs
        if isinstance(other, (int, type(R0))):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        return hash((self.field.L, self.coeffs))

    def to_complex(self):
        import cmath

        z = cmath.exp(2j * cmath.pi / self.field.L)
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + complex(c.numerator) / complex(c.denominator)
        return acc

    def render(self):
        """Deterministic text form: monomials c*z^k joined by '+'."""
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(rat_str(c))
            else:
                parts.append("%sz%d" % (rat_str(c) + "*" if c != R1 else "", k))
        if not parts:
            return "0"
        return "+".join(parts).replace("+-", "-")

    def __repr__(self):
        return "Cyclo[L=%d](%s)" % (self.field.L, self.render())
