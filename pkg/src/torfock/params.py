"""Parameter packs: specialization series and rank tables.

AlgebraParams holds everything that depends only on the algebra (rank,
twist, multiplicative or additive parameters, Cartan-type tables and
the structure polynomials of the quadratic relations).  FockParams adds
the module data: component charges and evaluation parameters, plus the
box coordinates built from them.
"""

from ._rat import Rat
from .errors import ConfigError
from .series import qnum


class AlgebraParams:
    __slots__ = (
        "kind", "rank", "ctx", "omega_exp",
        "q", "qinv", "q1", "q2", "q3", "d", "kappa",
        "h1", "h2", "h3", "h", "beta",
    )

    def __init__(self, ctx, kind, rank, omega_exp=0):
        if kind not in ("toroidal", "yangian"):
            raise ConfigError("unknown algebra kind %r" % (kind,))
        if rank < 1:
            raise ConfigError("rank must be at least 1")
        self.kind = kind
        self.rank = rank
        self.ctx = ctx
        self.omega_exp = omega_exp % ctx.field.L
        n = rank
        if kind == "toroidal":
            field = ctx.field
            self.q = ctx.exp_rat_eps(ctx.c2 / (2 * n))
            self.qinv = self.q.inv()
            self.q1 = ctx.exp_rat_eps(ctx.c1 / n).scalar_mul(field.zeta(omega_exp))
            self.q2 = ctx.exp_rat_eps(ctx.c2 / n)
            self.q3 = ctx.exp_rat_eps(ctx.c3 / n).scalar_mul(field.zeta(-omega_exp))
            self.d = self.q1 * self.q
            self.kappa = self.q - self.qinv
            self.h1 = self.h2 = self.h3 = self.h = self.beta = None
        else:
            if omega_exp % ctx.field.L:
                raise ConfigError("affine Yangians carry no twist")
            self.h1 = ctx.monomial(ctx.c1 / n, 1)
            self.h2 = ctx.monomial(ctx.c2 / n, 1)
            self.h3 = ctx.monomial(ctx.c3 / n, 1)
            self.h = ctx.monomial(ctx.c2 / (2 * n), 1)
            self.beta = ctx.monomial((ctx.c1 - ctx.c3) / (2 * n), 1)
            self.q = self.qinv = self.q1 = self.q2 = self.q3 = None
            self.d = self.kappa = None

    # -- index tables -----------------------------------------------------

    def _mod(self, i):
        return i % self.rank

    def a(self, i, j):
        n = self.rank
        i, j = self._mod(i), self._mod(j)
        if n == 1:
            return 0
        if n == 2:
            return 2 if i == j else -2
        if i == j:
            return 2
        if j == self._mod(i + 1) or j == self._mod(i - 1):
            return -1
        return 0

    def m(self, i, j):
        n = self.rank
        if n <= 2:
            return 0
        i, j = self._mod(i), self._mod(j)
        if j == self._mod(i - 1):
            return 1
        if j == self._mod(i + 1):
            return -1
        return 0

    def d_factor(self, i, j):
        """The scalar twisting the symmetric form of the quadratic relation."""
        ctx = self.ctx
        n = self.rank
        if n == 1:
            return ctx.one()
        if n == 2:
            return ctx.one() if self._mod(i) == self._mod(j) else ctx.rat(-1)
        i, j = self._mod(i), self._mod(j)
        if j == self._mod(i + 1):
            return self.d.inv()
        if j == self._mod(i - 1):
            return self.d
        return ctx.one()

    # -- structure polynomials ---------------------------------------------

    def g_poly(self, i, j):
        """Coefficients of the quadratic structure polynomial in z, w."""
        ctx = self.ctx
        n = self.rank
        if n == 1:
            e1 = self.q1 + self.q2 + self.q3
            e2 = self.q1 * self.q2 + self.q1 * self.q3 + self.q2 * self.q3
            return {(3, 0): ctx.one(), (2, 1): -e1, (1, 2): e2, (0, 3): ctx.rat(-1)}
        if n == 2:
            if self._mod(i) == self._mod(j):
                return {(1, 0): ctx.one(), (0, 1): -self.q2}
            return {
                (2, 0): ctx.one(),
                (1, 1): -(self.q1 + self.q3),
                (0, 2): self.q1 * self.q3,
            }
        coef = self.q.pow_int(self.a(i, j)) * self.d.pow_int(-self.m(i, j))
        return {(1, 0): ctx.one(), (0, 1): -coef}

    def p_poly(self, i, j):
        """Additive analog of g_poly for the Yangian quadratic relation."""
        ctx = self.ctx
        n = self.rank
        if n == 1:
            e2 = self.h1 * self.h2 + self.h1 * self.h3 + self.h2 * self.h3
            e3 = self.h1 * self.h2 * self.h3
            return {
                (3, 0): ctx.one(), (2, 1): ctx.rat(-3), (1, 2): ctx.rat(3),
                (0, 3): ctx.rat(-1), (1, 0): e2, (0, 1): -e2, (0, 0): -e3,
            }
        if n == 2:
            if self._mod(i) == self._mod(j):
                return {(1, 0): ctx.one(), (0, 1): ctx.rat(-1), (0, 0): -self.h2}
            sign = -1 if self._mod(j) == 1 else 1
            out = {
                (2, 0): ctx.one(), (1, 1): ctx.rat(-2), (0, 2): ctx.one(),
                (1, 0): self.h2, (0, 1): -self.h2, (0, 0): self.h1 * self.h3,
            }
            if sign < 0:
                out = {k: -v for k, v in out.items()}
            return out
        shift = self.beta.scalar_mul(self.m(i, j)) - self.h.scalar_mul(self.a(i, j))
        return {(1, 0): ctx.one(), (0, 1): ctx.rat(-1), (0, 0): shift}

    def b_coeff(self, i, j, k):
        """Structure constant of the Cartan-on-raising commutation at mode k."""
        ctx = self.ctx
        if k == 0:
            return ctx.rat(self.a(i, j))
        n = self.rank
        scale = Rat(1, k)
        if n == 1:
            bracket = (
                self.q.pow_int(k) + self.q.pow_int(-k)
                - self.d.pow_int(k) - self.d.pow_int(-k)
            )
            return qnum(self.q, k).scalar_mul(scale) * bracket
        if n == 2:
            if self._mod(i) == self._mod(j):
                return qnum(self.q, 2 * k).scalar_mul(scale)
            return -(qnum(self.q, k).scalar_mul(scale) * (self.d.pow_int(k) + self.d.pow_int(-k)))
        a = self.a(i, j)
        if a == 0:
            return ctx.zero()
        return qnum(self.q, k * a).scalar_mul(scale) * self.d.pow_int(-k * self.m(i, j))


class FockParams:
    """Charges and evaluation parameters of one tensor Fock module."""

    __slots__ = ("alg", "r", "charges", "values", "_coord_cache")

    def __init__(self, alg, charges, values):
        if len(charges) != len(values):
            raise ConfigError("charge and parameter counts differ")
        self.alg = alg
        self.r = len(charges)
        self.charges = tuple(int(p) for p in charges)
        self.values = tuple(values)
        self._coord_cache = {}

    def color(self, a, s, lam_s):
        """Unreduced color integer of the slot (component a, row s, length lam_s)."""
        return self.charges[a] + s - lam_s

    def color_mod(self, a, s, lam_s):
        return self.color(a, s, lam_s) % self.alg.rank

    def coord(self, a, s, lam_s):
        """Box coordinate of row s at current length lam_s, component a.

        Multiplicative for the toroidal algebra, additive for the Yangian.
        """
        key = (a, s, lam_s)
        hit = self._coord_cache.get(key)
        if hit is not None:
            return hit
        alg = self.alg
        if alg.kind == "toroidal":
            out = alg.q1.pow_int(lam_s) * alg.q3.pow_int(s - 1) * self.values[a]
        else:
            out = (
                alg.h1.scalar_mul(lam_s)
                + alg.h3.scalar_mul(s - 1)
                + self.values[a]
            )
        self._coord_cache[key] = out
        return out
