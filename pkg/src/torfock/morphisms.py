"""Embeddings of the rank-m multiplicative algebra into completed
higher-rank worlds, realized through their actions on Fock states.

Two embeddings are implemented.  The exponential embedding lands in the
rank-(m*n) additive world: Cartan modes become evaluated Borel
transforms of the additive Cartan eigenvalues, and each raising or
lowering mode becomes a single matrix entry per box move, dressed by
the exponential of a correction series built from the logarithm of a
fixed hyperbolic kernel.  The rescaling embedding lands in the
rank-(m*n) multiplicative world: Cartan modes spread over the residue
classes with rescaled mode index, and box moves are dressed by square
roots of multiplicative diagonal current values at rotated arguments.

Images of Cartan modes are scalar eigenvalues, images of raising and
lowering modes are FactoredValue matrix entries, so the homomorphism
property can be certified entry by entry: the Cartan commutation
transport fixes the diagonal part, and (when the entries carry no
square-root factors) the full raising-lowering commutator is compared
against the image of the diagonal current difference.
"""

from math import gcd

from ._rat import Rat
from .auxseries import AuxSeries
from .errors import ConfigError, InexactDivision, NonUnit, ResonanceError
from .factored import FactoredValue
from .params import AlgebraParams
from .partitions import (state_add_box, state_addable, state_remove_box,
                         state_removable, states as enum_states)


def _root_order(L, t):
    t %= L
    if t == 0:
        return 1
    return L // gcd(L, t)


def _prod(ctx, factors):
    out = ctx.one()
    for f in factors:
        out = out * f
    return out


def _exp_mode_list(ctx, term_fn, depth):
    """Power list of exp(sum_s T_s y^s) up to y^depth, T_s = term_fn(s).

    Standard derivative recursion; only rational scalar divisions occur.
    """
    E = [ctx.one()]
    for r in range(1, depth + 1):
        tot = ctx.zero()
        for s in range(1, r + 1):
            ts = term_fn(s)
            if ts is not None:
                tot = tot + (ts * E[r - s]).scalar_mul(s)
        E.append(tot.scalar_mul(Rat(1, r)))
    return E


def _family(name, instances, failures, skipped=0):
    status = "pass" if not failures and not skipped else ("fail" if failures else "skip")
    return {"family": name, "status": status, "instances": instances,
            "failures": failures, "skipped": skipped}


def _structural_skip(name, why):
    return {"family": name, "status": "skip", "instances": 0, "failures": [],
            "skipped": 0, "structural": True, "witness": why}


class ExponentialEmbedding:
    """Realize the rank-m multiplicative generators on a rank-(m*n)
    additive Fock module.

    omega_exp selects the twist root zeta_L^omega_exp; its order must
    divide the target rank.  Entries carry square-root factors of
    additive diagonal current values exactly when the twist root is not
    primitive of order m*n.
    """

    def __init__(self, yfock, m, omega_exp=0):
        alg = yfock.alg
        if alg.kind != "yangian":
            raise ConfigError("the exponential embedding lands in an additive module")
        if m < 1 or alg.rank % m:
            raise ConfigError("source rank %d must divide target rank %d" % (m, alg.rank))
        ctx = yfock.ctx
        L = ctx.field.L
        self.fock = yfock
        self.ctx = ctx
        self.m = m
        self.mn = alg.rank
        self.n = alg.rank // m
        self.t0 = omega_exp % L
        if self.mn % _root_order(L, self.t0):
            raise ConfigError("twist root order %d does not divide the target rank %d"
                              % (_root_order(L, self.t0), self.mn))
        self.source = AlgebraParams(ctx, "toroidal", m, omega_exp=self.t0)
        self.inv_sratio = ctx.sinh_ratio(ctx.c2 / (2 * m)).inv()
        self.sqrt_pref = self.inv_sratio.sqrt()
        # Borel coefficients of w^k have epsilon-order >= k, and pick up one
        # more order from hbar_2, so indices beyond cap - 1 cannot contribute.
        self._kmax = ctx.cap - 1
        self._aux = ctx.cap + 1
        self._kernel_cache = {}
        self._bt_cache = {}
        self._dress_cache = {}
        self._entry_cache = {}
        self._diag_cache = {}
        self._rad = {ip: self._radical_indices(ip) for ip in range(self.mn)}
        self.radical_free = all(not v for v in self._rad.values())

    # -- scalar ingredients -------------------------------------------------

    def _radical_indices(self, ip):
        L = self.ctx.field.L
        out = []
        for jp in range(ip % self.m, self.mn, self.m):
            if jp != ip and (self.t0 * (jp - ip)) % L == 0:
                out.append(jp)
        return out

    def kernel_series(self, ip, jp):
        """Hyperbolic kernel attached to a pair of residues, constant term 1."""
        ctx = self.ctx
        L = ctx.field.L
        same = (self.t0 * (jp - ip)) % L == 0
        key = "same" if same else ((self.t0 * ip) % L, (self.t0 * jp) % L)
        hit = self._kernel_cache.get(key)
        if hit is not None:
            return hit[0]
        A0 = self._aux + self._kmax + 1
        half = ctx.rat(Rat(self.n, 2))
        ep = AuxSeries.exp_linear(ctx, "v", half, A0 + 1)
        em = AuxSeries.exp_linear(ctx, "v", -half, A0 + 1)
        if same:
            ker = (ep - em).shift(-1).inv().scalar_mul(Rat(self.n))
        else:
            wi = ctx.field.zeta(-self.t0 * ip)
            wj = ctx.field.zeta(-self.t0 * jp)
            den = ep.scalar_mul(wi) - em.scalar_mul(wj)
            ker = den.inv().scalar_mul(wi - wj)
        logker = ker.log()
        derivs = []
        cur = logker
        for _ in range(self._kmax + 1):
            cur = cur.derivative()
            derivs.append(cur)
        self._kernel_cache[key] = (ker, derivs)
        return ker

    def _kernel_derivs(self, ip, jp):
        self.kernel_series(ip, jp)
        same = (self.t0 * (jp - ip)) % self.ctx.field.L == 0
        key = "same" if same else ((self.t0 * ip) % self.ctx.field.L,
                                   (self.t0 * jp) % self.ctx.field.L)
        return self._kernel_cache[key][1]

    def _btilde(self, state, jp):
        key = (state, jp)
        hit = self._bt_cache.get(key)
        if hit is None:
            hit = self.fock.borel_btilde(state, jp, self._kmax + 1)
            self._bt_cache[key] = hit
        return hit

    def correction_term(self, state, ip, jp):
        """Pairing of the Borel coefficients at jp with kernel derivatives.

        Every coefficient is a multiple of hbar_2, so the sum is finite
        within the working precision and vanishes identically at c2 = 0.
        """
        ds = self._kernel_derivs(ip, jp)
        bt = self._btilde(state, jp)
        h2 = self.fock.alg.h2
        acc = AuxSeries(self.ctx, "v", {}, self._aux)
        for k in range(self._kmax + 1):
            bk = bt.get(k)
            if not bk.c:
                continue
            term = ds[k].scalar_mul(bk * h2)
            acc = acc + (term if k % 2 else -term)
        return acc

    def _dressing_exp(self, post, ip):
        """exp of half the summed correction series, at a post-move state."""
        key = (post, ip)
        hit = self._dress_cache.get(key)
        if hit is None:
            tot = AuxSeries(self.ctx, "v", {}, self._aux)
            for jp in range(ip % self.m, self.mn, self.m):
                tot = tot + self.correction_term(post, ip, jp)
            hit = tot.scalar_mul(Rat(1, 2)).exp()
            self._dress_cache[key] = hit
        return hit

    # -- images of the generators --------------------------------------------

    def cartan_image_count(self, state, i):
        tot = 0
        for ipp in range(i % self.m, self.mn, self.m):
            tot += self.fock.psi0_exponent(state, ipp)
        return tot

    def cartan_image_eig(self, state, i, l):
        """Eigenvalue of the image of the Cartan mode generator h_{i,l}."""
        ctx = self.ctx
        if l == 0:
            return ctx.rat(self.cartan_image_count(state, i))
        if ctx.c2 == 0:
            raise InexactDivision(
                "Cartan images at nonzero modes divide by q - 1/q, which vanishes at c2 = 0")
        acc = ctx.zero()
        for ipp in range(i % self.m, self.mn, self.m):
            val = self._btilde(state, ipp).eval_at_rat(Rat(l * self.n), 1)
            acc = acc + val.scalar_mul(ctx.field.zeta(-l * ipp * self.t0))
        return acc.scalar_mul(Rat(self.n * self.m)) * self.inv_sratio

    def kappa_cartan_image(self, state, i, s):
        """(q - 1/q) times the mode-s Cartan image, division-free in hbar_2."""
        ctx = self.ctx
        acc = ctx.zero()
        for ipp in range(i % self.m, self.mn, self.m):
            val = self._btilde(state, ipp).eval_at_rat(Rat(s * self.n), 1)
            acc = acc + val.scalar_mul(ctx.field.zeta(-s * ipp * self.t0))
        return acc.scalar_mul(Rat(self.n)) * ctx.hbar(2)

    def _move_entry(self, pre, box, i, k, lower):
        ctx = self.ctx
        fk = self.fock
        a, s = box
        ip = (fk.color(pre, a, s) - 1) % self.mn
        if (ip - i) % self.m:
            return None
        key = (lower, pre, box, i, k)
        if key in self._entry_cache:
            return self._entry_cache[key]
        base = (fk.lower_base if lower else fk.raise_base)(pre, box, ip)
        if base is None:
            self._entry_cache[key] = None
            return None
        post = pre if lower else state_add_box(pre, a, s)
        x = fk.coord(pre, a, s)
        word = AuxSeries.exp_linear(ctx, "v", ctx.rat(Rat(k * self.n)), self._aux)
        unit = base * (word * self._dressing_exp(post, ip)).substitute(x)
        unit = unit.scalar_mul(ctx.field.zeta(-k * ip * self.t0)) * self.sqrt_pref
        fv = FactoredValue(ctx, unit)
        for jp in self._rad[ip]:
            atom = _prod(ctx, fk.xi_value_factors(post, jp, x))
            try:
                fv = fv * FactoredValue.from_sqrt_factor(atom)
            except NonUnit:
                raise ResonanceError("square-root dressing degenerates on this state")
        self._entry_cache[key] = fv
        return fv

    def raise_image_entry(self, state, box, i, k):
        """Matrix entry of the image of e_{i,k} for the move state -> state + box.

        None when the residue of the box does not match i.  The dressing
        and the square-root factors are taken at the post-move state; the
        evaluation point is the box coordinate in the pre-move state.
        """
        return self._move_entry(state, box, i, k, lower=False)

    def lower_image_entry(self, small, box, i, k):
        """Matrix entry of the image of f_{i,k} for the move small + box -> small."""
        return self._move_entry(small, box, i, k, lower=True)

    # -- transported relations -----------------------------------------------

    def check_cartan_transport(self, state, box, i, kk, order=None):
        """Commuting an image Cartan mode past an image box move.

        The eigenvalue difference across the move must equal the source
        structure constant times the twist phase times exp(kk*n*x).
        """
        fk = self.fock
        a, s = box
        ip = (fk.color(state, a, s) - 1) % self.mn
        base = fk.raise_base(state, box, ip)
        if base is None:
            return None
        big = state_add_box(state, a, s)
        x = fk.coord(state, a, s)
        d = self.cartan_image_eig(big, i, kk) - self.cartan_image_eig(state, i, kk)
        expect = x.scalar_mul(Rat(kk * self.n)).exp()
        expect = expect.scalar_mul(self.ctx.field.zeta(-kk * ip * self.t0))
        expect = expect * self.source.b_coeff(i, ip % self.m, kk)
        return ((d - expect) * base).is_zero_upto(self.ctx.D if order is None else order)

    def _diag_lists(self, state, i, sign, depth):
        key = (state, i, sign)
        cur = self._diag_cache.get(key)
        if cur is None or len(cur) <= depth:
            if sign > 0:
                term = lambda s: self.kappa_cartan_image(state, i, s)
            else:
                term = lambda s: -self.kappa_cartan_image(state, i, -s)
            cur = _exp_mode_list(self.ctx, term, depth)
            self._diag_cache[key] = cur
        return cur

    def diag_current_image_eig(self, state, i, r):
        """Eigenvalue of (q - 1/q) [e_{i,k}, f_{i,l}] image, total mode r = k + l.

        Built from the grouped exponential of scaled Cartan images, so no
        division by q - 1/q ever happens.
        """
        q = self.source.q
        N = self.cartan_image_count(state, i)
        if r == 0:
            return q.pow_int(N) - q.pow_int(-N)
        if r > 0:
            return q.pow_int(N) * self._diag_lists(state, i, 1, r)[r]
        return -(q.pow_int(-N) * self._diag_lists(state, i, -1, -r)[-r])

    def check_commutator_transport(self, state, i, j, k, l, order=None):
        return _commutator_transport_ok(self, state, i, j, k, l, order)

    def check_normalization(self, order=None):
        """(q - 1/q) * m * inv_sratio equals hbar_2: the division-free Cartan
        image agrees with its quotient form."""
        lhs = (self.source.q - self.source.qinv).scalar_mul(Rat(self.m)) * self.inv_sratio
        return (lhs - self.ctx.hbar(2)).is_zero_upto(self.ctx.D if order is None else order)

    # -- degenerations at c2 = 0 ----------------------------------------------

    def check_classical_diag(self, state, ip, order=None):
        """At c2 = 0 the scaled Borel transform is the exponential generating
        series of the additive Cartan eigenvalues."""
        ctx = self.ctx
        A = ctx.D + 2
        lhs = self.fock.borel_btilde(state, ip, A).scalar_mul(Rat(self.mn))
        coeffs = {}
        fact = Rat(1)
        for r in range(A):
            if r:
                fact = fact / r
            coeffs[r] = self.fock.xi_mode_eig(state, ip, r).scalar_mul(fact)
        rhs = AuxSeries(ctx, "w", coeffs, A)
        return lhs.eq_upto(rhs, aux_order=A - 1,
                           eps_order=ctx.D if order is None else order)

    def check_classical_move(self, pre, box, i, k, lower=False, order=None):
        """At c2 = 0 every dressing collapses: the entry is the plain base
        entry times the twist phase times exp(k*n*x), and each square-root
        factor is exactly 1."""
        ctx = self.ctx
        order = ctx.D if order is None else order
        fv = self._move_entry(pre, box, i, k, lower)
        if fv is None:
            return None
        fk = self.fock
        a, s = box
        ip = (fk.color(pre, a, s) - 1) % self.mn
        base = (fk.lower_base if lower else fk.raise_base)(pre, box, ip)
        x = fk.coord(pre, a, s)
        expect = x.scalar_mul(Rat(k * self.n)).exp()
        expect = (base * expect).scalar_mul(ctx.field.zeta(-k * ip * self.t0))
        if not (fv.unit - expect).is_zero_upto(order):
            return False
        one = ctx.one()
        for atom, _count in fv.radicals.values():
            if not (atom - one).is_zero_upto(order):
                return False
        return True


class RescalingEmbedding:
    """Realize the rank-m multiplicative generators on a rank-(m*n)
    multiplicative Fock module by rescaling modes and coordinates.

    The source twist root is zeta_L^src_omega_exp (defaults to the n-th
    power of the target root, making the relative root trivial).  The
    relative root must have order dividing m*n, an n-th root in the
    working field, and the field must contain the n-th roots of unity.
    """

    def __init__(self, tfock, m, src_omega_exp=None):
        alg = tfock.alg
        if alg.kind != "toroidal":
            raise ConfigError("the rescaling embedding lands in a multiplicative module")
        if m < 1 or alg.rank % m:
            raise ConfigError("source rank %d must divide target rank %d" % (m, alg.rank))
        ctx = tfock.ctx
        L = ctx.field.L
        self.fock = tfock
        self.ctx = ctx
        self.m = m
        self.mn = alg.rank
        self.n = alg.rank // m
        if src_omega_exp is None:
            src_omega_exp = (self.n * alg.omega_exp) % L
        self.src_omega_exp = src_omega_exp % L
        self.t0 = (self.src_omega_exp - self.n * alg.omega_exp) % L
        if self.mn % _root_order(L, self.t0):
            raise ConfigError("relative root order %d does not divide the target rank %d"
                              % (_root_order(L, self.t0), self.mn))
        if self.n > 1:
            if self.t0 % self.n:
                raise ConfigError("relative root has no order-%d root in the working field"
                                  % self.n)
            if L % self.n:
                raise ConfigError("working cyclotomic order %d lacks the order-%d roots of unity"
                                  % (L, self.n))
        self.source = AlgebraParams(ctx, "toroidal", m, omega_exp=self.src_omega_exp)
        self.pref_sq = ctx.sinh_ratio(ctx.c2 / (2 * self.mn)) * \
            ctx.sinh_ratio(ctx.c2 / (2 * m)).inv()
        self.sqrt_pref = self.pref_sq.sqrt()
        self.radical_free = self.n == 1
        self._entry_cache = {}
        self._diag_cache = {}

    # -- images of the generators --------------------------------------------

    def cartan_image_count(self, state, i):
        tot = 0
        for ipp in range(i % self.m, self.mn, self.m):
            tot += self.fock.psi0_exponent(state, ipp)
        return tot

    def cartan_image_eig(self, state, i, l):
        ctx = self.ctx
        if l == 0:
            return ctx.rat(self.cartan_image_count(state, i))
        acc = ctx.zero()
        for ipp in range(i % self.m, self.mn, self.m):
            val = self.fock.h_mode_eig(state, ipp, l * self.n)
            acc = acc + val.scalar_mul(ctx.field.zeta(-l * ipp * self.t0))
        return acc * self.pref_sq

    def kappa_cartan_image(self, state, i, s):
        """(q_src - 1/q_src) times the mode-s Cartan image, division-free."""
        ctx = self.ctx
        acc = ctx.zero()
        for ipp in range(i % self.m, self.mn, self.m):
            val = self.fock.h_mode_eig(state, ipp, s * self.n)
            acc = acc + val.scalar_mul(ctx.field.zeta(-s * ipp * self.t0))
        return acc.scalar_mul(Rat(self.n)) * self.fock.alg.kappa

    def _rescaled_diag_value(self, post, ip, chi):
        """Square-root dressing: the product over the residue class of
        multiplicative diagonal current values at rotated arguments, the
        coincident pair cancelled exactly."""
        ctx = self.ctx
        L = ctx.field.L
        fv = FactoredValue(ctx, self.sqrt_pref)
        for jp in range(ip % self.m, self.mn, self.m):
            for c in range(self.n):
                if jp == ip and c == 0:
                    continue
                rot = ctx.field.zeta(c * (L // self.n) +
                                     (self.t0 // self.n) * (jp - ip))
                arg = chi.scalar_mul(rot)
                atom = _prod(ctx, self.fock.psi_value_factors(post, jp, arg))
                try:
                    fv = fv * FactoredValue.from_sqrt_factor(atom)
                except NonUnit:
                    raise ResonanceError("square-root dressing degenerates on this state")
        return fv

    def _move_entry(self, pre, box, i, k, lower):
        ctx = self.ctx
        fk = self.fock
        a, s = box
        ip = (fk.color(pre, a, s) - 1) % self.mn
        if (ip - i) % self.m:
            return None
        key = (lower, pre, box, i, k)
        if key in self._entry_cache:
            return self._entry_cache[key]
        base = (fk.lower_base if lower else fk.raise_base)(pre, box, ip)
        if base is None:
            self._entry_cache[key] = None
            return None
        post = pre if lower else state_add_box(pre, a, s)
        chi = fk.coord(pre, a, s)
        unit = (base * chi.pow_int(k * self.n)).scalar_mul(
            ctx.field.zeta(-k * ip * self.t0))
        fv = FactoredValue(ctx, unit) * self._rescaled_diag_value(post, ip, chi)
        self._entry_cache[key] = fv
        return fv

    def raise_image_entry(self, state, box, i, k):
        """Matrix entry of the image of e_{i,k} for the move state -> state + box."""
        return self._move_entry(state, box, i, k, lower=False)

    def lower_image_entry(self, small, box, i, k):
        """Matrix entry of the image of f_{i,k} for the move small + box -> small."""
        return self._move_entry(small, box, i, k, lower=True)

    # -- transported relations -----------------------------------------------

    def check_cartan_transport(self, state, box, i, kk, order=None):
        fk = self.fock
        a, s = box
        ip = (fk.color(state, a, s) - 1) % self.mn
        base = fk.raise_base(state, box, ip)
        if base is None:
            return None
        big = state_add_box(state, a, s)
        chi = fk.coord(state, a, s)
        d = self.cartan_image_eig(big, i, kk) - self.cartan_image_eig(state, i, kk)
        expect = chi.pow_int(kk * self.n).scalar_mul(
            self.ctx.field.zeta(-kk * ip * self.t0))
        expect = expect * self.source.b_coeff(i, ip % self.m, kk)
        return ((d - expect) * base).is_zero_upto(self.ctx.D if order is None else order)

    def _diag_lists(self, state, i, sign, depth):
        key = (state, i, sign)
        cur = self._diag_cache.get(key)
        if cur is None or len(cur) <= depth:
            if sign > 0:
                term = lambda s: self.kappa_cartan_image(state, i, s)
            else:
                term = lambda s: -self.kappa_cartan_image(state, i, -s)
            cur = _exp_mode_list(self.ctx, term, depth)
            self._diag_cache[key] = cur
        return cur

    def diag_current_image_eig(self, state, i, r):
        q = self.source.q
        N = self.cartan_image_count(state, i)
        if r == 0:
            return q.pow_int(N) - q.pow_int(-N)
        if r > 0:
            return q.pow_int(N) * self._diag_lists(state, i, 1, r)[r]
        return -(q.pow_int(-N) * self._diag_lists(state, i, -1, -r)[-r])

    def check_commutator_transport(self, state, i, j, k, l, order=None):
        return _commutator_transport_ok(self, state, i, j, k, l, order)

    def check_prefactor(self, order=None):
        """The squared prefactor is 1 + O(eps) with no constant defect."""
        diff = self.pref_sq - self.ctx.one()
        return diff.val_lower() >= 1

    def check_normalization(self, order=None):
        """(q_src - 1/q_src) times the squared prefactor equals n times the
        target commutator unit, tying the two division-free Cartan forms."""
        lhs = (self.source.q - self.source.qinv) * self.pref_sq
        rhs = self.fock.alg.kappa.scalar_mul(Rat(self.n))
        return (lhs - rhs).is_zero_upto(self.ctx.D if order is None else order)


def _commutator_transport_ok(emb, state, i, j, k, l, order=None):
    """Compare (q - 1/q) [E_{i,k}, F_{j,l}] on the diagonal with the image
    of the diagonal current difference.

    Only valid when every entry is a plain series (no square-root
    factors); returns None otherwise.  Both sides are division-free, so
    the comparison stays meaningful at c2 = 0.
    """
    if not emb.radical_free:
        return None
    ctx = emb.ctx
    acc = ctx.zero()
    for a, s in state_removable(state):
        small = state_remove_box(state, a, s)
        fe = emb.raise_image_entry(small, (a, s), i, k)
        ff = emb.lower_image_entry(small, (a, s), j, l)
        if fe is not None and ff is not None:
            acc = acc + fe.unit * ff.unit
    for a, s in state_addable(state):
        fe = emb.raise_image_entry(state, (a, s), i, k)
        ff = emb.lower_image_entry(state, (a, s), j, l)
        if fe is not None and ff is not None:
            acc = acc - fe.unit * ff.unit
    lhs = acc * emb.source.kappa
    if i == j:
        rhs = emb.diag_current_image_eig(state, i, k + l)
    else:
        rhs = ctx.zero()
    return (lhs - rhs).is_zero_upto(ctx.D if order is None else order)


# -- commutation of the Borel transform with box moves ------------------------


def borel_commutation_ok(fk, state, box, ip, s_max=3, order=None):
    """Certify the commutation rule of the Borel-transformed additive
    Cartan eigenvalue with one box move.

    The eigenvalue difference across the move equals a three-term
    multiplier (neighbour residues contribute shifted exponential
    quotients, the equal residue twice the opposite one) times
    exp(x * w), x the box coordinate in the pre-move state.  The rule is
    checked in the hbar_2-rescaled division-free form for the entries of
    every generator mode s = 0..s_max; one identity covers the raising
    and the lowering entry across the same pair of states.
    """
    ctx = fk.ctx
    mn = fk.alg.rank
    a, s = box
    jp = (fk.color(state, a, s) - 1) % mn
    big = state_add_box(state, a, s)
    A = ctx.D + 2
    lhs = fk.borel_btilde(big, ip, A) - fk.borel_btilde(state, ip, A)
    h1, h2, h3 = fk.alg.h1, fk.alg.h2, fk.alg.h3
    rhs = AuxSeries(ctx, "w", {}, A)
    fired = []
    if (jp - ip - 1) % mn == 0:
        fired.append((h3.scalar_mul(Rat(-1, mn)), h2.scalar_mul(Rat(-1, mn)), Rat(-1, mn)))
    if (jp - ip) % mn == 0:
        fired.append((h2.scalar_mul(Rat(-1, mn)), h2.scalar_mul(Rat(2, mn)), Rat(2, mn)))
    if (jp - ip + 1) % mn == 0:
        fired.append((h1.scalar_mul(Rat(-1, mn)), h2.scalar_mul(Rat(-1, mn)), Rat(-1, mn)))
    if fired:
        x = fk.coord(state, a, s)
        shift = AuxSeries.exp_linear(ctx, "w", x, A)
        for center, slope, kap in fired:
            term = AuxSeries.exp_linear(ctx, "w", center, A) * fk._gtilde(slope, A)
            rhs = rhs + term.scalar_mul(kap)
        rhs = rhs * shift
    diff = lhs - rhs
    order = ctx.D if order is None else order
    xpow = ctx.one()
    xbox = fk.coord(state, a, s)
    for _spow in range(s_max + 1):
        if not diff.scalar_mul(xpow).is_zero_upto(aux_order=A - 1, eps_order=order):
            return False
        xpow = xpow * xbox
    return True


# -- suite runners -------------------------------------------------------------


def run_borel_suite(yfk, max_boxes=4, s_max=3, order=None):
    """Borel commutation on every state, box and residue index."""
    inst, fails = 0, []
    for st in enum_states(yfk.fp.r, max_boxes):
        for box in state_addable(st):
            for ip in range(yfk.alg.rank):
                inst += s_max + 1
                if not borel_commutation_ok(yfk, st, box, ip, s_max, order):
                    fails.append(("borel", st, box, ip))
    return [_family("borel-commutation", inst, fails)]


def _guarded(strict):
    def run(fn, *args):
        try:
            return fn(*args), None
        except ResonanceError as exc:
            if strict:
                raise
            return None, str(exc)
    return run


def run_exp_embedding_suite(yfk, m, omega_exp=0, max_boxes=3, K=2, comm_K=1,
                            order=None, strict=False):
    """Check the transported relations of the exponential embedding."""
    emb = ExponentialEmbedding(yfk, m, omega_exp)
    ctx = yfk.ctx
    sts = enum_states(yfk.fp.r, max_boxes)
    guard = _guarded(strict)
    records = []

    inst, fails, skips = 0, [], 0
    kks = list(range(-K, K + 1)) if ctx.c2 != 0 else [0]
    for st in sts:
        for box in state_addable(st):
            for i in range(m):
                for kk in kks:
                    res, err = guard(emb.check_cartan_transport, st, box, i, kk, order)
                    if err:
                        skips += 1
                        continue
                    if res is None:
                        continue
                    inst += 1
                    if not res:
                        fails.append(("cartan-transport", st, box, i, kk))
    records.append(_family("cartan-transport", inst, fails, skips))

    if emb.radical_free:
        inst, fails, skips = 0, [], 0
        win = range(-comm_K, comm_K + 1)
        for st in sts:
            for i in range(m):
                for j in range(m):
                    for k in win:
                        for l in win:
                            res, err = guard(emb.check_commutator_transport,
                                             st, i, j, k, l, order)
                            if err:
                                skips += 1
                                continue
                            inst += 1
                            if not res:
                                fails.append(("commutator-transport", st, i, j, k, l))
        records.append(_family("commutator-transport", inst, fails, skips))
    else:
        records.append(_structural_skip(
            "commutator-transport",
            "entries carry square-root factors across mixed states; "
            "covered by the intertwiner checks"))

    ok = emb.check_normalization(order)
    records.append(_family("mode-normalization", 1, [] if ok else [("normalization", m)]))

    if ctx.c2 == 0:
        inst, fails, skips = 0, [], 0
        for st in sts:
            for ip in range(emb.mn):
                inst += 1
                if not emb.check_classical_diag(st, ip, order):
                    fails.append(("classical-diag", st, ip))
        for st in sts:
            for box in state_addable(st):
                for i in range(m):
                    for k in range(-K, K + 1):
                        for lower in (False, True):
                            res, err = guard(emb.check_classical_move,
                                             st, box, i, k, lower, order)
                            if err:
                                skips += 1
                                continue
                            if res is None:
                                continue
                            inst += 1
                            if not res:
                                fails.append(("classical-move", st, box, i, k, lower))
        records.append(_family("classical-congruence", inst, fails, skips))
    return records


def run_rescaling_suite(tfk, m, src_omega_exp=None, max_boxes=3, K=2, comm_K=1,
                        order=None, strict=False):
    """Check the transported relations of the rescaling embedding."""
    emb = RescalingEmbedding(tfk, m, src_omega_exp)
    ctx = tfk.ctx
    sts = enum_states(tfk.fp.r, max_boxes)
    guard = _guarded(strict)
    records = []

    inst, fails, skips = 0, [], 0
    for st in sts:
        for box in state_addable(st):
            for i in range(m):
                for kk in range(-K, K + 1):
                    res, err = guard(emb.check_cartan_transport, st, box, i, kk, order)
                    if err:
                        skips += 1
                        continue
                    if res is None:
                        continue
                    inst += 1
                    if not res:
                        fails.append(("cartan-transport", st, box, i, kk))
    records.append(_family("cartan-transport", inst, fails, skips))

    if emb.radical_free:
        inst, fails, skips = 0, [], 0
        win = range(-comm_K, comm_K + 1)
        for st in sts:
            for i in range(m):
                for j in range(m):
                    for k in win:
                        for l in win:
                            res, err = guard(emb.check_commutator_transport,
                                             st, i, j, k, l, order)
                            if err:
                                skips += 1
                                continue
                            inst += 1
                            if not res:
                                fails.append(("commutator-transport", st, i, j, k, l))
        records.append(_family("commutator-transport", inst, fails, skips))
    else:
        records.append(_structural_skip(
            "commutator-transport",
            "entries carry square-root factors across mixed states; "
            "covered by the intertwiner checks"))

    ok = emb.check_prefactor(order)
    records.append(_family("prefactor-normalization", 1,
                           [] if ok else [("prefactor", m)]))
    return records
