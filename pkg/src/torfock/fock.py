"""Fock modules on tuples of partitions.

Matrix coefficients of the raising and lowering currents, eigenvalues
of the Cartan currents, and their Borel transforms.  All infinite slot
products are reduced beforehand to finite survivor ranges: consecutive
equal rows cancel in pairs against the structure function, so only rows
up to the column length (plus one trailing row for the second kind)
ever contribute.  Coordinates are always taken in the smaller state of
a box move, including for the moved box itself.

Division never happens by anything of uncertified order: Cartan mode
eigenvalues come from logarithm-free recursions in the coefficient
lists of the current, and the only true divisions are by certified
units (a pole raises ResonanceError instead).
"""

from ._rat import Rat
from .auxseries import AuxSeries
from .errors import NonUnit, ResonanceError
from .partitions import part
from .series import qnum


def _convolve(zero, A, B, depth):
    """Product of two z-power lists with zero constant term (index = |power|)."""
    out = [zero] * (depth + 1)
    for a in range(1, min(len(A), depth + 1)):
        if not A[a].c:
            continue
        top = min(len(B) - 1, depth - a)
        for b in range(1, top + 1):
            out[a + b] = out[a + b] + A[a] * B[b]
    return out


class FockSpace:
    def __init__(self, fock_params):
        self.fp = fock_params
        self.alg = fock_params.alg
        self.ctx = fock_params.alg.ctx
        self._raise_cache = {}
        self._lower_cache = {}
        self._plist_cache = {}
        self._n1_lower_corr = None

    # -- coordinates -------------------------------------------------------

    def coord(self, state, a, s):
        return self.fp.coord(a, s, part(state[a], s))

    def color(self, state, a, s):
        return self.fp.color(a, s, part(state[a], s))

    def _col_ok(self, state, a, s, j):
        return (self.color(state, a, s) - j) % self.alg.rank == 0

    # -- structure function --------------------------------------------------

    def psi_of(self, x):
        """(q - x/q)/(1 - x) with a pole guard."""
        alg = self.alg
        den = self.ctx.one() - x
        if den.val() is None:
            raise ResonanceError("structure function evaluated at its pole")
        try:
            dinv = den.inv()
        except NonUnit:
            raise ResonanceError("structure function pole within certified precision")
        return (alg.q - alg.qinv * x) * dinv

    def _ratio_factor(self, kind, slot_coord, box_coord, box_inv=None):
        """One slot factor of a raising/lowering coefficient."""
        alg = self.alg
        if alg.kind == "toroidal":
            if kind == 1:
                inv = box_inv if box_inv is not None else (alg.q1 * box_coord).inv()
                return self.psi_of(slot_coord * inv)
            return self.psi_of(box_coord * slot_coord.inv())
        if kind == 1:
            num = slot_coord - box_coord + alg.h3
            den = slot_coord - box_coord - alg.h1
        else:
            num = box_coord - slot_coord - alg.h2
            den = box_coord - slot_coord
        if den.val() is None:
            raise ResonanceError("additive slot factor hit a vanishing denominator")
        try:
            return num * den.inv()
        except NonUnit:
            raise ResonanceError("additive slot factor pole within certified precision")

    # -- survivor slots ------------------------------------------------------

    def eig_slots(self, state, j):
        """Surviving (component, row, kind) triples of a diagonal current."""
        out = []
        for a, mu in enumerate(state):
            la = len(mu)
            for s in range(1, la + 1):
                if self._col_ok(state, a, s, j):
                    out.append((a, s, 1))
            for s in range(1, la + 2):
                if self._col_ok(state, a, s, j + 1):
                    out.append((a, s, 2))
        return out

    def raise_slots(self, state, box, j):
        l, i = box
        out = []
        for a, mu in enumerate(state):
            if a > l:
                continue
            if a < l:
                la = len(mu)
                first_top, second_top = la, la + 1
                lo = 1
            else:
                first_top = second_top = i - 1
                lo = 1
            for s in range(lo, first_top + 1):
                if self._col_ok(state, a, s, j):
                    out.append((a, s, 1))
            for s in range(lo, second_top + 1):
                if self._col_ok(state, a, s, j + 1):
                    out.append((a, s, 2))
        return out

    def lower_slots(self, state, box, j):
        """Slots after the removed box; state is the smaller state."""
        l, i = box
        out = []
        for a, mu in enumerate(state):
            if a < l:
                continue
            la = len(mu)
            if a > l:
                lo, first_top, second_top = 1, la, la + 1
            else:
                lo = i + 1
                first_top = la
                second_top = max(i + 1, la + 1)
            for s in range(lo, first_top + 1):
                if self._col_ok(state, a, s, j):
                    out.append((a, s, 1))
            for s in range(lo, second_top + 1):
                if self._col_ok(state, a, s, j + 1):
                    out.append((a, s, 2))
        return out

    # -- matrix coefficients ---------------------------------------------------

    def raise_base(self, state, box, j):
        """Mode-free coefficient of the raising current on state + box.

        None when the color filter kills the move.  The mode-k entry is
        this value times coord(box)^k, the coordinate taken in `state`.
        """
        key = (state, box, j)
        if key in self._raise_cache:
            return self._raise_cache[key]
        l, i = box
        n = self.alg.rank
        out = None
        if (self.color(state, l, i) - (j + 1)) % n == 0:
            box_coord = self.coord(state, l, i)
            box_inv = (self.alg.q1 * box_coord).inv() if self.alg.kind == "toroidal" else None
            out = self.ctx.one()
            for a, s, kind in self.raise_slots(state, box, j):
                out = out * self._ratio_factor(kind, self.coord(state, a, s), box_coord, box_inv)
        self._raise_cache[key] = out
        return out

    def lower_base(self, small, box, j):
        """Mode-free coefficient of the lowering current from small + box to small."""
        key = (small, box, j)
        if key in self._lower_cache:
            return self._lower_cache[key]
        l, i = box
        n = self.alg.rank
        out = None
        if (self.color(small, l, i) - (j + 1)) % n == 0:
            box_coord = self.coord(small, l, i)
            box_inv = (self.alg.q1 * box_coord).inv() if self.alg.kind == "toroidal" else None
            out = self.ctx.one()
            for a, s, kind in self.lower_slots(small, box, j):
                out = out * self._ratio_factor(kind, self.coord(small, a, s), box_coord, box_inv)
            out = out * self._lower_correction()
        self._lower_cache[key] = out
        return out

    def _lower_correction(self):
        """Extra scalar on every lowering entry in rank 1."""
        if self.alg.rank != 1:
            return self.ctx.one()
        if self._n1_lower_corr is None:
            alg = self.alg
            if alg.kind == "toroidal":
                num = alg.q * (self.ctx.one() - alg.q3)
                den = self.ctx.one() - alg.q1.inv()
                if den.val() is None:
                    raise ResonanceError("rank-1 lowering correction denominator vanishes")
                self._n1_lower_corr = num * den.inv()
            else:
                self._n1_lower_corr = self.ctx.rat(-(self.ctx.c3 / self.ctx.c1))
        return self._n1_lower_corr

    # -- current actions -----------------------------------------------------

    def apply_raise(self, state, j, k):
        """e_{j,k} (or x^+_{j,k}): dict of target state -> coefficient."""
        from .partitions import state_add_box, state_addable

        out = {}
        for l, i in state_addable(state):
            base = self.raise_base(state, (l, i), j)
            if base is None:
                continue
            coeff = base * self.coord(state, l, i).pow_int(k)
            out[state_add_box(state, l, i)] = coeff
        return out

    def apply_lower(self, state, j, k):
        from .partitions import state_remove_box, state_removable

        out = {}
        for l, i in state_removable(state):
            small = state_remove_box(state, l, i)
            base = self.lower_base(small, (l, i), j)
            if base is None:
                continue
            out[small] = base * self.coord(small, l, i).pow_int(k)
        return out

    # -- diagonal eigenvalues ----------------------------------------------------

    def psi0_exponent(self, state, j):
        n = 0
        for _a, _s, kind in self.eig_slots(state, j):
            n += 1 if kind == 1 else -1
        return n

    def w_lists(self, state, j, depth, direction):
        """Per-slot coefficient lists of the multiplicative Cartan current.

        Each slot factor is q^{+-1} (1 + kappa W) with W a pure z-power
        tail; entry [m] is the coefficient of z^{-m} (direction +1) or
        z^{+m} (direction -1).
        """
        alg = self.alg
        zero = self.ctx.zero()
        out = []
        for a, s, kind in self.eig_slots(state, j):
            chi = self.coord(state, a, s)
            if direction > 0:
                base = chi * alg.q1.inv() if kind == 1 else chi
                head = alg.qinv if kind == 1 else -alg.q
            else:
                base = alg.q1 * chi.inv() if kind == 1 else chi.inv()
                head = -alg.q if kind == 1 else alg.qinv
            lst = [zero]
            pw = self.ctx.one()
            for _m in range(depth):
                pw = pw * base
                lst.append(head * pw)
            out.append(lst)
        return out

    def v_lists(self, state, j):
        """(sign, center) pairs of the additive Cartan current factors."""
        alg = self.alg
        out = []
        for a, s, kind in self.eig_slots(state, j):
            x = self.coord(state, a, s)
            if kind == 1:
                out.append((1, x - alg.h1))
            else:
                out.append((-1, x))
        return out

    def _product_tail(self, wlists, scalar, depth):
        """P with product of (1 + scalar W_t) = 1 + scalar P, as a power list."""
        zero = self.ctx.zero()
        P = [zero] * (depth + 1)
        for W in wlists:
            WP = _convolve(zero, W, P, depth)
            P = [
                P[m] + (W[m] if m < len(W) else zero) + WP[m] * scalar
                for m in range(depth + 1)
            ]
        return P

    def _plist(self, state, j, depth, direction):
        key = (state, j, depth, direction)
        hit = self._plist_cache.get(key)
        if hit is not None:
            return hit
        alg = self.alg
        if alg.kind == "toroidal":
            ws = self.w_lists(state, j, depth, direction)
            P = self._product_tail(ws, alg.kappa, depth)
        else:
            zero = self.ctx.zero()
            ws = []
            for sign, C in self.v_lists(state, j):
                lst = [zero]
                pw = self.ctx.rat(sign)
                for _m in range(depth):
                    lst.append(pw)
                    pw = pw * C
                ws.append(lst)
            P = self._product_tail(ws, alg.h2, depth)
        self._plist_cache[key] = P
        return P

    def _log_tail(self, wlists, scalar, depth):
        """Sum over slots of log(1 + scalar W)/scalar as a power list."""
        zero = self.ctx.zero()
        out = [zero] * (depth + 1)
        for W in wlists:
            Wk = W[: depth + 1] + [zero] * max(0, depth + 1 - len(W))
            spow = self.ctx.one()
            k = 1
            while True:
                coef = Rat(1 if k % 2 else -1, k)
                live = False
                for m in range(k, depth + 1):
                    if Wk[m].c:
                        live = True
                        out[m] = out[m] + (Wk[m] * spow).scalar_mul(coef)
                if not live and k > 1:
                    break
                if k == depth:
                    break
                Wk = _convolve(zero, Wk, W, depth)
                spow = spow * scalar
                k += 1
        return out

    def h_mode_eig(self, state, j, r):
        """Eigenvalue of the Cartan mode generator h_{j,r} (toroidal)."""
        if r == 0:
            return self.ctx.rat(self.psi0_exponent(state, j))
        depth = abs(r)
        ws = self.w_lists(state, j, depth, 1 if r > 0 else -1)
        tail = self._log_tail(ws, self.alg.kappa, depth)
        return tail[depth] if r > 0 else -tail[depth]

    def t1_diag_eig(self, state, j, r):
        """Diagonal value of the raising-lowering commutator at total mode r."""
        alg = self.alg
        if alg.kind == "yangian":
            return self.xi_mode_eig(state, j, r)
        N = self.psi0_exponent(state, j)
        if r == 0:
            return qnum(alg.q, N)
        P = self._plist(state, j, abs(r), 1 if r > 0 else -1)
        if r > 0:
            return alg.q.pow_int(N) * P[r]
        return -(alg.q.pow_int(-N) * P[-r])

    def xi_mode_eig(self, state, j, r):
        """Eigenvalue of the additive Cartan mode generator (r >= 0)."""
        if r < 0:
            raise ValueError("additive Cartan modes have nonnegative index")
        P = self._plist(state, j, r + 1, 1)
        return P[r + 1]

    def xi_poly_list(self, state, j, depth):
        """[z^0], [z^-1], ... coefficients of the additive Cartan current."""
        P = self._plist(state, j, depth, 1)
        out = [self.ctx.one()]
        for m in range(1, depth + 1):
            out.append(P[m] * self.alg.h2)
        return out

    # -- Borel transform ---------------------------------------------------------

    def _gtilde(self, a, aux_prec):
        """(exp(a w) - 1)/(a w) as an auxiliary series: sum a^k w^k/(k+1)!."""
        ctx = self.ctx
        c = {}
        term = ctx.one()
        for k in range(aux_prec):
            c[k] = term
            term = (term * a).scalar_mul(Rat(1, k + 2))
        return AuxSeries(ctx, "w", c, aux_prec)

    def borel_btilde(self, state, j, aux_prec):
        """Borel transform of the additive Cartan eigenvalue, divided by hbar_2."""
        ctx = self.ctx
        alg = self.alg
        mn = alg.rank
        acc = AuxSeries(ctx, "w", {}, aux_prec)
        for sign, C in self.v_lists(state, j):
            a = alg.h2.scalar_mul(-sign)
            term = AuxSeries.exp_linear(ctx, "w", C, aux_prec) * self._gtilde(a, aux_prec)
            acc = acc + term.scalar_mul(Rat(sign, mn))
        return acc

    # -- closed-form values of the diagonal currents ------------------------------

    def psi_value_factors(self, state, j, arg, skip=None):
        """Per-slot values of the multiplicative Cartan current at z = arg.

        Returns a list of exact factor series; skip omits one (a, s, kind)
        triple.  The product of the list is the rational-function value.
        """
        alg = self.alg
        arg_inv = None
        out = []
        for a, s, kind in self.eig_slots(state, j):
            if skip is not None and (a, s, kind) == skip:
                continue
            chi = self.coord(state, a, s)
            if kind == 1:
                if arg_inv is None:
                    arg_inv = (alg.q1 * arg).inv()
                out.append(self.psi_of(chi * arg_inv))
            else:
                out.append(self.psi_of(arg * chi.inv()))
        return out

    def xi_value_factors(self, state, j, arg, skip=None):
        """Additive analog of psi_value_factors."""
        alg = self.alg
        out = []
        for a, s, kind in self.eig_slots(state, j):
            if skip is not None and (a, s, kind) == skip:
                continue
            x = self.coord(state, a, s)
            if kind == 1:
                num = x - arg + alg.h3
                den = x - arg - alg.h1
            else:
                num = arg - x - alg.h2
                den = arg - x
            if den.val() is None:
                raise ResonanceError("diagonal current evaluated at a pole")
            try:
                out.append(num * den.inv())
            except NonUnit:
                raise ResonanceError("diagonal current pole within certified precision")
        return out
