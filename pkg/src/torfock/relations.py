"""Verification of the defining relations on Fock modules.

Families are named by structural role rather than by any numbering:

- diag-commute: the Cartan modes pairwise commute (diagonal action).
- raise-lower: the raising/lowering commutator is diagonal with the
  prescribed eigenvalue; cross terms cancel.
- pair-current: the quadratic exchange relation between two raising (or
  two lowering) currents, weighted by the exchange polynomial.
- cartan-raise: commuting a Cartan mode past a raising mode multiplies
  it by the structure constant (multiplicative algebras).
- cartan-current: the exchange identity between the additive Cartan
  current and a raising/lowering mode (additive algebras); one check
  per box covers every mode of the moved generator.
- serre: the cubic/quartic symmetrized word relations.

Checks are grouped by the coordinate monomials attached to the moved
boxes, which verifies every mode instance at once; when a group does
not cancel on its own (coincident coordinates), the checker falls back
to direct evaluation over a finite mode window before reporting a
failure.
"""

from itertools import combinations_with_replacement, permutations

from .errors import ResonanceError
from .partitions import (part, state_add_box, state_addable, state_remove_box,
                         state_removable, states as enum_states)


def _transpose(poly):
    return {(b, a): c for (a, b), c in poly.items()}


def _scale(poly, factor):
    return {k: c * factor for k, c in poly.items()}


class Checker:
    def __init__(self, fk, order=None, strict=False):
        self.fk = fk
        self.ctx = fk.ctx
        self.order = self.ctx.D if order is None else order
        self.strict = strict
        self._pow_cache = {}

    def _zero(self, ts):
        return ts.is_zero_upto(self.order)

    def _anchor_pow(self, anchor, k):
        key = (anchor, k)
        hit = self._pow_cache.get(key)
        if hit is None:
            a, s, lam = anchor
            hit = self.fk.fp.coord(a, s, lam).pow_int(k)
            self._pow_cache[key] = hit
        return hit

    def _chain_paths(self, state, colors, op):
        """All ways to act by the given colors in order; anchors record
        the slot coordinates at the state each letter acted on."""
        fk = self.fk
        paths = [(state, (), self.ctx.one())]
        for col in colors:
            new = []
            for st, anch, val in paths:
                if op == "raise":
                    for a, s in state_addable(st):
                        rb = fk.raise_base(st, (a, s), col)
                        if rb is None:
                            continue
                        new.append((state_add_box(st, a, s),
                                    anch + ((a, s, part(st[a], s)),), val * rb))
                else:
                    for a, s in state_removable(st):
                        small = state_remove_box(st, a, s)
                        lb = fk.lower_base(small, (a, s), col)
                        if lb is None:
                            continue
                        new.append((small,
                                    anch + ((a, s, part(small[a], s)),), val * lb))
            paths = new
        return paths

    # -- raising/lowering commutator -------------------------------------------

    def check_raise_lower(self, state, i, j, K):
        """[raise_{i,k}, lower_{j,l}] is diagonal delta_ij with the known value."""
        fk = self.fk
        failures = []
        instances = 0
        # cross terms, mode independent
        groups = {}
        for a, s in state_removable(state):
            small = state_remove_box(state, a, s)
            lb = fk.lower_base(small, (a, s), j)
            if lb is None:
                continue
            anch_b = (a, s, part(small[a], s))
            for a2, s2 in state_addable(small):
                if (a2, s2) == (a, s):
                    continue
                rb = fk.raise_base(small, (a2, s2), i)
                if rb is None:
                    continue
                key = (state_add_box(small, a2, s2), anch_b,
                       (a2, s2, part(small[a2], s2)))
                cur = groups.get(key)
                v = lb * rb
                groups[key] = v if cur is None else cur + v
        for a2, s2 in state_addable(state):
            rb = fk.raise_base(state, (a2, s2), i)
            if rb is None:
                continue
            big = state_add_box(state, a2, s2)
            anch_b2 = (a2, s2, part(state[a2], s2))
            for a, s in state_removable(big):
                if (a, s) == (a2, s2):
                    continue
                small = state_remove_box(big, a, s)
                lb = fk.lower_base(small, (a, s), j)
                if lb is None:
                    continue
                key = (small, (a, s, part(small[a], s)), anch_b2)
                cur = groups.get(key)
                v = -(rb * lb)
                groups[key] = v if cur is None else cur + v
        for key, v in groups.items():
            instances += 1
            if not self._zero(v):
                failures.append(("cross", state, i, j, key[0]))
        # diagonal part
        lo = 0 if fk.alg.kind == "yangian" else -2 * K
        for m in range(lo, 2 * K + 1):
            ef = self.ctx.zero()
            for a, s in state_removable(state):
                small = state_remove_box(state, a, s)
                lb = fk.lower_base(small, (a, s), j)
                if lb is None:
                    continue
                rb = fk.raise_base(small, (a, s), i)
                if rb is None:
                    continue
                ef = ef + (lb * rb) * self._anchor_pow((a, s, part(small[a], s)), m)
            fe = self.ctx.zero()
            for a, s in state_addable(state):
                rb = fk.raise_base(state, (a, s), i)
                if rb is None:
                    continue
                lb = fk.lower_base(state, (a, s), j)
                if lb is None:
                    continue
                fe = fe + (rb * lb) * self._anchor_pow((a, s, part(state[a], s)), m)
            resid = ef - fe
            if i == j:
                resid = resid - fk.t1_diag_eig(state, i, m)
            instances += 1
            if not self._zero(resid):
                failures.append(("diag", state, i, j, m))
        return instances, failures

    # -- quadratic current relations ---------------------------------------------

    def pair_specs(self, op):
        alg = self.fk.alg
        n = alg.rank
        out = []
        for i in range(n):
            for j in range(n):
                if alg.kind == "toroidal":
                    gij, gji = alg.g_poly(i, j), alg.g_poly(j, i)
                    if op == "raise":
                        out.append((i, j, _scale(gij, alg.d_factor(i, j)), gji))
                    else:
                        out.append((i, j, _scale(_transpose(gji), alg.d_factor(j, i)),
                                    _transpose(gij)))
                else:
                    pij, pji = alg.p_poly(i, j), alg.p_poly(j, i)
                    if op == "raise":
                        out.append((i, j, pij, pji))
                    else:
                        out.append((i, j, _transpose(pji), _transpose(pij)))
        return out

    def _poly_at(self, poly, first, second):
        acc = self.ctx.zero()
        for (a, b), c in poly.items():
            acc = acc + c * self._anchor_pow(first, a) * self._anchor_pow(second, b)
        return acc

    def check_pair_current(self, state, i, j, poly1, poly2, op, window):
        """poly1 on the i-then-j word, poly2 on the j-then-i word.

        Left letters act last; anchors are grouped per role so one pass
        certifies all modes.
        """
        groups = {}
        paths1 = self._chain_paths(state, (j, i), op)
        for tau, anchors, val in paths1:
            aj, ai = anchors
            v = self._poly_at(poly1, ai, aj) * val
            key = (tau, ai, aj)
            cur = groups.get(key)
            groups[key] = v if cur is None else cur + v
        paths2 = self._chain_paths(state, (i, j), op)
        for tau, anchors, val in paths2:
            ai, aj = anchors
            v = self._poly_at(poly2, aj, ai) * val
            key = (tau, ai, aj)
            cur = groups.get(key)
            groups[key] = v if cur is None else cur + v
        bad_targets = {key[0] for key, v in groups.items() if not self._zero(v)}
        if not bad_targets:
            return len(groups), []
        failures = []
        for tau in bad_targets:
            if not self._pair_instances_ok(state, tau, i, j, poly1, poly2,
                                           paths1, paths2, window):
                failures.append(("pair", state, i, j, tau))
        return len(groups), failures

    def _pair_instances_ok(self, state, tau, i, j, poly1, poly2, paths1, paths2,
                           window):
        for k in window:
            for l in window:
                acc = self.ctx.zero()
                for t, anchors, val in paths1:
                    if t != tau:
                        continue
                    aj, ai = anchors
                    acc = acc + (self._poly_at(poly1, ai, aj) * val
                                 * self._anchor_pow(ai, k) * self._anchor_pow(aj, l))
                for t, anchors, val in paths2:
                    if t != tau:
                        continue
                    ai, aj = anchors
                    acc = acc + (self._poly_at(poly2, aj, ai) * val
                                 * self._anchor_pow(ai, k) * self._anchor_pow(aj, l))
                if not self._zero(acc):
                    return False
        return True

    # -- Cartan vs raising --------------------------------------------------------

    def check_cartan_raise(self, state, K):
        """Multiplicative algebras: the Cartan eigenvalue jumps by the
        structure constant times the box coordinate power."""
        fk = self.fk
        n = fk.alg.rank
        failures = []
        instances = 0
        for a, s in state_addable(state):
            jcol = (fk.color(state, a, s) - 1) % n
            if fk.raise_base(state, (a, s), jcol) is None:
                continue
            big = state_add_box(state, a, s)
            anchor = (a, s, part(state[a], s))
            for i in range(n):
                for k in range(-K, K + 1):
                    delta = fk.h_mode_eig(big, i, k) - fk.h_mode_eig(state, i, k)
                    expect = fk.alg.b_coeff(i, jcol, k) * self._anchor_pow(anchor, k)
                    instances += 1
                    if not self._zero(delta - expect):
                        failures.append(("cartan", state, (a, s), i, k))
        return instances, failures

    def check_cartan_current(self, state, depth):
        """Additive algebras: exchange identity between the diagonal
        current and one moved box, all modes at once."""
        fk = self.fk
        alg = fk.alg
        n = alg.rank
        failures = []
        instances = 0
        for a, s in state_addable(state):
            jcol = (fk.color(state, a, s) - 1) % n
            if fk.raise_base(state, (a, s), jcol) is None:
                continue
            big = state_add_box(state, a, s)
            anchor = (a, s, part(state[a], s))
            for i in range(n):
                pij = alg.p_poly(i, jcol)
                pji = alg.p_poly(jcol, i)
                ecur = fk.xi_poly_list(state, i, depth)
                Ecur = fk.xi_poly_list(big, i, depth)
                maxdeg = max(al for al, _b in list(pij) + list(pji))
                acc = {}
                for (al, be), c in pij.items():
                    cx = c * self._anchor_pow(anchor, be)
                    for t in range(depth + 1):
                        m = al - t
                        acc[m] = acc.get(m, self.ctx.zero()) + cx * Ecur[t]
                for (al, be), c in pji.items():
                    cx = c * self._anchor_pow(anchor, al)
                    for t in range(depth + 1):
                        m = be - t
                        acc[m] = acc.get(m, self.ctx.zero()) + cx * ecur[t]
                instances += 1
                bad = [m for m in acc if m >= maxdeg - depth and not self._zero(acc[m])]
                if bad:
                    failures.append(("cartan-current", state, (a, s), i, bad))
        return instances, failures

    # -- Serre words ---------------------------------------------------------------

    def serre_tables(self, i, j):
        """(letters, sym_count, words, shifts) per algebra and rank."""
        alg = self.fk.alg
        ctx = self.ctx
        one = ctx.one()
        if alg.kind == "toroidal":
            if alg.rank > 2:
                words = [(one, (0, 1, 2)), (-alg.q, (0, 2, 1)),
                         (-alg.qinv, (1, 2, 0)), (one, (2, 1, 0))]
                return ([i, i, j], 2, words, {})
            if alg.rank == 2:
                q2, q2i = alg.q2, alg.q2.inv()
                words = [(one, (0, 1, 2, 3)), (-q2, (0, 1, 3, 2)),
                         (-one, (0, 2, 3, 1)), (q2, (0, 3, 2, 1)),
                         (-q2i, (1, 2, 3, 0)), (one, (1, 3, 2, 0)),
                         (q2i, (2, 3, 1, 0)), (-one, (3, 2, 1, 0))]
                return ([i, i, i, j], 3, words, {})
            words = [(one, (0, 1, 2)), (-one, (0, 2, 1)),
                     (-one, (1, 2, 0)), (one, (2, 1, 0))]
            return ([i, i, i], 3, words, {1: 1, 2: -1})
        if alg.rank >= 2:
            base = [(one, (0, 1, 2)), (-one, (0, 2, 1)),
                    (-one, (1, 2, 0)), (one, (2, 1, 0))]
            if alg.rank > 2:
                return ([i, i, j], 2, base, {})
            words = [(one, (0, 1, 2, 3)), (-one, (0, 1, 3, 2)),
                     (-one, (0, 2, 3, 1)), (one, (0, 3, 2, 1)),
                     (-one, (1, 2, 3, 0)), (one, (1, 3, 2, 0)),
                     (one, (2, 3, 1, 0)), (-one, (3, 2, 1, 0))]
            return ([i, i, i, j], 3, words, {})
        words = [(one, (0, 1, 2)), (-one, (0, 2, 1)),
                 (-one, (1, 2, 0)), (one, (2, 1, 0))]
        return ([i, i, i], 3, words, {2: 1})

    def check_serre(self, state, i, j, op, window):
        letters, sym_count, words, shifts = self.serre_tables(i, j)
        seq_cache = {}
        groups = {}
        flat = []
        for coeff, order in words:
            acting = tuple(reversed(order))
            colors = tuple(letters[t] for t in acting)
            if colors not in seq_cache:
                seq_cache[colors] = self._chain_paths(state, colors, op)
            for tau, anchors, val in seq_cache[colors]:
                per_letter = [None] * len(letters)
                for pos, letter in enumerate(acting):
                    per_letter[letter] = anchors[pos]
                cv = val * coeff
                for lt, dshift in shifts.items():
                    cv = cv * self._anchor_pow(per_letter[lt], dshift)
                flat.append((tau, tuple(per_letter), cv))
                key = (tau, tuple(sorted(per_letter[:sym_count])),
                       tuple(per_letter[sym_count:]))
                cur = groups.get(key)
                groups[key] = cv if cur is None else cur + cv
        bad_targets = {key[0] for key, v in groups.items() if not self._zero(v)}
        if not bad_targets:
            return len(groups), []
        failures = []
        for tau in bad_targets:
            if not self._serre_instances_ok(flat, tau, len(letters), sym_count, window):
                failures.append(("serre", state, i, j, tau))
        return len(groups), failures

    def _serre_instances_ok(self, flat, tau, nletters, sym_count, window):
        tail_count = nletters - sym_count
        sym_modes = list(combinations_with_replacement(window, sym_count))
        tails = [()] if tail_count == 0 else [(l,) for l in window]
        for ms in sym_modes:
            for tail in tails:
                acc = self.ctx.zero()
                for perm in set(permutations(ms)):
                    modes = perm + tail
                    for t, anchors, cv in flat:
                        if t != tau:
                            continue
                        term = cv
                        for anchor, mode in zip(anchors, modes):
                            if mode:
                                term = term * self._anchor_pow(anchor, mode)
                        acc = acc + term
                if not self._zero(acc):
                    return False
        return True


def _family(name, instances, failures, skipped=0):
    status = "pass" if not failures and not skipped else ("fail" if failures else "skip")
    return {"family": name, "status": status, "instances": instances,
            "failures": failures, "skipped": skipped}


def run_relation_suite(fk, max_boxes=4, K=2, serre_K=1, order=None, strict=False):
    """Check every defining relation family on all states up to max_boxes."""
    alg = fk.alg
    n = alg.rank
    ck = Checker(fk, order=order, strict=strict)
    sts = enum_states(fk.fp.r, max_boxes)
    records = [{"family": "diag-commute", "status": "pass", "instances": 0,
                "failures": [], "skipped": 0,
                "witness": "diagonal operators commute structurally"}]

    def guarded(fn, *args):
        try:
            return fn(*args), None
        except ResonanceError as exc:
            if strict:
                raise
            return None, str(exc)

    inst, fails, skips = 0, [], 0
    for st in sts:
        for i in range(n):
            for j in range(n):
                res, err = guarded(ck.check_raise_lower, st, i, j, K)
                if err:
                    skips += 1
                    continue
                inst += res[0]
                fails += res[1]
    records.append(_family("raise-lower", inst, fails, skips))

    window = list(range(-K, K + 1)) if alg.kind == "toroidal" else list(range(K + 1))
    for op in ("raise", "lower"):
        inst, fails, skips = 0, [], 0
        for i, j, poly1, poly2 in ck.pair_specs(op):
            for st in sts:
                res, err = guarded(ck.check_pair_current, st, i, j, poly1, poly2,
                                   op, window)
                if err:
                    skips += 1
                    continue
                inst += res[0]
                fails += res[1]
        records.append(_family("pair-current-%s" % op, inst, fails, skips))

    inst, fails, skips = 0, [], 0
    if alg.kind == "toroidal":
        for st in sts:
            res, err = guarded(ck.check_cartan_raise, st, K)
            if err:
                skips += 1
                continue
            inst += res[0]
            fails += res[1]
        records.append(_family("cartan-raise", inst, fails, skips))
    else:
        for st in sts:
            res, err = guarded(ck.check_cartan_current, st, K + 4)
            if err:
                skips += 1
                continue
            inst += res[0]
            fails += res[1]
        records.append(_family("cartan-current", inst, fails, skips))

    serre_window = (list(range(-serre_K, serre_K + 1)) if alg.kind == "toroidal"
                    else list(range(serre_K + 1)))
    pairs = [(0, 0)] if n == 1 else (
        [(x, (x + 1) % n) for x in range(n)] if n == 2 else
        [(x, (x + 1) % n) for x in range(n)] + [(x, (x - 1) % n) for x in range(n)])
    for op in ("raise", "lower"):
        inst, fails, skips = 0, [], 0
        for i, j in pairs:
            for st in sts:
                res, err = guarded(ck.check_serre, st, i, j, op, serre_window)
                if err:
                    skips += 1
                    continue
                inst += res[0]
                fails += res[1]
        records.append(_family("serre-%s" % op, inst, fails, skips))

    if n > 3:
        one = fk.ctx.one()
        poly1, poly2 = {(0, 0): one}, {(0, 0): -one}
        for op in ("raise", "lower"):
            inst, fails, skips = 0, [], 0
            for i in range(n):
                for j in range(n):
                    if alg.a(i, j) != 0:
                        continue
                    for st in sts:
                        res, err = guarded(ck.check_pair_current, st, i, j,
                                           poly1, poly2, op, window)
                        if err:
                            skips += 1
                            continue
                        inst += res[0]
                        fails += res[1]
            records.append(_family("commute-%s" % op, inst, fails, skips))
    return records
