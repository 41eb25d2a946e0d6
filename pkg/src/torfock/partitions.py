"""Partitions, tuples of partitions, and box moves.

A partition is a tuple of weakly decreasing positive integers; a state
of a rank-r module is an r-tuple of partitions.  Rows are 1-based in
the public helpers, matching the usual plethystic coordinates where the
box added in row i sits at column lam_i + 1 of the old shape.
"""

from ._rat import Rat

_PARTS_CACHE = {}


def partitions_of(n, maxpart=None):
    """All partitions of n with parts <= maxpart, largest part first."""
    if maxpart is None or maxpart > n:
        maxpart = n
    key = (n, maxpart)
    hit = _PARTS_CACHE.get(key)
    if hit is not None:
        return hit
    if n == 0:
        out = [()]
    else:
        out = []
        for first in range(min(n, maxpart), 0, -1):
            for rest in partitions_of(n - first, first):
                out.append((first,) + rest)
    _PARTS_CACHE[key] = out
    return out


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def states(r, maxboxes):
    """All r-tuples of partitions with at most maxboxes boxes, graded order."""
    out = []
    for total in range(maxboxes + 1):
        for comp in _compositions(total, r):
            pools = [partitions_of(c) for c in comp]
            idx = [0] * r
            while True:
                out.append(tuple(pools[a][idx[a]] for a in range(r)))
                a = r - 1
                while a >= 0:
                    idx[a] += 1
                    if idx[a] < len(pools[a]):
                        break
                    idx[a] = 0
                    a -= 1
                if a < 0:
                    break
    return out


def size(state):
    return sum(sum(mu) for mu in state)


def part(mu, i):
    """Row value lam_i with the convention lam_i = 0 beyond the last row."""
    return mu[i - 1] if 1 <= i <= len(mu) else 0


def addable_rows(mu):
    """Rows where a box can be added, 1-based, including the new row."""
    out = []
    for i in range(1, len(mu) + 2):
        if i == 1 or part(mu, i) < part(mu, i - 1):
            out.append(i)
    return out


def add_box(mu, i):
    if i == len(mu) + 1:
        return mu + (1,)
    if not (1 <= i <= len(mu)) or (i > 1 and mu[i - 1] >= mu[i - 2]):
        raise ValueError("row %d is not addable in %r" % (i, mu))
    return mu[: i - 1] + (mu[i - 1] + 1,) + mu[i:]


def removable_rows(mu):
    out = []
    for i in range(1, len(mu) + 1):
        if part(mu, i) > part(mu, i + 1):
            out.append(i)
    return out


def remove_box(mu, i):
    if i not in removable_rows(mu):
        raise ValueError("row %d is not removable in %r" % (i, mu))
    if mu[i - 1] == 1:
        return mu[: i - 1]
    return mu[: i - 1] + (mu[i - 1] - 1,) + mu[i:]


def state_add_box(state, a, i):
    """Add a box in row i of component a (component 0-based, row 1-based)."""
    return state[:a] + (add_box(state[a], i),) + state[a + 1:]


def state_remove_box(state, a, i):
    return state[:a] + (remove_box(state[a], i),) + state[a + 1:]


def state_addable(state):
    """All (component, row) moves that add one box."""
    out = []
    for a, mu in enumerate(state):
        for i in addable_rows(mu):
            out.append((a, i))
    return out


def state_removable(state):
    out = []
    for a, mu in enumerate(state):
        for i in removable_rows(mu):
            out.append((a, i))
    return out


def predecessor(state):
    """Canonical previous state on the graded enumeration, with the move.

    Removes the first removable box (components scanned in order, then
    rows).  Returns (smaller_state, (a, i)) such that adding a box in
    row i of component a recovers the input.
    """
    for a, mu in enumerate(state):
        rows = removable_rows(mu)
        if rows:
            i = rows[0]
            return state_remove_box(state, a, i), (a, i)
    raise ValueError("the empty state has no predecessor")


def epsilon_sign(pos, box):
    """+1/2, -1/2 or 0 by the slot order: (a,s) against the added box (l,i)."""
    a, s = pos
    l, i = box
    if (a, s) == (l, i):
        return Rat(0)
    if a < l or (a == l and s < i):
        return Rat(-1, 2)
    return Rat(1, 2)
