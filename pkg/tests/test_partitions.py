import pytest

from torfock._rat import Rat
from torfock import partitions as pt


def test_partition_counts():
    # p(0..5) = 1, 1, 2, 3, 5, 7
    assert [len(pt.partitions_of(n)) for n in range(6)] == [1, 1, 2, 3, 5, 7]
    assert pt.partitions_of(0) == [()]
    assert len(pt.partitions_of(3)) == 3
    assert len(pt.partitions_of(5)) == 7


def test_partitions_are_sorted_and_decreasing():
    for n in range(8):
        for mu in pt.partitions_of(n):
            assert sum(mu) == n
            assert all(mu[i] >= mu[i + 1] for i in range(len(mu) - 1))
            assert all(x > 0 for x in mu)
    assert pt.partitions_of(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_states_enumeration():
    st1 = pt.states(1, 3)
    assert len(st1) == 1 + 1 + 2 + 3
    assert st1[0] == ((),)
    st2 = pt.states(2, 2)
    # totals 0,1,2 -> 1 + 2 + 5
    assert len(st2) == 8
    assert st2[0] == ((), ())
    # graded: sizes never decrease along the enumeration
    sizes = [pt.size(s) for s in st2]
    assert sizes == sorted(sizes)
    # deterministic
    assert pt.states(2, 2) == st2


def test_addable_and_removable():
    mu = (3, 1)
    assert pt.addable_rows(mu) == [1, 2, 3]
    assert pt.removable_rows(mu) == [1, 2]
    assert pt.add_box(mu, 1) == (4, 1)
    assert pt.add_box(mu, 2) == (3, 2)
    assert pt.add_box(mu, 3) == (3, 1, 1)
    assert pt.remove_box(mu, 1) == (2, 1)
    assert pt.remove_box(mu, 2) == (3,)
    mu2 = (2, 2)
    assert pt.addable_rows(mu2) == [1, 3]
    assert pt.removable_rows(mu2) == [2]
    with pytest.raises(ValueError):
        pt.add_box(mu2, 2)
    with pytest.raises(ValueError):
        pt.remove_box(mu2, 1)


def test_add_remove_round_trip():
    for n in range(6):
        for mu in pt.partitions_of(n):
            for i in pt.addable_rows(mu):
                bigger = pt.add_box(mu, i)
                assert sum(bigger) == n + 1
                assert pt.remove_box(bigger, i) == mu
            for i in pt.removable_rows(mu):
                smaller = pt.remove_box(mu, i)
                assert pt.add_box(smaller, i) == mu


def test_state_moves():
    s = ((2,), (1, 1))
    moves = pt.state_addable(s)
    assert (0, 1) in moves and (0, 2) in moves and (1, 1) in moves and (1, 3) in moves
    assert (1, 2) not in moves
    s2 = pt.state_add_box(s, 1, 1)
    assert s2 == ((2,), (2, 1))
    assert pt.state_remove_box(s2, 1, 1) == s
    assert set(pt.state_removable(s2)) == {(0, 1), (1, 1), (1, 2)}


def test_predecessor_path_reaches_empty():
    s = ((2, 1), (1,))
    seen = []
    while pt.size(s):
        s, move = pt.predecessor(s)
        seen.append(move)
    assert s == ((), ())
    assert len(seen) == 4
    with pytest.raises(ValueError):
        pt.predecessor(((), ()))


def test_epsilon_sign():
    half = Rat(1, 2)
    box = (1, 2)
    assert pt.epsilon_sign((0, 5), box) == -half
    assert pt.epsilon_sign((1, 1), box) == -half
    assert pt.epsilon_sign((1, 2), box) == 0
    assert pt.epsilon_sign((1, 3), box) == half
    assert pt.epsilon_sign((2, 1), box) == half
