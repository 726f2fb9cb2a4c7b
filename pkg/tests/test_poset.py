import math

import pytest

from bipath.modules import hom_relation_order
from bipath.poset import (
    GridInterval,
    GridPoset,
    downset,
    enumerate_intervals,
    hom_order_key,
    interval_count,
    omega,
    upset,
)

from oracles import BruteBipath

SMALL = [(n, m) for n in range(5) for m in range(5)]


@pytest.mark.parametrize("n,m", SMALL)
def test_enumeration_matches_brute_force(n, m):
    P = GridPoset(n, m)
    ours = [I.members for I in enumerate_intervals(P)]
    assert len(ours) == len(set(ours))
    assert set(ours) == set(BruteBipath(n, m).intervals())
    assert len(ours) == interval_count(n, m)


def test_counts():
    assert len(enumerate_intervals(GridPoset(2, 2))) == 25
    assert len(enumerate_intervals(GridPoset(1, 0))) == 6
    # only {-inf}, {+inf} and the whole two-element chain
    assert len(enumerate_intervals(GridPoset(0, 0))) == 3


@pytest.mark.parametrize("n,m", [(3, 2), (0, 3), (2, 0)])
def test_leq_matches_closure(n, m):
    P, ref = GridPoset(n, m), BruteBipath(n, m)
    for a in P.elements():
        for b in P.elements():
            assert P.leq(a, b) == ref.leq(a, b)


def test_classification_round_trip():
    P = GridPoset(3, 2)
    for I in enumerate_intervals(P):
        J = GridInterval.bracket(P, I.kind, I.s, I.t)
        assert J == I


def test_labels():
    P = GridPoset(2, 2)
    assert GridInterval.bracket(P, "U", 1, 1).label() == "<1,1>U"
    assert GridInterval.bracket(P, "D", 2, 1).label() == "<2',1'>D"
    assert GridInterval.bracket(P, "L", 1, 1).label() == "<1',1>L"
    assert GridInterval.bracket(P, "R", 2, math.inf).label() == "<2,+inf>R"


def test_rejects_non_intervals():
    P = GridPoset(2, 2)
    with pytest.raises(ValueError):
        GridInterval(P, 1 << 1 | 1 << 3)  # {1, 1'} is not connected
    with pytest.raises(ValueError):
        GridInterval(P, 1 | 1 << 2)  # {-inf, 2} skips 1


def test_updown_examples():
    P = GridPoset(2, 2)
    assert upset(P, {0}) == frozenset(P.elements())
    assert downset(P, set()) == frozenset(P.elements())
    assert upset(P, {1}) == {1, 2, P.top}


def test_omega_examples():
    P = GridPoset(2, 2)
    B = GridInterval.bracket(P, "B")
    U11 = GridInterval.bracket(P, "U", 1, 1)
    L = GridInterval.bracket(P, "L", 1, 1)
    assert omega(U11, U11) == [U11.mask]
    assert omega(B, U11) == []
    assert len(omega(U11, L)) == 1


@pytest.mark.parametrize("n,m", [(2, 2), (3, 1), (1, 3), (0, 2), (4, 4)])
def test_omega_matches_oracle(n, m):
    P, ref = GridPoset(n, m), BruteBipath(n, m)
    ivs = enumerate_intervals(P)
    for I in ivs:
        for J in ivs:
            ours = {frozenset(P.members(c)) for c in omega(I, J)}
            assert ours == set(ref.omega(I.members, J.members))


_CLASS_RANK = {"R": 0, "U": 1, "B": 1, "D": 1, "L": 2}


@pytest.mark.parametrize("n,m", [(n, m) for n in range(5) for m in range(5)])
def test_hom_structure(n, m):
    P = GridPoset(n, m)
    ivs = enumerate_intervals(P)
    for I in ivs:
        for J in ivs:
            nz = bool(omega(I, J))
            # Hom from I to J needs the class of I to be at most that of J
            if _CLASS_RANK[I.kind] > _CLASS_RANK[J.kind]:
                assert not nz
            if I.kind == J.kind == "L":
                assert nz == (J.members <= I.members)
            if I.kind == J.kind == "R":
                assert nz == (I.members <= J.members)
            # the back-substitution order puts every Hom target first
            if nz and I != J:
                assert hom_order_key(J) < hom_order_key(I)


@pytest.mark.parametrize("n,m", [(n, m) for n in range(6) for m in range(6)])
def test_hom_relation_is_acyclic(n, m):
    P = GridPoset(n, m)
    order = hom_relation_order(P)
    pos = {I: k for k, I in enumerate(order)}
    assert len(order) == interval_count(n, m)
    for I in order:
        for J in order:
            if I != J and omega(I, J):
                assert pos[J] < pos[I]
