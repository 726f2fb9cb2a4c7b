import math

import numpy as np
import pytest

from bipath.bottleneck import (
    bottleneck,
    bottleneck_matching,
    brute_force_bottleneck,
    feasible,
    verify_bottleneck_interleaving,
)
from bipath.decorated import POS_INF_MINUS, DecValue
from bipath.diagram import ContinuousInterval as CI
from bipath.diagram import Diagram
from bipath.generators import random_diagram

INF = math.inf


def m(x):
    return DecValue(x, "-")


def test_examples():
    U010 = Diagram([CI.U(m(0), m(10))])
    assert bottleneck(U010, U010) == 0
    assert bottleneck(U010, Diagram()) == 5
    assert bottleneck(Diagram([CI.whole()]), Diagram()) == INF
    assert brute_force_bottleneck(Diagram(), Diagram()) == 0
    A, B = Diagram([CI.U(m(0), m(4))]), Diagram([CI.U(m(1), m(3))])
    assert brute_force_bottleneck(A, B) == 1
    assert bottleneck(A, B) == 1


def test_verify_examples():
    D1, D2 = Diagram([CI.U(m(0), m(10))]), Diagram()
    assert verify_bottleneck_interleaving(D1, D2, [], 4) is not None
    assert verify_bottleneck_interleaving(D1, D2, [], 5) is None
    D = Diagram([CI.U(m(0), m(1)), CI.whole(), CI.L(m(2), POS_INF_MINUS)])
    assert verify_bottleneck_interleaving(D, D, [(i, i) for i in range(len(D))], 0) is None
    assert verify_bottleneck_interleaving(D, D, [(0, 0), (0, 1)], 0) is not None


def test_brute_force_cap():
    big = Diagram([CI.U(m(i), m(i + 1)) for i in range(9)])
    with pytest.raises(ValueError):
        brute_force_bottleneck(big, Diagram())


def test_unattained_infimum_certificate():
    # [0,1) against [0,1]: any eps > 0 works, eps = 0 does not
    A, B = Diagram([CI.U(m(0), m(1))]), Diagram([CI.U(m(0), DecValue(1, "+"))])
    res = bottleneck_matching(A, B)
    assert res.distance == 0 and not res.attained
    assert res.eps > 0 and verify_bottleneck_interleaving(A, B, res.matching, res.eps) is None
    assert not feasible(A, B, 0)


@pytest.mark.parametrize("seed", range(150))
def test_agrees_with_brute_force(seed):
    rng = np.random.default_rng(seed)
    A = random_diagram(rng, 4)
    B = random_diagram(rng, 8 - len(A))
    d, ref = bottleneck(A, B), brute_force_bottleneck(A, B)
    assert d == ref or abs(d - ref) <= 1e-9


@pytest.mark.parametrize("seed", range(60))
def test_metric_axioms_and_certificates(seed):
    rng = np.random.default_rng(5000 + seed)
    A, B, C = (random_diagram(rng, 5) for _ in range(3))
    ab = bottleneck(A, B)
    assert ab == bottleneck(B, A)
    assert bottleneck(A, A) == 0
    assert bottleneck(A, C) <= ab + bottleneck(B, C) + 1e-9
    res = bottleneck_matching(A, B)
    if res.distance < INF:
        assert verify_bottleneck_interleaving(A, B, res.matching, res.eps) is None
        # feasibility is monotone in eps
        for e in (res.eps, 2 * res.eps + 0.5, res.eps + 10):
            assert feasible(A, B, e)
        if res.distance > 0:
            assert not feasible(A, B, res.distance / 2)
    else:
        assert not feasible(A, B, 1e6)


def test_cross_class_points_never_match():
    A = Diagram([CI.L(m(0), m(0))])
    B = Diagram([CI.R(m(0), m(0))])
    assert bottleneck(A, B) == INF
    A = Diagram([CI.U(m(0), m(1))])
    B = Diagram([CI.D(m(0), m(1))])
    assert bottleneck(A, B) == 0.5


def test_large_diagrams_run():
    rng = np.random.default_rng(9)
    A, B = random_diagram(rng, 150), random_diagram(rng, 150)
    d = bottleneck(A, B)
    assert d == bottleneck(B, A)
