"""Bottleneck distance between bipath persistence diagrams.

A matching at radius eps pairs points whose mutual thickening containments
hold and leaves unmatched only points that are 2*eps-trivial.  Feasibility at
a fixed eps is a perfect-matching question on the usual augmented bipartite
graph (every point also gets a diagonal partner), and it is monotone in eps,
so the distance is found by binary search over the finitely many threshold
values where the graph can change.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from .diagram import (
    ContinuousInterval,
    Diagram,
    Threshold,
    contained_in_thickening,
    is_trivial,
    matching_threshold,
    tmax,
    triviality_threshold,
)

INF = math.inf
BRUTE_FORCE_CAP = 8

Matching = list[tuple[int, int]]


@dataclass(frozen=True)
class BottleneckResult:
    distance: float
    attained: bool
    eps: float | None
    """Radius at which ``matching`` is a valid certificate; ``None`` if infinite."""
    matching: Matching | None


class _Instance:
    def __init__(self, D1: Diagram, D2: Diagram):
        self.A = D1.points()
        self.B = D2.points()
        self.pair = [[matching_threshold(a, b) for b in self.B] for a in self.A]
        self.triv_a = [triviality_threshold(a) for a in self.A]
        self.triv_b = [triviality_threshold(b) for b in self.B]

    def candidates(self) -> list[float]:
        vals = {0.0}
        for row in self.pair:
            vals.update(t.value for t in row)
        vals.update(t.value for t in self.triv_a + self.triv_b)
        return sorted(v for v in vals if v < INF)

    def matching(self, eps: float, limit: bool) -> Matching | None:
        """A perfect matching of the augmented graph, as real pairs, or None."""
        na, nb = len(self.A), len(self.B)
        ok = Threshold.holds_in_limit if limit else Threshold.holds
        # left: A points, then diagonal copies of B; right: B points, then diagonal copies of A
        rows, cols = [], []
        for i in range(na):
            for j in range(nb):
                if ok(self.pair[i][j], eps):
                    rows.append(i)
                    cols.append(j)
            if ok(self.triv_a[i], eps):
                rows.append(i)
                cols.append(nb + i)
        for j in range(nb):
            if ok(self.triv_b[j], eps):
                rows.append(na + j)
                cols.append(j)
            for i in range(na):
                rows.append(na + j)
                cols.append(nb + i)
        n = na + nb
        if n == 0:
            return []
        graph = csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(n, n))
        match = maximum_bipartite_matching(graph, perm_type="column")
        if (match < 0).any():
            return None
        return [(i, int(match[i])) for i in range(na) if match[i] < nb]


def bottleneck_matching(D1: Diagram, D2: Diagram) -> BottleneckResult:
    inst = _Instance(D1, D2)
    cand = inst.candidates()
    lo, hi = 0, len(cand) - 1
    if inst.matching(cand[hi], limit=True) is None:
        return BottleneckResult(INF, False, None, None)
    while lo < hi:
        mid = (lo + hi) // 2
        if inst.matching(cand[mid], limit=True) is not None:
            hi = mid
        else:
            lo = mid + 1
    dist = cand[lo]
    exact = inst.matching(dist, limit=False)
    if exact is not None:
        return BottleneckResult(dist, True, dist, exact)
    # infimum not attained: any radius strictly between dist and the next candidate works
    nxt = cand[lo + 1] if lo + 1 < len(cand) else dist + 1.0
    eps = (dist + nxt) / 2
    if not dist < eps < nxt:
        eps = nxt
    cert = inst.matching(eps, limit=False)
    assert cert is not None
    return BottleneckResult(dist, False, eps, cert)


def bottleneck(D1: Diagram, D2: Diagram) -> float:
    return bottleneck_matching(D1, D2).distance


def feasible(D1: Diagram, D2: Diagram, eps: float) -> bool:
    """A matching exists at exactly radius eps."""
    return _Instance(D1, D2).matching(eps, limit=False) is not None


def brute_force_bottleneck(D1: Diagram, D2: Diagram) -> float:
    """Minimum over every partial matching of its worst threshold."""
    A, B = D1.points(), D2.points()
    if len(A) + len(B) > BRUTE_FORCE_CAP:
        raise ValueError(f"brute force is limited to {BRUTE_FORCE_CAP} points in total")
    best = INF
    for k in range(min(len(A), len(B)) + 1):
        for left in itertools.combinations(range(len(A)), k):
            for right in itertools.permutations(range(len(B)), k):
                ts = [matching_threshold(A[i], B[j]) for i, j in zip(left, right)]
                ts += [triviality_threshold(A[i]) for i in range(len(A)) if i not in left]
                ts += [triviality_threshold(B[j]) for j in range(len(B)) if j not in right]
                best = min(best, tmax(*ts).value)
    return best


def verify_bottleneck_interleaving(D1: Diagram, D2: Diagram, matching: Matching, eps: float) -> str | None:
    """Check that ``matching`` (index pairs into the point lists) is an
    eps-matching; return the first violation or ``None``."""
    A, B = D1.points(), D2.points()
    seen_a, seen_b = set(), set()
    for i, j in matching:
        if not (0 <= i < len(A) and 0 <= j < len(B)):
            return f"pair ({i}, {j}) is out of range"
        if i in seen_a or j in seen_b:
            return f"pair ({i}, {j}) reuses a point"
        seen_a.add(i)
        seen_b.add(j)
    for idx, I in enumerate(A):
        if idx not in seen_a and not is_trivial(I, 2 * eps):
            return f"unmatched {I!r} is not {2 * eps}-trivial"
    for idx, J in enumerate(B):
        if idx not in seen_b and not is_trivial(J, 2 * eps):
            return f"unmatched {J!r} is not {2 * eps}-trivial"
    for i, j in matching:
        if not interleaved(A[i], B[j], eps):
            return f"{A[i]!r} and {B[j]!r} are not {eps}-interleaved"
    return None


def interleaved(I: ContinuousInterval, J: ContinuousInterval, eps: float) -> bool:
    """Whether the interval modules of I and J are eps-interleaved."""
    both_trivial = is_trivial(I, 2 * eps) and is_trivial(J, 2 * eps)
    return both_trivial or (contained_in_thickening(J, I, eps) and contained_in_thickening(I, J, eps))
