"""Persistence modules over B_{n,m} and their interval decomposition.

A module is stored by its dimension at every element and one matrix per
structural edge (consecutive elements along the upper and lower paths).
The only relation in B_{n,m} is that the two paths from -inf to +inf
compose to the same map.

Decomposition counts morphisms: for every interval I,
``dim Hom(k_I, V) = sum_J m_V(J) * |Omega(I, J)|``.  In an order where each
J with a nonzero Hom from k_I comes before I, this system is unitriangular
with ones on the diagonal, so the multiplicities fall out by
back-substitution.
"""

from __future__ import annotations

import graphlib
from collections.abc import Mapping
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .poset import GridInterval, GridPoset, enumerate_intervals, hom_order_key, omega, omega_count

GridDiagram = dict[GridInterval, int]


class DecompositionError(RuntimeError):
    """An internal invariant of the decomposition failed."""


@dataclass
class BipathModule:
    poset: GridPoset
    dims: tuple[int, ...]
    maps: dict[tuple[int, int], np.ndarray] = field(default_factory=dict)
    p: int = 2

    def __post_init__(self):
        self.dims = tuple(int(d) for d in self.dims)
        self.p = linalg.check_modulus(self.p)

    def map(self, a: int, b: int) -> np.ndarray:
        return self.maps[(a, b)]

    def path_composite(self, chain: tuple[int, ...]) -> np.ndarray:
        M = linalg.identity(self.dims[chain[0]])
        for a, b in zip(chain, chain[1:]):
            M = linalg.matmul(self.maps[(a, b)], M, self.p)
        return M

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dim == 0


def zero_module(P: GridPoset, p: int = 2) -> BipathModule:
    return BipathModule(P, (0,) * P.size, {e: linalg.zeros(0, 0) for e in P.structural_edges}, p)


def validate_module(V: BipathModule) -> str | None:
    """The first violated constraint, or ``None`` if ``V`` is a functor on B_{n,m}."""
    P = V.poset
    if len(V.dims) != P.size:
        return f"expected {P.size} dimensions, got {len(V.dims)}"
    if any(d < 0 for d in V.dims):
        return "dimensions must be non-negative"
    edges = set(P.structural_edges)
    if set(V.maps) != edges:
        missing = sorted(edges - set(V.maps))
        extra = sorted(set(V.maps) - edges)
        return f"edge maps do not match the covering pairs (missing {missing}, unexpected {extra})"
    for (a, b) in P.structural_edges:
        M = np.asarray(V.maps[(a, b)])
        want = (V.dims[b], V.dims[a])
        if M.shape != want:
            return f"map {P.name(a)}->{P.name(b)} has shape {M.shape}, expected {want}"
        if M.size and (M.min() < 0 or M.max() >= V.p):
            return f"map {P.name(a)}->{P.name(b)} has entries outside GF({V.p})"
    up = V.path_composite(P.upper_chain)
    low = V.path_composite(P.lower_chain)
    if not np.array_equal(up, low):
        return "upper and lower composites from -inf to +inf differ"
    return None


def realize(D: Mapping[GridInterval, int], P: GridPoset | None = None, p: int = 2) -> BipathModule:
    """The direct sum of interval modules k_I^{m(I)}."""
    if P is None:
        if not D:
            raise ValueError("pass the poset explicitly for an empty diagram")
        P = next(iter(D)).poset
    summands = []
    for I in sorted(D, key=GridInterval.sort_key):
        if I.poset != P:
            raise ValueError(f"{I!r} does not live in {P}")
        if D[I] < 0:
            raise ValueError("multiplicities must be non-negative")
        summands += [I] * D[I]
    # basis of V_x: the summands containing x, in summand order
    basis = [[k for k, I in enumerate(summands) if x in I] for x in P.elements()]
    dims = tuple(len(b) for b in basis)
    maps = {}
    for a, b in P.structural_edges:
        M = linalg.zeros(dims[b], dims[a])
        row = {k: r for r, k in enumerate(basis[b])}
        for c, k in enumerate(basis[a]):
            if k in row:
                M[row[k], c] = 1
        maps[(a, b)] = M
    return BipathModule(P, dims, maps, p)


def hom_dim(I: GridInterval, V: BipathModule) -> int:
    """dim Hom(k_I, V), read off the defining linear system.

    Unknowns are vectors v_x in V_x for x in I.  Every structural edge
    x -> y with x in I contributes ``v_y = V(x,y) v_x`` when y is in I and
    ``V(x,y) v_x = 0`` otherwise.
    """
    P = V.poset
    if I.poset != P:
        raise ValueError("interval and module live in different posets")
    nodes = sorted(I.members)
    offset = {}
    cols = 0
    for x in nodes:
        offset[x] = cols
        cols += V.dims[x]
    if cols == 0:
        return 0
    blocks = []
    for a, b in P.structural_edges:
        if a not in I:
            continue
        M = V.maps[(a, b)]
        row = linalg.zeros(V.dims[b], cols)
        row[:, offset[a]:offset[a] + V.dims[a]] = M
        if b in I:
            row[:, offset[b]:offset[b] + V.dims[b]] -= linalg.identity(V.dims[b])
        blocks.append(row)
    if not blocks:
        return cols
    A = np.vstack(blocks) % V.p
    return cols - linalg.rank(A, V.p)


class HomCounter:
    """dim Hom(k_I, V) for many intervals I of a fixed module.

    Every interval is generated by its minimal elements (one, or two for R),
    so the dimension is the kernel dimension of a small block of composite
    path maps.  Agrees with :func:`hom_dim`.
    """

    def __init__(self, V: BipathModule):
        self.V = V
        P = V.poset
        self._up = self._composites(P.upper_chain)
        self._low = self._composites(P.lower_chain)

    def _composites(self, chain):
        V, p = self.V, self.V.p
        out = {}
        for i in range(len(chain)):
            M = linalg.identity(V.dims[chain[i]])
            out[(i, i)] = M
            for j in range(i + 1, len(chain)):
                M = linalg.matmul(V.maps[(chain[j - 1], chain[j])], M, p)
                out[(i, j)] = M
        return out

    def __call__(self, I: GridInterval) -> int:
        V, P, p = self.V, self.V.poset, self.V.p
        kind = I.kind
        if kind == "B":
            return V.dims[P.bottom]
        if kind == "U":
            M = self._up[(I.s, I.t + 1)]
            return V.dims[P.upper(I.s)] - linalg.rank(M, p)
        if kind == "D":
            M = self._low[(I.t, I.s + 1)]
            return V.dims[P.lower(I.t)] - linalg.rank(M, p)
        if kind == "L":
            t = 0 if I.t == -np.inf else int(I.t)
            s = 0 if I.s == -np.inf else int(I.s)
            M = np.vstack([self._up[(0, t + 1)], self._low[(0, s + 1)]])
            return V.dims[P.bottom] - linalg.rank(M, p)
        # R: generators at the lowest upper and lowest lower element
        top_up, top_low = P.n + 1, P.m + 1
        if I.s == np.inf and I.t == np.inf:
            return V.dims[P.top]
        if I.s == np.inf:
            return V.dims[P.lower(int(I.t))]
        if I.t == np.inf:
            return V.dims[P.upper(int(I.s))]
        A = self._up[(int(I.s), top_up)]
        B = self._low[(int(I.t), top_low)]
        M = np.hstack([A, (-B) % p])
        return M.shape[1] - linalg.rank(M, p)


def hom_relation_order(P: GridPoset, intervals: list[GridInterval] | None = None) -> list[GridInterval]:
    """Intervals ordered so that J precedes I whenever Hom(k_I, k_J) != 0.

    Built from the full pairwise relation; raises :class:`DecompositionError`
    if the relation has a cycle.
    """
    if intervals is None:
        intervals = enumerate_intervals(P)
    ts = graphlib.TopologicalSorter()
    for I in intervals:
        ts.add(I)
        for J in intervals:
            if J != I and omega(I, J):
                ts.add(I, J)
    try:
        return list(ts.static_order())
    except graphlib.CycleError as err:
        raise DecompositionError(f"nonzero-Hom relation has a cycle: {err.args[1]}") from err


def decompose(V: BipathModule) -> GridDiagram:
    """The multiset of intervals I with V isomorphic to the sum of k_I^{m(I)}."""
    problem = validate_module(V)
    if problem is not None:
        raise ValueError(f"not a valid bipath module: {problem}")
    P = V.poset
    support = sum(1 << x for x in P.elements() if V.dims[x] > 0)
    # an interval leaving the support cannot occur as a summand
    candidates = sorted(
        (I for I in enumerate_intervals(P) if I.mask & ~support == 0), key=hom_order_key
    )
    count = HomCounter(V)
    found: list[tuple[int, GridInterval, int]] = []
    for pos, I in enumerate(candidates):
        mult = count(I)
        for _, J, mJ in found:
            mult -= mJ * omega_count(I, J)
        if mult < 0:
            raise DecompositionError(f"negative multiplicity {mult} for {I.label()}")
        if mult:
            found.append((pos, I, mult))

    # back-substitution is only valid if no earlier interval maps into a later summand
    for pos, I in enumerate(candidates):
        for posJ, J, _ in found:
            if posJ > pos and omega(I, J):
                raise DecompositionError(
                    f"Hom order violated: {I.label()} maps to later summand {J.label()}"
                )

    diagram = {I: mult for _, I, mult in found}
    for x in P.elements():
        total = sum(mult for I, mult in diagram.items() if x in I)
        if total != V.dims[x]:
            raise DecompositionError(
                f"dimension mismatch at {P.name(x)}: summands give {total}, module has {V.dims[x]}"
            )
    return dict(sorted(diagram.items(), key=lambda kv: kv[0].sort_key()))


def conjugate(V: BipathModule, rng: np.random.Generator) -> BipathModule:
    """An isomorphic copy of ``V`` under a random change of basis at every element."""
    p = V.p
    g = [linalg.random_invertible(d, p, rng) for d in V.dims]
    ginv = [linalg.inverse(G, p) if G.size else G for G in g]
    maps = {}
    for (a, b), M in V.maps.items():
        maps[(a, b)] = linalg.matmul(linalg.matmul(g[b], M, p), ginv[a], p)
    return BipathModule(V.poset, V.dims, maps, p)


def direct_sum(V: BipathModule, W: BipathModule) -> BipathModule:
    if V.poset != W.poset or V.p != W.p:
        raise ValueError("modules must share poset and field")
    dims = tuple(a + b for a, b in zip(V.dims, W.dims))
    maps = {}
    for e in V.poset.structural_edges:
        A, B = V.maps[e], W.maps[e]
        M = linalg.zeros(A.shape[0] + B.shape[0], A.shape[1] + B.shape[1])
        M[: A.shape[0], : A.shape[1]] = A
        M[A.shape[0]:, A.shape[1]:] = B
        maps[e] = M
    return BipathModule(V.poset, dims, maps, V.p)
