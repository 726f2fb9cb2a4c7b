"""Simplicial complexes, bipath functions and their persistent homology modules."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Hashable, Iterable, Sequence

import numpy as np

from . import linalg
from .modules import BipathModule
from .poset import GridPoset

INF = math.inf


@dataclass(frozen=True)
class SimplicialComplex:
    vertices: tuple[Hashable, ...]
    simplices: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        nv = len(self.vertices)
        if len(set(self.vertices)) != nv:
            raise ValueError("duplicate vertex labels")
        canon = []
        for s in self.simplices:
            t = tuple(sorted(s))
            if not t:
                raise ValueError("empty simplex")
            if len(set(t)) != len(t):
                raise ValueError(f"repeated vertex in simplex {s}")
            if t[0] < 0 or t[-1] >= nv:
                raise ValueError(f"simplex {s} uses an unknown vertex")
            canon.append(t)
        if len(set(canon)) != len(canon):
            raise ValueError("duplicate simplices")
        object.__setattr__(self, "simplices", tuple(canon))
        present = set(canon)
        for t in canon:
            for k in range(1, len(t)):
                for face in combinations(t, k):
                    if face not in present:
                        raise ValueError(f"not closed under faces: {self.label(t)} lacks {self.label(face)}")

    @classmethod
    def from_maximal(cls, vertices: Sequence[Hashable], maximal: Iterable[Iterable[int]]) -> SimplicialComplex:
        faces = set()
        for s in maximal:
            s = tuple(sorted(s))
            for k in range(1, len(s) + 1):
                faces.update(combinations(s, k))
        return cls(tuple(vertices), tuple(sorted(faces, key=lambda t: (len(t), t))))

    def label(self, simplex: Sequence[int]) -> str:
        return "{" + ",".join(str(self.vertices[v]) for v in simplex) + "}"

    @cached_property
    def index(self) -> dict[tuple[int, ...], int]:
        return {s: i for i, s in enumerate(self.simplices)}

    @property
    def dim(self) -> int:
        return max((len(s) - 1 for s in self.simplices), default=-1)

    @cached_property
    def by_dim(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for i, s in enumerate(self.simplices):
            out.setdefault(len(s) - 1, []).append(i)
        return out

    def facets_of(self, i: int) -> list[int]:
        s = self.simplices[i]
        if len(s) == 1:
            return []
        return [self.index[s[:k] + s[k + 1:]] for k in range(len(s))]

    def boundary(self, q: int, p: int) -> np.ndarray:
        """Matrix of the boundary map from q-chains to (q-1)-chains over GF(p)."""
        cols = self.by_dim.get(q, [])
        rows = self.by_dim.get(q - 1, []) if q > 0 else []
        pos = {i: r for r, i in enumerate(rows)}
        M = linalg.zeros(len(rows), len(cols))
        if q == 0:
            return M
        for c, i in enumerate(cols):
            s = self.simplices[i]
            for k in range(len(s)):
                M[pos[self.index[s[:k] + s[k + 1:]]], c] = (-1) ** k % p
        return M


@dataclass(frozen=True)
class BipathFunction:
    """Values of the two arms on every simplex; entries are reals or +-inf."""

    f1: tuple[float, ...]
    f2: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "f1", tuple(float(x) for x in self.f1))
        object.__setattr__(self, "f2", tuple(float(x) for x in self.f2))
        if any(math.isnan(x) for x in self.f1 + self.f2):
            raise ValueError("function values cannot be NaN")

    @classmethod
    def lower_star(cls, K: SimplicialComplex, v1: Sequence[float], v2: Sequence[float]) -> BipathFunction:
        """Extend vertex values to simplices by taking the maximum over vertices."""
        if len(v1) != len(K.vertices) or len(v2) != len(K.vertices):
            raise ValueError("need one value per vertex on each arm")
        f1 = tuple(max(float(v1[v]) for v in s) for s in K.simplices)
        f2 = tuple(max(float(v2[v]) for v in s) for s in K.simplices)
        return cls(f1, f2)

    def violations(self, K: SimplicialComplex) -> list[str]:
        out = []
        if len(self.f1) != len(K.simplices) or len(self.f2) != len(K.simplices):
            return [f"expected {len(K.simplices)} values per arm, got {len(self.f1)} and {len(self.f2)}"]
        for i, s in enumerate(K.simplices):
            if (self.f1[i] == -INF) != (self.f2[i] == -INF):
                out.append(f"{K.label(s)}: f1 and f2 must be -inf together (common -inf fiber)")
        for i in range(len(K.simplices)):
            for j in K.facets_of(i):
                for arm, f in ((1, self.f1), (2, self.f2)):
                    if f[j] > f[i]:
                        out.append(
                            f"f{arm} decreases from face {K.label(K.simplices[j])} to {K.label(K.simplices[i])}"
                        )
        return out

    def neg_inf_fiber(self) -> frozenset[int]:
        return frozenset(i for i, x in enumerate(self.f1) if x == -INF)


@dataclass(frozen=True)
class BipathFiltration:
    complex: SimplicialComplex
    upper: tuple[float, ...]
    lower: tuple[float, ...]
    members: tuple[frozenset[int], ...]

    @property
    def poset(self) -> GridPoset:
        return GridPoset(len(self.upper), len(self.lower))


def build_filtration(K: SimplicialComplex, f: BipathFunction) -> BipathFiltration:
    """Sublevel sets of ``f`` at every element of its critical grid."""
    problems = f.violations(K)
    if problems:
        raise ValueError("; ".join(problems))
    upper = tuple(sorted({x for x in f.f1 if math.isfinite(x)}))
    lower = tuple(sorted({x for x in f.f2 if math.isfinite(x)}))
    idx = range(len(K.simplices))
    members = [frozenset(i for i in idx if f.f1[i] == -INF)]
    members += [frozenset(i for i in idx if f.f1[i] <= u) for u in upper]
    members += [frozenset(i for i in idx if f.f2[i] <= v) for v in lower]
    members.append(frozenset(idx))
    return BipathFiltration(K, upper, lower, tuple(members))


@dataclass
class _NodeHomology:
    cycles: np.ndarray  # columns: cycle basis in global q-chain coordinates
    quotient: linalg.Quotient

    @property
    def reps(self) -> np.ndarray:
        return linalg.matmul(self.cycles, self.quotient.complement, self.quotient.p)


def _node_homology(F: BipathFiltration, q: int, p: int, dq: np.ndarray, dq1: np.ndarray, b: int) -> _NodeHomology:
    K = F.complex
    qs = K.by_dim.get(q, [])
    q1s = K.by_dim.get(q + 1, [])
    here = F.members[b]
    cols = [c for c, i in enumerate(qs) if i in here]
    ker = linalg.nullspace_basis(dq[:, cols], p) if dq.shape[0] else linalg.identity(len(cols))
    Z = linalg.zeros(len(qs), ker.shape[1])
    Z[cols] = ker
    bcols = [c for c, i in enumerate(q1s) if i in here]
    bnd = linalg.independent_columns(dq1[:, bcols], p) if bcols else linalg.zeros(len(qs), 0)
    coords = linalg.solve(Z, bnd, p) if bnd.shape[1] else linalg.zeros(Z.shape[1], 0)
    if coords is None:
        raise AssertionError("boundaries are not cycles")
    return _NodeHomology(Z, linalg.quotient_map(coords, Z.shape[1], p))


def compute_module(F: BipathFiltration, q: int, p: int = 2) -> BipathModule:
    """Degree-q homology of every sublevel set, with inclusion-induced maps."""
    if q < 0:
        raise ValueError("degree must be non-negative")
    p = linalg.check_modulus(p)
    P = F.poset
    K = F.complex
    dq = K.boundary(q, p)
    dq1 = K.boundary(q + 1, p)
    nodes = [_node_homology(F, q, p, dq, dq1, b) for b in P.elements()]
    dims = tuple(h.quotient.dim for h in nodes)
    maps = {}
    for a, b in P.structural_edges:
        src, dst = nodes[a], nodes[b]
        reps = src.reps
        if reps.shape[1] == 0 or dst.quotient.dim == 0:
            maps[(a, b)] = linalg.zeros(dst.quotient.dim, src.quotient.dim)
            continue
        coords = linalg.solve(dst.cycles, reps, p)
        if coords is None:
            raise AssertionError("sublevel sets are not nested")
        maps[(a, b)] = dst.quotient.project(coords)
    return BipathModule(P, dims, maps, p)


def sup_distance(f: BipathFunction, g: BipathFunction) -> float:
    """The sup over simplices and arms of the bipath-valued distance."""
    if len(f.f1) != len(g.f1) or len(f.f2) != len(g.f2):
        raise ValueError("functions live on different complexes")
    worst = 0.0
    for x, y in zip(f.f1 + f.f2, g.f1 + g.f2):
        if math.isfinite(x) and math.isfinite(y):
            worst = max(worst, abs(x - y))
        elif x != y:
            return INF
    return worst


def perturb(
    K: SimplicialComplex,
    f: BipathFunction,
    delta: float,
    rng: np.random.Generator,
    vertex_values: tuple[Sequence[float], Sequence[float]] | None = None,
) -> BipathFunction:
    """Add uniform noise in [-delta, delta] to every finite value.

    With ``vertex_values`` the noise goes on the vertices and is extended by
    the lower-star rule.  Otherwise each simplex is perturbed and values are
    raised to the maximum over faces, which keeps the result monotone and
    within delta of ``f``.
    """

    def noisy(vals):
        vals = np.asarray(vals, dtype=float)
        out = vals + rng.uniform(-delta, delta, size=vals.shape)
        return np.where(np.isfinite(vals), out, vals)

    if vertex_values is not None:
        return BipathFunction.lower_star(K, noisy(vertex_values[0]), noisy(vertex_values[1]))
    arms = []
    for vals in (f.f1, f.f2):
        g = noisy(vals)
        for i in sorted(range(len(K.simplices)), key=lambda i: len(K.simplices[i])):
            for j in K.facets_of(i):
                g[i] = max(g[i], g[j])
        arms.append(tuple(g))
    return BipathFunction(*arms)
