"""Random inputs for property tests and fuzzing."""

from __future__ import annotations

import math
from itertools import combinations

import numpy as np

from .decorated import DecValue
from .diagram import ContinuousInterval, Diagram
from .homology import BipathFunction, SimplicialComplex
from .modules import GridDiagram
from .poset import GridPoset, enumerate_intervals


def random_grid_diagram(P: GridPoset, rng: np.random.Generator, max_terms: int = 6, max_mult: int = 3) -> GridDiagram:
    pool = enumerate_intervals(P)
    k = int(rng.integers(0, max_terms + 1))
    picks = rng.choice(len(pool), size=min(k, len(pool)), replace=False)
    return {pool[i]: int(rng.integers(1, max_mult + 1)) for i in picks}


def _dec(rng, values) -> DecValue:
    return DecValue(float(rng.choice(values)), "-+"[int(rng.integers(2))])


def random_interval(rng: np.random.Generator, values=(0.0, 0.5, 1.0, 1.5, 2.0, 3.0)) -> ContinuousInterval:
    """An interval with endpoints drawn from a small value set so ties are common."""
    kind = "UDBLR"[int(rng.choice(5, p=[0.3, 0.3, 0.1, 0.15, 0.15]))]
    if kind == "B":
        return ContinuousInterval.whole()
    ext = [*values, -math.inf, math.inf]
    if kind in "UD":
        while True:
            a = _dec(rng, [*values, -math.inf])
            b = _dec(rng, [*values, math.inf])
            if a.value == -math.inf:
                a = DecValue(a.value, "+")
            if b.value == math.inf:
                b = DecValue(b.value, "-")
            if a < b:
                return ContinuousInterval(kind, a, b)
    return ContinuousInterval(kind, _dec(rng, ext), _dec(rng, ext))


def random_diagram(rng: np.random.Generator, max_points: int = 4, **kw) -> Diagram:
    n = int(rng.integers(0, max_points + 1))
    return Diagram([random_interval(rng, **kw) for _ in range(n)])


def random_complex(rng: np.random.Generator, max_vertices: int = 12, p_edge: float = 0.4, p_tri: float = 0.5) -> SimplicialComplex:
    """A random complex of dimension at most two: an Erdos-Renyi graph with
    some of its triangles filled."""
    nv = int(rng.integers(1, max_vertices + 1))
    edges = [e for e in combinations(range(nv), 2) if rng.random() < p_edge]
    eset = set(edges)
    tris = [
        t
        for t in combinations(range(nv), 3)
        if {(t[0], t[1]), (t[0], t[2]), (t[1], t[2])} <= eset and rng.random() < p_tri
    ]
    simplices = [(v,) for v in range(nv)] + edges + tris
    return SimplicialComplex(tuple(f"v{i}" for i in range(nv)), tuple(simplices))


def random_vertex_values(
    rng: np.random.Generator, nv: int, p_neg_inf: float = 0.15, p_pos_inf: float = 0.05
) -> tuple[np.ndarray, np.ndarray]:
    """Vertex values for both arms; -inf on a shared random subset, occasional +inf, ties likely."""
    neg = rng.random(nv) < p_neg_inf
    out = []
    for _ in range(2):
        v = np.round(rng.uniform(0, 5, size=nv), 1)
        v[rng.random(nv) < p_pos_inf] = math.inf
        v[neg] = -math.inf
        out.append(v)
    return out[0], out[1]


def random_lower_star(rng: np.random.Generator, K: SimplicialComplex) -> tuple[BipathFunction, tuple]:
    v1, v2 = random_vertex_values(rng, len(K.vertices))
    return BipathFunction.lower_star(K, v1, v2), (v1, v2)
