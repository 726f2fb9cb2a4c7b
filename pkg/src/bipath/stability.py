"""From bipath functions to diagrams, and the stability check between two functions."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .bottleneck import bottleneck
from .diagram import Diagram, diagram_from_grid
from .homology import BipathFunction, SimplicialComplex, build_filtration, compute_module, perturb, sup_distance
from .modules import decompose

TOLERANCE = 1e-9


def persistence_diagram(K: SimplicialComplex, f: BipathFunction, q: int, p: int = 2) -> Diagram:
    F = build_filtration(K, f)
    grid = decompose(compute_module(F, q, p))
    return diagram_from_grid(grid, F.upper, F.lower)


@dataclass(frozen=True)
class StabilityReport:
    lhs: float
    rhs: float
    holds: bool | None
    message: str = ""


def stability_report(K: SimplicialComplex, f: BipathFunction, g: BipathFunction, q: int, p: int = 2) -> StabilityReport:
    """Compare the bottleneck distance of the diagrams with the sup distance of the functions.

    ``holds`` is ``None`` when f and g do not share their -inf fiber, since
    the bound is only claimed under that hypothesis.
    """
    n = len(K.simplices)
    if len(f.f1) != n or len(g.f1) != n:
        raise ValueError("both functions must be defined on every simplex of the complex")
    rhs = sup_distance(f, g)
    if f.neg_inf_fiber() != g.neg_inf_fiber():
        return StabilityReport(math.nan, rhs, None, "f and g have different -inf fibers")
    lhs = bottleneck(persistence_diagram(K, f, q, p), persistence_diagram(K, g, q, p))
    return StabilityReport(lhs, rhs, lhs <= rhs + TOLERANCE)


def fuzz(
    K: SimplicialComplex,
    f: BipathFunction,
    q: int,
    trials: int,
    noise: float,
    rng: np.random.Generator,
    p: int = 2,
    vertex_values: tuple[Sequence[float], Sequence[float]] | None = None,
) -> list[StabilityReport]:
    """Stability reports for ``trials`` random perturbations of f of size at most ``noise``."""
    base = persistence_diagram(K, f, q, p)
    out = []
    for _ in range(trials):
        g = perturb(K, f, noise, rng, vertex_values)
        lhs = bottleneck(base, persistence_diagram(K, g, q, p))
        rhs = sup_distance(f, g)
        out.append(StabilityReport(lhs, rhs, lhs <= rhs + TOLERANCE))
    return out
