"""Bipath persistent homology: decomposition over B_{n,m} and bottleneck distances."""

from .bottleneck import bottleneck, bottleneck_matching, brute_force_bottleneck, verify_bottleneck_interleaving
from .decorated import DecValue, dec_add, dec_cmp, dec_shift
from .diagram import (
    ContinuousInterval,
    Diagram,
    contained_in_thickening,
    grid_to_continuous,
    is_trivial,
    matching_threshold,
    thicken,
)
from .homology import BipathFunction, SimplicialComplex, build_filtration, compute_module, sup_distance
from .io import InputError, dump_diagram, load_diagram, load_filtration
from .modules import BipathModule, DecompositionError, decompose, hom_dim, realize, validate_module
from .poset import GridInterval, GridPoset, enumerate_intervals, omega
from .stability import fuzz, persistence_diagram, stability_report

__all__ = [
    "BipathFunction",
    "BipathModule",
    "ContinuousInterval",
    "DecValue",
    "DecompositionError",
    "Diagram",
    "GridInterval",
    "GridPoset",
    "InputError",
    "SimplicialComplex",
    "bottleneck",
    "bottleneck_matching",
    "brute_force_bottleneck",
    "build_filtration",
    "compute_module",
    "contained_in_thickening",
    "dec_add",
    "dec_cmp",
    "dec_shift",
    "decompose",
    "dump_diagram",
    "enumerate_intervals",
    "fuzz",
    "grid_to_continuous",
    "hom_dim",
    "is_trivial",
    "load_diagram",
    "load_filtration",
    "matching_threshold",
    "omega",
    "persistence_diagram",
    "realize",
    "stability_report",
    "sup_distance",
    "thicken",
    "validate_module",
    "verify_bottleneck_interleaving",
]
