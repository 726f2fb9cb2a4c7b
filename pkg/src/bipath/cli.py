"""Command-line interface.

Exit codes: 0 success, 1 bad input, 2 internal invariant violation.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from pathlib import Path

import numpy as np

from .bottleneck import BRUTE_FORCE_CAP, bottleneck, brute_force_bottleneck
from .io import InputError, read_json, diagram_csv, dump_diagram, load_diagram, load_filtration
from .modules import DecompositionError
from .stability import TOLERANCE, fuzz, persistence_diagram, stability_report


class InternalError(RuntimeError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # usage mistakes are user errors, not internal ones
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _fmt(x: float) -> str:
    return "inf" if x == math.inf else f"{x:.9f}"


def cmd_validate(args) -> int:
    doc = read_json(args.file)
    if isinstance(doc, dict) and "points" in doc:
        D = load_diagram(doc)
        print(f"ok: diagram with {len(D.diagram)} points")
    else:
        F = load_filtration(doc)
        print(f"ok: filtration on {len(F.complex.simplices)} simplices")
    return 0


def cmd_diagram(args) -> int:
    F = load_filtration(args.input)
    D = persistence_diagram(F.complex, F.function, args.degree, F.field)
    Path(args.output).write_text(dump_diagram(D, F.field, args.degree))
    if args.plot:
        from .plotting import render_diagram

        csv_path = Path(args.plot)
        csv_path.write_text(diagram_csv(D))
        render_diagram(D, csv_path.with_suffix(".png"), title=f"H{args.degree}")
    print(f"{len(D)} points written to {args.output}")
    return 0


def cmd_distance(args) -> int:
    A, B = load_diagram(args.a), load_diagram(args.b)
    if (A.field, A.degree) != (B.field, B.degree):
        print(
            f"warning: comparing field {A.field} degree {A.degree} with field {B.field} degree {B.degree}",
            file=sys.stderr,
        )
    d = bottleneck(A.diagram, B.diagram)
    if args.oracle:
        if len(A.diagram) + len(B.diagram) > BRUTE_FORCE_CAP:
            raise InputError(f"--oracle supports at most {BRUTE_FORCE_CAP} points in total")
        ref = brute_force_bottleneck(A.diagram, B.diagram)
        same = d == ref or abs(d - ref) <= TOLERANCE
        if not same:
            raise InternalError(f"oracle disagreement: matching gives {d!r}, brute force gives {ref!r}")
    print(_fmt(d))
    return 0


def _same_complex(F, G) -> bool:
    return F.complex.vertices == G.complex.vertices and set(F.complex.simplices) == set(G.complex.simplices)


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("BIPATH_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise InputError(f"BIPATH_SEED must be an integer, got {env!r}") from None


def cmd_stability(args) -> int:
    F = load_filtration(args.f)
    if args.trials is None:
        if args.g is None:
            raise InputError("give --g for a single comparison or --trials for fuzzing")
        G = load_filtration(args.g)
        if not _same_complex(F, G):
            raise InputError("f and g must be defined on the same complex")
        # align g's values with f's simplex order
        order = [G.complex.index[s] for s in F.complex.simplices]
        g = type(G.function)(tuple(G.function.f1[i] for i in order), tuple(G.function.f2[i] for i in order))
        rep = stability_report(F.complex, F.function, g, args.degree, F.field)
        if rep.holds is None:
            raise InputError("hypothesis violated: f and g must share the same -inf fiber on both arms")
        verdict = "PASS" if rep.holds else "FAIL"
        print(f"lhs={_fmt(rep.lhs)} rhs={_fmt(rep.rhs)} {verdict}")
        return 0 if rep.holds else 2
    if args.noise < 0 or args.trials < 0:
        raise InputError("--noise and --trials must be non-negative")
    rng = np.random.default_rng(_seed(args))
    reports = fuzz(F.complex, F.function, args.degree, args.trials, args.noise, rng, F.field, F.vertex_values)
    passed = sum(r.holds for r in reports)
    worst = max((r.lhs - r.rhs for r in reports), default=0.0)
    print(f"{passed}/{len(reports)} trials passed (max lhs-rhs {worst:.9f})")
    return 0 if passed == len(reports) else 2


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bipath", description="Bipath persistent homology and bottleneck distances.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("validate", help="check a filtration or diagram file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("diagram", help="compute the persistence diagram of a filtration")
    p.add_argument("--input", required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--plot", help="CSV of plot coordinates; a PNG is written next to it")
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("distance", help="bottleneck distance between two diagram files")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--oracle", action="store_true", help="cross-check against brute-force enumeration")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("stability", help="compare diagram distance with function distance")
    p.add_argument("--f", required=True)
    p.add_argument("--g")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--trials", type=int)
    p.add_argument("--noise", type=float, default=0.1)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_stability)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "degree", 0) is not None and getattr(args, "degree", 0) < 0:
        print("error: degree must be non-negative", file=sys.stderr)
        return 1
    try:
        return args.func(args)
    except InputError as err:
        for problem in err.problems:
            print(f"error: {problem}", file=sys.stderr)
        return 1
    except (DecompositionError, InternalError, AssertionError) as err:
        print(f"internal error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
