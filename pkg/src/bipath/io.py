"""JSON and CSV formats for filtrations and diagrams."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from . import linalg
from .decorated import DecValue, format_real, parse_real
from .diagram import ContinuousInterval, Diagram
from .homology import BipathFunction, SimplicialComplex


class InputError(ValueError):
    """A user-supplied file is malformed or violates an invariant."""

    def __init__(self, problems: list[str] | str):
        self.problems = [problems] if isinstance(problems, str) else list(problems)
        super().__init__("; ".join(self.problems))


def read_json(source) -> Any:
    if isinstance(source, (dict, list)):
        return source
    try:
        return json.loads(Path(source).read_text())
    except json.JSONDecodeError as err:
        raise InputError(f"{source}: invalid JSON ({err.msg} at line {err.lineno})") from err
    except OSError as err:
        raise InputError(f"{source}: {err.strerror}") from err


def _field(doc: dict) -> int:
    p = doc.get("field", 2)
    try:
        if isinstance(p, bool) or not isinstance(p, int):
            raise ValueError
        return linalg.check_modulus(p)
    except ValueError:
        raise InputError(f"field must be a prime integer, got {p!r}") from None


def _real(v, where: str) -> float:
    try:
        return parse_real(v)
    except ValueError as err:
        raise InputError(f"{where}: {err}") from None


@dataclass(frozen=True)
class FiltrationFile:
    complex: SimplicialComplex
    function: BipathFunction
    field: int
    mode: str
    vertex_values: tuple[tuple[float, ...], tuple[float, ...]] | None = None


def load_filtration(source) -> FiltrationFile:
    """Parse and validate a filtration file; raises :class:`InputError` listing violations."""
    doc = read_json(source)
    if not isinstance(doc, dict):
        raise InputError("filtration file must be a JSON object")
    p = _field(doc)
    mode = doc.get("mode", "simplexwise")
    if mode not in ("simplexwise", "lower-star"):
        raise InputError(f"mode must be 'simplexwise' or 'lower-star', got {mode!r}")
    labels = doc.get("vertices")
    if not isinstance(labels, list) or not all(isinstance(v, (str, int)) for v in labels):
        raise InputError("'vertices' must be a list of labels")
    labels = [str(v) for v in labels]
    if len(set(labels)) != len(labels):
        raise InputError("duplicate vertex labels")
    pos = {v: i for i, v in enumerate(labels)}
    entries = doc.get("simplices")
    if not isinstance(entries, list):
        raise InputError("'simplices' must be a list")

    problems = []
    simplices, values = [], []
    for k, e in enumerate(entries):
        where = f"simplices[{k}]"
        if not isinstance(e, dict) or not isinstance(e.get("verts"), list) or not e["verts"]:
            problems.append(f"{where}: needs a non-empty 'verts' list")
            continue
        verts = [str(v) for v in e["verts"]]
        unknown = [v for v in verts if v not in pos]
        if unknown:
            problems.append(f"{where}: unknown vertices {unknown}")
            continue
        has_values = "f1" in e or "f2" in e
        if mode == "simplexwise" or len(verts) == 1:
            if "f1" not in e or "f2" not in e:
                problems.append(f"{where}: needs both f1 and f2")
                continue
            try:
                values.append((parse_real(e["f1"]), parse_real(e["f2"])))
            except ValueError as err:
                problems.append(f"{where}: {err}")
                continue
        elif has_values:
            problems.append(f"{where}: lower-star mode takes values on vertices only")
            continue
        else:
            values.append(None)
        simplices.append(tuple(pos[v] for v in verts))
    if problems:
        raise InputError(problems)

    try:
        K = SimplicialComplex(tuple(labels), tuple(simplices))
    except ValueError as err:
        raise InputError(str(err)) from None
    vertex_values = None
    if mode == "lower-star":
        v1 = [math.nan] * len(labels)
        v2 = [math.nan] * len(labels)
        for s, val in zip(K.simplices, values):
            if len(s) == 1:
                v1[s[0]], v2[s[0]] = val
        missing = [labels[i] for i in range(len(labels)) if math.isnan(v1[i])]
        if missing:
            raise InputError(f"lower-star mode needs a value on every vertex; missing {missing}")
        vertex_values = (tuple(v1), tuple(v2))
        f = BipathFunction.lower_star(K, v1, v2)
    else:
        f = BipathFunction(tuple(v[0] for v in values), tuple(v[1] for v in values))
    problems = f.violations(K)
    if problems:
        raise InputError(problems)
    return FiltrationFile(K, f, p, mode, vertex_values)


def dump_filtration(F: FiltrationFile) -> str:
    K, f = F.complex, F.function
    simplices = []
    for i, s in enumerate(K.simplices):
        entry: dict[str, Any] = {"verts": [K.vertices[v] for v in s]}
        if F.mode == "simplexwise" or len(s) == 1:
            entry["f1"] = _num(f.f1[i])
            entry["f2"] = _num(f.f2[i])
        simplices.append(entry)
    doc = {"field": F.field, "mode": F.mode, "vertices": list(K.vertices), "simplices": simplices}
    return json.dumps(doc, indent=2) + "\n"


def _num(x: float):
    if math.isinf(x):
        return format_real(x)
    return int(x) if x == int(x) and abs(x) < 2**53 else x


def _dec_json(d: DecValue) -> dict:
    return {"v": _num(d.value), "dec": d.dec}


def _dec_parse(obj, where: str) -> DecValue:
    if not isinstance(obj, dict) or "v" not in obj or obj.get("dec") not in ("-", "+"):
        raise InputError(f"{where}: expected {{'v': number, 'dec': '-' or '+'}}")
    return DecValue(_real(obj["v"], where), obj["dec"])


_ENDPOINT_KEYS = {"U": ("birth", "death"), "D": ("birth", "death"), "L": ("upper", "lower"), "R": ("upper", "lower")}


@dataclass(frozen=True)
class DiagramFile:
    diagram: Diagram
    field: int
    degree: int


def load_diagram(source) -> DiagramFile:
    doc = read_json(source)
    if not isinstance(doc, dict):
        raise InputError("diagram file must be a JSON object")
    p = _field(doc)
    q = doc.get("degree", 0)
    if isinstance(q, bool) or not isinstance(q, int) or q < 0:
        raise InputError(f"degree must be a non-negative integer, got {q!r}")
    pts = doc.get("points")
    if not isinstance(pts, list):
        raise InputError("'points' must be a list")
    counts: dict[ContinuousInterval, int] = {}
    problems = []
    for k, e in enumerate(pts):
        where = f"points[{k}]"
        try:
            if not isinstance(e, dict):
                raise InputError(f"{where}: expected an object")
            kind = e.get("type")
            mult = e.get("mult", 1)
            if isinstance(mult, bool) or not isinstance(mult, int) or mult < 1:
                raise InputError(f"{where}: mult must be a positive integer")
            if kind == "B":
                I = ContinuousInterval.whole()
            elif kind in _ENDPOINT_KEYS:
                ka, kb = _ENDPOINT_KEYS[kind]
                I = ContinuousInterval(kind, _dec_parse(e.get(ka), f"{where}.{ka}"), _dec_parse(e.get(kb), f"{where}.{kb}"))
            else:
                raise InputError(f"{where}: type must be one of U, D, B, L, R")
        except InputError as err:
            problems += err.problems
            continue
        except ValueError as err:
            problems.append(f"{where}: {err}")
            continue
        counts[I] = counts.get(I, 0) + mult
    if problems:
        raise InputError(problems)
    return DiagramFile(Diagram(counts), p, q)


def dump_diagram(D: Diagram, field: int, degree: int) -> str:
    points = []
    for I, mult in D.items():
        entry: dict[str, Any] = {"type": I.kind}
        if I.kind != "B":
            ka, kb = _ENDPOINT_KEYS[I.kind]
            entry[ka] = _dec_json(I.a)
            entry[kb] = _dec_json(I.b)
        entry["mult"] = mult
        points.append(entry)
    return json.dumps({"field": field, "degree": degree, "points": points}, indent=2) + "\n"


def plot_coordinates(I: ContinuousInterval) -> tuple[float, float]:
    """The (s, t) plotting position of an interval; B gets (-inf, +inf)."""
    if I.kind == "B":
        return (-math.inf, math.inf)
    if I.kind == "U":
        return (I.a.value, I.b.value)
    if I.kind == "D":
        return (I.b.value, I.a.value)
    if I.kind == "L":
        return (I.b.value, I.a.value)
    return (I.a.value, I.b.value)


def diagram_csv(D: Diagram) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["type", "s", "t", "mult"])
    for I, mult in D.items():
        s, t = plot_coordinates(I)
        w.writerow([I.kind, format_real(s), format_real(t), mult])
    return buf.getvalue()
