import csv
import json
import shutil
import subprocess
from pathlib import Path

import pytest

from bipath.cli import main
from bipath.decorated import DecValue
from bipath.diagram import ContinuousInterval as CI
from bipath.diagram import Diagram
from bipath.io import dump_diagram, dump_filtration, load_diagram, load_filtration

DATA = Path(__file__).parent / "data"
TRIANGLE = DATA / "hollow_triangle.json"


def write(path, obj):
    path.write_text(json.dumps(obj))
    return str(path)


def diagram_doc(points, degree=0):
    return {"field": 2, "degree": degree, "points": points}


U010 = {"type": "U", "birth": {"v": 0, "dec": "-"}, "death": {"v": 10, "dec": "-"}, "mult": 1}


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_validate(tmp_path, capsys):
    assert run(capsys, "validate", str(TRIANGLE))[0] == 0
    doc = json.loads(TRIANGLE.read_text())
    doc["simplices"] = [s for s in doc["simplices"] if s["verts"] != ["c"]]
    code, _, err = run(capsys, "validate", write(tmp_path / "open.json", doc))
    assert code == 1 and "closed under faces" in err
    doc = json.loads(TRIANGLE.read_text())
    doc["simplices"][0]["f2"] = 0
    code, _, err = run(capsys, "validate", write(tmp_path / "fiber.json", doc))
    assert code == 1 and "-inf together" in err
    assert run(capsys, "validate", write(tmp_path / "d.json", diagram_doc([U010])))[0] == 0


def test_diagram_command(tmp_path, capsys):
    out, plot = tmp_path / "d0.json", tmp_path / "d0.csv"
    code, _, _ = run(capsys, "diagram", "--input", str(TRIANGLE), "--degree", "0", "--output", str(out), "--plot", str(plot))
    assert code == 0
    D = load_diagram(out)
    assert len(D.diagram) == 4 and (D.field, D.degree) == (2, 0)
    rows = list(csv.DictReader(plot.open()))
    assert [r["type"] for r in rows] == ["U", "D", "B", "L"]
    b_row = next(r for r in rows if r["type"] == "B")
    assert (b_row["s"], b_row["t"]) == ("-inf", "+inf")
    assert plot.with_suffix(".png").stat().st_size > 0


def test_diagram_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        run(capsys, "diagram", "--input", str(TRIANGLE), "--degree", "1", "--output", str(path))
    assert a.read_bytes() == b.read_bytes()


def test_high_degree_is_empty(tmp_path, capsys):
    out = tmp_path / "d.json"
    assert run(capsys, "diagram", "--input", str(TRIANGLE), "--degree", "5", "--output", str(out))[0] == 0
    assert len(load_diagram(out).diagram) == 0


def test_malformed_json(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, "diagram", "--input", str(bad), "--degree", "0", "--output", str(tmp_path / "o.json"))
    assert code == 1 and "invalid JSON" in err
    assert run(capsys, "validate", str(tmp_path / "missing.json"))[0] == 1


def test_distance(tmp_path, capsys):
    a = write(tmp_path / "a.json", diagram_doc([U010]))
    empty = write(tmp_path / "e.json", diagram_doc([]))
    whole = write(tmp_path / "b.json", diagram_doc([{"type": "B", "mult": 1}]))
    assert run(capsys, "distance", a, a)[1].strip() == "0.000000000"
    assert run(capsys, "distance", a, empty, "--oracle")[1].strip() == "5.000000000"
    assert run(capsys, "distance", whole, empty)[1].strip() == "inf"
    other = write(tmp_path / "o.json", diagram_doc([], degree=1))
    code, _, err = run(capsys, "distance", a, other)
    assert code == 0 and "warning" in err
    bad = write(tmp_path / "bad.json", diagram_doc([{"type": "Q"}]))
    assert run(capsys, "distance", a, bad)[0] == 1


def test_distance_oracle_mismatch_exits_2(tmp_path, capsys, monkeypatch):
    import bipath.cli as cli

    a = write(tmp_path / "a.json", diagram_doc([U010]))
    monkeypatch.setattr(cli, "brute_force_bottleneck", lambda A, B: 1.0)
    assert run(capsys, "distance", a, a, "--oracle")[0] == 2


def shifted_copy(tmp_path, delta):
    doc = json.loads(TRIANGLE.read_text())
    for s in doc["simplices"]:
        for key in ("f1", "f2"):
            if not isinstance(s[key], str):
                s[key] += delta
    return write(tmp_path / "g.json", doc)


def test_stability_single(tmp_path, capsys):
    code, out, _ = run(capsys, "stability", "--f", str(TRIANGLE), "--g", str(TRIANGLE), "--degree", "0")
    assert code == 0 and out.startswith("lhs=0.000000000 rhs=0.000000000 PASS")
    g = shifted_copy(tmp_path, 0.5)
    code, out, _ = run(capsys, "stability", "--f", str(TRIANGLE), "--g", g, "--degree", "0")
    assert code == 0 and "rhs=0.500000000 PASS" in out


def test_stability_fiber_mismatch(tmp_path, capsys):
    doc = json.loads(TRIANGLE.read_text())
    doc["simplices"][2]["f1"] = doc["simplices"][2]["f2"] = "-inf"
    code, _, err = run(capsys, "stability", "--f", str(TRIANGLE), "--g", write(tmp_path / "g.json", doc), "--degree", "0")
    assert code == 1 and "-inf fiber" in err


def test_stability_fuzz_is_seeded(tmp_path, capsys, monkeypatch):
    args = ["stability", "--f", str(TRIANGLE), "--degree", "1", "--trials", "20", "--noise", "0.3"]
    first = run(capsys, *args, "--seed", "7")
    assert first[0] == 0 and first[1].startswith("20/20")
    assert run(capsys, *args, "--seed", "7")[1] == first[1]
    monkeypatch.setenv("BIPATH_SEED", "7")
    assert run(capsys, *args)[1] == first[1]


def test_usage_errors_exit_1():
    with pytest.raises(SystemExit) as exc:
        main(["diagram", "--degree", "0"])
    assert exc.value.code == 1


def test_round_trips(tmp_path):
    F = load_filtration(TRIANGLE)
    again = load_filtration(json.loads(dump_filtration(F)))
    assert again.complex == F.complex and again.function == F.function
    D = Diagram([CI.U(DecValue(0.1, "-"), DecValue(0.3, "+")), CI.L(DecValue(-float("inf"), "+"), DecValue(2.5)), CI.whole()])
    text = dump_diagram(D, 3, 1)
    assert load_diagram(json.loads(text)).diagram == D
    assert dump_diagram(load_diagram(json.loads(text)).diagram, 3, 1) == text


def test_lower_star_mode(tmp_path, capsys):
    doc = {
        "field": 3,
        "mode": "lower-star",
        "vertices": ["x", "y", "z"],
        "simplices": [
            {"verts": ["x"], "f1": 0, "f2": 1},
            {"verts": ["y"], "f1": 1, "f2": 0},
            {"verts": ["z"], "f1": 2, "f2": 2},
            {"verts": ["x", "y"]},
            {"verts": ["y", "z"]},
        ],
    }
    F = load_filtration(doc)
    assert F.function.f1 == (0, 1, 2, 1, 2)
    doc["simplices"][3]["f1"] = 5
    assert run(capsys, "validate", write(tmp_path / "ls.json", doc))[0] == 1


@pytest.mark.skipif(shutil.which("bipath") is None, reason="console script not installed")
def test_console_script(tmp_path):
    out = tmp_path / "d.json"
    res = subprocess.run(["bipath", "diagram", "--input", str(TRIANGLE), "--degree", "1", "--output", str(out)])
    assert res.returncode == 0
    res = subprocess.run(["bipath", "distance", str(out), str(out)], capture_output=True, text=True)
    assert res.stdout.strip() == "0.000000000"
