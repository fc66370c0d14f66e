import json
import subprocess
import sys

import pytest

from cyclohedra.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_documented_examples(capsys):
    assert run(capsys, "fvector", "--n", "8", "--symmetric")[:2] == (0, "20 30 12\n")
    assert run(capsys, "enumerate", "--n", "6")[:2] == (0, "14\n")
    assert run(capsys, "thompson", "order", "--elem", "dom=0,1/2;ran=0,1/2;shift=1")[:2] == (0, "2\n")


def test_exit_codes(capsys):
    assert run(capsys, "enumerate", "--n", "40")[0] == 3
    assert run(capsys, "fvector", "--n", "14")[0] == 3
    assert run(capsys, "enumerate", "--n", "2")[0] == 2
    assert run(capsys, "enumerate", "--n", "7", "--symmetric")[0] == 2
    assert run(capsys, "enumerate")[0] == 2
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "thompson", "order", "--elem", "dom=0,1/3;ran=0,1/2")[0] == 2
    assert run(capsys, "verify", "--suite", "nothing")[0] == 2
    assert run(capsys, "farey", "--svg", "x.svg")[0] == 2


def test_enumerate_json(tmp_path, capsys):
    path = tmp_path / "t.json"
    code, out, _ = run(capsys, "enumerate", "--n", "6", "--symmetric", "--json", str(path))
    assert code == 0 and out == "6\n"
    data = json.loads(path.read_text())
    assert len(data["triangulations"]) == 6
    assert data["triangulations"][0] == {"n": 6, "diagonals": [[0, 2], [0, 3], [3, 5]]}


def test_gkz_and_off(tmp_path, capsys):
    out_path, off_path = tmp_path / "g.json", tmp_path / "c.off"
    code, out, _ = run(capsys, "gkz", "--n", "8", "--symmetric", "--out", str(out_path), "--off", str(off_path))
    assert code == 0 and out == "vertices=20 dimension=3\n"
    data = json.loads(out_path.read_text())
    assert len(data["vertices"]) == 20
    assert off_path.read_text().splitlines()[1] == "20 12 30"
    first = out_path.read_text()
    run(capsys, "gkz", "--n", "8", "--symmetric", "--out", str(out_path))
    assert out_path.read_text() == first


def test_flipgraph(tmp_path, capsys):
    dot = tmp_path / "g.dot"
    code, out, _ = run(capsys, "flipgraph", "--n", "6", "--dot", str(dot))
    assert code == 0 and out == "vertices=14 edges=21 connected=true\n"
    assert dot.read_text().count(" -- ") == 21


def test_farey(tmp_path, capsys):
    svg, js = tmp_path / "a.svg", tmp_path / "a.json"
    code, out, _ = run(capsys, "farey", "--max-den", "3", "--svg", str(svg), "--json", str(js))
    assert code == 0 and svg.read_text().startswith("<svg")
    assert len(json.loads(js.read_text())["arcs"]) == int(out.split("=")[1])
    code, out, _ = run(capsys, "farey", "--dyadic", "--depth", "4", "--svg", str(svg), "--klein")
    assert code == 0 and out == "arcs=29\n"
    assert run(capsys, "farey", "--dyadic", "--depth", "40", "--svg", str(svg))[0] == 3


def test_thompson_ops(capsys):
    r = "dom=0,1/2,3/4; ran=0,1/2,3/4; shift=1"
    assert run(capsys, "thompson", "order", "--elem", r)[1] == "3\n"
    assert run(capsys, "thompson", "eval", "--elem", r, "--at", "1/2")[1] == "3/4\n"
    code, out, _ = run(capsys, "thompson", "compose", "--elem", r, "--elem", r, "--elem", r)
    assert out == "dom=0,1/2; ran=0,1/2; shift=0\n"
    quarter = "dom=0,1/4,1/2,3/4; ran=0,1/4,1/2,3/4; shift=1"
    assert run(capsys, "thompson", "quotient", "--elem", quarter)[1] == "dom=0,1/2; ran=0,1/2; shift=1\n"
    assert run(capsys, "thompson", "quotient", "--elem", r)[0] == 2
    g = "dom=0,1/2,3/4; ran=0,1/4,1/2; shift=0"
    assert run(capsys, "thompson", "order", "--elem", g, "--cap", "64")[1] == "infinite\n"
    code, out, _ = run(capsys, "thompson", "inverse", "--elem", g, "--json")
    assert json.loads(out) == {"dom": ["0", "1/4", "1/2"], "ran": ["0", "1/2", "3/4"], "shift": 0}


def test_act(capsys, tmp_path):
    vertex = json.dumps({"n": 4, "diagonals": [[0, 2]]})
    code, out, _ = run(capsys, "act", "--elem", "dom=0,1/4,1/2,3/4; ran=0,1/4,1/2,3/4; shift=1", "--vertex", vertex)
    assert code == 0
    assert json.loads(out) == {"stage": 2, "triangulation": {"n": 4, "diagonals": [[1, 3]]}}
    path = tmp_path / "v.json"
    path.write_text(json.dumps({"stage": 2, "triangulation": {"n": 4, "diagonals": [[1, 3]]}}))
    code, out, _ = run(capsys, "act", "--elem", "dom=0,1/2;ran=0,1/2;shift=1", "--vertex", str(path))
    assert json.loads(out)["triangulation"]["diagonals"] == [[1, 3]]
    assert run(capsys, "act", "--elem", "dom=0,1/2;ran=0,1/2;shift=1", "--vertex", '{"n": 6, "diagonals": []}')[0] == 2


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "secondary")
    lines = out.splitlines()
    assert code == 0
    assert [l.split()[:2] for l in lines[:-1]] == [["PASS", f"C{k}"] for k in (4, 5, 6, 7)]
    assert lines[-1] == "SUMMARY passed=4 failed=0"


def test_verify_reports_failure_with_exit_one(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "8")
    assert code == 1 and out.startswith("FAIL C8")


def test_console_script_is_installed():
    res = subprocess.run([sys.executable, "-m", "cyclohedra.cli", "enumerate", "--n", "5"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "5\n"


@pytest.mark.parametrize("argv", [["fvector", "--n", "6"], ["enumerate", "--n", "8", "--symmetric"]])
def test_output_is_deterministic(capsys, argv):
    assert run(capsys, *argv) == run(capsys, *argv)
