import json
import subprocess
import sys
from pathlib import Path

import pytest

from hodgepair.cli import main

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def run(*args, env=None):
    return subprocess.run([sys.executable, "-m", "hodgepair", *args], capture_output=True, text=True, env=env)


def verdicts(path, statement):
    report = json.loads(Path(path).read_text())
    return {v["q"]: v for v in report["instances"][0]["verdicts"] if v["statement"] == statement}


def test_mesh_pair_interval(tmp_path):
    out = tmp_path / "r.json"
    res = run("pair", "--mesh", str(FIXTURES / "interval2.json"), "--check", "TH,TH_b", "--output", str(out))
    assert res.returncode == 0, res.stderr
    assert "FAIL 0" in res.stdout
    assert verdicts(out, "TH")[1]["verdict"] == "PASS"
    assert verdicts(out, "TH_b")[1]["lhs"] == [2, 0]


def test_coarse_warning(capsys):
    assert main(["pair", "--mesh", str(FIXTURES / "interval1.json"), "--check", "TH"]) == 0
    text = capsys.readouterr().out
    assert "coarse mesh" in text and "FAIL" in text


def test_analyze_circle(tmp_path, capsys):
    path = tmp_path / "circle.json"
    path.write_text(json.dumps({"spaces": [{"dim": 3}, {"dim": 3}],
                                "diffs": [{"matrix": [[-1, 1, 0], [0, -1, 1], [-1, 0, 1]]}]}))
    assert main(["analyze", "--input", str(path)]) == 0
    assert "H = (1, 1)" in capsys.readouterr().out


def test_random_trivial_has_no_failures(tmp_path):
    out = tmp_path / "r.json"
    assert main(["random", "--profile", "trivial", "--seed", "1", "--count", "5", "--output", str(out)]) == 0
    report = json.loads(out.read_text())
    assert report["summary"]["FAIL"] == 0
    assert len(report["instances"]) == 5


def test_thread_count_does_not_change_output(tmp_path):
    outs = []
    for threads in ("1", "3"):
        out = tmp_path / f"r{threads}.json"
        env = {**__import__("os").environ, "HODGE_PAIR_THREADS": threads}
        res = run("random", "--profile", "restricted", "--seed", "4", "--count", "4", "--output", str(out), env=env)
        assert res.returncode == 0, res.stderr
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]


def test_float_backend_matches_exact(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    mesh = str(FIXTURES / "disk.json")
    assert main(["pair", "--mesh", mesh, "--output", str(a)]) == 0
    assert main(["pair", "--mesh", mesh, "--backend", "float", "--output", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_mesh_and_cone(tmp_path, capsys):
    assert main(["mesh", "--mesh", str(FIXTURES / "annulus.json")]) == 0
    text = capsys.readouterr().out
    assert "absolute cohomology: (1, 1, 0)" in text and "coarse mesh" in text
    out = tmp_path / "cone.json"
    assert main(["cone", "--mesh", str(FIXTURES / "circle.json"), "--output", str(out)]) == 0
    assert "absolute cohomology: (1, 0, 0)" in capsys.readouterr().out
    assert main(["mesh", "--mesh", str(out), "--boundary", "none"]) == 0


def test_perversity_command(capsys):
    assert main(["perversity", "--c", "1,1,1,1", "--links", "1,2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[1].split() == ["1", "2", "0", "0"]
    assert lines[2].split() == ["2", "3", "1", "0"]


def test_crosscheck_command(tmp_path, capsys):
    out = tmp_path / "x.json"
    assert main(["crosscheck", "--mesh", str(FIXTURES / "interval2.json"), "--profile", "restricted",
                 "--count", "2", "--output", str(out)]) == 0
    records = json.loads(out.read_text())["records"]
    assert len(records) == 3 and all(r["agree"] for r in records)
    assert main(["crosscheck", "--mesh", str(FIXTURES / "interval2.json"), "--tol", "10"]) == 0
    assert "DISAGREE" in capsys.readouterr().out


@pytest.mark.parametrize("args", [
    ["pair", "--input", "missing.json"],
    ["random", "--profile", "no-such-profile"],
    ["perversity", "--c", "1,x", "--links", "1"],
    ["pair", "--mesh", str(FIXTURES / "disk.json"), "--check", "bogus"],
    ["pair", "--mesh", str(FIXTURES / "disk.json"), "--backend", "float", "--tol", "0"],
])
def test_bad_input_exits_one(args, capsys):
    assert main(args) == 1
    assert capsys.readouterr().err.startswith("error:")


def test_malformed_mesh_pointer(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"simplices": [[0, 1], [1, "a"]]}))
    assert main(["mesh", "--mesh", str(bad)]) == 1
    err = capsys.readouterr().err
    assert str(bad) in err and "/simplices/1" in err
