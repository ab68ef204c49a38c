from __future__ import annotations

import json
import subprocess
import sys

import pytest

from enhadhm.cli import main
from enhadhm.constructions import VandermondeParams, vandermonde_rep
from enhadhm.quiver import DimVector
from enhadhm.stability import wall_witness_minus, wall_witness_plus


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


def test_vandermonde(capsys):
    code, rep = run(capsys, "vandermonde", "1", "3", "1,2,3")
    assert code == 0 and rep["status"] == "pass"
    assert rep["results"]["h"] == [0, 6, 0, 0]
    assert set(rep) == {"command", "inputs", "results", "status", "timing_ms"}


def test_vandermonde_bad_eigenvalues(capsys):
    code, rep = run(capsys, "vandermonde", "1", "3", "1,1,2")
    assert code == 2 and rep["error"]["code"] == "vandermonde-hypothesis"


def test_walls(capsys):
    code, rep = run(capsys, "walls", "1", "2", "1")
    assert code == 0 and rep["status"] == "pass"
    for which in ("minus", "plus"):
        assert rep["results"][which]["destabilizer"]["slope"] == "0"
        assert rep["results"][which]["verdict"] == "strictly-semistable"


def test_check_malformed_rational(capsys, tmp_path):
    d = wall_witness_plus(DimVector(1, 2, 1)).to_dict()
    d["A"]["entries"][0][0] = "1/0"
    code, rep = run(capsys, "check", write(tmp_path, "x.json", d))
    assert code == 2
    assert "malformed rational" in rep["error"]["message"]


def test_check_missing_file_and_bad_json(capsys, tmp_path):
    code, rep = run(capsys, "check", str(tmp_path / "nope.json"))
    assert code == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, rep = run(capsys, "check", str(bad))
    assert code == 2 and rep["error"]["code"] == "invalid-json"


def test_check_relation_failure(capsys, tmp_path):
    d = wall_witness_plus(DimVector(1, 2, 1)).to_dict()
    d["J"]["entries"][0][1] = "1"
    code, rep = run(capsys, "check", write(tmp_path, "x.json", d))
    assert code == 1 and rep["status"] == "fail"
    assert rep["results"]["relations"]["R4"] is False


def test_stability(capsys, tmp_path):
    path = write(tmp_path, "x.json", wall_witness_minus(DimVector(1, 2, 1)).to_dict())
    code, rep = run(capsys, "stability", path, "-3", "1/2")
    assert code == 0
    assert rep["results"]["stable"] is False and rep["results"]["rank_F"] == 0
    assert rep["results"]["destabilizer"]["includes_W"] is False
    code, rep = run(capsys, "stability", path, "-1", "0")
    assert code == 2 and rep["error"]["code"] == "outside-chamber"


def test_cohomology(capsys, tmp_path):
    X = vandermonde_rep(VandermondeParams(2, 3, (1, 2, 3)))
    code, rep = run(capsys, "cohomology", write(tmp_path, "x.json", X.to_dict()), "--deep")
    assert code == 0
    assert rep["results"]["h"] == [0, 11, 0, 0] and rep["results"]["expected_dimension"] == 11
    assert rep["results"]["les"]["passed"]


def test_lift(capsys, tmp_path):
    base = {"dims": {"r": 1, "c": 2},
            "A": {"rows": 2, "cols": 2, "entries": [["2", "0"], ["0", "3"]]},
            "B": {"rows": 2, "cols": 2, "entries": [["2", "0"], ["0", "3"]]},
            "I": {"rows": 2, "cols": 1, "entries": [["1"], ["1"]]},
            "J": {"rows": 1, "cols": 2, "entries": [["0", "0"]]}}
    one = {"rows": 1, "cols": 1, "entries": [["1"]]}
    b, a = write(tmp_path, "b.json", base), write(tmp_path, "a.json", one)
    code, rep = run(capsys, "lift", b, a, a, "--samples", "4", "--seed", "1")
    assert code == 0
    assert rep["results"]["solution_dimension"] == 3 and rep["results"]["residuals_zero"] == 4


def test_search_and_sample(capsys, tmp_path):
    code, rep = run(capsys, "search-obstructed", "1", "3", "2", "--max-attempts", "300")
    assert code == 0 and rep["results"]["obstructed"]["h"][2] > 0
    h1 = [item["h"][1] for item in rep["results"]["h1_jump"]]
    assert h1[0] < h1[1]
    out = tmp_path / "c.jsonl"
    code, rep = run(capsys, "sample", "1", "3", "2", "--count", "2", "--out", str(out))
    assert code == 0 and rep["results"]["written"] == 2
    assert len(out.read_text().splitlines()) == 3


def test_search_none_is_partial(capsys):
    code, rep = run(capsys, "search-obstructed", "1", "2", "1", "--max-attempts", "5")
    assert code == 0 and rep["status"] == "partial" and rep["results"]["obstructed"] is None


def test_suite_subset(capsys):
    code, rep = run(capsys, "suite", "--only", "6", "--only", "10")
    assert code == 0 and rep["status"] == "pass"
    assert [c["criterion"] for c in rep["results"]["checks"]] == [6, 10]


def test_deterministic(capsys):
    _, a = run(capsys, "search-obstructed", "2", "3", "2", "--seed", "4")
    _, b = run(capsys, "search-obstructed", "2", "3", "2", "--seed", "4")
    a.pop("timing_ms"), b.pop("timing_ms")
    assert a == b


def test_pretty_text(capsys):
    assert main(["walls", "1", "2", "1", "--pretty"]) == 0
    out = capsys.readouterr().out
    assert "strictly-semistable" in out
    with pytest.raises(json.JSONDecodeError):
        json.loads(out)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "enhadhm", "vandermonde", "1", "2", "1,2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and json.loads(proc.stdout)["results"]["h"] == [0, 4, 0, 0]
