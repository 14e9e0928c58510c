import json
import subprocess
import sys

import numpy as np
import pytest

from ihara import checks
from ihara.checks import Check
from ihara.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


def test_zeta_poly(capsys):
    code, rep = run_json(capsys, "zeta", "--graph", "cycle:5", "--route", "poly")
    assert code == 0
    assert rep["coefficients"] == ["1", "0", "0", "0", "0", "-2", "0", "0", "0", "0", "1"]
    assert rep["route"] == "poly" and rep["tolerance"] == 0


def test_zeta_poly_at(capsys):
    _, rep = run_json(capsys, "zeta", "--graph", "complete:4", "--at", "0.5")
    assert rep["value"] == "0"


def test_zeta_series_tree(capsys):
    code, rep = run_json(capsys, "zeta", "--graph", "path:4", "--route", "series", "--order", "8")
    assert code == 0
    assert rep["coefficients"][0] == "1" and set(rep["coefficients"][1:]) == {"0"}


def test_zeta_rooted(capsys):
    _, rep = run_json(capsys, "zeta", "--graph", "cycle:3", "--route", "rooted",
                      "--order", "6", "--root", "1")
    assert rep["coefficients"] == ["1", "0", "0", "2/3", "0", "0", "5/9"]


def test_zeta_cjk(capsys):
    code, rep = run_json(capsys, "zeta", "--graph", "petersen", "--route", "cjk", "--at", "0.2")
    assert code == 0
    assert rep["evaluation"]["route"] == "cjk"
    assert abs(rep["evaluation"]["value"] - rep["check"]["value"]) <= 1e-10
    assert rep["check"]["tolerance"] == 1e-10


def test_grover_charpoly(capsys):
    _, rep = run_json(capsys, "grover", "--graph", "cycle:4", "--charpoly")
    assert rep["coefficients"] == ["1", "0", "0", "0", "-2", "0", "0", "0", "1"]


def test_grover_spectrum(capsys):
    _, rep = run_json(capsys, "grover", "--graph", "complete:4", "--spectrum")
    assert len(rep["mapped"]["values"]) == len(rep["direct"]["values"]) == 12
    assert rep["agree"] is True and rep["tolerance"] == 1e-8


def test_grover_evolve_returns_to_basis(capsys):
    _, rep = run_json(capsys, "grover", "--graph", "cycle:3", "--evolve", "3", "--init", "arc:0")
    psi = np.array([complex(*z) for z in rep["state"]["psi"]])
    assert np.allclose(np.abs(psi), np.eye(6)[0])
    assert rep["norm"] == 1.0


@pytest.mark.parametrize("init", ["uniform", "vertex:2", "random:5", "arc:3"])
def test_grover_evolve_inits(capsys, init):
    code, rep = run_json(capsys, "grover", "--graph", "petersen", "--evolve", "10", "--init", init)
    assert code == 0 and abs(rep["norm"] - 1) < 1e-12


def test_limit(capsys):
    _, rep = run_json(capsys, "limit", "--at", "0.5", "--nodes", "1024")
    assert abs(rep["quadrature"]["value"] - 1.0) <= 1e-10
    _, rep = run_json(capsys, "limit", "--at", "2", "--nodes", "1024")
    assert abs(rep["quadrature"]["value"] - 4.0) <= 1e-8
    assert rep["closed_form"]["value"] == 4.0


def test_limit_table_csv(capsys):
    code, out, _ = run(capsys, "limit", "--at", "0.5", "--table", "4,8,16", "--format", "csv")
    rows = out.strip().splitlines()
    assert code == 0 and rows[0] == "n,value,abs_error" and len(rows) == 4


def test_limit_table_json(capsys):
    _, rep = run_json(capsys, "limit", "--at", "0.3", "--table", "4,8")
    assert [r["n"] for r in rep["table"]["rows"]] == [4, 8]


@pytest.mark.parametrize("suite", ["konno-sato", "routes", "theorem4"])
def test_verify_passes(capsys, suite):
    code, rep = run_json(capsys, "verify", "--suite", suite)
    assert code == 0 and rep["passed"] and rep["failures"] == []


def test_verify_failure_exit_code(capsys, monkeypatch):
    monkeypatch.setitem(checks.SUITES, "routes", lambda: [Check("broken", False, "forced")])
    code, rep = run_json(capsys, "verify", "--suite", "routes")
    assert code == 1 and rep["failures"] == ["broken"]


@pytest.mark.parametrize("argv", [
    ["zeta", "--graph", "wheel:5"],
    ["zeta", "--graph", "cycle:2"],
    ["zeta", "--graph", "cycle:5", "--route", "series"],
    ["zeta", "--graph", "cycle:5", "--route", "cjk"],
    ["zeta", "--graph", "path:4", "--route", "cjk", "--at", "0.1"],
    ["grover", "--graph", "cycle:3", "--evolve", "2", "--init", "arc:99"],
    ["grover", "--graph", "cycle:3", "--evolve", "2", "--init", "blob"],
    ["limit", "--at", "1.5", "--table", "4,8"],
    ["limit", "--at", "0.5", "--table", "4,x"],
])
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and err.startswith("error:")


@pytest.mark.parametrize("argv", [
    ["grover", "--graph", "cycle:3"],
    ["grover", "--graph", "cycle:3", "--spectrum", "--charpoly"],
    ["zeta"],
    ["grover", "--graph", "cycle:3", "--evolve", "-1"],
])
def test_argparse_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_budget_exit_code(capsys):
    code, _, err = run(capsys, "zeta", "--graph", "complete:6", "--route", "series",
                       "--order", "14", "--budget", "1000")
    assert code == 3 and "budget" in err


def test_json_graph_file(capsys, tmp_path):
    f = tmp_path / "theta.json"
    f.write_text(json.dumps({"n": 4, "edges": [[0, 1], [1, 2], [2, 3], [3, 0], [0, 2]]}))
    code, rep = run_json(capsys, "zeta", "--graph", str(f))
    assert code == 0 and rep["graph"] == {"name": "theta", "n": 4, "m": 5}


def test_deterministic_output():
    cmd = [sys.executable, "-m", "ihara", "grover", "--graph", "petersen", "--spectrum"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first
