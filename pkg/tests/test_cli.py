import json
import subprocess
import sys

import pytest

from heckejones.cli import main, run


def output(capsys, argv):
    code = main(argv)
    return code, capsys.readouterr().out


def test_cells_listing(capsys):
    code, out = output(capsys, ["cells", "--n", "6", "--rep", "s1s3s5"])
    data = json.loads(out)
    assert code == 0
    assert data["payload"]["size"] == 5 and data["payload"]["shape"] == [3, 3]
    assert data["payload"]["members"][0]["word"] == "1,3,5"


def test_cells_by_shape_csv(capsys):
    code, out = output(capsys, ["cells", "--n", "6", "--shape", "[3,3]", "--format", "csv"])
    lines = out.strip().splitlines()
    assert code == 0 and lines[0].startswith("word,") and len(lines) == 6


def test_klpoly(capsys):
    code, out = output(capsys, ["klpoly", "--n", "4", "--y", "e", "--w", "s2s1s3s2"])
    payload = json.loads(out)["payload"]
    assert code == 0 and payload["coefficients"] == [1, 1] and payload["mu"] == 0


def test_wgraph(capsys):
    code, out = output(capsys, ["wgraph", "--n", "3", "--rep", "s1"])
    assert code == 0 and json.loads(out)["payload"]["edges"] == [[0, 1, 1]]


def test_jones_json(capsys):
    code, out = output(capsys, ["jones", "--genus", "2", "--format", "json"])
    payload = json.loads(out)["payload"]
    assert code == 0
    assert payload["d"] == 5 and payload["prefactor"] == "t^-1" and payload["q"] == "t^5"
    assert len(payload["matrices"]) == 5


def test_jones_plain(capsys):
    code, out = output(capsys, ["jones", "--genus", "2", "--format", "plain"])
    assert code == 0 and "H5" in out


def test_verify_genus_and_negative_shape(capsys):
    code, out = output(capsys, ["verify", "--genus", "2"])
    assert code == 0 and json.loads(out)["payload"]["ok"]
    code, out = output(capsys, ["verify", "--shape", "[5,1]"])
    assert code == 1 and json.loads(out)["payload"]["relations"]["chain"] is False


def test_certify_m6(capsys):
    code, out = output(capsys, ["certify", "--genus", "2", "--power", "6", "--scheme", "even"])
    payload = json.loads(out)["payload"]
    assert code == 0 and payload["dominant_modulus"] == "9.8989795"


def test_certify_free_subgroup(capsys):
    code, out = output(capsys, ["certify", "--power", "7", "--scheme", "odd", "--free-subgroup"])
    assert code == 0
    assert json.loads(out)["payload"]["free_subgroup"]["verdict"] == "free-subgroup-witness"


def test_sweep_csv(capsys):
    code, out = output(capsys, ["sweep", "--powers", "5..9", "--scheme", "odd", "--format", "csv"])
    lines = out.strip().splitlines()
    assert lines[0].startswith("m,") and len(lines) == 4
    assert code == 1  # m = 5 has no admissible specialization


def test_burau(capsys):
    code, out = output(capsys, ["burau", "--n", "3"])
    payload = json.loads(out)["payload"]
    assert code == 0 and payload["quadratic_residual_zero"] and payload["hecke_bridge"]["ok"]


def test_domain_error_exit_1(capsys):
    code, out = output(capsys, ["jones", "--genus", "9"])
    data = json.loads(out)
    assert code == 1 and data["payload"]["type"] == "ValueError"


@pytest.mark.parametrize("argv", [["nosuch"], ["jones"], ["cells", "--n", "x", "--rep", "s1"], []])
def test_usage_error_exit_2(capsys, argv):
    assert main(argv) == 2


def test_out_path(tmp_path, capsys):
    target = tmp_path / "cells.json"
    assert main(["cells", "--n", "4", "--rep", "s1s3", "--out", str(target)]) == 0
    assert json.loads(target.read_text())["payload"]["size"] == 2


def test_run_returns_result():
    result = run(["klpoly", "--n", "3", "--y", "s1", "--w", "s2s1"])
    assert result.exit_code == 0 and result.payload["mu"] == 1


@pytest.mark.parametrize("argv", [["jones", "--genus", "2"], ["sweep", "--powers", "6..12", "--scheme", "even"]])
def test_byte_identical_runs(argv):
    cmd = [sys.executable, "-m", "heckejones", *argv]
    first = subprocess.run(cmd, capture_output=True, check=False).stdout
    second = subprocess.run(cmd, capture_output=True, check=False).stdout
    assert first and first == second
