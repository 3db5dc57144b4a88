from __future__ import annotations

import json
import subprocess
import sys

import pytest

from ncconic.cli import main, split_scalars


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_split_scalars():
    assert split_scalars("3/4,3/4,1") == ["3/4", "3/4", "1"]
    assert split_scalars("[0,1]@Qe, 2,[1,0]@Qe") == ["[0,1]@Qe", "2", "[1,0]@Qe"]


def test_cfa(capsys):
    code, out = run(capsys, "cfa", "--type", "S", "--f", "1,0,0")
    doc = json.loads(out)
    assert code == 0
    assert doc["type"] == "TWOVAR" and doc["algebra"] == "k[u,v]/(u^2,v^2)"
    code, out = run(capsys, "cfa", "--type", "NC", "--f", "3/4,3/4,1", "--format", "text")
    assert "JET3xK" in out


def test_pairiso(capsys):
    code, out = run(capsys, "pairiso", "--type", "NC", "--f", "2,1,0", "--g", "1,1,0")
    assert code == 0 and json.loads(out)["isomorphic"] is False
    code, out = run(capsys, "pairiso", "--type", "NC", "--f", "2,1,0", "--g", "1/2,1,0", "--format", "text")
    assert out.startswith("true") and "witness" in out


def test_pairiso_ec_example(capsys):
    xi = "[1,0,0,0,0,0,0,0,1]@Qesq"
    code, out = run(capsys, "pairiso", "--type", "EC", "--xi", xi, "--f", "1,0,0", "--g", "[-1,-1]@Qesq,[0,1]@Qesq,1")
    assert json.loads(out)["isomorphic"] is True


def test_hesse(capsys):
    code, out = run(capsys, "hesse", "--lambda", "0", "--tower", "Qec")
    doc = json.loads(out)
    assert doc["orbit_sizes"] == [3] and doc["j"] == "0"


def test_dual_and_center(capsys):
    code, out = run(capsys, "dual", "--type", "S", "--f", "1,1,1")
    assert json.loads(out)["dual_commutative"] is True
    code, out = run(capsys, "center", "--type", "EC", "--xi", "2")
    doc = json.loads(out)
    assert doc["hilbert"] == [1, 3, 6, 10, 15] and doc["center_dim"] == 3


def test_computation_error(capsys):
    code, out = run(capsys, "cfa", "--type", "EC", "--xi", "1", "--f", "1,0,0")
    assert code == 1
    assert json.loads(out) == {"code": "InvalidXi", "detail": "xi = 1 has xi^3 = 1"}
    code, out = run(capsys, "cfa", "--type", "S", "--f", "1,0")
    assert code == 1 and json.loads(out)["code"] == "ValueError"


def test_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["cfa", "--type", "S"])
    assert exc.value.code == 2


def test_tables_exit_zero(capsys):
    code, out = run(capsys, "tables", "--format", "text")
    assert code == 0 and out.strip().endswith("all match")


def test_output_deterministic():
    cmd = [sys.executable, "-m", "ncconic.cli", "cfa", "--type", "Sprime", "--f", "2,1,1"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b
    assert json.loads(a)["type"] == "K4"
