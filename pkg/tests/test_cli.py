from __future__ import annotations

import json
import subprocess
import sys

import pytest

from modunits.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_delta_15(capsys):
    code, out, _ = run(capsys, "delta", "15")
    assert code == 0
    assert "eta(tau)^1 * eta(3*tau)^-3 * eta(5*tau)^-5 * eta(15*tau)^15" in out
    assert "rho = 4" in out and "nu = 8" in out


def test_delta_expand(capsys):
    code, out, _ = run(capsys, "delta", "1", "--expand", "4")
    assert code == 0
    assert "q - 24*q^2 + 252*q^3 + O(q^4)" in out


def test_delta_zero_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["delta", "0"])
    assert exc.value.code == 1
    assert "error" in capsys.readouterr().err


def test_unknown_command_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 1


def test_dim(capsys):
    assert "M:3 " in run(capsys, "dim", "3", "3")[1]
    assert "M:1 " in run(capsys, "dim", "2", "1")[1]


def test_dim_table_steps(capsys):
    code, out, _ = run(capsys, "dim-table", "5", "--kmax", "8", "--json")
    data = json.loads(out)
    assert code == 0 and data["schema"] == 1
    assert [r["delta_step"] for r in data["rows"]] == [2] * 8


def test_dim_table_parallel_matches_serial(capsys):
    serial = run(capsys, "dim-table", "12", "--kmax", "10")[1]
    parallel = run(capsys, "dim-table", "12", "--kmax", "10", "--jobs", "2")[1]
    assert serial == parallel


def test_basis_text(capsys):
    code, out, _ = run(capsys, "basis", "2", "4")
    lines = out.strip().splitlines()
    assert code == 0 and "dim 3" in lines[0]
    assert [ln.split("]")[0] for ln in lines[1:]] == ["[0", "[1", "[2"]


def test_basis_level1_weight12(capsys):
    out = run(capsys, "basis", "1", "6")[1]
    assert out.strip().splitlines()[-1].endswith("q - 24*q^2 + 252*q^3 + O(q^4)")


def test_basis_level3_weight2(capsys):
    out = run(capsys, "basis", "3", "1")[1]
    assert out.strip().splitlines()[1].split(": ", 1)[1].startswith("1 + 12*q")


def test_basis_json_schema(capsys):
    data = json.loads(run(capsys, "basis", "5", "3", "--json")[1])
    assert data["schema"] == 1
    assert set(data) == {"schema", "level", "weight", "prec", "elements"}
    for e in data["elements"]:
        assert set(e) == {"label", "valuation", "coefficients"}
        assert len(e["coefficients"]) == data["prec"]


def test_basis_insufficient_precision_exit_2(capsys):
    code, _, err = run(capsys, "basis", "5", "3", "--prec", "2")
    assert code == 2 and "precision insufficient" in err


def test_check_unit_pass(capsys):
    code, out, _ = run(capsys, "check-unit", "--level", "9", "3:-2", "9:6")
    assert code == 0
    assert out.strip().endswith("PASS")
    assert sum(1 for ln in out.splitlines() if ln.rstrip().endswith("ok")) == 4


def test_check_unit_fail_iii(capsys):
    out = run(capsys, "check-unit", "--level", "2", "1:24")[1]
    assert "FAIL at condition iii" in out


def test_check_unit_level2(capsys):
    assert run(capsys, "check-unit", "--level", "2", "1:-8", "2:16")[1].strip().endswith("PASS")


def test_check_unit_by_level(capsys):
    code, out, _ = run(capsys, "check-unit", "210")
    assert code == 0 and out.strip().endswith("PASS")


def test_check_unit_json(capsys):
    data = json.loads(run(capsys, "check-unit", "--level", "2", "1:24", "--json")[1])
    assert data["schema"] == 1 and data["passed"] is False and data["failed"] == ["iii"]


@pytest.mark.parametrize(
    "argv",
    [["check-unit"], ["check-unit", "--level", "4"], ["check-unit", "--level", "4", "x"], ["check-unit", "--level", "4", "3:1"]],
)
def test_check_unit_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1 and err


def test_search_units(capsys):
    out = run(capsys, "search-units", "2", "--max-weight", "2", "--bound", "24")[1]
    assert out.startswith("0 strong unit(s)")
    data = json.loads(run(capsys, "search-units", "3", "--max-weight", "6", "--bound", "24", "--json")[1])
    assert data["units"][0]["exponents"] == {"1": -6, "3": 18}


def test_env_slack_changes_precision(capsys, monkeypatch):
    monkeypatch.setenv("MODUNITS_PRECISION_SLACK", "5")
    data = json.loads(run(capsys, "basis", "2", "2", "--json")[1])
    assert data["prec"] == 7


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "modunits", "dim", "2", "1"], capture_output=True, text=True)
    assert res.returncode == 0 and "M:1" in res.stdout
