import csv
import io
import json
from importlib import resources

import subprocess
import sys

import pytest

from g2spec.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def corrupted(tmp_path):
    raw = json.loads(resources.files("g2spec").joinpath("data/reference.json").read_text())
    raw["(1,0)"]["dirac"][0][0] = ["5", "0"]
    p = tmp_path / "corrupt.json"
    p.write_text(json.dumps(raw))
    return p


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0
    assert out.strip().endswith("16/16 checks passed")
    assert "FAIL" not in out


def test_verify_json_has_identical_verdicts(capsys):
    _, text, _ = run(capsys, "verify")
    code, js, _ = run(capsys, "verify", "--json")
    payload = json.loads(js)
    assert code == 0 and payload["passed"]
    names = [line.split()[1] for line in text.splitlines() if line.startswith(("PASS", "FAIL"))]
    assert names == [c["name"] for c in payload["checks"]]
    assert all(c["passed"] for c in payload["checks"])


def test_verify_is_deterministic(capsys):
    a = run(capsys, "verify", "--json")[1]
    b = run(capsys, "verify", "--json")[1]
    assert a == b


def test_corrupted_golden_fails_named_check(capsys, corrupted):
    code, out, _ = run(capsys, "verify", "--golden", str(corrupted))
    assert code == 1
    failing = [line.split()[1] for line in out.splitlines() if line.startswith("FAIL")]
    assert failing == ["dirac_matrices"]


def test_verify_matrices_with_corruption(capsys, corrupted):
    assert run(capsys, "verify-matrices")[0] == 0
    code, out, _ = run(capsys, "verify-matrices", "--golden", str(corrupted))
    assert code == 1 and "FAIL  dirac_matrices" in out


def test_missing_golden(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "--golden", str(tmp_path / "nope.json"))
    assert code == 1 and "reference_data" in out


def test_spectrum_table(capsys):
    code, out, _ = run(capsys, "spectrum", "1", "0")
    assert code == 0
    values = [line.rsplit("  x", 1)[0].strip() for line in out.splitlines()]
    assert "1" in values and "-1" in values
    assert "-1/2 + 1/2*sqrt(33)" in values and "1/2 + 1/2*sqrt(33)" in values


def test_spectrum_csv_numeric(capsys):
    code, out, _ = run(capsys, "spectrum", "0", "1", "--numeric", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and rows[0] == ["eigenvalue", "multiplicity"]
    assert rows[-1] == ["4.27491721764", "2"]
    assert sum(int(r[1]) for r in rows[1:]) == 12


def test_spectrum_json(capsys):
    code, out, _ = run(capsys, "spectrum", "0", "0", "--format", "json")
    assert code == 0 and json.loads(out)["eigenvalues"] == [{"value": "0", "multiplicity": 2}]


def test_spectrum_unsupported_cites_bound(capsys):
    code, _, err = run(capsys, "spectrum", "2", "0")
    assert code == 2 and "bound certificate" in err


def test_virtdim(capsys):
    assert run(capsys, "virtdim", "-0.5")[1] == "8\n"
    assert run(capsys, "virtdim", "--rate=-3/2")[1] == "1\n"
    code, _, err = run(capsys, "virtdim", "-1")
    assert code == 2 and "critical" in err


def test_critical_weights(capsys):
    code, out, _ = run(capsys, "critical-weights", "--format", "csv")
    assert code == 0 and out == "weight,jump\n-3,7\n-2,2\n-1,7\n"


def test_branch(capsys):
    assert run(capsys, "branch", "1", "1")[1] == "V(1,1) = [[W(2,1)]] + 2W(1,1) + [[W(2,0)]] + [[W(1,0)]]\n"
    payload = json.loads(run(capsys, "branch", "0", "1", "--json")[1])
    assert payload["dimension"] == 14 and payload["parts"] == {"W(0,1)": 1, "W(1,0)": 1, "W(1,1)": 1}


def test_ode_csv(capsys, tmp_path):
    out = tmp_path / "traj.csv"
    code, _, _ = run(capsys, "ode", "--C", "1.0", "--r0", "1e-3", "--r1", "1e3", "--samples", "11", "--csv", str(out))
    rows = list(csv.reader(out.open()))
    assert code == 0 and rows[0] == ["r", "re_f", "im_f", "W"] and len(rows) == 12
    r, ref = float(rows[6][0]), float(rows[6][1])
    assert abs(ref - 1 / (r * r + 1)) < 1e-9


def test_ode_bad_range(capsys):
    assert run(capsys, "ode", "--r0", "2", "--r1", "1")[0] == 2


def test_superpotential(capsys):
    code, out, _ = run(capsys, "superpotential", "--grid", "3")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and len(rows) == 10 and rows[5] == ["0", "0", "0"]
    assert run(capsys, "superpotential", "--grid", "1")[0] == 2


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["spectrum"])
    assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "g2spec", "branch", "1", "0"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "V(1,0) = [[W(1,0)]] + W(0,0)\n"
