import csv
import io
import json
import subprocess
import sys

import pytest

from cylfuse.cli import main


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


def run_json(*argv):
    code, text = run(*argv, "--format", "json")
    return code, json.loads(text)


def test_chi():
    code, data = run_json("chi", "--lambda", "2,1", "--mu", "1", "--k", "2")
    assert code == 0
    assert data["value"] == data["by_count"] == 2


def test_cyl_chi_and_cyl_h_on_sample_shape():
    args = ("--k", "3", "--n", "4", "--d", "1", "--lambda", "4,3,2", "--mu", "2,2,1")
    code, data = run_json("cyl-chi", *args)
    assert code == 0 and data["agree"]
    code, data = run_json("cyl-h", *args)
    assert code == 0 and data["degree"] == 8
    assert all(sum(r["nu"]) == 8 for r in data["m_expansion"])


def test_skew_h_csv():
    code, text = run("skew-h", "--lambda", "3,1", "--mu", "1", "--k", "2", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(text)))
    assert rows and set(rows[0]) == {"nu", "coeff"}


def test_fusion_single_coefficient_and_product():
    code, data = run_json("fusion", "--k", "2", "--n", "3", "--lambda", "2,1", "--mu", "2,1", "--nu", "3,3")
    assert code == 0 and data["N"] == 2
    code, data = run_json("fusion", "--k", "1", "--n", "3", "--lambda", "2", "--mu", "2")
    assert data["terms"] == [{"nu": [1], "d": 1, "N": 1}]


def test_fusion_table_formats_and_determinism():
    a = run("fusion-table", "--k", "2", "--n", "3")
    b = run("fusion-table", "--k", "2", "--n", "3")
    assert a == b and a[0] == 0
    code, text = run("fusion-table", "--k", "1", "--n", "4", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(text)))
    assert len(rows) == 16
    code, text = run("fusion-table", "--k", "1", "--n", "3", "--format", "pretty")
    assert code == 0 and text.strip()


def test_verlinde_reports_readings():
    code, data = run_json("verlinde", "--k", "2", "--n", "3")
    assert code == 0 and data["pass"]
    assert data["tol"] == 1e-6
    assert data["mismatches_by_reading"] == {"normalised": 0, "inverse": 45, "reciprocal": 72}


def test_modular_and_idempotents():
    code, data = run_json("modular", "--k", "2", "--n", "3")
    assert code == 0 and data["pass"] and len(data["relations"]) == 7
    code, data = run_json("idempotents", "--k", "2", "--n", "4")
    assert code == 0 and data["pass"]
    code, text = run("modular", "--k", "1", "--n", "3", "--matrix", "S", "--format", "csv")
    assert code == 0 and len(text.strip().splitlines()) == 3


def test_selftest_subset():
    code, data = run_json("selftest", "--criteria", "1,7,11", "--seed", "3")
    assert code == 0 and data["pass"]
    assert [r["id"] for r in data["criteria"]] == [1, 7, 11]


@pytest.mark.parametrize("argv", [
    ("chi", "--lambda", "1,3", "--mu", "1"),
    ("cyl-chi", "--k", "2", "--n", "3", "--d", "0", "--lambda", "4,1", "--mu", "1,1"),
    ("cyl-chi", "--k", "2", "--n", "3", "--d", "-1", "--lambda", "2,1", "--mu", "1,1"),
    ("fusion-table", "--k", "5", "--n", "3"),
    ("fusion-table", "--k", "2"),
    ("fusion", "--k", "2", "--n", "3", "--lambda", "x", "--mu", "1,1"),
])
def test_usage_errors_exit_2(argv):
    with pytest.raises(SystemExit) as exc:
        code = main(list(argv), out=io.StringIO())
        raise SystemExit(code)
    assert exc.value.code == 2


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cylfuse", "chi", "--lambda", "2,1", "--mu", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["value"] == 2
    proc = subprocess.run([sys.executable, "-m", "cylfuse", "nope"], capture_output=True, text=True)
    assert proc.returncode == 2
