import csv
import io
import json
import math

import numpy as np
import pytest

from quadlsq.cli import CSV_COLUMNS, main


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


@pytest.fixture
def simpson_file(tmp_path):
    path = tmp_path / "simpson.txt"
    path.write_text("# three equispaced nodes\n-1\n0.0\n1/1\n", encoding="utf-8")
    return str(path)


class TestAnalyze:
    def test_custom_simpson_text(self, simpson_file):
        code, text = run(
            ["analyze", "--family", "custom", "--nodes-file", simpson_file]
        )
        assert code == 0
        lines = dict(
            line.split(":", 1) for line in text.splitlines() if ":" in line
        )
        omega = [float(v) for v in lines["omega"].split()]
        np.testing.assert_allclose(omega, [1 / 3, 4 / 3, 1 / 3], rtol=1e-15)
        assert int(lines["degree"].split()[0]) == 3
        assert float(lines["mu_Q"]) == pytest.approx(-4 / 15, rel=1e-15)

    def test_gl17_text(self):
        code, text = run(["analyze", "--family", "gl", "--n", "17"])
        assert code == 0
        lines = dict(
            line.split(":", 1) for line in text.splitlines() if ":" in line
        )
        assert int(lines["degree"].split()[0]) == 33
        assert float(lines["mu_Q"]) == pytest.approx(1.80e-10, rel=2e-2)
        assert float(lines["angle_deg"]) == pytest.approx(0.000154, rel=5e-2)

    def test_unsupported_count_exits_2(self, capsys):
        code, _ = run(["analyze", "--family", "nc", "--n", "1"])
        assert code == 2
        assert "unsupported count" in capsys.readouterr().err

    def test_missing_n_exits_2(self):
        code, _ = run(["analyze", "--family", "nc"])
        assert code == 2

    def test_missing_nodes_file_exits_2(self):
        code, _ = run(["analyze", "--family", "custom"])
        assert code == 2

    def test_numerical_failure_exits_3(self, capsys):
        code, _ = run(["analyze", "--family", "nc", "--n", "5", "--eps-deg", "1e9"])
        assert code == 3
        assert "degree overflow" in capsys.readouterr().err

    def test_csv_round_trips(self):
        code, text = run(["analyze", "--family", "cc", "--n", "6", "--format", "csv"])
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(text)))
        assert len(rows) == 1
        row = rows[0]
        assert list(row) == list(CSV_COLUMNS)
        # 17 significant digits: parsing back gives the identical double
        code2, text2 = run(["analyze", "--family", "cc", "--n", "6", "--format", "csv"])
        assert text == text2
        assert float(row["N_omega"]) == pytest.approx(2.0, rel=1e-12)

    def test_json_mirrors_csv_columns(self):
        code, text = run(["analyze", "--family", "fejer1", "--n", "3", "--format", "json"])
        assert code == 0
        obj = json.loads(text)
        assert list(obj) == list(CSV_COLUMNS)
        assert obj["degree"] == 3
        assert obj["mu_Q"] == pytest.approx(-0.1, abs=1e-14)
        assert obj["error"] == ""

    def test_interval_flag(self, simpson_file):
        code, text = run([
            "analyze", "--family", "custom", "--nodes-file", simpson_file,
            "--interval", "-1", "3", "--format", "json",
        ])
        assert code == 0
        obj = json.loads(text)
        # weights sum to the interval length
        assert obj["N_omega"] >= 4.0 - 1e-12


class TestSweep:
    def test_deterministic_and_parsable(self, tmp_path):
        out1 = tmp_path / "a.csv"
        out2 = tmp_path / "b.csv"
        for out in (out1, out2):
            code, _ = run([
                "sweep", "--family", "gl", "--n-min", "2", "--n-max", "12",
                "--out", str(out),
            ])
            assert code == 0
        assert out1.read_bytes() == out2.read_bytes()
        rows = list(csv.DictReader(out1.open()))
        assert [int(r["n"]) for r in rows] == list(range(2, 13))
        assert [int(r["degree"]) for r in rows] == [2 * n - 1 for n in range(2, 13)]
        # values round-trip through the 17-digit format
        mu = float(rows[0]["mu_Q"])
        assert mu == pytest.approx(8 / 45, rel=1e-12)

    def test_nc_norm_column_shape(self, tmp_path):
        out = tmp_path / "nc.csv"
        code, _ = run([
            "sweep", "--family", "nc", "--n-min", "2", "--n-max", "15",
            "--out", str(out),
        ])
        assert code == 0
        rows = {int(r["n"]): r for r in csv.DictReader(out.open())}
        n_omega = {n: float(rows[n]["N_omega"]) for n in range(2, 16)}
        assert n_omega[11] < n_omega[13] < n_omega[15]
        assert n_omega[15] > 10.0

    def test_fejer_single_row(self, tmp_path):
        out = tmp_path / "f.csv"
        code, _ = run([
            "sweep", "--family", "fejer1", "--n-min", "3", "--n-max", "3",
            "--out", str(out),
        ])
        assert code == 0
        (row,) = list(csv.DictReader(out.open()))
        assert float(row["mu_Q"]) == pytest.approx(-0.1, abs=1e-14)

    def test_row_errors_recorded_run_continues(self, tmp_path):
        out = tmp_path / "err.csv"
        code, _ = run([
            "sweep", "--family", "nc", "--n-min", "1", "--n-max", "3",
            "--out", str(out),
        ])
        assert code == 0
        rows = list(csv.DictReader(out.open()))
        assert len(rows) == 3
        assert "unsupported count" in rows[0]["error"]
        assert rows[0]["degree"] == ""
        assert rows[1]["error"] == "" and rows[2]["error"] == ""

    def test_range_validation(self):
        code, _ = run([
            "sweep", "--family", "gl", "--n-min", "5", "--n-max", "70",
            "--out", "/tmp/never-written.csv",
        ])
        assert code == 2


class TestIntegrate:
    def test_simpson_cubic_is_exact(self, simpson_file):
        code, text = run([
            "integrate", "--family", "custom", "--nodes-file", simpson_file,
            "--integrand", "poly:0,0,0,1", "--format", "json",
        ])
        assert code == 0
        obj = json.loads(text)
        assert obj["value"] == pytest.approx(0.0, abs=1e-16)
        assert obj["c_n"] == pytest.approx((-4 / 15) / 24.0, rel=1e-14)

    def test_simpson_quartic_defect(self, simpson_file):
        code, text = run([
            "integrate", "--family", "custom", "--nodes-file", simpson_file,
            "--integrand", "poly:0,0,0,0,1", "--format", "json",
        ])
        assert code == 0
        assert json.loads(text)["value"] == pytest.approx(2 / 3, rel=1e-15)

    def test_gl_runge_convergence(self):
        # the integrand's poles at +-i/5 give a Gauss-Legendre convergence
        # factor rho = (1 + sqrt(26))/5, so the 10-node error sits near
        # rho^-20 ~ 1.9e-2 and drops below 1e-3 around 18 nodes
        truth = 0.4 * math.atan(5.0)
        code, text = run([
            "integrate", "--family", "gl", "--n", "10",
            "--integrand", "runge", "--format", "json",
        ])
        assert code == 0
        got = json.loads(text)["value"]
        # independent oracle: numpy's own Gauss-Legendre pairing
        x, w = np.polynomial.legendre.leggauss(10)
        oracle = float(w @ (1.0 / (1.0 + 25.0 * x * x)))
        assert got == pytest.approx(oracle, rel=1e-12)
        rho = (1.0 + math.sqrt(26.0)) / 5.0
        assert abs(got - truth) == pytest.approx(rho ** -20, rel=0.5)

        code, text = run([
            "integrate", "--family", "gl", "--n", "18",
            "--integrand", "runge", "--format", "json",
        ])
        assert code == 0
        assert abs(json.loads(text)["value"] - truth) <= 1e-3

    def test_expx(self):
        code, text = run([
            "integrate", "--family", "gl", "--n", "8",
            "--integrand", "expx", "--format", "json",
        ])
        assert code == 0
        truth = math.exp(1.0) - math.exp(-1.0)
        assert json.loads(text)["value"] == pytest.approx(truth, rel=1e-12)

    def test_unknown_integrand_exits_2(self, capsys):
        code, _ = run([
            "integrate", "--family", "gl", "--n", "3", "--integrand", "sinx",
        ])
        assert code == 2
        assert "unknown integrand" in capsys.readouterr().err

    def test_text_format(self, simpson_file):
        code, text = run([
            "integrate", "--family", "custom", "--nodes-file", simpson_file,
            "--integrand", "poly:1",
        ])
        assert code == 0
        assert "Q_3(f) = 2" in text


class TestParser:
    def test_usage_error_exits_2(self):
        with pytest.raises(SystemExit) as exc:
            main(["analyze"])  # missing --family
        assert exc.value.code == 2

    def test_unknown_family_exits_2(self, capsys):
        code, _ = run(["analyze", "--family", "simpson", "--n", "3"])
        assert code == 2
        assert "unknown family" in capsys.readouterr().err
