"""Command line surface tests: payloads, formats, exit codes, round trips."""

import csv
import io
import json
import math

import pytest

from ncx2shape import Params, critical_lambda, density_bessel
from ncx2shape.cli import main
from ncx2shape.errors import BracketError


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def run_csv(capsys, *argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 0, err
    return list(csv.reader(io.StringIO(out)))


class TestEval:
    def test_single_point_central(self, capsys):
        env = run_json(capsys, "eval", "--nu", "2", "--lambda", "0", "--x", "2")
        assert env["format"] == "json"
        assert env["meta"]["version"]
        row = env["payload"]["rows"][0]
        assert abs(row["density"] - 0.183940) < 5e-7
        assert abs(row["density"] - math.exp(row["log_density"])) < 1e-12

    def test_cross_form_agreement(self, capsys):
        env = run_json(capsys, "eval", "--nu", "1", "--lambda", "5", "--x", "3")
        from ncx2shape import density_series
        p = Params(nu=1, lam=5)
        got = env["payload"]["rows"][0]["density"]
        assert abs(got - density_series(p, 3.0)) < 1e-11
        assert abs(got - density_bessel(p, 3.0)) < 1e-11

    def test_grid_csv(self, capsys):
        rows = run_csv(capsys, "eval", "--nu", "1", "--lambda", "5",
                       "--x-min", "0.001", "--x-max", "15", "--points", "500",
                       "--format", "csv")
        assert rows[0] == ["x", "density", "log_density", "d1", "d2"]
        assert len(rows) == 501
        assert float(rows[1][0]) == 0.001
        assert float(rows[-1][0]) == 15.0

    def test_csv_round_trip(self, capsys):
        # re-evaluate the density at the printed x and compare at 12 digits
        rows = run_csv(capsys, "eval", "--nu", "1", "--lambda", "5",
                       "--x-min", "0.001", "--x-max", "15", "--points", "50",
                       "--format", "csv")
        p = Params(nu=1, lam=5)
        for row in rows[1:]:
            x, dens = float(row[0]), float(row[1])
            again = density_bessel(p, x)
            assert abs(again - dens) <= 1e-9 * max(1.0, again)

    def test_flag_conflicts(self, capsys):
        code, _, err = run_cli(capsys, "eval", "--nu", "1", "--lambda", "5",
                               "--x", "1", "--x-min", "0.1", "--x-max", "1", "--points", "5")
        assert code == 2 and "error" in err
        code, _, err = run_cli(capsys, "eval", "--nu", "1", "--lambda", "5", "--x-min", "0.1")
        assert code == 2

    def test_invalid_values(self, capsys):
        assert run_cli(capsys, "eval", "--nu", "-1", "--lambda", "5", "--x", "1")[0] == 2
        assert run_cli(capsys, "eval", "--nu", "1", "--lambda", "-5", "--x", "1")[0] == 2
        assert run_cli(capsys, "eval", "--nu", "1", "--lambda", "5", "--x", "0")[0] == 2


class TestClassify:
    def test_bimodal(self, capsys):
        env = run_json(capsys, "classify", "--nu", "1", "--lambda", "5")
        payload = env["payload"]
        assert payload["bimodal"] is True
        assert abs(payload["critical_lambda"] - 4.217) < 5e-4

    def test_log_concave(self, capsys):
        payload = run_json(capsys, "classify", "--nu", "3", "--lambda", "1")["payload"]
        assert payload["log_concave"] is True
        assert payload["critical_lambda"] is None

    def test_overlap(self, capsys):
        payload = run_json(capsys, "classify", "--nu", "2", "--lambda", "2")["payload"]
        assert payload["decreasing"] is True and payload["log_concave"] is True

    def test_csv(self, capsys):
        rows = run_csv(capsys, "classify", "--nu", "1", "--lambda", "5", "--format", "csv")
        assert rows[0][0] == "nu"
        assert rows[1][rows[0].index("bimodal")] == "true"


class TestCriticalTable:
    TABLE = {0.25: 4.769, 0.5: 4.661, 0.75: 4.467, 1.0: 4.217,
             1.25: 3.914, 1.5: 3.548, 1.75: 3.073}

    def test_default_rows(self, capsys):
        payload = run_json(capsys, "critical-table")["payload"]
        rows = payload["rows"]
        assert [r["nu"] for r in rows] == sorted(self.TABLE)
        for r in rows:
            assert abs(r["lambda_nu"] - self.TABLE[r["nu"]]) < 5e-4
            assert r["iterations"] > 0

    def test_single_nu_tight_tol(self, capsys):
        payload = run_json(capsys, "critical-table", "--nu", "1", "--tol", "1e-10")["payload"]
        value = payload["rows"][0]["lambda_nu"]
        assert round(value, 3) == 4.217
        res = critical_lambda(1.0, 1e-10)
        assert abs(value - res.lambda_nu) < 1e-10

    def test_range(self, capsys):
        rows = run_json(capsys, "critical-table", "--nu-min", "0.1", "--nu-max", "1.9",
                        "--steps", "19")["payload"]["rows"]
        assert len(rows) == 19
        assert all(r["lambda_nu"] > 2.0 for r in rows)

    def test_rejects_out_of_range(self, capsys):
        assert run_cli(capsys, "critical-table", "--nu", "3")[0] == 2
        assert run_cli(capsys, "critical-table", "--nu", "0")[0] == 2


class TestModes:
    def test_log_concave(self, capsys):
        payload = run_json(capsys, "modes", "--nu", "4", "--lambda", "5")["payload"]
        assert 6.0 < payload["interior_mode"] <= 7.0
        assert payload["bounds_lower"] == 6.0 and payload["bounds_upper"] == 7.0
        assert payload["zero_is_mode"] is False

    def test_bimodal(self, capsys):
        payload = run_json(capsys, "modes", "--nu", "1", "--lambda", "5")["payload"]
        assert payload["zero_is_mode"] is True
        assert 2.0 < payload["interior_mode"] < 3.0
        assert payload["antimode"] <= 2.0

    def test_no_interior_mode(self, capsys):
        payload = run_json(capsys, "modes", "--nu", "1", "--lambda", "4")["payload"]
        assert payload["zero_is_mode"] is True
        assert payload["interior_mode"] is None
        assert payload["bounds_lower"] is None


class TestEnvelope:
    def test_determinism(self, capsys):
        a = run_cli(capsys, "classify", "--nu", "1.3", "--lambda", "4.2")
        b = run_cli(capsys, "classify", "--nu", "1.3", "--lambda", "4.2")
        assert a == b

    def test_twelve_significant_digits(self, capsys):
        _, out, _ = run_cli(capsys, "critical-table", "--nu", "1", "--format", "csv")
        value = out.splitlines()[1].split(",")[1]
        mantissa = value.replace("-", "").replace(".", "").lstrip("0")
        assert len(mantissa) <= 12

    def test_numerical_failure_exit_code(self, capsys, monkeypatch):
        import ncx2shape.cli as climod

        def boom(nu, tol):
            raise BracketError("forced failure")

        monkeypatch.setattr(climod, "critical_lambda", boom)
        code, _, err = run_cli(capsys, "critical-table", "--nu", "1")
        assert code == 3
        assert "numerical failure" in err
