import json

import pytest
from click.testing import CliRunner

from mwfilt.cli import main


@pytest.fixture()
def runner():
    return CliRunner()


def run(runner, *args):
    return runner.invoke(main, list(args))


class TestDesignJson:
    def test_chebyshev_lowpass(self, runner):
        r = run(
            runner, "design", "--kind", "lp", "--family", "chebyshev",
            "--la", "40", "--lr", "20", "--fp", "1", "--fs", "2",
        )
        assert r.exit_code == 0
        doc = json.loads(r.stdout)
        assert doc["order"] == 6
        assert doc["spec"]["kind"] == "lowpass"
        assert doc["elements"]["type"] == "ladder"
        assert len(doc["elements"]["branches"]) == 6
        assert doc["response_emulated"] is not None
        assert doc["response_simulated"] is not None
        assert r.stdout.endswith("}\n")

    def test_uwb_coefficients(self, runner):
        r = run(
            runner, "design", "--kind", "uwb", "--lr", "20",
            "--f1", "3.1", "--f2", "10.6", "--grid", "6.85,6.85,1",
        )
        assert r.exit_code == 0
        doc = json.loads(r.stdout)
        assert doc["order"] == 4
        assert doc["elements"]["type"] == "uwb"
        assert doc["elements"]["alpha"] == pytest.approx(-0.6044, abs=1e-3)
        assert doc["response_emulated"]["s11_db"][0] == pytest.approx(-20.0, abs=1e-6)

    def test_coupled_alias(self, runner):
        r = run(
            runner, "design", "--kind", "coupled", "--la", "40", "--lr", "20",
            "--f0", "2", "--bw", "0.2", "--bws", "0.7", "--grid", "1.5,2.5,0.01",
        )
        assert r.exit_code == 0
        doc = json.loads(r.stdout)
        assert doc["order"] == 4
        assert doc["elements"]["type"] == "coupled_bpf"
        assert len(doc["elements"]["coupling_caps_pf"]) == 5

    def test_combline_elements_only(self, runner):
        r = run(
            runner, "design", "--kind", "combline", "--lr", "20",
            "--f0", "2", "--bw", "0.2", "--order", "4",
        )
        assert r.exit_code == 0
        doc = json.loads(r.stdout)
        assert doc["elements"]["type"] == "combline"
        assert len(doc["elements"]["odd_impedances_ohm"]) == 6
        assert doc["response_emulated"] is None
        assert doc["response_simulated"] is None


class TestDesignCsv:
    def test_butterworth_cutoff_landmark(self, runner):
        r = run(
            runner, "design", "--kind", "lp", "--family", "butterworth",
            "--la", "40", "--lr", "20", "--fp", "1", "--fs", "2",
            "--format", "csv", "--method", "simulate",
        )
        assert r.exit_code == 0
        lines = r.stdout.splitlines()
        assert lines[0] == "f_ghz,s21_db,s11_db"
        row = next(l for l in lines if l.startswith("1.000000,"))
        s21 = float(row.split(",")[1])
        assert s21 == pytest.approx(-3.0103, abs=0.01)

    def test_csv_matches_json_numbers(self, runner):
        args = [
            "design", "--kind", "lp", "--family", "chebyshev",
            "--la", "40", "--lr", "20", "--fp", "1", "--fs", "2",
            "--grid", "0.5,1.5,0.5",
        ]
        rj = runner.invoke(main, args)
        rc = runner.invoke(main, args + ["--format", "csv"])
        doc = json.loads(rj.stdout)
        rows = rc.stdout.splitlines()[1:]
        for i, row in enumerate(rows):
            f, s21, s11 = (float(x) for x in row.split(","))
            assert f == pytest.approx(doc["response_emulated"]["freq_ghz"][i], abs=1e-6)
            assert s21 == pytest.approx(doc["response_emulated"]["s21_db"][i], abs=1e-6)
            assert s11 == pytest.approx(doc["response_emulated"]["s11_db"][i], abs=1e-6)

    def test_out_file(self, runner, tmp_path):
        out = tmp_path / "resp.csv"
        r = run(
            runner, "design", "--kind", "lp", "--family", "butterworth",
            "--la", "40", "--lr", "20", "--fp", "1", "--fs", "2",
            "--format", "csv", "--out", str(out),
        )
        assert r.exit_code == 0
        assert out.read_text().startswith("f_ghz,s21_db,s11_db\n")


class TestErrors:
    def test_invalid_edges_exit_2(self, runner):
        r = run(
            runner, "design", "--kind", "lp", "--la", "40", "--lr", "20",
            "--fp", "2", "--fs", "1",
        )
        assert r.exit_code == 2
        err = json.loads(r.stderr.strip())
        assert err["error"] == "invalid_spec"
        assert err["message"]

    def test_missing_required_flag(self, runner):
        r = run(runner, "design", "--kind", "bp", "--la", "40", "--lr", "20", "--f1", "2")
        assert r.exit_code == 2
        assert json.loads(r.stderr.strip())["error"] == "invalid_spec"

    def test_infeasible_coupled_exit_2(self, runner):
        r = run(
            runner, "design", "--kind", "coupled", "--la", "40", "--lr", "20",
            "--f0", "2", "--bw", "2.5", "--bws", "5",
        )
        assert r.exit_code == 2
        assert json.loads(r.stderr.strip())["error"] in ("invalid_spec", "infeasible_design")


class TestTable1:
    def test_csv_rows(self, runner):
        r = run(runner, "table1")
        assert r.exit_code == 0
        lines = r.stdout.strip().splitlines()
        assert lines[0] == "return_loss_db,reflection_coefficient,passband_ripple_db,ripple_factor"
        assert len(lines) == 21
        assert lines[1] == "1,0.8913,6.8683,1.9652"
        assert lines[20] == "20,0.1000,0.0436,0.1005"

    def test_json_rows(self, runner):
        r = run(runner, "table1", "--format", "json")
        rows = json.loads(r.stdout)
        assert len(rows) == 20
        row10 = next(x for x in rows if x["return_loss_db"] == 10)
        assert row10["reflection_coefficient"] == pytest.approx(0.3162)
        assert row10["ripple_factor"] == pytest.approx(0.3333)
