import json

import pytest

from starcayley import cli
from starcayley.report import ALL_SUITES, RunConfig, run, write_report


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestExitCodes:
    def test_zero_mu_is_config_error(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--algebra", "rank1", "--mu", "0")
        assert code == 2
        assert "mu" in err

    def test_unknown_algebra_is_config_error(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--algebra", "oct:3")
        assert code == 2
        assert "error" in err

    def test_unknown_suite_is_config_error(self, capsys):
        code, _, err = run_cli(
            capsys, "verify", "--algebra", "rank1", "--suites", "nonsense"
        )
        assert code == 2

    def test_bad_mu_string(self, capsys):
        code, _, _ = run_cli(capsys, "verify", "--mu", "one")
        assert code == 2

    def test_spin_needs_two_dimensions(self, capsys):
        code, _, _ = run_cli(capsys, "verify", "--algebra", "spin:1")
        assert code == 2

    def test_passing_suites_exit_zero(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--algebra", "rank1", "--suites", "jordan,chart"
        )
        assert code == 0
        assert "[PASS]" in out

    def test_failing_suite_exit_one(self, capsys):
        # the operator-transform suite fails by a global sign/parity
        # (documented measured discrepancy), which must surface as exit 1
        code, out, _ = run_cli(
            capsys, "verify", "--algebra", "rank1", "--suites", "fourier"
        )
        assert code == 1
        assert "[FAIL]" in out


class TestJsonReport:
    def test_schema_and_file_output(self, capsys, tmp_path):
        out_file = tmp_path / "report.json"
        code, out, _ = run_cli(
            capsys,
            "verify",
            "--algebra",
            "rank1",
            "--suites",
            "jordan,lie,chart",
            "--format",
            "json",
            "--out",
            str(out_file),
        )
        assert code == 0
        data = json.loads(out)
        assert data["algebra"] == "rank1"
        assert set(data["suites"]) == {"jordan", "lie", "chart"}
        for suite in data["suites"].values():
            assert "passed" in suite
        assert json.loads(out_file.read_text()) == data

    def test_constants_block(self, capsys):
        _, out, _ = run_cli(
            capsys,
            "verify",
            "--algebra",
            "spin:3",
            "--suites",
            "lie",
            "--format",
            "json",
        )
        data = json.loads(out)
        consts = data["constants"]
        assert consts["dim_algebra"] == 3
        assert consts["dim_g"] == 10
        assert consts["beta_oo"] == "6"


class TestShowAndList:
    def test_list_algebras(self, capsys):
        code, out, _ = run_cli(capsys, "list-algebras")
        assert code == 0
        for sel in ("rank1", "spin:3", "sym:2"):
            assert sel in out
        assert "dim_g=10" in out

    def test_show_bracket_table(self, capsys):
        code, out, _ = run_cli(
            capsys, "show", "--algebra", "rank1", "--what", "bracket-table"
        )
        assert code == 0
        table = json.loads(out)
        assert any(key.startswith("[") for key in table)

    @pytest.mark.parametrize("what", ["moment-maps", "rho", "dpi"])
    def test_show_computed_objects(self, capsys, what):
        code, out, _ = run_cli(capsys, "show", "--algebra", "rank1", "--what", what)
        assert code == 0
        assert out.strip()


class TestReportApi:
    def test_all_suites_constant(self):
        assert ALL_SUITES == ("jordan", "lie", "chart", "star", "fourier", "theorem")

    def test_text_report_one_line_per_check(self):
        config = RunConfig(algebra="rank1", mu=1, suites=("jordan",))
        config.validate()
        rep = run(config)
        text = write_report(rep, config)
        assert text.count("[PASS]") + text.count("[FAIL]") >= 1
