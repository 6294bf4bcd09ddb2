"""Command line behaviour: exit codes, formats, scenarios, determinism."""

import json

import pytest

from horikawa import cli, faults
from horikawa.reporting import Report


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestClassifyCommand:
    def test_two_components(self, capsys):
        code, out, _err = run(capsys, "classify", "--k2", "8", "--chi", "7")
        assert code == 0
        assert "components: 2" in out
        assert "P^2" in out and "cone" in out

    def test_inadmissible_exits_one(self, capsys):
        code, out, _err = run(capsys, "classify", "--k2", "0", "--chi", "1")
        assert code == 1
        assert "inadmissible" in out
        assert "K^2 = 0 < 1" in out

    def test_sixteen_eleven(self, capsys):
        code, out, _err = run(capsys, "classify", "--k2", "16", "--chi", "11",
                              "--format", "json")
        assert code == 0
        report = Report.from_json(out)
        assert report.payload.info.count == 2

    def test_off_line_admissible(self, capsys):
        code, out, _err = run(capsys, "classify", "--k2", "9", "--chi", "7")
        assert code == 0
        assert "only exists on" in out


class TestConstructCommand:
    def test_stable_chi3(self, capsys):
        code, out, _err = run(capsys, "construct", "stable", "--chi", "3")
        assert code == 0
        assert "K^2 = 1" in out
        assert "exceptional witness (a, b) = (1, 0)" in out
        assert "one-third quotient points: 3" in out

    def test_component_two_k1(self, capsys):
        code, out, _err = run(capsys, "construct", "component-II", "--k", "1")
        assert code == 0
        assert "canonical image: P^2" in out

    def test_component_one_chi9(self, capsys):
        code, out, _err = run(capsys, "construct", "component-I", "--chi", "9",
                              "--format", "json")
        assert code == 0
        report = Report.from_json(out)
        recipe = report.payload.recipe
        assert recipe.report.k_squared == 12
        assert recipe.parameters == (1, 9, 3)

    def test_missing_parameter_usage_error(self, capsys):
        code, _out, err = run(capsys, "construct", "component-I")
        assert code == 2
        assert "needs --chi" in err

    def test_out_of_range_usage_error(self, capsys):
        code, _out, err = run(capsys, "construct", "component-I", "--chi", "3")
        assert code == 2
        assert "chi >= 4" in err

    def test_unknown_variant_usage_error(self, capsys):
        code, _out, _err = run(capsys, "construct", "component-III")
        assert code == 2

    def test_epsilon_family(self, capsys):
        code, out, _err = run(capsys, "construct", "stable", "--chi", "7",
                              "--epsilon", "5", "--format", "json")
        assert code == 0
        payload = Report.from_json(out).payload
        assert payload.record.k_squared == 13
        assert payload.record.ledger.third11_count == 15
        assert payload.recipe.report.k_squared == 8

    def test_epsilon_requires_stable_variant(self, capsys):
        code, _out, err = run(capsys, "construct", "component-I", "--chi", "7",
                              "--epsilon", "1")
        assert code == 2
        assert "epsilon" in err

    def test_epsilon_out_of_range(self, capsys):
        code, _out, err = run(capsys, "construct", "stable", "--chi", "4",
                              "--epsilon", "4")
        assert code == 2
        assert "contract" in err


class TestEnumerateCommand:
    def test_range_four_to_ten(self, capsys):
        code, out, _err = run(capsys, "enumerate", "--chi", "4", "--chi-max", "10",
                              "--format", "json")
        assert code == 0
        report = Report.from_json(out)
        rows = report.payload.rows
        assert len(rows) == 7
        counts = {row.chi: row.component_count for row in rows}
        assert counts[7] == 2
        assert all(count == 1 for chi, count in counts.items() if chi != 7)

    def test_empty_range(self, capsys):
        code, out, _err = run(capsys, "enumerate", "--chi", "11", "--chi-max", "10")
        assert code == 0
        assert "rows: 0" in out

    def test_chi_three_has_only_the_stable_line(self, capsys):
        code, out, _err = run(capsys, "enumerate", "--chi", "3", "--chi-max", "3",
                              "--format", "json")
        assert code == 0
        row = Report.from_json(out).payload.rows[0]
        assert row.general_type_k_squared is None
        assert row.component_count is None
        assert row.constructions == ("stable",)
        assert row.stable_k_squared == 1
        assert row.stable_third11_count == 3


class TestVerifyCommand:
    def test_minimal_accepted_range(self, capsys):
        code, out, _err = run(capsys, "verify-paper", "--chi-max", "6", "--k-max", "2")
        assert code == 0
        assert "checks passed" in out

    def test_too_small_range_rejected(self, capsys):
        code, _out, err = run(capsys, "verify-paper", "--chi-max", "5", "--k-max", "2")
        assert code == 2
        assert "chi_max" in err

    def test_deterministic_output(self, capsys):
        _code, first, _err = run(capsys, "verify-paper", "--chi-max", "8", "--k-max", "2")
        _code, second, _err = run(capsys, "verify-paper", "--chi-max", "8", "--k-max", "2")
        assert first == second
        _code, js1, _err = run(capsys, "verify-paper", "--chi-max", "8", "--k-max", "2",
                               "--format", "json")
        _code, js2, _err = run(capsys, "verify-paper", "--chi-max", "8", "--k-max", "2",
                               "--format", "json")
        assert js1 == js2

    def test_unknown_fault_rejected(self, capsys):
        code, _out, err = run(capsys, "verify-paper", "--inject-fault", "no-such-fault")
        assert code == 2
        assert "unknown fault" in err

    def test_injected_fault_names_identity(self, capsys):
        name = faults.fault_names()[0]
        code, out, _err = run(capsys, "verify-paper", "--chi-max", "8", "--k-max", "2",
                              "--inject-fault", name)
        assert code == 1
        assert "FAIL" in out
        assert "first violated identity:" in out


class TestScenarioFiles:
    def _write(self, tmp_path, payload):
        path = tmp_path / "scenario.json"
        path.write_text(json.dumps(payload), encoding="utf-8")
        return str(path)

    def test_classify_scenario(self, capsys, tmp_path):
        path = self._write(tmp_path, {"command": "classify", "k2": 8, "chi": 7,
                                      "format": "json"})
        code = cli.main(["--scenario", path])
        out = capsys.readouterr().out
        assert code == 0
        assert Report.from_json(out).payload.info.count == 2

    def test_construct_scenario_with_override(self, capsys, tmp_path):
        path = self._write(tmp_path, {
            "command": "construct", "variant": "stable", "chi": 5,
            "assumptions": {"general_position": False},
        })
        code = cli.main(["--scenario", path])
        err = capsys.readouterr().err
        assert code == 2
        assert "general position" in err

    def test_construct_scenario_default_assumptions(self, capsys, tmp_path):
        path = self._write(tmp_path, {"command": "construct", "variant": "component-II",
                                      "k": 2, "format": "json"})
        code = cli.main(["--scenario", path])
        out = capsys.readouterr().out
        assert code == 0
        assert Report.from_json(out).payload.recipe.report.k_squared == 16

    def test_unknown_key_rejected(self, capsys, tmp_path):
        path = self._write(tmp_path, {"command": "classify", "k2": 8, "chi": 7,
                                      "zeta": 1})
        code = cli.main(["--scenario", path])
        assert code == 2
        assert "unknown scenario keys" in capsys.readouterr().err

    def test_missing_file(self, capsys):
        code = cli.main(["--scenario", "/nonexistent/path.json"])
        assert code == 2
        assert "cannot read scenario" in capsys.readouterr().err

    def test_scenario_excludes_subcommand(self, capsys, tmp_path):
        path = self._write(tmp_path, {"command": "classify", "k2": 8, "chi": 7})
        code = cli.main(["--scenario", path, "classify", "--k2", "8", "--chi", "7"])
        assert code == 2


class TestExitCodes:
    def test_no_command_prints_help(self, capsys):
        assert cli.main([]) == 2

    def test_bad_flag_usage_error(self, capsys):
        assert cli.main(["classify", "--k2", "eight", "--chi", "7"]) == 2

    def test_help_exits_zero(self, capsys):
        assert cli.main(["--help"]) == 0


class TestJsonStability:
    @pytest.mark.parametrize("argv", [
        ["classify", "--k2", "8", "--chi", "7", "--format", "json"],
        ["construct", "component-I", "--chi", "6", "--format", "json"],
        ["construct", "component-II", "--k", "4", "--format", "json"],
        ["construct", "stable", "--chi", "3", "--format", "json"],
        ["construct", "stable", "--chi", "8", "--epsilon", "2", "--format", "json"],
        ["enumerate", "--chi", "3", "--chi-max", "9", "--format", "json"],
        ["verify-paper", "--chi-max", "7", "--k-max", "2", "--format", "json"],
    ])
    def test_cli_json_reserialises_byte_identically(self, capsys, argv):
        code, out, _err = run(capsys, *argv)
        assert code == 0
        assert Report.from_json(out).to_json() == out
