import json

import pytest
from sympy import Rational

from cli import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, build_parser, main, run_command
from nodes import NODE_CLASS_MAPPINGS
from nodes.base import SpinlatNodeBase


COMMANDS = {
    "validate", "spin-chars", "spin-square", "epsilon-check", "spinoriality", "orientation",
    "ep-index", "ep-index-half", "pseudo-index", "delta", "discrete-expand", "theta", "orbital",
    "orbital-general", "pseudo-orbital", "casimir-shift", "hc-constant", "weyl-factor", "delta-plus",
    "dirac-check", "selftest",
}


def results(report):
    return dict(report.results)


def run_ok(*argv):
    report, code = run_command(list(argv))
    assert code == EXIT_OK, report and report.checks
    return report


class TestRegistry:
    def test_every_command_is_registered(self):
        assert set(NODE_CLASS_MAPPINGS) == COMMANDS

    @pytest.mark.parametrize("command", sorted(COMMANDS))
    def test_node_shape(self, command):
        node_class = NODE_CLASS_MAPPINGS[command]
        assert issubclass(node_class, SpinlatNodeBase)
        assert node_class.COMMAND == command
        assert node_class.CATEGORY.startswith("Spinlat/")
        assert callable(getattr(node_class, node_class.FUNCTION))
        assert set(node_class.INPUT_TYPES()) <= {"required", "optional"}

    def test_parser_builds(self):
        assert build_parser().prog == "spinlat"


class TestCommands:
    def test_ep_index(self):
        report = run_ok("ep-index", "--datum", "sl2R.json", "--tau", "0", "--sigma", "0")
        assert results(report)["ep_index"] == 2
        assert report.passed

    def test_ep_index_shifted(self):
        report = run_ok("ep-index", "--datum", "sl2R.json", "--tau", "0", "--sigma=2")
        assert results(report)["ep_index"] == -1

    def test_ep_index_half(self):
        report = run_ok("ep-index-half", "--datum", "sl2R", "--p-minus=-2", "--tau", "0", "--sigma=2")
        assert results(report)["ep_index_half"] == -1

    def test_spin_square(self):
        report = run_ok("spin-square", "--weights", "1")
        assert results(report)["sign"] == -1
        assert results(report)["equal"] is True

    def test_spin_chars(self):
        report = run_ok("spin-chars", "--weights", "1;1")
        values = results(report)
        assert values["m"] == 2
        assert values["s_minus"].terms == {(0,): 2}

    def test_epsilon_check_two_dimensional(self):
        report = run_ok("epsilon-check", "--weights", "1,0;0,1")
        assert results(report)["flipped"] is False

    def test_discrete_expand_orbit_sum(self):
        report = run_ok("discrete-expand", "--datum", "su2.json", "--tau", "1;-1")
        assert report.passed

    def test_discrete_expand(self):
        report = run_ok("discrete-expand", "--datum", "sl2R.json", "--tau", "3")
        values = results(report)
        assert values["coeffs"] == {(6,): 1, (2,): -1}
        assert values["remainder"].is_empty()

    def test_validate_fixtures(self):
        for name in ("sl2R.json", "su2.json", "su3.json", "sp4R.json"):
            report = run_ok("validate", "--datum", name)
            assert report.passed

    def test_spinoriality(self):
        report = run_ok("spinoriality", "--datum", "sp4R.json")
        assert results(report)["lifts"] is False

    def test_pseudo_index(self):
        report = run_ok("pseudo-index", "--datum", "sl2R.json", "--tau", "0", "--sigma=-1")
        values = results(report)
        assert values["pseudo_index"] == 1
        assert values["ep_via_pseudo"] == values["ep_index"]

    def test_casimir_shift(self):
        report = run_ok("casimir-shift", "--datum", "sl2R.json", "--tau-highest", "0")
        assert results(report)["casimir_shift"] == Rational(-1, 2)

    def test_theta_and_orbital(self):
        run_ok("theta", "--datum", "sl2R.json", "--that", "1", "--angles", "0.7")
        report = run_ok("orbital", "--datum", "su3.json", "--tau-highest", "1,1", "--angles", "0.3,0.5")
        assert isinstance(results(report)["orbital_integral"], complex)

    def test_delta_plus(self):
        report = run_ok("delta-plus", "--split-datum", "sl2R_split.json", "--a", "1.0")
        assert results(report)["delta_plus"] == pytest.approx(2.3504023872876028)

    def test_hc_constant(self):
        report = run_ok("hc-constant", "--n-pos-roots", "1", "--n-noncompact", "1", "--nu", "1",
                        "--weyl-order", "1")
        assert results(report)["hc_constant"] < 0

    def test_dirac_check(self):
        report = run_ok("dirac-check", "--n", "3")
        assert results(report)["max_defect"] == 0


class TestExitCodes:
    def test_unknown_command(self):
        assert run_command(["frobnicate"]) == (None, EXIT_USAGE)

    def test_missing_required_option(self):
        assert run_command(["ep-index", "--datum", "sl2R.json"]) == (None, EXIT_USAGE)

    def test_truncated_datum(self, tmp_path, capsys):
        path = tmp_path / "broken.json"
        path.write_text('{"name": "x", "rank": 1,')
        assert run_command(["validate", "--datum", str(path)]) == (None, EXIT_USAGE)
        assert "DatumFile schema" in capsys.readouterr().err

    def test_both_tau_forms(self, capsys):
        argv = ["orbital", "--datum", "sl2R.json", "--angles", "1", "--tau", "0", "--tau-highest", "0"]
        assert run_command(argv) == (None, EXIT_USAGE)
        assert "DatumFile schema" in capsys.readouterr().err

    def test_argparse_error_prints_schema_help(self, capsys):
        assert run_command(["ep-index", "--datum", "sl2R.json"]) == (None, EXIT_USAGE)
        assert "DatumFile schema" in capsys.readouterr().err

    def test_half_integral_spin_weight(self, capsys):
        assert run_command(["spin-chars", "--weights", "1/2"]) == (None, EXIT_USAGE)
        err = capsys.readouterr().err
        assert "integral lattice" in err
        assert "DatumFile schema" in err

    def test_non_invariant_tau(self, capsys):
        argv = ["discrete-expand", "--datum", "su2.json", "--tau", "1"]
        assert run_command(argv) == (None, EXIT_USAGE)
        assert "NotInvariant" in capsys.readouterr().err

    def test_library_error(self, capsys):
        argv = ["ep-index", "--datum", "sl2R.json", "--tau", "0:-1", "--sigma", "0"]
        assert run_command(argv) == (None, EXIT_USAGE)
        assert "NegativeMultiplicity" in capsys.readouterr().err

    def test_singular_point(self):
        argv = ["theta", "--datum", "sl2R.json", "--that", "1", "--angles", "0"]
        assert run_command(argv) == (None, EXIT_USAGE)

    def test_out_of_range_option(self):
        assert run_command(["dirac-check", "--n", "0"]) == (None, EXIT_USAGE)

    def test_failed_check(self, monkeypatch):
        node_class = NODE_CLASS_MAPPINGS["spin-square"]
        monkeypatch.setattr(node_class, node_class.FUNCTION,
                            lambda self, **kwargs: ([("sign", 1)], [("forced", False)]))
        report, code = run_command(["spin-square", "--weights", "1"])
        assert code == EXIT_CHECK_FAILED
        assert report.checks == [("forced", False)]
        assert not report.passed


class TestMain:
    def test_json_output(self, capsys):
        assert main(["ep-index", "--datum", "sl2R.json", "--tau", "0", "--sigma", "0"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["command"] == "ep-index"
        assert data["results"] == [{"name": "ep_index", "value": "2"}]
        assert data["passed"] is True

    def test_tsv_output(self, capsys):
        assert main(["--format", "tsv", "spin-square", "--weights", "1"]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "name\tvalue"
        assert "sign\t-1" in lines
        assert "check:lhs_equals_signed_rhs\tpass" in lines

    def test_usage_error_prints_nothing_to_stdout(self, capsys):
        assert main(["ep-index"]) == EXIT_USAGE
        assert capsys.readouterr().out == ""
