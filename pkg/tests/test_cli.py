import json
import subprocess
import sys

import pytest

from slzt.cli import (
    FAIL, INCONCLUSIVE, PASS, CheckRecord, RunConfig, VerificationReport, build_parser, cmd_all, config_from_args,
    main, run_check,
)
from slzt.errors import ConstructionError, PrecisionError


def run_main(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_root_stage_text(capsys):
    code, out = run_main(capsys, "verify", "root", "--n", "2")
    assert code == 0
    assert "PASS" in out and "root.leading_coefficients" in out
    assert out.strip().endswith(": pass")


def test_root_reports_c0(capsys):
    code, out = run_main(capsys, "verify", "root", "--n", "2", "--format", "json")
    report = json.loads(out)
    lead = next(c for c in report["checks"] if c["name"] == "root.leading_coefficients")
    assert lead["witness"]["c0"][0] == -1


def test_json_schema(capsys):
    code, out = run_main(capsys, "verify", "torus", "--n", "2", "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert set(report) == {"config", "checks", "summary"}
    for check in report["checks"]:
        assert set(check) == {"name", "anchor", "status", "witness", "millis"}
        assert check["anchor"] and check["status"] in (PASS, FAIL, INCONCLUSIVE)
        assert check["millis"] is None
    assert report["summary"]["total"] == len(report["checks"])
    assert report["config"]["command"] == "torus" and report["config"]["ell"] == "auto"


def test_timing_flag(capsys):
    _, out = run_main(capsys, "verify", "root", "--n", "2", "--format", "json", "--timing")
    assert all(isinstance(c["millis"], int) for c in json.loads(out)["checks"])


@pytest.mark.parametrize("argv", [
    ["verify", "root", "--n", "1"],
    ["verify", "root", "--n", "3", "--prec", "0"],
    ["verify", "torus", "--word-bound", "0"],
    ["verify", "cycle", "--ell", "zero"],
    ["verify", "cycle", "--ell", "-2"],
    ["verify", "nowhere"],
    ["verify", "root", "--format", "xml"],
])
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_exit_code_contract():
    cfg = RunConfig()
    rep = VerificationReport({})
    assert rep.exit_code == 0
    rep.add(CheckRecord("a", "x", INCONCLUSIVE, {}))
    assert rep.exit_code == 3
    rep.add(CheckRecord("b", "x", FAIL, {}))
    assert rep.exit_code == 1
    assert rep.summary == {"total": 2, "passed": 0, "failed": 1, "inconclusive": 1, "status": FAIL}
    cfg.validate()


def test_run_check_retries_once_at_deeper_floor():
    seen = []

    def fn(floor):
        seen.append(floor)
        if floor > -20:
            raise PrecisionError("too shallow")
        return True, {}

    rep = VerificationReport({})
    rec = run_check(rep, RunConfig(), "c", "anchor", fn, -10)
    assert seen == [-10, -20]
    assert rec.status == PASS and rec.witness["retried_floor"] == -20


def test_run_check_inconclusive_and_fail():
    rep = VerificationReport({})

    def never(floor):
        raise PrecisionError("never enough")

    def broken(floor):
        raise ConstructionError("bad input")

    assert run_check(rep, RunConfig(), "p", "a", never, -5).status == INCONCLUSIVE
    assert run_check(rep, RunConfig(), "q", "a", broken, -5).status == FAIL
    assert run_check(rep, RunConfig(), "r", "a", lambda f: (False, {}), None).status == FAIL
    assert rep.exit_code == 1


def test_config_from_args():
    args = build_parser().parse_args(["verify", "cycle", "--n", "4", "--k", "2", "--ell", "6", "--seed", "9"])
    cfg = config_from_args(args)
    assert (cfg.n, cfg.k, cfg.ell, cfg.seed) == (4, 2, 6, 9)
    assert config_from_args(build_parser().parse_args(["verify", "cycle", "--ell", "auto"])).ell is None


def test_cycle_n2(capsys):
    code, out = run_main(capsys, "verify", "cycle", "--n", "2", "--format", "json")
    report = json.loads(out)
    assert code == 0 and report["summary"]["passed"] == report["summary"]["total"] == 10


def test_cycle_with_bad_ell_fails(capsys):
    code, out = run_main(capsys, "verify", "cycle", "--n", "3", "--k", "1", "--ell", "1", "--format", "json")
    report = json.loads(out)
    assert code == 1
    cert = next(c for c in report["checks"] if c["name"] == "cycle.membership_certificates")
    assert cert["status"] == FAIL


def test_all_stops_after_failing_stage(monkeypatch):
    from slzt import cli

    def failing(config):
        rep = VerificationReport({})
        rep.add(CheckRecord("torus.x", "a", FAIL, {}))
        return rep

    monkeypatch.setitem(cli.COMMANDS, "torus", failing)
    rep = cmd_all(RunConfig(n=2))
    names = [c.name for c in rep.checks]
    assert "torus.x" in names and not any(n.startswith("building.") for n in names)
    assert rep.exit_code == 1


def test_seeded_reports_are_deterministic(capsys):
    _, first = run_main(capsys, "verify", "building", "--n", "2", "--seed", "5", "--format", "json")
    _, second = run_main(capsys, "verify", "building", "--n", "2", "--seed", "5", "--format", "json")
    assert first == second


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "slzt", "verify", "root", "--n", "2"],
                         capture_output=True, text=True, timeout=120)
    assert out.returncode == 0 and "pass" in out.stdout
