import json

import pytest

from qdemazure.cli import main
from qdemazure.report import Counterexample, VerifyReport
from qdemazure.verify import Bounds, SUITES, run_suite


def test_all_suites_pass_at_small_bounds():
    bounds = Bounds(max_len=6, max_nu=4, max_m=3)
    for name in SUITES:
        report = run_suite(name, bounds)
        assert report.passed, f"{name}: {report.render_text()}"
        assert report.checks > 0


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope")


def test_reports_are_deterministic():
    a = run_suite("symmetries", Bounds(max_len=5)).to_json(timestamp=False)
    b = run_suite("symmetries", Bounds(max_len=5)).to_json(timestamp=False)
    assert a == b


def test_parallel_matches_serial():
    serial = run_suite("formula-vs-oracle", Bounds(max_len=6), jobs=1)
    parallel = run_suite("formula-vs-oracle", Bounds(max_len=6), jobs=2)
    assert serial.passed and parallel.passed
    assert serial.checks == parallel.checks


def test_report_structure():
    report = VerifyReport(suite="demo", params={"n": 1}, checks=2,
                          counterexamples=[Counterexample((1, 2), "a", "b")])
    assert not report.passed
    data = report.to_dict()
    assert data["schema"] == 1
    assert data["counterexamples"] == [{"inputs": [1, 2], "lhs": "a", "rhs": "b"}]
    assert "timestamp" in data
    assert "timestamp" not in report.to_dict(timestamp=False)
    assert "FAIL" in report.render_text()


def test_cli_xi(capsys):
    assert main(["xi", "--a", "0", "--b", "0", "--i", "2", "--k", "0"]) == 0
    assert capsys.readouterr().out.strip() == "1"
    assert main(["xi", "--a", "2", "--b", "3", "--i", "2", "--k", "6"]) == 0
    assert capsys.readouterr().out.strip() == "0"


def test_cli_xi_methods_agree(capsys):
    outs = []
    for method in ("formula", "oracle", "recursion"):
        assert main(["xi", "--a", "3", "--b", "5", "--i", "2", "--k", "4",
                     "--method", method]) == 0
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1] == outs[2]


def test_cli_xi_json(capsys):
    assert main(["xi", "--a", "1", "--b", "1", "--i", "1", "--k", "2",
                 "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["schema"] == 1
    assert data["value"] == {"0": "1"}


def test_cli_word(capsys):
    assert main(["word", "--a", "3", "--b", "5", "--i", "2"]) == 0
    assert capsys.readouterr().out.strip() == "1 2 3 1 3 2 1 3 2"


def test_cli_magic_golden(capsys):
    assert main(["magic", "--nu", "8", "--k", "4", "--beta", "3", "--eps", "0"]) == 0
    out = capsys.readouterr().out.strip()
    assert out.startswith("1 + p^36") and out.endswith("p^144")


def test_cli_xi_rou(capsys):
    assert main(["xi-rou", "--m", "3", "--a", "1", "--i", "1"]) == 0
    assert capsys.readouterr().out.strip() == "0"
    assert main(["xi-rou", "--m", "2", "--a", "2", "--i", "1", "--method", "specialize"]) == 0
    assert capsys.readouterr().out.strip() == "-4*p^2"


def test_cli_usage_errors():
    with pytest.raises(SystemExit) as exc:
        main(["xi", "--a", "1", "--b", "1", "--i", "1", "--k", "9"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "bogus"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["xi", "--a", "1", "--b", "1", "--i", "7", "--k", "1"])
    assert exc.value.code == 2


def test_cli_verify_pass_and_report_file(tmp_path, capsys):
    out = tmp_path / "report.json"
    code = main(["verify", "calibration", "--format", "json", "--out", str(out)])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["suite"] == "calibration" and payload["passed"]
    saved = json.loads(out.read_text())
    assert saved[0]["suite"] == "calibration"


def test_cli_verify_failure_exit_code(monkeypatch, capsys):
    import qdemazure.cli as climod

    def broken(bounds, jobs=1):
        return VerifyReport(suite="relations", params={}, checks=1,
                            counterexamples=[Counterexample((0,), "x", "y")])

    monkeypatch.setitem(climod.SUITES, "relations", broken)
    assert main(["verify", "relations"]) == 1
    assert "FAIL" in capsys.readouterr().out


def test_cli_verify_small_sweep(capsys):
    code = main(["verify", "formula-vs-oracle", "--max-len", "5", "--jobs", "2"])
    assert code == 0
    assert capsys.readouterr().out.startswith("PASS formula-vs-oracle")
