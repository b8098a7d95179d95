"""
Tests for the condenlab command line
"""

import json

import pytest

from condenlab import __version__
from condenlab.cli import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, main
from condenlab.models import credit
from condenlab.scenarios.schemas import EXAMPLE_CONFIGS, SCENARIO_SCHEMAS


def _write_config(directory, name: str, document) -> str:
    path = directory / f"{name}.json"
    path.write_text(json.dumps(document), encoding="utf-8")
    return str(path)


def test_run_writes_reports(tmp_path, capsys):
    config = _write_config(tmp_path, "growth", EXAMPLE_CONFIGS["growth"])
    out = tmp_path / "out"
    assert main(["run", "--config", config, "--out", str(out)]) == EXIT_OK
    assert sorted(p.name for p in out.iterdir()) == ["growth.csv", "growth.json"]
    assert str(out / "growth.csv") in capsys.readouterr().out


def test_reruns_are_byte_identical(tmp_path):
    config = _write_config(tmp_path, "refinance", EXAMPLE_CONFIGS["refinance_game"])
    for out in ("first", "second"):
        assert main(["run", "--config", config, "--out", str(tmp_path / out), "--format", "csv,json,svg"]) == EXIT_OK
    first = sorted((tmp_path / "first").iterdir())
    second = sorted((tmp_path / "second").iterdir())
    assert [p.name for p in first] == [p.name for p in second]
    assert any(p.suffix == ".svg" for p in first)
    for a, b in zip(first, second):
        assert a.read_bytes() == b.read_bytes()


def test_seed_override(tmp_path):
    config = _write_config(tmp_path, "game", {"scenario": "refinance_game", "params": {"n_borrowers": 50}})
    out = tmp_path / "out"
    assert main(["run", "--config", config, "--out", str(out), "--seed", "11", "--format", "json"]) == EXIT_OK
    document = json.loads((out / "game.json").read_text(encoding="utf-8"))
    assert document["metadata"]["seed"] == 11
    assert document["metadata"]["version"] == __version__


def test_several_configs_in_parallel(tmp_path):
    configs = [
        _write_config(tmp_path, name, EXAMPLE_CONFIGS[name]) for name in ("capital_share", "debt_ratio", "voting")
    ]
    args = ["run", "--out", str(tmp_path / "out"), "--format", "csv", "--jobs", "3"]
    for config in configs:
        args += ["--config", config]
    assert main(args) == EXIT_OK
    written = sorted(p.name for p in (tmp_path / "out").iterdir())
    assert written == ["capital_share.csv", "debt_ratio.csv", "voting.csv"]


def test_invalid_config_is_a_usage_error(tmp_path, caplog):
    config = _write_config(tmp_path, "bad", {"scenario": "refinance_game", "params": {"interest_pct": -5}})
    assert main(["run", "--config", config, "--out", str(tmp_path / "out")]) == EXIT_USAGE
    assert "params.interest_pct = -5 is below the minimum 0.0" in caplog.text
    assert not (tmp_path / "out").exists()


def test_missing_config_file(tmp_path):
    assert main(["run", "--config", str(tmp_path / "absent.json")]) == EXIT_USAGE


def test_duplicate_config_names(tmp_path):
    (tmp_path / "a").mkdir()
    (tmp_path / "b").mkdir()
    first = _write_config(tmp_path / "a", "same", EXAMPLE_CONFIGS["growth"])
    second = _write_config(tmp_path / "b", "same", EXAMPLE_CONFIGS["growth"])
    assert main(["run", "--config", first, "--config", second, "--out", str(tmp_path / "out")]) == EXIT_USAGE


def test_model_error_is_a_usage_error(tmp_path):
    document = {"scenario": "voting", "params": {"network": str(tmp_path / "missing.net")}}
    config = _write_config(tmp_path, "vote", document)
    assert main(["run", "--config", config, "--out", str(tmp_path / "out")]) == EXIT_USAGE


@pytest.mark.parametrize("argv", [["run", "--config", "x.json", "--format", "pdf"], ["launch"], []])
def test_bad_arguments_exit_with_usage(argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == EXIT_USAGE


def test_list_scenarios(capsys):
    assert main(["list-scenarios"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert [line.split()[0] for line in lines] == sorted(SCENARIO_SCHEMAS)


def test_list_scenarios_with_examples(capsys):
    assert main(["list-scenarios", "--examples"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    examples = [json.loads(line) for line in lines if line.startswith("    ")]
    assert len(examples) == len(SCENARIO_SCHEMAS)


def test_verify(capsys):
    assert main(["verify"]) == EXIT_OK
    assert capsys.readouterr().out.rstrip().endswith("checks passed")


def test_verify_reports_failure(monkeypatch, capsys):
    monkeypatch.setattr(credit, "bankruptcy_fraction", lambda interest_pct: 49)
    assert main(["--log-level", "warning", "verify"]) == EXIT_CHECK_FAILED
    assert "FAIL  bankruptcy_fraction_at_100" in capsys.readouterr().out
