"""
Tests for scenario config parsing and validation
"""

import json

import pytest

from condenlab.config import DEFAULT_CONFIG
from condenlab.core.errors import ConfigError
from condenlab.scenarios.parser import ScenarioConfig, parse_config, validate_config
from condenlab.scenarios.schemas import EXAMPLE_CONFIGS, SCENARIO_SCHEMAS


def _violations(raw) -> list:
    with pytest.raises(ConfigError) as info:
        validate_config(raw, DEFAULT_CONFIG)
    return info.value.violations


def test_minimal_config_gets_defaults():
    config = parse_config('{"scenario": "refinance_game"}', DEFAULT_CONFIG)
    assert config == ScenarioConfig(
        scenario="refinance_game",
        params={
            "n_borrowers": 1000,
            "interest_pct": 100.0,
            "rounds": 1,
            "refinance": False,
            "money_growth_pct": 0.0,
            "money_supply": 1000.0,
            "trade_intensity": 0.5,
        },
        seed=0,
        output_dir=DEFAULT_CONFIG["output_dir"],
        formats=("csv", "json"),
    )


def test_config_defaults_come_from_user_config():
    user = {**DEFAULT_CONFIG, "ga_steps": 123, "output_dir": "elsewhere", "formats": ["svg"]}
    config = validate_config({"scenario": "ga_optimize"}, user)
    assert config.params["steps"] == 123
    assert config.params["mutation_scale"] == DEFAULT_CONFIG["ga_mutation_scale"]
    assert config.params["drain_rate"] == 0.0
    assert config.output_dir == "elsewhere"
    assert config.formats == ("svg",)


def test_ints_are_accepted_as_floats():
    config = validate_config({"scenario": "refinance_game", "params": {"interest_pct": 5}}, DEFAULT_CONFIG)
    assert config.params["interest_pct"] == 5.0
    assert isinstance(config.params["interest_pct"], float)


def test_unknown_scenario_names_nearest():
    (violation,) = _violations({"scenario": "refinance_gme"})
    assert violation == "unknown scenario 'refinance_gme'; did you mean 'refinance_game'?"


def test_negative_interest_is_reported():
    (violation,) = _violations({"scenario": "refinance_game", "params": {"interest_pct": -5}})
    assert violation == "params.interest_pct = -5 is below the minimum 0.0"


def test_every_violation_is_reported():
    violations = _violations(
        {
            "scenario": "refinance_game",
            "params": {"rounds": 1.5, "refinance": "yes", "n_borrowrs": 3},
            "seed": -1,
            "formats": ["csv", "pdf"],
            "colour": "red",
        }
    )
    assert len(violations) == 6
    assert any(v.startswith("unknown key 'colour'") for v in violations)
    assert any("params.rounds must be an integer" in v for v in violations)
    assert any("params.refinance must be a boolean" in v for v in violations)
    assert any("did you mean 'n_borrowers'?" in v for v in violations)
    assert any(v.startswith("seed must be a non-negative integer") for v in violations)
    assert any(v.startswith("unknown formats ['pdf']") for v in violations)


@pytest.mark.parametrize(
    "raw, fragment",
    [
        ([], "config must be a JSON object"),
        ({}, "missing required key 'scenario'"),
        ({"scenario": 3}, "scenario must be a string"),
        ({"scenario": "growth", "params": []}, "params must be a JSON object"),
        ({"scenario": "growth", "seed": True}, "seed must be a non-negative integer"),
        ({"scenario": "growth", "output_dir": ""}, "output_dir must be a non-empty string"),
        ({"scenario": "growth", "formats": []}, "formats must be a non-empty list"),
        ({"scenario": "clothespin", "params": {"path": "rent"}}, "is not one of"),
        ({"scenario": "house_price", "params": {"refund_fraction": 1.0}}, "must be less than 1.0"),
        ({"scenario": "growth", "params": {"alpha": 0}}, "must be greater than 0.0"),
        ({"scenario": "dividend_round", "params": {"declared": [1, "a"]}}, "must be a list of numbers"),
        ({"scenario": "dividend_round", "params": {"declared": [1, -2]}}, "params.declared[1] = -2"),
        ({"scenario": "capital_share", "params": {"cycles": 1001}}, "is above the maximum 1000"),
    ],
)
def test_single_violations(raw, fragment):
    violations = _violations(raw)
    assert any(fragment in v for v in violations), violations


def test_formats_as_comma_string_and_deduplicated():
    config = validate_config({"scenario": "growth", "formats": "svg, csv,svg"}, DEFAULT_CONFIG)
    assert config.formats == ("svg", "csv")


@pytest.mark.parametrize("text", [b"{", b'{"scenario": "growth",}', b"\xff\xfe", "not json"])
def test_malformed_documents(text):
    with pytest.raises(ConfigError):
        parse_config(text, DEFAULT_CONFIG)


def test_malformed_json_reports_position():
    with pytest.raises(ConfigError) as info:
        parse_config('{\n  "scenario": }', DEFAULT_CONFIG)
    assert info.value.violations[0].startswith("malformed JSON at line 2")


@pytest.mark.parametrize("name", sorted(EXAMPLE_CONFIGS))
def test_example_configs_validate(name):
    config = parse_config(json.dumps(EXAMPLE_CONFIGS[name]), DEFAULT_CONFIG)
    assert config.scenario == name
    assert set(config.params) == set(SCENARIO_SCHEMAS[name]["params"])


def test_every_scenario_has_an_example():
    assert set(EXAMPLE_CONFIGS) == set(SCENARIO_SCHEMAS)
