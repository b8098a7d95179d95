# -*- coding: utf-8 -*-
# @Time    : 2024/5/16 10:05
# @Author  : YQ Tsui
# @File    : parser.py
# @Purpose : Scenario config parsing and validation

import difflib
import json
from dataclasses import dataclass, field
from typing import Any, Mapping, Optional, Union

from ..config import CONFIG
from ..core.errors import ConfigError
from .schemas import SCENARIO_SCHEMAS

KNOWN_FORMATS = ("csv", "json", "svg")
TOP_LEVEL_KEYS = ("scenario", "params", "seed", "output_dir", "formats")


@dataclass(frozen=True)
class ScenarioConfig:
    """
    :ivar str scenario: Registered scenario name.
    :ivar dict params: Every parameter of the scenario, defaults filled in.
    :ivar int seed: Generator seed.
    :ivar str output_dir: Directory the report is written to.
    :ivar tuple formats: Output formats, a subset of csv, json and svg.
    """

    scenario: str
    params: dict = field(default_factory=dict)
    seed: int = 0
    output_dir: str = "condenlab_out"
    formats: tuple = ("csv", "json")


def _is_number(value) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def _check_bounds(name: str, value, spec: Mapping, violations: list):
    if "min" in spec and value < spec["min"]:
        violations.append(f"params.{name} = {value!r} is below the minimum {spec['min']!r}")
    if "max" in spec and value > spec["max"]:
        violations.append(f"params.{name} = {value!r} is above the maximum {spec['max']!r}")
    if "gt" in spec and value <= spec["gt"]:
        violations.append(f"params.{name} = {value!r} must be greater than {spec['gt']!r}")
    if "lt" in spec and value >= spec["lt"]:
        violations.append(f"params.{name} = {value!r} must be less than {spec['lt']!r}")


def _coerce_param(name: str, value, spec: Mapping, violations: list):
    kind = spec["type"]
    if kind == "bool":
        if not isinstance(value, bool):
            violations.append(f"params.{name} must be a boolean, got {value!r}")
        return value
    if kind == "str":
        if not isinstance(value, str):
            violations.append(f"params.{name} must be a string, got {value!r}")
        elif "choices" in spec and value not in spec["choices"]:
            violations.append(f"params.{name} = {value!r} is not one of {spec['choices']}")
        return value
    if kind == "int":
        if not isinstance(value, int) or isinstance(value, bool):
            violations.append(f"params.{name} must be an integer, got {value!r}")
            return value
        _check_bounds(name, value, spec, violations)
        return value
    if kind == "float":
        if not _is_number(value):
            violations.append(f"params.{name} must be a number, got {value!r}")
            return value
        _check_bounds(name, value, spec, violations)
        return float(value)
    if kind == "float_list":
        if not isinstance(value, list) or not all(_is_number(v) for v in value):
            violations.append(f"params.{name} must be a list of numbers, got {value!r}")
            return value
        for k, v in enumerate(value):
            _check_bounds(f"{name}[{k}]", v, spec, violations)
        return [float(v) for v in value]
    raise KeyError(f"unknown parameter type {kind!r} for {name}")


def _default(spec: Mapping, config: Mapping):
    if "config_default" in spec:
        return config[spec["config_default"]]
    value = spec["default"]
    return list(value) if isinstance(value, list) else value


def validate_config(raw: Any, config: Optional[Mapping] = None) -> ScenarioConfig:
    """
    Checks a decoded config against the scenario schema and fills in defaults.

    :param raw: The decoded JSON document.
    :type raw: Any
    :param config: User configuration supplying defaults; :data:`condenlab.config.CONFIG` if omitted.
    :type config: Mapping, optional
    :return: The validated config.
    :rtype: ScenarioConfig
    :raises ConfigError: Listing every violation found.
    """
    config = CONFIG if config is None else config
    if not isinstance(raw, dict):
        raise ConfigError([f"config must be a JSON object, got {type(raw).__name__}"])
    violations = []
    for key in raw:
        if key not in TOP_LEVEL_KEYS:
            violations.append(f"unknown key {key!r}; allowed keys are {', '.join(TOP_LEVEL_KEYS)}")

    scenario = raw.get("scenario")
    schema = None
    if scenario is None:
        violations.append("missing required key 'scenario'")
    elif not isinstance(scenario, str):
        violations.append(f"scenario must be a string, got {scenario!r}")
    elif scenario not in SCENARIO_SCHEMAS:
        nearest = difflib.get_close_matches(scenario, SCENARIO_SCHEMAS, n=1, cutoff=0.0)
        hint = f"; did you mean {nearest[0]!r}?" if nearest else ""
        violations.append(f"unknown scenario {scenario!r}{hint}")
    else:
        schema = SCENARIO_SCHEMAS[scenario]

    raw_params = raw.get("params", {})
    params = {}
    if not isinstance(raw_params, dict):
        violations.append(f"params must be a JSON object, got {raw_params!r}")
    elif schema is not None:
        specs = schema["params"]
        for name in raw_params:
            if name not in specs:
                nearest = difflib.get_close_matches(name, specs, n=1)
                hint = f"; did you mean {nearest[0]!r}?" if nearest else ""
                violations.append(f"unknown parameter params.{name} for scenario {scenario!r}{hint}")
        for name, spec in specs.items():
            if name in raw_params:
                params[name] = _coerce_param(name, raw_params[name], spec, violations)
            elif spec.get("required"):
                violations.append(f"missing required parameter params.{name}")
            else:
                params[name] = _default(spec, config)

    seed = raw.get("seed", 0)
    if not isinstance(seed, int) or isinstance(seed, bool) or seed < 0:
        violations.append(f"seed must be a non-negative integer, got {seed!r}")

    output_dir = raw.get("output_dir", config["output_dir"])
    if not isinstance(output_dir, str) or not output_dir:
        violations.append(f"output_dir must be a non-empty string, got {output_dir!r}")

    formats = raw.get("formats", config["formats"])
    if isinstance(formats, str):
        formats = [f.strip() for f in formats.split(",") if f.strip()]
    if not isinstance(formats, list) or not formats:
        violations.append(f"formats must be a non-empty list, got {formats!r}")
    else:
        unknown = [f for f in formats if f not in KNOWN_FORMATS]
        if unknown:
            violations.append(f"unknown formats {unknown}; choose from {', '.join(KNOWN_FORMATS)}")

    if violations:
        raise ConfigError(violations)
    return ScenarioConfig(
        scenario=scenario,
        params=params,
        seed=seed,
        output_dir=output_dir,
        formats=tuple(dict.fromkeys(formats)),
    )


def parse_config(text: Union[bytes, str], config: Optional[Mapping] = None) -> ScenarioConfig:
    """
    Parses a JSON scenario config.

    :param text: UTF-8 encoded JSON.
    :type text: bytes
    :param config: User configuration supplying defaults.
    :type config: Mapping, optional
    :rtype: ScenarioConfig
    :raises ConfigError: On malformed syntax or any schema violation.
    """
    try:
        if isinstance(text, bytes):
            text = text.decode("utf-8")
        raw = json.loads(text)
    except UnicodeDecodeError as e:
        raise ConfigError([f"config is not valid UTF-8: {e}"]) from e
    except json.JSONDecodeError as e:
        raise ConfigError([f"malformed JSON at line {e.lineno}, column {e.colno}: {e.msg}"]) from e
    return validate_config(raw, config)
