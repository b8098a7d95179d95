"""
Tests for the scenario runner table
"""

import dataclasses

import numpy as np
import pandas as pd
import pytest

from condenlab.config import DEFAULT_CONFIG
from condenlab.core.errors import ScenarioError
from condenlab.scenarios.parser import ScenarioConfig, validate_config
from condenlab.scenarios.registry import SCENARIO_RUNNERS, registered_scenarios, run_scenario
from condenlab.scenarios.schemas import EXAMPLE_CONFIGS, SCENARIO_SCHEMAS


def _example(name: str, **params) -> ScenarioConfig:
    raw = dict(EXAMPLE_CONFIGS[name])
    raw["params"] = {**raw.get("params", {}), **params}
    return validate_config(raw, DEFAULT_CONFIG)


def test_every_schema_has_a_runner():
    assert registered_scenarios() == sorted(SCENARIO_SCHEMAS)
    assert set(SCENARIO_RUNNERS) == set(SCENARIO_SCHEMAS)


@pytest.mark.parametrize("name", sorted(SCENARIO_SCHEMAS))
def test_examples_run_with_declared_columns(name):
    trajectory = run_scenario(_example(name))
    assert trajectory.scenario == name
    assert not trajectory.empty
    expected = SCENARIO_SCHEMAS[name]["columns"]
    if expected is not None:
        assert trajectory.columns == expected
    for col in trajectory.table.columns:
        assert not trajectory.table[col].map(lambda v: type(v).__name__ in ("Fraction", "Decimal")).any()


def test_runs_are_deterministic():
    config = _example("refinance_game", n_borrowers=300)
    first, second = run_scenario(config), run_scenario(config)
    pd.testing.assert_frame_equal(first.table, second.table)
    assert first.metadata == second.metadata


def test_seed_changes_the_monte_carlo():
    config = _example("refinance_game", n_borrowers=300, rounds=3, refinance=True, money_growth_pct=5.0)
    other = dataclasses.replace(config, seed=config.seed + 1)
    assert run_scenario(config).summary != run_scenario(other).summary


def test_debt_ratio_holds_at_fixed_point():
    trajectory = run_scenario(_example("debt_ratio"))
    assert (trajectory.table["debt_ratio"] == 1.0).all()
    assert trajectory.summary["fixed_point"] == 1.0
    assert len(trajectory.table) == 101


def test_ownership_series_ends_at_full_ownership():
    trajectory = run_scenario(_example("ownership"))
    assert trajectory.columns == ["term", "Amsterdam Bank", "Best Bank", "Credit Bank"]
    np.testing.assert_allclose(trajectory.table.iloc[-1, 1:].to_numpy(dtype=float), 1.0, atol=1e-10)
    assert trajectory.summary["max_disagreement"] < 1e-10


def test_dividend_round_summary():
    trajectory = run_scenario(_example("dividend_round"))
    assert trajectory.summary["conserved"]
    assert trajectory.metadata["summary"]["total_tax"] == 75.0
    assert trajectory.table["insolvent"].all()


def test_exact_columns_become_floats():
    trajectory = run_scenario(_example("capital_share"))
    assert trajectory.table["capital_share"].dtype == float
    assert trajectory.table["capital_share"].iloc[0] == 0.5
    assert len(trajectory.table) == 30


def test_dilemma_marks_equilibrium():
    table = run_scenario(_example("dilemma")).table
    nash = table[table["nash"]]
    assert nash[["a_strategy", "b_strategy"]].values.tolist() == [["confess", "confess"]]
    assert table["pareto"].sum() == 3


def test_ga_restarts_pick_a_seed():
    trajectory = run_scenario(_example("ga_optimize", steps=300, restarts=3, record_every=50), jobs=2)
    assert trajectory.table["step"].tolist() == [0, 50, 100, 150, 200, 250, 300]
    assert trajectory.summary["best_seed"] in (1, 2, 3)
    assert np.all(np.diff(trajectory.table["objective"]) >= 0)


def test_robotization_all_firms():
    trajectory = run_scenario(_example("robotization", n_robotized=-1))
    assert trajectory.table["collapse"].iloc[-1]
    assert trajectory.table["other_margin"].isna().all()


def test_model_errors_become_scenario_errors():
    with pytest.raises(ScenarioError) as info:
        run_scenario(_example("ownership", network="/nonexistent/holdings.net"))
    assert info.value.scenario == "ownership"


def test_unregistered_scenario():
    with pytest.raises(ScenarioError):
        run_scenario(ScenarioConfig(scenario="alchemy"))
