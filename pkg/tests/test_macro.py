"""
Tests for growth, debt ratio, money printing and housing models
"""

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from condenlab.core.errors import DomainError
from condenlab.models.macro import (
    GrowthParams,
    GrowthRegime,
    MonetaryState,
    debt_ratio_trajectory,
    first_labor_decline,
    growth_rate,
    growth_trajectory,
    growth_value,
    house_price,
    labor_squeeze,
    malthus_classify,
    net_housing_cost,
    print_money,
    seigniorage_transfer,
)


@pytest.mark.parametrize("E0, alpha, t", [(1.0, 1.0, 1.0), (2.5, 2.0, 5.0), (1.0, 10.0, 3.0), (0.1, 0.5, 2.0)])
def test_growth_closed_matches_numeric(E0, alpha, t):
    params = GrowthParams(E0=E0, alpha=alpha)
    closed = growth_value(params, t)
    numeric = growth_value(params, t, "numeric")
    assert closed == pytest.approx(E0 * math.exp(t / alpha))
    assert abs(closed - numeric) / closed < 1e-9


def test_growth_at_zero_is_initial():
    params = GrowthParams(E0=3.0, alpha=2.0)
    assert growth_value(params, 0.0) == 3.0
    assert growth_value(params, 0.0, "numeric") == 3.0


@pytest.mark.parametrize("changes", [{"E0": 0.0}, {"alpha": 0.0}, {"alpha": -1.0}])
def test_growth_params_domain(changes):
    with pytest.raises(DomainError):
        GrowthParams(**changes)


def test_growth_value_rejects_bad_arguments():
    params = GrowthParams()
    with pytest.raises(DomainError):
        growth_value(params, -1.0)
    with pytest.raises(DomainError):
        growth_value(params, 1.0, "euler")


def test_growth_rate():
    assert growth_rate(0.5) == 2.0
    with pytest.raises(DomainError):
        growth_rate(0)


def test_growth_trajectory_columns():
    table = growth_trajectory(GrowthParams(alpha=2.0), 4.0, 5)
    assert list(table.columns) == ["t", "closed", "numeric"]
    assert table["t"].tolist() == [0.0, 1.0, 2.0, 3.0, 4.0]
    np.testing.assert_allclose(table["closed"], table["numeric"], rtol=1e-9)


@pytest.mark.parametrize(
    "series, regime",
    [
        ([1.0, 2.0, 3.0], GrowthRegime.GROWING),
        ([1.0, 2.0, 2.0], GrowthRegime.STAGNATING),
        ([1.0, 2.0, 1.5], GrowthRegime.CATASTROPHE),
        ([1.0, 0.5, -0.5], GrowthRegime.CATASTROPHE),
        ([0.0, 1.0], GrowthRegime.CATASTROPHE),
    ],
)
def test_malthus_classify(series, regime):
    assert malthus_classify(series) is regime


def test_malthus_needs_two_values():
    with pytest.raises(DomainError):
        malthus_classify([1.0])


def test_debt_ratio_fixed_point_is_stable():
    path = debt_ratio_trajectory(3.0, 3.0, 40, 1.0)
    assert path.fixed_point == 1.0
    assert np.all(path.ratios == 1.0)


def test_debt_ratio_converges_to_deficit_over_growth():
    path = debt_ratio_trajectory(3.0, 5.0, 400, 0.0)
    assert path.fixed_point == pytest.approx(0.6)
    assert path.ratios[-1] == pytest.approx(0.6, rel=1e-6)
    assert np.all(np.diff(path.ratios[:100]) > 0)


def test_debt_ratio_without_growth_has_no_fixed_point():
    path = debt_ratio_trajectory(2.0, 0.0, 10, 0.5)
    assert path.fixed_point is None
    assert path.ratios[-1] == pytest.approx(0.7)


def test_debt_ratio_domain():
    with pytest.raises(DomainError):
        debt_ratio_trajectory(3.0, 3.0, 0, 1.0)
    with pytest.raises(DomainError):
        debt_ratio_trajectory(3.0, -100.0, 5, 1.0)


def test_print_money_leaves_real_quantities():
    state = MonetaryState()
    new_state, report = print_money(state, 2)
    assert new_state.money_supply == 2
    assert report.inflation_pct == 100
    assert report.devaluation_pct == 50
    assert new_state.real_balances == state.real_balances
    assert new_state.external_buying_power == state.external_buying_power
    with pytest.raises(DomainError):
        print_money(state, Fraction(1, 2))


@given(
    st.fractions(min_value=0, max_value=1),
    st.fractions(min_value=0, max_value=100),
)
def test_seigniorage_is_zero_sum(lender_fraction, interest_pct):
    split = seigniorage_transfer(lender_fraction, interest_pct)
    assert split.weighted_sum == 0
    assert split.lender_gain_pct >= 0 >= split.nonlender_gain_pct


def test_seigniorage_example():
    split = seigniorage_transfer(Fraction(1, 10), 5)
    assert split.lender_gain_pct == Fraction(9, 2)
    assert split.nonlender_gain_pct == Fraction(-1, 2)


def test_house_price_absorbs_refund():
    assert house_price(10_000, Fraction(1, 20)) == 200_000
    price = house_price(10_000, Fraction(1, 20), Fraction(1, 2))
    assert price == 400_000
    assert net_housing_cost(price, Fraction(1, 20), Fraction(1, 2)) == 10_000
    with pytest.raises(DomainError):
        house_price(10_000, 0)
    with pytest.raises(DomainError):
        house_price(10_000, 0.05, 1)


def test_labor_squeeze_when_capital_outgrows_output():
    squeeze = labor_squeeze(2.0, 5.0, 50)
    assert list(squeeze.columns) == ["year", "output", "capital", "labor", "labor_change"]
    assert first_labor_decline(squeeze) == 1
    assert squeeze["labor"].iloc[-1] < 0


def test_labor_grows_when_output_outgrows_capital():
    squeeze = labor_squeeze(3.0, 2.0, 50)
    assert first_labor_decline(squeeze) is None
    assert np.all(np.diff(squeeze["labor"]) > 0)


def test_labor_squeeze_domain():
    with pytest.raises(DomainError):
        labor_squeeze(2.0, -1.0, 10)
    with pytest.raises(DomainError):
        labor_squeeze(2.0, 1.0, 10, capital_share0=1.5)
