# -*- coding: utf-8 -*-
# @Time    : 2024/5/9 10:48
# @Author  : YQ Tsui
# @File    : macro.py
# @Purpose : Aggregate growth, debt, money printing and housing models

"""
Growth follows E(t) = alpha * dE/dt, solved by E(t) = E0 * exp(t / alpha). The closed form is
sometimes quoted as E0 * exp(1 / alpha); the time variable belongs in the exponent.

Trade balances summed over all countries are zero by construction, so one country's surplus is
always another's deficit; no agent model is built for it.
"""

import enum
import logging
import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Literal, Optional, Sequence

import numpy as np
import pandas as pd

from ..core.errors import DomainError
from ..core.exact import as_fraction
from ..core.integrate import rk4
from ..core.typedefs import Number

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GrowthParams:
    """
    :ivar float E0: Economy size at t = 0.
    :ivar float alpha: Borrowing-from-tomorrow factor; the growth rate is 1/alpha.
    """

    E0: float = 1.0
    alpha: float = 1.0

    def __post_init__(self):
        if self.E0 <= 0:
            raise DomainError(f"E0 must be > 0, got {self.E0}")
        if self.alpha <= 0:
            raise DomainError(f"alpha must be > 0, got {self.alpha}")


def growth_rate(alpha: float) -> float:
    """Discrete growth rate (E_{i+1} - E_i) / E_i of the difference equation E_i = alpha (E_{i+1} - E_i)."""
    if alpha <= 0:
        raise DomainError(f"alpha must be > 0, got {alpha}")
    return 1.0 / alpha


def growth_value(
    params: GrowthParams, t: float, method: Literal["closed", "numeric"] = "closed", step: Optional[float] = None
) -> float:
    """
    Economy size at time t.

    :param params: E0 and alpha.
    :type params: GrowthParams
    :param t: Time, >= 0.
    :type t: float
    :param method: "closed" for E0 * exp(t / alpha), "numeric" for fixed-step RK4 on dE/dt = E / alpha.
    :type method: str
    :param step: RK4 step size; defaults to min(t, alpha) / 1000.
    :type step: float, optional
    :rtype: float
    """
    if t < 0:
        raise DomainError(f"t must be >= 0, got {t}")
    if method == "closed":
        return params.E0 * math.exp(t / params.alpha)
    if method != "numeric":
        raise DomainError(f"unknown method {method!r}")
    if t == 0:
        return params.E0
    step = step if step is not None else min(t, params.alpha) / 1000
    if step <= 0:
        raise DomainError(f"step must be > 0, got {step}")
    return float(rk4(lambda e, _: e / params.alpha, params.E0, t, step)[-1, 1])


def growth_trajectory(params: GrowthParams, t_max: float, n_points: int) -> pd.DataFrame:
    """Closed-form and RK4 values side by side on an even time grid."""
    times = np.linspace(0.0, t_max, n_points)
    return pd.DataFrame(
        {
            "t": times,
            "closed": [growth_value(params, t) for t in times],
            "numeric": [growth_value(params, t, "numeric") for t in times],
        }
    )


class GrowthRegime(enum.Enum):
    GROWING = "Growing"
    STAGNATING = "Stagnating"
    CATASTROPHE = "Catastrophe"


def malthus_classify(trajectory: Sequence[float], tol: float = 1e-9) -> GrowthRegime:
    """
    Classifies an economy series.

    Any decline or non-positive value is a catastrophe, since with a fixed alpha a shrinking
    economy must turn negative. A last step within ``tol`` (relative) of zero is stagnation.

    :param trajectory: Economy sizes, at least two.
    :type trajectory: Sequence[float]
    :param tol: Relative tolerance on the final difference.
    :type tol: float
    :rtype: GrowthRegime
    """
    values = np.asarray(trajectory, dtype=float)
    if values.size < 2:
        raise DomainError("malthus_classify needs at least two values")
    diffs = np.diff(values)
    if (values <= 0).any() or (diffs < 0).any():
        return GrowthRegime.CATASTROPHE
    if abs(diffs[-1]) <= tol * abs(values[-2]):
        return GrowthRegime.STAGNATING
    return GrowthRegime.GROWING


@dataclass
class DebtPath:
    ratios: np.ndarray
    fixed_point: Optional[float]


def debt_ratio_trajectory(deficit_pct: float, gdp_growth_pct: float, years: int, initial_ratio: float) -> DebtPath:
    """
    Debt-to-GDP under a permanent deficit: the year's deficit is added, then divided by grown GDP.

    ratio_{t+1} = (ratio_t + d/100) / (1 + g/100). For g > 0 the ratio tends to d/g.

    :param deficit_pct: Deficit d, percent of GDP per year.
    :param gdp_growth_pct: GDP growth g in percent, > -100.
    :param years: Number of years, >= 1.
    :param initial_ratio: Debt/GDP at the start, as a fraction.
    :return: ratio_0..ratio_years and the fixed point (None unless g > 0).
    :rtype: DebtPath
    """
    if years < 1:
        raise DomainError(f"years must be >= 1, got {years}")
    if gdp_growth_pct <= -100:
        raise DomainError(f"gdp_growth_pct must be > -100, got {gdp_growth_pct}")
    ratios = np.empty(years + 1)
    ratios[0] = initial_ratio
    for t in range(years):
        ratios[t + 1] = (ratios[t] + deficit_pct / 100) / (1 + gdp_growth_pct / 100)
    fixed_point = deficit_pct / gdp_growth_pct if gdp_growth_pct > 0 else None
    return DebtPath(ratios=ratios, fixed_point=fixed_point)


@dataclass(frozen=True)
class MonetaryState:
    """
    :ivar Fraction money_supply: Money in circulation.
    :ivar Fraction price_index: Domestic price level.
    :ivar Fraction fx_value: External value of one unit of money.
    """

    money_supply: Fraction = Fraction(1)
    price_index: Fraction = Fraction(1)
    fx_value: Fraction = Fraction(1)

    @property
    def external_buying_power(self) -> Fraction:
        return self.money_supply * self.fx_value

    @property
    def real_balances(self) -> Fraction:
        return self.money_supply / self.price_index


@dataclass(frozen=True)
class PrintingReport:
    inflation_pct: Fraction
    devaluation_pct: Fraction


def print_money(state: MonetaryState, factor: Number) -> tuple[MonetaryState, PrintingReport]:
    """
    Multiplies the money supply when everybody finances themselves: prices follow, the currency
    devalues, and neither real balances nor buying power abroad change.

    :param state: The monetary state before printing.
    :type state: MonetaryState
    :param factor: Multiplication factor, >= 1.
    :type factor: Number
    :rtype: tuple[MonetaryState, PrintingReport]
    """
    factor = as_fraction(factor)
    if factor < 1:
        raise DomainError(f"factor must be >= 1, got {factor}")
    new_state = replace(
        state,
        money_supply=state.money_supply * factor,
        price_index=state.price_index * factor,
        fx_value=state.fx_value / factor,
    )
    return new_state, PrintingReport(inflation_pct=(factor - 1) * 100, devaluation_pct=(1 - 1 / factor) * 100)


@dataclass(frozen=True)
class SeigniorageSplit:
    """Real per-capita gain in percent of each class."""

    lender_fraction: Fraction
    lender_gain_pct: Fraction
    nonlender_gain_pct: Fraction

    @property
    def weighted_sum(self) -> Fraction:
        f = self.lender_fraction
        return f * self.lender_gain_pct + (1 - f) * self.nonlender_gain_pct


def seigniorage_transfer(lender_fraction: Number, interest_pct: Number) -> SeigniorageSplit:
    """
    Two-class economy where interest is financed purely by printing money.

    Inflation equals i * f (the interest paid by the lending share f of the population), so
    lenders gain i - i*f in real terms and non-lenders lose i*f. The population-weighted sum is zero.

    :param lender_fraction: Share f of the population that lends, in [0, 1].
    :type lender_fraction: Number
    :param interest_pct: Interest i in percent.
    :type interest_pct: Number
    :rtype: SeigniorageSplit
    """
    f, i = as_fraction(lender_fraction), as_fraction(interest_pct)
    if not 0 <= f <= 1:
        raise DomainError(f"lender_fraction must lie in [0, 1], got {f}")
    if i < 0:
        raise DomainError(f"interest_pct must be >= 0, got {i}")
    # an empty class gains nothing
    lender_gain = i * (1 - f) if f > 0 else Fraction(0)
    nonlender_gain = -i * f if f < 1 else Fraction(0)
    return SeigniorageSplit(lender_fraction=f, lender_gain_pct=lender_gain, nonlender_gain_pct=nonlender_gain)


def house_price(affordable_payment: Number, mortgage_rate: Number, refund_fraction: Number = 0) -> Fraction:
    """
    Market price of a house when buyers spend what they can afford on mortgage interest.

    A tax refund on the interest is capitalized entirely into the price; the buyer's net annual
    cost stays at ``affordable_payment``.

    :param affordable_payment: Annual payment buyers can afford.
    :type affordable_payment: Number
    :param mortgage_rate: Mortgage interest rate, > 0.
    :type mortgage_rate: Number
    :param refund_fraction: Share of the interest refunded by the state, in [0, 1).
    :type refund_fraction: Number
    :rtype: Fraction
    """
    payment, rate, refund = as_fraction(affordable_payment), as_fraction(mortgage_rate), as_fraction(refund_fraction)
    if rate <= 0:
        raise DomainError(f"mortgage_rate must be > 0, got {rate}")
    if not 0 <= refund < 1:
        raise DomainError(f"refund_fraction must lie in [0, 1), got {refund}")
    return payment / (rate * (1 - refund))


def net_housing_cost(price: Number, mortgage_rate: Number, refund_fraction: Number = 0) -> Fraction:
    """Buyer's annual interest after the refund."""
    return as_fraction(price) * as_fraction(mortgage_rate) * (1 - as_fraction(refund_fraction))


def labor_squeeze(
    production_growth_pct: float, capital_growth_pct: float, years: int, capital_share0: float = 0.5
) -> pd.DataFrame:
    """
    Capital inertia: the capital's take compounds at its own rate whatever the economy does.

    Output grows at x%, the capital's claim at z% (never negative, since capital does not invest at
    a loss); labor gets the remainder. With z > x labor's wealth eventually falls and then turns
    negative.

    :param production_growth_pct: Output growth x in percent.
    :type production_growth_pct: float
    :param capital_growth_pct: Growth z of the capital's take in percent, >= 0.
    :type capital_growth_pct: float
    :param years: Horizon.
    :type years: int
    :param capital_share0: Capital's share of output in year 0, in [0, 1].
    :type capital_share0: float
    :return: Columns year, output, capital, labor, labor_change.
    :rtype: pd.DataFrame
    """
    if capital_growth_pct < 0:
        raise DomainError(f"capital_growth_pct must be >= 0, got {capital_growth_pct}")
    if not 0 <= capital_share0 <= 1:
        raise DomainError(f"capital_share0 must lie in [0, 1], got {capital_share0}")
    year = np.arange(years + 1)
    output = (1 + production_growth_pct / 100) ** year
    capital = capital_share0 * (1 + capital_growth_pct / 100) ** year
    labor = output - capital
    return pd.DataFrame(
        {"year": year, "output": output, "capital": capital, "labor": labor, "labor_change": labor - labor[0]}
    )


def first_labor_decline(squeeze: pd.DataFrame) -> Optional[int]:
    """First year labor's remainder is below its year-0 level, None if it never is."""
    falling = squeeze.loc[squeeze["labor_change"] < 0, "year"]
    return int(falling.iloc[0]) if not falling.empty else None
