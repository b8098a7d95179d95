# -*- coding: utf-8 -*-
# @Time    : 2024/5/10 15:32
# @Author  : YQ Tsui
# @File    : condensation.py
# @Purpose : Production circuit, capital share recurrence, duopoly feedback and demand collapse

import enum
import logging
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Literal, Optional, Sequence

import numpy as np
import pandas as pd

from ..core.errors import DomainError, InfeasibleCircuit
from ..core.exact import as_fraction
from ..core.typedefs import Number

logger = logging.getLogger(__name__)


class Decision(enum.Enum):
    PROCEED = "Proceed"
    REFUSE = "Refuse"


@dataclass(frozen=True)
class CircuitState:
    """
    One pass of M - C{MoP, LP} - P - C' - M'.

    ``M_prime`` equals ``output_value`` when the goods are sold and is 0 when nothing is produced.
    """

    M: Number
    mop_spend: Number
    lp_spend: Number
    output_value: Number
    M_prime: Number

    @property
    def surplus(self) -> Number:
        return self.M_prime - self.M if self.M_prime else 0


def marx_cycle(M: Number, mop_spend: Number, lp_spend: Number, output_value: Number) -> tuple[CircuitState, Decision]:
    """
    Runs one production circuit. Capital refuses any step that does not return more than it
    advanced; a refused step spends nothing and pays no labor.

    :param M: Money advanced.
    :param mop_spend: Spending on means of production, >= 0.
    :param lp_spend: Spending on labor power, >= 0.
    :param output_value: Sale value C' of the product.
    :rtype: tuple[CircuitState, Decision]
    """
    if mop_spend < 0 or lp_spend < 0:
        raise InfeasibleCircuit("spending must be >= 0")
    if mop_spend + lp_spend > M:
        raise InfeasibleCircuit(f"spending {mop_spend + lp_spend} exceeds the money advanced {M}")
    if output_value > M:
        return CircuitState(M, mop_spend, lp_spend, output_value, output_value), Decision.PROCEED
    return CircuitState(M, 0, 0, 0, 0), Decision.REFUSE


def circuit_chain(M0: float, mop_fraction: float, lp_fraction: float, markup: float, cycles: int) -> pd.DataFrame:
    """
    Reinvests M' as the next cycle's M. Output sells at (1 + markup) times the money advanced.

    The chain stops at the first refused cycle.

    :return: Columns cycle, M, mop_spend, lp_spend, M_prime, surplus, decision.
    :rtype: pd.DataFrame
    """
    rows, M = [], M0
    for cycle in range(1, cycles + 1):
        state, decision = marx_cycle(M, M * mop_fraction, M * lp_fraction, M * (1 + markup))
        rows.append(
            {
                "cycle": cycle,
                "M": state.M,
                "mop_spend": state.mop_spend,
                "lp_spend": state.lp_spend,
                "M_prime": state.M_prime,
                "surplus": state.surplus,
                "decision": decision.value,
            }
        )
        if decision is Decision.REFUSE:
            break
        M = state.M_prime
    return pd.DataFrame(rows, columns=["cycle", "M", "mop_spend", "lp_spend", "M_prime", "surplus", "decision"])


def capital_share(n: int) -> Fraction:
    """
    Capital's share of production at cycle n when capital doubles every cycle and humans stay put.

    :param n: Cycle index, >= 1.
    :type n: int
    :return: 2^(n-1) / (2^(n-1) + 1)
    :rtype: Fraction
    """
    if n < 1:
        raise DomainError(f"cycle index must be >= 1, got {n}")
    k = 2 ** (n - 1)
    return Fraction(k, k + 1)


@dataclass(frozen=True)
class FlowState:
    cycle: int
    human_prod_share: Fraction
    capital_prod_share: Fraction
    human_cons_share: Fraction
    capital_cons_share: Fraction
    human_debt: Fraction
    output: Fraction


def default_flow_state(scenario: Literal["loan", "reinvest"]) -> FlowState:
    """Cycle 1 of either scenario: production split 50/50; humans consume 95% when living on loans."""
    half = Fraction(1, 2)
    if scenario == "loan":
        return FlowState(1, half, half, Fraction(19, 20), Fraction(1, 20), Fraction(0), Fraction(1))
    return FlowState(1, half, half, half, half, Fraction(0), Fraction(1))


def flow_scenario(
    scenario: Literal["loan", "reinvest"], cycles: int, initial: Optional[FlowState] = None
) -> list[FlowState]:
    """
    Iterates one of the two production/consumption extremes.

    loan: shares stay fixed and humans borrow the gap between what they consume and what they
    are paid for producing. reinvest: capital reinvests its share, so the capital stock doubles
    each cycle while the human input stays constant; humans consume what they produce.

    :param scenario: "loan" or "reinvest".
    :type scenario: str
    :param cycles: Number of cycles to run, >= 0.
    :type cycles: int
    :param initial: Starting state; defaults to :func:`default_flow_state`.
    :type initial: FlowState, optional
    :return: The initial state followed by one state per cycle.
    :rtype: list[FlowState]
    """
    if scenario not in ("loan", "reinvest"):
        raise DomainError(f"unknown flow scenario {scenario!r}")
    if cycles < 0:
        raise DomainError(f"cycles must be >= 0, got {cycles}")
    state = initial or default_flow_state(scenario)
    if state.human_prod_share + state.capital_prod_share != 1 or state.human_cons_share + state.capital_cons_share != 1:
        raise DomainError("production and consumption shares must each sum to 1")
    series = [state]
    for _ in range(cycles):
        if scenario == "loan":
            gap = (state.human_cons_share - state.human_prod_share) * state.output
            state = replace(state, cycle=state.cycle + 1, human_debt=state.human_debt + gap)
        else:
            s = state.capital_prod_share
            nxt = 2 * s / (1 + s)
            state = replace(
                state,
                cycle=state.cycle + 1,
                human_prod_share=1 - nxt,
                capital_prod_share=nxt,
                human_cons_share=1 - nxt,
                capital_cons_share=nxt,
                output=state.output * (1 + s),
            )
        series.append(state)
    return series


@dataclass(frozen=True)
class DuopolyState:
    year: int
    my_manual_units: Fraction
    neighbor_units: Fraction
    my_machines: Fraction
    price: Fraction
    my_rights: Fraction
    neighbor_rights: Fraction
    neighbor_debt: Fraction


MARKET_RIGHTS = Fraction(2)
PRICE_FLOOR = Fraction(2, 3)
SURVIVAL_RIGHTS = Fraction(1)


def clothespin_sim(
    path: Literal["lend_rights", "build_machines"], years: int, loan_rate: Number = Fraction(1, 10)
) -> list[DuopolyState]:
    """
    Two clothespin makers sharing a market worth two consumption rights a year.

    Year 0 is the symmetric start. From year 1 I own a machine producing as much as a human.
    On the lend_rights path I keep one machine and keep working; on the build_machines path my
    machine count doubles every year. Rights are split by production units; the neighbor borrows the
    shortfall below one right at ``loan_rate`` and the debt compounds.

    :param path: "lend_rights" or "build_machines".
    :type path: str
    :param years: Number of simulated years after the start, >= 0.
    :type years: int
    :param loan_rate: Yearly rate charged on the neighbor's debt.
    :type loan_rate: Number
    :return: States for years 0..years.
    :rtype: list[DuopolyState]
    """
    if path not in ("lend_rights", "build_machines"):
        raise DomainError(f"unknown path {path!r}")
    if years < 0:
        raise DomainError(f"years must be >= 0, got {years}")
    rate = as_fraction(loan_rate)
    one = Fraction(1)
    state = DuopolyState(0, one, one, Fraction(0), one, one, one, Fraction(0))
    series = [state]
    for year in range(1, years + 1):
        machines = Fraction(1) if path == "lend_rights" else Fraction(2 ** (year - 1))
        units = state.my_manual_units + state.neighbor_units + machines
        price = MARKET_RIGHTS / min(units, MARKET_RIGHTS / PRICE_FLOOR)
        neighbor_rights = MARKET_RIGHTS * state.neighbor_units / units
        shortfall = max(Fraction(0), SURVIVAL_RIGHTS - neighbor_rights)
        state = replace(
            state,
            year=year,
            my_machines=machines,
            price=price,
            my_rights=MARKET_RIGHTS - neighbor_rights,
            neighbor_rights=neighbor_rights,
            neighbor_debt=state.neighbor_debt * (1 + rate) + shortfall,
        )
        series.append(state)
    return series


@dataclass
class DemandReport:
    """
    :ivar float demand: Aggregate consumer demand, equal to the wages paid.
    :ivar float output_units: Units produced, one per firm.
    :ivar np.ndarray margins: Profit of each firm.
    :ivar bool collapse: Output is produced but nobody earns wages to buy it.
    """

    demand: float
    output_units: float
    margins: np.ndarray
    collapse: bool


def say_law_demand(lp_shares: Sequence[float], wage_bill: float, robot_cost_ratio: float = 0.5) -> DemandReport:
    """
    Closed economy where every product's demand comes from the wages paid to make products.

    Firm k spends ``lp_shares[k] * wage_bill`` on labor and replaces the rest of its labor by
    machines costing ``robot_cost_ratio`` of those wages. Demand is shared equally by the firms.

    :param lp_shares: Labor share of each firm, in [0, 1].
    :type lp_shares: Sequence[float]
    :param wage_bill: Wages a firm pays with no robots.
    :type wage_bill: float
    :param robot_cost_ratio: Machine cost per unit of wages replaced.
    :type robot_cost_ratio: float
    :rtype: DemandReport
    """
    lp = np.asarray(lp_shares, dtype=float)
    if lp.size == 0:
        raise DomainError("at least one firm is needed")
    if ((lp < 0) | (lp > 1)).any():
        raise DomainError("labor shares must lie in [0, 1]")
    wages = lp * wage_bill
    demand = float(wages.sum())
    costs = wages + (1 - lp) * wage_bill * robot_cost_ratio
    margins = demand / lp.size - costs
    return DemandReport(demand=demand, output_units=float(lp.size), margins=margins, collapse=demand == 0)


def robotization_sweep(
    lp_grid: Sequence[float],
    wage_bill: float,
    n_firms: int,
    n_robotized: Optional[int] = None,
    robot_cost_ratio: float = 0.5,
) -> pd.DataFrame:
    """
    For each labor share in ``lp_grid``, the first ``n_robotized`` firms (all by default) run at
    that share while the others keep paying full wages.

    :return: Columns lp_share, demand, robotized_margin, other_margin, collapse.
    :rtype: pd.DataFrame
    """
    if n_firms < 1:
        raise DomainError(f"n_firms must be >= 1, got {n_firms}")
    n_robotized = n_firms if n_robotized is None else n_robotized
    if not 0 <= n_robotized <= n_firms:
        raise DomainError(f"n_robotized must lie in [0, {n_firms}], got {n_robotized}")
    rows = []
    for share in lp_grid:
        shares = np.ones(n_firms)
        shares[:n_robotized] = share
        report = say_law_demand(shares, wage_bill, robot_cost_ratio)
        rows.append(
            {
                "lp_share": float(share),
                "demand": report.demand,
                "robotized_margin": float(report.margins[:n_robotized].max()) if n_robotized else np.nan,
                "other_margin": float(report.margins[n_robotized:].max()) if n_robotized < n_firms else np.nan,
                "collapse": report.collapse,
            }
        )
    return pd.DataFrame(rows)
