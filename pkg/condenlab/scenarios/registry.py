# -*- coding: utf-8 -*-
# @Time    : 2024/5/16 14:30
# @Author  : YQ Tsui
# @File    : registry.py
# @Purpose : Static table of scenario runners

import logging
from fractions import Fraction
from pathlib import Path

import numpy as np
import pandas as pd

from ..core.errors import CondenlabError, ScenarioError
from ..core.exact import as_fraction
from ..models import banking, condensation, credit, dilemma, distribution, macro, ownership
from .parser import ScenarioConfig
from .schemas import SCENARIO_SCHEMAS
from .trajectory import Trajectory, plain_table

logger = logging.getLogger(__name__)


def _bankruptcy_fraction(p: dict, seed: int):
    grid = [Fraction(k, p["points"] - 1) * Fraction(repr(p["interest_pct"])) for k in range(p["points"])]
    defaulted = [credit.bankruptcy_fraction(x) for x in grid]
    table = pd.DataFrame(
        {"interest_pct": grid, "defaulted_pct": defaulted, "repayable_pct": [100 - y for y in defaulted]}
    )
    return table, {"defaulted_pct": defaulted[-1]}


def _refinance_game(p: dict, seed: int):
    outcome = credit.refinance_game(credit.RefinanceGameConfig(seed=seed, **p))
    summary = {
        "defaulted_money_fraction": outcome.defaulted_money_fraction,
        "defaulted_borrower_fraction": outcome.defaulted_borrower_fraction,
        "lender_net_gain": outcome.lender_net_gain,
        "bankruptcy_fraction": credit.bankruptcy_fraction(p["interest_pct"]),
    }
    return outcome.ledger, summary


def _credit_spiral(p: dict, seed: int):
    result = credit.credit_spiral(p["r0"], p["r_ref"], p["sensitivity"], p["rounds"])
    return pd.DataFrame({"round": np.arange(result.rates.size), "rate": result.rates}), {"diverged": result.diverged}


def _redeposit_cascade(p: dict, seed: int):
    terms = banking.redeposit_terms(p["base"], p["reserve_ratio"], p["n_banks"])
    total = banking.redeposit_cascade(p["base"], p["reserve_ratio"], p["n_banks"])
    table = pd.DataFrame({"bank": np.arange(1, len(terms) + 1), "deposit": terms, "cumulative": np.cumsum(terms)})
    return table, {"total": total, "limit": as_fraction(p["base"]) * banking.money_multiplier(p["reserve_ratio"])}


def _state_financing(p: dict, seed: int):
    rows = []
    ledger = banking.BankLedger.open(p["base_money"], p["reserve_ratio"])

    def book(action: str, loan_id=None):
        rows.append(
            {
                "step": len(rows),
                "action": action,
                "loan_outstanding": ledger.loan(loan_id).outstanding if loan_id else 0,
                "outstanding_credit": ledger.outstanding_credit,
                "capacity": ledger.capacity,
                "equity": ledger.equity,
                "roi": ledger.equity / ledger.base_money if ledger.base_money else 0,
            }
        )

    book("open")
    ledger, loan_id = banking.issue_loan(ledger, p["amount"], p["interest_rate"])
    book("lend_to_state", loan_id)
    ledger = banking.repay_loan(ledger, loan_id, ledger.loan(loan_id).outstanding)
    book("state_repays", loan_id)
    summary = {
        "interest_earned": ledger.equity,
        "lending_roi": banking.lending_roi(p["interest_rate"], p["reserve_ratio"]),
    }
    return pd.DataFrame(rows), summary


def _growth(p: dict, seed: int):
    params = macro.GrowthParams(E0=p["E0"], alpha=p["alpha"])
    table = macro.growth_trajectory(params, p["t_max"], p["points"])
    rel = ((table["numeric"] - table["closed"]).abs() / table["closed"]).max()
    return table, {"growth_rate": macro.growth_rate(p["alpha"]), "max_relative_error": rel}


def _debt_ratio(p: dict, seed: int):
    path = macro.debt_ratio_trajectory(p["deficit_pct"], p["gdp_growth_pct"], p["years"], p["initial_ratio"])
    table = pd.DataFrame({"year": np.arange(path.ratios.size), "debt_ratio": path.ratios})
    return table, {"fixed_point": path.fixed_point}


def _print_money(p: dict, seed: int):
    before = macro.MonetaryState(money_supply=Fraction(repr(p["money_supply"])))
    after, report = macro.print_money(before, p["factor"])
    rows = []
    for factor, state, inflation, devaluation in (
        (1, before, 0, 0),
        (p["factor"], after, report.inflation_pct, report.devaluation_pct),
    ):
        rows.append(
            {
                "factor": factor,
                "money_supply": state.money_supply,
                "price_index": state.price_index,
                "fx_value": state.fx_value,
                "real_balances": state.real_balances,
                "external_buying_power": state.external_buying_power,
                "inflation_pct": inflation,
                "devaluation_pct": devaluation,
            }
        )
    return pd.DataFrame(rows), {"inflation_pct": report.inflation_pct, "devaluation_pct": report.devaluation_pct}


def _seigniorage(p: dict, seed: int):
    splits = [
        macro.seigniorage_transfer(Fraction(k, p["points"] - 1), p["interest_pct"]) for k in range(p["points"])
    ]
    table = pd.DataFrame(
        {
            "lender_fraction": [s.lender_fraction for s in splits],
            "lender_gain_pct": [s.lender_gain_pct for s in splits],
            "nonlender_gain_pct": [s.nonlender_gain_pct for s in splits],
            "weighted_sum": [s.weighted_sum for s in splits],
        }
    )
    return table, {"zero_sum": all(s.weighted_sum == 0 for s in splits)}


def _house_price(p: dict, seed: int):
    top = Fraction(repr(p["refund_fraction"]))
    refunds = [top * Fraction(k, p["points"] - 1) for k in range(p["points"])]
    prices = [macro.house_price(p["affordable_payment"], p["mortgage_rate"], r) for r in refunds]
    table = pd.DataFrame(
        {
            "refund_fraction": refunds,
            "price": prices,
            "net_cost": [macro.net_housing_cost(pr, p["mortgage_rate"], r) for pr, r in zip(prices, refunds)],
        }
    )
    return table, {}


def _capital_share(p: dict, seed: int):
    shares = [condensation.capital_share(n) for n in range(1, p["cycles"] + 1)]
    table = pd.DataFrame(
        {"cycle": np.arange(1, p["cycles"] + 1), "capital_share": shares, "human_share": [1 - s for s in shares]}
    )
    return table, {}


def _flow_scenario(p: dict, seed: int):
    states = condensation.flow_scenario(p["mode"], p["cycles"])
    return pd.DataFrame([vars(s) for s in states]), {"final_human_debt": states[-1].human_debt}


def _clothespin(p: dict, seed: int):
    states = condensation.clothespin_sim(p["path"], p["years"], p["loan_rate"])
    return pd.DataFrame([vars(s) for s in states]), {"final_neighbor_debt": states[-1].neighbor_debt}


def _robotization(p: dict, seed: int):
    n_robotized = None if p["n_robotized"] < 0 else p["n_robotized"]
    grid = np.linspace(1.0, 0.0, p["points"])
    table = condensation.robotization_sweep(grid, p["wage_bill"], p["n_firms"], n_robotized, p["robot_cost_ratio"])
    return table, {"collapse_at_zero_labor": bool(table["collapse"].iloc[-1])}


def _marx_circuit(p: dict, seed: int):
    table = condensation.circuit_chain(p["M0"], p["mop_fraction"], p["lp_fraction"], p["markup"], p["cycles"])
    return table, {"refused": bool((table["decision"] == condensation.Decision.REFUSE.value).any())}


def _labor_squeeze(p: dict, seed: int):
    table = macro.labor_squeeze(p["production_growth_pct"], p["capital_growth_pct"], p["years"], p["capital_share0"])
    return table, {"first_decline_year": macro.first_labor_decline(table)}


def _exponential_family(p: dict, seed: int):
    params = distribution.fit_exponential_family(p["w0"], p["b"], p["n"])
    dist = distribution.exponential_family(p["w0"], p["b"], p["n"])
    incentives = distribution.incentive_total(dist)
    table = pd.DataFrame(
        {
            "person": np.arange(1, dist.n + 1),
            "x": (np.arange(1, dist.n + 1) - 0.5) / dist.n,
            "weight": dist.weights,
            "incentive": incentives.per_person,
        }
    )
    summary = {
        "wmax": params.wmax,
        "incentive_total": incentives.total,
        "continuous_incentive_total": distribution.continuous_incentive_total(params),
    }
    return table, summary


def _initial_distribution(p: dict):
    def build(seed: int) -> distribution.WealthDistribution:
        if p["init"] == "uniform":
            return distribution.uniform_distribution(p["n"], p["w0"])
        if p["init"] == "linear":
            return distribution.linear_distribution(p["n"], p["w0"])
        if p["init"] == "exponential":
            return distribution.exponential_family(p["w0"], p["b"], p["n"])
        return distribution.random_distribution(p["n"], p["w0"], seed)

    return build


def _ga_optimize(p: dict, seed: int, jobs: int = 1):
    seeds = range(seed, seed + p["restarts"])
    result = distribution.multi_start(
        _initial_distribution(p), seeds, p["steps"], p["mutation_scale"], jobs, p["drain_rate"]
    )
    steps = np.arange(0, result.history.size, p["record_every"])
    if steps[-1] != result.history.size - 1:
        steps = np.append(steps, result.history.size - 1)
    table = pd.DataFrame({"step": steps, "objective": result.history[steps]})
    structure = distribution.summarize(result.final)
    summary = {
        "best_seed": result.seed,
        "accepted": result.accepted,
        "equilibrium": structure.equilibrium.value,
        "top": structure.top,
        "top_over_floor": structure.top_over_floor,
        "n_at_floor": structure.n_at_floor,
        "bulk_median": structure.bulk_median,
        "incentive_total": structure.incentive,
        "final_weights": result.final.weights,
    }
    return table, summary


def _dilemma(p: dict, seed: int):
    both, sucker, bonus = -p["both_confess_years"], -p["sucker_years"], p["bonus"]
    table = dilemma.PayoffTable.from_lists([[both, bonus], [sucker, 0.0]], [[both, sucker], [bonus, 0.0]])
    solution = dilemma.solve_dilemma(table)
    rows = []
    for a, la in enumerate(table.strategies):
        for b, lb in enumerate(table.strategies):
            ua, ub = table.outcome(a, b)
            rows.append(
                {
                    "a_strategy": la,
                    "b_strategy": lb,
                    "payoff_a": ua,
                    "payoff_b": ub,
                    "nash": (la, lb) in solution.nash,
                    "pareto": (la, lb) in solution.pareto,
                }
            )
    return pd.DataFrame(rows), {"dominant_a": solution.dominant[0], "dominant_b": solution.dominant[1]}


def _network(p: dict) -> ownership.OwnershipNetwork:
    if p["network"]:
        return ownership.read_network(Path(p["network"]))
    return ownership.three_banks(p["direct_stake"])


def _ownership(p: dict, seed: int):
    net = _network(p)
    sums = ownership.ownership_partial_sums(net, p["tolerance"], p["max_terms"])
    table = pd.DataFrame(sums, columns=list(net.names))
    table.insert(0, "term", np.arange(len(sums)))
    solved = ownership.ultimate_ownership(net)
    summary = {
        "banks": list(net.names),
        "direct": net.d,
        "ultimate": solved,
        "ultimate_series": sums[-1],
        "max_disagreement": float(np.abs(solved - sums[-1]).max()),
        "spectral_radius": net.spectral_radius,
    }
    return table, summary


def _dividend_round(p: dict, seed: int):
    net = _network(p)
    dividend_round = ownership.DividendRound.of(p["ops_profit"], p["declared"])
    flows = ownership.dividend_flow(net, dividend_round)
    tax = ownership.dividend_tax(dividend_round, p["tax_rate"], net.names)
    table = flows.banks.assign(tax=tax.banks["tax"], insolvent=tax.banks["insolvent"])
    summary = {
        "outsider": flows.outsider,
        "other_holders": flows.other_holders,
        "conserved": flows.conserved,
        "total_tax": tax.total_tax,
        "real_profit": tax.real_profit,
    }
    return table, summary


def _voting(p: dict, seed: int):
    net = _network(p)
    support = {name: p["banks_support"] for name in net.names}
    support[ownership.OUTSIDER] = p["outsider_supports"]
    result = ownership.voting_outcome(net, support)
    return result.tally, {"outsider_prevails": bool((result.tally["passed"] == p["outsider_supports"]).all())}


SCENARIO_RUNNERS = {
    "bankruptcy_fraction": _bankruptcy_fraction,
    "refinance_game": _refinance_game,
    "credit_spiral": _credit_spiral,
    "redeposit_cascade": _redeposit_cascade,
    "state_financing": _state_financing,
    "growth": _growth,
    "debt_ratio": _debt_ratio,
    "print_money": _print_money,
    "seigniorage": _seigniorage,
    "house_price": _house_price,
    "capital_share": _capital_share,
    "flow_scenario": _flow_scenario,
    "clothespin": _clothespin,
    "robotization": _robotization,
    "marx_circuit": _marx_circuit,
    "labor_squeeze": _labor_squeeze,
    "exponential_family": _exponential_family,
    "ga_optimize": _ga_optimize,
    "dilemma": _dilemma,
    "ownership": _ownership,
    "dividend_round": _dividend_round,
    "voting": _voting,
}


def registered_scenarios() -> list[str]:
    return sorted(SCENARIO_RUNNERS)


def run_scenario(config: ScenarioConfig, jobs: int = 1) -> Trajectory:
    """
    Runs a validated scenario config.

    :param config: Output of :func:`condenlab.scenarios.parser.parse_config`.
    :type config: ScenarioConfig
    :param jobs: Worker threads for scenarios that run independent restarts.
    :type jobs: int
    :return: The trajectory; identical for identical (scenario, params, seed).
    :rtype: Trajectory
    :raises ScenarioError: When a model rejects the parameters.
    """
    runner = SCENARIO_RUNNERS.get(config.scenario)
    if runner is None:
        raise ScenarioError(config.scenario, "not a registered scenario")
    logger.info("running %s (seed %d)", config.scenario, config.seed)
    try:
        if runner is _ga_optimize:
            table, summary = runner(config.params, config.seed, jobs)
        else:
            table, summary = runner(config.params, config.seed)
    except (CondenlabError, OSError) as e:
        raise ScenarioError(config.scenario, str(e)) from e
    expected = SCENARIO_SCHEMAS[config.scenario]["columns"]
    if expected is not None:
        table = table[expected]
    logger.info("finished %s: %d rows", config.scenario, len(table))
    return Trajectory(
        table=plain_table(table.reset_index(drop=True)),
        scenario=config.scenario,
        seed=config.seed,
        params=dict(config.params),
        summary=summary,
    )
