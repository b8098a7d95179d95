# -*- coding: utf-8 -*-
# @Time    : 2024/5/17 15:40
# @Author  : YQ Tsui
# @File    : verify.py
# @Purpose : Replays the worked examples as a pass/fail suite

"""
Checks call the models through their modules (``credit.bankruptcy_fraction`` rather than a name
imported into this module) so that a patched model is what gets verified.
"""

import logging
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Callable

import numpy as np
import pandas as pd

from ..config import DEFAULT_CONFIG
from ..models import banking, condensation, credit, dilemma, distribution, macro, ownership
from . import registry
from .parser import validate_config
from .schemas import EXAMPLE_CONFIGS, SCENARIO_SCHEMAS

logger = logging.getLogger(__name__)

CHECKS: list = []


def check(name: str, anchor: str):
    """Registers a check; it returns a detail string and raises AssertionError on failure."""

    def register(func: Callable[[], str]):
        CHECKS.append((name, anchor, func))
        return func

    return register


@check("bankruptcy_fraction_at_100", "100% interest leaves half of all debt unpayable")
def _bankruptcy_at_100():
    y = credit.bankruptcy_fraction(100)
    assert y == 50, f"got {y}"
    return "y = 50"


@check("bankruptcy_identity", "(1 - y/100)(1 + x/100) = 1")
def _bankruptcy_identity():
    for x in (0, 1, 3, 5, 10, 50, 100, 1000):
        y = credit.bankruptcy_fraction(x)
        assert (1 - Fraction(y) / 100) * (1 + Fraction(x, 100)) == 1, f"identity broken at x = {x}"
    return "exact for 8 rates"


@check("refinance_game_default_share", "Monte-Carlo default share matches the closed form")
def _refinance_game():
    outcome = credit.refinance_game(credit.RefinanceGameConfig(n_borrowers=1000, interest_pct=100, seed=0))
    y = outcome.defaulted_money_fraction
    assert abs(y - 50) <= 3, f"defaulted {y:.3f}%"
    return f"defaulted {y:.3f}% of the debt"


@check("lending_roi", "3% on a 10% reserve is 30%; 5% on 5% is 100%")
def _lending_roi():
    a, b = banking.lending_roi(0.03, 0.10), banking.lending_roi(0.05, 0.05)
    assert a == Fraction(3, 10) and b == 1, f"got {a}, {b}"
    return f"{a}, {b}"


@check("money_multiplier", "a reserve requirement of 20 means the fraction 0.05")
def _money_multiplier():
    m = banking.money_multiplier(0.05)
    assert m == 20, f"got {m}"
    return "1 / 0.05 = 20"


@check("money_multiplier_ten_percent", "a 10% reserve lends ten times the base")
def _money_multiplier_ten():
    m = banking.money_multiplier(0.10)
    assert m == 10, f"got {m}"
    return "1 / 0.10 = 10"


@check("money_multiplier_ninth", "a reserve of one ninth lends nine times the base, exactly")
def _money_multiplier_ninth():
    m = banking.money_multiplier(Fraction(1, 9))
    cap = banking.BankLedger.open(100, Fraction(1, 9)).credit_cap
    assert m == 9 and cap == 900, f"got {m}, cap {cap}"
    return f"1 / (1/9) = {m}, cap on 100 = {cap}"


@check("redeposit_cascade", "onward deposits add up to base / reserve ratio")
def _redeposit():
    total = banking.redeposit_cascade(1, 0.1, 200)
    assert abs(total - 10) <= Decimal("1e-6"), f"got {total}"
    return f"{float(total):.9f}"


@check("loss_on_investment", "a fine of 5 on 15 remaining loses a third")
def _loss_on_investment():
    loi = banking.loss_on_investment(5, 15)
    assert loi == Decimal(1) / Decimal(3), f"got {loi}"
    return str(loi)


@check("state_financing", "the bank earns the interest on money it never had")
def _state_financing():
    ledger, loan_id = banking.issue_loan(banking.BankLedger.open(100, 0.1), 1000, 0.03)
    ledger = banking.repay_loan(ledger, loan_id, ledger.loan(loan_id).outstanding)
    assert ledger.outstanding_credit == 0 and ledger.equity == 30, f"credit {ledger.outstanding_credit}"
    return f"equity {ledger.equity} on base money {ledger.base_money}"


@check("credit_spiral", "a rate above the reference rate runs away")
def _credit_spiral():
    hot = credit.credit_spiral(0.06, 0.05, 10, 200)
    calm = credit.credit_spiral(0.04, 0.05, 10, 200)
    assert hot.diverged and not calm.diverged
    return f"hot run peaks at {hot.rates.max():.3g}"


@check("growth_closed_vs_numeric", "E0 exp(t / alpha) solves E = alpha dE/dt")
def _growth():
    worst = 0.0
    for alpha in (0.5, 1.0, 2.0, 5.0, 10.0):
        for t in (0.5, 1.0, 2.0, 5.0, 10.0):
            params = macro.GrowthParams(E0=1.0, alpha=alpha)
            closed, numeric = macro.growth_value(params, t), macro.growth_value(params, t, "numeric")
            worst = max(worst, abs(numeric - closed) / closed)
    assert worst <= 1e-9, f"relative error {worst:.3g}"
    return f"max relative error {worst:.3g}"


@check("debt_ratio_fixed_point", "a 3% deficit with 3% growth holds debt at 100% of GDP")
def _debt_ratio():
    path = macro.debt_ratio_trajectory(3, 3, 100, 1.0)
    assert np.abs(path.ratios - 1.0).max() <= 1e-12 and path.fixed_point == 1.0
    return "constant at 1.0"


@check("malthus_regimes", "stagnation under a fixed alpha ends in catastrophe")
def _malthus():
    assert macro.malthus_classify([1, 2, 4]) is macro.GrowthRegime.GROWING
    assert macro.malthus_classify([1, 2, 2]) is macro.GrowthRegime.STAGNATING
    assert macro.malthus_classify([1, 2, 1]) is macro.GrowthRegime.CATASTROPHE
    return "growing, stagnating and catastrophe told apart"


@check("print_money", "printing ten times the money: 900% inflation, 90% devaluation")
def _print_money():
    state, report = macro.print_money(macro.MonetaryState(), 10)
    assert report.inflation_pct == 900 and report.devaluation_pct == 90
    assert state.real_balances == 1 and state.external_buying_power == 1
    return "900%, 90%"


@check("seigniorage_zero_sum", "lenders gain what money holders lose")
def _seigniorage():
    for f in range(10):
        for i in range(10):
            split = macro.seigniorage_transfer(Fraction(f, 9), 5 * i)
            assert split.weighted_sum == 0, f"f = {f}/9, i = {5 * i}"
    return "exact on a 10 x 10 grid"


@check("house_price", "3000 a year at 3% buys a 100000 house; a 50% refund doubles the price")
def _house_price():
    assert macro.house_price(3000, 0.03) == 100000
    assert macro.house_price(3000, 0.03, 0.5) == 200000
    for refund in (0, 0.25, 0.5, 0.9):
        price = macro.house_price(3000, 0.03, refund)
        assert macro.net_housing_cost(price, 0.03, refund) == 3000
    return "net cost stays 3000"


@check("labor_squeeze", "capital outgrowing output eats labor's share")
def _labor_squeeze():
    table = macro.labor_squeeze(2, 5, 50)
    assert macro.first_labor_decline(table) is not None and table["labor"].iloc[-1] < 0
    return f"labor falls from year {macro.first_labor_decline(table)}"


@check("capital_share", "capital's share runs 1/2, 2/3, 4/5, 8/9")
def _capital_share():
    assert [condensation.capital_share(n) for n in range(1, 5)] == [
        Fraction(1, 2),
        Fraction(2, 3),
        Fraction(4, 5),
        Fraction(8, 9),
    ]
    for n in range(1, 21):
        k = 2 ** (n - 1)
        assert condensation.capital_share(n) == Fraction(k, k + 1)
    return "exact for n = 1..20"


@check("flow_scenarios", "living on loans piles up debt; reinvesting concentrates production")
def _flow():
    loan = condensation.flow_scenario("loan", 4)
    assert [s.human_debt for s in loan] == [Fraction(9, 20) * k for k in range(5)]
    reinvest = condensation.flow_scenario("reinvest", 4)
    assert [s.capital_prod_share for s in reinvest] == [condensation.capital_share(n) for n in range(1, 6)]
    return "debt +9/20 per cycle; shares follow 2^(n-1) / (2^(n-1) + 1)"


@check("clothespin_split", "a machine shifts the rights to 4/3 against 2/3, later 3/2 against 1/2")
def _clothespin():
    one = condensation.clothespin_sim("lend_rights", 1)[1]
    two = condensation.clothespin_sim("build_machines", 2)[2]
    assert (one.my_rights, one.neighbor_rights) == (Fraction(4, 3), Fraction(2, 3))
    assert (two.my_rights, two.neighbor_rights) == (Fraction(3, 2), Fraction(1, 2))
    return "4/3 : 2/3 and 3/2 : 1/2"


@check("marx_circuit", "capital refuses a circuit that returns no surplus")
def _marx():
    _, go = condensation.marx_cycle(100, 50, 40, 110)
    state, stop = condensation.marx_cycle(100, 50, 40, 100)
    assert go is condensation.Decision.PROCEED and stop is condensation.Decision.REFUSE
    assert state.lp_spend == 0
    return "proceed at 110, refuse at 100"


@check("say_law_collapse", "without wages there is no demand")
def _say_law():
    report = condensation.say_law_demand([0.0] * 10, 1.0)
    assert report.collapse and report.demand == 0
    return "demand 0 with 10 units produced"


@check("incentive_total", "a flat distribution gives nobody an incentive")
def _incentive():
    flat = distribution.uniform_distribution(30, 1 / 300)
    assert distribution.incentive_total(flat).total == 0
    pair = distribution.WealthDistribution.from_weights([1 / 3, 2 / 3], 0.1)
    assert abs(distribution.incentive_total(pair).total - 1) <= 1e-12
    return "I = 0 when flat, 1 for (1/3, 2/3)"


@check("exponential_family", "the rising curve with offset carries unit mass")
def _exponential():
    dist = distribution.exponential_family(1 / 300, 5, 30)
    assert abs(dist.weights.sum() - 1) <= 1e-10 and int(np.argmax(dist.weights)) == dist.n - 1
    return f"top weight {dist.weights[-1]:.6f}"


@check("ga_monotone", "a mutation is kept only when the total incentive goes up")
def _ga():
    result = distribution.ga_optimize(distribution.random_distribution(30, 1 / 300, 0), 2000, seed=0)
    assert (np.diff(result.history) >= 0).all() and result.history[-1] > result.history[0]
    return f"I from {result.history[0]:.3f} to {result.history[-1]:.3f}"


@check("classify_uniform", "a flat distribution is recognized as such")
def _classify():
    flat = distribution.uniform_distribution(30, 1 / 300)
    assert distribution.classify_equilibrium(flat) is distribution.Equilibrium.UNIFORM
    return "Uniform"


@check("prisoners_dilemma", "both confess although both keeping silent is better")
def _dilemma():
    solution = dilemma.solve_dilemma(dilemma.prisoners_table())
    assert solution.dominant == ("confess", "confess")
    assert solution.nash == [("confess", "confess")]
    assert ("silent", "silent") in solution.pareto
    return "Nash (confess, confess)"


@check("ultimate_ownership", "2% of each of three cross-held banks owns all of them")
def _ownership():
    net = ownership.three_banks()
    solved, series = ownership.ultimate_ownership(net), ownership.ultimate_ownership_series(net)
    assert np.abs(solved - 1).max() <= 1e-10 and np.abs(series - 1).max() <= 1e-10
    return "(1, 1, 1) by solve and series"


@check("dividend_round", "100 paid and 100 received per bank, 6 to the outsider")
def _dividends():
    flows = ownership.dividend_flow(ownership.three_banks(), ownership.DividendRound.of([2, 2, 2], [100, 100, 100]))
    assert list(flows.banks["total_income"]) == [100] * 3 and list(flows.banks["net"]) == [0] * 3
    assert flows.outsider == 6 and flows.conserved
    return "net 0 per bank, outsider 6"


@check("dividend_tax", "25% tax on 300 of dividends is 75 against 6 of real profit")
def _dividend_tax():
    report = ownership.dividend_tax(ownership.DividendRound.of([2, 2, 2], [100, 100, 100]), 0.25)
    assert report.total_tax == 75 and report.real_profit == 6 and report.banks["insolvent"].all()
    return "75 owed, all three insolvent"


@check("voting", "the outsider is outvoted 2 to 98")
def _voting():
    net = ownership.three_banks()
    support = {name: True for name in net.names}
    support[ownership.OUTSIDER] = False
    result = ownership.voting_outcome(net, support)
    assert all(result.passed.values())
    assert np.allclose(result.tally["oppose"], 0.02) and np.allclose(result.tally["support"], 0.98)
    return "passes 98:2 at every bank"


def _scenario_check(name: str):
    def run():
        config = validate_config(EXAMPLE_CONFIGS[name], DEFAULT_CONFIG)
        trajectory = registry.run_scenario(config)
        expected = SCENARIO_SCHEMAS[name]["columns"]
        assert trajectory.table.shape[0] > 0, "empty trajectory"
        assert expected is None or trajectory.columns == expected, f"columns {trajectory.columns}"
        return f"{trajectory.table.shape[0]} rows"

    return run


for _name in SCENARIO_SCHEMAS:
    CHECKS.append((f"scenario:{_name}", "documented example config runs", _scenario_check(_name)))


@dataclass
class VerificationReport:
    """
    :ivar pd.DataFrame results: Columns check, anchor, passed, detail.
    """

    results: pd.DataFrame

    @property
    def passed(self) -> bool:
        return bool(self.results["passed"].all())

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def format(self) -> str:
        lines = [
            f"{'PASS' if row.passed else 'FAIL'}  {row.check}: {row.detail}"
            for row in self.results.itertuples(index=False)
        ]
        n_pass = int(self.results["passed"].sum())
        lines.append(f"{n_pass}/{len(self.results)} checks passed")
        return "\n".join(lines)


def verify_worked_examples() -> VerificationReport:
    """
    Runs every registered check. A check fails when it raises; failures never propagate.

    :rtype: VerificationReport
    """
    rows = []
    for name, anchor, func in CHECKS:
        try:
            detail, ok = func(), True
        except Exception as e:  # pylint: disable=broad-except
            detail, ok = f"{type(e).__name__}: {e}" if str(e) else type(e).__name__, False
        logger.debug("%s: %s", name, "pass" if ok else "fail")
        rows.append({"check": name, "anchor": anchor, "passed": ok, "detail": detail})
    report = VerificationReport(results=pd.DataFrame(rows, columns=["check", "anchor", "passed", "detail"]))
    logger.info("verification: %d of %d checks passed", int(report.results["passed"].sum()), len(rows))
    return report


verify_paper_examples = verify_worked_examples
