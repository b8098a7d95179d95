# -*- coding: utf-8 -*-
# @Time    : 2024/5/8 16:05
# @Author  : YQ Tsui
# @File    : credit.py
# @Purpose : Interest, forced default and the refinancing game

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import pandas as pd

from ..core.errors import DomainError
from ..core.typedefs import Number

logger = logging.getLogger(__name__)

# relative slack when comparing float money stocks that should balance exactly
_SETTLE_TOL = 1e-9


def bankruptcy_fraction(interest_pct: Number) -> Number:
    """
    Share of lent money that can never be returned in a closed economy charging x% interest.

    Works in the arithmetic of its argument: an int or Fraction gives an exact Fraction-valued
    result, a float gives a float.

    :param interest_pct: Interest x in percent, >= 0.
    :type interest_pct: Number
    :return: y = 100x / (100 + x), so that (1 - y/100)(1 + x/100) = 1.
    :rtype: Number
    """
    if interest_pct < 0:
        raise DomainError(f"interest_pct must be >= 0, got {interest_pct}")
    if isinstance(interest_pct, int):
        interest_pct = Fraction(interest_pct)
    return 100 * interest_pct / (100 + interest_pct)


@dataclass(frozen=True)
class RefinanceGameConfig:
    """
    :ivar int n_borrowers: Number of borrowers, >= 1.
    :ivar float interest_pct: Interest per round in percent.
    :ivar int rounds: Trading rounds; without refinancing the loans mature after the last one.
    :ivar bool refinance: Roll the whole balance over each round instead of settling.
    :ivar float money_growth_pct: New money entering the economy per round, in percent.
    :ivar int seed: Generator seed.
    :ivar float money_supply: Total money lent out at the start.
    :ivar float trade_intensity: Upper bound of the cash share a borrower spends per trade.
    """

    n_borrowers: int = 1000
    interest_pct: float = 100.0
    rounds: int = 1
    refinance: bool = False
    money_growth_pct: float = 0.0
    seed: int = 0
    money_supply: float = 1000.0
    trade_intensity: float = 0.5

    def validate(self):
        problems = []
        if self.n_borrowers < 1:
            problems.append(f"n_borrowers must be >= 1, got {self.n_borrowers}")
        if self.rounds < 1:
            problems.append(f"rounds must be >= 1, got {self.rounds}")
        for name in ("interest_pct", "money_growth_pct"):
            if getattr(self, name) < 0:
                problems.append(f"{name} must be >= 0, got {getattr(self, name)}")
        if self.money_supply <= 0:
            problems.append(f"money_supply must be > 0, got {self.money_supply}")
        if not 0 <= self.trade_intensity <= 1:
            problems.append(f"trade_intensity must lie in [0, 1], got {self.trade_intensity}")
        if problems:
            raise DomainError("; ".join(problems))


@dataclass
class DefaultOutcome:
    """
    :ivar float defaulted_money_fraction: Percentage of the debt written off.
    :ivar float defaulted_borrower_fraction: Percentage of borrowers in default.
    :ivar pd.DataFrame ledger: One row per round.
    """

    defaulted_money_fraction: float
    defaulted_borrower_fraction: float
    ledger: pd.DataFrame

    @property
    def lender_net_gain(self) -> float:
        """Repayments received minus money lent, relative to the money lent."""
        lent = self.ledger["lent"].sum()
        return float((self.ledger["repaid"].sum() - lent) / lent) if self.ledger["settled"].any() else 0.0


def _trade(cash: np.ndarray, alive: np.ndarray, intensity: float, rng: np.random.Generator):
    # each live borrower spends a random share of its cash with a random other live borrower
    idx = np.flatnonzero(alive)
    if idx.size < 2 or intensity == 0:
        return
    spend = cash[idx] * rng.uniform(0.0, intensity, size=idx.size)
    partner = idx[(np.arange(idx.size) + rng.integers(1, idx.size, size=idx.size)) % idx.size]
    cash[idx] -= spend
    np.add.at(cash, partner, spend)


def _settle(cash: np.ndarray, debt: np.ndarray, alive: np.ndarray) -> np.ndarray:
    """
    Defaults borrowers until the money in circulation covers the remaining debt.

    The borrower with the least cash goes first, ties to the lowest index; its cash is spent
    into the economy and lands with the survivors in equal shares. Returns the default mask.
    """
    defaulted = np.zeros_like(alive)
    total_cash = cash[alive].sum()
    while alive.any() and debt[alive].sum() > total_cash * (1 + _SETTLE_TOL):
        k = int(np.argmin(np.where(alive, cash, np.inf)))
        alive[k] = False
        defaulted[k] = True
        if alive.any():
            cash[alive] += cash[k] / alive.sum()
        cash[k] = 0.0
    return defaulted


def refinance_game(config: RefinanceGameConfig) -> DefaultOutcome:
    """
    Monte-Carlo closed economy where all money in circulation was borrowed at interest.

    Without refinancing the loans mature after ``config.rounds`` trading rounds and the economy
    cannot return more than the money it holds, so about bankruptcy_fraction(x) percent of the
    debt is written off. With refinancing the whole balance rolls over each round; the lender calls
    the loans in the first round the debt stock exceeds the money supply.

    :param config: Game parameters.
    :type config: RefinanceGameConfig
    :rtype: DefaultOutcome
    """
    config.validate()
    rng = np.random.default_rng(config.seed)
    n = config.n_borrowers
    rate, growth = config.interest_pct / 100.0, config.money_growth_pct / 100.0

    draws = rng.exponential(1.0, size=n)
    principal = config.money_supply * draws / draws.sum()
    cash = principal.copy()
    debt = principal.copy()
    alive = np.ones(n, dtype=bool)
    defaulted = np.zeros(n, dtype=bool)

    rows = []
    lent_total = float(principal.sum())
    for rnd in range(1, config.rounds + 1):
        _trade(cash, alive, config.trade_intensity, rng)
        if growth:
            cash[alive] += cash[alive].sum() * growth / alive.sum()
        debt[alive] *= 1 + rate
        money, debt_stock = float(cash[alive].sum()), float(debt[alive].sum())
        settle = not config.refinance and rnd == config.rounds
        called = config.refinance and debt_stock > money * (1 + _SETTLE_TOL)
        repaid = 0.0
        if settle or called:
            defaulted |= _settle(cash, debt, alive)
            repaid = float(debt[alive].sum())
            cash[alive] -= debt[alive]
            logger.debug("round %d: settled, %d defaults", rnd, int(defaulted.sum()))
        rows.append(
            {
                "round": rnd,
                "money_supply": money,
                "debt_stock": debt_stock,
                "lent": lent_total if rnd == 1 else 0.0,
                "repaid": repaid,
                "settled": settle or called,
                "defaults": int(defaulted.sum()),
            }
        )
        if settle or called:
            break

    total_debt = float(debt.sum())
    lost = float(debt[defaulted].sum())
    return DefaultOutcome(
        defaulted_money_fraction=100.0 * lost / total_debt if total_debt else 0.0,
        defaulted_borrower_fraction=100.0 * defaulted.sum() / n,
        ledger=pd.DataFrame(rows),
    )


@dataclass
class SpiralResult:
    rates: np.ndarray
    diverged: bool


def credit_spiral(r0: float, r_ref: float, sensitivity: float, rounds: int) -> SpiralResult:
    """
    Stylized speculation feedback: a rate above the reference rate pushes itself higher.

    r_{t+1} = r_t * (1 + k * max(0, r_t - r_ref)); divergence is flagged once r exceeds 10 r0.
    The trajectory stops early when the next rate would overflow a float.

    :param r0: Starting rate, >= 0.
    :param r_ref: Reference (unstressed) rate, >= 0.
    :param sensitivity: Feedback strength k, >= 0.
    :param rounds: Number of iterations.
    :return: The trajectory r_0..r_rounds and the divergence flag.
    :rtype: SpiralResult
    """
    if r0 < 0 or r_ref < 0 or sensitivity < 0:
        raise DomainError("r0, r_ref and sensitivity must be >= 0")
    rates = [float(r0)]
    for _ in range(rounds):
        r = rates[-1]
        nxt = r * (1 + sensitivity * max(0.0, r - r_ref))
        if not math.isfinite(nxt):
            logger.debug("spiral overflowed after %d rounds", len(rates) - 1)
            break
        rates.append(nxt)
    rates = np.asarray(rates)
    return SpiralResult(rates=rates, diverged=bool(r0 > 0 and (rates > 10 * r0).any()))
