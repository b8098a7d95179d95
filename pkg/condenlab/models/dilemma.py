# -*- coding: utf-8 -*-
# @Time    : 2024/5/14 11:02
# @Author  : YQ Tsui
# @File    : dilemma.py
# @Purpose : Two-player pure-strategy game solver

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from ..core.errors import DomainError


@dataclass(frozen=True, eq=False)
class PayoffTable:
    """
    Utilities of both players, indexed ``[a_strategy, b_strategy]``.

    :ivar np.ndarray payoff_a: Utility of player A.
    :ivar np.ndarray payoff_b: Utility of player B.
    :ivar tuple strategies: Strategy labels, shared by both players.
    """

    payoff_a: np.ndarray
    payoff_b: np.ndarray
    strategies: tuple = ("confess", "silent")

    def __post_init__(self):
        shape = (len(self.strategies), len(self.strategies))
        if np.shape(self.payoff_a) != shape or np.shape(self.payoff_b) != shape:
            raise DomainError(f"payoff tables must both have shape {shape}")
        if not (np.isfinite(self.payoff_a).all() and np.isfinite(self.payoff_b).all()):
            raise DomainError("payoffs must be finite")

    @classmethod
    def from_lists(cls, payoff_a: Sequence[Sequence[float]], payoff_b: Sequence[Sequence[float]], strategies=None):
        return cls(
            np.asarray(payoff_a, dtype=float),
            np.asarray(payoff_b, dtype=float),
            tuple(strategies) if strategies is not None else ("confess", "silent"),
        )

    def outcome(self, a: int, b: int) -> tuple[float, float]:
        return float(self.payoff_a[a, b]), float(self.payoff_b[a, b])


def prisoners_table() -> PayoffTable:
    """
    Two suspects questioned apart: both confessing costs 20 years each, a lone confessor gets a
    10 kE bonus while the other gets 50 years, and both keeping silent walk free.

    Years count as negative utility, the bonus as +10.
    """
    return PayoffTable.from_lists([[-20, 10], [-50, 0]], [[-20, -50], [10, 0]])


@dataclass
class DilemmaSolution:
    """
    :ivar tuple dominant: Strictly dominant strategy label of A and of B, None when there is none.
    :ivar list nash: Pure Nash equilibria as (A label, B label).
    :ivar list pareto: Pareto-optimal outcomes as (A label, B label).
    """

    dominant: tuple[Optional[str], Optional[str]]
    nash: list
    pareto: list


def _strict_dominant(payoff: np.ndarray) -> Optional[int]:
    # rows are the player's own strategies, columns the opponent's
    for s in range(payoff.shape[0]):
        others = np.delete(payoff, s, axis=0)
        if (payoff[s] > others).all():
            return s
    return None


def solve_dilemma(table: PayoffTable) -> DilemmaSolution:
    """
    Strictly dominant strategies, pure Nash equilibria and the Pareto set of a two-player table.

    An outcome is Nash when neither player gains by deviating alone; it is Pareto-optimal when no
    other outcome is at least as good for both and strictly better for one.

    :param table: Payoffs of both players.
    :type table: PayoffTable
    :rtype: DilemmaSolution
    """
    labels = table.strategies
    dom_a = _strict_dominant(table.payoff_a)
    dom_b = _strict_dominant(table.payoff_b.T)

    cells = list(itertools.product(range(len(labels)), repeat=2))
    best_a = table.payoff_a.max(axis=0)
    best_b = table.payoff_b.max(axis=1)
    nash = [
        (labels[a], labels[b])
        for a, b in cells
        if table.payoff_a[a, b] >= best_a[b] and table.payoff_b[a, b] >= best_b[a]
    ]

    outcomes = {cell: table.outcome(*cell) for cell in cells}
    pareto = []
    for cell, (ua, ub) in outcomes.items():
        dominated = any(
            va >= ua and vb >= ub and (va > ua or vb > ub) for other, (va, vb) in outcomes.items() if other != cell
        )
        if not dominated:
            pareto.append((labels[cell[0]], labels[cell[1]]))

    return DilemmaSolution(
        dominant=(labels[dom_a] if dom_a is not None else None, labels[dom_b] if dom_b is not None else None),
        nash=nash,
        pareto=pareto,
    )
