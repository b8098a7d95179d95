# -*- coding: utf-8 -*-
# @Time    : 2024/5/15 10:14
# @Author  : YQ Tsui
# @File    : ownership.py
# @Purpose : Cross-shareholding resolution, dividend rounds and stockholder votes

"""
``C[i, j]`` is the fraction of bank j's stock held by bank i and ``d[j]`` the outside investor's
direct stake in bank j. The outsider's ultimate stake solves o = d + o C.
"""

import logging
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from pathlib import Path
from typing import Mapping, Optional, Sequence, Union

import numpy as np
import pandas as pd

from ..core.errors import DomainError, IrresolvableNetwork, NetworkFormatError
from ..core.exact import as_decimal, as_fraction
from ..core.typedefs import Number

logger = logging.getLogger(__name__)

OUTSIDER = "outsider"
_STAKE_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class OwnershipNetwork:
    """
    :ivar np.ndarray C: n x n cross holdings, C[i, j] = share of bank j held by bank i.
    :ivar np.ndarray d: Outside investor's direct stake per bank.
    :ivar tuple names: Bank names.
    """

    C: np.ndarray
    d: np.ndarray
    names: tuple = ()

    def __post_init__(self):
        n = self.d.shape[0] if self.d.ndim == 1 else -1
        if self.C.shape != (n, n):
            raise DomainError(f"C must be square and match d, got C {self.C.shape} and d {self.d.shape}")
        if not self.names:
            object.__setattr__(self, "names", tuple(f"bank_{k + 1}" for k in range(n)))
        if len(self.names) != n or OUTSIDER in self.names:
            raise DomainError(f"need {n} distinct bank names other than {OUTSIDER!r}")
        if ((self.C < 0) | (self.C > 1)).any() or ((self.d < 0) | (self.d > 1)).any():
            raise DomainError("stakes must lie in [0, 1]")
        over = np.flatnonzero(self.C.sum(axis=0) + self.d > 1 + _STAKE_TOL)
        if over.size:
            raise DomainError(f"more than all stock placed for {[self.names[j] for j in over]}")

    @classmethod
    def from_lists(cls, C: Sequence[Sequence[Number]], d: Sequence[Number], names: Sequence[str] = ()):
        return cls(np.asarray(C, dtype=float), np.asarray(d, dtype=float), tuple(names))

    @property
    def n(self) -> int:
        return int(self.d.shape[0])

    @property
    def spectral_radius(self) -> float:
        return float(np.abs(np.linalg.eigvals(self.C)).max()) if self.n else 0.0

    @property
    def other_holders(self) -> np.ndarray:
        """Stock of each bank held by nobody modeled."""
        return np.clip(1 - self.C.sum(axis=0) - self.d, 0.0, None)


def three_banks(direct_stake: float = 0.02) -> OwnershipNetwork:
    """Three banks placing their stock at each other, an outsider holding ``direct_stake`` of each."""
    cross = float((1 - as_fraction(direct_stake)) / 2)
    C = np.full((3, 3), cross)
    np.fill_diagonal(C, 0.0)
    return OwnershipNetwork(C, np.full(3, direct_stake), ("Amsterdam Bank", "Best Bank", "Credit Bank"))


def _check_resolvable(net: OwnershipNetwork):
    rho = net.spectral_radius
    if rho >= 1 - _STAKE_TOL:
        raise IrresolvableNetwork(f"spectral radius of the holdings is {rho}, stakes never resolve to an owner")


def ultimate_ownership(net: OwnershipNetwork) -> np.ndarray:
    """
    Direct plus indirect stake of the outsider in every bank.

    :param net: The holding network; its spectral radius must be below 1.
    :type net: OwnershipNetwork
    :return: o = d (I - C)^-1
    :rtype: np.ndarray
    """
    _check_resolvable(net)
    return np.linalg.solve((np.eye(net.n) - net.C).T, net.d)


def ownership_partial_sums(net: OwnershipNetwork, tol: float = 1e-14, max_terms: int = 100000) -> np.ndarray:
    """
    Partial sums of d + dC + dC^2 + ..., one row per term, stopping once a term falls below ``tol``.

    :param tol: Largest term magnitude still added.
    :type tol: float
    :param max_terms: Hard limit on the number of terms.
    :type max_terms: int
    :return: Array of shape (terms, n).
    :rtype: np.ndarray
    """
    _check_resolvable(net)
    sums = []
    total = np.zeros(net.n)
    term = net.d.copy()
    for _ in range(max_terms):
        total = total + term
        sums.append(total)
        if np.abs(term).max(initial=0.0) < tol:
            break
        term = term @ net.C
    else:
        logger.warning("ownership series stopped at %d terms without reaching %g", max_terms, tol)
    logger.debug("ownership series summed %d terms", len(sums))
    return np.vstack(sums) if sums else np.zeros((0, net.n))


def ultimate_ownership_series(net: OwnershipNetwork, tol: float = 1e-14, max_terms: int = 100000) -> np.ndarray:
    """The outsider's stake summed as the geometric series d + dC + dC^2 + ...; see :func:`ownership_partial_sums`."""
    sums = ownership_partial_sums(net, tol, max_terms)
    return sums[-1] if len(sums) else np.zeros(net.n)


def ownership_table(net: OwnershipNetwork, tol: float = 1e-14, max_terms: int = 100000) -> pd.DataFrame:
    """Direct, solved and series stakes per bank."""
    return pd.DataFrame(
        {
            "bank": list(net.names),
            "direct": net.d,
            "ultimate": ultimate_ownership(net),
            "ultimate_series": ultimate_ownership_series(net, tol, max_terms),
        }
    )


@dataclass(frozen=True)
class DividendRound:
    """
    :ivar tuple ops_profit: Profit from real banking business, per bank.
    :ivar tuple declared: Dividend each bank pays out, >= 0.
    """

    ops_profit: tuple
    declared: tuple

    @classmethod
    def of(cls, ops_profit: Sequence[Number], declared: Sequence[Number]) -> "DividendRound":
        if len(ops_profit) != len(declared):
            raise DomainError("ops_profit and declared need one entry per bank")
        declared = tuple(as_decimal(v) for v in declared)
        if any(v < 0 for v in declared):
            raise DomainError("declared dividends must be >= 0")
        return cls(tuple(as_decimal(v) for v in ops_profit), declared)


@dataclass
class DividendFlows:
    """
    :ivar pd.DataFrame banks: Columns bank, ops_profit, dividend_income, total_income, payout, net.
    :ivar Decimal outsider: Dividends received by the outside investor.
    :ivar Decimal other_holders: Dividends received by holders outside the model.
    """

    banks: pd.DataFrame
    outsider: Decimal
    other_holders: Decimal

    @property
    def conserved(self) -> bool:
        return sum(self.banks["net"], Decimal(0)) + self.outsider + self.other_holders == sum(
            self.banks["ops_profit"], Decimal(0)
        )


def _stakes(matrix: np.ndarray) -> list:
    return [[as_decimal(float(v)) for v in row] for row in np.atleast_2d(matrix)]


def dividend_flow(net: OwnershipNetwork, dividend_round: DividendRound) -> DividendFlows:
    """
    Books one dividend round in exact decimals.

    Bank j receives sum_i C[j, i] * declared[i]; the outsider receives sum_j d[j] * declared[j].

    :param net: The holding network.
    :type net: OwnershipNetwork
    :param dividend_round: Operating profit and declared dividend per bank.
    :type dividend_round: DividendRound
    :rtype: DividendFlows
    """
    if len(dividend_round.declared) != net.n:
        raise DomainError(f"dividend round covers {len(dividend_round.declared)} banks, network has {net.n}")
    C, d = _stakes(net.C), _stakes(net.d)[0]
    declared, ops = dividend_round.declared, dividend_round.ops_profit
    income = [sum((C[j][i] * declared[i] for i in range(net.n)), Decimal(0)) for j in range(net.n)]
    placed = [sum((C[j][i] for j in range(net.n)), Decimal(0)) + d[i] for i in range(net.n)]
    banks = pd.DataFrame(
        {
            "bank": list(net.names),
            "ops_profit": list(ops),
            "dividend_income": income,
            "total_income": [o + inc for o, inc in zip(ops, income)],
            "payout": list(declared),
            "net": [o + inc - p for o, inc, p in zip(ops, income, declared)],
        }
    )
    return DividendFlows(
        banks=banks,
        outsider=sum((d[j] * declared[j] for j in range(net.n)), Decimal(0)),
        other_holders=sum(((1 - placed[i]) * declared[i] for i in range(net.n)), Decimal(0)),
    )


@dataclass
class TaxReport:
    """
    :ivar pd.DataFrame banks: Columns bank, ops_profit, declared, tax, insolvent.
    :ivar Decimal total_tax: Tax levied on all declared dividends.
    :ivar Decimal real_profit: Sum of operating profits.
    """

    banks: pd.DataFrame
    total_tax: Decimal
    real_profit: Decimal


def dividend_tax(dividend_round: DividendRound, rate: Number, names: Optional[Sequence[str]] = None) -> TaxReport:
    """
    Taxes every declared dividend at ``rate``. A bank is flagged insolvent when its tax exceeds
    the profit it really made, i.e. its operating profit.

    :param dividend_round: Operating profit and declared dividend per bank.
    :type dividend_round: DividendRound
    :param rate: Tax rate in [0, 1].
    :type rate: Number
    :param names: Bank names for the report.
    :type names: Sequence[str], optional
    :rtype: TaxReport
    """
    rate = as_decimal(rate)
    if not 0 <= rate <= 1:
        raise DomainError(f"rate must lie in [0, 1], got {rate}")
    n = len(dividend_round.declared)
    tax = [rate * v for v in dividend_round.declared]
    banks = pd.DataFrame(
        {
            "bank": list(names) if names is not None else [f"bank_{k + 1}" for k in range(n)],
            "ops_profit": list(dividend_round.ops_profit),
            "declared": list(dividend_round.declared),
            "tax": tax,
            "insolvent": [t > o for t, o in zip(tax, dividend_round.ops_profit)],
        }
    )
    return TaxReport(
        banks=banks,
        total_tax=sum(tax, Decimal(0)),
        real_profit=sum(dividend_round.ops_profit, Decimal(0)),
    )


@dataclass
class VoteResult:
    """
    :ivar pd.DataFrame tally: Columns bank, support, oppose, abstain, passed.
    """

    tally: pd.DataFrame

    @property
    def passed(self) -> dict:
        return dict(zip(self.tally["bank"], self.tally["passed"]))


def voting_outcome(net: OwnershipNetwork, support: Mapping[str, bool]) -> VoteResult:
    """
    Votes a proposal at each bank's stockholder meeting.

    Every holder votes its stake in the bank. ``support`` maps bank names and :data:`OUTSIDER` to
    their vote; holders missing from it, and stock held outside the model, abstain. A proposal passes
    on a strict majority of the stock voted, so ties fail.

    :param net: The holding network.
    :type net: OwnershipNetwork
    :param support: Vote of each modeled holder.
    :type support: Mapping[str, bool]
    :rtype: VoteResult
    """
    unknown = set(support) - set(net.names) - {OUTSIDER}
    if unknown:
        raise DomainError(f"unknown voters {sorted(unknown)}")
    holders = list(net.names) + [OUTSIDER]
    stakes = np.vstack([net.C, net.d])
    votes = np.array([support.get(h) for h in holders], dtype=object)
    yes = np.array([v is True for v in votes])
    no = np.array([v is False for v in votes])
    pro = stakes[yes].sum(axis=0)
    con = stakes[no].sum(axis=0)
    tally = pd.DataFrame(
        {
            "bank": list(net.names),
            "support": pro,
            "oppose": con,
            "abstain": 1 - pro - con,
            "passed": pro > con,
        }
    )
    return VoteResult(tally=tally)


def _parse_row(tokens: list, lineno: int) -> list:
    try:
        return [float(Fraction(t)) for t in tokens]
    except (ValueError, ZeroDivisionError):
        raise NetworkFormatError(f"line {lineno}: expected fractions, got {' '.join(tokens)!r}") from None


def parse_network(text: str) -> OwnershipNetwork:
    """
    Reads the plain-text network format: a line with n, then n rows of n stakes (row i holds bank
    i's share of every bank), then one row with the outsider's direct stakes. Stakes may be decimals
    or ratios like ``49/100``. ``#`` starts a comment; an optional ``# names:`` comment lists the
    banks, separated by commas.
    """
    names = ()
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body, _, comment = raw.partition("#")
        if comment.strip().lower().startswith("names:"):
            names = tuple(s.strip() for s in comment.strip()[len("names:") :].split(",") if s.strip())
        if body.strip():
            lines.append((lineno, body.split()))
    if not lines:
        raise NetworkFormatError("empty network file")
    lineno, header = lines[0]
    if len(header) != 1 or not header[0].isdigit():
        raise NetworkFormatError(f"line {lineno}: expected the bank count, got {' '.join(header)!r}")
    n = int(header[0])
    if len(lines) != n + 2:
        raise NetworkFormatError(f"expected {n} matrix rows and one stake row after the header, got {len(lines) - 1}")
    rows = []
    for lineno, tokens in lines[1:]:
        if len(tokens) != n:
            raise NetworkFormatError(f"line {lineno}: expected {n} values, got {len(tokens)}")
        rows.append(_parse_row(tokens, lineno))
    try:
        return OwnershipNetwork(np.asarray(rows[:n]).reshape(n, n), np.asarray(rows[n]), names)
    except DomainError as e:
        raise NetworkFormatError(str(e)) from e


def read_network(path: Union[str, Path]) -> OwnershipNetwork:
    return parse_network(Path(path).read_text(encoding="utf-8"))


def format_network(net: OwnershipNetwork) -> str:
    lines = [f"# names: {', '.join(net.names)}", str(net.n)]
    lines += [" ".join(repr(float(v)) for v in row) for row in net.C]
    lines.append(" ".join(repr(float(v)) for v in net.d))
    return "\n".join(lines) + "\n"


def write_network(net: OwnershipNetwork, path: Union[str, Path]):
    Path(path).write_text(format_network(net), encoding="utf-8")
