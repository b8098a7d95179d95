# -*- coding: utf-8 -*-
# @Time    : 2024/5/7 14:20
# @Author  : YQ Tsui
# @File    : banking.py
# @Purpose : Fractional-reserve accounting of a single bank

"""
Reserve ratios are always given as the reserve *fraction* (0.1 for a 10:1 bank). A quoted
multiplier m converts to the fraction 1/m; "RR is often 20" therefore means 0.05.
"""

import logging
from dataclasses import dataclass, field, replace
from decimal import Decimal
from fractions import Fraction

from ..core.errors import DomainError, LedgerError, RepaymentError, ReserveBreach
from ..core.exact import as_decimal, as_fraction
from ..core.typedefs import Number

logger = logging.getLogger(__name__)

_ZERO = Decimal(0)
_ONE = Decimal(1)


def _check_reserve_ratio(reserve_ratio: Fraction):
    if not 0 < reserve_ratio <= 1:
        raise DomainError(f"reserve_ratio must lie in (0, 1], got {reserve_ratio}")


@dataclass(frozen=True)
class LoanRecord:
    """
    A single-period loan. ``outstanding`` starts at principal * (1 + interest_rate).

    Repayments retire principal first, then interest.
    """

    id: str
    principal: Decimal
    interest_rate: Decimal
    outstanding: Decimal

    @property
    def interest_due(self) -> Decimal:
        return self.principal * self.interest_rate

    @property
    def interest_outstanding(self) -> Decimal:
        return min(self.outstanding, self.interest_due)

    @property
    def principal_outstanding(self) -> Decimal:
        return self.outstanding - self.interest_outstanding


@dataclass(frozen=True)
class BankLedger:
    """
    Balance of one bank. Every operation returns a new ledger.

    :ivar Decimal base_money: Central-bank money held as reserve (M0, "Tier 1").
    :ivar Fraction reserve_ratio: Reserve fraction in (0, 1], kept exact so 1/9 stays 1/9.
    :ivar Decimal outstanding_credit: Principal of credit currently issued.
    :ivar Decimal equity: Accumulated interest receipts minus write-offs.
    :ivar dict loans: LoanRecord by id.
    """

    base_money: Decimal
    reserve_ratio: Fraction
    outstanding_credit: Decimal = _ZERO
    equity: Decimal = _ZERO
    loans: dict = field(default_factory=dict)
    next_id: int = 1

    @classmethod
    def open(cls, base_money: Number, reserve_ratio: Number, equity: Number = 0) -> "BankLedger":
        base_money, reserve_ratio = as_decimal(base_money), as_fraction(reserve_ratio)
        if base_money < _ZERO:
            raise DomainError(f"base_money must be >= 0, got {base_money}")
        _check_reserve_ratio(reserve_ratio)
        return cls(base_money=base_money, reserve_ratio=reserve_ratio, equity=as_decimal(equity))

    @property
    def exact_credit_cap(self) -> Fraction:
        return Fraction(self.base_money) / self.reserve_ratio

    @property
    def credit_cap(self) -> Decimal:
        return as_decimal(self.exact_credit_cap)

    @property
    def capacity(self) -> Decimal:
        """Credit that can still be issued before the reserve constraint binds."""
        return self.credit_cap - self.outstanding_credit

    def loan(self, loan_id: str) -> LoanRecord:
        try:
            return self.loans[loan_id]
        except KeyError:
            raise LedgerError(f"unknown loan id {loan_id!r}") from None


def money_multiplier(reserve_ratio: Number) -> Fraction:
    """
    Credit a bank may create per unit of base money.

    :param reserve_ratio: Reserve fraction in (0, 1].
    :type reserve_ratio: Number
    :return: 1 / reserve_ratio, exact: Fraction(1, 9) gives 9.
    :rtype: Fraction
    """
    reserve_ratio = as_fraction(reserve_ratio)
    _check_reserve_ratio(reserve_ratio)
    return 1 / reserve_ratio


def lending_roi(interest_rate: Number, reserve_ratio: Number) -> Fraction:
    """
    Profit per unit of real money committed when lending the full multiplier.

    :param interest_rate: Interest per period, >= 0.
    :type interest_rate: Number
    :param reserve_ratio: Reserve fraction in (0, 1].
    :type reserve_ratio: Number
    :return: interest_rate / reserve_ratio
    :rtype: Fraction
    """
    interest_rate, reserve_ratio = as_fraction(interest_rate), as_fraction(reserve_ratio)
    if interest_rate < 0:
        raise DomainError(f"interest_rate must be >= 0, got {interest_rate}")
    _check_reserve_ratio(reserve_ratio)
    return interest_rate / reserve_ratio


def loss_on_investment(loss: Number, remaining: Number) -> Decimal:
    """Loss relative to the real resources left; a fine of 5 on 15 remaining is 1/3."""
    remaining = as_decimal(remaining)
    if remaining <= _ZERO:
        raise DomainError(f"remaining resources must be > 0, got {remaining}")
    return as_decimal(loss) / remaining


def issue_loan(ledger: BankLedger, amount: Number, interest_rate: Number) -> tuple[BankLedger, str]:
    """
    Creates credit against the bank's base money.

    :param ledger: The ledger to issue from.
    :type ledger: BankLedger
    :param amount: Principal, > 0.
    :type amount: Number
    :param interest_rate: Single-period interest rate, >= 0.
    :type interest_rate: Number
    :return: The new ledger and the id of the loan.
    :rtype: tuple[BankLedger, str]
    """
    amount, interest_rate = as_decimal(amount), as_decimal(interest_rate)
    if amount <= _ZERO:
        raise DomainError(f"loan amount must be > 0, got {amount}")
    if interest_rate < _ZERO:
        raise DomainError(f"interest_rate must be >= 0, got {interest_rate}")
    if Fraction(ledger.outstanding_credit + amount) > ledger.exact_credit_cap:
        raise ReserveBreach(
            f"issuing {amount} would raise credit to {ledger.outstanding_credit + amount}, "
            f"above the cap {ledger.credit_cap}"
        )
    loan_id = f"L{ledger.next_id}"
    record = LoanRecord(loan_id, amount, interest_rate, amount * (_ONE + interest_rate))
    logger.debug("issued %s: principal %s at %s", loan_id, amount, interest_rate)
    return (
        replace(
            ledger,
            outstanding_credit=ledger.outstanding_credit + amount,
            loans={**ledger.loans, loan_id: record},
            next_id=ledger.next_id + 1,
        ),
        loan_id,
    )


def repay_loan(ledger: BankLedger, loan_id: str, amount: Number) -> BankLedger:
    """
    Books a repayment. The principal part destroys credit, the interest part goes to equity.

    :param ledger: The ledger holding the loan.
    :type ledger: BankLedger
    :param loan_id: Id returned by :func:`issue_loan`.
    :type loan_id: str
    :param amount: Repayment, 0 <= amount <= outstanding.
    :type amount: Number
    :rtype: BankLedger
    """
    amount = as_decimal(amount)
    record = ledger.loan(loan_id)
    if amount < _ZERO:
        raise RepaymentError(f"repayment must be >= 0, got {amount}")
    if amount > record.outstanding:
        raise RepaymentError(f"repayment {amount} exceeds outstanding {record.outstanding} on {loan_id}")
    if amount == _ZERO:
        return ledger
    principal_part = min(amount, record.principal_outstanding)
    interest_part = amount - principal_part
    logger.debug("repaid %s on %s: principal %s, interest %s", amount, loan_id, principal_part, interest_part)
    return replace(
        ledger,
        outstanding_credit=ledger.outstanding_credit - principal_part,
        equity=ledger.equity + interest_part,
        loans={**ledger.loans, loan_id: replace(record, outstanding=record.outstanding - amount)},
    )


def write_off(ledger: BankLedger, loan_id: str) -> BankLedger:
    """Writes off a loan: unpaid principal is charged to equity and its credit disappears."""
    record = ledger.loan(loan_id)
    principal_lost = record.principal_outstanding
    logger.debug("wrote off %s: principal %s", loan_id, principal_lost)
    return replace(
        ledger,
        outstanding_credit=ledger.outstanding_credit - principal_lost,
        equity=ledger.equity - principal_lost,
        loans={**ledger.loans, loan_id: replace(record, outstanding=_ZERO)},
    )


def redeposit_cascade(base: Number, reserve_ratio: Number, n_banks: int) -> Decimal:
    """
    Total deposits when each bank keeps its reserve and lends the rest on to the next bank.

    :param base: Initial deposit, > 0.
    :type base: Number
    :param reserve_ratio: Reserve fraction in (0, 1].
    :type reserve_ratio: Number
    :param n_banks: Number of onward deposits, >= 0.
    :type n_banks: int
    :return: base * sum((1 - reserve_ratio) ** k for k in 0..n_banks); tends to base / reserve_ratio.
    :rtype: Decimal
    """
    base, reserve_ratio = as_fraction(base), as_fraction(reserve_ratio)
    if base <= 0:
        raise DomainError(f"base must be > 0, got {base}")
    _check_reserve_ratio(reserve_ratio)
    if n_banks < 0:
        raise DomainError(f"n_banks must be >= 0, got {n_banks}")
    return as_decimal(base * (1 - (1 - reserve_ratio) ** (n_banks + 1)) / reserve_ratio)


def redeposit_terms(base: Number, reserve_ratio: Number, n_banks: int) -> list[Decimal]:
    """Deposit landing at each bank of the cascade, first bank first."""
    keep = 1 - as_fraction(reserve_ratio)
    terms, deposit = [], as_fraction(base)
    for _ in range(n_banks + 1):
        terms.append(as_decimal(deposit))
        deposit *= keep
    return terms
