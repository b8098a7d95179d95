"""
Tests for the single-bank ledger and the reserve arithmetic
"""

from decimal import Decimal
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from condenlab.core.errors import DomainError, LedgerError, RepaymentError, ReserveBreach
from condenlab.models.banking import (
    BankLedger,
    issue_loan,
    lending_roi,
    loss_on_investment,
    money_multiplier,
    redeposit_cascade,
    redeposit_terms,
    repay_loan,
    write_off,
)


@pytest.mark.parametrize(
    "rate, rr, expected",
    [
        (0.03, 0.10, Fraction(3, 10)),
        (0.05, 0.05, 1),
        (0, 0.2, 0),
        ("0.04", "0.5", Fraction(2, 25)),
    ],
)
def test_lending_roi(rate, rr, expected):
    assert lending_roi(rate, rr) == expected


@pytest.mark.parametrize("rr", [0, -0.1, 1.5])
def test_reserve_ratio_domain(rr):
    with pytest.raises(DomainError):
        money_multiplier(rr)
    with pytest.raises(DomainError):
        BankLedger.open(100, rr)


def test_multiplier_is_reciprocal_of_fraction():
    assert money_multiplier(0.05) == 20
    assert money_multiplier(0.10) == 10
    assert money_multiplier(1) == 1


def test_multiplier_of_one_ninth_is_exact():
    assert money_multiplier(Fraction(1, 9)) == 9
    assert money_multiplier("1/9") == 9
    ledger = BankLedger.open(100, Fraction(1, 9))
    assert ledger.credit_cap == 900
    ledger, _ = issue_loan(ledger, 900, 0.03)
    assert ledger.capacity == 0
    with pytest.raises(ReserveBreach):
        issue_loan(ledger, Decimal("0.01"), 0.03)


@given(
    st.decimals(min_value="0", max_value="0.5", places=3),
    st.decimals(min_value="0.001", max_value="1", places=3),
)
def test_lending_roi_times_reserve_is_the_rate(rate, rr):
    assert lending_roi(rate, rr) * Fraction(rr) == Fraction(rate)


def test_issue_up_to_cap_then_breach():
    ledger = BankLedger.open(100, 0.1)
    assert ledger.credit_cap == 1000
    ledger, first = issue_loan(ledger, 600, 0.03)
    ledger, second = issue_loan(ledger, 400, 0.03)
    assert (first, second) == ("L1", "L2")
    assert ledger.outstanding_credit == 1000
    assert ledger.capacity == 0
    with pytest.raises(ReserveBreach):
        issue_loan(ledger, Decimal("0.01"), 0.03)


def test_issue_rejects_bad_amounts():
    ledger = BankLedger.open(100, 0.1)
    with pytest.raises(DomainError):
        issue_loan(ledger, 0, 0.03)
    with pytest.raises(DomainError):
        issue_loan(ledger, 10, -0.01)


def test_ledger_is_not_mutated():
    ledger = BankLedger.open(100, 0.1)
    issue_loan(ledger, 100, 0.05)
    assert ledger.outstanding_credit == 0
    assert ledger.loans == {}


def test_repay_principal_then_interest():
    ledger, loan_id = issue_loan(BankLedger.open(100, 0.1), 1000, 0.03)
    assert ledger.loan(loan_id).outstanding == Decimal("1030")

    ledger = repay_loan(ledger, loan_id, 500)
    assert ledger.outstanding_credit == 500
    assert ledger.equity == 0

    ledger = repay_loan(ledger, loan_id, 515)
    assert ledger.outstanding_credit == 0
    assert ledger.equity == 15
    assert ledger.loan(loan_id).outstanding == 15

    ledger = repay_loan(ledger, loan_id, 15)
    assert ledger.equity == 30
    assert ledger.loan(loan_id).outstanding == 0


def test_repay_zero_is_identity():
    ledger, loan_id = issue_loan(BankLedger.open(100, 0.1), 100, 0.03)
    assert repay_loan(ledger, loan_id, 0) is ledger


def test_repay_errors():
    ledger, loan_id = issue_loan(BankLedger.open(100, 0.1), 100, 0.03)
    with pytest.raises(RepaymentError):
        repay_loan(ledger, loan_id, 104)
    with pytest.raises(RepaymentError):
        repay_loan(ledger, loan_id, -1)
    with pytest.raises(LedgerError):
        repay_loan(ledger, "L99", 1)


def test_write_off_charges_equity():
    ledger, loan_id = issue_loan(BankLedger.open(100, 0.1), 200, 0.05)
    ledger = repay_loan(ledger, loan_id, 50)
    ledger = write_off(ledger, loan_id)
    assert ledger.outstanding_credit == 0
    assert ledger.equity == -150
    assert ledger.loan(loan_id).outstanding == 0


def test_loss_on_investment():
    assert loss_on_investment(5, 15) == Decimal(1) / Decimal(3)
    with pytest.raises(DomainError):
        loss_on_investment(5, 0)


def test_redeposit_cascade_converges():
    assert abs(redeposit_cascade(1, 0.1, 200) - 10) < Decimal("1e-6")
    assert redeposit_cascade(5, 0.2, 0) == 5
    assert redeposit_cascade(1, 1, 10) == 1


def test_redeposit_terms_shrink_geometrically():
    terms = redeposit_terms(Decimal(100), Decimal("0.1"), 3)
    assert terms == [Decimal(100), Decimal(90), Decimal(81), Decimal("72.9")]


@given(
    st.decimals(min_value="0.01", max_value="1000", places=2),
    st.decimals(min_value="0.01", max_value="1", places=2),
    st.integers(min_value=0, max_value=50),
)
def test_redeposit_cascade_bounded_by_multiplier(base, rr, n_banks):
    total = redeposit_cascade(base, rr, n_banks)
    assert base <= total <= base / rr + Decimal("1e-20")


@given(
    st.decimals(min_value="0.01", max_value="1000", places=2),
    st.decimals(min_value="0.01", max_value="1", places=2),
    st.integers(min_value=0, max_value=50),
)
def test_redeposit_cascade_grows_with_banks(base, rr, n_banks):
    assert redeposit_cascade(base, rr, n_banks) <= redeposit_cascade(base, rr, n_banks + 1)


@given(
    st.lists(
        st.tuples(
            st.decimals(min_value="1", max_value="100", places=2),
            st.decimals(min_value="0", max_value="0.2", places=3),
            st.decimals(min_value="0", max_value="1", places=2),
        ),
        min_size=1,
        max_size=8,
    )
)
def test_repayments_conserve_money(loans):
    ledger = BankLedger.open(1000, 0.1)
    for amount, rate, share in loans:
        ledger, loan_id = issue_loan(ledger, amount, rate)
        credit, equity = ledger.outstanding_credit, ledger.equity
        payment = ledger.loan(loan_id).outstanding * share
        ledger = repay_loan(ledger, loan_id, payment)
        assert credit - ledger.outstanding_credit == min(payment, amount)
        assert ledger.equity - equity == payment - min(payment, amount)
    for loan_id, record in ledger.loans.items():
        ledger = repay_loan(ledger, loan_id, record.outstanding)
    assert ledger.outstanding_credit == 0
    assert ledger.equity == sum(amount * rate for amount, rate, _ in loans)


@given(
    st.lists(st.decimals(min_value="0.01", max_value="100", places=2), min_size=1, max_size=10),
    st.decimals(min_value="0", max_value="0.2", places=3),
)
def test_credit_never_exceeds_cap(amounts, rate):
    ledger = BankLedger.open(100, 0.25)
    for amount in amounts:
        try:
            ledger, _ = issue_loan(ledger, amount, rate)
        except ReserveBreach:
            pass
        assert ledger.outstanding_credit <= ledger.credit_cap
