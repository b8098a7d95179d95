"""
Tests for cross-shareholding resolution, dividend rounds, votes and the network file format
"""

from decimal import Decimal
from pathlib import Path

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

import condenlab
from condenlab.core.errors import DomainError, IrresolvableNetwork, NetworkFormatError
from condenlab.models.ownership import (
    OUTSIDER,
    DividendRound,
    OwnershipNetwork,
    dividend_flow,
    dividend_tax,
    format_network,
    ownership_partial_sums,
    ownership_table,
    parse_network,
    read_network,
    three_banks,
    ultimate_ownership,
    ultimate_ownership_series,
    voting_outcome,
    write_network,
)

FIXTURE = Path(condenlab.__file__).parent / "fixtures" / "three_banks.net"


def test_outsider_ends_up_owning_everything():
    net = three_banks(0.02)
    assert net.C[0, 1] == 0.49
    np.testing.assert_allclose(ultimate_ownership(net), [1.0, 1.0, 1.0], atol=1e-12)
    np.testing.assert_allclose(ultimate_ownership_series(net), [1.0, 1.0, 1.0], atol=1e-10)


def test_single_direct_stake_spreads():
    net = OwnershipNetwork(three_banks().C, np.array([0.02, 0.0, 0.0]))
    stakes = ultimate_ownership(net)
    np.testing.assert_allclose(stakes, [0.34229, 0.32887, 0.32887], atol=1e-4)
    assert stakes[1] == pytest.approx(stakes[2])


def test_partial_sums_rise_to_solution():
    net = three_banks()
    sums = ownership_partial_sums(net)
    assert sums.shape[1] == 3
    np.testing.assert_array_equal(sums[0], net.d)
    assert np.all(np.diff(sums, axis=0) >= 0)
    np.testing.assert_allclose(sums[-1], ultimate_ownership(net), atol=1e-10)


def test_series_term_limit():
    sums = ownership_partial_sums(three_banks(), max_terms=5)
    assert sums.shape == (5, 3)


def test_ownership_table_columns():
    table = ownership_table(three_banks())
    assert list(table.columns) == ["bank", "direct", "ultimate", "ultimate_series"]
    assert table["bank"].tolist() == ["Amsterdam Bank", "Best Bank", "Credit Bank"]


def test_unresolvable_network():
    net = OwnershipNetwork.from_lists([[0, 1], [1, 0]], [0, 0])
    assert net.spectral_radius == pytest.approx(1.0)
    with pytest.raises(IrresolvableNetwork):
        ultimate_ownership(net)
    with pytest.raises(IrresolvableNetwork):
        ownership_partial_sums(net)


@pytest.mark.parametrize(
    "C, d, names",
    [
        ([[0, 0.5]], [0.1, 0.1], ()),
        ([[0, 0.6], [0.6, 0]], [0.5, 0.1], ()),
        ([[0, -0.1], [0.1, 0]], [0.1, 0.1], ()),
        ([[0, 0.1], [0.1, 0]], [0.1, 0.1], ("a", "a", "b")),
        ([[0, 0.1], [0.1, 0]], [0.1, 0.1], ("a", OUTSIDER)),
    ],
)
def test_network_validation(C, d, names):
    with pytest.raises(DomainError):
        OwnershipNetwork.from_lists(C, d, names)


@st.composite
def networks(draw, n=st.integers(min_value=1, max_value=6)):
    size = draw(n)
    raw = draw(arrays(np.float64, (size, size), elements=st.floats(min_value=0.0, max_value=1.0)))
    np.fill_diagonal(raw, 0.0)
    col = raw.sum(axis=0)
    scale = np.where(col > 0.9, 0.9 / np.where(col > 0, col, 1.0), 1.0)
    C = raw * scale
    room = np.clip(1 - C.sum(axis=0), 0.0, 1.0)
    fraction = draw(arrays(np.float64, (size,), elements=st.floats(min_value=0.0, max_value=1.0)))
    return OwnershipNetwork(C, room * fraction)


@given(networks())
def test_series_agrees_with_solve(net):
    assert net.spectral_radius < 0.95
    np.testing.assert_allclose(ultimate_ownership_series(net), ultimate_ownership(net), atol=1e-10)


@given(networks(), st.floats(min_value=0.0, max_value=1.0))
def test_more_direct_stake_never_lowers_ultimate(net, shrink):
    smaller = OwnershipNetwork(net.C, net.d * shrink)
    assert np.all(ultimate_ownership(smaller) <= ultimate_ownership(net) + 1e-12)
    assert np.all(ultimate_ownership(net) >= net.d - 1e-12)


def test_dividend_round_is_exact_and_conserved():
    flows = dividend_flow(three_banks(), DividendRound.of([2, 2, 2], [100, 100, 100]))
    banks = flows.banks
    assert banks["dividend_income"].tolist() == [Decimal(98)] * 3
    assert banks["total_income"].tolist() == [Decimal(100)] * 3
    assert banks["net"].tolist() == [Decimal(0)] * 3
    assert flows.outsider == Decimal(6)
    assert flows.other_holders == 0
    assert flows.conserved


def test_dividends_to_outside_holders():
    net = OwnershipNetwork.from_lists([[0, 0.5], [0.25, 0]], [0.25, 0.25])
    flows = dividend_flow(net, DividendRound.of([10, 10], [8, 4]))
    assert flows.banks["dividend_income"].tolist() == [Decimal(2), Decimal(2)]
    assert flows.outsider == Decimal(3)
    assert flows.other_holders == Decimal(5)
    assert flows.conserved


def test_dividend_round_validation():
    with pytest.raises(DomainError):
        DividendRound.of([1, 2], [1])
    with pytest.raises(DomainError):
        DividendRound.of([1], [-1])
    with pytest.raises(DomainError):
        dividend_flow(three_banks(), DividendRound.of([1, 1], [1, 1]))


def test_dividend_tax_exceeds_real_profits():
    report = dividend_tax(DividendRound.of([2, 2, 2], [100, 100, 100]), 0.25, three_banks().names)
    assert report.total_tax == Decimal(75)
    assert report.real_profit == Decimal(6)
    assert report.banks["insolvent"].all()
    assert report.banks["tax"].tolist() == [Decimal(25)] * 3


def test_dividend_tax_on_real_profit_is_bearable():
    report = dividend_tax(DividendRound.of([10, 10], [10, 4]), "0.5")
    assert report.banks["bank"].tolist() == ["bank_1", "bank_2"]
    assert not report.banks["insolvent"].any()
    with pytest.raises(DomainError):
        dividend_tax(DividendRound.of([1], [1]), 1.5)


def test_banks_outvote_the_owner():
    net = three_banks()
    result = voting_outcome(net, {OUTSIDER: False, **{name: True for name in net.names}})
    np.testing.assert_allclose(result.tally["support"], 0.98)
    np.testing.assert_allclose(result.tally["oppose"], 0.02)
    assert all(result.passed.values())


def test_abstaining_banks_leave_the_owner_in_charge():
    net = three_banks()
    assert all(voting_outcome(net, {OUTSIDER: True}).passed.values())
    assert not any(voting_outcome(net, {}).passed.values())


def test_unknown_voter():
    with pytest.raises(DomainError):
        voting_outcome(three_banks(), {"Zeta Bank": True})


def test_fixture_file_matches_builtin_network():
    net = read_network(FIXTURE)
    expected = three_banks()
    np.testing.assert_array_equal(net.C, expected.C)
    np.testing.assert_array_equal(net.d, expected.d)
    assert net.names == expected.names


def test_network_file_round_trip(tmp_path):
    net = OwnershipNetwork.from_lists([[0, 0.5], [0.25, 0]], [0.25, 0.25], ("North", "South"))
    path = tmp_path / "two.net"
    write_network(net, path)
    again = read_network(path)
    np.testing.assert_array_equal(again.C, net.C)
    np.testing.assert_array_equal(again.d, net.d)
    assert again.names == net.names
    assert format_network(again) == path.read_text(encoding="utf-8")


def test_ratios_and_default_names():
    net = parse_network("2\n0 49/100\n49/100 0\n1/50 1/50\n")
    assert net.C[0, 1] == 0.49
    assert net.names == ("bank_1", "bank_2")


@pytest.mark.parametrize(
    "text",
    [
        "",
        "# only a comment\n",
        "two\n0 0\n0 0\n0 0\n",
        "2\n0 0\n0 0\n",
        "2\n0 0 0\n0 0\n0 0\n",
        "2\n0 x\n0 0\n0 0\n",
        "2\n0 1/0\n0 0\n0 0\n",
        "2\n0 0.9\n0 0\n0 0.5\n",
    ],
)
def test_malformed_network_files(text):
    with pytest.raises(NetworkFormatError):
        parse_network(text)
