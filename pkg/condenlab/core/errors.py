# -*- coding: utf-8 -*-
# @Time    : 2024/5/6 10:41
# @Author  : YQ Tsui
# @File    : errors.py
# @Purpose : Exception hierarchy shared by models and the scenario runner


class CondenlabError(Exception):
    """Base class of every error raised by condenlab."""


class DomainError(CondenlabError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class ReserveBreach(CondenlabError):
    """Issuing the loan would push credit above base money / reserve ratio."""


class LedgerError(CondenlabError, KeyError):
    """Unknown loan id."""


class RepaymentError(DomainError):
    """Repayment exceeds the outstanding balance."""


class InfeasibleCircuit(DomainError):
    """Spending on means of production and labor power exceeds the money advanced."""


class InvalidDistribution(DomainError):
    """A wealth vector violates normalization or the floor."""


class UnsortedDistribution(DomainError):
    """A wealth vector is not non-decreasing."""


class IrresolvableNetwork(CondenlabError):
    """Cross-holding matrix with spectral radius >= 1."""


class NetworkFormatError(CondenlabError, ValueError):
    """Malformed ownership network file."""


class ConfigError(CondenlabError):
    """
    A scenario config failed validation.

    :ivar list[str] violations: Every problem found, in document order.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class ScenarioError(CondenlabError):
    """A model error raised while running a scenario, tagged with the scenario name."""

    def __init__(self, scenario: str, message: str):
        self.scenario = scenario
        super().__init__(f"scenario '{scenario}': {message}")


class ReportError(CondenlabError, OSError):
    """Output could not be written."""
