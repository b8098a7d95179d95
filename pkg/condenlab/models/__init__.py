# -*- coding: utf-8 -*-
# @Time    : 2024/5/7 14:02
# @Author  : YQ Tsui
# @File    : __init__.py
# @Purpose :

from .banking import BankLedger, LoanRecord, issue_loan, lending_roi, money_multiplier, redeposit_cascade, repay_loan
from .condensation import capital_share, clothespin_sim, flow_scenario, marx_cycle, robotization_sweep, say_law_demand
from .credit import RefinanceGameConfig, bankruptcy_fraction, credit_spiral, refinance_game
from .dilemma import PayoffTable, solve_dilemma
from .distribution import (
    WealthDistribution,
    classify_equilibrium,
    exponential_family,
    ga_optimize,
    incentive_total,
)
from .macro import (
    GrowthParams,
    MonetaryState,
    debt_ratio_trajectory,
    growth_value,
    house_price,
    malthus_classify,
    print_money,
    seigniorage_transfer,
)
from .ownership import DividendRound, OwnershipNetwork, dividend_flow, dividend_tax, ultimate_ownership, voting_outcome

__all__ = (
    "BankLedger",
    "LoanRecord",
    "issue_loan",
    "repay_loan",
    "money_multiplier",
    "lending_roi",
    "redeposit_cascade",
    "RefinanceGameConfig",
    "bankruptcy_fraction",
    "refinance_game",
    "credit_spiral",
    "GrowthParams",
    "growth_value",
    "malthus_classify",
    "debt_ratio_trajectory",
    "MonetaryState",
    "print_money",
    "seigniorage_transfer",
    "house_price",
    "marx_cycle",
    "capital_share",
    "flow_scenario",
    "clothespin_sim",
    "say_law_demand",
    "robotization_sweep",
    "WealthDistribution",
    "incentive_total",
    "exponential_family",
    "ga_optimize",
    "classify_equilibrium",
    "PayoffTable",
    "solve_dilemma",
    "OwnershipNetwork",
    "DividendRound",
    "ultimate_ownership",
    "dividend_flow",
    "dividend_tax",
    "voting_outcome",
)
