# -*- coding: utf-8 -*-
# @Time    : 2024/5/16 09:12
# @Author  : YQ Tsui
# @File    : schemas.py
# @Purpose : Parameter tables and example configs of the registered scenarios

# Parameter spec keys: type (int, float, bool, str, float_list), default, min / max (inclusive),
# gt / lt (exclusive), choices, and config_default naming a CONFIG key that supplies the default.

SCENARIO_SCHEMAS = {
    "bankruptcy_fraction": {
        "description": "Share of lent money that can never be repaid, swept from 0 to interest_pct",
        "params": {
            "interest_pct": {"type": "float", "default": 100.0, "min": 0.0},
            "points": {"type": "int", "default": 11, "min": 2, "max": 10001},
        },
        "columns": ["interest_pct", "defaulted_pct", "repayable_pct"],
    },
    "refinance_game": {
        "description": "Monte-Carlo borrowers repaying interest out of a closed money supply",
        "params": {
            "n_borrowers": {"type": "int", "default": 1000, "min": 1, "max": 10000000},
            "interest_pct": {"type": "float", "default": 100.0, "min": 0.0},
            "rounds": {"type": "int", "default": 1, "min": 1, "max": 100000},
            "refinance": {"type": "bool", "default": False},
            "money_growth_pct": {"type": "float", "default": 0.0, "min": 0.0},
            "money_supply": {"type": "float", "default": 1000.0, "gt": 0.0},
            "trade_intensity": {"type": "float", "default": 0.5, "min": 0.0, "max": 1.0},
        },
        "columns": ["round", "money_supply", "debt_stock", "lent", "repaid", "settled", "defaults"],
    },
    "credit_spiral": {
        "description": "Rate feeding back on itself above a reference rate",
        "params": {
            "r0": {"type": "float", "default": 0.06, "min": 0.0},
            "r_ref": {"type": "float", "default": 0.05, "min": 0.0},
            "sensitivity": {"type": "float", "default": 10.0, "min": 0.0},
            "rounds": {"type": "int", "default": 50, "min": 0, "max": 100000},
        },
        "columns": ["round", "rate"],
    },
    "redeposit_cascade": {
        "description": "Deposits created when every bank lends on all but its reserve",
        "params": {
            "base": {"type": "float", "default": 1.0, "gt": 0.0},
            "reserve_ratio": {"type": "float", "default": 0.1, "gt": 0.0, "max": 1.0},
            "n_banks": {"type": "int", "default": 200, "min": 0, "max": 100000},
        },
        "columns": ["bank", "deposit", "cumulative"],
    },
    "state_financing": {
        "description": "A bank lends the state money it does not have and books the interest",
        "params": {
            "base_money": {"type": "float", "default": 100.0, "min": 0.0},
            "reserve_ratio": {"type": "float", "default": 0.1, "gt": 0.0, "max": 1.0},
            "amount": {"type": "float", "default": 1000.0, "gt": 0.0},
            "interest_rate": {"type": "float", "default": 0.03, "min": 0.0},
        },
        "columns": ["step", "action", "loan_outstanding", "outstanding_credit", "capacity", "equity", "roi"],
    },
    "growth": {
        "description": "E(t) = alpha dE/dt, closed form against RK4",
        "params": {
            "E0": {"type": "float", "default": 1.0, "gt": 0.0},
            "alpha": {"type": "float", "default": 1.0, "gt": 0.0},
            "t_max": {"type": "float", "default": 5.0, "min": 0.0},
            "points": {"type": "int", "default": 26, "min": 2, "max": 100001},
        },
        "columns": ["t", "closed", "numeric"],
    },
    "debt_ratio": {
        "description": "Debt-to-GDP under a permanent deficit",
        "params": {
            "deficit_pct": {"type": "float", "default": 3.0},
            "gdp_growth_pct": {"type": "float", "default": 3.0, "gt": -100.0},
            "years": {"type": "int", "default": 100, "min": 1, "max": 100000},
            "initial_ratio": {"type": "float", "default": 1.0, "min": 0.0},
        },
        "columns": ["year", "debt_ratio"],
    },
    "print_money": {
        "description": "Multiplying the money supply when everybody prints",
        "params": {
            "factor": {"type": "float", "default": 10.0, "min": 1.0},
            "money_supply": {"type": "float", "default": 1.0, "gt": 0.0},
        },
        "columns": [
            "factor",
            "money_supply",
            "price_index",
            "fx_value",
            "real_balances",
            "external_buying_power",
            "inflation_pct",
            "devaluation_pct",
        ],
    },
    "seigniorage": {
        "description": "Real gains of lenders and non-lenders when interest is paid with printed money",
        "params": {
            "interest_pct": {"type": "float", "default": 10.0, "min": 0.0},
            "points": {"type": "int", "default": 11, "min": 2, "max": 10001},
        },
        "columns": ["lender_fraction", "lender_gain_pct", "nonlender_gain_pct", "weighted_sum"],
    },
    "house_price": {
        "description": "House price when buyers spend what they can afford on interest",
        "params": {
            "affordable_payment": {"type": "float", "default": 3000.0, "gt": 0.0},
            "mortgage_rate": {"type": "float", "default": 0.03, "gt": 0.0},
            "refund_fraction": {"type": "float", "default": 0.5, "min": 0.0, "lt": 1.0},
            "points": {"type": "int", "default": 3, "min": 2, "max": 1001},
        },
        "columns": ["refund_fraction", "price", "net_cost"],
    },
    "capital_share": {
        "description": "Capital's share of production when capital doubles every cycle",
        "params": {
            "cycles": {"type": "int", "default": 30, "min": 1, "max": 1000},
        },
        "columns": ["cycle", "capital_share", "human_share"],
    },
    "flow_scenario": {
        "description": "Humans living on loans, or capital reinvesting its share",
        "params": {
            "mode": {"type": "str", "default": "loan", "choices": ["loan", "reinvest"]},
            "cycles": {"type": "int", "default": 10, "min": 0, "max": 1000},
        },
        "columns": [
            "cycle",
            "human_prod_share",
            "capital_prod_share",
            "human_cons_share",
            "capital_cons_share",
            "human_debt",
            "output",
        ],
    },
    "clothespin": {
        "description": "Two clothespin makers, one of them buying machines",
        "params": {
            "path": {"type": "str", "default": "lend_rights", "choices": ["lend_rights", "build_machines"]},
            "years": {"type": "int", "default": 5, "min": 0, "max": 1000},
            "loan_rate": {"type": "float", "default": 0.1, "min": 0.0},
        },
        "columns": [
            "year",
            "my_manual_units",
            "neighbor_units",
            "my_machines",
            "price",
            "my_rights",
            "neighbor_rights",
            "neighbor_debt",
        ],
    },
    "robotization": {
        "description": "Demand and margins as firms replace labor by robots",
        "params": {
            "wage_bill": {"type": "float", "default": 1.0, "gt": 0.0},
            "n_firms": {"type": "int", "default": 10, "min": 1, "max": 100000},
            "n_robotized": {"type": "int", "default": -1, "min": -1, "max": 100000},
            "robot_cost_ratio": {"type": "float", "default": 0.5, "min": 0.0},
            "points": {"type": "int", "default": 11, "min": 2, "max": 10001},
        },
        "columns": ["lp_share", "demand", "robotized_margin", "other_margin", "collapse"],
    },
    "marx_circuit": {
        "description": "M - C - P - C' - M' with M' reinvested",
        "params": {
            "M0": {"type": "float", "default": 100.0, "gt": 0.0},
            "mop_fraction": {"type": "float", "default": 0.5, "min": 0.0, "max": 1.0},
            "lp_fraction": {"type": "float", "default": 0.4, "min": 0.0, "max": 1.0},
            "markup": {"type": "float", "default": 0.1, "gt": -1.0},
            "cycles": {"type": "int", "default": 10, "min": 1, "max": 1000},
        },
        "columns": ["cycle", "M", "mop_spend", "lp_spend", "M_prime", "surplus", "decision"],
    },
    "labor_squeeze": {
        "description": "Capital compounding at its own rate while output grows at another",
        "params": {
            "production_growth_pct": {"type": "float", "default": 2.0, "gt": -100.0},
            "capital_growth_pct": {"type": "float", "default": 5.0, "min": 0.0},
            "years": {"type": "int", "default": 50, "min": 0, "max": 10000},
            "capital_share0": {"type": "float", "default": 0.5, "min": 0.0, "max": 1.0},
        },
        "columns": ["year", "output", "capital", "labor", "labor_change"],
    },
    "exponential_family": {
        "description": "Exponentially rising wealth curve with offset and its incentives",
        "params": {
            "w0": {"type": "float", "default": 1 / 300, "gt": 0.0},
            "b": {"type": "float", "default": 5.0},
            "n": {"type": "int", "default": 30, "min": 1, "max": 1000000},
        },
        "columns": ["person", "x", "weight", "incentive"],
    },
    "ga_optimize": {
        "description": "Evolutionary search for the distribution with the largest work incentive",
        "params": {
            "n": {"type": "int", "default": 30, "min": 2, "max": 10000},
            "w0": {"type": "float", "default": 1 / 300, "gt": 0.0},
            "init": {"type": "str", "default": "random", "choices": ["uniform", "linear", "random", "exponential"]},
            "b": {"type": "float", "default": 5.0},
            "steps": {"type": "int", "config_default": "ga_steps", "min": 0, "max": 100000000},
            "mutation_scale": {"type": "float", "config_default": "ga_mutation_scale", "gt": 0.0},
            "drain_rate": {"type": "float", "default": 0.0, "min": 0.0, "max": 1.0},
            "restarts": {"type": "int", "default": 1, "min": 1, "max": 1000},
            "record_every": {"type": "int", "default": 100, "min": 1},
        },
        "columns": ["step", "objective"],
    },
    "dilemma": {
        "description": "Two suspects choosing between confessing and keeping silent",
        "params": {
            "both_confess_years": {"type": "float", "default": 20.0, "min": 0.0},
            "sucker_years": {"type": "float", "default": 50.0, "min": 0.0},
            "bonus": {"type": "float", "default": 10.0},
        },
        "columns": ["a_strategy", "b_strategy", "payoff_a", "payoff_b", "nash", "pareto"],
    },
    "ownership": {
        "description": "Outsider's ultimate stake in cross-held banks, series term by term",
        "params": {
            "network": {"type": "str", "default": ""},
            "direct_stake": {"type": "float", "default": 0.02, "min": 0.0, "max": 1.0},
            "tolerance": {"type": "float", "config_default": "series_tolerance", "gt": 0.0},
            "max_terms": {"type": "int", "config_default": "series_max_terms", "min": 1},
        },
        # one stake column per bank after "term"
        "columns": None,
    },
    "dividend_round": {
        "description": "Dividends passed around cross-held banks, and a tax on them",
        "params": {
            "network": {"type": "str", "default": ""},
            "direct_stake": {"type": "float", "default": 0.02, "min": 0.0, "max": 1.0},
            "ops_profit": {"type": "float_list", "default": [2.0, 2.0, 2.0]},
            "declared": {"type": "float_list", "default": [100.0, 100.0, 100.0], "min": 0.0},
            "tax_rate": {"type": "float", "default": 0.25, "min": 0.0, "max": 1.0},
        },
        "columns": ["bank", "ops_profit", "dividend_income", "total_income", "payout", "net", "tax", "insolvent"],
    },
    "voting": {
        "description": "Stockholder votes when the banks vote for each other",
        "params": {
            "network": {"type": "str", "default": ""},
            "direct_stake": {"type": "float", "default": 0.02, "min": 0.0, "max": 1.0},
            "outsider_supports": {"type": "bool", "default": False},
            "banks_support": {"type": "bool", "default": True},
        },
        "columns": ["bank", "support", "oppose", "abstain", "passed"],
    },
}

EXAMPLE_CONFIGS = {
    "bankruptcy_fraction": {"scenario": "bankruptcy_fraction", "params": {"interest_pct": 100}},
    "refinance_game": {"scenario": "refinance_game", "params": {"n_borrowers": 1000, "interest_pct": 100}, "seed": 7},
    "credit_spiral": {"scenario": "credit_spiral", "params": {"r0": 0.06, "r_ref": 0.05, "rounds": 30}},
    "redeposit_cascade": {"scenario": "redeposit_cascade", "params": {"reserve_ratio": 0.1, "n_banks": 200}},
    "state_financing": {"scenario": "state_financing", "params": {"amount": 1000, "interest_rate": 0.03}},
    "growth": {"scenario": "growth", "params": {"alpha": 2.0, "t_max": 10}},
    "debt_ratio": {"scenario": "debt_ratio", "params": {"deficit_pct": 3, "gdp_growth_pct": 3}},
    "print_money": {"scenario": "print_money", "params": {"factor": 10}},
    "seigniorage": {"scenario": "seigniorage", "params": {"interest_pct": 10}},
    "house_price": {"scenario": "house_price", "params": {"affordable_payment": 3000, "mortgage_rate": 0.03}},
    "capital_share": {"scenario": "capital_share", "params": {"cycles": 30}, "formats": ["csv", "svg"]},
    "flow_scenario": {"scenario": "flow_scenario", "params": {"mode": "reinvest", "cycles": 10}},
    "clothespin": {"scenario": "clothespin", "params": {"path": "build_machines", "years": 5}},
    "robotization": {"scenario": "robotization", "params": {"n_firms": 10, "n_robotized": 1}},
    "marx_circuit": {"scenario": "marx_circuit", "params": {"M0": 100, "markup": 0.1, "cycles": 10}},
    "labor_squeeze": {"scenario": "labor_squeeze", "params": {"production_growth_pct": 2, "capital_growth_pct": 5}},
    "exponential_family": {"scenario": "exponential_family", "params": {"w0": 1 / 300, "b": 5, "n": 30}},
    "ga_optimize": {
        "scenario": "ga_optimize",
        "params": {"n": 30, "init": "uniform", "steps": 2000, "record_every": 100},
        "seed": 1,
    },
    "dilemma": {"scenario": "dilemma", "params": {}},
    "ownership": {"scenario": "ownership", "params": {"direct_stake": 0.02}},
    "dividend_round": {"scenario": "dividend_round", "params": {"declared": [100, 100, 100], "tax_rate": 0.25}},
    "voting": {"scenario": "voting", "params": {"outsider_supports": False, "banks_support": True}},
}
