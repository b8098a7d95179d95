# -*- coding: utf-8 -*-
# @Time    : 2024/5/16 09:05
# @Author  : YQ Tsui
# @File    : __init__.py
# @Purpose :

from .parser import ScenarioConfig, parse_config
from .registry import run_scenario
from .report import emit_report
from .trajectory import Trajectory
from .verify import verify_paper_examples, verify_worked_examples

__all__ = (
    "ScenarioConfig",
    "parse_config",
    "run_scenario",
    "Trajectory",
    "emit_report",
    "verify_worked_examples",
    "verify_paper_examples",
)
