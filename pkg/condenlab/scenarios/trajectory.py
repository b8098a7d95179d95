# -*- coding: utf-8 -*-
# @Time    : 2024/5/16 10:48
# @Author  : YQ Tsui
# @File    : trajectory.py
# @Purpose : Result table of a scenario run

from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction

import numpy as np
import pandas as pd

from .. import __version__


def plain_value(value):
    # exact and numpy scalars become the float, int or bool they stand for
    if isinstance(value, (Fraction, Decimal)):
        return float(value)
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, np.ndarray):
        return [plain_value(v) for v in value.tolist()]
    if isinstance(value, (list, tuple)):
        return [plain_value(v) for v in value]
    if isinstance(value, dict):
        return {str(k): plain_value(v) for k, v in value.items()}
    return value


def plain_table(table: pd.DataFrame) -> pd.DataFrame:
    """Copy of ``table`` with Fraction and Decimal cells turned into floats."""
    out = table.copy()
    for col in out.columns:
        if out[col].dtype == object and out[col].map(lambda v: isinstance(v, (Fraction, Decimal))).any():
            out[col] = out[col].map(plain_value).astype(float)
    return out


@dataclass
class Trajectory:
    """
    Rectangular result of one scenario run plus everything needed to re-run it.

    :ivar pd.DataFrame table: One row per time step, cycle or case.
    :ivar str scenario: Scenario name.
    :ivar int seed: Seed the run used.
    :ivar dict params: Full parameter set, defaults included.
    :ivar dict summary: Scalar results that do not fit the table.
    :ivar str version: condenlab version that produced the run.
    """

    table: pd.DataFrame
    scenario: str
    seed: int = 0
    params: dict = field(default_factory=dict)
    summary: dict = field(default_factory=dict)
    version: str = __version__

    @property
    def columns(self) -> list:
        return [str(c) for c in self.table.columns]

    @property
    def empty(self) -> bool:
        return self.table.empty

    @property
    def metadata(self) -> dict:
        return {
            "scenario": self.scenario,
            "seed": self.seed,
            "params": plain_value(self.params),
            "summary": plain_value(self.summary),
            "version": self.version,
        }
