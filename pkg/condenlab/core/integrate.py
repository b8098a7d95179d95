# -*- coding: utf-8 -*-
# @Time    : 2024/5/7 09:15
# @Author  : YQ Tsui
# @File    : integrate.py
# @Purpose : Fixed-step ODE integration

import math
from typing import Callable

import numpy as np


def rk4(f: Callable[[float, float], float], y0: float, t_end: float, step: float) -> np.ndarray:
    """
    Integrates dy/dt = f(y, t) from t=0 to t_end with the classical fourth-order Runge-Kutta scheme.

    The last step is shortened so the grid ends exactly at t_end.

    :param f: Right-hand side, called as f(y, t).
    :param y0: Initial value at t=0.
    :param t_end: End time, >= 0.
    :param step: Step size, > 0.
    :return: Array of shape (m, 2) holding (t, y) rows, first row (0, y0).
    :rtype: np.ndarray
    """
    n_steps = max(1, math.ceil(t_end / step - 1e-12)) if t_end > 0 else 0
    out = np.empty((n_steps + 1, 2))
    out[0] = (0.0, y0)
    t, y = 0.0, y0
    for i in range(1, n_steps + 1):
        h = min(step, t_end - t) if i == n_steps else step
        k1 = h * f(y, t)
        k2 = h * f(y + 0.5 * k1, t + 0.5 * h)
        k3 = h * f(y + 0.5 * k2, t + 0.5 * h)
        k4 = h * f(y + k3, t + h)
        y = y + (k1 + 2.0 * (k2 + k3) + k4) / 6.0
        t = t_end if i == n_steps else t + h
        out[i] = (t, y)
    return out
