# -*- coding: utf-8 -*-
# @Time    : 2024/5/6 10:30
# @Author  : YQ Tsui
# @File    : typedefs.py
# @Purpose : Numeric input type shared by the exact-arithmetic models

from decimal import Decimal
from fractions import Fraction
from typing import Union

Number = Union[int, float, str, Decimal, Fraction]
