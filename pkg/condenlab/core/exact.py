# -*- coding: utf-8 -*-
# @Time    : 2024/5/6 11:02
# @Author  : YQ Tsui
# @File    : exact.py
# @Purpose : Conversions into exact decimal and rational arithmetic

from decimal import Decimal
from fractions import Fraction

from .typedefs import Number


def as_decimal(value: Number) -> Decimal:
    """
    Converts a number to Decimal, taking floats at their shortest decimal representation.

    :param value: The number to convert. 0.03 becomes Decimal("0.03"), not the binary expansion.
    :type value: Number
    :rtype: Decimal
    """
    if isinstance(value, Decimal):
        return value
    if isinstance(value, Fraction):
        return Decimal(value.numerator) / Decimal(value.denominator)
    if isinstance(value, float):
        return Decimal(repr(value))
    return Decimal(value)


def as_fraction(value: Number) -> Fraction:
    """
    Converts a number to Fraction, taking floats at their shortest decimal representation.

    :param value: The number to convert. 0.03 becomes Fraction(3, 100).
    :type value: Number
    :rtype: Fraction
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        return Fraction(repr(value))
    return Fraction(value)
