# -*- coding: utf-8 -*-
# @Time    : 2024/5/6 10:12
# @Author  : YQ Tsui
# @File    : __init__.py
# @Purpose : Deterministic models of credit, growth and wealth condensation

__version__ = "0.1.0"
