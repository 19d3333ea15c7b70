"""Desingularized multiple zeta-functions: exact values, coefficient tables,
numeric evaluation and machine checks of their product relations."""
from __future__ import annotations

from .coeff_table import CoeffTable, expand_G
from .desing_values import zeta_des_value, zeta_des_value_gf
from .exact_core import MultiIndex, bernoulli

__version__ = "0.1.0"

__all__ = ["CoeffTable", "expand_G", "zeta_des_value", "zeta_des_value_gf", "MultiIndex", "bernoulli"]
