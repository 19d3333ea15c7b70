"""Arbitrary-precision evaluation of multiple zeta-functions and their desingularization."""
from __future__ import annotations

from .core import (
    EvalOptions,
    EvalResult,
    Weights,
    in_convergence_region,
    is_integer_valued,
    parse_complex,
    to_mpc,
    to_mpc_list,
)
from .desing import (
    DEFAULT_C_VALUES,
    check_singular_loci,
    limit_representation,
    zeta_des_mixed,
    zeta_des_numeric,
)
from .mellin_barnes import contour_trapezoid, mellin_barnes_kernel_check, mellin_barnes_split
from .multizeta import euler_zagier, euler_zagier_trailing, nested_zeta
from .special import bernoulli_mpf, gamma_complex, hurwitz_zeta

__all__ = [
    "EvalOptions",
    "EvalResult",
    "Weights",
    "in_convergence_region",
    "is_integer_valued",
    "parse_complex",
    "to_mpc",
    "to_mpc_list",
    "DEFAULT_C_VALUES",
    "check_singular_loci",
    "limit_representation",
    "zeta_des_mixed",
    "zeta_des_numeric",
    "contour_trapezoid",
    "mellin_barnes_kernel_check",
    "mellin_barnes_split",
    "euler_zagier",
    "euler_zagier_trailing",
    "nested_zeta",
    "bernoulli_mpf",
    "gamma_complex",
    "hurwitz_zeta",
]
