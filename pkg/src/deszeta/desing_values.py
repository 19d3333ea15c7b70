"""Exact desingularized values at non-positive integer points.

Two independent routes are provided:

* :func:`zeta_des_value` sums over upper-triangular arrays ``nu`` whose
  column ``i`` sums to ``k_i``; each row contributes a Bernoulli number.
* :func:`zeta_des_value_gf` reads the coefficient off the product
  generating function built as a truncated series.
"""
from __future__ import annotations

import itertools
import threading
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from typing import Dict, Iterator, Sequence, Tuple

from .exact_core import (
    MultiIndex,
    TruncatedSeries,
    bernoulli,
    compositions,
    series_in_linear_form,
)

__all__ = [
    "UpperTriangularComposition",
    "upper_triangular_compositions",
    "zeta_des_value",
    "zeta_des_value_gf",
    "product_generating_series",
    "shuffle_rhs_terms",
    "verify_shuffle_integer",
]

UpperTriangularComposition = Dict[Tuple[int, int], int]


def upper_triangular_compositions(k: Sequence[int]) -> Iterator[UpperTriangularComposition]:
    """Arrays nu_{ij} (1 <= i <= j <= r) with nu_{1j} + ... + nu_{jj} = k_j."""
    r = len(k)
    columns = [list(compositions(k[j], j + 1)) for j in range(r)]
    for choice in itertools.product(*columns):
        yield {(i + 1, j + 1): choice[j][i] for j in range(r) for i in range(j + 1)}


@lru_cache(maxsize=None)
def _zeta_des_value(k: Tuple[int, ...]) -> Fraction:
    r = len(k)
    total = Fraction(0)
    columns = [list(compositions(k[j], j + 1)) for j in range(r)]
    fact_k = prod(factorial(x) for x in k)
    for choice in itertools.product(*columns):
        denom = 1
        row_sums = [0] * r
        for j, col in enumerate(choice):
            for i, v in enumerate(col):
                denom *= factorial(v)
                row_sums[i] += v
        term = Fraction(fact_k, denom)
        for n in row_sums:
            b = bernoulli(n + 1)
            if not b:
                term = 0
                break
            term *= b
        total += term
    return total if sum(k) % 2 == 0 else -total


def zeta_des_value(k: Sequence[int]) -> Fraction:
    """zeta_r^des(-k_1, ..., -k_r) as an exact rational."""
    return _zeta_des_value(tuple(MultiIndex(k)))


def _factor_univariate(N: int) -> list[Fraction]:
    """Taylor coefficients of ((1-T)e^T - 1)/(e^T - 1)^2 up to T^N.

    Numerator and denominator both start at T^2; that factor is removed
    before dividing, leaving sum -(n+1)/(n+2)! T^n over (sum T^n/(n+1)!)^2.
    """
    num = TruncatedSeries(1, N, {(n,): Fraction(-(n + 1), factorial(n + 2)) for n in range(N + 1)})
    half = TruncatedSeries(1, N, {(n,): Fraction(1, factorial(n + 1)) for n in range(N + 1)})
    f = num / (half * half)
    return [f.coeff((n,)) for n in range(N + 1)]


_GF_CACHE: Dict[int, TruncatedSeries] = {}
_GF_LOCK = threading.Lock()


def product_generating_series(r: int, N: int) -> TruncatedSeries:
    """Z(t_1..t_r) = prod_i F(t_i + ... + t_r) truncated at total degree N."""
    with _GF_LOCK:
        cached = _GF_CACHE.get(r)
        if cached is not None and cached.max_total_degree >= N:
            return cached
        f = _factor_univariate(N)
        Z = TruncatedSeries.constant(1, r, N)
        for i in range(r):
            linear = [0] * i + [1] * (r - i)
            Z = Z * series_in_linear_form(f, linear, N)
        _GF_CACHE[r] = Z
        return Z


def zeta_des_value_gf(k: Sequence[int]) -> Fraction:
    """zeta_r^des(-k) from the generating function, Z = sum (-t)^k/k! zeta^des(-k)."""
    k = MultiIndex(k)
    Z = product_generating_series(len(k), max(k.weight, 1))
    c = Z.coeff(tuple(k)) * prod(factorial(x) for x in k)
    return c if k.weight % 2 == 0 else -c


def shuffle_rhs_terms(l: Sequence[int]):
    """Yield (i, j, sign * prod binom) over i_b + j_b = l_b with alternating signs."""
    for i in itertools.product(*(range(x + 1) for x in l)):
        j = tuple(x - y for x, y in zip(l, i))
        coef = prod(comb(x, y) for x, y in zip(l, i))
        yield i, j, (-1) ** sum(i) * coef


def verify_shuffle_integer(k: Sequence[int], l: Sequence[int]) -> Fraction:
    """LHS - RHS of the integer-point shuffle product formula; 0 when it holds."""
    k = MultiIndex(k)
    l = MultiIndex(l)
    lhs = zeta_des_value(k) * zeta_des_value(l)
    rhs = Fraction(0)
    for i, j, coef in shuffle_rhs_terms(l):
        idx = k[:-1] + (k[-1] + sum(i),) + j
        rhs += coef * zeta_des_value(idx)
    return lhs - rhs
