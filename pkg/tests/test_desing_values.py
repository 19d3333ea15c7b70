from __future__ import annotations

from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from deszeta.desing_values import (
    product_generating_series,
    shuffle_rhs_terms,
    upper_triangular_compositions,
    verify_shuffle_integer,
    zeta_des_value,
    zeta_des_value_gf,
)
from deszeta.exact_core import bernoulli, compositions


@pytest.mark.parametrize("k, expected", [
    ((0,), Fraction(-1, 2)),
    ((1,), Fraction(-1, 6)),
    ((2,), Fraction(0)),
    ((0, 0), Fraction(1, 4)),
    ((1, 0), Fraction(1, 12)),
])
def test_values_known(k, expected):
    assert zeta_des_value(k) == expected
    assert zeta_des_value_gf(k) == expected


@pytest.mark.parametrize("k", range(21))
def test_depth_one_closed_form(k):
    assert zeta_des_value((k,)) == (-1) ** k * bernoulli(k + 1)


def test_two_formulae_agree():
    for r in range(1, 5):
        for w in range(9):
            for k in compositions(w, r):
                assert zeta_des_value(k) == zeta_des_value_gf(k), k


def test_generating_series_constant_term():
    for r in range(1, 5):
        assert product_generating_series(r, 2).coeff((0,) * r) == Fraction(-1, 2) ** r


def test_generating_series_depth_one_matches_closed_form():
    # Z_1(t) = sum_k (-t)^k/k! zeta_1^des(-k)
    Z = product_generating_series(1, 10)
    for k in range(11):
        assert Z.coeff((k,)) == (-1) ** k * zeta_des_value((k,)) / factorial(k)


@given(st.lists(st.integers(0, 3), min_size=1, max_size=3))
def test_upper_triangular_column_sums(k):
    for nu in upper_triangular_compositions(k):
        for j in range(1, len(k) + 1):
            assert sum(nu[(i, j)] for i in range(1, j + 1)) == k[j - 1]


def test_shuffle_rhs_terms_q1():
    assert sorted(shuffle_rhs_terms((2,))) == [((0,), (2,), 1), ((1,), (1,), -2), ((2,), (0,), 1)]


@pytest.mark.parametrize("k, l", [((0,), (0,)), ((1,), (0,)), ((2, 1), (0, 0)), ((1,), (3,)), ((0, 2), (1, 1))])
def test_shuffle_examples(k, l):
    assert verify_shuffle_integer(k, l) == 0


@given(st.lists(st.integers(0, 3), min_size=1, max_size=3), st.lists(st.integers(0, 3), min_size=1, max_size=2))
def test_shuffle_random(k, l):
    assert verify_shuffle_integer(k, l) == 0


def test_q1_shuffle_matches_single_variable_relation():
    # with q = 1 the integer shuffle is the single-trailing product identity at integer s
    for k in range(5):
        for l in range(5):
            lhs = zeta_des_value((k,)) * zeta_des_value((l,))
            rhs = sum((-1) ** i * Fraction(factorial(l), factorial(i) * factorial(l - i))
                      * zeta_des_value((k + i, l - i)) for i in range(l + 1))
            assert lhs == rhs
