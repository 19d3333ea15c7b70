from __future__ import annotations

from fractions import Fraction

import mpmath
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import mpf_of
from deszeta.errors import PoleAtOne, PoleOfGamma
from deszeta.exact_core import bernoulli_polynomial, eval_poly
from deszeta.numeric_eval import EvalOptions, bernoulli_mpf, gamma_complex, hurwitz_zeta

mp = mpmath.mp


@pytest.mark.parametrize("z, expected", [
    (1, mpmath.mpf(1)),
    (5, mpmath.mpf(24)),
    ("0.5", None),
])
def test_gamma_examples(z, expected):
    with mp.workprec(128):
        expected = mpmath.sqrt(mpmath.pi) if expected is None else expected
        r = gamma_complex(z)
        assert abs(r.value - expected) < mpmath.mpf(10) ** -35


@pytest.mark.parametrize("z", [0, -1, -7, "-3+0i"])
def test_gamma_poles(z):
    with pytest.raises(PoleOfGamma):
        gamma_complex(z)


@pytest.mark.parametrize("s, a, expected", [
    (2, 1, None),
    (0, 3, mpmath.mpf(-5) / 2),
    (3, 1, None),
])
def test_hurwitz_examples(s, a, expected):
    with mp.workprec(128):
        expected = mpmath.zeta(s) if expected is None else expected
        r = hurwitz_zeta(s, a)
        assert abs(r.value - expected) < mpmath.mpf(10) ** -30
        assert r.err_estimate < mpmath.mpf(10) ** -30


@pytest.mark.parametrize("a", [1, 2, Fraction(11, 2)])
@pytest.mark.parametrize("n", range(9))
def test_hurwitz_negative_integers(n, a):
    exact = -eval_poly(bernoulli_polynomial(n + 1), Fraction(a)) / (n + 1)
    with mp.workprec(128):
        v = hurwitz_zeta(-n, mpf_of(Fraction(a))).value
        assert abs(v - mpf_of(exact)) < 1e-12


def test_hurwitz_pole():
    with pytest.raises(PoleAtOne):
        hurwitz_zeta(1 + 1e-8)


@given(st.floats(-6, 8), st.floats(-10, 10), st.sampled_from([1, 1.5, 3, 7.25]))
def test_hurwitz_matches_mpmath(re, im, a):
    s = mpmath.mpc(re, im)
    # mpmath.zeta(s, a) misbehaves for |s| < ~1e-6; that neighbourhood is covered below
    assume(abs(s - 1) > 1e-3 and abs(s) > 1e-6)
    with mp.workprec(128):
        r = hurwitz_zeta(s, a)
    # mpmath loses accuracy for |s| tiny at 128 bits; give the oracle headroom
    with mp.workprec(300):
        ref = mpmath.zeta(s, a)
        assert abs(r.value - ref) <= 1e-25 * max(1, abs(ref))


@pytest.mark.parametrize("a", [1, 1.5, 4])
def test_hurwitz_near_zero(a):
    # zeta_H(s, a) = 1/2 - a + O(s)
    for s in (0, mpmath.mpf("-1e-40"), mpmath.mpf("1e-87")):
        assert abs(hurwitz_zeta(s, a).value - (mpmath.mpf(1) / 2 - a)) < 1e-30


def test_bernoulli_mpf_scaled():
    with mp.workprec(100):
        assert bernoulli_mpf(2) == mpmath.mpf(1) / 12
        assert abs(bernoulli_mpf(12) - mpmath.bernoulli(12) / mpmath.factorial(12)) < 1e-40


def test_options_validation():
    with pytest.raises(ValueError):
        EvalOptions(precision_bits=32)
    with pytest.raises(ValueError):
        EvalOptions(contour_step=0)
    with pytest.raises(ValueError):
        EvalOptions(epsilon_perturbation=(1e-4, 1e-4))
    o = EvalOptions().with_(series_cutoff=80)
    assert o.series_cutoff == 80 and o.digits == 38
