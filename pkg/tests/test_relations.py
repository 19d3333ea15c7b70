from __future__ import annotations

import json
import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from deszeta.errors import MissingTableEntry, UnknownSuite, UnsupportedInstance
from deszeta.numeric_eval import EvalResult
from deszeta.relations import (
    RelationReport,
    TabulatedBivariateMap,
    binomial_inversion_forward,
    binomial_inversion_inverse,
    inversion_roundtrip,
    random_rational_table,
    reports_to_json,
    run_suite,
    verify_main_theorem,
    verify_prop_thm41,
)

FIELDS = ["relation", "params", "lhs", "rhs", "residual", "tolerance", "verdict"]


def test_report_verdicts_and_serialization():
    exact = RelationReport("x", {"k": [1]}, Fraction(1, 12), Fraction(1, 12), Fraction(0), Fraction(0))
    assert exact.verdict == "pass"
    d = exact.to_dict()
    assert list(d) == FIELDS
    assert d["lhs"] == "1/12" and d["residual"] == "0"
    bad = RelationReport("x", {}, Fraction(1), Fraction(2), Fraction(1), Fraction(0))
    assert bad.verdict == "fail"
    v = EvalResult(mpmath.mpc(1, -2), mpmath.mpf("1e-20"))
    num = RelationReport("y", {"s": [mpmath.mpc(4, 0.3)]}, v, v, mpmath.mpf(0), mpmath.mpf("1e-19"))
    d = num.to_dict(10)
    assert d["lhs"] == {"re": "1.0", "im": "-2.0", "err": "1.0e-20"}
    assert d["params"] == {"s": ["4.0+0.3i"]}
    with pytest.raises(ValueError):
        RelationReport("z", {}, None, None, None, None, "maybe")


def _table_q1():
    f = TabulatedBivariateMap(1)
    for s in range(-3, 1):
        for l in range(3):
            f[s, (l,)] = Fraction(s * 10 + l + 1)
    return f


def test_inversion_small_cases():
    f = _table_q1()
    assert binomial_inversion_forward(f, 0, (0,)) == f[0, (0,)]
    assert binomial_inversion_forward(f, 0, (1,)) == f[0, (1,)] + f[-1, (0,)]
    assert binomial_inversion_inverse(f, 0, (1,)) == f[0, (1,)] - f[-1, (0,)]
    assert binomial_inversion_inverse(f, 0, (0,)) == f[0, (0,)]


def test_inversion_missing_entry():
    f = _table_q1()
    with pytest.raises(MissingTableEntry):
        binomial_inversion_forward(f, -3, (1,))
    with pytest.raises(ValueError):
        binomial_inversion_forward(f, 0, (1, 0))


@given(st.integers(0, 10 ** 6), st.integers(1, 3), st.integers(0, 5))
def test_inversion_roundtrip(seed, q, L):
    rng = random.Random(seed)
    f = random_rational_table(rng, q, L, base_points=(Fraction(rng.randint(-9, 9), 7),))
    base = next(iter(f.keys()))[0]
    checked, bad = inversion_roundtrip(f, (base,), L)
    assert bad == 0 and checked == 2 * len(f)


def test_inversion_with_complex_points():
    # numeric values keyed by complex sample points
    rng = random.Random(3)
    base = mpmath.mpc(4, 0.3)
    f = TabulatedBivariateMap.tabulate(lambda s, l: mpmath.mpc(rng.random(), rng.random()), (base,), 2, 3)
    g = TabulatedBivariateMap.tabulate(lambda s, l: binomial_inversion_forward(f, s, l), (base,), 2, 3)
    for s, l in f.keys():
        assert abs(binomial_inversion_inverse(g, s, l) - f[s, l]) < 1e-30


def test_depth_split_examples():
    r = verify_prop_thm41([4], [0])
    assert r.passed and mpmath.nstr(r.lhs.value.real, 9) == "1.62348485"
    r = verify_prop_thm41([-1], [0])
    assert r.passed and r.residual == 0 and r.lhs == Fraction(1, 12)
    r = verify_prop_thm41([4], [2])
    assert r.passed and r.residual < 1e-6
    r = verify_prop_thm41([-2, -1], [1, 2])
    assert r.passed and r.residual == 0
    with pytest.raises(UnsupportedInstance):
        verify_prop_thm41([mpmath.mpc(4, 0.3)], [1, 0])


def test_main_theorem_examples():
    r = verify_main_theorem([0], [0])
    assert r.passed and r.residual == 0 and r.lhs == Fraction(1, 4)
    r = verify_main_theorem([4], [1])
    assert r.passed and r.residual < 1e-6
    r = verify_main_theorem([-1, -2], [1, 0])
    assert r.passed and r.residual == 0
    with pytest.raises(UnsupportedInstance):
        verify_main_theorem([4], [1, 1])


@given(st.lists(st.integers(0, 3), min_size=1, max_size=3), st.lists(st.integers(0, 2), min_size=1, max_size=3))
def test_main_theorem_exact_random(k, l):
    r = verify_main_theorem([-x for x in k], l)
    assert r.residual == 0 and r.verdict == "pass"


def test_string_integer_heads_take_exact_path():
    r = verify_main_theorem(["-2"], [1])
    assert isinstance(r.residual, Fraction) and r.passed


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        run_suite("unknown")


def test_inversion_suite_deterministic():
    a = reports_to_json(run_suite("inversion", seed=42))
    b = reports_to_json(run_suite("inversion", seed=42))
    c = reports_to_json(run_suite("inversion", seed=7))
    assert a == b and a != c
    reports = run_suite("inversion", seed=42)
    assert all(r.passed for r in reports)
    assert sum(r.relation == "inversion" for r in reports) == 100
    # value tables of the depth-splitting identity invert to the product form
    assert any(r.relation == "inversion-values" for r in reports)


def test_suite_json_shape():
    payload = json.loads(reports_to_json(run_suite("thm41")))
    assert all(list(item) == FIELDS for item in payload)
    verdicts = {item["verdict"] for item in payload}
    assert verdicts == {"pass", "unsupported"}
