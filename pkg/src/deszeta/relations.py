"""Machine checks of the product relations between desingularized zeta objects.

Each verifier evaluates both sides of an identity by independent routes and
returns a :class:`RelationReport`. Exact instances (all arguments non-positive
integers) compare rationals and pass only with residual exactly 0; numeric
instances pass when the residual is within ``tolerance_scale`` times the
combined error estimate.
"""
from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, prod
from typing import Callable, Dict, Hashable, Iterator, List, Sequence, Tuple, Union

import mpmath
from mpmath import mp

from .desing_values import (
    shuffle_rhs_terms,
    zeta_des_value,
    zeta_des_value_gf,
)
from .errors import MissingTableEntry, UnknownSuite, UnsupportedInstance
from .exact_core import MultiIndex, bernoulli, compositions
from .numeric_eval import (
    DEFAULT_C_VALUES,
    EvalOptions,
    EvalResult,
    limit_representation,
    mellin_barnes_kernel_check,
    mellin_barnes_split,
    to_mpc,
    to_mpc_list,
    zeta_des_mixed,
    zeta_des_numeric,
)

__all__ = [
    "RelationReport",
    "TabulatedBivariateMap",
    "binomial_inversion_forward",
    "binomial_inversion_inverse",
    "verify_prop_thm41",
    "verify_main_theorem",
    "run_suite",
    "SUITES",
    "reports_to_json",
]

Value = Union[Fraction, EvalResult]
_DEFAULT = EvalOptions()
TOLERANCE_SCALE = 10
PARAM_DIGITS = 15  # instance parameters are short decimals; avoid printing binary noise


# --------------------------------------------------------------------------- reports

def _fmt_real(x, digits: int) -> str:
    if isinstance(x, Fraction):
        return str(x)
    return mpmath.nstr(mpmath.mpf(x), digits) if x != 0 else "0"


def _fmt_value(v, digits: int):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, EvalResult):
        z, err = v.value, v.err_estimate
    else:
        z, err = mpmath.mpc(v), mpmath.mpf(0)
    return {"re": mpmath.nstr(z.real, digits), "im": mpmath.nstr(z.imag, digits),
            "err": mpmath.nstr(err, 6)}


def _fmt_param(p, digits: int):
    if isinstance(p, (list, tuple)):
        return [_fmt_param(x, digits) for x in p]
    if isinstance(p, (bool, str)):
        return p
    if isinstance(p, int):
        return p
    if isinstance(p, Fraction):
        return str(p)
    if isinstance(p, float) and p.is_integer():
        return mpmath.nstr(mpmath.mpf(p), digits)
    z = mpmath.mpc(p)
    if z.imag == 0:
        return mpmath.nstr(z.real, digits)
    sign = "+" if z.imag >= 0 else "-"
    return f"{mpmath.nstr(z.real, digits)}{sign}{mpmath.nstr(abs(z.imag), digits)}i"


@dataclass
class RelationReport:
    """Outcome of one identity check.

    ``verdict`` is "pass" iff residual <= tolerance; an exact residual must be
    Fraction(0). "unsupported" marks instances outside the verifiable range.
    """

    relation: str
    params: Dict
    lhs: Value | None
    rhs: Value | None
    residual: Fraction | mpmath.mpf | None
    tolerance: Fraction | mpmath.mpf | None
    verdict: str = field(default="")

    def __post_init__(self):
        if self.verdict == "":
            if self.residual is None:
                raise ValueError("a report without residual needs an explicit verdict")
            self.verdict = "pass" if self.residual <= self.tolerance else "fail"
        if self.verdict not in ("pass", "fail", "unsupported"):
            raise ValueError(f"bad verdict {self.verdict!r}")

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_dict(self, digits: int = 30) -> dict:
        return {
            "relation": self.relation,
            "params": {k: _fmt_param(v, PARAM_DIGITS) for k, v in sorted(self.params.items())},
            "lhs": None if self.lhs is None else _fmt_value(self.lhs, digits),
            "rhs": None if self.rhs is None else _fmt_value(self.rhs, digits),
            "residual": None if self.residual is None else _fmt_real(self.residual, 6),
            "tolerance": None if self.tolerance is None else _fmt_real(self.tolerance, 6),
            "verdict": self.verdict,
        }

    def sort_key(self) -> Tuple[str, str]:
        return self.relation, json.dumps(self.to_dict()["params"], sort_keys=True)


def reports_to_json(reports: Sequence[RelationReport], digits: int = 30) -> str:
    return json.dumps([r.to_dict(digits) for r in reports], indent=2, sort_keys=False) + "\n"


def _unsupported(relation: str, params: Dict) -> RelationReport:
    return RelationReport(relation, params, None, None, None, None, "unsupported")


def _exact_report(relation: str, params: Dict, lhs: Fraction, rhs: Fraction) -> RelationReport:
    return RelationReport(relation, params, lhs, rhs, abs(lhs - rhs), Fraction(0))


def _numeric_report(relation: str, params: Dict, lhs: EvalResult, rhs: EvalResult,
                    scale: float) -> RelationReport:
    residual = abs(lhs.value - rhs.value)
    # floor: a few ulps of the larger side, so exact agreement never fails on rounding
    floor = (abs(lhs.value) + abs(rhs.value)) * mpmath.eps * 64
    tol = scale * (lhs.err_estimate + rhs.err_estimate) + floor
    return RelationReport(relation, params, lhs, rhs, residual, tol)


# --------------------------------------------------------------------------- inversion

class TabulatedBivariateMap:
    """Finite table of a map (s, l) -> value with l in N_0^q.

    ``s`` is any hashable supporting ``s - n`` for integers ``n`` (int,
    Fraction or mpmath numbers); lookups at points outside the table raise
    MissingTableEntry.
    """

    def __init__(self, q: int, values: Dict[Tuple[Hashable, Tuple[int, ...]], object] | None = None):
        if q < 1:
            raise ValueError("q must be positive")
        self.q = q
        self.values: Dict = {}
        for (s, l), v in (values or {}).items():
            self[s, l] = v

    def __setitem__(self, key, value) -> None:
        s, l = key
        l = tuple(MultiIndex(l))
        if len(l) != self.q:
            raise ValueError(f"index {l} has length {len(l)}, expected {self.q}")
        self.values[(s, l)] = value

    def __getitem__(self, key):
        s, l = key
        try:
            return self.values[(s, tuple(l))]
        except KeyError:
            raise MissingTableEntry(f"no entry at s={s}, l={tuple(l)}") from None

    def __contains__(self, key) -> bool:
        s, l = key
        return (s, tuple(l)) in self.values

    def __len__(self) -> int:
        return len(self.values)

    def keys(self):
        return self.values.keys()

    @staticmethod
    def domain(base_points: Sequence, q: int, L: int) -> Iterator[Tuple[Hashable, Tuple[int, ...]]]:
        """Points (s0 - n, l) with n + |l| <= L; this set is closed under the
        shifts used by both inversion directions."""
        for s0 in base_points:
            for n in range(L + 1):
                for w in range(L - n + 1):
                    for l in compositions(w, q):
                        yield s0 - n, l

    @classmethod
    def tabulate(cls, fn: Callable, base_points: Sequence, q: int, L: int) -> "TabulatedBivariateMap":
        t = cls(q)
        for s, l in cls.domain(base_points, q, L):
            t[s, l] = fn(s, l)
        return t


def _inversion_sum(table: TabulatedBivariateMap, s, l, signed: bool):
    l = tuple(MultiIndex(l))
    if len(l) != table.q:
        raise ValueError(f"index {l} has length {len(l)}, expected {table.q}")
    total = None
    for i in itertools.product(*(range(x + 1) for x in l)):
        j = tuple(a - b for a, b in zip(l, i))
        coef = prod(comb(a, b) for a, b in zip(l, i))
        if signed and sum(i) % 2:
            coef = -coef
        term = coef * table[s - sum(i), j]
        total = term if total is None else total + term
    return total


def binomial_inversion_forward(f: TabulatedBivariateMap, s, l):
    """g(s; -l) = sum_{i+j=l} prod_a C(l_a, i_a) f(s - |i|; -j)."""
    return _inversion_sum(f, s, l, signed=False)


def binomial_inversion_inverse(g: TabulatedBivariateMap, s, l):
    """f(s; -l) = sum_{i+j=l} prod_a (-1)^{i_a} C(l_a, i_a) g(s - |i|; -j)."""
    return _inversion_sum(g, s, l, signed=True)


def random_rational_table(rng: random.Random, q: int, L: int, base_points=(0,)) -> TabulatedBivariateMap:
    def entry(_s, _l):
        return Fraction(rng.randint(-50, 50), rng.randint(1, 12))
    return TabulatedBivariateMap.tabulate(entry, base_points, q, L)


def inversion_roundtrip(f: TabulatedBivariateMap, base_points: Sequence, L: int) -> Tuple[int, int]:
    """(entries checked, mismatches) for inverse(forward(f)) == f and forward(inverse(f)) == f."""
    g = TabulatedBivariateMap(f.q)
    h = TabulatedBivariateMap(f.q)
    dom = list(TabulatedBivariateMap.domain(base_points, f.q, L))
    for s, l in dom:
        g[s, l] = binomial_inversion_forward(f, s, l)
        h[s, l] = binomial_inversion_inverse(f, s, l)
    bad = 0
    for s, l in dom:
        if binomial_inversion_inverse(g, s, l) != f[s, l]:
            bad += 1
        if binomial_inversion_forward(h, s, l) != f[s, l]:
            bad += 1
    return 2 * len(dom), bad


# --------------------------------------------------------------------------- value helpers

def _nonpositive_integer(z) -> int | None:
    """-z as an int if z is a non-positive integer (exactly, for exact types)."""
    if isinstance(z, bool):
        return None
    if isinstance(z, int):
        return -z if z <= 0 else None
    if isinstance(z, Fraction):
        return -z.numerator if z.denominator == 1 and z <= 0 else None
    if isinstance(z, str):
        try:
            return _nonpositive_integer(Fraction(z))
        except ValueError:
            return None
    if isinstance(z, float):
        return -int(z) if z.is_integer() and z <= 0 else None
    return None


def _exact_head(s: Sequence) -> List[int] | None:
    ks = [_nonpositive_integer(z) for z in s]
    return None if any(k is None for k in ks) else ks


def _combine(terms: Sequence[Tuple[object, EvalResult]]) -> EvalResult:
    """sum c * v with errors added in absolute value."""
    total = mpmath.mpc(0)
    err = mpmath.mpf(0)
    for c, v in terms:
        c = to_mpc(c)
        total += c * v.value
        err += abs(c) * v.err_estimate
    return EvalResult(total, err)


def _times_exact(v: EvalResult, c: Fraction) -> EvalResult:
    c = to_mpc(c)
    return EvalResult(c * v.value, abs(c) * v.err_estimate)


# --------------------------------------------------------------------------- verifiers

def verify_prop_thm41(s_head: Sequence, k_tail: Sequence[int], opts: EvalOptions = _DEFAULT,
                      tolerance_scale: float = TOLERANCE_SCALE) -> RelationReport:
    """zeta_r^des(s, -k) against sum_{i+j=k} prod C(k,i) zeta_t^des(.., s_t - |i|) zeta_{r-t}^des(-j).

    Exact when every head argument is a non-positive integer; otherwise only a
    single trailing index is supported.
    """
    k = tuple(MultiIndex(k_tail))
    if not s_head or not k:
        raise ValueError("need a non-empty head and tail")
    params = {"s": list(s_head), "k": list(k)}
    exact = _exact_head(s_head)
    if exact is not None:
        lhs = zeta_des_value(exact + list(k))
        rhs = Fraction(0)
        for i in itertools.product(*(range(x + 1) for x in k)):
            j = tuple(a - b for a, b in zip(k, i))
            coef = prod(comb(a, b) for a, b in zip(k, i))
            head = exact[:-1] + [exact[-1] + sum(i)]
            rhs += coef * zeta_des_value(head) * zeta_des_value(j)
        return _exact_report("depth-split", params, lhs, rhs)
    if len(k) != 1:
        raise UnsupportedInstance("numeric check needs exactly one trailing integer argument")
    with mp.workprec(opts.precision_bits):
        head = to_mpc_list(s_head)
        lhs = zeta_des_mixed(head, k[0], opts)
        terms = []
        for i in range(k[0] + 1):
            outer = zeta_des_numeric(head[:-1] + [head[-1] - i], opts)
            terms.append((comb(k[0], i) * zeta_des_value((k[0] - i,)), outer))
        rhs = _combine(terms)
        return _numeric_report("depth-split", params, lhs, rhs, tolerance_scale)


def verify_main_theorem(s: Sequence, l: Sequence[int], opts: EvalOptions = _DEFAULT,
                        tolerance_scale: float = TOLERANCE_SCALE) -> RelationReport:
    """zeta_p^des(s) zeta_q^des(-l) against
    sum_{i+j=l} prod (-1)^{i} C(l,i) zeta_{p+q}^des(s_1..s_{p-1}, s_p - |i|, -j).

    Exact for integer heads (any p, q); numeric only for q = 1.
    """
    l = tuple(MultiIndex(l))
    if not s or not l:
        raise ValueError("need non-empty s and l")
    params = {"s": list(s), "l": list(l)}
    exact = _exact_head(s)
    if exact is not None:
        lhs = zeta_des_value(exact) * zeta_des_value(l)
        rhs = Fraction(0)
        for i, j, coef in shuffle_rhs_terms(l):
            rhs += coef * zeta_des_value(exact[:-1] + [exact[-1] + sum(i)] + list(j))
        return _exact_report("product", params, lhs, rhs)
    if len(l) != 1:
        raise UnsupportedInstance(
            "q >= 2 with non-integer s needs continuation in several trailing variables")
    with mp.workprec(opts.precision_bits):
        head = to_mpc_list(s)
        lhs = _times_exact(zeta_des_numeric(head, opts), zeta_des_value(l))
        terms = []
        for i in range(l[0] + 1):
            v = zeta_des_mixed(head[:-1] + [head[-1] - i], l[0] - i, opts)
            terms.append(((-1) ** i * comb(l[0], i), v))
        rhs = _combine(terms)
        return _numeric_report("product", params, lhs, rhs, tolerance_scale)


# --------------------------------------------------------------------------- suites

def _suite_shuffle_exact(opts, seed, scale) -> List[RelationReport]:
    out = []
    for p in (1, 2, 3):
        for q in (1, 2, 3):
            for w in range(9):
                for kl in compositions(w, p + q):
                    out.append(verify_main_theorem([-x for x in kl[:p]], kl[p:], opts))
    return out


def _mpc(re, im=0):
    return mpmath.mpc(re, im)


# heads with Re >= 4, half of them off the real axis
PRODUCT_HEADS = (
    (_mpc(4),),
    (_mpc(4, 0.3),),
    (_mpc(5),),
    (_mpc(5, 0.5),),
    (_mpc(4), _mpc(4.5)),
    (_mpc(4, 0.3), _mpc(5, 0.5)),
)
SPLIT_HEADS = ((_mpc(4),), (_mpc(4, 0.3),), (_mpc(5),))


def _suite_product_numeric(opts, seed, scale) -> List[RelationReport]:
    out = [verify_main_theorem(list(s), (l,), opts, scale) for s in PRODUCT_HEADS for l in range(4)]
    for s, l in (((_mpc(4, 0.3),), (1, 1)), ((_mpc(5), _mpc(4)), (0, 2))):
        try:
            out.append(verify_main_theorem(list(s), l, opts, scale))
        except UnsupportedInstance:
            out.append(_unsupported("product", {"s": list(s), "l": list(l)}))
    return out


def _suite_depth_split(opts, seed, scale) -> List[RelationReport]:
    out = [verify_prop_thm41(list(s), (k,), opts, scale) for s in SPLIT_HEADS for k in range(3)]
    for s in ((-1,), (0,), (-2, -1)):
        for k in ((0,), (2,), (1, 1)):
            out.append(verify_prop_thm41(list(s), k, opts, scale))
    try:
        out.append(verify_prop_thm41([_mpc(4, 0.3)], (1, 0), opts, scale))
    except UnsupportedInstance:
        out.append(_unsupported("depth-split", {"s": [_mpc(4, 0.3)], "k": [1, 0]}))
    return out


MB_KERNEL_GRID = tuple((lam, s) for lam in (0.5, 1, 2) for s in (1.5, 2, _mpc(3, 1)))
MB_SPLIT_POINTS = (((3, 3), -1.5), ((4, 2.5), -1.2))


def kernel_abscissa(s) -> mpmath.mpf:
    """Midpoint of the admissible strip -Re(s) < a < 0."""
    return -mpmath.mpc(s).real / 2


def _suite_mb_contour(opts, seed, scale) -> List[RelationReport]:
    out = []
    with mp.workprec(opts.precision_bits):
        for lam, s in MB_KERNEL_GRID:
            a = kernel_abscissa(s)
            lhs = mellin_barnes_kernel_check(lam, s, a, opts)
            exact = mpmath.power(1 + mpmath.mpf(lam), -to_mpc(s))
            rhs = EvalResult(exact, abs(exact) * mpmath.eps * 8)
            out.append(_numeric_report("mb-kernel", {"lambda": lam, "s": s, "a": a}, lhs, rhs, scale))
        for s, a in MB_SPLIT_POINTS:
            lhs = mellin_barnes_split(s, a, opts)
            rhs = zeta_des_numeric(s, opts)
            out.append(_numeric_report("mb-split", {"s": list(s), "a": a}, lhs, rhs, scale))
    return out


LIMIT_POINTS = ((3,), (4, 4), (_mpc(4, 0.3), 3))


def _suite_limit_rep(opts, seed, scale) -> List[RelationReport]:
    out = []
    for s in LIMIT_POINTS:
        lhs = limit_representation(s, DEFAULT_C_VALUES, opts)
        rhs = zeta_des_numeric(s, opts)
        out.append(_numeric_report("limit-rep", {"s": list(s), "c": list(DEFAULT_C_VALUES)},
                                   lhs, rhs, scale))
    return out


def _suite_inversion(opts, seed, scale) -> List[RelationReport]:
    rng = random.Random(seed)
    out = []
    for n in range(100):
        q = rng.randint(1, 3)
        L = rng.randint(0, 5)
        f = random_rational_table(rng, q, L, base_points=(Fraction(rng.randint(-20, 20), rng.randint(1, 5)),))
        base = next(iter(f.keys()))[0]
        checked, bad = inversion_roundtrip(f, (base,), L)
        out.append(RelationReport("inversion", {"table": n, "q": q, "weight": L, "entries": checked},
                                  Fraction(checked - bad), Fraction(checked), Fraction(bad), Fraction(0)))
    # tabulated g from the depth-splitting identity, inverted to the product form
    for head, L, q in (((-1,), 4, 1), ((0, -2), 3, 2), ((-1,), 3, 3)):
        prefix = [-x for x in head[:-1]]
        g = TabulatedBivariateMap.tabulate(
            lambda s, l: zeta_des_value(prefix + [-s] + list(l)), (head[-1],), q, L)
        bad = 0
        dom = list(TabulatedBivariateMap.domain((head[-1],), q, L))
        for s, l in dom:
            expected = zeta_des_value(prefix + [-s]) * zeta_des_value(l)
            if binomial_inversion_inverse(g, s, l) != expected:
                bad += 1
        out.append(RelationReport("inversion-values", {"s": list(head), "q": q, "weight": L},
                                  Fraction(len(dom) - bad), Fraction(len(dom)), Fraction(bad), Fraction(0)))
    return out


def _suite_gf_cross(opts, seed, scale) -> List[RelationReport]:
    out = []
    for r in range(1, 5):
        for w in range(9):
            for k in compositions(w, r):
                out.append(_exact_report("gf-cross", {"k": list(k)},
                                         zeta_des_value(k), zeta_des_value_gf(k)))
    for k in range(21):
        out.append(_exact_report("depth1-bernoulli", {"k": [k]},
                                 zeta_des_value((k,)), (-1) ** k * bernoulli(k + 1)))
    return out


SUITES: Dict[str, Callable] = {
    "shuffle-exact": _suite_shuffle_exact,
    "prop22": _suite_product_numeric,
    "thm41": _suite_depth_split,
    "mb-contour": _suite_mb_contour,
    "limit-rep": _suite_limit_rep,
    "inversion": _suite_inversion,
    "gf-cross": _suite_gf_cross,
}


def run_suite(name: str, opts: EvalOptions = _DEFAULT, seed: int = 42,
              tolerance_scale: float = TOLERANCE_SCALE) -> List[RelationReport]:
    """Run a named instance grid; reports come back in a deterministic order."""
    try:
        suite = SUITES[name]
    except KeyError:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {sorted(SUITES)}") from None
    reports = suite(opts, seed, tolerance_scale)
    return sorted(reports, key=RelationReport.sort_key)
