"""Exact arithmetic primitives: Bernoulli numbers, Pochhammer symbols and
truncated multivariate power series over the rationals.

Rationals are plain :class:`fractions.Fraction` objects, which already keep
``denominator > 0`` and lowest terms after every operation.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from math import comb, factorial
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple

from .errors import DivisionByNonUnit

__all__ = [
    "MultiIndex",
    "TruncatedSeries",
    "bernoulli",
    "bernoulli_polynomial",
    "eval_poly",
    "pochhammer_exact",
    "series_arith",
    "series_exp_linear",
    "series_in_linear_form",
    "compositions",
]

Exponent = Tuple[int, ...]

_BERNOULLI: list[Fraction] = [Fraction(1)]
_BERNOULLI_LOCK = threading.Lock()


def bernoulli(m: int) -> Fraction:
    """B_m with x/(e^x - 1) = sum B_m x^m/m!, so B_1 = -1/2.

    Values come from sum_{j=0}^{m} C(m+1, j) B_j = 0 and are memoized.
    """
    if m < 0:
        raise ValueError("bernoulli index must be non-negative")
    if m < len(_BERNOULLI):
        return _BERNOULLI[m]
    with _BERNOULLI_LOCK:
        for n in range(len(_BERNOULLI), m + 1):
            if n > 1 and n % 2 == 1:
                _BERNOULLI.append(Fraction(0))
                continue
            acc = sum((comb(n + 1, j) * _BERNOULLI[j] for j in range(n)), Fraction(0))
            _BERNOULLI.append(-acc / (n + 1))
    return _BERNOULLI[m]


def bernoulli_polynomial(n: int) -> list[Fraction]:
    """Coefficients of B_n(x) = sum_k C(n,k) B_k x^(n-k), lowest degree first."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    return [comb(n, n - d) * bernoulli(n - d) for d in range(n + 1)]


def eval_poly(coeffs: Sequence, x):
    """Horner evaluation of a lowest-degree-first coefficient list."""
    acc = 0 * x
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def pochhammer_exact(s, k: int):
    """Rising factorial (s)_k = s(s+1)...(s+k-1), with (s)_0 = 1."""
    if k < 0:
        raise ValueError("k must be non-negative")
    out = Fraction(1) if isinstance(s, (int, Fraction)) else 1
    for j in range(k):
        out = out * (s + j)
    return out


def compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """All ordered tuples of ``parts`` non-negative integers summing to ``total``."""
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in compositions(total - head, parts - 1):
            yield (head,) + rest


class MultiIndex(tuple):
    """Non-empty tuple of non-negative integers (k_1, ..., k_r)."""

    def __new__(cls, entries: Iterable[int]):
        entries = tuple(int(e) for e in entries)
        if not entries:
            raise ValueError("MultiIndex needs at least one entry")
        if any(e < 0 for e in entries):
            raise ValueError(f"MultiIndex entries must be >= 0, got {entries}")
        return super().__new__(cls, entries)

    @property
    def weight(self) -> int:
        return sum(self)


class TruncatedSeries:
    """Sparse multivariate series in ``num_vars`` variables, truncated at
    total degree ``max_total_degree``. Missing keys are zero coefficients."""

    __slots__ = ("num_vars", "max_total_degree", "_coeffs")

    def __init__(self, num_vars: int, max_total_degree: int,
                 coefficients: Mapping[Exponent, Fraction] | None = None):
        if num_vars < 1:
            raise ValueError("num_vars must be positive")
        if max_total_degree < 0:
            raise ValueError("max_total_degree must be non-negative")
        self.num_vars = num_vars
        self.max_total_degree = max_total_degree
        coeffs: Dict[Exponent, Fraction] = {}
        for exp, c in (coefficients or {}).items():
            exp = tuple(exp)
            if len(exp) != num_vars or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent {exp}")
            if sum(exp) > max_total_degree or c == 0:
                continue
            coeffs[exp] = Fraction(c)
        self._coeffs = coeffs

    @classmethod
    def constant(cls, value, num_vars: int, N: int) -> "TruncatedSeries":
        return cls(num_vars, N, {(0,) * num_vars: Fraction(value)})

    @classmethod
    def linear(cls, coeffs: Sequence, N: int, constant=0) -> "TruncatedSeries":
        r = len(coeffs)
        terms = {(0,) * r: Fraction(constant)}
        for i, c in enumerate(coeffs):
            e = [0] * r
            e[i] = 1
            terms[tuple(e)] = Fraction(c)
        return cls(r, N, terms)

    @property
    def coefficients(self) -> Dict[Exponent, Fraction]:
        return dict(self._coeffs)

    def coeff(self, exp: Sequence[int]) -> Fraction:
        return self._coeffs.get(tuple(exp), Fraction(0))

    def items(self):
        return self._coeffs.items()

    def _check_compatible(self, other: "TruncatedSeries") -> None:
        if (self.num_vars, self.max_total_degree) != (other.num_vars, other.max_total_degree):
            raise ValueError("series must share num_vars and max_total_degree")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_compatible(other)
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return TruncatedSeries(self.num_vars, self.max_total_degree, out)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.num_vars, self.max_total_degree,
                               {e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            c = Fraction(other)
            return TruncatedSeries(self.num_vars, self.max_total_degree,
                                   {e: v * c for e, v in self._coeffs.items()})
        self._check_compatible(other)
        N = self.max_total_degree
        out: Dict[Exponent, Fraction] = {}
        b_terms = [(e, sum(e), c) for e, c in other._coeffs.items()]
        for ea, ca in self._coeffs.items():
            da = sum(ea)
            for eb, db, cb in b_terms:
                if da + db > N:
                    continue
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = out.get(e, 0) + ca * cb
        return TruncatedSeries(self.num_vars, N, out)

    __rmul__ = __mul__

    def __truediv__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_compatible(other)
        zero = (0,) * self.num_vars
        b0 = other._coeffs.get(zero, Fraction(0))
        if b0 == 0:
            raise DivisionByNonUnit("divisor has zero constant term")
        N = self.max_total_degree
        rest = [(e, c) for e, c in other._coeffs.items() if e != zero]
        q: Dict[Exponent, Fraction] = {}
        # graded solve of q*b = a, lowest total degree first
        for e in sorted(_monomials(self.num_vars, N), key=sum):
            acc = self._coeffs.get(e, Fraction(0))
            for d, c in rest:
                f = tuple(x - y for x, y in zip(e, d))
                if min(f) >= 0:
                    qf = q.get(f)
                    if qf:
                        acc -= qf * c
            if acc:
                q[e] = acc / b0
        return TruncatedSeries(self.num_vars, N, q)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.num_vars == other.num_vars
                and self.max_total_degree == other.max_total_degree
                and self._coeffs == other._coeffs)

    def __repr__(self) -> str:
        terms = ", ".join(f"{e}: {c}" for e, c in sorted(self._coeffs.items()))
        return f"TruncatedSeries(r={self.num_vars}, N={self.max_total_degree}, {{{terms}}})"


def _monomials(r: int, N: int) -> Iterator[Exponent]:
    for d in range(N + 1):
        yield from compositions(d, r)


def series_arith(a: TruncatedSeries, b: TruncatedSeries, op: str) -> TruncatedSeries:
    """Exact add / mul / divide_by_unit on compatible truncated series."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "divide_by_unit":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def series_exp_linear(coeffs: Sequence, N: int) -> TruncatedSeries:
    """exp(c_1 t_1 + ... + c_r t_r) truncated at total degree N.

    Expanded term by term: the coefficient of t^e is prod_j c_j^e_j / e_j!.
    """
    r = len(coeffs)
    cs = [Fraction(c) for c in coeffs]
    out = {}
    for e in _monomials(r, N):
        v = Fraction(1)
        for c, k in zip(cs, e):
            v *= c ** k / factorial(k) if k else 1
        out[e] = v
    return TruncatedSeries(r, N, out)


def series_in_linear_form(univariate: Sequence, linear: Sequence, N: int) -> TruncatedSeries:
    """sum_n a_n L^n where L = sum_j linear[j] t_j (no constant term)."""
    r = len(linear)
    L = TruncatedSeries.linear(linear, N)
    power = TruncatedSeries.constant(1, r, N)
    out = TruncatedSeries(r, N)
    for n in range(min(N, len(univariate) - 1) + 1):
        if univariate[n]:
            out = out + power * univariate[n]
        power = power * L
    return out
