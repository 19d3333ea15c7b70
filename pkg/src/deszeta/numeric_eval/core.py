"""Shared numeric types: options, results, weights and argument coercion."""
from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

import mpmath
from mpmath import mp

__all__ = [
    "EvalOptions",
    "EvalResult",
    "Weights",
    "parse_complex",
    "to_mpc",
    "to_mpc_list",
    "is_integer_valued",
    "in_convergence_region",
]


@dataclass(frozen=True)
class EvalOptions:
    """Tuning knobs for every numeric evaluator.

    ``series_cutoff`` is the point beyond which nested sums are replaced by
    their asymptotic expansion; ``expansion_order`` is the number of terms
    kept in those expansions. ``euler_maclaurin_order`` is the starting
    number of Bernoulli corrections in the Hurwitz evaluator.
    """

    precision_bits: int = 128
    series_cutoff: int = 50
    euler_maclaurin_order: int = 12
    expansion_order: int = 40
    contour_truncation: float = 40.0
    contour_step: float = 0.05
    epsilon_perturbation: Tuple[float, float] = (1e-4, 5e-5)
    singular_tol: float = 1e-9
    pole_tol: float = 1e-6
    region_margin: float = 0.1
    quad_tol: float = 1e-12
    allow_trailing: bool = True

    def __post_init__(self):
        positive = {
            "precision_bits": self.precision_bits,
            "series_cutoff": self.series_cutoff,
            "euler_maclaurin_order": self.euler_maclaurin_order,
            "expansion_order": self.expansion_order,
            "contour_truncation": self.contour_truncation,
            "contour_step": self.contour_step,
            "singular_tol": self.singular_tol,
            "pole_tol": self.pole_tol,
            "quad_tol": self.quad_tol,
        }
        for name, v in positive.items():
            if not v > 0:
                raise ValueError(f"{name} must be positive, got {v}")
        if self.precision_bits < 53:
            raise ValueError("precision_bits must be at least 53")
        e1, e2 = self.epsilon_perturbation
        if e1 == 0 or e2 == 0 or e1 == e2:
            raise ValueError("epsilon_perturbation needs two distinct nonzero values")

    def with_(self, **kw) -> "EvalOptions":
        return replace(self, **kw)

    @property
    def digits(self) -> int:
        return max(15, int(self.precision_bits * 0.30103))


@dataclass(frozen=True)
class EvalResult:
    """A complex value with a heuristic non-negative error estimate."""

    value: mpmath.mpc
    err_estimate: mpmath.mpf

    def __post_init__(self):
        if not mpmath.isfinite(self.value):
            raise ArithmeticError(f"non-finite value {self.value}")
        if not (mpmath.isfinite(self.err_estimate) and self.err_estimate >= 0):
            raise ArithmeticError(f"bad error estimate {self.err_estimate}")

    @property
    def err(self) -> mpmath.mpf:
        return self.err_estimate

    def __complex__(self) -> complex:
        return complex(self.value)

    def __repr__(self) -> str:
        return f"EvalResult({mpmath.nstr(self.value, 20)} ± {mpmath.nstr(self.err_estimate, 3)})"


@dataclass(frozen=True)
class Weights:
    """Positive real weights gamma_1..gamma_r of the generalized sum."""

    gamma: Tuple = field(default_factory=tuple)

    def __post_init__(self):
        g = tuple(self.gamma)
        for x in g:
            if isinstance(x, complex) or isinstance(x, mpmath.mpc):
                raise TypeError("weights must be real")
            if not x > 0:
                raise ValueError(f"weights must be positive, got {x}")
        object.__setattr__(self, "gamma", g)

    @classmethod
    def ones(cls, r: int) -> "Weights":
        return cls((1,) * r)

    def __len__(self) -> int:
        return len(self.gamma)


_REAL = r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_COMPLEX = re.compile(
    rf"^(?:(?P<re>{_REAL})(?P<im>[+-](?:\d+\.?\d*|\.\d+)?(?:[eE][+-]?\d+)?)[ij]"
    rf"|(?P<re_only>{_REAL})|(?P<im_only>[+-]?(?:\d+\.?\d*|\.\d+)?(?:[eE][+-]?\d+)?)[ij])$")


def parse_complex(text: str) -> mpmath.mpc:
    """Parse "a", "bi" or "a+bi" (``j`` also accepted) at working precision."""
    t = text.replace(" ", "")
    m = _COMPLEX.match(t)
    if not m or t in ("", "+", "-"):
        raise ValueError(f"not a complex literal: {text!r}")

    def coeff(x):
        return mpmath.mpf(x + "1") if x in ("", "+", "-") else mpmath.mpf(x)

    if m.group("re_only") is not None:
        return mpmath.mpc(mpmath.mpf(m.group("re_only")))
    if m.group("re") is not None:
        return mpmath.mpc(mpmath.mpf(m.group("re")), coeff(m.group("im")))
    return mpmath.mpc(0, coeff(m.group("im_only")))


def to_mpc(z) -> mpmath.mpc:
    if isinstance(z, str):
        return parse_complex(z)
    if isinstance(z, Fraction):
        return mpmath.mpc(mpmath.mpf(z.numerator) / z.denominator)
    return mpmath.mpc(z)


def to_mpc_list(zs: Iterable) -> list:
    return [to_mpc(z) for z in zs]


def is_integer_valued(z, tol: float) -> bool:
    z = mpmath.mpc(z)
    return abs(z.imag) <= tol and abs(z.real - mpmath.nint(z.real)) <= tol


def in_convergence_region(s: Sequence, margin: float = 0.0) -> bool:
    """Re(s_{r-k+1} + ... + s_r) > k + margin for 1 <= k <= r."""
    acc = mp.mpf(0)
    for k, z in enumerate(reversed(list(s)), start=1):
        acc += mpmath.mpc(z).real
        if not acc > k + margin:
            return False
    return True
