"""Integer coefficient tables a^r_{l,m} from the product generator

    G_r(u; v) = prod_{j=1}^{r} [1 - (u_j v_j + ... + u_r v_r)(1/v_j - 1/v_{j-1})],

with 1/v_0 := 0. Monomials are u^l v^m with l >= 0 and m of total degree 0.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Dict, Mapping, Tuple

from .errors import InternalInvariantViolation

__all__ = ["LaurentPoly", "CoeffTable", "expand_G", "table_stats", "G_direct"]

Key = Tuple[Tuple[int, ...], Tuple[int, ...]]


@dataclass(frozen=True)
class LaurentPoly:
    """Integer polynomial in u_1..u_r and Laurent in v_1..v_r."""

    r: int
    terms: Mapping[Key, int] = field(default_factory=dict)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: Dict[Key, int] = {}
        for (la, ma), ca in self.terms.items():
            for (lb, mb), cb in other.terms.items():
                key = (tuple(x + y for x, y in zip(la, lb)),
                       tuple(x + y for x, y in zip(ma, mb)))
                out[key] = out.get(key, 0) + ca * cb
        return LaurentPoly(self.r, {k: c for k, c in out.items() if c})

    @classmethod
    def one(cls, r: int) -> "LaurentPoly":
        return cls(r, {((0,) * r, (0,) * r): 1})


def _unit(r: int, i: int, val: int = 1) -> Tuple[int, ...]:
    e = [0] * r
    e[i] += val
    return tuple(e)


def _factor(r: int, j: int) -> LaurentPoly:
    """j-th factor (0-based) of G_r."""
    terms: Dict[Key, int] = {((0,) * r, (0,) * r): 1}
    for k in range(j, r):
        u = _unit(r, k)
        v_minus_j = list(_unit(r, k))
        v_minus_j[j] -= 1
        key = (u, tuple(v_minus_j))
        terms[key] = terms.get(key, 0) - 1
        if j > 0:
            v_minus_prev = list(_unit(r, k))
            v_minus_prev[j - 1] -= 1
            key = (u, tuple(v_minus_prev))
            terms[key] = terms.get(key, 0) + 1
    return LaurentPoly(r, {k: c for k, c in terms.items() if c})


@dataclass(frozen=True)
class CoeffTable:
    r: int
    entries: Mapping[Key, int]

    def __iter__(self):
        # deterministic order: by l, then m
        return iter(sorted(self.entries.items()))

    def __len__(self) -> int:
        return len(self.entries)

    def by_shift(self) -> Dict[Tuple[int, ...], Dict[Tuple[int, ...], int]]:
        """Group entries as {m: {l: a}} so each shifted zeta is evaluated once."""
        out: Dict[Tuple[int, ...], Dict[Tuple[int, ...], int]] = {}
        for (l, m), a in sorted(self.entries.items()):
            out.setdefault(m, {})[l] = a
        return out

    def to_json(self) -> list:
        return [{"l": list(l), "m": list(m), "a": a} for (l, m), a in self]


_TABLES: Dict[int, CoeffTable] = {}
_LOCK = threading.Lock()


def expand_G(r: int) -> CoeffTable:
    """Expand G_r into its coefficient table; cached per depth."""
    if not 1 <= r <= 6:
        raise ValueError(f"depth must satisfy 1 <= r <= 6, got {r}")
    with _LOCK:
        if r in _TABLES:
            return _TABLES[r]
        poly = LaurentPoly.one(r)
        for j in range(r):
            poly = poly * _factor(r, j)
        for (l, m), a in poly.terms.items():
            if sum(m) != 0:
                raise InternalInvariantViolation(f"term u^{l} v^{m} has |m| != 0")
        zero = ((0,) * r, (0,) * r)
        if poly.terms.get(zero) != 1:
            raise InternalInvariantViolation("constant term of G_r must be 1")
        table = CoeffTable(r, dict(poly.terms))
        _TABLES[r] = table
        return table


def table_stats(t: CoeffTable) -> Tuple[int, int, int]:
    """(number of terms, max |m_j|, max total u-degree)."""
    max_m = max((abs(x) for (_, m) in t.entries for x in m), default=0)
    max_l = max((sum(l) for (l, _) in t.entries), default=0)
    return len(t.entries), max_m, max_l


def G_direct(u, v):
    """Evaluate the product form of G_r at concrete u, v (v entries nonzero)."""
    r = len(u)
    out = 1
    for j in range(r):
        tail = sum(u[k] * v[k] for k in range(j, r))
        inv_prev = 0 if j == 0 else 1 / v[j - 1]
        out *= 1 - tail * (1 / v[j] - inv_prev)
    return out
