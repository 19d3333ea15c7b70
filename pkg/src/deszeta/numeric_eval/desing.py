"""Numeric desingularized zeta-functions.

``zeta_des_numeric`` uses the finite combination
sum_{l,m} a^r_{l,m} prod_j (s_j)_{l_j} zeta_r(s + m) of shifted sums;
``limit_representation`` uses the c -> 1 limit of weighted sums, which only
needs the convergent region and therefore serves as an independent route.
"""
from __future__ import annotations

import itertools
from typing import Sequence

import mpmath
from mpmath import mp

from ..coeff_table import expand_G
from ..errors import (
    CancellationLoss,
    NotInConvergenceRegion,
    PoleAtOne,
    SingularLocus,
    UnsupportedInstance,
)
from .core import (
    EvalOptions,
    EvalResult,
    in_convergence_region,
    is_integer_valued,
    to_mpc_list,
)
from .multizeta import euler_zagier, euler_zagier_trailing

__all__ = [
    "check_singular_loci",
    "zeta_des_numeric",
    "zeta_des_mixed",
    "limit_representation",
]

_DEFAULT = EvalOptions()
DEFAULT_C_VALUES = (0.9, 0.95, 0.975, 1.025, 1.05, 1.1)


def check_singular_loci(x: Sequence, tol: float) -> None:
    """Raise SingularLocus if x lies on a polar hyperplane of zeta_r.

    The hyperplanes are x_r = 1, x_{r-1} + x_r in {2, 1, 0, -2, -4, ...} and
    x_{r-k+1} + ... + x_r in {k, k-1, k-2, ...} for k >= 3.
    """
    acc = mpmath.mpc(0)
    for k, z in enumerate(reversed(list(x)), start=1):
        acc += z
        if not is_integer_valued(acc, tol):
            continue
        n = int(mpmath.nint(acc.real))
        hit = (k == 1 and n == 1) or (k == 2 and (n in (2, 1) or (n <= 0 and n % 2 == 0))) \
            or (k >= 3 and n <= k)
        if hit:
            raise SingularLocus(
                f"partial sum of the last {k} arguments equals {n}: "
                f"{[mpmath.nstr(z, 8) for z in x]}")


def _pochhammer(s, k: int):
    out = mpmath.mpc(1)
    for j in range(k):
        out *= s + j
    return out


def _combination(s: list, opts: EvalOptions, any_trailing: bool = False) -> EvalResult:
    r = len(s)
    table = expand_G(r)
    total = mpmath.mpc(0)
    err = mpmath.mpf(0)
    for m, by_l in table.by_shift().items():
        coef = mpmath.mpc(0)
        abs_coef = mpmath.mpf(0)
        for l, a in by_l.items():
            p = a
            for sj, lj in zip(s, l):
                p *= _pochhammer(sj, lj)
            coef += p
            abs_coef += abs(p)
        x = [sj + mj for sj, mj in zip(s, m)]
        check_singular_loci(x, opts.singular_tol)
        if abs_coef == 0:
            continue
        if in_convergence_region(x, opts.region_margin):
            z = euler_zagier(x, None, opts)
        elif opts.allow_trailing and (any_trailing or is_integer_valued(x[-1], opts.singular_tol)):
            z = euler_zagier_trailing(x[:-1], x[-1], opts)
        else:
            raise NotInConvergenceRegion(
                f"summand zeta({[mpmath.nstr(v, 8) for v in x]}) is outside the convergent "
                "region and has no integer trailing argument")
        total += coef * z.value
        err += abs_coef * z.err_estimate
    return EvalResult(total, err + abs(total) * mpmath.eps * 16)


def zeta_des_numeric(s: Sequence, opts: EvalOptions = _DEFAULT) -> EvalResult:
    """zeta_r^des(s) as a finite combination of shifted multiple zeta values.

    Summands in the convergent region are summed directly; a summand whose last
    argument is an integer is continued in that variable (when
    ``opts.allow_trailing``). Anything else raises NotInConvergenceRegion.
    """
    with mp.workprec(opts.precision_bits):
        s = to_mpc_list(s)
        if not s:
            raise ValueError("need at least one argument")
        return _combination(s, opts)


def zeta_des_mixed(s_head: Sequence, k_tail: int, opts: EvalOptions = _DEFAULT) -> EvalResult:
    """zeta_r^des(s_1, ..., s_{r-1}, -k) with a single non-positive integer tail.

    When a summand sits on a pole (its Pochhammer weight vanishes there, so the
    full combination is finite) the whole combination is evaluated at
    -k + eps_1 and -k + eps_2 and linearly extrapolated to eps = 0.
    """
    if int(k_tail) != k_tail or k_tail < 0:
        raise ValueError("k_tail must be a non-negative integer")
    with mp.workprec(opts.precision_bits):
        head = to_mpc_list(s_head)
        if head and is_integer_valued(head[-1], opts.singular_tol) and head[-1].real < 0.5:
            raise UnsupportedInstance("only one trailing non-positive integer argument is supported")
        try:
            return _combination(head + [mpmath.mpc(-k_tail)], opts)
        except (SingularLocus, PoleAtOne):
            pass
        e1, e2 = (mpmath.mpf(e) for e in opts.epsilon_perturbation)
        f1 = _combination(head + [-k_tail + e1], opts, any_trailing=True)
        f2 = _combination(head + [-k_tail + e2], opts, any_trailing=True)
        w1, w2 = -e2 / (e1 - e2), e1 / (e1 - e2)
        value = w1 * f1.value + w2 * f2.value
        slope = (f1.value - f2.value) / (e1 - e2)
        # linear extrapolation drops O(f'' e1 e2); |f'| e1 e2 serves as its scale
        extrap = abs(slope) * abs(e1 * e2) + abs(value - f2.value) * abs(e2)
        err = abs(w1) * f1.err_estimate + abs(w2) * f2.err_estimate + extrap
        return EvalResult(value, err)


def _neville_at_zero(hs: list, vals: list):
    """Polynomial extrapolation to h=0; returns (value, previous-order value, Lebesgue sum)."""
    n = len(hs)
    P = list(vals)
    prev = P[0]
    for level in range(1, n):
        for i in range(n - level):
            j = i + level
            P[i] = (hs[j] * P[i] - hs[i] * P[i + 1]) / (hs[j] - hs[i])
        if level == n - 2:
            prev = P[0]
    lebesgue = mpmath.mpf(0)
    for i in range(n):
        li = mpmath.mpf(1)
        for j in range(n):
            if j != i:
                li *= hs[j] / (hs[j] - hs[i])
        lebesgue += abs(li)
    return P[0], prev, lebesgue


def limit_representation(s: Sequence, c_values: Sequence = DEFAULT_C_VALUES,
                         opts: EvalOptions = _DEFAULT) -> EvalResult:
    """zeta_r^des(s) as the c -> 1 limit of
    (1-c)^{-r} sum_{delta in {0,1}^r} (-c)^{|delta|} zeta_r(s; c^delta_1, ..., c^delta_r),
    extrapolated polynomially in (c - 1) from the supplied c values.
    """
    with mp.workprec(opts.precision_bits):
        s = to_mpc_list(s)
        r = len(s)
        # farthest point last: the previous Neville order then omits it
        cs = sorted((mpmath.mpf(c) for c in c_values), key=lambda c: (abs(c - 1), c))
        if len(cs) < 2:
            raise ValueError("need at least two c values")
        for c in cs:
            if not (0 < abs(c - 1) <= 0.25):
                raise ValueError(f"c={c} must satisfy 0 < |c-1| <= 0.25")
        if len(set(cs)) != len(cs):
            raise ValueError("c values must be distinct")
        if not in_convergence_region(s, 0.5):
            raise NotInConvergenceRegion("limit representation needs margin > 0.5 inside the region")
        hs, vals, errs = [], [], []
        for c in cs:
            acc = mpmath.mpc(0)
            e = mpmath.mpf(0)
            for delta in itertools.product((0, 1), repeat=r):
                z = euler_zagier(s, [c ** d for d in delta], opts)
                acc += (-c) ** sum(delta) * z.value
                e += abs(c) ** sum(delta) * z.err_estimate
            amp = abs(1 - c) ** (-r)
            hs.append(c - 1)
            vals.append(acc / (1 - c) ** r)
            errs.append(e * amp)
        value, prev, lebesgue = _neville_at_zero(hs, vals)
        err = abs(value - prev) + lebesgue * max(errs)
        if err > abs(value):
            raise CancellationLoss("extrapolation error exceeds the value; widen precision or c set")
        return EvalResult(value, err)
