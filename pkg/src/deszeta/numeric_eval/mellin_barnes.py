"""Vertical-line contour integrals with the kernel Gamma(s+z)Gamma(-z)/Gamma(s).

Both integrals are computed by the trapezoid rule in tau on z = a + i tau,
|tau| <= T, with (1/2 pi i) dz = dtau / (2 pi). The error estimate combines
the difference to the step-2h subsum and the integrand size at the cut.
"""
from __future__ import annotations

from typing import Callable, Sequence

import mpmath
from mpmath import mp

from ..errors import QuadratureNotConverged
from .core import EvalOptions, EvalResult, to_mpc, to_mpc_list
from .desing import zeta_des_numeric

__all__ = ["contour_trapezoid", "mellin_barnes_kernel_check", "mellin_barnes_split"]

_DEFAULT = EvalOptions()


def contour_trapezoid(integrand: Callable, a, opts: EvalOptions, conj_symmetric: bool = False) -> EvalResult:
    """(1/2 pi i) int_{a - iT}^{a + iT} integrand(z) dz by the trapezoid rule.

    With ``conj_symmetric`` the integrand satisfies g(conj z) = conj g(z) on the
    line, so only tau >= 0 is sampled. Sampling stops early once the integrand
    has dropped below working precision on three consecutive nodes.
    """
    h = mpmath.mpf(opts.contour_step)
    T = mpmath.mpf(opts.contour_truncation)
    n_max = int(mpmath.floor(T / h))
    a = mpmath.mpf(a)

    def g(k):
        return integrand(mpmath.mpc(a, k * h))

    g0 = g(0)
    fine = g0
    coarse = g0
    small = 0
    edge = mpmath.mpf(0)
    peak = abs(g0)
    tiny = mpmath.ldexp(1, -mp.prec)
    for k in range(1, n_max + 1):
        if conj_symmetric:
            v = g(k)
            pair = 2 * v.real
            mag = abs(v)
        else:
            vp, vm = g(k), g(-k)
            pair = vp + vm
            mag = max(abs(vp), abs(vm))
        fine += pair
        if k % 2 == 0:
            coarse += pair
        peak = max(peak, mag)
        edge = mag
        small = small + 1 if mag <= tiny * peak else 0
        if small >= 3:
            break
    fine_val = fine * h / (2 * mpmath.pi)
    coarse_val = coarse * 2 * h / (2 * mpmath.pi)
    # Gamma factors decay at least like exp(-pi |tau| / 2)
    tail = 2 * edge / (2 * mpmath.pi) * 2 / mpmath.pi
    scale = max(abs(fine_val), mpmath.mpf(1))
    if tail > opts.quad_tol * scale:
        raise QuadratureNotConverged(
            f"integrand still {mpmath.nstr(edge, 3)} at |Im z| = {mpmath.nstr(T, 4)}")
    err = abs(fine_val - coarse_val) + tail + abs(fine_val) * mpmath.eps * 64
    return EvalResult(mpmath.mpc(fine_val), err)


def _kernel(s, z):
    return mpmath.gamma(s + z) * mpmath.gamma(-z) / mpmath.gamma(s)


def mellin_barnes_kernel_check(lam, s, a, opts: EvalOptions = _DEFAULT) -> EvalResult:
    """Quadrature of (1/2 pi i) int_(a) Gamma(s+z)Gamma(-z)/Gamma(s) lam^z dz,
    which should reproduce (1 + lam)^{-s}."""
    with mp.workprec(opts.precision_bits):
        lam = mpmath.mpf(lam)
        s = to_mpc(s)
        a = mpmath.mpf(a)
        if not lam > 0:
            raise ValueError("lambda must be positive")
        if not s.real > 0:
            raise ValueError("Re(s) must be positive")
        if not (-s.real < a < 0):
            raise ValueError(f"need -Re(s) < a < 0, got a={a}")
        loglam = mpmath.log(lam)
        return contour_trapezoid(lambda z: _kernel(s, z) * mpmath.exp(z * loglam), a, opts,
                                 conj_symmetric=(s.imag == 0))


def mellin_barnes_split(s: Sequence, a, opts: EvalOptions = _DEFAULT) -> EvalResult:
    """zeta_r^des(s) as a one-dimensional contour integral over z on Re z = a:

        (1/2 pi i) int Gamma(s_r+z)Gamma(-z)/Gamma(s_r)
                       * zeta_{r-1}^des(s_1..s_{r-2}, s_{r-1}+s_r+z) * zeta_1^des(-z) dz.
    """
    with mp.workprec(opts.precision_bits):
        s = to_mpc_list(s)
        a = mpmath.mpf(a)
        r = len(s)
        if r not in (2, 3):
            raise ValueError("only depth 2 and 3 are supported")
        if any(not z.real > 1 for z in s):
            raise ValueError("every Re(s_j) must exceed 1")
        if not (-s[-1].real < a < -1):
            raise ValueError(f"need -Re(s_r) < a < -1, got a={a}")
        head = s[:-2]
        sr = s[-1]
        base = s[-2] + sr

        def integrand(z):
            outer = zeta_des_numeric(head + [base + z], opts).value
            inner = zeta_des_numeric([-z], opts).value
            return _kernel(sr, z) * outer * inner

        return contour_trapezoid(integrand, a, opts, conj_symmetric=all(z.imag == 0 for z in s))
