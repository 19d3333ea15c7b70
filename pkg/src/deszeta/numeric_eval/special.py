"""Complex Gamma and the Hurwitz zeta function with analytic continuation."""
from __future__ import annotations

import mpmath
from mpmath import mp

from ..errors import PoleAtOne, PoleOfGamma
from ..exact_core import bernoulli
from .core import EvalOptions, EvalResult, to_mpc

__all__ = ["gamma_complex", "hurwitz_zeta", "hurwitz_raw", "bernoulli_mpf"]

_DEFAULT = EvalOptions()
_BERN_CACHE: dict = {}


def bernoulli_mpf(n: int) -> mpmath.mpf:
    """B_n / n! at the current working precision (cached per precision)."""
    key = (n, mp.prec)
    v = _BERN_CACHE.get(key)
    if v is None:
        b = bernoulli(n)
        v = mpmath.mpf(b.numerator) / b.denominator / mpmath.factorial(n)
        _BERN_CACHE[key] = v
    return v


def gamma_complex(z, opts: EvalOptions = _DEFAULT) -> EvalResult:
    """Gamma(z) at working precision; mpmath supplies the kernel."""
    with mp.workprec(opts.precision_bits):
        z = to_mpc(z)
        if abs(z.imag) <= 1e-12 and z.real <= 1e-12 and abs(z.real - mpmath.nint(z.real)) <= 1e-12:
            raise PoleOfGamma(f"Gamma has a pole at {mpmath.nstr(z, 10)}")
        v = mpmath.gamma(z)
        return EvalResult(mpmath.mpc(v), abs(v) * mpmath.eps * 8)


def hurwitz_raw(s, a, cutoff: int, order: int, pole_tol: float = 1e-6):
    """(value, err) of sum_{n>=0} (a+n)^{-s} continued to s != 1.

    Sums directly up to a + M >= cutoff, then applies Euler-Maclaurin:
    x^{1-s}/(s-1) + x^{-s}/2 + sum_j B_2j/(2j)! (s)_{2j-1} x^{-s-2j+1}.
    The correction order grows from ``order`` until the first omitted term
    falls below working precision; if the terms stop decreasing first, the
    cutoff is doubled. Must be called inside a workprec block.
    """
    s = mpmath.mpc(s)
    a = mpmath.mpf(a)
    if abs(s - 1) <= pole_tol:
        raise PoleAtOne(f"Hurwitz zeta pole at s={mpmath.nstr(s, 10)}")
    if a <= 0:
        raise ValueError("Hurwitz parameter must be positive")
    tiny = mpmath.ldexp(1, -mp.prec + 4)
    k_max = max(order, 60)
    cut = cutoff
    for _attempt in range(8):
        M = max(0, int(mpmath.ceil(cut - a)))
        partial = mpmath.mpc(0)
        for n in range(M):
            partial += mpmath.power(a + n, -s)
        x = a + M
        xs = mpmath.power(x, -s)
        head = x * xs / (s - 1) + xs / 2
        scale = abs(partial) + abs(head)
        inv_x2 = 1 / (x * x)
        poch = s  # (s)_{2j-1}
        xp = xs / x  # x^{-s-2j+1} at j=1
        corr = mpmath.mpc(0)
        prev = None
        err = None
        for j in range(1, k_max + 2):
            term = bernoulli_mpf(2 * j) * poch * xp
            mag = abs(term)
            if j > order and (mag <= tiny * max(scale, tiny) or mag == 0):
                err = mag
                break
            if prev is not None and j > order and mag > prev:
                break
            corr += term
            prev = mag
            poch *= (s + 2 * j - 1) * (s + 2 * j)
            xp *= inv_x2
        if err is not None:
            return partial + head + corr, err + scale * mpmath.eps * (M + 4)
        cut *= 2
    return partial + head + corr, abs(term)


def hurwitz_zeta(s, a=1, opts: EvalOptions = _DEFAULT) -> EvalResult:
    """zeta_H(s, a) = sum_{n>=0} (a+n)^{-s}, continued to all s != 1."""
    with mp.workprec(opts.precision_bits):
        v, e = hurwitz_raw(to_mpc(s), mpmath.mpf(a), opts.series_cutoff,
                           opts.euler_maclaurin_order, opts.pole_tol)
        return EvalResult(mpmath.mpc(v), mpmath.mpf(e))
