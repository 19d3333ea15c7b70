"""Generalized Euler-Zagier sums

    zeta_r(s; gamma) = sum_{m_1..m_r >= 1} prod_k (gamma_1 m_1 + ... + gamma_k m_k)^{-s_k}

evaluated through the tail functions

    T_k(X) = sum_{m >= 1} (X + gamma_k m)^{-s_k} T_{k+1}(X + gamma_k m),   T_{r+1} = 1,

so that zeta_r = T_1(0). Each T_k has an asymptotic expansion
sum_n c_n X^{beta_k - n} for large X, obtained level by level from the
Euler-Maclaurin expansion of the Hurwitz zeta function. Below the cutoff the
recurrence T_k(X) = (X + gamma_k)^{-s_k} T_{k+1}(X + gamma_k) + T_k(X + gamma_k)
is unrolled exactly; at or beyond the cutoff the expansion is used. Because
the expansion of a pure power sum is continued through zeta_H, this also
yields the meromorphic continuation off the singular hyperplanes, which is
what the trailing-variable evaluator relies on.
"""
from __future__ import annotations

import sys
from typing import Dict, List, Sequence, Tuple

import mpmath
from mpmath import mp

from ..errors import NotInConvergenceRegion, PoleAtOne, SingularLocus
from .core import EvalOptions, EvalResult, Weights, in_convergence_region, to_mpc, to_mpc_list
from .special import bernoulli_mpf, hurwitz_raw

__all__ = ["euler_zagier", "euler_zagier_trailing", "nested_zeta"]

_DEFAULT = EvalOptions()


def _hurwitz_shift_coeffs(sigma, n_max: int, pole_tol: float) -> Dict[int, mpmath.mpc]:
    """Coefficients A_d with zeta_H(sigma, x + 1) ~ sum_d A_d x^{1 - sigma - d}."""
    if abs(sigma - 1) <= pole_tol:
        raise SingularLocus(f"pure power sum with exponent {mpmath.nstr(sigma, 10)} diverges")
    out = {0: 1 / (sigma - 1)}
    if n_max >= 1:
        out[1] = mpmath.mpf(-0.5)
    poch = sigma
    for j in range(1, n_max // 2 + 1):
        out[2 * j] = bernoulli_mpf(2 * j) * poch
        poch *= (sigma + 2 * j - 1) * (sigma + 2 * j)
    return out


class _Engine:
    def __init__(self, s: Sequence, gamma: Sequence, opts: EvalOptions):
        self.s = [mpmath.mpc(x) for x in s]
        self.r = len(self.s)
        self.gamma = [mpmath.mpf(g) for g in gamma]
        self.opts = opts
        self.cutoff = mpmath.mpf(opts.series_cutoff)
        self.P = opts.expansion_order
        # X = sum of counts * weight value over distinct weights
        self.classes: List[mpmath.mpf] = []
        self.cls_of: List[int] = []
        for g in self.gamma:
            for i, w in enumerate(self.classes):
                if w == g:
                    self.cls_of.append(i)
                    break
            else:
                self.classes.append(g)
                self.cls_of.append(len(self.classes) - 1)
        self.cache: List[Dict[Tuple[int, ...], Tuple]] = [dict() for _ in range(self.r)]
        self.expansions = self._build_expansions()

    def _build_expansions(self):
        """(beta_k, [c_0..c_P]) for every level, built from the innermost out."""
        P = self.P
        exps = [None] * self.r
        beta = mpmath.mpc(0)
        coeffs = [mpmath.mpc(1)] + [mpmath.mpc(0)] * P
        for k in range(self.r - 1, -1, -1):
            sk, g = self.s[k], self.gamma[k]
            new = [mpmath.mpc(0)] * (P + 1)
            for n, c in enumerate(coeffs):
                if c == 0:
                    continue
                sigma = sk - beta + n
                for d, A in _hurwitz_shift_coeffs(sigma, P - n, self.opts.pole_tol).items():
                    if n + d <= P:
                        new[n + d] += c * A * mpmath.power(g, d - 1)
            beta = beta + 1 - sk
            coeffs = new
            exps[k] = (beta, coeffs)
        return exps

    def X(self, key: Tuple[int, ...]) -> mpmath.mpf:
        return mpmath.fsum(c * w for c, w in zip(key, self.classes)) if any(key) else mpmath.mpf(0)

    def asymptotic(self, k: int, X) -> Tuple:
        beta, coeffs = self.expansions[k]
        inv = 1 / X
        p = mpmath.exp(beta * mpmath.log(X))
        total = mpmath.mpc(0)
        terms = []
        for c in coeffs:
            t = c * p
            total += t
            terms.append(abs(t))
            p *= inv
        # omitted tail ~ size of the last two retained orders
        err = terms[-1] + terms[-2] if len(terms) > 1 else terms[-1]
        return total, err + abs(total) * mpmath.eps * 4

    def T(self, k: int, key: Tuple[int, ...]) -> Tuple:
        """(value, err) of T_k at X(key); iterative to avoid deep recursion."""
        if k == self.r:
            return mpmath.mpc(1), mpmath.mpf(0)
        cache = self.cache[k]
        if key in cache:
            return cache[key]
        step = list(key)
        chain = []
        cur = tuple(key)
        cls = self.cls_of[k]
        while cur not in cache:
            x = self.X(cur)
            if x >= self.cutoff:
                cache[cur] = self.asymptotic(k, x)
                break
            chain.append(cur)
            step = list(cur)
            step[cls] += 1
            cur = tuple(step)
        g, sk = self.gamma[k], self.s[k]
        for node in reversed(chain):
            nxt = list(node)
            nxt[cls] += 1
            nxt = tuple(nxt)
            x_next = self.X(nxt)
            v_rest, e_rest = cache[nxt]
            inner_v, inner_e = self.T(k + 1, nxt)
            w = mpmath.power(x_next, -sk)
            cache[node] = (w * inner_v + v_rest, abs(w) * inner_e + e_rest)
        return cache[key]

    def value(self) -> EvalResult:
        v, e = self.T(0, (0,) * len(self.classes))
        return EvalResult(mpmath.mpc(v), mpmath.mpf(e) + abs(v) * mpmath.eps * 16)


def nested_zeta(s: Sequence, gamma: Sequence, opts: EvalOptions = _DEFAULT) -> EvalResult:
    """Continued zeta_r(s; gamma) with no region checks (singular loci raise)."""
    with mp.workprec(opts.precision_bits + 16):
        s = to_mpc_list(s)
        if len(s) == 1:
            g = mpmath.mpf(gamma[0])
            v, e = hurwitz_raw(s[0], 1, opts.series_cutoff, opts.euler_maclaurin_order, opts.pole_tol)
            f = mpmath.power(g, -s[0])
            return EvalResult(mpmath.mpc(f * v), mpmath.mpf(abs(f) * e))
        limit = sys.getrecursionlimit()
        try:
            sys.setrecursionlimit(max(limit, 10000))
            return _Engine(s, gamma, opts).value()
        except PoleAtOne as exc:
            raise SingularLocus(str(exc)) from exc
        finally:
            sys.setrecursionlimit(limit)


def euler_zagier(s: Sequence, gamma: Weights | Sequence | None = None,
                 opts: EvalOptions = _DEFAULT) -> EvalResult:
    """zeta_r(s; gamma) inside its region of absolute convergence."""
    with mp.workprec(opts.precision_bits):
        s = to_mpc_list(s)
    if gamma is None:
        gamma = Weights.ones(len(s))
    if not isinstance(gamma, Weights):
        gamma = Weights(tuple(gamma))
    if len(gamma) != len(s):
        raise ValueError("need one weight per variable")
    if not in_convergence_region(s, opts.region_margin):
        raise NotInConvergenceRegion(
            f"s={[mpmath.nstr(z, 8) for z in s]} violates Re(s_(r-k+1)+...+s_r) > k")
    return nested_zeta(s, gamma.gamma, opts)


def euler_zagier_trailing(s_head: Sequence, w, opts: EvalOptions = _DEFAULT) -> EvalResult:
    """zeta_{t+1}(s_1..s_t, w) continued in the last variable w.

    The inner sum over the last index is a Hurwitz zeta value zeta_H(w, M_t + 1)
    (a Bernoulli polynomial when w is a non-positive integer); the outer sums
    are completed through the same asymptotic tails. Points on the singular
    hyperplanes raise SingularLocus; w = 1 raises PoleAtOne.
    """
    with mp.workprec(opts.precision_bits):
        head = to_mpc_list(s_head)
        w = to_mpc(w)
    if abs(w - 1) <= opts.pole_tol:
        raise PoleAtOne(f"last argument {mpmath.nstr(w, 10)} is at the pole s_r = 1")
    return nested_zeta(head + [w], (1,) * (len(head) + 1), opts)
