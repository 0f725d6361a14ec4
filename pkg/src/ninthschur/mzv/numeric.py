"""High-precision numerics: single and multiple zeta values, η, C_s, series of A(z)⁻¹.

Reals are mpmath ``mpf`` at a configurable number of significant digits
(default 40).  Admissible MZVs are evaluated by the Hölder convolution
ζ(w) = Σ_j L(w_1..w_j)·L(dual of w_{j+1}..w_n) of one-variable multiple
polylogarithms at 1/2, which converges geometrically.  A float DP with a
tail correction serves as the independent oracle.
"""
from __future__ import annotations

import contextlib
from functools import lru_cache
from itertools import product
from math import factorial
from typing import Sequence

import mpmath as mp

from .. import _kernels
from .trunc import check_index, is_admissible
from .words import to_eword, to_zword

DEFAULT_DIGITS = 40


@contextlib.contextmanager
def precision(digits: int):
    """Run a block at ``digits`` significant digits (mpmath working precision)."""
    with mp.workdps(digits):
        yield


def digits() -> int:
    return mp.mp.dps


# Multiple polylogarithms at 1/2 --------------------------------------------------

@lru_cache(maxsize=None)
def _inv_powers(s: int, n_terms: int, dps: int) -> list:
    """[m^{-s} for m = 0..n_terms] (entry 0 unused)."""
    with mp.workdps(dps):
        return [mp.mpf(0)] + [mp.mpf(m) ** (-s) for m in range(1, n_terms + 1)]


@lru_cache(maxsize=None)
def _half_powers(n_terms: int, dps: int) -> list:
    with mp.workdps(dps):
        out = [mp.mpf(1)]
        half = mp.mpf(1) / 2
        for _ in range(n_terms):
            out.append(out[-1] * half)
        return out


@lru_cache(maxsize=None)
def _li_half(eword: tuple, dps: int):
    """Σ_{m_1<...<m_d} 2^{-m_d} / Π m_i^{k_i} for the index of ``eword``."""
    if not eword:
        return mp.mpf(1)
    k = to_zword(eword)
    d = len(k)
    n_terms = int(3.33 * (dps + 10)) + 8 * max(k) + 30 * d
    inv = [_inv_powers(s, n_terms, dps) for s in k]
    pw = _half_powers(n_terms, dps)
    partial = [mp.mpf(1)] + [mp.mpf(0)] * (d - 1)
    total = mp.mpf(0)
    last = inv[d - 1]
    for m in range(1, n_terms + 1):
        if partial[d - 1]:
            total += partial[d - 1] * pw[m] * last[m]
        for j in range(d - 1, 0, -1):
            partial[j] += partial[j - 1] * inv[j - 1][m]
    return total


@lru_cache(maxsize=None)
def _mzv_cached(k: tuple, dps: int):
    with mp.workdps(dps + 10):
        w = to_eword(k)
        n = len(w)
        total = mp.mpf(0)
        for j in range(n + 1):
            dual = tuple(1 - x for x in reversed(w[j:]))
            total += _li_half(w[:j], dps + 10) * _li_half(dual, dps + 10)
    return +total


def mzv(k: Sequence[int]):
    """Convergent ζ(k_1..k_d) (sum over m_1 < ... < m_d) at the working precision."""
    k = check_index(k)
    if not is_admissible(k):
        raise ValueError(f"ζ{k} diverges; use a regularization")
    if not k:
        return mp.mpf(1)
    if len(k) == 1:
        return mp.zeta(k[0])
    return _mzv_cached(k, mp.mp.dps)


def coarsenings(k: Sequence[int]):
    """All indices obtained by merging runs of adjacent entries (the ⋆ expansion)."""
    k = tuple(k)
    if not k:
        yield ()
        return
    for cuts in product((0, 1), repeat=len(k) - 1):
        out = [k[0]]
        for bit, x in zip(cuts, k[1:]):
            if bit:
                out[-1] += x
            else:
                out.append(x)
        yield tuple(out)


def mzv_star(k: Sequence[int]):
    """Convergent ζ^⋆(k) (sum over m_1 ≤ ... ≤ m_d)."""
    k = check_index(k)
    if not is_admissible(k):
        raise ValueError(f"ζ⋆{k} diverges")
    return mp.fsum(mzv(c) for c in coarsenings(k))


def eta(k: int):
    """η(k) = ζ({2}^k) = π^{2k}/(2k+1)!."""
    if k < 0:
        raise ValueError("η needs k >= 0")
    return mp.pi ** (2 * k) / mp.factorial(2 * k + 1)


# Series around z = 0 ------------------------------------------------------------

def series_exp(f: Sequence, n: int) -> list:
    """Coefficients of exp(Σ f_l z^l) up to z^n, given f_0 = 0."""
    g = [mp.mpf(1)] + [mp.mpf(0)] * n
    for m in range(1, n + 1):
        g[m] = mp.fsum(l * f[l] * g[m - l] for l in range(1, min(m, len(f) - 1) + 1)) / m
    return g


def a_inverse_series(n: int) -> list:
    """Coefficients of A(z)⁻¹ = 1/(Γ(z+1)e^{γz}) = exp(−Σ_{l≥2} (−1)^l ζ(l) z^l/l)."""
    f = [mp.mpf(0), mp.mpf(0)] + [-((-1) ** l) * mp.zeta(l) / l for l in range(2, n + 1)]
    return series_exp(f, n)


def c_coefficients(n: int) -> list:
    """C_0..C_n, where A(z)⁻¹ = Σ (−1)^s C_s z^s."""
    return [(-1) ** s * v for s, v in enumerate(a_inverse_series(n))]


def c_partition_sum(s: int):
    """C_s from its defining sum over 2k_2 + ... + s k_s = s (oracle, small s)."""
    if s == 0:
        return mp.mpf(1)
    total = mp.mpf(0)

    def rec(l, remaining, acc, sign, denom):
        nonlocal total
        if remaining == 0:
            total += sign * acc / denom
            return
        if l > remaining:
            return
        kmax = remaining // l
        for kl in range(kmax + 1):
            rec(l + 1, remaining - l * kl, acc * (mp.zeta(l) / l) ** kl, sign * (-1) ** kl,
                denom * factorial(kl))
    rec(2, s, mp.mpf(1), 1, 1)
    return total


def a_inverse_taylor(n: int) -> list:
    """Taylor coefficients of 1/(Γ(z+1)e^{γz}) by mpmath differentiation (independent oracle)."""
    return mp.taylor(lambda t: mp.rgamma(t + 1) * mp.exp(-mp.euler * t), 0, n)


# Tables -------------------------------------------------------------------------

class ZetaTable:
    """Cached ζ(2..K), η(0..K), γ and the C_s coefficients at one precision."""

    def __init__(self, K: int = 16, digits: int = DEFAULT_DIGITS):
        self.K = K
        self.digits = digits
        with mp.workdps(digits):
            self.euler = +mp.euler
            self.zeta = {k: mp.zeta(k) for k in range(2, K + 1)}
            self.eta = {k: eta(k) for k in range(0, K + 1)}
            self.C = c_coefficients(K)

    def z(self, k: int):
        if k not in self.zeta:
            raise KeyError(f"ζ({k}) outside the table (K={self.K})")
        return self.zeta[k]

    def check_eta(self, k: int, M: int = 100_000) -> tuple[float, float]:
        """(|η(k) − DP value|, tail bound) for the truncated ζ^M({2}^k)."""
        val, bound = mzv_dp_tail((2,) * k, M)
        return abs(float(self.eta[k]) - val), bound


# Float DP oracle ----------------------------------------------------------------

def mzv_dp_tail(k: Sequence[int], M: int = 100_000, backend: str | None = None) -> tuple[float, float]:
    """ζ(k) from the float DP to M plus a first-order tail on the outermost sum.

    The tail Σ_{m>M} P(m−1)/m^{k_d} is approximated by P(M)·ζ(k_d, M+1) with
    P the depth-(d−1) prefix.  Returns (value, error bound); the bound is the
    neglected growth of P beyond M, valid when every entry is ≥ 2.
    """
    k = check_index(k)
    if not k:
        return 1.0, 0.0
    if any(x < 2 for x in k):
        raise ValueError("the tail bound needs every entry >= 2")
    prefix = _kernels.mzv_dp(k[:-1], M, False, backend) if len(k) > 1 else None
    head = float(_kernels.mzv_dp(k, M, False, backend)[M])
    P_M = float(prefix[M]) if prefix is not None else 1.0
    hurwitz = float(mp.zeta(k[-1], M + 1))
    rest = 1.0
    for x in k[:-1]:
        rest *= float(mp.zeta(x))
    bound = (rest - P_M) * hurwitz + 1e-13
    return head + P_M * hurwitz, bound


def star_one_dp(k: int, M: int = 100_000, backend: str | None = None) -> tuple[float, float]:
    """ζ⋆(1, k) = Σ_m H_m/m^k from the float DP to M plus an asymptotic tail.

    The tail uses H_m = log m + γ + 1/(2m) − 1/(12m²) + O(m⁻⁴), so
    Σ_{m>M} H_m/m^k = −ζ'(k, M+1) + γζ(k, M+1) + ζ(k+1, M+1)/2 − ζ(k+2, M+1)/12.
    Returns (value, error bound).
    """
    if k < 2:
        raise ValueError("ζ⋆(1, k) needs k >= 2")
    head = float(_kernels.mzv_dp((1, k), M, True, backend)[M])
    a = M + 1
    tail = (-mp.zeta(k, a, 1) + mp.euler * mp.zeta(k, a) + mp.zeta(k + 1, a) / 2
            - mp.zeta(k + 2, a) / 12)
    bound = float(mp.zeta(k + 4, a)) / 100 + 1e-15 * M ** 0.5 * abs(head)
    return head + float(tail), bound
