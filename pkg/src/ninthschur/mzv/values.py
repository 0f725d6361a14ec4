"""Closed forms and rectangle values R^{(m)}_{p,q}(α, β, γ).

R^{(m)}_{p,q} is the regularized Schur MZV of the rectangle (q^p) with the
diagonal index a_c = α (c > 0), β (c = 0), γ (c < 0) shifted by τ^m.  It is
evaluated through the regularized dual Jacobi–Trudi determinant, whose
entries are one-column values ζ*(a_s, a_{s−1}, ...).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import comb
from typing import Callable, Sequence

import mpmath as mp

from ..exact.matrix import det
from .numeric import c_coefficients, eta, mzv_star, star_one_dp
from .regularize import reg_value
from .trunc import DiagonalIndex, column_index, schur_zeta_float


def _z(k: int):
    return mp.zeta(k)


def explicit_121(a: int, c: int, side: str = "stuffle"):
    """ζ*({1}^a, 2, {1}^c) or ζ⧢({1}^a, 2, {1}^c) from the closed formulas."""
    if a < 0 or c < 0:
        raise ValueError("a, c must be >= 0")
    sign = -1 if c % 2 else 1
    if side == "shuffle":
        return sign * comb(a + c + 1, c) * _z(a + c + 2)
    if side != "stuffle":
        raise ValueError(f"unknown side {side!r}")
    C = c_coefficients(c)
    return sign * mp.fsum(comb(a + c - s + 1, c - s) * _z(a + c - s + 2) * C[s] for s in range(c + 1))


def zagier_232(a: int, c: int):
    """ζ({2}^a, 3, {2}^c) by Zagier's formula."""
    if a < 0 or c < 0:
        raise ValueError("a, c must be >= 0")
    total = mp.mpf(0)
    for r in range(1, a + c + 2):
        br = comb(2 * r, 2 * a + 2) - (1 - mp.mpf(2) ** (-2 * r)) * comb(2 * r, 2 * c + 1)
        total += (-1) ** r * br * eta(a + c - r + 1) * _z(2 * r + 1)
    return 2 * total


def _pattern(k: tuple) -> tuple | None:
    """(x, y, a, c) when k = ({x}^a, y, {x}^c) with y ≠ x, else None."""
    vals = set(k)
    if len(vals) != 2:
        return None
    for y in vals:
        pos = [i for i, v in enumerate(k) if v == y]
        if len(pos) == 1:
            x = (vals - {y}).pop()
            return x, y, pos[0], len(k) - pos[0] - 1
    return None


@lru_cache(maxsize=None)
def _column_value(k: tuple, method: str, dps: int):
    if method == "auto":
        pat = _pattern(k)
        if pat and pat[:2] == (1, 2):
            return explicit_121(pat[2], pat[3])
        if pat and pat[:2] == (2, 3):
            return zagier_232(pat[2], pat[3])
    return reg_value(k, "stuffle")


def column_value(k: Sequence[int], method: str = "auto"):
    """ζ*(k) for a column index; ``auto`` uses the closed forms when they apply."""
    k = tuple(k)
    if not k:
        return mp.mpf(1)
    return _column_value(k, method, mp.mp.dps)


@dataclass(frozen=True)
class RectangleValue:
    m: int
    p: int
    q: int
    abc: tuple
    value: object

    def __float__(self):
        return float(self.value)


def rectangle_value(m: int, p: int, q: int, abc: Sequence[int] = (1, 2, 1), method: str = "auto") -> RectangleValue:
    """R^{(m)}_{p,q}(α,β,γ) = det[ζ*_{(1^{p−i+j})}(τ^{m+j−1} a)]_{1≤i,j≤q}."""
    if p < 0 or q < 0:
        raise ValueError("p, q must be >= 0")
    abc = tuple(abc)
    if p == 0 or q == 0:
        return RectangleValue(m, p, q, abc, mp.mpf(1))
    a = DiagonalIndex.three_zone(*abc)

    def entry(i, j):
        n = p - i + j
        if n < 0:
            return mp.mpf(0)
        return column_value(column_index(a, n, m + j - 1), method)
    val = det([[entry(i, j) for j in range(1, q + 1)] for i in range(1, q + 1)])
    return RectangleValue(m, p, q, abc, val)


def prop_121_determinant(a: int, b: int, c: int):
    """R^{(a)}_{a+b+c,b}(1,2,1) from the C_s multi-sum of binomial-ζ determinants."""
    if min(a, b, c) < 0:
        raise ValueError("a, b, c must be >= 0")
    if b == 0:
        return mp.mpf(1)
    C = c_coefficients(b + c)
    sign = -1 if (b * c + b * (b - 1) // 2) % 2 else 1
    total = mp.mpf(0)
    ranges = [range(0, c + b - i + 1) for i in range(1, b + 1)]
    for ts in product(*ranges):
        coeff = mp.mpf(1)
        for t in ts:
            coeff *= C[t]
        if not coeff:
            continue

        def entry(i, j):
            t = ts[i - 1]
            top, bot = a + b + c - i + j - t, b + c - i - t
            if bot < 0 or bot > top:
                return mp.mpf(0)
            return comb(top, bot) * _z(top + 1)
        total += coeff * det([[entry(i, j) for j in range(1, b + 1)] for i in range(1, b + 1)])
    return sign * total


# Paper closed forms -------------------------------------------------------------

def r33_121_closed():
    z = _z
    return (-9 * z(4) ** 3 - 24 * z(2) * z(5) ** 2 - 20 * z(3) ** 2 * z(6) + 30 * z(2) * z(4) * z(6)
            + 24 * z(3) * z(4) * z(5))


# (coefficient, η(1) power, η(2) power, ζ odd arguments)
_R33_232_TERMS = [
    (mp.mpf(-801675) / 1024, 0, 0, (3, 7, 11)),
    (mp.mpf(-1058211) / 512, 0, 0, (5, 5, 11)),
    (mp.mpf(160335) / 64, 1, 0, (3, 5, 11)),
    (mp.mpf(-32067) / 64, 2, 0, (3, 3, 11)),
    (mp.mpf(-404495) / 256, 0, 0, (3, 9, 9)),
    (mp.mpf(1101387) / 256, 0, 0, (5, 7, 9)),
    (mp.mpf(483) / 4, 1, 0, (3, 7, 9)),
    (mp.mpf(-21315) / 16, 1, 0, (5, 5, 9)),
    (mp.mpf(-777) / 8, 0, 1, (3, 5, 9)),
    (mp.mpf(-1491) / 16, 2, 0, (3, 5, 9)),
    (mp.mpf(-651) / 4, 1, 1, (3, 3, 9)),
    (mp.mpf(2667) / 8, 3, 0, (3, 3, 9)),
    (mp.mpf(-3426525) / 2048, 0, 0, (7, 7, 7)),
    (mp.mpf(54873) / 128, 1, 0, (5, 7, 7)),
    (mp.mpf(-1575) / 2, 0, 1, (3, 7, 7)),
    (mp.mpf(128331) / 128, 2, 0, (3, 7, 7)),
    (mp.mpf(6705) / 16, 0, 1, (5, 5, 7)),
    (mp.mpf(-6219) / 16, 2, 0, (5, 5, 7)),
    (mp.mpf(6849) / 8, 1, 1, (3, 5, 7)),
    (mp.mpf(-17163) / 16, 3, 0, (3, 5, 7)),
    (mp.mpf(-225) / 4, 0, 2, (3, 3, 7)),
    (mp.mpf(225) / 4, 2, 1, (3, 3, 7)),
    (mp.mpf(-855) / 2, 1, 1, (5, 5, 5)),
    (mp.mpf(495), 3, 0, (5, 5, 5)),
    (mp.mpf(81) / 2, 0, 2, (3, 5, 5)),
    (mp.mpf(-81) / 2, 2, 1, (3, 5, 5)),
]


def r33_232_closed():
    """The closed form of R^{(0)}_{3,3}(2,3,2) in η(1), η(2) and odd ζ values."""
    total = mp.mpf(0)
    for coeff, e1, e2, zs in _R33_232_TERMS:
        term = mp.mpf(coeff) * eta(1) ** e1 * eta(2) ** e2
        for s in zs:
            term *= _z(s)
        total += term
    return total


def jacobi_trudi_3(R: Callable[[int, int], object]):
    """R^{(0)}_{3,3} from the one-column values R(m, p) = R^{(m)}_{p,1}."""
    return (R(0, 3) * R(1, 3) * R(2, 3) + R(0, 2) * R(1, 2) * R(2, 5) + R(0, 1) * R(1, 4) * R(2, 4)
            - R(0, 3) * R(1, 2) * R(2, 4) - R(0, 2) * R(1, 4) * R(2, 3) - R(0, 1) * R(1, 3) * R(2, 5))


def r332_232_check():
    """|JT-route R^{(0)}_{3,3}(2,3,2) with Zagier initial values − closed form|."""
    lhs = jacobi_trudi_3(lambda m, p: zagier_232(m, p - m - 1))
    return abs(lhs - r33_232_closed())


def r332_121_check():
    lhs = jacobi_trudi_3(lambda m, p: explicit_121(m, p - m - 1))
    return abs(lhs - r33_121_closed())


def example_r_a2_2(a: int):
    z = _z
    return -(a + 2) * z(a + 3) ** 2 + (a + 3) * z(a + 2) * z(a + 4)


def example_r_a3_2(a: int):
    z = _z
    return (-(a + 3) * comb(a + 3, 2) * z(a + 4) ** 2 + (a + 2) * comb(a + 4, 2) * z(a + 3) * z(a + 5)
            + mp.mpf(a + 3) / 2 * z(2) * z(a + 2) * z(a + 4) - mp.mpf(a + 2) / 2 * z(2) * z(a + 3) ** 2)


def example_r_a3_3(a: int):
    z = _z
    return (-(a + 3) * comb(a + 3, 2) * z(a + 4) ** 3 - (a + 4) * comb(a + 4, 2) * z(a + 2) * z(a + 5) ** 2
            - (a + 2) * comb(a + 5, 2) * z(a + 3) ** 2 * z(a + 6)
            + 3 * comb(a + 5, 3) * z(a + 2) * z(a + 4) * z(a + 6)
            + 6 * comb(a + 4, 3) * z(a + 3) * z(a + 4) * z(a + 5))


# Checkerboard remark ---------------------------------------------------------------

def _holder_star_one(k: int):
    return mzv_star((1, k))


def _dp_star_one(k: int):
    return mp.mpf(star_one_dp(k)[0])


def _star_fact(k: tuple, star_one: Callable[[int], object] = _holder_star_one):
    """ζ⋆ of ({1}^i, {2}^c) for i ≤ 2 from the closed facts."""
    ones = 0
    while ones < len(k) and k[ones] == 1:
        ones += 1
    c = len(k) - ones
    if any(x != 2 for x in k[ones:]):
        raise ValueError(f"no closed fact for ζ⋆{k}")
    if ones == 0:
        return 2 * (1 - mp.mpf(2) ** (-2 * c + 1)) * _z(2 * c)
    if ones == 1:
        return 2 * _z(2 * c + 1)
    if ones == 2:
        return 4 * star_one(2 * c + 1) - 2 * _z(2 * c + 2)
    raise ValueError(f"no closed fact for ζ⋆{k}")


def checkerboard_relation(a: int, c: int, star: Callable[[tuple], object]):
    """R^{(−a)}_{2,a+2+c}(2,2,1) as the 2×2 row Jacobi–Trudi product of ζ⋆ values."""
    ones = lambda n: (1,) * n
    twos = lambda n: (2,) * n
    return (star(ones(a + 1) + twos(c + 1)) * star(ones(a) + twos(c + 2))
            - star(ones(a + 1) + twos(c + 2)) * star(ones(a) + twos(c + 1)))


def checkerboard_closed(a: int, c: int, star_one: Callable[[int], object] = _holder_star_one):
    z = _z
    if a == 0:
        return (4 * (1 - mp.mpf(2) ** (-2 * c - 3)) * z(2 * c + 3) * z(2 * c + 4)
                - 4 * (1 - mp.mpf(2) ** (-2 * c - 1)) * z(2 * c + 2) * z(2 * c + 5))
    if a == 1:
        return (8 * (star_one(2 * c + 3) * z(2 * c + 5) - star_one(2 * c + 5) * z(2 * c + 3))
                - 4 * (z(2 * c + 4) * z(2 * c + 5) - z(2 * c + 3) * z(2 * c + 6)))
    raise ValueError("closed forms are displayed for a = 0, 1")


def checkerboard_values(c: int) -> tuple:
    """Residuals of the two displayed identities for R^{(0)}_{2,c+2} and R^{(−1)}_{2,c+3}.

    Each residual is the largest of three comparisons: closed form vs the
    relation with the ζ⋆ facts, both with ζ⋆(1, k) from the float DP plus
    tail; the same with ζ⋆(1, k) at full precision; closed form vs the
    relation with every ζ⋆ value evaluated directly.
    """
    out = []
    for a in (0, 1):
        res = []
        for one in (_dp_star_one, _holder_star_one):
            closed = checkerboard_closed(a, c, one)
            res.append(abs(closed - checkerboard_relation(a, c, lambda k: _star_fact(k, one))))
        res.append(abs(checkerboard_closed(a, c) - checkerboard_relation(a, c, mzv_star)))
        out.append(max(res))
    return tuple(out)


def checkerboard_dp(c: int, M: int = 100_000, backend: str | None = None) -> tuple[float, float, float]:
    """(DP value of R^{(0)}_{2,c+2}(2,2,1) at M, closed form, tail estimate).

    The tail of a 1/M-type truncation is estimated as twice |DP(M) − DP(M/2)|.
    """
    a = DiagonalIndex.three_zone(2, 2, 1)
    shape = (c + 2, c + 2)
    v = schur_zeta_float(shape, a, M, backend)
    v_half = schur_zeta_float(shape, a, M // 2, backend)
    return v, float(checkerboard_closed(0, c)), 2 * abs(v - v_half)
