"""Truncated multiple zeta values and truncated Schur multiple zeta values.

Orientation: ζ^M(k_1..k_d) sums over 1 ≤ m_1 < ... < m_d ≤ M, so k_d sits on
the largest summation variable.  A column tableau read top to bottom gives
ζ^M, a row read left to right gives ζ^{⋆,M}.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .. import _kernels
from ..exact.matrix import det
from ..shapes import as_skew, conjugate, horizontal_strip_transitions, ssyt_iter, strip_sum


class MzvIndexError(ValueError):
    pass


def check_index(k: Sequence[int]) -> tuple[int, ...]:
    k = tuple(int(x) for x in k)
    if any(x < 1 for x in k):
        raise MzvIndexError(f"index entries must be positive: {k}")
    return k


def is_admissible(k: Sequence[int]) -> bool:
    return not k or k[-1] >= 2


def zeta_trunc(k: Sequence[int], M: int, star: bool = False) -> Fraction:
    """Exact ζ^M(k) or ζ^{⋆,M}(k) by prefix sums in O(M·d) operations."""
    k = check_index(k)
    if M < 0:
        raise ValueError("M must be >= 0")
    prev = [Fraction(1)] * (M + 1)
    for idx, s in enumerate(k):
        cur = [Fraction(0)] * (M + 1)
        acc = Fraction(0)
        for m in range(1, M + 1):
            base = prev[m] if (star or idx == 0) else prev[m - 1]
            if base:
                acc += base / m ** s
            cur[m] = acc
        prev = cur
    return prev[M]


def zeta_trunc_brute(k: Sequence[int], M: int, star: bool = False) -> Fraction:
    """Nested-loop oracle for :func:`zeta_trunc`."""
    k = check_index(k)

    def rec(i, lo):
        if i == len(k):
            return Fraction(1)
        total = Fraction(0)
        for m in range(lo, M + 1):
            total += Fraction(1, m ** k[i]) * rec(i + 1, m if star else m + 1)
        return total
    return rec(0, 1)


def zeta_trunc_float(k: Sequence[int], M: int, star: bool = False, backend: str | None = None) -> float:
    return float(_kernels.mzv_dp(check_index(k), M, star, backend)[M])


# Diagonal indices ----------------------------------------------------------------

class DiagonalIndex:
    """a = (a_c) as a content → exponent map.

    Either three-zone (α for c > 0, β for c = 0, γ for c < 0) or an explicit
    dict over a declared content range.
    """

    def __init__(self, table: dict[int, int] | None = None, abc: Sequence[int] | None = None):
        if (table is None) == (abc is None):
            raise ValueError("give exactly one of table or abc")
        self.table = dict(table) if table is not None else None
        self.abc = tuple(abc) if abc is not None else None

    @classmethod
    def three_zone(cls, alpha: int, beta: int, gamma: int) -> "DiagonalIndex":
        return cls(abc=(alpha, beta, gamma))

    def __call__(self, c: int) -> int:
        if self.abc is not None:
            al, be, ga = self.abc
            return al if c > 0 else (be if c == 0 else ga)
        if c not in self.table:
            raise MzvIndexError(f"content {c} not covered by the diagonal index")
        return self.table[c]

    def shift(self, m: int) -> "DiagonalIndex":
        """τ^m a = (a_{c+m})."""
        if self.abc is not None:
            return _Shifted(self, m)
        return DiagonalIndex(table={c - m: v for c, v in self.table.items()})

    def covers(self, shape) -> bool:
        try:
            for i, j in as_skew(shape).cells():
                self(j - i)
        except MzvIndexError:
            return False
        return True


class _Shifted(DiagonalIndex):
    def __init__(self, base: DiagonalIndex, m: int):
        self.base, self.m = base, m
        self.table = self.abc = None

    def __call__(self, c: int) -> int:
        return self.base(c + self.m)

    def shift(self, m: int) -> DiagonalIndex:
        return _Shifted(self.base, self.m + m)


def row_index(a: Callable[[int], int], n: int, s: int = 0) -> tuple[int, ...]:
    """Exponents of the one-row shape (n) under τ^s a, left to right."""
    return tuple(a(s + c) for c in range(n))


def column_index(a: Callable[[int], int], n: int, s: int = 0) -> tuple[int, ...]:
    """Exponents of the one-column shape (1^n) under τ^s a, top to bottom."""
    return tuple(a(s - c) for c in range(n))


def _exponent_fn(idx):
    if callable(idx):
        return lambda cell: idx(cell[1] - cell[0])
    entries = idx.as_dict() if hasattr(idx, "as_dict") else dict(idx)
    return lambda cell: entries[cell]


def _weight_fn(idx):
    if callable(idx):
        return lambda cell, k: Fraction(1, k ** idx(cell[1] - cell[0]))
    entries = idx.as_dict() if hasattr(idx, "as_dict") else dict(idx)
    return lambda cell, k: Fraction(1, k ** entries[cell])


def schur_zeta_trunc(shape, idx, M: int, route: str = "strip") -> Fraction:
    """ζ^M_{λ/μ}(s) for a diagonal index (callable) or a per-cell exponent map.

    Routes: ``ssyt`` enumerates tableaux, ``strip`` runs the transfer DP,
    ``jt``/``dual_jt`` take determinants of ζ^{⋆,M} rows / ζ^M columns
    (diagonal indices only).
    """
    sh = as_skew(shape)
    if M < 0:
        raise ValueError("M must be >= 0")
    if callable(idx) and isinstance(idx, DiagonalIndex) and not idx.covers(sh):
        raise MzvIndexError("diagonal index does not cover the shape's contents")
    if route == "strip":
        return strip_sum(sh, M, _weight_fn(idx), Fraction(1), Fraction(0))
    if route == "ssyt":
        # Integer numerators over the common denominator lcm(1..M)^{Σ exponents}.
        cells = sh.cells()
        expo = _exponent_fn(idx)
        es = [expo(c) for c in cells]
        L = math.lcm(*range(1, M + 1)) ** sum(es) if M else 1
        num = 0
        for T in ssyt_iter(sh, M):
            entries = T.as_dict()
            D = 1
            for c, e in zip(cells, es):
                D *= entries[c] ** e
            num += L // D
        return Fraction(num, L)
    if not callable(idx):
        raise ValueError(f"route {route!r} needs a diagonal index")
    if sh.is_empty():
        return Fraction(1)
    if route == "jt":
        lam, mu = sh.outer, sh.inner
        n = len(lam)

        def entry(i, j):
            d = lam.part(i) - mu.part(j) - i + j
            if d < 0:
                return Fraction(0)
            return zeta_trunc(row_index(idx, d, mu.part(j) - j + 1), M, star=True)
        return det([[entry(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)])
    if route == "dual_jt":
        lc, mc = conjugate(sh.outer), conjugate(sh.inner)
        n = len(lc)

        def entry(i, j):
            d = lc.part(i) - mc.part(j) - i + j
            if d < 0:
                return Fraction(0)
            return zeta_trunc(column_index(idx, d, -mc.part(j) + j - 1), M)
        return det([[entry(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)])
    raise ValueError(f"unknown route {route!r}")


def schur_zeta_float(shape, idx: Callable[[int], int], M: int, backend: str | None = None) -> float:
    """Float ζ^M_{λ/μ}(a) for a diagonal index via the strip kernel."""
    sh = as_skew(shape)
    trans = horizontal_strip_transitions(sh)
    states = list(trans)
    pos = {s: i for i, s in enumerate(states)}
    src, dst, expo = [], [], []
    for s, outs in trans.items():
        for s2, cells in outs:
            src.append(pos[s])
            dst.append(pos[s2])
            expo.append(sum(idx(j - i) for i, j in cells))
    state = _kernels.strip_dp(len(states), np.array(src), np.array(dst), np.array(expo, dtype=float),
                              pos[sh.inner], M, backend)
    return float(state[pos[sh.outer]])
