"""Stuffle and shuffle regularization Z*(k; T), Z⧢(k; T).

A word w = v z_1^n with v admissible satisfies w' ∘ z_1 = n·w + R, where
w' = v z_1^{n−1}, ∘ is the chosen product and every word of R ends in fewer
z_1's.  Since Z^∘ is an algebra map with Z^∘(z_1) = T this gives
Z^∘(w) = (T·Z^∘(w') − Z^∘(R))/n, which terminates.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

import mpmath as mp

from .numeric import mzv
from .trunc import check_index, is_admissible
from .words import WordPoly, shuffle, stuffle, z


class RegPolynomial:
    """Polynomial in T whose coefficients are ℚ-combinations of admissible indices.

    ``coeffs[i]`` maps index tuples to rationals; the empty index stands for 1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, Mapping[tuple, object]] | None = None):
        self.coeffs: dict[int, dict[tuple, Fraction]] = {}
        for i, lin in (coeffs or {}).items():
            clean = {tuple(k): Fraction(c) for k, c in lin.items() if c}
            if clean:
                self.coeffs[i] = clean

    @classmethod
    def index(cls, k: Sequence[int]) -> "RegPolynomial":
        return cls({0: {tuple(k): 1}})

    def __add__(self, other: "RegPolynomial") -> "RegPolynomial":
        out = {i: dict(lin) for i, lin in self.coeffs.items()}
        for i, lin in other.coeffs.items():
            tgt = out.setdefault(i, {})
            for k, c in lin.items():
                tgt[k] = tgt.get(k, 0) + c
        return RegPolynomial(out)

    def scale(self, c) -> "RegPolynomial":
        return RegPolynomial({i: {k: c * v for k, v in lin.items()} for i, lin in self.coeffs.items()})

    def times_T(self) -> "RegPolynomial":
        return RegPolynomial({i + 1: lin for i, lin in self.coeffs.items()})

    @property
    def degree(self) -> int:
        return max(self.coeffs, default=-1)

    def coefficient(self, i: int) -> dict[tuple, Fraction]:
        return dict(self.coeffs.get(i, {}))

    def indices(self) -> set[tuple]:
        return {k for lin in self.coeffs.values() for k in lin}

    def evaluate(self, T=0):
        """Numeric value at T (an mpf or number) at the working precision."""
        total = mp.mpf(0)
        Tm = mp.mpf(T)
        for i, lin in self.coeffs.items():
            c = mp.fsum(mp.mpf(v.numerator) / v.denominator * mzv(k) for k, v in lin.items())
            total += c * Tm ** i
        return total

    def __eq__(self, other):
        return isinstance(other, RegPolynomial) and self.coeffs == other.coeffs

    def __repr__(self):
        parts = []
        for i in sorted(self.coeffs, reverse=True):
            lin = " + ".join(f"{c}*ζ({','.join(map(str, k))})" if k else f"{c}"
                             for k, c in sorted(self.coeffs[i].items()))
            parts.append(f"({lin})*T^{i}" if i else f"({lin})")
        return " + ".join(parts) if parts else "0"


def trailing_ones(k: Sequence[int]) -> int:
    n = 0
    for x in reversed(k):
        if x != 1:
            break
        n += 1
    return n


@lru_cache(maxsize=None)
def _regularize(k: tuple, side: str) -> RegPolynomial:
    n = trailing_ones(k)
    if n == 0:
        return RegPolynomial.index(k)
    prod = stuffle if side == "stuffle" else shuffle
    w_prev = k[:-1]
    P = prod(z(*w_prev), z(1))
    lead = P.terms.get(k, 0)
    if lead != n:
        raise AssertionError(f"leading coefficient {lead} != {n} for {k}")
    out = _regularize(w_prev, side).times_T()
    for w, c in P.terms.items():
        if w != k:
            out = out + _regularize(w, side).scale(-c)
    return out.scale(Fraction(1, n))


def regularize(k: Sequence[int] | WordPoly, side: str = "stuffle") -> RegPolynomial:
    """Z*(k; T) (``side='stuffle'``) or Z⧢(k; T) (``side='shuffle'``)."""
    if side not in ("stuffle", "shuffle"):
        raise ValueError(f"unknown side {side!r}")
    if isinstance(k, WordPoly):
        out = RegPolynomial()
        for w, c in k.to_z().terms.items():
            out = out + _regularize(check_index(w), side).scale(c)
        return out
    return _regularize(check_index(k), side)


def reg_value(k: Sequence[int], side: str = "stuffle", T=0):
    """ζ*(k) or ζ⧢(k) (the regularized value at T = 0 by default)."""
    k = check_index(k)
    if is_admissible(k):
        return mzv(k)
    return regularize(k, side).evaluate(T)


class AsymptoticResult:
    """Residuals |ζ^M(k) − Z*(k; log M + γ)| over M with a fitted C·log^J(M)/M envelope."""

    def __init__(self, k: tuple, Ms: list[int], residuals: list[float]):
        self.k, self.Ms, self.residuals = k, Ms, residuals
        self.J = len(k)
        self.C = max(r * M / max(mp.log(M), 1) ** self.J for r, M in zip(residuals, Ms))

    @property
    def decreasing(self) -> bool:
        return all(b < a for a, b in zip(self.residuals, self.residuals[1:]))

    def __repr__(self):
        return f"AsymptoticResult(k={self.k}, residuals={self.residuals}, C={float(self.C):.3g}, J={self.J})"


def asymptotic_check(k: Sequence[int], Ms: Sequence[int] = (100, 1000, 10000),
                     backend: str | None = None) -> AsymptoticResult:
    """Compare the float truncation ζ^M(k) with Z*(k; T) at T = log M + γ."""
    from .trunc import zeta_trunc_float

    k = check_index(k)
    reg = regularize(k, "stuffle")
    res = []
    for M in Ms:
        T = mp.log(M) + mp.euler
        res.append(abs(zeta_trunc_float(k, M, False, backend) - float(reg.evaluate(T))))
    return AsymptoticResult(k, list(Ms), res)
