"""Generating functions F(x, z) and Φ_b(x, z) as truncated series.

Contour integrals over unit circles are realized as coefficient extraction:
(2πi)⁻¹∮ f dx_i picks the coefficient of x_i⁻¹.  Series are sparse dicts from
exponent tuples over (x, z, x_2..x_b, z_2..z_b) to mpf values, truncated by
the total (x, z) degree, which only grows under multiplication.
"""
from __future__ import annotations

from itertools import permutations
from math import comb
from typing import Sequence

import mpmath as mp

from .numeric import a_inverse_taylor
from .values import column_value, rectangle_value


class Laurent:
    """Sparse Laurent polynomial in n variables, truncated at (x, z) degree ``deg``.

    Variables 0 and 1 are x and z and carry nonnegative exponents.
    """

    __slots__ = ("n", "deg", "terms")

    def __init__(self, n: int, deg: int, terms: dict | None = None):
        self.n, self.deg = n, deg
        self.terms: dict[tuple, object] = {}
        for e, c in (terms or {}).items():
            if c and e[0] + e[1] <= deg:
                self.terms[e] = self.terms.get(e, 0) + c

    @classmethod
    def monomial(cls, n: int, deg: int, exps: dict[int, int], coeff=1) -> "Laurent":
        e = [0] * n
        for i, v in exps.items():
            e[i] += v
        return cls(n, deg, {tuple(e): mp.mpf(coeff)})

    def __add__(self, other: "Laurent") -> "Laurent":
        t = dict(self.terms)
        for e, c in other.terms.items():
            t[e] = t.get(e, 0) + c
        return Laurent(self.n, self.deg, t)

    def __sub__(self, other: "Laurent") -> "Laurent":
        return self + other.scale(-1)

    def scale(self, c) -> "Laurent":
        return Laurent(self.n, self.deg, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other: "Laurent") -> "Laurent":
        t: dict[tuple, object] = {}
        deg = self.deg
        for e1, c1 in self.terms.items():
            d1 = e1[0] + e1[1]
            for e2, c2 in other.terms.items():
                if d1 + e2[0] + e2[1] > deg:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, 0) + c1 * c2
        return Laurent(self.n, deg, t)

    def residue(self, variables: Sequence[int]) -> dict[tuple[int, int], object]:
        """Coefficients in (x, z) of Π_{v ∈ variables} v⁻¹ (other variables at exponent 0)."""
        vs = set(variables)
        out: dict[tuple[int, int], object] = {}
        for e, c in self.terms.items():
            if all(e[i] == (-1 if i in vs else 0) for i in range(2, self.n)):
                out[(e[0], e[1])] = out.get((e[0], e[1]), 0) + c
        return out


# F(x, z) ------------------------------------------------------------------------

def zast_series(deg: int) -> dict[tuple[int, int], object]:
    """Coefficients of x^i z^j (i ≥ 1, i, j ≤ deg+1) of −(ψ(z−x+1) − ψ(z+1))/(Γ(z+1)e^{γz}).

    ψ(1+w) is expanded with ψ^{(n)}(1)/n! from mpmath, (z−x)^n binomially,
    and 1/(Γ(z+1)e^{γz}) by numerical Taylor expansion.
    """
    N = 2 * deg + 3
    d = [mp.psi(n, 1) / mp.factorial(n) for n in range(N + 1)]
    g = a_inverse_taylor(deg + 1)
    out = {}
    for i in range(1, deg + 2):
        for j in range(deg + 1):
            total = mp.mpf(0)
            for l in range(j + 1):
                total += (-1) ** (i + 1) * d[i + l] * comb(i + l, i) * g[j - l]
            out[(i, j)] = total
    return out


def gen_fun_F(abc: Sequence[int] = (1, 2, 1), deg: int = 5, route: str = "table") -> dict[tuple[int, int], object]:
    """Coefficients F[a, c] = ζ*({α}^a, β, {γ}^c) for a, c ≤ deg.

    ``table`` evaluates each value; ``closed`` (only for (1,2,1)) reads them
    off the digamma closed form of x·F(x, z).
    """
    abc = tuple(abc)
    if deg < 0:
        return {}
    if route == "table":
        al, be, ga = abc
        return {(a, c): column_value((al,) * a + (be,) + (ga,) * c)
                for a in range(deg + 1) for c in range(deg + 1)}
    if route == "closed":
        if abc != (1, 2, 1):
            raise ValueError("the closed form is known for (1,2,1) only")
        s = zast_series(deg)
        return {(a, c): s[(a + 1, c)] for a in range(deg + 1) for c in range(deg + 1)}
    raise ValueError(f"unknown route {route!r}")


# Φ_b ------------------------------------------------------------------------------

def _vars(b: int):
    """Positions of x_i and z_i (i = 2..b) in the exponent tuple."""
    xs = {i: 2 + (i - 2) for i in range(2, b + 1)}
    zs = {i: 2 + (b - 1) + (i - 2) for i in range(2, b + 1)}
    return xs, zs


def _F_at_products(F: dict, b: int, deg: int) -> Laurent:
    """F(X, Z) with X = x_2⋯x_b, Z = z_2⋯z_b."""
    n = 2 * b
    xs, zs = _vars(b)
    t = {}
    for (a, c), v in F.items():
        e = [0] * n
        for i in range(2, b + 1):
            e[xs[i]] = a
            e[zs[i]] = c
        t[tuple(e)] = v
    return Laurent(n, deg, t)


def _F_at_ratio(F: dict, b: int, i: int, deg: int) -> Laurent:
    """F(x/x_i, z/z_i)."""
    n = 2 * b
    xs, zs = _vars(b)
    t = {}
    for (a, c), v in F.items():
        if a + c > deg:
            continue
        e = [0] * n
        e[0], e[1] = a, c
        e[xs[i]] = -a
        e[zs[i]] = -c
        t[tuple(e)] = v
    return Laurent(n, deg, t)


def _series_range(b: int, deg: int) -> int:
    return deg + b * b


def lemma_product_residual(b: int, k: Sequence[int], l: Sequence[int], deg: int,
                           abc: Sequence[int] = (1, 2, 1)) -> float:
    """max |LHS − RHS| over (x, z) degrees ≤ deg for the contour-product lemma."""
    if len(k) != b or len(l) != b:
        raise ValueError("k and l need b entries")
    if 0 not in k or 0 not in l:
        raise ValueError("some k_i and some l_j must vanish")
    K, L = sum(k), sum(l)
    top = _series_range(b, deg) + max(k) + max(l)
    F = gen_fun_F(abc, top)
    n = 2 * b
    xs, zs = _vars(b)

    lhs: dict[tuple[int, int], object] = {}
    for a in range(top + 1):
        for c in range(top + 1):
            ex, ez = (b - 1) * a + K - k[0], (b - 1) * c + L - l[0]
            if ex + ez > deg:
                continue
            prod = mp.mpf(1)
            for ki, li in zip(k, l):
                prod *= F[(a + ki, c + li)] if a + ki <= top and c + li <= top else mp.mpf(0)
            lhs[(ex, ez)] = lhs.get((ex, ez), 0) + prod

    integrand = _F_at_products(F, b, deg)
    for i in range(2, b + 1):
        mono = Laurent.monomial(n, deg, {xs[i]: k[i - 1] - k[0] - 1, zs[i]: l[i - 1] - l[0] - 1})
        integrand = integrand * mono * _F_at_ratio(F, b, i, deg)
    rhs = integrand.residue(list(xs.values()) + list(zs.values()))
    return _max_diff(lhs, rhs)


def phi_lhs(b: int, deg: int, abc: Sequence[int] = (1, 2, 1)) -> dict[tuple[int, int], object]:
    """Φ_b(x, z) up to total degree deg from the rectangle values."""
    out = {}
    px, pz = b * (b - 1) // 2, (b - 1) * (b - 2) // 2
    for a in range(deg + 1):
        for c in range(deg + 1):
            ex, ez = px + (b - 1) * a, pz + (b - 1) * c
            if ex + ez > deg:
                continue
            out[(ex, ez)] = rectangle_value(a, a + b + c, b, abc).value
    return out


def phi_rhs(b: int, deg: int, abc: Sequence[int] = (1, 2, 1)) -> dict[tuple[int, int], object]:
    """Residue side of the Φ_b identity up to total degree deg."""
    n = 2 * b
    xs, zs = _vars(b)
    F = gen_fun_F(abc, _series_range(b, deg))
    integrand = _F_at_products(F, b, deg)
    # Vandermonde Π_{i<j} (x_j − x_i)
    for i in range(2, b + 1):
        for j in range(i + 1, b + 1):
            integrand = integrand * (Laurent.monomial(n, deg, {xs[j]: 1}) - Laurent.monomial(n, deg, {xs[i]: 1}))
    X_pow = {xs[i]: -b for i in range(2, b + 1)}
    integrand = integrand * Laurent.monomial(n, deg, X_pow)
    for i in range(2, b + 1):
        Xxi = {xs[j]: 1 for j in range(2, b + 1)}
        Xxi[xs[i]] += 1
        Xxi[zs[i]] = -i
        factor = Laurent.monomial(n, deg, Xxi) - Laurent.monomial(n, deg, {0: 1, zs[i]: -i})
        integrand = integrand * factor * _F_at_ratio(F, b, i, deg)
    return integrand.residue(list(xs.values()) + list(zs.values()))


def _max_diff(p: dict, q: dict) -> float:
    keys = set(p) | set(q)
    return max((float(abs(p.get(e, 0) - q.get(e, 0))) for e in keys), default=0.0)


def phi_series_check(b: int, deg: int = 4, abc: Sequence[int] = (1, 2, 1)) -> float:
    """max |Φ_b coefficient − residue-side coefficient| over total degree ≤ deg."""
    if b not in (2, 3):
        raise ValueError(f"unsupported b={b}; use 2 or 3")
    return _max_diff(phi_lhs(b, deg, abc), phi_rhs(b, deg, abc))


def phi_by_permutations(b: int, a: int, c: int, abc: Sequence[int] = (1, 2, 1)):
    """R^{(a)}_{a+b+c,b} by the signed permutation sum of ζ* products (oracle)."""
    al, be, ga = abc
    total = mp.mpf(0)
    for sigma in permutations(range(1, b + 1)):
        inv = sum(1 for i in range(b) for j in range(i + 1, b) if sigma[i] > sigma[j])
        prod = mp.mpf(1)
        for i in range(1, b + 1):
            prod *= column_value((al,) * (a + sigma[i - 1] - 1) + (be,) + (ga,) * (c + b - i))
        total += (-1) ** inv * prod
    return total
