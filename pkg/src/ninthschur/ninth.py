"""Ninth-variation skew Schur functions S^{(r)}_{λ/μ} as minors of a symbolic X₊.

The (i, j) entry of X₊ (i < j) is the free variable named ``("h", i, j - i)``,
i.e. the generator h^{(i)}_{j-i}.  Because variables are named globally,
a minor does not depend on the ambient size N once N ≥ r + λ_1.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Mapping, Sequence

from .exact.matrix import Matrix, det, gauss_decompose, minor
from .exact.poly import DEFAULT_REGISTRY, SparsePoly, VarRegistry
from .shapes import (Partition, SkewShape, ShapeError, as_skew, conjugate, content, frobenius,
                     from_frobenius, maya, strip_sum)


class ContextError(ValueError):
    pass


class NinthContext:
    """Symbolic upper unitriangular X₊ of size N with lazy growth up to ``cap``."""

    def __init__(self, N: int = 0, slack: int = 4, cap: int = 64, reg: VarRegistry = DEFAULT_REGISTRY):
        self.N = N
        self.slack = slack
        self.cap = cap
        self.reg = reg
        self._s_cache: dict = {}
        self._e_cache: dict = {}
        self._inv_cache: dict = {}
        self.one = SparsePoly.constant(1, reg)
        self.zero = SparsePoly.constant(0, reg)

    def ensure(self, n: int) -> None:
        if n > self.cap:
            raise ContextError(f"context would need N={n} > cap={self.cap}")
        if n > self.N:
            self.N = n

    def for_shape(self, shape, r: int) -> int:
        """Default size ℓ(λ) + λ_1 + slack, never smaller than r + λ_1."""
        sh = as_skew(shape)
        n = max(len(sh.outer) + sh.outer.part(1) + self.slack, r + sh.outer.part(1))
        self.ensure(n)
        return n

    # entries and generators
    def x(self, i: int, j: int) -> SparsePoly:
        if i == j:
            return self.one
        if i > j:
            return self.zero
        if i < 1:
            raise ContextError(f"row index {i} out of range")
        self.ensure(j)
        return SparsePoly.var(("h", i, j - i), self.reg)

    def xplus(self, N: int | None = None) -> Matrix:
        N = self.N if N is None else N
        return Matrix.from_function(N, N, self.x)

    def h(self, t: int, d: int) -> SparsePoly:
        if d < 0:
            return self.zero
        if d == 0:
            return self.one
        if t < 1:
            raise ContextError(f"generator h^({t})_{d} has superscript < 1")
        return self.x(t, t + d)

    def e(self, t: int, d: int) -> SparsePoly:
        """e^{(t)}_d as the d×d minor of X₊ (rows t-d+1..t, columns t-d+2..t+1)."""
        if d < 0:
            return self.zero
        if d == 0:
            return self.one
        if d > t:
            raise ContextError(f"generator e^({t})_{d} needs d <= t")
        key = (t, d)
        if key not in self._e_cache:
            rows = range(t - d + 1, t + 1)
            cols = range(t - d + 2, t + 2)
            self._e_cache[key] = det([[self.x(i, j) for j in cols] for i in rows])
        return self._e_cache[key]

    def minor_xplus(self, I: Sequence[int], J: Sequence[int]) -> SparsePoly:
        """ξ^I_J(X₊) for sorted I, J; a shared initial segment splits off with det 1."""
        I, J = list(I), list(J)
        k = 0
        while k < len(I) and I[k] == J[k] == k + 1:
            k += 1
        I, J = I[k:], J[k:]
        if not I:
            return self.one
        return det([[self.x(i, j) for j in J] for i in I])

    def inverse_xplus(self, N: int) -> list[list[SparsePoly]]:
        """Entries of X₊⁻¹ of size N by back substitution."""
        if N not in self._inv_cache:
            Y = [[self.one if i == j else self.zero for j in range(N + 1)] for i in range(N + 1)]
            for i in range(1, N + 1):
                for j in range(i + 1, N + 1):
                    acc = self.zero
                    for k in range(i, j):
                        acc = acc - Y[i][k] * self.x(k, j)
                    Y[i][j] = acc
            self._inv_cache[N] = Y
        return self._inv_cache[N]


def _shape_r(shape, r: int) -> SkewShape:
    sh = as_skew(shape)
    if len(sh.outer) > r:
        raise ContextError(f"ℓ({sh.outer}) = {len(sh.outer)} exceeds r = {r}")
    if r < 0:
        raise ContextError("r must be non-negative")
    return sh


def s_minor(ctx: NinthContext, shape, r: int) -> SparsePoly:
    """S^{(r)}_{λ/μ} = ξ^I_J(X₊) with I, J the Maya diagrams of μ, λ."""
    sh = _shape_r(shape, r)
    key = (sh.outer, sh.inner, r)
    if key not in ctx._s_cache:
        N = r + sh.outer.part(1)
        ctx.ensure(N)
        I = maya(sh.inner, r, N).indices
        J = maya(sh.outer, r, N).indices
        ctx._s_cache[key] = ctx.minor_xplus(I, J)
    return ctx._s_cache[key]


def s_minor_complement(ctx: NinthContext, shape, r: int) -> SparsePoly:
    """(−1)^{|λ/μ|} ξ^{J^c}_{I^c}(X₊⁻¹), the complementary-minor form."""
    sh = _shape_r(shape, r)
    N = r + sh.outer.part(1)
    ctx.ensure(N)
    Ic = maya(sh.inner, r, N).complement()
    Jc = maya(sh.outer, r, N).complement()
    Y = ctx.inverse_xplus(N)
    val = det([[Y[j][i] for i in Ic] for j in Jc]) if Jc else ctx.one
    return -val if sh.size() % 2 else val


def jt_matrix(ctx: NinthContext, shape, r: int) -> Matrix:
    """H^{(r)} = [h^{(r+μ_j-j+1)}_{λ_i-μ_j-i+j}] of size ℓ(λ)."""
    sh = as_skew(shape)
    lam, mu = sh.outer, sh.inner
    n = len(lam)
    return Matrix.from_function(n, n, lambda i, j: ctx.h(r + mu.part(j) - j + 1,
                                                         lam.part(i) - mu.part(j) - i + j))


def dual_jt_matrix(ctx: NinthContext, shape, r: int) -> Matrix:
    """E^{(r)} = [e^{(r-μ'_j+j-1)}_{λ'_i-μ'_j-i+j}] of size ℓ(λ')."""
    sh = as_skew(shape)
    lc, mc = conjugate(sh.outer), conjugate(sh.inner)
    n = len(lc)
    return Matrix.from_function(n, n, lambda i, j: ctx.e(r - mc.part(j) + j - 1,
                                                         lc.part(i) - mc.part(j) - i + j))


def hook(a: int, b: int) -> Partition:
    """The Frobenius hook (a|b) = (a+1, 1^b)."""
    return from_frobenius((a,), (b,))


def giambelli_matrix(ctx: NinthContext, shape, r: int) -> tuple[int, Matrix]:
    """((−1)^q, G^{(r)}) with hook, h, e blocks and a zero q×q block."""
    sh = as_skew(shape)
    F, G = frobenius(sh.outer), frobenius(sh.inner)
    al, be, ga, de = F.alpha, F.beta, G.alpha, G.beta
    p, q = len(al), len(ga)
    if q > p:
        raise ShapeError("inner Frobenius rank exceeds outer rank")
    rows = []
    for i in range(p):
        rows.append([s_minor(ctx, hook(al[i], be[j]), r) for j in range(p)]
                    + [ctx.h(r + ga[j] + 1, al[i] - ga[j]) for j in range(q)])
    for i in range(q):
        rows.append([ctx.e(r - de[i] - 1, be[j] - de[i]) for j in range(p)] + [ctx.zero] * q)
    return (-1 if q % 2 else 1), Matrix(rows)


def s_route(ctx: NinthContext, shape, r: int, route: str = "minor") -> SparsePoly:
    if route == "minor":
        return s_minor(ctx, shape, r)
    if route == "complement":
        return s_minor_complement(ctx, shape, r)
    if route == "jt":
        return det(jt_matrix(ctx, shape, r))
    if route == "dualjt":
        return det(dual_jt_matrix(ctx, shape, r))
    if route == "giambelli":
        sign, G = giambelli_matrix(ctx, shape, r)
        return sign * det(G)
    raise ValueError(f"unknown route {route!r}")


def content_tableau(shape, m: int = 0) -> list[list[int | None]]:
    """The content tableau (m + c(i,j)) used to draw S^{(r+m)}; None marks μ."""
    sh = as_skew(shape)
    return [[None if j <= sh.inner.part(i) else m + j - i for j in range(1, sh.outer.part(i) + 1)]
            for i in range(1, len(sh.outer) + 1)]


# Numeric matrices -------------------------------------------------------------

def s_of_unitriangular(X: Matrix, shape, r: int):
    """ξ^I_J(X) for an upper unitriangular X of size at least r + λ_1."""
    sh = _shape_r(shape, r)
    N = X.shape[0]
    if N < r + sh.outer.part(1):
        raise ContextError(f"matrix of size {N} too small for {sh} at r={r}")
    I = maya(sh.inner, r, N).indices
    J = maya(sh.outer, r, N).indices
    return minor(X, I, J)


def s_of_matrix(X: Matrix, shape, r: int):
    """S^{(r)}_{λ/μ}(X) for invertible X with non-vanishing leading minors."""
    return s_of_unitriangular(gauss_decompose(X)[2], shape, r)


def weyl_check(X: Matrix, lam, r: int):
    """S^{(r)}_λ(X) − ξ^{1..r}_{J}(X)/ξ^{1..r}_{1..r}(X)."""
    lam = Partition(lam)
    N = X.shape[0]
    J = maya(lam, r, N).indices
    rows = list(range(1, r + 1))
    return s_of_matrix(X, lam, r) - Fraction(minor(X, rows, J)) / minor(X, rows, rows)


def _elem(N: int, t: int, val, one=1, zero=0) -> list[list]:
    m = [[one if i == j else zero for j in range(N)] for i in range(N)]
    m[t - 1][t] = val
    return m


def build_U(u: Mapping[tuple[int, int], object] | Callable[[int, int], object], M: int, N: int) -> Matrix:
    """U_M(u) = U_1⋯U_M, U_k = Π_{t=1}^{N-1} (E + u^{(t)}_k E_{t,t+1}); ``u[(t, k)]``."""
    get = u if callable(u) else (lambda t, k: u[(t, k)])
    X = Matrix.identity(N)
    for k in range(1, M + 1):
        for t in range(1, N):
            X = X @ Matrix(_elem(N, t, get(t, k)))
    return X


def build_V(v: Mapping[tuple[int, int], object] | Callable[[int, int], object], M: int, N: int) -> Matrix:
    """V_M(v) = V_1⋯V_M, V_k = Π_{t=N-1}^{1} (E + v^{(t)}_k E_{t,t+1})."""
    get = v if callable(v) else (lambda t, k: v[(t, k)])
    X = Matrix.identity(N)
    for k in range(1, M + 1):
        for t in range(N - 1, 0, -1):
            X = X @ Matrix(_elem(N, t, get(t, k)))
    return X


def tableau_sum(shape, r: int, u, M: int, mode: str = "U", N: int | None = None):
    """Σ_{SSYT_M} Π u^{(r+c)}_{t} (mode U) or the conjugate V form."""
    sh = as_skew(shape)
    get = u if callable(u) else (lambda t, k: u[(t, k)])
    if mode == "U":
        base, sign = sh, 1
    elif mode == "V":
        base, sign = sh.conjugate(), -1
    else:
        raise ValueError(f"unknown mode {mode!r}")

    def weight(cell, k):
        t = r + sign * content(cell)
        if t < 1 or (N is not None and t > N - 1):
            raise ContextError(f"content index {t} outside [1, N-1]")
        return get(t, k)

    return strip_sum(base, M, weight, 1, 0)


def fk_tableau(shape, w, M: int, m: int = 0):
    """S^FK_{λ/μ}(τ^m W) = Σ_{SSYT_M} Π w_{t, m + c}."""
    get = w if callable(w) else (lambda k, c: w[(k, c)])
    return strip_sum(as_skew(shape), M, lambda cell, k: get(k, m + content(cell)), 1, 0)


def fk_specialize(shape, w, M: int, m: int = 0, r: int | None = None) -> tuple:
    """(tableau route, U route) for S^FK_{λ/μ}(τ^m W) with u^{(t)}_k = w_{k, t-r}."""
    sh = as_skew(shape)
    get = w if callable(w) else (lambda k, c: w[(k, c)])
    if r is None:
        r = max(len(sh.outer), len(sh.outer) - m, 1) + 1
    rm = r + m
    N = rm + sh.outer.part(1) + 1
    U = build_U(lambda t, k: get(k, t - r), M, N)
    return fk_tableau(sh, get, M, m), s_of_unitriangular(U, sh, rm)


# Classical specializations -------------------------------------------------------

def x_var(i: int, reg: VarRegistry = DEFAULT_REGISTRY) -> SparsePoly:
    return SparsePoly.var(("x", i), reg)


def complete_homogeneous(d: int, k: int, reg: VarRegistry = DEFAULT_REGISTRY) -> SparsePoly:
    """h_d(x_1, ..., x_k)."""
    if d < 0:
        return SparsePoly.constant(0, reg)
    table = [SparsePoly.constant(1, reg)] + [SparsePoly.constant(0, reg)] * d
    for i in range(1, k + 1):
        xi = x_var(i, reg)
        for e in range(1, d + 1):
            table[e] = table[e] + xi * table[e - 1]
    return table[d]


def schur_poly(shape, n: int, reg: VarRegistry = DEFAULT_REGISTRY) -> SparsePoly:
    """Classical s_{λ/μ}(x_1..x_n) by the SSYT sum."""
    one = SparsePoly.constant(1, reg)
    xs = [None] + [x_var(i, reg) for i in range(1, n + 1)]
    return strip_sum(as_skew(shape), n, lambda cell, k: xs[k], one, one * 0)


def vandermonde_xplus(N: int, n: int, reg: VarRegistry = DEFAULT_REGISTRY) -> Matrix:
    """X₊ of the Vandermonde [x_i^{j-1}] with x_{n+1} = ... = x_N = 0.

    Entry (i, j) is h_{j-i}(x_1..x_i); :func:`vandermonde_xplus_ratio` checks
    this against the minor-ratio formula for small N.
    """
    return Matrix.from_function(
        N, N, lambda i, j: complete_homogeneous(j - i, min(i, n), reg) if j >= i else SparsePoly.constant(0, reg))


def vandermonde_xplus_ratio(N: int, reg: VarRegistry = DEFAULT_REGISTRY) -> Matrix:
    """X₊ of the generic Vandermonde via (X₊)_{i,j} = ξ^{1..i}_{1..i-1,j}/ξ^{1..i}_{1..i}."""
    V = Matrix.from_function(N, N, lambda i, j: x_var(i, reg) ** (j - 1))
    out = [[SparsePoly.constant(0, reg)] * N for _ in range(N)]
    for i in range(1, N + 1):
        lead = minor(V, range(1, i + 1), range(1, i + 1))
        for j in range(i, N + 1):
            num = minor(V, range(1, i + 1), list(range(1, i)) + [j])
            out[i - 1][j - 1] = num.divexact(lead)
    return Matrix(out)


def vandermonde_specialize(shape, n: int, N: int | None = None, r: int | None = None,
                           reg: VarRegistry = DEFAULT_REGISTRY) -> SparsePoly:
    """S^{(r)}_{λ/μ} at the Vandermonde matrix with x_{n+1..N} = 0."""
    sh = as_skew(shape)
    ell = max(len(sh.outer), 1)
    if r is None:
        r = n + ell - 1
    if N is None:
        N = r + sh.outer.part(1)
    if r < n + len(sh.outer) - 1 or r < len(sh.outer):
        raise ContextError(f"r = {r} too small for n = {n} variables")
    if N < r + sh.outer.part(1):
        raise ContextError(f"N = {N} too small")
    X = vandermonde_xplus(N, n, reg)
    I = maya(sh.inner, r, N).indices
    J = maya(sh.outer, r, N).indices
    k = 0
    while k < r and I[k] == J[k] == k + 1:
        k += 1
    return minor(X, I[k:], J[k:]) if k < r else SparsePoly.constant(1, reg)
