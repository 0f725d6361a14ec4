"""Generic minor identities, each returned as a residual that must vanish."""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Hashable, Sequence

from .fields import DEFAULT_PRIME, PrimeFieldElem
from .matrix import Matrix, MatrixError, det, gauss_decompose, inverse, minor
from .poly import RegistryError, SparsePoly


def _sum(items):
    acc = 0
    for x in items:
        acc = acc + x
    return acc


def cauchy_binet_check(X: Matrix, Y: Matrix, I: Sequence[int], J: Sequence[int]):
    N = X.shape[0]
    if X.shape != (N, N) or Y.shape != (N, N):
        raise MatrixError("Cauchy-Binet needs two square matrices of equal size")
    r = len(I)
    lhs = minor(X @ Y, I, J)
    rhs = _sum(minor(X, I, K) * minor(Y, K, J) for K in combinations(range(1, N + 1), r))
    return lhs - rhs


def jacobi_complement_check(X: Matrix, I: Sequence[int], J: Sequence[int]):
    N = X.shape[0]
    Xi = inverse(X)
    Ic = [i for i in range(1, N + 1) if i not in I]
    Jc = [j for j in range(1, N + 1) if j not in J]
    sign = -1 if (sum(I) + sum(J)) % 2 else 1
    return minor(X, I, J) - sign * det(X) * minor(Xi, Jc, Ic)


def gauss_minor_residuals(X: Matrix) -> list:
    """Residuals of the minor-ratio formulas for X₋, X₀, X₊ and X₊⁻¹ entries."""
    N = X.shape[0]
    Xm, X0, Xp = gauss_decompose(X)
    lead = [1] + [minor(X, range(1, k + 1), range(1, k + 1)) for k in range(1, N + 1)]
    out = []
    recon = Xm @ X0 @ Xp
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            out.append(recon.entry(i, j) - X.entry(i, j))
    for i in range(1, N + 1):
        out.append(X0.entry(i, i) - lead[i] / lead[i - 1])
        for j in range(1, i):
            # (X₋)_{i,j} = ξ^{1..j-1,i}_{1..j}/ξ^{1..j}_{1..j}
            out.append(Xm.entry(i, j) - minor(X, list(range(1, j)) + [i], range(1, j + 1)) / lead[j])
        for j in range(i + 1, N + 1):
            # (X₊)_{i,j} = ξ^{1..i}_{1..i-1,j}/ξ^{1..i}_{1..i}
            out.append(Xp.entry(i, j) - minor(X, range(1, i + 1), list(range(1, i)) + [j]) / lead[i])
    Xpi = inverse(Xp)
    for i in range(1, N + 1):
        for j in range(i + 1, N + 1):
            cols = [c for c in range(1, j + 1) if c != i]
            val = minor(X, range(1, j), cols) / lead[j - 1]
            sign = -1 if (j - i) % 2 else 1
            out.append(Xpi.entry(i, j) - sign * val)
    return out


def desnanot_jacobi_check(Z: Matrix):
    n = Z.shape[0]
    if n < 3 or not Z.is_square():
        raise MatrixError("Desnanot-Jacobi needs a square matrix of size >= 3")
    k = n - 1
    a = list(range(1, k + 2))
    lhs = minor(Z, a, a) * minor(Z, a[1:k], a[1:k])
    rhs = (minor(Z, a[:k], a[:k]) * minor(Z, a[1:], a[1:])
           - minor(Z, a[1:], a[:k]) * minor(Z, a[:k], a[1:]))
    return lhs - rhs


def bazin_check(Z: Matrix, A: Sequence, B: Sequence, C: Sequence):
    """det[ξ^{1..n}_{(a_i) ⊔ (B∖b_j) ⊔ C}] = (-1)^{m(m-1)/2} ξ_{A⊔C} ξ_{B⊔C}^{m-1}."""
    n = Z.shape[0]
    m = len(A)
    if len(B) != m or len(C) != n - m:
        raise MatrixError("Bazin needs |A| = |B| = m and |C| = n - m")
    rows = list(range(1, n + 1))

    def xi(cols):
        return minor(Z, rows, list(cols))

    entries = [[xi([A[i]] + [b for t, b in enumerate(B) if t != j] + list(C)) for j in range(m)]
               for i in range(m)]
    sign = -1 if (m * (m - 1) // 2) % 2 else 1
    return det(entries) - sign * xi(list(A) + list(C)) * xi(list(B) + list(C)) ** (m - 1)


def plucker_terms(first: Sequence[Hashable], second: Sequence[Hashable], t_pos: Sequence[int]):
    """Row sequences of every term of the Plücker relation.

    ``first``/``second`` are the two row blocks (as labels, in order); ``t_pos``
    are the 1-based positions in ``second`` whose rows are exchanged.  Yields
    ``(s_pos, rows_a, rows_b)`` where ``rows_a`` is ``first`` with position
    ``s_i`` replaced by ``second[t_i]`` and ``rows_b`` the reverse exchange.
    """
    n = len(first)
    ell = len(t_pos)
    for s_pos in combinations(range(1, n + 1), ell):
        ra, rb = list(first), list(second)
        for s, t in zip(s_pos, t_pos):
            ra[s - 1], rb[t - 1] = second[t - 1], first[s - 1]
        yield s_pos, ra, rb


def plucker_check(Z: Matrix, t_rows: Sequence[int], first=None, second=None):
    """ξ^{first} ξ^{second} − Σ_s ξ^{σ(first)} ξ^{σ(second)} over the exchanged rows."""
    nrows, n = Z.shape
    first = list(first) if first is not None else list(range(1, n + 1))
    second = list(second) if second is not None else [f"{i}'" for i in range(1, n + 1)]
    if len(first) != n or len(second) != n:
        raise MatrixError("Plücker blocks must each have n rows")
    if not t_rows or list(t_rows) != sorted(set(t_rows)) or t_rows[0] < 1 or t_rows[-1] > n:
        raise MatrixError("t_rows must be strictly increasing within 1..n")
    cols = Z.col_labels
    lhs = minor(Z, first, cols) * minor(Z, second, cols)
    rhs = _sum(minor(Z, ra, cols) * minor(Z, rb, cols) for _, ra, rb in plucker_terms(first, second, t_rows))
    return lhs - rhs


def stacked(top: Matrix, bottom: Matrix) -> Matrix:
    """Stack two n×n matrices into a 2n×n matrix with rows 1..n, 1'..n'."""
    n = top.shape[0]
    labels = list(range(1, n + 1)) + [f"{i}'" for i in range(1, n + 1)]
    return Matrix(top.rows + bottom.rows, labels)


def box_compose(a: Callable[[int, int], object] | Matrix, b: Callable[[int, int], object] | Matrix,
                n: int | None = None, a_ext: Callable[[int], object] | None = None,
                b_ext: Callable[[int], object] | None = None, one=1, zero=0) -> Matrix:
    """A □ B with rows L, R, 1..n, (1,'), ..., (n,') and columns 1..n+1.

    ``a``/``b`` are entry rules ``f(i, j)`` valid on the extended range
    (j = n+1 for A, j = 0 for B), or matrices plus the extension rules
    ``a_ext(i) = a_{i,n+1}``, ``b_ext(i) = b_{i,0}``.
    """
    if isinstance(a, Matrix):
        A = a
        n = A.shape[0]
        if a_ext is None:
            raise MatrixError("missing extension rule for a_{i,n+1}")
        a = lambda i, j, A=A: A.entry(i, j) if j <= n else a_ext(i)
    if isinstance(b, Matrix):
        B = b
        n = B.shape[0]
        if b_ext is None:
            raise MatrixError("missing extension rule for b_{i,0}")
        b = lambda i, j, B=B: B.entry(i, j) if j >= 1 else b_ext(i)
    if n is None:
        raise MatrixError("size n required for entry rules")
    rows = [[one if j == 1 else zero for j in range(1, n + 2)],
            [(one if n % 2 == 0 else -one) if j == n + 1 else zero for j in range(1, n + 2)]]
    rows += [[a(i, j) for j in range(1, n + 2)] for i in range(1, n + 1)]
    rows += [[b(i, j - 1) for j in range(1, n + 2)] for i in range(1, n + 1)]
    labels = ["L", "R"] + list(range(1, n + 1)) + [(i, "'") for i in range(1, n + 1)]
    return Matrix(rows, labels)


# Identity verdicts -------------------------------------------------------------

@dataclass
class Verdict:
    result: str  # "proved-equal" | "equal-with-confidence" | "unequal"
    epsilon: float = 0.0
    witness: dict | None = None
    trials: int = 0
    seed: int | None = None

    @property
    def ok(self) -> bool:
        return self.result != "unequal"


def identity_verdict(lhs, rhs, mode: str = "exact", seed: int = 0, trials: int = 20,
                     prime: int = DEFAULT_PRIME) -> Verdict:
    if isinstance(lhs, SparsePoly) and isinstance(rhs, SparsePoly) and lhs.reg is not rhs.reg:
        raise RegistryError("sides use different registries")
    diff = lhs - rhs
    if mode == "exact":
        if diff == 0:
            return Verdict("proved-equal")
        return Verdict("unequal", witness={"residual": str(diff)})
    if mode != "modular":
        raise ValueError(f"unknown mode {mode!r}")
    if not isinstance(diff, SparsePoly):
        ok = PrimeFieldElem(diff, prime) == 0
        return Verdict("equal-with-confidence" if ok else "unequal", 0.0, None if ok else {}, trials, seed)
    rng = random.Random(seed)
    names = sorted(diff.variables(), key=repr)
    deg = max(diff.total_degree(), 1)
    for _ in range(trials):
        point = {nm: PrimeFieldElem(rng.randrange(prime), prime) for nm in names}
        val = diff.evaluate(point, one=PrimeFieldElem(1, prime))
        if val != 0:
            return Verdict("unequal", witness={repr(k): v.v for k, v in point.items()}, trials=trials, seed=seed)
    return Verdict("equal-with-confidence", (deg / prime) ** trials, None, trials, seed)
