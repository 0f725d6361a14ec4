"""Labelled matrices over any commutative ring, with minors and determinants."""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Hashable, Sequence

from .fields import exact_div

COFACTOR_MAX = 6


class MatrixError(ValueError):
    pass


class Matrix:
    """Rectangular grid of ring elements with optional row/column labels.

    Labels default to ``1..n``.  Minors are taken by label.
    """

    def __init__(self, rows: Sequence[Sequence], row_labels: Sequence[Hashable] | None = None,
                 col_labels: Sequence[Hashable] | None = None):
        self.rows = [list(r) for r in rows]
        ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != ncols for r in self.rows):
            raise MatrixError("ragged matrix")
        self.row_labels = list(row_labels) if row_labels is not None else list(range(1, len(self.rows) + 1))
        self.col_labels = list(col_labels) if col_labels is not None else list(range(1, ncols + 1))
        if len(self.row_labels) != len(self.rows) or len(self.col_labels) != ncols:
            raise MatrixError("label count mismatch")
        if len(set(self.row_labels)) != len(self.row_labels) or len(set(self.col_labels)) != ncols:
            raise MatrixError("labels must be unique")
        self._rpos = {l: i for i, l in enumerate(self.row_labels)}
        self._cpos = {l: i for i, l in enumerate(self.col_labels)}

    @classmethod
    def from_function(cls, nrows: int, ncols: int, f) -> "Matrix":
        """Entries ``f(i, j)`` with 1-based indices."""
        return cls([[f(i, j) for j in range(1, ncols + 1)] for i in range(1, nrows + 1)])

    @classmethod
    def identity(cls, n: int, one=1, zero=0) -> "Matrix":
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.col_labels)

    def is_square(self) -> bool:
        return self.shape[0] == self.shape[1]

    def __getitem__(self, key):
        i, j = key
        return self.rows[self._rpos[i]][self._cpos[j]]

    def entry(self, i: int, j: int):
        """Entry at 1-based positions regardless of labels."""
        return self.rows[i - 1][j - 1]

    def row_index(self, label) -> int:
        if label not in self._rpos:
            raise MatrixError(f"unknown row label {label!r}")
        return self._rpos[label]

    def col_index(self, label) -> int:
        if label not in self._cpos:
            raise MatrixError(f"unknown column label {label!r}")
        return self._cpos[label]

    def submatrix(self, rows: Sequence, cols: Sequence) -> "Matrix":
        ri = [self.row_index(r) for r in rows]
        ci = [self.col_index(c) for c in cols]
        return Matrix([[self.rows[i][j] for j in ci] for i in ri])

    def transpose(self) -> "Matrix":
        return Matrix([list(c) for c in zip(*self.rows)], self.col_labels, self.row_labels)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        n, k = self.shape
        k2, m = other.shape
        if k != k2:
            raise MatrixError("inner dimensions differ")
        out = []
        for i in range(n):
            row = []
            for j in range(m):
                acc = 0
                for t in range(k):
                    a = self.rows[i][t]
                    if a == 0:
                        continue
                    b = other.rows[t][j]
                    if b == 0:
                        continue
                    acc = acc + a * b
                row.append(acc)
            out.append(row)
        return Matrix(out)

    def map(self, f) -> "Matrix":
        return Matrix([[f(x) for x in r] for r in self.rows], self.row_labels, self.col_labels)

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.rows == other.rows

    def __repr__(self):
        return f"Matrix({self.rows})"


def _det_cofactor(a: list[list]):
    """Laplace expansion row by row, memoised over column subsets."""
    n = len(a)
    layer = {0: 1}
    for i in range(n):
        nxt: dict[int, object] = {}
        row = a[i]
        for mask, val in layer.items():
            for j in range(n):
                if mask >> j & 1:
                    continue
                x = row[j]
                if x == 0:
                    continue
                above = bin(mask >> (j + 1)).count("1")
                term = val * x
                if above & 1:
                    term = -term
                m2 = mask | (1 << j)
                nxt[m2] = nxt[m2] + term if m2 in nxt else term
        layer = {k: v for k, v in nxt.items() if not (v == 0)}
        if not layer:
            return 0
    return layer.get((1 << n) - 1, 0)


def _det_bareiss(a: list[list]):
    """Fraction-free elimination; divisions are exact in any integral domain."""
    n = len(a)
    m = [list(r) for r in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if not (m[i][k] == 0):
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        piv = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * piv - m[i][k] * m[k][j]
                m[i][j] = exact_div(num, prev) if not (num == 0) else 0
            m[i][k] = 0
        prev = piv
    d = m[n - 1][n - 1]
    return d if sign > 0 else -d


def det(M, method: str = "auto"):
    rows = M.rows if isinstance(M, Matrix) else [list(r) for r in M]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise MatrixError("determinant of a non-square matrix")
    if n == 0:
        return 1
    if method == "auto":
        method = "cofactor" if n <= COFACTOR_MAX else "bareiss"
    if method == "cofactor":
        return _det_cofactor(rows)
    if method == "bareiss":
        return _det_bareiss(rows)
    raise MatrixError(f"unknown method {method!r}")


def minor(M: Matrix, rows: Sequence, cols: Sequence, method: str = "auto"):
    """det of the submatrix with rows/columns taken in the given order."""
    if len(rows) != len(cols):
        raise MatrixError("minor needs equally many rows and columns")
    if not rows:
        return 1
    return det(M.submatrix(rows, cols), method)


def sort_sign(seq: Sequence) -> int:
    """Sign of the permutation sorting ``seq``; 0 if it repeats an entry."""
    s = list(seq)
    if len(set(s)) != len(s):
        return 0
    sign = 1
    for i in range(len(s)):
        for j in range(i + 1, len(s)):
            if s[i] > s[j]:
                sign = -sign
    return sign


def inverse(M: Matrix) -> Matrix:
    """Gauss-Jordan inverse over a field (Fraction or prime-field entries)."""
    n, m = M.shape
    if n != m:
        raise MatrixError("inverse of a non-square matrix")
    a = [[Fraction(x) if isinstance(x, int) else x for x in r] + [1 if i == j else 0 for j in range(n)]
         for i, r in enumerate(M.rows)]
    for k in range(n):
        p = next((i for i in range(k, n) if not (a[i][k] == 0)), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        a[k], a[p] = a[p], a[k]
        inv = 1 / a[k][k]
        a[k] = [x * inv for x in a[k]]
        for i in range(n):
            if i != k and not (a[i][k] == 0):
                f = a[i][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return Matrix([r[n:] for r in a])


def gauss_decompose(X: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    """X = X₋ X₀ X₊ (lower unitriangular, diagonal, upper unitriangular)."""
    n, m = X.shape
    if n != m:
        raise MatrixError("Gauss decomposition of a non-square matrix")
    u = [[Fraction(x) if isinstance(x, int) else x for x in r] for r in X.rows]
    low = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for k in range(n):
        if u[k][k] == 0:
            raise ZeroDivisionError(f"leading principal minor of size {k + 1} vanishes")
        for i in range(k + 1, n):
            f = u[i][k] / u[k][k]
            low[i][k] = f
            if not (f == 0):
                u[i] = [x - f * y for x, y in zip(u[i], u[k])]
    diag = [[u[i][i] if i == j else 0 for j in range(n)] for i in range(n)]
    up = [[u[i][j] / u[i][i] if j >= i else 0 for j in range(n)] for i in range(n)]
    return Matrix(low), Matrix(diag), Matrix(up)


def all_subsets(n: int, r: int):
    return combinations(range(1, n + 1), r)
