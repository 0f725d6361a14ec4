"""Partitions, skew shapes, Frobenius/Maya encodings, borders and tableaux.

Cells are 1-based ``(row, column)`` pairs.  Partitions index past their
length as 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

Cell = tuple[int, int]


class ShapeError(ValueError):
    """Raised for malformed partitions or undefined shape operations."""


class Partition(tuple):
    """Weakly decreasing tuple of positive integers (zeros stripped)."""

    def __new__(cls, parts: Sequence[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for i, p in enumerate(parts):
            if p < 0:
                raise ShapeError(f"negative part in {parts}")
            if i and p > parts[i - 1]:
                raise ShapeError(f"not weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if text in ("", "0", "()", "-"):
            return cls(())
        return cls(int(t) for t in text.split(","))

    def part(self, i: int) -> int:
        """λ_i with 1-based i; 0 beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def length(self) -> int:
        return len(self)

    def weight(self) -> int:
        return sum(self)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def contains(self, other: Sequence[int]) -> bool:
        return all(self.part(i + 1) >= x for i, x in enumerate(other))

    def cells(self) -> list[Cell]:
        return [(i + 1, j + 1) for i, p in enumerate(self) for j in range(p)]

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    def __str__(self) -> str:
        return ",".join(map(str, self)) if self else "0"


def is_partition(seq: Sequence[int]) -> bool:
    """True when ``seq`` is weakly decreasing and non-negative."""
    return all(x >= 0 for x in seq) and all(
        seq[i] >= seq[i + 1] for i in range(len(seq) - 1))


def conjugate(lam: Sequence[int]) -> Partition:
    lam = Partition(lam)
    if not lam:
        return Partition(())
    return Partition(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = Partition(())

    def __post_init__(self):
        object.__setattr__(self, "outer", Partition(self.outer))
        object.__setattr__(self, "inner", Partition(self.inner))
        if not self.outer.contains(self.inner):
            raise ShapeError(f"{self.inner} is not contained in {self.outer}")

    @classmethod
    def parse(cls, text: str) -> "SkewShape":
        if "/" in text:
            a, b = text.split("/", 1)
            return cls(Partition.parse(a), Partition.parse(b))
        return cls(Partition.parse(text))

    @classmethod
    def try_make(cls, outer: Sequence[int], inner: Sequence[int] = ()) -> "SkewShape | None":
        """The skew shape, or None if ``outer/inner`` is not a skew partition."""
        if not (is_partition(outer) and is_partition(inner)):
            return None
        o, i = Partition(outer), Partition(inner)
        if not o.contains(i):
            return None
        return cls(o, i)

    def cells(self) -> list[Cell]:
        return [(i, j) for i in range(1, len(self.outer) + 1)
                for j in range(self.inner.part(i) + 1, self.outer.part(i) + 1)]

    def size(self) -> int:
        return self.outer.weight() - self.inner.weight()

    def conjugate(self) -> "SkewShape":
        return SkewShape(conjugate(self.outer), conjugate(self.inner))

    def is_empty(self) -> bool:
        return self.size() == 0

    def __str__(self) -> str:
        return f"{self.outer}/{self.inner}" if self.inner else str(self.outer)


def content(cell: Cell) -> int:
    return cell[1] - cell[0]


def as_skew(shape) -> SkewShape:
    if isinstance(shape, SkewShape):
        return shape
    if isinstance(shape, str):
        return SkewShape.parse(shape)
    shape = tuple(shape)
    if len(shape) == 2 and all(isinstance(x, (tuple, list)) for x in shape):
        return SkewShape(Partition(shape[0]), Partition(shape[1]))
    return SkewShape(Partition(shape))


# Frobenius coordinates ------------------------------------------------------

@dataclass(frozen=True)
class FrobeniusCoords:
    alpha: tuple[int, ...]
    beta: tuple[int, ...]

    def __post_init__(self):
        if len(self.alpha) != len(self.beta):
            raise ShapeError("alpha and beta differ in length")
        for seq in (self.alpha, self.beta):
            if any(x < 0 for x in seq) or any(
                    seq[i] <= seq[i + 1] for i in range(len(seq) - 1)):
                raise ShapeError(f"not strictly decreasing non-negative: {seq}")

    @property
    def rank(self) -> int:
        return len(self.alpha)


def frobenius(lam: Sequence[int]) -> FrobeniusCoords:
    lam = Partition(lam)
    lc = conjugate(lam)
    p = sum(1 for i in range(1, len(lam) + 1) if lam.part(i) >= i)
    return FrobeniusCoords(tuple(lam.part(i) - i for i in range(1, p + 1)),
                           tuple(lc.part(i) - i for i in range(1, p + 1)))


def from_frobenius(alpha: Sequence[int], beta: Sequence[int]) -> Partition:
    fc = FrobeniusCoords(tuple(alpha), tuple(beta))
    p = fc.rank
    if p == 0:
        return Partition(())
    rows = [fc.alpha[i] + i + 1 for i in range(p)]
    # rows below the diagonal come from the leg lengths
    below = [sum(1 for j in range(p) if fc.beta[j] + j + 1 >= i) for i in range(p + 1, p + fc.beta[0] + 2)]
    parts = rows + [b for b in below if b > 0]
    return Partition(parts)


# Maya diagrams --------------------------------------------------------------

@dataclass(frozen=True)
class MayaDiagram:
    indices: tuple[int, ...]
    r: int
    N: int

    def complement(self) -> tuple[int, ...]:
        s = set(self.indices)
        return tuple(i for i in range(1, self.N + 1) if i not in s)


def maya(lam: Sequence[int], r: int, N: int) -> MayaDiagram:
    lam = Partition(lam)
    if len(lam) > r or lam.part(1) > N - r:
        raise ShapeError(f"{lam} does not fit the ({N - r}^{r}) rectangle")
    return MayaDiagram(tuple(lam.part(r + 1 - a) + a for a in range(1, r + 1)), r, N)


def maya_complement_rule(lam: Sequence[int], r: int, N: int) -> tuple[int, ...]:
    """{r + a - λ'_a : 1 <= a <= N - r}, the complement by the conjugate rule."""
    lc = conjugate(lam)
    return tuple(sorted(r + a - lc.part(a) for a in range(1, N - r + 1)))


def partition_from_maya(indices: Sequence[int]) -> Partition:
    r = len(indices)
    return Partition(indices[r - i] - (r + 1 - i) for i in range(1, r + 1))


# Corners, borders, add/rem ------------------------------------------------

def corners(shape) -> list[Cell]:
    sh = as_skew(shape)
    cells = set(sh.cells())
    return sorted(c for c in cells
                  if (c[0] + 1, c[1]) not in cells and (c[0], c[1] + 1) not in cells)


@dataclass(frozen=True)
class CornerDecomposition:
    """λ = (m_1^{r_1} m_2^{r_2-r_1} ...), with m decreasing and r increasing."""
    m: tuple[int, ...]
    r: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.m)

    def m_at(self, i: int) -> int:
        return self.m[i - 1] if 1 <= i <= self.n else 0

    def r_at(self, i: int) -> int:
        return self.r[i - 1] if 1 <= i <= self.n else 0

    def partition(self) -> Partition:
        parts, prev = [], 0
        for mi, ri in zip(self.m, self.r):
            parts += [mi] * (ri - prev)
            prev = ri
        return Partition(parts)


def corner_decomposition(lam: Sequence[int]) -> CornerDecomposition:
    cs = corners(Partition(lam))
    return CornerDecomposition(tuple(j for _, j in cs), tuple(i for i, _ in cs))


def column_heights(lam: Sequence[int]) -> list[int]:
    """Distinct column heights in increasing order (r_1 < ... < r_n)."""
    return list(corner_decomposition(lam).r)


def _border_order(cells) -> list[Cell]:
    # top-right to bottom-left
    return sorted(cells, key=lambda c: (c[0], -c[1]))


def outside_border(lam: Sequence[int]) -> list[Cell]:
    lam = Partition(lam)
    if not lam:
        raise ShapeError("border of the empty partition")
    ell, l1 = len(lam), lam[0]

    def inside_ext(i, j):
        if i == 0:
            return 0 <= j <= l1
        if j == 0:
            return 0 <= i <= ell
        return lam.part(i) >= j

    cells = [(i, j) for i in range(1, ell + 2) for j in range(1, l1 + 2)
             if lam.part(i) < j and inside_ext(i - 1, j - 1)]
    return _border_order(cells)


def inside_border(lam: Sequence[int]) -> list[Cell]:
    lam = Partition(lam)
    if not lam:
        raise ShapeError("border of the empty partition")
    cells = [(i, j) for (i, j) in lam.cells() if lam.part(i + 1) < j + 1]
    return _border_order(cells)


def borders(lam: Sequence[int]) -> tuple[list[Cell], list[Cell]]:
    return outside_border(lam), inside_border(lam)


def _substrip(strip: list[Cell], u: Cell, v: Cell) -> list[Cell]:
    if u not in strip or v not in strip:
        raise ShapeError(f"{u} or {v} not on the border strip")
    a, b = strip.index(u), strip.index(v)
    if a > b:
        raise ShapeError(f"{u} does not precede {v} on the border")
    return strip[a:b + 1]


def _apply_cells(lam: Partition, cells: list[Cell], sign: int) -> Partition:
    rows = list(lam) + [0] * (max((i for i, _ in cells), default=0))
    for i, _ in cells:
        rows[i - 1] += sign
    if not is_partition(rows):
        raise ShapeError("result is not a Young diagram")
    new = Partition(rows)
    target = set(lam.cells())
    target = target | set(cells) if sign > 0 else target - set(cells)
    if set(new.cells()) != target:
        raise ShapeError("result is not a Young diagram")
    return new


def add_cells(lam: Sequence[int], u: Cell, v: Cell) -> Partition:
    """add^u_v: adjoin the outside-border substrip from u to v."""
    lam = Partition(lam)
    return _apply_cells(lam, _substrip(outside_border(lam), u, v), +1)


def rem_cells(lam: Sequence[int], u: Cell, v: Cell) -> Partition:
    """rem^u_v: delete the inside-border substrip from u to v."""
    lam = Partition(lam)
    return _apply_cells(lam, _substrip(inside_border(lam), u, v), -1)


def add_rem(lam: Sequence[int], kind: str, ps: Sequence[int], qs: Sequence[int]) -> Partition:
    """Compose add^{p_i}_{q_i} (or rem) right to left, using λ's own corners."""
    lam = Partition(lam)
    cd = corner_decomposition(lam)
    t = len(ps)
    if t == 0 or len(qs) != t:
        raise ShapeError("operator index lists must be non-empty and of equal length")
    if any(ps[i] >= ps[i + 1] for i in range(t - 1)) or any(
            qs[i] <= qs[i + 1] for i in range(t - 1)):
        raise ShapeError("need p_1 < ... < p_t and q_1 > ... > q_t")
    if ps[0] < 1 or qs[0] > cd.n or ps[-1] > qs[-1]:
        raise ShapeError("need 1 <= p_1, p_t <= q_t, q_1 <= n")
    cur = lam
    for p, q in reversed(list(zip(ps, qs))):
        if kind == "add":
            u = (cd.r_at(p) + 1, cd.m_at(p))
            v = (cd.r_at(q) + 1, cd.m_at(q + 1) + 1)
            cur = add_cells(cur, u, v)
        elif kind == "rem":
            u = (cd.r_at(p), cd.m_at(p))
            v = (cd.r_at(q), cd.m_at(q + 1) + 1)
            cur = rem_cells(cur, u, v)
        else:
            raise ShapeError(f"unknown kind {kind!r}")
    return cur


def operator_tuples(n: int, d: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All (p, q) with 1 <= p_1<...<p_t <= d <= q_t<...<q_1 <= n, t <= min(d, n-d+1)."""
    from itertools import combinations
    out = []
    for t in range(1, min(d, n - d + 1) + 1):
        for ps in combinations(range(1, d + 1), t):
            for qs in combinations(range(d, n + 1), t):
                out.append((ps, tuple(reversed(qs))))
    return out


def shift_rows(lam: Sequence[int], a: int, ell: int) -> Partition:
    """λ ± (|a|^ℓ); the result must again be a partition."""
    lam = Partition(lam)
    if ell < 0:
        raise ShapeError("negative row count")
    rows = [lam.part(i) + (a if i <= ell else 0) for i in range(1, max(len(lam), ell) + 1)]
    if not is_partition(rows):
        raise ShapeError(f"{lam} {'+' if a >= 0 else '-'} ({abs(a)}^{ell}) is undefined")
    return Partition(rows)


# Rectangles -----------------------------------------------------------------

def rectangle(p: int, q: int, l: int = 0, k: int = 0) -> Partition | None:
    """[p|q]^l_k = ((q+1)^l, q^{p-l}, k); None when the parameters are out of range."""
    if p < 0 or q < 0 or l < 0 or l > p or k < 0 or k > q:
        return None
    parts = [q + 1] * l + [q] * (p - l) + ([k] if k else [])
    return Partition(parts) if is_partition(parts) else None


# Tableaux -------------------------------------------------------------------

@dataclass(frozen=True)
class Tableau:
    shape: SkewShape
    entries: tuple[tuple[Cell, int], ...]

    def as_dict(self) -> dict[Cell, int]:
        return dict(self.entries)

    def rows(self) -> list[list[int]]:
        d = self.as_dict()
        return [[d[(i, j)] for j in range(self.shape.inner.part(i) + 1, self.shape.outer.part(i) + 1)]
                for i in range(1, len(self.shape.outer) + 1)]


def ssyt_iter(shape, M: int) -> Iterator[Tableau]:
    """Semistandard fillings with entries in [M], in lexicographic order of the cell list."""
    sh = as_skew(shape)
    cells = sh.cells()
    n = len(cells)
    if n == 0:
        yield Tableau(sh, ())
        return
    if M <= 0:
        return
    pos = {c: k for k, c in enumerate(cells)}
    left = [pos.get((i, j - 1)) for (i, j) in cells]
    up = [pos.get((i - 1, j)) for (i, j) in cells]
    vals = [0] * n

    def lower(k):
        lo = 1
        if left[k] is not None:
            lo = max(lo, vals[left[k]])
        if up[k] is not None:
            lo = max(lo, vals[up[k]] + 1)
        return lo

    k = 0
    vals[0] = lower(0) - 1
    while k >= 0:
        vals[k] += 1
        if vals[k] > M:
            k -= 1
            continue
        if k == n - 1:
            yield Tableau(sh, tuple(zip(cells, vals)))
            continue
        k += 1
        vals[k] = lower(k) - 1


def horizontal_strip_transitions(shape) -> dict[Partition, list[tuple[Partition, tuple[Cell, ...]]]]:
    """For each ν with μ ⊆ ν ⊆ λ, the ν' ⊇ ν (within λ) with ν'/ν a horizontal strip."""
    sh = as_skew(shape)
    lam, mu = sh.outer, sh.inner
    n = len(lam)

    def between(lo, hi, i=0, acc=()):
        if i == n:
            yield Partition(acc)
            return
        top = hi[i] if i == 0 else min(hi[i], acc[i - 1])
        for x in range(lo[i], top + 1):
            yield from between(lo, hi, i + 1, acc + (x,))

    lo = [mu.part(i) for i in range(1, n + 1)]
    hi = [lam.part(i) for i in range(1, n + 1)]
    states = list(between(lo, hi))
    trans = {}
    for nu in states:
        out = []
        nlo = [nu.part(i) for i in range(1, n + 1)]
        nhi = [min(lam.part(i), nu.part(i - 1)) if i > 1 else lam.part(1) for i in range(1, n + 1)]
        for nu2 in between(nlo, nhi):
            cells = tuple((i, j) for i in range(1, n + 1)
                          for j in range(nu.part(i) + 1, nu2.part(i) + 1))
            out.append((nu2, cells))
        trans[nu] = out
    return trans


def strip_sum(shape, M: int, weight, one, zero):
    """Σ over SSYT_M of Π weight(cell, entry), by a horizontal-strip transfer DP.

    ``weight(cell, k)`` returns a ring element; ``one``/``zero`` are the ring units.
    """
    sh = as_skew(shape)
    if sh.is_empty():
        return one
    trans = horizontal_strip_transitions(sh)
    state = {sh.inner: one}
    for k in range(1, M + 1):
        new = {}
        for nu, val in state.items():
            for nu2, cells in trans[nu]:
                w = val
                for c in cells:
                    w = w * weight(c, k)
                new[nu2] = new[nu2] + w if nu2 in new else w
        state = new
    return state.get(sh.outer, zero)
