"""Sparse multivariate polynomials with exact coefficients.

A monomial is packed into one Python int: variable ``v`` owns bits
``[16 v, 16 v + 16)``.  Bit 15 of every field is kept clear so that
field-wise divisibility can be tested with a single subtraction.
"""
from __future__ import annotations

import hashlib
from fractions import Fraction
from typing import Callable, Hashable, Iterable, Mapping

BITS = 16
FIELD = (1 << BITS) - 1
MAX_EXP = (1 << (BITS - 1)) - 1


class RegistryError(ValueError):
    pass


class VarRegistry:
    """Append-only map between variable names and bit-field slots."""

    def __init__(self):
        self._index: dict[Hashable, int] = {}
        self._names: list[Hashable] = []
        self._guard = 0

    def index(self, name: Hashable) -> int:
        i = self._index.get(name)
        if i is None:
            i = len(self._names)
            self._index[name] = i
            self._names.append(name)
            self._guard |= 1 << (BITS * i + BITS - 1)
        return i

    def name(self, i: int) -> Hashable:
        return self._names[i]

    def __len__(self):
        return len(self._names)

    def __contains__(self, name):
        return name in self._index

    @property
    def guard(self) -> int:
        return self._guard


DEFAULT_REGISTRY = VarRegistry()


def unpack(key: int) -> dict[int, int]:
    out = {}
    v = 0
    while key:
        e = key & FIELD
        if e:
            out[v] = e
        key >>= BITS
        v += 1
    return out


def pack(exps: Mapping[int, int]) -> int:
    key = 0
    for v, e in exps.items():
        if e < 0 or e > MAX_EXP:
            raise OverflowError(f"exponent {e} out of range")
        key |= e << (BITS * v)
    return key


def format_name(name: Hashable) -> str:
    if isinstance(name, tuple) and len(name) == 3 and name[0] == "h":
        return f"h^({name[1]})_{name[2]}"
    if isinstance(name, tuple):
        return f"{name[0]}[{','.join(map(str, name[1:]))}]"
    return str(name)


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


class SparsePoly:
    """Polynomial as ``{packed monomial: coefficient}`` with no zero coefficients."""

    __slots__ = ("terms", "reg", "maxe")

    def __init__(self, terms: dict | None = None, reg: VarRegistry = DEFAULT_REGISTRY, maxe: int | None = None):
        self.reg = reg
        self.terms = {k: c for k, c in (terms or {}).items() if c != 0}
        if maxe is None:
            maxe = max((max(unpack(k).values(), default=0) for k in self.terms), default=0)
        self.maxe = maxe

    # constructors
    @classmethod
    def var(cls, name: Hashable, reg: VarRegistry = DEFAULT_REGISTRY) -> "SparsePoly":
        return cls({1 << (BITS * reg.index(name)): 1}, reg, 1)

    @classmethod
    def constant(cls, c, reg: VarRegistry = DEFAULT_REGISTRY) -> "SparsePoly":
        return cls({0: _norm(c)} if c != 0 else {}, reg, 0)

    def const(self, c) -> "SparsePoly":
        return SparsePoly.constant(c, self.reg)

    # arithmetic
    def _lift(self, other) -> "SparsePoly":
        if isinstance(other, SparsePoly):
            if other.reg is not self.reg:
                raise RegistryError("polynomials live in different registries")
            return other
        if isinstance(other, (int, Fraction)):
            return self.const(other)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        t = dict(self.terms)
        for k, c in o.terms.items():
            s = t.get(k, 0) + c
            if s:
                t[k] = _norm(s)
            else:
                t.pop(k, None)
        return SparsePoly._raw(t, self.reg, max(self.maxe, o.maxe))

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly._raw({k: -c for k, c in self.terms.items()}, self.reg, self.maxe)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return SparsePoly._raw({}, self.reg, 0)
            return SparsePoly._raw({k: _norm(c * other) for k, c in self.terms.items()}, self.reg, self.maxe)
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if self.maxe + o.maxe > MAX_EXP:
            raise OverflowError("exponent overflow in product")
        a, b = self.terms, o.terms
        if len(a) < len(b):
            a, b = b, a
        t: dict[int, object] = {}
        get = t.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                t[k] = get(k, 0) + ca * cb
        t = {k: _norm(c) for k, c in t.items() if c != 0}
        return SparsePoly._raw(t, self.reg, self.maxe + o.maxe)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        out = self.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    @classmethod
    def _raw(cls, terms, reg, maxe):
        p = cls.__new__(cls)
        p.terms = terms
        p.reg = reg
        p.maxe = maxe
        return p

    # predicates
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.const(other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def constant_term(self):
        return self.terms.get(0, 0)

    def __len__(self):
        return len(self.terms)

    def total_degree(self) -> int:
        return max((sum(unpack(k).values()) for k in self.terms), default=0)

    def variables(self) -> set:
        out = set()
        for k in self.terms:
            out.update(self.reg.name(v) for v in unpack(k))
        return out

    # division
    def divexact(self, other) -> "SparsePoly":
        """Exact quotient in lex order; raises if ``other`` does not divide."""
        o = self._lift(other)
        if not o.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        guard = self.reg.guard
        lb = max(o.terms)
        cb = o.terms[lb]
        rem = dict(self.terms)
        q: dict[int, object] = {}
        while rem:
            lr = max(rem)
            d = (lr | guard) - lb
            if d < 0 or (d & guard) != guard:
                raise ArithmeticError("polynomial division is not exact")
            d ^= guard
            c = Fraction(rem[lr]) / cb
            c = _norm(c)
            q[d] = c
            for k, ck in o.terms.items():
                kk = k + d
                s = rem.get(kk, 0) - c * ck
                if s:
                    rem[kk] = s
                else:
                    rem.pop(kk, None)
        return SparsePoly._raw(q, self.reg, self.maxe)

    # evaluation
    def evaluate(self, point: Mapping[Hashable, object] | Callable[[Hashable], object], one=1):
        """Substitute values for every variable; missing names raise ``KeyError``."""
        get = point if callable(point) else point.__getitem__
        cache: dict[int, object] = {}
        total = one * 0
        for k, c in self.terms.items():
            val = one * c
            for v, e in unpack(k).items():
                if v not in cache:
                    cache[v] = get(self.reg.name(v))
                val = val * cache[v] ** e
            total = total + val
        return total

    def substitute(self, mapping: Mapping[Hashable, "SparsePoly | int | Fraction"]) -> "SparsePoly":
        """Replace some variables by polynomials or scalars."""
        out = self.const(0)
        for k, c in self.terms.items():
            term = self.const(c)
            rest = 0
            for v, e in unpack(k).items():
                name = self.reg.name(v)
                if name in mapping:
                    term = term * (mapping[name] ** e if isinstance(mapping[name], SparsePoly)
                                   else self.const(mapping[name] ** e))
                else:
                    rest |= e << (BITS * v)
            out = out + term * SparsePoly._raw({rest: 1}, self.reg, self.maxe)
        return out

    # presentation
    def sorted_terms(self) -> list[tuple[list[tuple[str, int]], object]]:
        rows = []
        for k, c in self.terms.items():
            mono = sorted((format_name(self.reg.name(v)), e) for v, e in unpack(k).items())
            rows.append((mono, c))
        rows.sort(key=lambda t: ([(n, -e) for n, e in t[0]], str(t[1])))
        return rows

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, c in self.sorted_terms():
            m = "*".join(n if e == 1 else f"{n}^{e}" for n, e in mono)
            if not m:
                parts.append(str(c))
            elif c == 1:
                parts.append(m)
            elif c == -1:
                parts.append("-" + m)
            else:
                parts.append(f"{c}*{m}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__

    def to_json(self) -> list:
        return [[[[n, e] for n, e in mono], str(c)] for mono, c in self.sorted_terms()]

    def digest(self) -> str:
        return hashlib.sha256(str(self).encode()).hexdigest()[:16]


def poly_sum(items: Iterable, reg: VarRegistry = DEFAULT_REGISTRY) -> SparsePoly:
    acc: dict[int, object] = {}
    for p in items:
        if not isinstance(p, SparsePoly):
            p = SparsePoly.constant(p, reg)
        for k, c in p.terms.items():
            acc[k] = acc.get(k, 0) + c
    return SparsePoly({k: _norm(c) for k, c in acc.items()}, reg)
