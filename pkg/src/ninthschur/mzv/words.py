"""Hoffman algebra words with the stuffle and shuffle products.

A z-word is a tuple of positive integers (k_1, ..., k_d) standing for
z_{k_1}...z_{k_d}; an e-word is a tuple over {0, 1} for e_0/e_1.  The map
z_k ↦ e_1 e_0^{k-1} is the only conversion between the two.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Mapping


class AlphabetError(ValueError):
    pass


def to_eword(k: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for x in k:
        if x < 1:
            raise AlphabetError(f"z-letters are positive integers, got {x}")
        out += [1] + [0] * (x - 1)
    return tuple(out)


def to_zword(e: Iterable[int]) -> tuple[int, ...]:
    """Inverse of :func:`to_eword`; the word must lie in 𝔥¹ (start with e_1)."""
    out: list[int] = []
    for x in e:
        if x == 1:
            out.append(1)
        elif x == 0:
            if not out:
                raise AlphabetError("word does not start with e1")
            out[-1] += 1
        else:
            raise AlphabetError(f"e-letters are 0 or 1, got {x}")
    return tuple(out)


class WordPoly:
    """Finite ℚ-linear combination of words over one alphabet ('z' or 'e')."""

    __slots__ = ("terms", "alphabet")

    def __init__(self, terms: Mapping[tuple, object] | None = None, alphabet: str = "z"):
        if alphabet not in ("z", "e"):
            raise AlphabetError(f"unknown alphabet {alphabet!r}")
        self.alphabet = alphabet
        self.terms: dict[tuple, Fraction] = {}
        for w, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                self.terms[tuple(w)] = c

    @classmethod
    def word(cls, w, alphabet: str = "z", coeff=1) -> "WordPoly":
        return cls({tuple(w): coeff}, alphabet)

    def _check(self, other: "WordPoly"):
        if self.alphabet != other.alphabet:
            raise AlphabetError("alphabet mismatch")

    def __add__(self, other: "WordPoly") -> "WordPoly":
        self._check(other)
        t = dict(self.terms)
        for w, c in other.terms.items():
            t[w] = t.get(w, 0) + c
        return WordPoly(t, self.alphabet)

    def __neg__(self) -> "WordPoly":
        return WordPoly({w: -c for w, c in self.terms.items()}, self.alphabet)

    def __sub__(self, other: "WordPoly") -> "WordPoly":
        return self + (-other)

    def scale(self, c) -> "WordPoly":
        return WordPoly({w: c * v for w, v in self.terms.items()}, self.alphabet)

    def concat(self, other: "WordPoly") -> "WordPoly":
        self._check(other)
        t: dict[tuple, Fraction] = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                t[u + v] = t.get(u + v, 0) + a * b
        return WordPoly(t, self.alphabet)

    def is_zero(self) -> bool:
        return not self.terms

    def to_e(self) -> "WordPoly":
        if self.alphabet == "e":
            return self
        return WordPoly({to_eword(w): c for w, c in self.terms.items()}, "e")

    def to_z(self) -> "WordPoly":
        if self.alphabet == "z":
            return self
        return WordPoly({to_zword(w): c for w, c in self.terms.items()}, "z")

    def __eq__(self, other):
        return isinstance(other, WordPoly) and self.alphabet == other.alphabet and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        name = (lambda w: "z" + ".".join(map(str, w))) if self.alphabet == "z" else \
            (lambda w: "".join("e%d" % x for x in w))
        return " + ".join(f"{c}*{name(w) if w else '1'}" for w, c in sorted(self.terms.items()))


@lru_cache(maxsize=None)
def _stuffle_words(u: tuple, v: tuple) -> tuple:
    if not u:
        return ((v, 1),)
    if not v:
        return ((u, 1),)
    acc: dict[tuple, int] = {}
    a, b = u[0], v[0]
    for w, c in _stuffle_words(u[1:], v):
        acc[(a,) + w] = acc.get((a,) + w, 0) + c
    for w, c in _stuffle_words(u, v[1:]):
        acc[(b,) + w] = acc.get((b,) + w, 0) + c
    for w, c in _stuffle_words(u[1:], v[1:]):
        acc[(a + b,) + w] = acc.get((a + b,) + w, 0) + c
    return tuple(acc.items())


@lru_cache(maxsize=None)
def _shuffle_words(u: tuple, v: tuple) -> tuple:
    if not u:
        return ((v, 1),)
    if not v:
        return ((u, 1),)
    acc: dict[tuple, int] = {}
    for w, c in _shuffle_words(u[1:], v):
        acc[(u[0],) + w] = acc.get((u[0],) + w, 0) + c
    for w, c in _shuffle_words(u, v[1:]):
        acc[(v[0],) + w] = acc.get((v[0],) + w, 0) + c
    return tuple(acc.items())


def _bilinear(p: WordPoly, q: WordPoly, f) -> dict:
    t: dict[tuple, Fraction] = {}
    for u, a in p.terms.items():
        for v, b in q.terms.items():
            for w, c in f(u, v):
                t[w] = t.get(w, 0) + a * b * c
    return t


def stuffle(p: WordPoly, q: WordPoly) -> WordPoly:
    """Harmonic product on z-words: z_a u ∗ z_b v = z_a(u∗z_b v) + z_b(z_a u∗v) + z_{a+b}(u∗v)."""
    if p.alphabet != "z" or q.alphabet != "z":
        raise AlphabetError("stuffle acts on z-words")
    return WordPoly(_bilinear(p, q, _stuffle_words), "z")


def shuffle(p: WordPoly, q: WordPoly) -> WordPoly:
    """Shuffle product; z-word inputs are shuffled as e-words and converted back."""
    if p.alphabet != q.alphabet:
        raise AlphabetError("alphabet mismatch")
    out = WordPoly(_bilinear(p.to_e(), q.to_e(), _shuffle_words), "e")
    return out.to_z() if p.alphabet == "z" else out


def power(p: WordPoly, n: int, product) -> WordPoly:
    out = WordPoly.word((), p.alphabet)
    for _ in range(n):
        out = product(out, p)
    return out


def z(*ks: int) -> WordPoly:
    return WordPoly.word(tuple(ks), "z")


def z1z2z1(a: int, c: int) -> tuple[int, ...]:
    """The z-word z_1^a z_2 z_1^c."""
    return (1,) * a + (2,) + (1,) * c


# The two shuffle lemmas as residuals ----------------------------------------------

def lemma_shuffle_residual(a: int, c: int) -> WordPoly:
    """z_1^a z_2 ⧢ z_1^c − Σ_k C(a+c−k+1, c−k) z_1^{a+c−k} z_2 z_1^k."""
    lhs = shuffle(z(*z1z2z1(a, 0)), z(*(1,) * c))
    rhs = WordPoly({z1z2z1(a + c - k, k): comb(a + c - k + 1, c - k) for k in range(c + 1)}, "z")
    return lhs - rhs


def lemma_inverse_residual(a: int, c: int) -> WordPoly:
    """z_1^a z_2 z_1^c − Σ_k (−1)^{c−k}/k! C(a+c−k+1, c−k) z_1^{a+c−k} z_2 ⧢ z_1^{⧢k}."""
    rhs = WordPoly({}, "z")
    z1 = z(1)
    for k in range(c + 1):
        coeff = Fraction((-1) ** (c - k), factorial(k)) * comb(a + c - k + 1, c - k)
        term = shuffle(z(*z1z2z1(a + c - k, 0)), power(z1, k, shuffle))
        rhs = rhs + term.scale(coeff)
    return z(*z1z2z1(a, c)) - rhs
