import random
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ninthschur.exact.fields import DEFAULT_PRIME, PrimeFieldElem, exact_div
from ninthschur.exact.identities import (bazin_check, cauchy_binet_check, desnanot_jacobi_check,
                                         gauss_minor_residuals, identity_verdict, jacobi_complement_check,
                                         plucker_check, stacked)
from ninthschur.exact.matrix import (Matrix, MatrixError, det, gauss_decompose, inverse, minor, sort_sign)
from ninthschur.exact.poly import RegistryError, SparsePoly, VarRegistry, pack, unpack

small = st.integers(-5, 5)


def leibniz(rows):
    n = len(rows)
    total = 0
    for p in permutations(range(n)):
        term = sort_sign(p)
        for i in range(n):
            term *= rows[i][p[i]]
        total += term
    return total


def square(n):
    return st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)


def rand_matrix(rng, n, m=None):
    m = n if m is None else m
    return Matrix([[Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(m)] for _ in range(n)])


# fields -------------------------------------------------------------------------

def test_prime_is_prime_sized():
    assert DEFAULT_PRIME < 2**62
    # Fermat witness for a few bases
    for a in (2, 3, 5, 7, 11):
        assert pow(a, DEFAULT_PRIME - 1, DEFAULT_PRIME) == 1


@given(st.integers(), st.integers(), st.integers(1, 10**6))
def test_prime_field_matches_int_arithmetic(a, b, c):
    p = DEFAULT_PRIME
    x, y = PrimeFieldElem(a), PrimeFieldElem(b)
    assert (x + y).v == (a + b) % p
    assert (x - y).v == (a - b) % p
    assert (x * y).v == (a * b) % p
    assert PrimeFieldElem(Fraction(a, c)) * c == a
    if y:
        assert (x / y) * y == x


def test_prime_field_rejects_mixing_primes_and_zero_inverse():
    with pytest.raises(ValueError):
        PrimeFieldElem(1, 7) + PrimeFieldElem(1, 11)
    with pytest.raises(ZeroDivisionError):
        PrimeFieldElem(0).inverse()
    with pytest.raises(ZeroDivisionError):
        PrimeFieldElem(Fraction(1, 7), 7)


def test_exact_div():
    assert exact_div(Fraction(6), 3) == 2
    x = SparsePoly.var("a")
    assert exact_div(x * x - 1, x - 1) == x + 1


# matrices ------------------------------------------------------------------------

@given(square(4))
def test_det_methods_agree_with_leibniz(rows):
    ref = leibniz(rows)
    assert det(rows, "cofactor") == ref
    assert det(rows, "bareiss") == ref


@given(st.integers(0, 10_000))
def test_bareiss_large_fraction_matrix(seed):
    rng = random.Random(seed)
    A = rand_matrix(rng, 7)
    assert det(A, "bareiss") == det(A, "cofactor")


def test_det_edge_cases():
    assert det([]) == 1
    assert det([[0, 1], [1, 0]]) == -1
    with pytest.raises(MatrixError):
        det([[1, 2]])
    with pytest.raises(MatrixError):
        det([[1]], "nope")


def test_labels_and_minor():
    M = Matrix([[1, 2, 3], [4, 5, 6], [7, 8, 10]], row_labels=["a", "b", "c"])
    assert M.entry(2, 3) == 6
    assert M.row_index("b") == 1
    assert M["b", 3] == 6
    assert minor(M, ["a", "c"], [1, 3]) == 1 * 10 - 3 * 7
    assert minor(M, [], []) == 1
    with pytest.raises(MatrixError):
        Matrix([[1, 2], [3]])
    with pytest.raises(MatrixError):
        Matrix([[1]], row_labels=["x", "y"])


def test_sort_sign():
    assert sort_sign([1, 2, 3]) == 1
    assert sort_sign([2, 1, 3]) == -1
    assert sort_sign([3, 1, 2]) == 1
    assert sort_sign([1, 1]) == 0


@given(st.integers(0, 10_000))
def test_inverse_and_gauss(seed):
    rng = random.Random(seed)
    A = rand_matrix(rng, 4)
    if det(A) == 0:
        return
    assert A @ inverse(A) == Matrix.identity(4)
    lead_ok = all(minor(A, range(1, k + 1), range(1, k + 1)) != 0 for k in range(1, 5))
    if lead_ok:
        L, D, U = gauss_decompose(A)
        assert L @ D @ U == A
        assert all(L.entry(i, i) == 1 and U.entry(i, i) == 1 for i in range(1, 5))


def test_gauss_needs_nonzero_leading_minors():
    with pytest.raises(ZeroDivisionError):
        gauss_decompose(Matrix([[0, 1], [1, 0]]))


# polynomials ---------------------------------------------------------------------

def test_pack_roundtrip():
    e = {0: 3, 2: 1, 5: 7}
    assert unpack(pack(e)) == e


def test_poly_basic_algebra():
    x, y = SparsePoly.var("x"), SparsePoly.var("y")
    p = (x + y) ** 2
    assert p == x * x + 2 * x * y + y * y
    assert (x - x).is_zero()
    assert p.total_degree() == 2
    assert p.variables() == {"x", "y"}
    assert str(x - 1) in ("x - 1", "-1 + x")
    assert (p - y * y).divexact(x) == x + 2 * y
    with pytest.raises(ArithmeticError):
        (x + 1).divexact(y)


@given(small, small, small, small)
def test_poly_evaluation_is_a_ring_map(a, b, c, d):
    x, y = SparsePoly.var("x"), SparsePoly.var("y")
    p = x * x * y - 3 * x + Fraction(1, 2)
    q = y ** 3 + x * y - 2
    pt = {"x": a, "y": b}
    assert (p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt)
    assert (p + q).evaluate(pt) == p.evaluate(pt) + q.evaluate(pt)
    sub = p.substitute({"x": y + c, "y": d})
    assert sub.evaluate({"y": b}) == p.evaluate({"x": b + c, "y": d})


def test_registries_do_not_mix():
    r1, r2 = VarRegistry(), VarRegistry()
    with pytest.raises(RegistryError):
        identity_verdict(SparsePoly.var("x", r1), SparsePoly.var("x", r2))


def test_digest_is_stable():
    x = SparsePoly.var("x")
    assert (x + 1).digest() == (1 + x).digest()


# identities ------------------------------------------------------------------------

@pytest.mark.parametrize("seed", range(5))
def test_classical_identities(seed):
    rng = random.Random(seed)
    X, Y = rand_matrix(rng, 4), rand_matrix(rng, 4)
    assert cauchy_binet_check(X, Y, [1, 3], [2, 4]) == 0
    if det(X) != 0:
        assert jacobi_complement_check(X, [1, 2], [2, 4]) == 0
    assert desnanot_jacobi_check(X) == 0
    Z = rand_matrix(rng, 3, 5)
    assert bazin_check(Z, [1, 2], [3, 4], [5]) == 0
    S = stacked(rand_matrix(rng, 3), rand_matrix(rng, 3))
    assert plucker_check(S, [1, 3]) == 0


def test_gauss_minor_formulas():
    rng = random.Random(3)
    X = rand_matrix(rng, 4)
    assert all(r == 0 for r in gauss_minor_residuals(X))


def test_identity_verdict_modes():
    x, y = SparsePoly.var("x"), SparsePoly.var("y")
    assert identity_verdict((x + y) ** 2, x * x + 2 * x * y + y * y).result == "proved-equal"
    v = identity_verdict((x + y) ** 2, x * x + y * y, "modular", seed=1)
    assert v.result == "unequal" and v.witness
    v = identity_verdict((x - y) * (x + y), x * x - y * y, "modular", seed=1, trials=5)
    assert v.result == "equal-with-confidence" and 0 < v.epsilon < 1e-80
