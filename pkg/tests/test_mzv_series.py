import mpmath as mp
import pytest

from ninthschur.mzv.numeric import precision
from ninthschur.mzv.series import (Laurent, gen_fun_F, lemma_product_residual, phi_by_permutations, phi_lhs,
                                   phi_rhs, phi_series_check, zast_series)
from ninthschur.mzv.values import column_value, rectangle_value


@pytest.fixture(autouse=True)
def forty_digits():
    with precision(40):
        yield


def test_laurent_truncation_and_residue():
    x = Laurent.monomial(3, 2, {0: 1})
    w = Laurent.monomial(3, 2, {2: 1})
    winv = Laurent.monomial(3, 2, {2: -1})
    p = (x + w) * (x + winv)          # x² + x w + x/w + 1
    assert p.residue([2]) == {(1, 0): 1}
    assert p.residue([]) == {(2, 0): 1, (0, 0): 1}
    cube = p * x                       # x³ dropped by the degree cap
    assert all(e[0] + e[1] <= 2 for e in cube.terms)
    assert (p - p).terms == {}


def test_zast_series_leading_coefficient():
    # the x¹z⁰ coefficient of x·F(x, z) is F[0,0] = ζ(2)
    s = zast_series(2)
    assert abs(s[(1, 0)] - mp.zeta(2)) < mp.mpf(10) ** -35


def test_generating_function_table_vs_closed():
    A = gen_fun_F((1, 2, 1), 5, "table")
    B = gen_fun_F((1, 2, 1), 5, "closed")
    assert set(A) == set(B) == {(a, c) for a in range(6) for c in range(6)}
    assert max(abs(A[k] - B[k]) for k in A) < 1e-10
    assert gen_fun_F((1, 2, 1), -1) == {}
    with pytest.raises(ValueError):
        gen_fun_F((2, 3, 2), 2, "closed")
    with pytest.raises(ValueError):
        gen_fun_F((1, 2, 1), 2, "other")


def test_phi_two_residue():
    lhs, rhs = phi_lhs(2, 4), phi_rhs(2, 4)
    assert set(lhs) <= set(rhs) | {k for k in lhs if lhs[k] == 0}
    assert any(abs(v) > 0.1 for v in lhs.values())
    assert phi_series_check(2, 4) < 1e-8


def test_phi_three_residue():
    assert phi_series_check(3, 6) < 1e-8


def test_phi_unsupported_b():
    with pytest.raises(ValueError):
        phi_series_check(4, 2)


@pytest.mark.parametrize("b,a,c", [(2, 0, 0), (2, 1, 2), (3, 0, 1), (3, 2, 0)])
def test_permutation_expansion_matches_rectangle(b, a, c):
    assert abs(phi_by_permutations(b, a, c) - rectangle_value(a, a + b + c, b).value) < 1e-25


@pytest.mark.parametrize("b,k,l,deg", [(2, (0, 1), (1, 0), 3), (2, (1, 0), (0, 2), 3), (3, (0, 1, 2), (2, 1, 0), 5)])
def test_contour_product_lemma(b, k, l, deg):
    assert lemma_product_residual(b, k, l, deg) < 1e-8


def test_contour_product_lemma_preconditions():
    with pytest.raises(ValueError):
        lemma_product_residual(2, (1, 1), (0, 1), 2)
    with pytest.raises(ValueError):
        lemma_product_residual(2, (0,), (0, 1), 2)


def test_generating_function_entries_are_column_values():
    F = gen_fun_F((2, 3, 2), 1)
    assert abs(F[(1, 0)] - column_value((2, 3))) < mp.mpf(10) ** -35
