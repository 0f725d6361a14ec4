import mpmath as mp
import pytest

from ninthschur.mzv.numeric import mzv, precision
from ninthschur.mzv.trunc import DiagonalIndex, schur_zeta_float
from ninthschur.mzv.values import (_R33_232_TERMS, RectangleValue, checkerboard_dp, checkerboard_values,
                                   column_value, example_r_a2_2, example_r_a3_2, example_r_a3_3, explicit_121,
                                   jacobi_trudi_3, prop_121_determinant, r33_121_closed, r33_232_closed,
                                   r332_121_check, r332_232_check, rectangle_value, zagier_232)

TOL = mp.mpf(10) ** -30


@pytest.fixture(autouse=True)
def forty_digits():
    with precision(40):
        yield


# [TRIVIAL] --------------------------------------------------------------------

def test_empty_rectangles_and_validation():
    assert rectangle_value(0, 0, 3).value == 1
    assert rectangle_value(2, 3, 0).value == 1
    with pytest.raises(ValueError):
        rectangle_value(0, -1, 1)
    with pytest.raises(ValueError):
        explicit_121(-1, 0)
    with pytest.raises(ValueError):
        zagier_232(0, -1)
    with pytest.raises(ValueError):
        prop_121_determinant(0, -1, 0)
    assert float(RectangleValue(0, 1, 1, (1, 2, 1), mp.mpf(2))) == 2.0


def test_single_cells():
    assert abs(rectangle_value(0, 1, 1, (1, 2, 1)).value - mp.zeta(2)) < TOL
    assert abs(rectangle_value(0, 1, 1, (2, 3, 2)).value - mp.zeta(3)) < TOL


# [PAPER] ----------------------------------------------------------------------

def test_r33_121_closed_form():
    assert r332_121_check() < 1e-10
    assert abs(rectangle_value(0, 3, 3).value - r33_121_closed()) < 1e-10
    assert mp.nstr(r33_121_closed(), 12) == "3.45550409078"


def test_r33_232_closed_form():
    assert len(_R33_232_TERMS) == 26
    # every term has weight 21 = 3·3 + 6·2: 2·(η(1) power) + 4·(η(2) power) + Σ odd arguments
    assert all(2 * e1 + 4 * e2 + sum(zs) == 21 for _, e1, e2, zs in _R33_232_TERMS)
    assert r332_232_check() < 1e-10
    assert abs(rectangle_value(0, 3, 3, (2, 3, 2)).value - r33_232_closed()) < 1e-10


@pytest.mark.parametrize("a", range(4))
def test_example_formulas(a):
    assert abs(rectangle_value(a, a + 2, 2).value - example_r_a2_2(a)) < 1e-10
    assert abs(rectangle_value(a, a + 3, 2).value - example_r_a3_2(a)) < 1e-10
    assert abs(rectangle_value(a, a + 3, 3).value - example_r_a3_3(a)) < 1e-10


@pytest.mark.parametrize("c", range(4))
def test_checkerboard_identities(c):
    r0, r1 = checkerboard_values(c)
    assert r0 < 1e-8 and r1 < 1e-8


# [DERIVED] --------------------------------------------------------------------

def test_depth_two_columns_classical():
    # Σ_{m<n} m^-3 n^-2 and its starred version
    v = mp.mpf(9) / 2 * mp.zeta(5) - 2 * mp.zeta(2) * mp.zeta(3)
    assert abs(rectangle_value(0, 2, 1, (2, 3, 2)).value - v) < TOL
    assert abs(rectangle_value(0, 1, 2, (2, 3, 2)).value - v - mp.zeta(5)) < TOL


@pytest.mark.parametrize("a,c", [(0, 0), (1, 0), (0, 1), (1, 1), (2, 1), (0, 2)])
def test_zagier_against_direct_mzv(a, c):
    assert abs(zagier_232(a, c) - mzv((2,) * a + (3,) + (2,) * c)) < TOL


def test_zagier_orientation():
    # ζ(3,2) and ζ(2,3) differ; the 3 sits at the smallest summation index when a = 0
    assert abs(zagier_232(0, 1) - mzv((3, 2))) < TOL
    assert abs(zagier_232(1, 0) - mzv((2, 3))) < TOL


@pytest.mark.parametrize("k", [(1, 2, 1), (1, 1, 2, 1, 1), (2, 3, 2, 2)])
def test_column_value_routes(k):
    assert abs(column_value(k, "auto") - column_value(k, "reg")) < TOL


@pytest.mark.parametrize("shape,p,q", [((2, 2), 2, 2), ((3, 3, 3), 3, 3), ((2, 2, 2), 3, 2)])
def test_convergent_rectangle_against_float_dp(shape, p, q):
    # Richardson step on the O(1/M) truncation error
    a = DiagonalIndex.three_zone(2, 3, 2)
    d1 = schur_zeta_float(shape, a, 20_000, "numpy")
    d2 = schur_zeta_float(shape, a, 40_000, "numpy")
    v = float(rectangle_value(0, p, q, (2, 3, 2)).value)
    assert abs(2 * d2 - d1 - v) < 1e-8 * max(1.0, abs(v))


@pytest.mark.parametrize("a,b,c", [(0, 1, 0), (1, 2, 0), (0, 2, 1), (2, 3, 1), (1, 1, 2)])
def test_prop_121(a, b, c):
    assert abs(prop_121_determinant(a, b, c) - rectangle_value(a, a + b + c, b).value) < 1e-20


def test_jacobi_trudi_3_on_identity_like_input():
    # R(m, p) = 1 if p == 3 else 0 gives the diagonal product 1
    assert jacobi_trudi_3(lambda m, p: 1 if p == 3 else 0) == 1


def test_checkerboard_dp_converges():
    v, closed, est = checkerboard_dp(0, 40_000, backend="numpy")
    assert abs(v - closed) <= max(est, 1e-9)
