import mpmath as mp
import pytest

from ninthschur.mzv.numeric import (ZetaTable, a_inverse_series, c_coefficients, c_partition_sum, coarsenings,
                                    digits, eta, mzv, mzv_dp_tail, mzv_star, precision, star_one_dp)


@pytest.fixture(autouse=True)
def forty_digits():
    with precision(40):
        yield


def euler_depth_two(k):
    """Σ_{m<n} 1/(m n^k) = (k/2)ζ(k+1) − ½Σ_{j=1}^{k−2} ζ(k−j)ζ(j+1)."""
    return k * mp.zeta(k + 1) / 2 - sum(mp.zeta(k - j) * mp.zeta(j + 1) for j in range(1, k - 1)) / 2


# [TRIVIAL] --------------------------------------------------------------------

def test_precision_context_restores():
    before = digits()
    with precision(60):
        assert digits() == 60
    assert digits() == before


def test_coarsenings():
    assert sorted(coarsenings((1, 2, 3))) == [(1, 2, 3), (1, 5), (3, 3), (6,)]
    assert list(coarsenings(())) == [()]


def test_divergent_inputs_rejected():
    with pytest.raises(ValueError):
        mzv((2, 1))
    with pytest.raises(ValueError):
        mzv_star((1,))
    with pytest.raises(ValueError):
        eta(-1)
    with pytest.raises(ValueError):
        mzv_dp_tail((1, 2))
    with pytest.raises(ValueError):
        star_one_dp(1)


# [DERIVED] --------------------------------------------------------------------

@pytest.mark.parametrize("k", range(2, 9))
def test_depth_two_euler_formula(k):
    assert abs(mzv((1, k)) - euler_depth_two(k)) < mp.mpf(10) ** -35


def test_classical_evaluations():
    tol = mp.mpf(10) ** -35
    assert abs(mzv((1, 1, 2)) - mp.zeta(4)) < tol
    assert abs(mzv((2, 2)) - mp.pi ** 4 / 120) < tol
    assert abs(mzv((1, 2, 2)) - mzv((2, 1, 2)) - 0) > tol  # distinct values
    assert abs(mzv_star((1, 2)) - 2 * mp.zeta(3)) < tol
    assert mzv((5,)) == mp.zeta(5)


@pytest.mark.parametrize("k", [(2, 3), (3, 2), (2, 2, 2), (2, 3, 2)])
def test_mzv_against_float_dp(k):
    val, bound = mzv_dp_tail(k, 20_000, backend="numpy")
    assert abs(float(mzv(k)) - val) <= 100 * bound


@pytest.mark.parametrize("k", range(0, 6))
def test_eta_closed_form(k):
    assert eta(k) == mp.pi ** (2 * k) / mp.factorial(2 * k + 1)
    if k:
        assert abs(eta(k) - mzv((2,) * k)) < mp.mpf(10) ** -35


def test_c_coefficients_against_taylor():
    n = 8
    ref = mp.taylor(lambda t: 1 / (mp.gamma(t + 1) * mp.exp(mp.euler * t)), 0, n)
    C = c_coefficients(n)
    for s in range(n + 1):
        assert abs(C[s] - (-1) ** s * ref[s]) < mp.mpf(10) ** -30
    assert C[0] == 1 and C[1] == 0
    assert abs(C[2] + mp.zeta(2) / 2) < mp.mpf(10) ** -35
    assert abs(C[3] + mp.zeta(3) / 3) < mp.mpf(10) ** -35
    for s in range(7):
        assert abs(C[s] - c_partition_sum(s)) < mp.mpf(10) ** -35
    assert len(a_inverse_series(4)) == 5


def test_zeta_table():
    t = ZetaTable(K=6, digits=30)
    assert abs(t.z(4) - mp.pi ** 4 / 90) < mp.mpf(10) ** -28
    with pytest.raises(KeyError):
        t.z(7)
    diff, bound = t.check_eta(2, 20_000)
    assert diff <= 100 * bound


@pytest.mark.parametrize("k", [2, 3, 4])
def test_star_one_dp(k):
    # ζ⋆(1,k) = ζ(1,k) + ζ(k+1)
    val, bound = star_one_dp(k, 50_000, backend="numpy")
    exact = float(mzv((1, k)) + mp.zeta(k + 1))
    assert abs(val - exact) <= max(100 * bound, 1e-12)
