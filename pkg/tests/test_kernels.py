import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ninthschur import _kernels

BACKENDS = ["numpy"] + (["numba"] if _kernels.HAVE_NUMBA else [])


@pytest.mark.parametrize("backend", BACKENDS)
def test_mzv_dp_small(backend):
    P = _kernels.mzv_dp(np.array([2]), 3, False, backend)
    assert P[0] == 0 and P[3] == pytest.approx(1 + 1 / 4 + 1 / 9)


@settings(max_examples=25)
@given(st.lists(st.integers(1, 4), min_size=1, max_size=3), st.integers(1, 300), st.booleans())
def test_backends_agree(ks, M, star):
    ref = _kernels.mzv_dp(np.array(ks), M, star, "numpy")
    for b in BACKENDS:
        assert np.allclose(_kernels.mzv_dp(np.array(ks), M, star, b), ref, rtol=1e-12, atol=0)


def test_strip_dp_backends_agree():
    # two states with one transition each way: a toy chain
    src, dst, expo = [0, 0, 1], [0, 1, 1], [0.0, 2.0, 0.0]
    ref = _kernels.strip_dp(2, src, dst, expo, 0, 50, "numpy")
    for b in BACKENDS:
        assert np.allclose(_kernels.strip_dp(2, src, dst, expo, 0, 50, b), ref, rtol=1e-12)
    # reaching state 1 sums k^-2 over one step k ≤ 50
    assert ref[1] == pytest.approx(sum(k ** -2.0 for k in range(1, 51)))


def test_unknown_backend():
    with pytest.raises(ValueError):
        _kernels.mzv_dp(np.array([2]), 3, False, "cuda")


def test_env_flag_disables_numba():
    code = "from ninthschur import _kernels; print(_kernels.HAVE_NUMBA)"
    env = dict(os.environ, NINTHSCHUR_DISABLE_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "False"
