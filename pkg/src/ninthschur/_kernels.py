"""Floating-point hot loops for large truncations.

Each kernel has a numba version and a pure-numpy version with the same
signature.  Setting ``NINTHSCHUR_DISABLE_NUMBA=1`` (or running without numba)
selects the numpy path.  Exact rational work never goes through here.
"""
from __future__ import annotations

import os

import numpy as np

DISABLE_ENV = "NINTHSCHUR_DISABLE_NUMBA"


def _numba_wanted() -> bool:
    return os.environ.get(DISABLE_ENV, "").strip().lower() not in ("1", "true", "yes", "on")


try:
    if not _numba_wanted():
        raise ImportError
    from numba import njit
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - depends on the environment
    HAVE_NUMBA = False


# numpy implementations ---------------------------------------------------------

def mzv_dp_numpy(ks: np.ndarray, M: int, star: bool) -> np.ndarray:
    """Prefix values P[m] = ζ^m(k) (or ζ^{⋆,m}) for m = 0..M as float64."""
    m = np.arange(1, M + 1, dtype=np.float64)
    prev = np.ones(M + 1)
    for idx, k in enumerate(ks):
        w = m ** (-float(k))
        if star or idx == 0:
            src = prev[1:]
        else:
            src = prev[:-1]
        cur = np.empty(M + 1)
        cur[0] = 0.0
        cur[1:] = np.cumsum(src * w)
        prev = cur
    return prev


def strip_dp_numpy(n_states: int, src: np.ndarray, dst: np.ndarray, expo: np.ndarray,
                   start: int, M: int) -> np.ndarray:
    """Transfer DP over horizontal strips; transition t carries weight k^{-expo[t]}.

    Returns the state vector after M letters.
    """
    state = np.zeros(n_states)
    state[start] = 1.0
    for k in range(1, M + 1):
        w = float(k) ** (-expo.astype(np.float64))
        new = np.zeros(n_states)
        np.add.at(new, dst, state[src] * w)
        state = new
    return state


# numba implementations ---------------------------------------------------------

if HAVE_NUMBA:
    @njit(cache=True)
    def _mzv_dp_nb(ks, M, star):
        prev = np.ones(M + 1)
        cur = np.empty(M + 1)
        for idx in range(ks.shape[0]):
            k = float(ks[idx])
            cur[0] = 0.0
            acc = 0.0
            for m in range(1, M + 1):
                base = prev[m] if (star or idx == 0) else prev[m - 1]
                acc += base * m ** (-k)
                cur[m] = acc
            prev, cur = cur, prev
        return prev.copy()

    @njit(cache=True)
    def _strip_dp_nb(n_states, src, dst, expo, start, M):
        state = np.zeros(n_states)
        state[start] = 1.0
        new = np.zeros(n_states)
        for k in range(1, M + 1):
            lk = np.log(float(k))
            for s in range(n_states):
                new[s] = 0.0
            for t in range(src.shape[0]):
                v = state[src[t]]
                if v != 0.0:
                    new[dst[t]] += v * np.exp(-expo[t] * lk)
            state, new = new, state
        return state.copy()


def mzv_dp(ks, M: int, star: bool = False, backend: str | None = None) -> np.ndarray:
    ks = np.asarray(ks, dtype=np.int64)
    if _pick(backend) == "numba":
        return _mzv_dp_nb(ks, M, star)
    return mzv_dp_numpy(ks, M, star)


def strip_dp(n_states: int, src, dst, expo, start: int, M: int, backend: str | None = None) -> np.ndarray:
    src = np.asarray(src, dtype=np.int64)
    dst = np.asarray(dst, dtype=np.int64)
    expo = np.asarray(expo, dtype=np.float64)
    if _pick(backend) == "numba":
        return _strip_dp_nb(n_states, src, dst, expo, start, M)
    return strip_dp_numpy(n_states, src, dst, expo, start, M)


def _pick(backend: str | None) -> str:
    if backend is None:
        return "numba" if HAVE_NUMBA else "numpy"
    if backend == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba backend requested but unavailable")
    if backend not in ("numba", "numpy"):
        raise ValueError(f"unknown kernel backend {backend!r}")
    return backend
