"""Point-location kernel behind the Monte-Carlo oracle.

``locate(points, los, his)`` returns, for every sample point, the index of the
sorted disjoint interval ``[los[i], his[i])`` that contains it, or ``-1``. The
numba version is used when numba imports and ``SIMPLICIAL_RV_NO_NUMBA`` is
unset; otherwise a vectorized numpy path runs.
"""
from __future__ import annotations

import os

import numpy as np


def locate_numpy(points: np.ndarray, los: np.ndarray, his: np.ndarray) -> np.ndarray:
    idx = np.searchsorted(los, points, side="right") - 1
    safe = np.clip(idx, 0, max(len(los) - 1, 0))
    hit = (idx >= 0) & (len(los) > 0)
    if len(los):
        hit &= points < his[safe]
    return np.where(hit, idx, -1).astype(np.int64)


def _locate_loop(points, los, his):
    out = np.empty(points.shape[0], dtype=np.int64)
    n = los.shape[0]
    for p in range(points.shape[0]):
        x = points[p]
        lo, hi = 0, n
        while lo < hi:
            mid = (lo + hi) // 2
            if los[mid] <= x:
                lo = mid + 1
            else:
                hi = mid
        i = lo - 1
        if i >= 0 and x < his[i]:
            out[p] = i
        else:
            out[p] = -1
    return out


USE_NUMBA = False
if not os.environ.get("SIMPLICIAL_RV_NO_NUMBA"):
    try:
        from numba import njit
    except ImportError:  # pragma: no cover
        pass
    else:
        _locate_numba = njit(cache=True)(_locate_loop)
        USE_NUMBA = True


def locate_numba(points: np.ndarray, los: np.ndarray, his: np.ndarray) -> np.ndarray:
    if not USE_NUMBA:
        raise RuntimeError("numba kernel disabled")
    return _locate_numba(points, los, his)


def locate(points: np.ndarray, los: np.ndarray, his: np.ndarray) -> np.ndarray:
    points = np.ascontiguousarray(points, dtype=np.float64)
    los = np.ascontiguousarray(los, dtype=np.float64)
    his = np.ascontiguousarray(his, dtype=np.float64)
    if USE_NUMBA:
        return _locate_numba(points, los, his)
    return locate_numpy(points, los, his)
