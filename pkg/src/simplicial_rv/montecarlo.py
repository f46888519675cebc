"""Floating-point Monte-Carlo re-estimation of exact measures.

This is an oracle: it shares nothing with the exact code path except the
interval endpoints it is handed, and answers by counting uniform samples.
"""
from __future__ import annotations

import math
from typing import Optional

import numpy as np

from ._kernels import locate
from .intervals import IntervalSet
from .stepfn import StepFn


def sample_points(n: int, seed: Optional[int] = None, rng: Optional[np.random.Generator] = None) -> np.ndarray:
    rng = rng if rng is not None else np.random.default_rng(seed)
    return rng.random(n)


def tolerance(n: int) -> float:
    return 4.0 / math.sqrt(n)


def _bounds(pieces) -> tuple[np.ndarray, np.ndarray]:
    los = np.array([float(lo) for lo, _ in pieces], dtype=np.float64)
    his = np.array([float(hi) for _, hi in pieces], dtype=np.float64)
    return los, his


def mc_measure(A: IntervalSet, points: np.ndarray) -> float:
    if not A:
        return 0.0
    los, his = _bounds(A.pieces)
    return float(np.count_nonzero(locate(points, los, his) >= 0)) / len(points)


def labels(f: StepFn, points: np.ndarray, index: dict) -> np.ndarray:
    """Code ``index[f(t)]`` at each sample point ``t`` (``-1`` if uncovered)."""
    segs = f.segments()
    los, his = _bounds([(lo, hi) for lo, hi, _ in segs])
    seg_label = np.array([index[v] for _, _, v in segs], dtype=np.int64)
    where = locate(points, los, his)
    return np.where(where >= 0, seg_label[np.maximum(where, 0)], -1)


def mc_masses(f: StepFn, points: np.ndarray) -> dict:
    verts = list(f.essential_image())
    lab = labels(f, points, {v: i for i, v in enumerate(verts)})
    counts = np.bincount(lab[lab >= 0], minlength=len(verts))
    return {v: counts[i] / len(points) for i, v in enumerate(verts)}


def mc_distance(f: StepFn, g: StepFn, points: np.ndarray) -> float:
    index = {v: i for i, v in enumerate(f.essential_image() | g.essential_image())}
    return float(np.count_nonzero(labels(f, points, index) != labels(g, points, index))) / len(points)
