"""Seeded random instances for the property suites.

All generators take a ``random.Random`` and return exact objects, so a given
seed always reproduces the same instances.
"""
from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional, Sequence

from .homotopy import KeyframedSetPath, ScalarPath
from .intervals import IntervalSet
from .fibration import PmfPath, law
from .rational import ONE, ZERO
from .simplicial import Pmf, SimplicialComplex
from .stepfn import StepFn


def rand_rat(rng: random.Random, max_den: int = 24) -> Fraction:
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(0, den), den)


def rand_interval_set(rng: random.Random, max_pieces: int = 4, max_den: int = 24) -> IntervalSet:
    k = rng.randint(0, max_pieces)
    pts = sorted(rand_rat(rng, max_den) for _ in range(2 * k))
    return IntervalSet(zip(pts[::2], pts[1::2]))


def rand_nonnull_set(rng: random.Random, max_pieces: int = 4, max_den: int = 24) -> IntervalSet:
    while True:
        A = rand_interval_set(rng, max(1, max_pieces), max_den)
        if A.measure > 0:
            return A


def rand_stepfn(rng: random.Random, vertices: Sequence, max_cuts: int = 6, max_den: int = 24) -> StepFn:
    cuts = sorted({rand_rat(rng, max_den) for _ in range(rng.randint(0, max_cuts))} - {ZERO, ONE})
    edges = [ZERO, *cuts, ONE]
    return StepFn.from_pieces((lo, hi, rng.choice(vertices)) for lo, hi in zip(edges, edges[1:]))


def rand_pmf(rng: random.Random, vertices: Sequence, max_support: int) -> Pmf:
    r = rng.randint(1, min(max_support, len(vertices)))
    support = rng.sample(list(vertices), r)
    weights = [rng.randint(1, 20) for _ in support]
    total = sum(weights)
    return Pmf({v: Fraction(w, total) for v, w in zip(support, weights)})


def rand_knots(rng: random.Random, inner: int, max_den: int = 12) -> list[Fraction]:
    pts = {rand_rat(rng, max_den) for _ in range(inner)} - {ZERO, ONE}
    return [ZERO, *sorted(pts), ONE]


def rand_scalar_path(rng: random.Random, start: Optional[Fraction] = None, inner: int = 2) -> ScalarPath:
    us = rand_knots(rng, rng.randint(0, inner))
    vals = [rand_rat(rng, 16) for _ in us]
    if start is not None:
        vals[0] = start
    return ScalarPath(list(zip(us, vals)))


def rand_keyframed_path(rng: random.Random, pieces: int = 3, inner: int = 1) -> KeyframedSetPath:
    us = rand_knots(rng, rng.randint(0, inner))
    frames = []
    for _ in us:
        frame = []
        for _ in range(pieces):
            a, b = sorted((rand_rat(rng, 20), rand_rat(rng, 20)))
            frame.append((a, b))
        frames.append(frame)
    return KeyframedSetPath(list(zip(us, frames)))


def rand_phi_instance(rng: random.Random):
    """``(a, E, A)`` with ``A ⊆ E_0`` and ``a(0)·λ(E_0) = λ(A)``."""
    E = rand_keyframed_path(rng, pieces=rng.randint(1, 3), inner=2)
    E0 = E(ZERO)
    A = E0 & rand_interval_set(rng, 3)
    start = A.measure / E0.measure if E0.measure else rand_rat(rng, 8)
    a = rand_scalar_path(rng, start=start, inner=2)
    return a, E, A


def rand_simplex_point(rng: random.Random, vertices: Sequence, zero_prob: float = 0.3) -> list[Fraction]:
    while True:
        w = [0 if rng.random() < zero_prob else rng.randint(1, 12) for _ in vertices]
        if sum(w):
            total = sum(w)
            return [Fraction(x, total) for x in w]


def rand_pmfpath(rng: random.Random, h0: StepFn, vertices: Sequence, inner: int = 3) -> PmfPath:
    """Path in the simplex on ``vertices`` starting at the law of ``h0``."""
    us = rand_knots(rng, rng.randint(0, inner))
    start = law(h0)
    cols = [[start[v] for v in vertices]] + [rand_simplex_point(rng, vertices) for _ in us[1:]]
    return PmfPath(vertices, us, {v: [col[i] for col in cols] for i, v in enumerate(vertices)})


def rand_complex(rng: random.Random, vertices: Sequence, faces: int = 3, max_dim: int = 3) -> SimplicialComplex:
    mf = [rng.sample(list(vertices), rng.randint(1, min(max_dim, len(vertices)))) for _ in range(faces)]
    return SimplicialComplex(mf)
