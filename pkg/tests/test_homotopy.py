from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given

from simplicial_rv import (ConstantSetPath, DerivedSetPath, DomainError, IntervalSet, KeyframedSetPath,
                           ScalarPath, overlap, phi, phi_minus, phi_plus, set_distance)
from simplicial_rv.demos import figure_sets
from simplicial_rv.montecarlo import mc_measure, sample_points, tolerance

from conftest import interval_sets, unit_rats

E_half = ConstantSetPath(IntervalSet([(0, F(1, 2))]))


def test_scalar_path_evaluation():
    a = ScalarPath([(0, F(1, 2)), (F(1, 3), 1), (1, 0)])
    assert a(0) == F(1, 2)
    assert a(F(1, 6)) == F(3, 4)
    assert a(F(2, 3)) == F(1, 2)
    assert a(1) == 0
    with pytest.raises(DomainError):
        ScalarPath([(0, 0), (F(1, 2), 1)])
    with pytest.raises(DomainError):
        ScalarPath([(0, 0), (1, 2)])
    assert ScalarPath.from_json(a.to_json()) == a


def test_keyframed_path():
    E = KeyframedSetPath([(0, [(0, F(1, 4)), (F(1, 2), F(3, 4))]), (1, [(F(1, 4), F(1, 2)), (F(1, 4), F(1, 2))])])
    assert E(0) == IntervalSet([(0, F(1, 4)), (F(1, 2), F(3, 4))])
    assert E(F(1, 2)) == IntervalSet([(F(1, 8), F(5, 8))])
    assert E(1) == IntervalSet([(F(1, 4), F(1, 2))])
    assert KeyframedSetPath.from_json(E.to_json())(F(1, 3)) == E(F(1, 3))


def test_derived_path():
    D = DerivedSetPath("complement", E_half)
    assert D(F(1, 2)) == IntervalSet([(F(1, 2), 1)])
    U = DerivedSetPath("union", E_half, D)
    assert U(0) == IntervalSet.full()


def test_overlap_examples():
    assert overlap(E_half, IntervalSet.empty(), F(1, 3)) == 0
    assert overlap(E_half, IntervalSet([(F(1, 4), F(3, 4))]), F(1, 3)) == F(1, 4)
    A = IntervalSet([(F(1, 8), F(1, 4))])
    assert overlap(E_half, A, 1) == A.measure


def test_phi_minus_examples():
    A = IntervalSet([(F(1, 2), 1)])
    assert phi_minus(ScalarPath.constant(1), E_half, A, F(1, 2)) == IntervalSet.empty()
    B = IntervalSet([(0, F(1, 4))])
    assert phi_minus(ScalarPath.constant(1), E_half, B, F(1, 2)) == B
    assert phi_minus(ScalarPath.constant(0), E_half, B, F(1, 2)) == IntervalSet.empty()


def test_phi_plus_examples():
    assert phi_plus(ScalarPath.constant(1), E_half, IntervalSet([(0, F(1, 2))]), 0) == IntervalSet.empty()
    B = IntervalSet([(0, F(1, 4))])
    assert phi_plus(ScalarPath.constant(F(1, 4)), E_half, B, 0) == IntervalSet.empty()
    assert phi_plus(ScalarPath.constant(1), E_half, IntervalSet.empty(), F(2, 3)) == E_half(0)


def test_phi_start_and_constant_data():
    E = ConstantSetPath(IntervalSet([(F(1, 10), F(9, 10))]))
    A = IntervalSet([(F(1, 5), F(2, 5)), (F(1, 2), F(3, 5))])
    a = ScalarPath.constant(A.measure / E(0).measure)
    for k in range(11):
        assert phi(a, E, A, F(k, 10)) == A


# λ(Φ(u)) = a(u)·λ(E_u) on the figure configuration, frozen from a geometry-only
# oracle: snapped rectangle areas times a(u) = (λ(A)/λ(E_0))·(1 - u).
FIGURE_MASSES = {
    F(0): F(15, 128), F(1, 10): F(27, 256), F(1, 5): F(3, 32), F(3, 10): F(1701, 25600),
    F(2, 5): F(81, 1280), F(1, 2): F(243, 5120), F(3, 5): F(27, 800), F(7, 10): F(9, 320),
    F(4, 5): F(189, 12800), F(9, 10): F(189, 25600),
}


def test_figure_configuration_masses():
    A, E, a = figure_sets()
    assert phi(a, E, A, 0) == A
    pts = sample_points(100_000, seed=3)
    for u, expected in FIGURE_MASSES.items():
        P = phi(a, E, A, u)
        assert P <= E(u)
        assert P.measure == expected
        assert abs(mc_measure(P, pts) - float(expected)) <= tolerance(len(pts))


@given(interval_sets(), interval_sets(), interval_sets(), interval_sets(), unit_rats())
def test_overlap_one_lipschitz(E0, E1, A, B, u):
    E = ConstantSetPath(E0)
    Fp = ConstantSetPath(E1)
    assert abs(overlap(E, A, u) - overlap(Fp, B, u)) <= set_distance(E0, E1) + set_distance(A, B)


@given(interval_sets(), interval_sets(), unit_rats(), unit_rats(), unit_rats())
def test_phi_contract(E0, E1, mask, a1, u):
    E = KeyframedSetPath([(0, list(E0.pieces) or [(0, 0)]), (1, list(E1.pieces) or [(0, 0)])]) \
        if len(E0) == len(E1) else ConstantSetPath(E0)
    A = E(0) & IntervalSet([(0, mask)])
    start = A.measure / E(0).measure if E(0).measure else F(1, 2)
    a = ScalarPath([(0, start), (1, a1)])
    P, lo, hi = phi(a, E, A, u), phi_minus(a, E, A, u), phi_plus(a, E, A, u)
    assert phi(a, E, A, 0) == A
    assert P <= E(u) and lo.isdisjoint(hi) and P == lo | hi
    assert P.measure == a(u) * E(u).measure
