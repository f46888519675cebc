import json
from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given

from simplicial_rv import DomainError, IntervalSet, canonicalize, combine, complement, measure, set_distance
from simplicial_rv.montecarlo import mc_measure, sample_points, tolerance

from conftest import interval_sets, unit_rats

half = IntervalSet([(0, F(1, 2))])
mid = IntervalSet([(F(1, 4), F(3, 4))])


def test_canonicalize_examples():
    assert canonicalize([(0, F(1, 2)), (F(1, 4), F(3, 4))]) == IntervalSet([(0, F(3, 4))])
    assert canonicalize([]) == IntervalSet.empty()
    assert canonicalize([(F(1, 4), F(1, 4)), (F(1, 2), F(3, 4))]).pieces == ((F(1, 2), F(3, 4)),)


def test_touching_pieces_merge():
    assert IntervalSet([(0, F(1, 3)), (F(1, 3), F(1, 2))]).pieces == ((0, F(1, 2)),)


@pytest.mark.parametrize("pair", [(-F(1, 4), F(1, 2)), (F(1, 2), F(3, 2)), (F(3, 4), F(1, 4))])
def test_out_of_range_rejected(pair):
    with pytest.raises(DomainError):
        canonicalize([pair])


def test_combine_examples():
    assert combine(half, mid, "symm_diff") == IntervalSet([(0, F(1, 4)), (F(1, 2), F(3, 4))])
    assert complement(half) == IntervalSet([(F(1, 2), 1)])
    assert combine(mid, mid, "symm_diff") == IntervalSet.empty()
    assert combine(half, mid, "union") == IntervalSet([(0, F(3, 4))])
    assert combine(half, mid, "intersect") == IntervalSet([(F(1, 4), F(1, 2))])
    assert combine(half, mid, "minus") == IntervalSet([(0, F(1, 4))])
    with pytest.raises(DomainError):
        combine(half, mid, "xor")


def test_measure_examples():
    assert measure(IntervalSet([(0, F(1, 4)), (F(1, 2), F(3, 4))])) == F(1, 2)
    assert measure(IntervalSet.empty()) == 0
    assert measure(IntervalSet.full()) == 1


def test_set_distance_examples():
    assert set_distance(mid, mid) == 0
    assert set_distance(half, mid) == F(1, 2)
    assert set_distance(IntervalSet.empty(), IntervalSet.full()) == 1


def test_json_round_trip_is_bit_exact():
    A = IntervalSet([(F(2, 7), F(1, 3)), (F(5, 11), F(1))])
    text = json.dumps(A.to_json())
    assert IntervalSet.from_json(json.loads(text)) == A
    assert all("/" in x for pair in A.to_json() for x in pair)


@given(interval_sets(), interval_sets())
def test_additivity_on_disjoint(A, B):
    B = B - A
    assert (A | B).measure == A.measure + B.measure


@given(interval_sets(), interval_sets())
def test_piece_count_growth(A, B):
    for op in ("union", "intersect", "minus", "symm_diff"):
        assert len(A.combine(B, op)) <= len(A) + len(B) + 1


@given(interval_sets(), interval_sets(), interval_sets())
def test_metric_axioms(A, B, C):
    assert set_distance(A, B) == set_distance(B, A)
    assert set_distance(A, C) <= set_distance(A, B) + set_distance(B, C)
    assert (set_distance(A, B) == 0) == (A == B)


@given(interval_sets(), interval_sets())
def test_complement_isometry(A, B):
    assert set_distance(~A, ~B) == set_distance(A, B)


@given(unit_rats(), unit_rats(), unit_rats(), unit_rats())
def test_interval_cut_bound(a, b, c, d):
    a, b = sorted((a, b))
    c, d = sorted((c, d))
    assert (IntervalSet([(a, b)]) - IntervalSet([(c, d)])).measure <= abs(a - c) + abs(b - d)


@given(interval_sets(), interval_sets(), interval_sets(), interval_sets())
def test_union_is_one_lipschitz(X1, X2, Y1, Y2):
    assert set_distance(X1 | Y1, X2 | Y2) <= set_distance(X1, X2) + set_distance(Y1, Y2)


def test_canonical_invariants():
    A = IntervalSet([(F(3, 4), 1), (0, F(1, 8)), (F(1, 16), F(1, 4)), (F(1, 2), F(1, 2))])
    for (lo, hi), (lo2, _) in zip(A.pieces, A.pieces[1:]):
        assert lo < hi < lo2
    assert A.pieces == ((0, F(1, 4)), (F(3, 4), 1))


def test_monte_carlo_agrees():
    rng = np.random.default_rng(7)
    pts = sample_points(100_000, rng=rng)
    for A in (half, mid, IntervalSet([(F(1, 7), F(2, 7)), (F(5, 9), F(8, 9))]), IntervalSet.full()):
        assert abs(mc_measure(A, pts) - float(A.measure)) <= tolerance(len(pts))
