from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from simplicial_rv import (DomainError, IntervalSet, StepFn, distance, essential_image, level_set, mix,
                           outside_support, pushforward, set_distance, truncate)

from conftest import step_fns, unit_rats

zero = StepFn.constant(0)
f = StepFn.from_pieces([(0, F(1, 3), 0), (F(1, 3), 1, 1)])


def test_distance_examples():
    assert distance(f, f) == 0
    assert distance(zero, f) == F(2, 3)
    assert distance(StepFn.constant("a"), f) == 1


def test_partition_is_validated():
    with pytest.raises(DomainError):
        StepFn({0: IntervalSet([(0, F(1, 2))])})
    with pytest.raises(DomainError):
        StepFn({0: IntervalSet([(0, F(2, 3))]), 1: IntervalSet([(F(1, 3), 1)])})


def test_level_sets_and_image():
    assert level_set(zero, 0) == IntervalSet.full()
    assert level_set(f, 7) == IntervalSet.empty()
    assert essential_image(f) == {0, 1}
    assert f(F(1, 3)) == 1 and f(0) == 0


def test_mix_examples():
    g = StepFn.from_pieces([(0, F(1, 2), 2), (F(1, 2), 1, 3)])
    assert mix(f, g, 0) == f
    assert mix(f, g, 1) == g
    assert mix(f, f, F(2, 5)) == f
    assert mix(f, g, F(1, 4)) == StepFn.from_pieces([(0, F(1, 4), 2), (F(1, 4), F(1, 3), 0), (F(1, 3), 1, 1)])
    with pytest.raises(DomainError):
        mix(f, g, F(3, 2))


def test_truncate_examples():
    h = StepFn.from_pieces([(0, F(1, 2), "x0"), (F(1, 2), F(3, 4), "x1"), (F(3, 4), 1, "x2")])
    enum = ["x0", "x1", "x2"]
    assert truncate(h, enum, 2) == h
    t = truncate(h, enum, 1)
    assert t == StepFn.from_pieces([(0, F(1, 2), "x0"), (F(1, 2), F(3, 4), "x1"), (F(3, 4), 1, "x0")])
    assert distance(t, h) == F(1, 4)
    assert all(truncate(zero, [0, 5], n) == zero for n in range(3))
    with pytest.raises(DomainError):
        truncate(h, ["x0", "x1"], 0)


def test_outside_support_examples():
    assert outside_support(f, {0, 1, 2}) == IntervalSet.empty()
    assert outside_support(f, set()) == IntervalSet.full()
    assert outside_support(f, {0}) == IntervalSet([(F(1, 3), 1)])


def test_pushforward_examples():
    assert pushforward(lambda v: v, f) == f
    assert pushforward(lambda v: "c", f) == StepFn.constant("c")
    assert pushforward({0: "a", 1: "a"}, f) == StepFn.constant("a")
    with pytest.raises(DomainError):
        pushforward({0: "a"}, f)


def test_json_round_trip():
    g = StepFn.from_pieces([(0, F(1, 5), "b"), (F(1, 5), F(1, 2), 10), (F(1, 2), 1, 2)])
    data = g.to_json()
    assert [item["vertex"] for item in data] == ["2", "10", "b"]
    assert StepFn.from_json(data) == g


@given(step_fns(), step_fns(), step_fns())
def test_distance_is_metric(a, b, c):
    assert distance(a, b) == distance(b, a) <= 1
    assert distance(a, c) <= distance(a, b) + distance(b, c)
    assert (distance(a, b) == 0) == (a == b)


@given(step_fns(), step_fns(), st.sets(st.sampled_from((0, 1, 2, 3))))
def test_outside_support_contracting(a, b, F_):
    assert set_distance(outside_support(a, F_), outside_support(b, F_)) <= distance(a, b)


@given(step_fns(), step_fns(), st.dictionaries(st.sampled_from((0, 1, 2, 3)), st.integers(0, 2), min_size=4))
def test_pushforward_contracting(a, b, phi):
    assert distance(pushforward(phi, a), pushforward(phi, b)) <= distance(a, b)
    assert pushforward(phi, a).essential_image() == {phi[v] for v in a.essential_image()}


@given(step_fns(), step_fns(), unit_rats(), unit_rats())
def test_mix_time_bound_and_support(a, b, u, v):
    assert distance(mix(a, b, u), mix(a, b, v)) <= abs(u - v)
    assert mix(a, b, u).essential_image() <= a.essential_image() | b.essential_image()


@given(step_fns(vertices=tuple(range(8)), max_cuts=8), st.randoms(use_true_random=False))
def test_truncate_cauchy(a, rnd):
    enum = sorted(a.essential_image())
    rnd.shuffle(enum)
    ds = [distance(truncate(a, enum, n), a) for n in range(len(enum))]
    assert all(x >= y for x, y in zip(ds, ds[1:]))
    assert ds[-1] == 0
    for n, d in enumerate(ds):
        assert d <= sum((a.level_set(x).measure for x in enum[n + 1:]), F(0))
