from fractions import Fraction as F

import pytest

from simplicial_rv import DomainError
from simplicial_rv.counterexample import counterexample, counterexample_fn, in_U
from simplicial_rv.fibration import law
from simplicial_rv.simplicial import Pmf


def test_n3():
    rep = counterexample(3)
    assert rep.distance_to_f0 == F(2, 3)
    assert rep.support_size == 11
    assert rep.mass_at_top == F(1, 3)
    assert rep.violates_U


def test_n10():
    rep = counterexample(10)
    assert (rep.distance_to_f0, rep.support_size, rep.mass_at_top, rep.violates_U) == (F(1, 5), 102, F(1, 10), True)
    assert rep.to_json()["distance_to_f0"] == "1/5"


def test_n2_has_no_room_for_zero():
    # [0, 1 - 2/n) is empty, so 0 drops out of the support
    rep = counterexample(2)
    assert law(counterexample_fn(2))[0] == 0
    assert rep.support_size == 5 and rep.violates_U


@pytest.mark.parametrize("n", range(2, 20))
def test_distance_scales_as_two_over_n(n):
    assert counterexample(n).distance_to_f0 * n == 2


def test_small_n_rejected():
    for n in (1, 0, -3):
        with pytest.raises(DomainError):
            counterexample(n)


def test_point_mass_at_zero_is_in_U():
    assert in_U(Pmf.point(0))
    assert not in_U(Pmf({0: F(1, 4), 1: F(3, 4)}))
