from fractions import Fraction

from hypothesis import settings, strategies as st

from simplicial_rv import IntervalSet, StepFn

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


@st.composite
def unit_rats(draw, max_den=32):
    den = draw(st.integers(1, max_den))
    return Fraction(draw(st.integers(0, den)), den)


@st.composite
def interval_sets(draw, max_pieces=4):
    pairs = draw(st.lists(st.tuples(unit_rats(), unit_rats()), max_size=max_pieces))
    return IntervalSet((min(a, b), max(a, b)) for a, b in pairs)


@st.composite
def step_fns(draw, vertices=(0, 1, 2, 3), max_cuts=5):
    cuts = sorted(set(draw(st.lists(unit_rats(), max_size=max_cuts))) - {Fraction(0), Fraction(1)})
    edges = [Fraction(0), *cuts, Fraction(1)]
    labels = draw(st.lists(st.sampled_from(vertices), min_size=len(edges) - 1, max_size=len(edges) - 1))
    return StepFn.from_pieces((lo, hi, v) for (lo, hi), v in zip(zip(edges, edges[1:]), labels))
