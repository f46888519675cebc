"""Right-tail shrinking of sets and its two-sided resizing extension.

``shrink(E, u)`` keeps the right-most part of ``E`` carrying a fraction
``1 - u`` of its mass. The cut point is the smallest ``t`` at which the
normalized tail mass ``phi_E(t) = λ(E ∩ [t, 1)) / λ(E)`` reaches the target.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import DomainError
from .intervals import IntervalSet
from .rational import ONE, ZERO, RatLike, as_rat, in_unit


def _check_nonnull(E: IntervalSet) -> Fraction:
    m = E.measure
    if m == 0:
        raise DomainError("tail profile is undefined on a null set")
    return m


def phi_E(E: IntervalSet, t: RatLike) -> Fraction:
    t = as_rat(t)
    m = _check_nonnull(E)
    if not in_unit(t):
        raise DomainError(f"t = {t} is outside [0, 1]")
    return E.clip_from(t).measure / m


def psi_E(E: IntervalSet, v: RatLike) -> Fraction:
    """Smallest ``t`` with ``phi_E(t) == v``.

    The profile is piecewise linear with slope ``-1/λ(E)`` on ``E`` and flat
    off it, so scanning pieces from the right finds the crossing exactly. A
    crossing that lands on a left endpoint is moved back across the flat gap.
    """
    v = as_rat(v)
    m = _check_nonnull(E)
    if not in_unit(v):
        raise DomainError(f"v = {v} is outside [0, 1]")
    target = v * m
    pieces = E.pieces
    if target == 0:
        return pieces[-1][1]
    tail = ZERO
    for idx in range(len(pieces) - 1, -1, -1):
        lo, hi = pieces[idx]
        if tail + (hi - lo) >= target:
            t = hi - (target - tail)
            if t == lo:
                t = pieces[idx - 1][1] if idx > 0 else ZERO
            return t
        tail += hi - lo
    raise AssertionError("unreachable: target mass exceeds λ(E)")


def shrink(E: IntervalSet, u: RatLike) -> IntervalSet:
    """The map g(E, u), made total by g = E for u <= 0 and g = ∅ for u > 1."""
    u = as_rat(u)
    if u <= 0:
        return E
    if u > 1 or not E:
        return IntervalSet.empty()
    return E.clip_from(psi_E(E, ONE - u))


def resize(A: IntervalSet, a: RatLike) -> IntervalSet:
    """Set of measure exactly ``a`` that is nested with ``A`` (the map g̃).

    Shrinks ``A`` when ``a < λ(A)`` and grows it by shrinking the complement
    when ``a > λ(A)``.
    """
    a = as_rat(a)
    if not in_unit(a):
        raise DomainError(f"target mass {a} is outside [0, 1]")
    m = A.measure
    if a == m:
        return A
    if a < m:
        return shrink(A, ONE - a / m)
    return shrink(A.complement(), (a - m) / (ONE - m)).complement()
