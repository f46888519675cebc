"""Scalar and set-valued paths, and the pointwise path operator Φ = Φ₋ ∪ Φ₊.

Every path here is a pure callable ``u -> value`` evaluated exactly at rational
``u``. The operators only ever look at ``a(u)``, ``E(u)`` and ``A``, so they are
evaluated pointwise; nothing is discretized.
"""
from __future__ import annotations

import bisect
from fractions import Fraction
from typing import Callable, Mapping, Sequence, Tuple, Union

from .errors import DomainError
from .geodesic import shrink
from .intervals import IntervalSet
from .rational import ONE, ZERO, RatLike, as_rat, in_unit, rat_from_str, rat_to_str

ScalarLike = Callable[[Fraction], Fraction]
SetLike = Callable[[Fraction], IntervalSet]


def _check_u(u: Fraction) -> Fraction:
    u = as_rat(u)
    if not in_unit(u):
        raise DomainError(f"path parameter {u} is outside [0, 1]")
    return u


def _lerp(x0: Fraction, x1: Fraction, y0: Fraction, y1: Fraction, x: Fraction) -> Fraction:
    if x == x0:
        return y0
    return y0 + (y1 - y0) * (x - x0) / (x1 - x0)


def _check_knots(us: Sequence[Fraction]) -> None:
    if len(us) < 2 or us[0] != ZERO or us[-1] != ONE:
        raise DomainError("breakpoints must start at 0 and end at 1")
    if any(b <= a for a, b in zip(us, us[1:])):
        raise DomainError("breakpoints must be strictly increasing")


class ScalarPath:
    """Piecewise-linear path ``[0, 1] -> [0, 1]`` through rational breakpoints."""

    __slots__ = ("us", "values")

    def __init__(self, breakpoints: Sequence[Tuple[RatLike, RatLike]]):
        self.us = tuple(as_rat(u) for u, _ in breakpoints)
        self.values = tuple(as_rat(v) for _, v in breakpoints)
        _check_knots(self.us)
        if not all(in_unit(v) for v in self.values):
            raise DomainError("path values must lie in [0, 1]")

    @classmethod
    def constant(cls, value: RatLike) -> "ScalarPath":
        return cls([(0, value), (1, value)])

    @classmethod
    def affine(cls, start: RatLike, end: RatLike) -> "ScalarPath":
        return cls([(0, start), (1, end)])

    def __call__(self, u: RatLike) -> Fraction:
        u = _check_u(u)
        i = bisect.bisect_right(self.us, u) - 1
        if i >= len(self.us) - 1:
            return self.values[-1]
        return _lerp(self.us[i], self.us[i + 1], self.values[i], self.values[i + 1], u)

    def breakpoints(self) -> list[tuple[Fraction, Fraction]]:
        return list(zip(self.us, self.values))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ScalarPath):
            return NotImplemented
        return (self.us, self.values) == (other.us, other.values)

    def __repr__(self) -> str:
        return f"ScalarPath({[(str(u), str(v)) for u, v in self.breakpoints()]})"

    def to_json(self) -> dict:
        return {"breakpoints": [[rat_to_str(u), rat_to_str(v)] for u, v in self.breakpoints()]}

    @classmethod
    def from_json(cls, data: Mapping) -> "ScalarPath":
        return cls([(rat_from_str(u), rat_from_str(v)) for u, v in data["breakpoints"]])


class ConstantSetPath:
    def __init__(self, A: IntervalSet):
        self.A = A

    def __call__(self, u: RatLike) -> IntervalSet:
        _check_u(u)
        return self.A

    def __repr__(self) -> str:
        return f"ConstantSetPath({self.A!r})"


class KeyframedSetPath:
    """Interval family whose endpoints move linearly between keyframes.

    Every keyframe lists the same number of ``(lo, hi)`` pairs; pair ``i`` of
    one keyframe is interpolated towards pair ``i`` of the next. Overlaps that
    appear mid-motion are absorbed by canonicalization.
    """

    def __init__(self, keyframes: Sequence[Tuple[RatLike, Sequence[Tuple[RatLike, RatLike]]]]):
        self.us = tuple(as_rat(u) for u, _ in keyframes)
        self.frames = tuple(tuple((as_rat(lo), as_rat(hi)) for lo, hi in ivs) for _, ivs in keyframes)
        _check_knots(self.us)
        sizes = {len(f) for f in self.frames}
        if len(sizes) != 1:
            raise DomainError("all keyframes must list the same number of intervals")
        for frame in self.frames:
            IntervalSet(frame)  # validates 0 <= lo <= hi <= 1

    def __call__(self, u: RatLike) -> IntervalSet:
        u = _check_u(u)
        i = min(bisect.bisect_right(self.us, u) - 1, len(self.us) - 2)
        u0, u1 = self.us[i], self.us[i + 1]
        f0, f1 = self.frames[i], self.frames[i + 1]
        return IntervalSet(
            (_lerp(u0, u1, a[0], b[0], u), _lerp(u0, u1, a[1], b[1], u)) for a, b in zip(f0, f1)
        )

    def __repr__(self) -> str:
        return f"KeyframedSetPath({len(self.us)} keyframes)"

    def to_json(self) -> dict:
        return {"keyframes": [{"u": rat_to_str(u),
                               "intervals": [[rat_to_str(lo), rat_to_str(hi)] for lo, hi in frame]}
                              for u, frame in zip(self.us, self.frames)]}

    @classmethod
    def from_json(cls, data: Mapping) -> "KeyframedSetPath":
        return cls([(rat_from_str(k["u"]),
                     [(rat_from_str(lo), rat_from_str(hi)) for lo, hi in k["intervals"]])
                    for k in data["keyframes"]])


class DerivedSetPath:
    """Pointwise boolean combination of other set paths.

    ``op`` is ``"complement"`` (one child) or any binary op understood by
    ``IntervalSet.combine``, folded left over the children.
    """

    def __init__(self, op: str, *children: SetLike):
        if op == "complement" and len(children) != 1:
            raise DomainError("complement takes exactly one path")
        if op != "complement" and len(children) < 2:
            raise DomainError(f"{op} needs at least two paths")
        self.op = op
        self.children = children

    def __call__(self, u: RatLike) -> IntervalSet:
        sets = [c(u) for c in self.children]
        if self.op == "complement":
            return sets[0].complement()
        out = sets[0]
        for s in sets[1:]:
            out = out.combine(s, self.op)
        return out


def _value(path: Union[ScalarLike, RatLike], u: Fraction) -> Fraction:
    return as_rat(path(u)) if callable(path) else as_rat(path)


def overlap(E: SetLike, A: IntervalSet, u: RatLike) -> Fraction:
    """α(u) = λ(E_u ∩ A)."""
    u = _check_u(u)
    return (E(u) & A).measure


def _minus_at(a_u: Fraction, E_u: IntervalSet, A: IntervalSet) -> IntervalSet:
    inside = E_u & A
    alpha = inside.measure
    if alpha == 0:
        return IntervalSet.empty()
    return shrink(inside, ONE - min(a_u * E_u.measure, alpha) / alpha)


def _plus_at(a_u: Fraction, E_u: IntervalSet, A: IntervalSet) -> IntervalSet:
    outside = E_u - A
    room = outside.measure  # = λ(E_u) - α(u)
    if room == 0:
        return IntervalSet.empty()
    alpha = E_u.measure - room
    return shrink(outside, ONE - max(ZERO, a_u * E_u.measure - alpha) / room)


def phi_at(a_u: RatLike, E_u: IntervalSet, A: IntervalSet) -> IntervalSet:
    """Φ evaluated from the pointwise data ``a(u)``, ``E_u`` and ``A``."""
    a_u = as_rat(a_u)
    if not in_unit(a_u):
        raise DomainError(f"mass ratio {a_u} is outside [0, 1]")
    return _minus_at(a_u, E_u, A) | _plus_at(a_u, E_u, A)


def phi_minus(a: ScalarLike, E: SetLike, A: IntervalSet, u: RatLike) -> IntervalSet:
    u = _check_u(u)
    return _minus_at(_value(a, u), E(u), A)


def phi_plus(a: ScalarLike, E: SetLike, A: IntervalSet, u: RatLike) -> IntervalSet:
    u = _check_u(u)
    return _plus_at(_value(a, u), E(u), A)


def phi(a: ScalarLike, E: SetLike, A: IntervalSet, u: RatLike) -> IntervalSet:
    """Subset of ``E_u`` of measure ``a(u)·λ(E_u)``, equal to ``A`` at ``u = 0``
    whenever ``A ⊆ E_0`` and ``a(0)·λ(E_0) = λ(A)``."""
    u = _check_u(u)
    return phi_at(_value(a, u), E(u), A)
