"""The probability-law map, its inverse-CDF section, path lifting and finite projection."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from .errors import DomainError, PreconditionError
from .geodesic import resize
from .homotopy import ScalarPath, _check_knots, _check_u, phi_at
from .intervals import IntervalSet, union_all
from .rational import ONE, ZERO, RatLike, as_rat, in_unit, rat_from_str, rat_to_str
from .simplicial import Pmf
from .stepfn import StepFn, Vertex, sorted_vertices, vertex_from_json, vertex_to_json


def law(f: StepFn) -> Pmf:
    return Pmf({v: s.measure for v, s in f.items()})


def d1(alpha: Pmf, beta: Pmf) -> Fraction:
    keys = alpha.support() | beta.support()
    return sum((abs(alpha[v] - beta[v]) for v in keys), ZERO)


def section(alpha: Pmf, ordering: Optional[Sequence[Vertex]] = None) -> StepFn:
    """Lay the masses of ``alpha`` out as consecutive intervals in vertex order.

    ``ordering`` lists vertices from smallest to largest; by default the
    natural vertex order is used.
    """
    if ordering is None:
        order = sorted_vertices(alpha.support())
    else:
        rank = {v: i for i, v in enumerate(ordering)}
        missing = [v for v in alpha.support() if v not in rank]
        if missing:
            raise DomainError(f"ordering misses support vertices {sorted_vertices(missing)!r}")
        order = sorted(alpha.support(), key=rank.__getitem__)
    pieces = {}
    start = ZERO
    for v in order:
        end = start + alpha[v]
        pieces[v] = IntervalSet._from_canonical(((start, end),))
        start = end
    return StepFn._trusted(pieces)


class PmfPath:
    """Path in the simplex: one piecewise-linear component per vertex, common breakpoints.

    The vertex order given here is the enumeration used by ``lift``.
    """

    def __init__(self, vertices: Sequence[Vertex], breakpoints: Sequence[RatLike],
                 values: Mapping[Vertex, Sequence[RatLike]]):
        self.vertices = tuple(vertices)
        if len(set(self.vertices)) != len(self.vertices) or not self.vertices:
            raise DomainError("vertex list must be nonempty without repeats")
        us = [as_rat(u) for u in breakpoints]
        _check_knots(us)
        self.components = {}
        for v in self.vertices:
            vals = values[v]
            if len(vals) != len(us):
                raise DomainError(f"component {v!r} has {len(vals)} values for {len(us)} breakpoints")
            self.components[v] = ScalarPath(list(zip(us, vals)))
        self.breakpoints = tuple(us)
        for i, u in enumerate(us):
            total = sum((self.components[v].values[i] for v in self.vertices), ZERO)
            if total != ONE:
                raise DomainError(f"masses sum to {total} at breakpoint u = {u}")

    def masses(self, u: RatLike) -> list[Fraction]:
        return [self.components[v](u) for v in self.vertices]

    def __call__(self, u: RatLike) -> Pmf:
        return Pmf(dict(zip(self.vertices, self.masses(u))))

    def to_json(self) -> dict:
        return {
            "vertices": [vertex_to_json(v) for v in self.vertices],
            "breakpoints": [rat_to_str(u) for u in self.breakpoints],
            "values": {vertex_to_json(v): [rat_to_str(x) for x in self.components[v].values]
                       for v in self.vertices},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "PmfPath":
        verts = [vertex_from_json(v) for v in data["vertices"]]
        raw = {vertex_from_json(k): v for k, v in data["values"].items()}
        return cls(verts, [rat_from_str(u) for u in data["breakpoints"]],
                   {v: [rat_from_str(x) for x in raw[v]] for v in verts})


@dataclass(frozen=True)
class LiftedPath:
    """Lift of a simplex path through the law map, starting at ``start``.

    Level sets are built vertex by vertex in the order of ``source.vertices``:
    vertex ``n`` takes, inside what earlier vertices left free, the fraction
    ``H_n(u) / (1 - Σ_{k<n} H_k(u))`` of that free space, moving continuously
    away from its starting level set.
    """

    source: PmfPath
    start: StepFn

    def __post_init__(self):
        extra = self.start.essential_image() - set(self.source.vertices)
        if extra:
            raise PreconditionError(f"start uses vertices {sorted_vertices(extra)!r} absent from the path")
        if law(self.start) != self.source(ZERO):
            raise PreconditionError("law of the start differs from the path at u = 0")

    def level_sets(self, u: RatLike) -> list[IntervalSet]:
        u = _check_u(u)
        out = []
        free = IntervalSet.full()
        used = ZERO
        for v, h in zip(self.source.vertices, self.source.masses(u)):
            remaining = ONE - used
            ratio = h / remaining if remaining != 0 else ZERO  # 0/0 = 0
            omega = phi_at(ratio, free, self.start.level_set(v))
            out.append(omega)
            free = free - omega
            used += h
        return out

    def __call__(self, u: RatLike) -> StepFn:
        return StepFn._trusted(dict(zip(self.source.vertices, self.level_sets(u))))


def lift(H: PmfPath, h0: StepFn, u: RatLike) -> StepFn:
    return LiftedPath(H, h0)(u)


def lift_binary(target: ScalarPath, A0: IntervalSet, u: RatLike) -> IntervalSet:
    """Lift of a path in the 1-simplex through binary random variables, via g̃."""
    if target(ZERO) != A0.measure:
        raise PreconditionError("target(0) differs from the measure of the start set")
    return resize(A0, target(u))


def distance_to_outside(c: StepFn, s: Vertex, n: int) -> Fraction:
    """Distance from ``c`` to the closed set ``{f : λ(f⁻¹(s)) ≤ 1/n}``."""
    return max(ZERO, c.level_set(s).measure - Fraction(1, n))


def mode(c: StepFn) -> Vertex:
    """Vertex with the largest level set; ties go to the smallest vertex."""
    best = None
    for v, s in c.items():  # items are in vertex order
        if best is None or s.measure > best[1]:
            best = (v, s.measure)
    if best is None:
        raise AssertionError("step function with empty image")
    return best[0]


@dataclass(frozen=True)
class FiniteProjection:
    """Retraction of a finite family onto step functions with values in a fixed finite set.

    ``centers`` are the cover vertices s_1..s_r, every member lies in some
    ``{λ(c⁻¹(s_i)) > 1/n0}``, and ``F`` collects the centers and the images of
    the members that must stay fixed.
    """

    centers: tuple
    n0: int
    F: frozenset

    def weights(self, c: StepFn) -> list[Fraction]:
        raw = [distance_to_outside(c, s, self.n0) for s in self.centers]
        total = sum(raw, ZERO)
        if total == 0:
            raise AssertionError("step function is outside every cover set")
        return [w / total for w in raw]

    def __call__(self, c: StepFn) -> StepFn:
        loose = union_all(s for v, s in c.items() if v not in self.F)
        pieces = {v: s for v, s in c.items() if v in self.F}
        if loose:
            lo = ZERO
            for s_i, w in zip(self.centers, self.weights(c)):
                hi = lo + w
                if w:
                    part = loose & IntervalSet._from_canonical(((lo, hi),))
                    if part:
                        pieces[s_i] = pieces[s_i] | part if s_i in pieces else part
                lo = hi
        return StepFn._trusted(pieces)


def project_finite(C: Sequence[StepFn], C0: Iterable[StepFn] = ()) -> FiniteProjection:
    """Choose the cover (one mode vertex per member, smallest uniform ``n0``) and return ``p``."""
    C = list(C)
    if not C:
        raise DomainError("family must be nonempty")
    centers: list = []
    for c in C:
        m = mode(c)
        if m not in centers:
            centers.append(m)
    centers = sorted_vertices(centers)
    smallest_top = min(c.level_set(mode(c)).measure for c in C)
    n0 = math.floor(1 / smallest_top) + 1
    F = set(centers)
    for c in C0:
        F |= c.essential_image()
    return FiniteProjection(tuple(centers), n0, frozenset(F))
