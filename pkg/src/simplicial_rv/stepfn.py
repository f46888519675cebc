"""Random variables with finite essential image, stored as labeled interval partitions."""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Callable, Hashable, Iterable, Mapping, Sequence, Tuple, Union

from .errors import DomainError
from .intervals import IntervalSet, union_all
from .rational import ONE, ZERO, RatLike, as_rat, in_unit

Vertex = Hashable
_INT_RE = re.compile(r"-?\d+\Z")


def vertex_key(v: Vertex) -> tuple:
    """Total order on vertices: integers numerically, then strings lexically."""
    if isinstance(v, bool):
        return (2, repr(v))
    if isinstance(v, int):
        return (0, v, "")
    if isinstance(v, str):
        return (1, 0, v)
    return (2, repr(v))


def sorted_vertices(vs: Iterable[Vertex]) -> list:
    return sorted(vs, key=vertex_key)


def vertex_to_json(v: Vertex) -> str:
    return str(v)


def vertex_from_json(s: Union[str, int]) -> Vertex:
    if isinstance(s, int):
        return s
    return int(s) if _INT_RE.match(s) else s


class StepFn:
    """A point of L(Ω, S) with finite image: ``vertex -> level set``.

    The level sets must partition [0, 1); empty level sets are dropped so the
    key set is exactly the essential image.
    """

    __slots__ = ("_pieces", "_hash")

    def __init__(self, pieces: Mapping[Vertex, IntervalSet]):
        kept = {v: s for v, s in pieces.items() if s}
        total = sum((s.measure for s in kept.values()), ZERO)
        if total != ONE or union_all(kept.values()) != IntervalSet.full():
            raise DomainError("level sets do not partition [0, 1)")
        self._pieces = {v: kept[v] for v in sorted_vertices(kept)}
        self._hash = None

    @classmethod
    def _trusted(cls, pieces: Mapping[Vertex, IntervalSet]) -> "StepFn":
        obj = cls.__new__(cls)
        obj._pieces = {v: pieces[v] for v in sorted_vertices(pieces) if pieces[v]}
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, v: Vertex) -> "StepFn":
        return cls._trusted({v: IntervalSet.full()})

    @classmethod
    def from_pieces(cls, pieces: Iterable[Tuple[RatLike, RatLike, Vertex]]) -> "StepFn":
        """Build from ``(lo, hi, vertex)`` triples covering [0, 1)."""
        raw: dict = {}
        for lo, hi, v in pieces:
            raw.setdefault(v, []).append((lo, hi))
        return cls({v: IntervalSet(p) for v, p in raw.items()})

    @property
    def pieces(self) -> dict:
        return dict(self._pieces)

    def items(self):
        return self._pieces.items()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StepFn):
            return NotImplemented
        return self._pieces == other._pieces

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._pieces.items()))
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join(f"{v!r}: {s!r}" for v, s in self._pieces.items())
        return f"StepFn({{{body}}})"

    def __call__(self, t: RatLike) -> Vertex:
        t = as_rat(t)
        for v, s in self._pieces.items():
            if s.contains(t):
                return v
        raise DomainError(f"{t} is outside [0, 1)")

    def level_set(self, s: Vertex) -> IntervalSet:
        return self._pieces.get(s, IntervalSet.empty())

    def essential_image(self) -> frozenset:
        return frozenset(self._pieces)

    def segments(self) -> list[tuple[Fraction, Fraction, Vertex]]:
        """All labeled pieces sorted by left endpoint."""
        out = [(lo, hi, v) for v, s in self._pieces.items() for lo, hi in s]
        out.sort(key=lambda x: x[0])
        return out

    def to_json(self) -> list[dict]:
        return [{"vertex": vertex_to_json(v), "intervals": s.to_json()}
                for v, s in self._pieces.items()]

    @classmethod
    def from_json(cls, data: Sequence[Mapping]) -> "StepFn":
        pieces: dict = {}
        for item in data:
            v = vertex_from_json(item["vertex"])
            if v in pieces:
                raise DomainError(f"vertex {v!r} listed twice")
            pieces[v] = IntervalSet.from_json(item["intervals"])
        return cls(pieces)


def distance(f: StepFn, g: StepFn) -> Fraction:
    """λ{f ≠ g}, computed as one minus the total agreement mass."""
    agree = ZERO
    for v, s in f.items():
        other = g.level_set(v)
        if other:
            agree += (s & other).measure
    return ONE - agree


def level_set(f: StepFn, s: Vertex) -> IntervalSet:
    return f.level_set(s)


def essential_image(f: StepFn) -> frozenset:
    return f.essential_image()


def mix(gamma0: StepFn, gamma1: StepFn, u: RatLike) -> StepFn:
    """``gamma1`` on ``[0, u)`` and ``gamma0`` on ``[u, 1)``."""
    u = as_rat(u)
    if not in_unit(u):
        raise DomainError(f"mixing time {u} is outside [0, 1]")
    head = IntervalSet._from_canonical(((ZERO, u),)) if u > 0 else IntervalSet.empty()
    tail = head.complement()
    pieces: dict = {}
    for v, s in gamma1.items():
        part = s & head
        if part:
            pieces[v] = part
    for v, s in gamma0.items():
        part = s & tail
        if part:
            pieces[v] = pieces[v] | part if v in pieces else part
    return StepFn._trusted(pieces)


def truncate(f: StepFn, enumeration: Sequence[Vertex], n: int) -> StepFn:
    """Keep the values ``enumeration[0..n]`` and send everything else to ``enumeration[0]``."""
    if n < 0:
        raise DomainError("truncation index must be >= 0")
    if not enumeration:
        raise DomainError("empty enumeration")
    index = {v: k for k, v in enumerate(enumeration)}
    missing = [v for v in f.essential_image() if v not in index]
    if missing:
        raise DomainError(f"enumeration misses image vertices {sorted_vertices(missing)!r}")
    x0 = enumeration[0]
    kept: dict = {}
    moved = []
    for v, s in f.items():
        if index[v] <= n:
            kept[v] = s
        else:
            moved.append(s)
    if moved:
        kept[x0] = union_all([kept.get(x0, IntervalSet.empty()), *moved])
    return StepFn._trusted(kept)


def outside_support(f: StepFn, F: Iterable[Vertex]) -> IntervalSet:
    """``{t : f(t) ∉ F}``."""
    F = set(F)
    return union_all(s for v, s in f.items() if v not in F)


def pushforward(phi: Union[Mapping, Callable[[Vertex], Vertex]], f: StepFn) -> StepFn:
    """Compose ``phi`` after ``f``; level sets with equal image are merged."""
    groups: dict = {}
    for v, s in f.items():
        try:
            w = phi[v] if isinstance(phi, Mapping) else phi(v)
        except (KeyError, LookupError) as exc:
            raise DomainError(f"map undefined on image vertex {v!r}") from exc
        groups.setdefault(w, []).append(s)
    return StepFn._trusted({w: union_all(ss) for w, ss in groups.items()})
