"""Measurable subsets of the unit interval as canonical unions of half-open pieces.

A set is stored as a sorted tuple of disjoint, non-touching pieces ``[lo, hi)``
with exact rational endpoints. Two sets that agree up to a null set have the
same canonical form, so ``==`` is equality in L(2).

Boolean operations run a sweep over the merged endpoint list; the result of
``A op B`` has at most ``len(A) + len(B) + 1`` pieces.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Iterator, Sequence, Tuple

from .errors import DomainError
from .rational import ONE, ZERO, RatLike, as_rat, rat_from_str, rat_to_str

Piece = Tuple[Fraction, Fraction]

_OPS: dict[str, Callable[[bool, bool], bool]] = {
    "union": lambda a, b: a or b,
    "intersect": lambda a, b: a and b,
    "minus": lambda a, b: a and not b,
    "symm_diff": lambda a, b: a != b,
}


def _merge_sorted(pieces: Iterable[Piece]) -> tuple[Piece, ...]:
    out: list[list[Fraction]] = []
    for lo, hi in sorted(pieces):
        if lo == hi:
            continue
        if out and lo <= out[-1][1]:
            if hi > out[-1][1]:
                out[-1][1] = hi
        else:
            out.append([lo, hi])
    return tuple((lo, hi) for lo, hi in out)


class IntervalSet:
    """Canonical finite union of half-open rational intervals inside [0, 1)."""

    __slots__ = ("_pieces", "_measure")

    def __init__(self, pieces: Iterable[Tuple[RatLike, RatLike]] = ()):
        raw = []
        for lo, hi in pieces:
            lo, hi = as_rat(lo), as_rat(hi)
            if not (ZERO <= lo <= hi <= ONE):
                raise DomainError(f"piece [{lo}, {hi}) is not inside [0, 1] with lo <= hi")
            raw.append((lo, hi))
        self._pieces = _merge_sorted(raw)
        self._measure = None

    @classmethod
    def _from_canonical(cls, pieces: tuple[Piece, ...]) -> "IntervalSet":
        obj = cls.__new__(cls)
        obj._pieces = pieces
        obj._measure = None
        return obj

    @classmethod
    def empty(cls) -> "IntervalSet":
        return _EMPTY

    @classmethod
    def full(cls) -> "IntervalSet":
        return _FULL

    @classmethod
    def interval(cls, lo: RatLike, hi: RatLike) -> "IntervalSet":
        return cls([(lo, hi)])

    @property
    def pieces(self) -> tuple[Piece, ...]:
        return self._pieces

    def __iter__(self) -> Iterator[Piece]:
        return iter(self._pieces)

    def __len__(self) -> int:
        return len(self._pieces)

    def __bool__(self) -> bool:
        return bool(self._pieces)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntervalSet):
            return NotImplemented
        return self._pieces == other._pieces

    def __hash__(self) -> int:
        return hash(self._pieces)

    def __repr__(self) -> str:
        if not self._pieces:
            return "IntervalSet(∅)"
        body = " ∪ ".join(f"[{lo}, {hi})" for lo, hi in self._pieces)
        return f"IntervalSet({body})"

    @property
    def measure(self) -> Fraction:
        if self._measure is None:
            self._measure = sum((hi - lo for lo, hi in self._pieces), ZERO)
        return self._measure

    @property
    def inf(self) -> Fraction:
        if not self._pieces:
            raise DomainError("empty set has no infimum")
        return self._pieces[0][0]

    @property
    def sup(self) -> Fraction:
        if not self._pieces:
            raise DomainError("empty set has no supremum")
        return self._pieces[-1][1]

    def contains(self, t: RatLike) -> bool:
        t = as_rat(t)
        return any(lo <= t < hi for lo, hi in self._pieces)

    def combine(self, other: "IntervalSet", op: str) -> "IntervalSet":
        try:
            pred = _OPS[op]
        except KeyError:
            raise DomainError(f"unknown set operation {op!r}") from None
        a, b = self._pieces, other._pieces
        # fast paths keep the common shrink/lift loops cheap
        if not a or not b:
            keep_a, keep_b = pred(True, False), pred(False, True)
            if not a and not b:
                return _EMPTY
            if not b:
                return self if keep_a else _EMPTY
            return other if keep_b else _EMPTY
        edges = sorted({p for piece in a for p in piece} | {p for piece in b for p in piece})
        out: list[list[Fraction]] = []
        i = j = 0
        for lo, hi in zip(edges, edges[1:]):
            while i < len(a) and a[i][1] <= lo:
                i += 1
            while j < len(b) and b[j][1] <= lo:
                j += 1
            in_a = i < len(a) and a[i][0] <= lo
            in_b = j < len(b) and b[j][0] <= lo
            if pred(in_a, in_b):
                if out and out[-1][1] == lo:
                    out[-1][1] = hi
                else:
                    out.append([lo, hi])
        return IntervalSet._from_canonical(tuple((lo, hi) for lo, hi in out))

    def complement(self) -> "IntervalSet":
        out = []
        prev = ZERO
        for lo, hi in self._pieces:
            if lo > prev:
                out.append((prev, lo))
            prev = hi
        if prev < ONE:
            out.append((prev, ONE))
        return IntervalSet._from_canonical(tuple(out))

    def __or__(self, other: "IntervalSet") -> "IntervalSet":
        return self.combine(other, "union")

    def __and__(self, other: "IntervalSet") -> "IntervalSet":
        return self.combine(other, "intersect")

    def __sub__(self, other: "IntervalSet") -> "IntervalSet":
        return self.combine(other, "minus")

    def __xor__(self, other: "IntervalSet") -> "IntervalSet":
        return self.combine(other, "symm_diff")

    def __invert__(self) -> "IntervalSet":
        return self.complement()

    def issubset(self, other: "IntervalSet") -> bool:
        return not (self - other)

    __le__ = issubset

    def isdisjoint(self, other: "IntervalSet") -> bool:
        return not (self & other)

    def clip_from(self, t: Fraction) -> "IntervalSet":
        """Intersection with ``[t, 1)``."""
        out = []
        for lo, hi in self._pieces:
            if hi <= t:
                continue
            out.append((max(lo, t), hi))
        return IntervalSet._from_canonical(tuple(out))

    def to_json(self) -> list[list[str]]:
        return [[rat_to_str(lo), rat_to_str(hi)] for lo, hi in self._pieces]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[str]]) -> "IntervalSet":
        pieces = []
        for item in data:
            if len(item) != 2:
                raise DomainError(f"interval must be a [lo, hi] pair, got {item!r}")
            pieces.append((rat_from_str(item[0]), rat_from_str(item[1])))
        return cls(pieces)


_EMPTY = IntervalSet._from_canonical(())
_FULL = IntervalSet._from_canonical(((ZERO, ONE),))


def canonicalize(raw: Iterable[Tuple[RatLike, RatLike]]) -> IntervalSet:
    return IntervalSet(raw)


def combine(a: IntervalSet, b: IntervalSet, op: str) -> IntervalSet:
    return a.combine(b, op)


def complement(a: IntervalSet) -> IntervalSet:
    return a.complement()


def measure(a: IntervalSet) -> Fraction:
    return a.measure


def set_distance(a: IntervalSet, b: IntervalSet) -> Fraction:
    """Symmetric-difference metric of L(2)."""
    return (a ^ b).measure


def union_all(sets: Iterable[IntervalSet]) -> IntervalSet:
    pieces: list[Piece] = []
    for s in sets:
        pieces.extend(s.pieces)
    return IntervalSet._from_canonical(_merge_sorted(pieces))
