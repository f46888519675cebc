"""Abstract simplicial complexes as face oracles, and finitely supported laws on them."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Optional

from .errors import DomainError
from .rational import ONE, ZERO, RatLike, as_rat, rat_from_str, rat_to_str
from .stepfn import StepFn, Vertex, sorted_vertices, vertex_from_json, vertex_to_json


class SimplicialComplex:
    """Downward-closed family of finite vertex sets, stored by its maximal faces.

    With ``full_simplex=True`` every nonempty finite subset of the vertex
    universe is a face. If no vertices are given in that mode the universe is
    the nonnegative integers, which is what P_f*(ℕ) needs.
    """

    def __init__(self, maximal_faces: Iterable[Iterable[Vertex]] = (),
                 full_simplex: bool = False,
                 vertices: Optional[Iterable[Vertex]] = None):
        self.full_simplex = full_simplex
        if full_simplex:
            self.maximal_faces = frozenset()
            self.vertices = None if vertices is None else frozenset(vertices)
            if self.vertices is not None and not self.vertices:
                self.vertices = None
            return
        faces = {frozenset(f) for f in maximal_faces}
        if any(not f for f in faces):
            raise DomainError("faces must be nonempty")
        self.maximal_faces = frozenset(f for f in faces if not any(f < g for g in faces))
        self.vertices = frozenset().union(*self.maximal_faces)
        if vertices is not None and frozenset(vertices) != self.vertices:
            raise DomainError("vertex set must equal the union of the maximal faces")

    @classmethod
    def full(cls, vertices: Optional[Iterable[Vertex]] = None) -> "SimplicialComplex":
        return cls(full_simplex=True, vertices=vertices)

    def _is_vertex(self, v: Vertex) -> bool:
        if self.vertices is not None:
            return v in self.vertices
        return isinstance(v, int) and not isinstance(v, bool) and v >= 0

    def is_face(self, F: Iterable[Vertex]) -> bool:
        F = frozenset(F)
        if not F:
            raise DomainError("the empty set is not a candidate face")
        if self.full_simplex:
            return all(self._is_vertex(v) for v in F)
        return any(F <= m for m in self.maximal_faces)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return (self.full_simplex, self.vertices, self.maximal_faces) == \
            (other.full_simplex, other.vertices, other.maximal_faces)

    def __repr__(self) -> str:
        if self.full_simplex:
            return f"SimplicialComplex(full_simplex=True, vertices={self.vertices!r})"
        faces = [sorted_vertices(f) for f in self.maximal_faces]
        return f"SimplicialComplex({sorted(faces, key=repr)!r})"

    def to_json(self) -> dict:
        verts = [] if self.vertices is None else sorted_vertices(self.vertices)
        faces = sorted((sorted_vertices(f) for f in self.maximal_faces), key=repr)
        return {
            "vertices": [vertex_to_json(v) for v in verts],
            "maximal_faces": [[vertex_to_json(v) for v in f] for f in faces],
            "full_simplex": self.full_simplex,
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "SimplicialComplex":
        verts = [vertex_from_json(v) for v in data.get("vertices", [])]
        faces = [[vertex_from_json(v) for v in f] for f in data.get("maximal_faces", [])]
        if data.get("full_simplex", False):
            return cls.full(verts or None)
        return cls(faces, vertices=verts if verts else None)


class Pmf:
    """Finitely supported probability mass function with exact masses.

    Zero entries are dropped on construction; negative entries or a total
    different from one raise ``DomainError``.
    """

    __slots__ = ("_mass",)

    def __init__(self, mass: Mapping[Vertex, RatLike]):
        clean = {}
        for v, m in mass.items():
            m = as_rat(m)
            if m < 0:
                raise DomainError(f"negative mass {m} at {v!r}")
            if m > 0:
                clean[v] = m
        if sum(clean.values(), ZERO) != ONE:
            raise DomainError("masses do not sum to 1")
        self._mass = {v: clean[v] for v in sorted_vertices(clean)}

    @classmethod
    def point(cls, v: Vertex) -> "Pmf":
        return cls({v: ONE})

    def __getitem__(self, v: Vertex) -> Fraction:
        return self._mass.get(v, ZERO)

    def __len__(self) -> int:
        return len(self._mass)

    def __iter__(self):
        return iter(self._mass)

    def items(self):
        return self._mass.items()

    def support(self) -> frozenset:
        return frozenset(self._mass)

    def as_dict(self) -> dict:
        return dict(self._mass)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Pmf):
            return NotImplemented
        return self._mass == other._mass

    def __hash__(self) -> int:
        return hash(frozenset(self._mass.items()))

    def __repr__(self) -> str:
        body = ", ".join(f"{v!r}: {m}" for v, m in self._mass.items())
        return f"Pmf({{{body}}})"

    def to_json(self) -> dict:
        return {vertex_to_json(v): rat_to_str(m) for v, m in self._mass.items()}

    @classmethod
    def from_json(cls, data: Mapping[str, str]) -> "Pmf":
        return cls({vertex_from_json(k): rat_from_str(v) for k, v in data.items()})


def is_face(K: SimplicialComplex, F: Iterable[Vertex]) -> bool:
    return K.is_face(F)


def in_L(K: SimplicialComplex, f: StepFn) -> bool:
    """Membership in L(Ω, K).

    For a finite-image ``f`` this also decides membership in the closure,
    since every finite subset of the image is a face iff the image is.
    """
    return K.is_face(f.essential_image())


def pmf_in_realization(K: SimplicialComplex, alpha: Pmf) -> bool:
    return K.is_face(alpha.support())
