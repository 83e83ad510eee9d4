"""Abstract simplicial complexes and the squarefree ideal bridge."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from . import lattice as lt
from .errors import PreconditionError
from .ideals import MonomialIdeal, minimalize
from .lattice import Face, Vec


@dataclass(frozen=True)
class SimplicialComplex:
    """Downward-closed family of faces on vertices 0..n-1."""

    n: int
    faces: frozenset[Face]

    def __post_init__(self) -> None:
        for f in self.faces:
            if any(i < 0 or i >= self.n for i in f):
                raise PreconditionError(f"face {sorted(f)} out of range for n={self.n}")
            for i in f:
                if f - {i} not in self.faces:
                    raise PreconditionError(f"not downward closed at face {sorted(f)}")
        if self.faces and frozenset() not in self.faces:
            raise PreconditionError("a nonempty complex must contain the empty face")

    @property
    def is_void(self) -> bool:
        return not self.faces

    def has_face(self, f: Face) -> bool:
        return f in self.faces

    def dim(self) -> int:
        if self.is_void:
            raise PreconditionError("the void complex has no dimension")
        return max(len(f) for f in self.faces) - 1

    def facets(self) -> tuple[Face, ...]:
        tops = [f for f in self.faces if not any(f < g for g in self.faces)]
        return tuple(sorted(tops, key=sorted))

    def is_full_simplex(self) -> bool:
        return lt.full_face(self.n) in self.faces

    def dual(self) -> "SimplicialComplex":
        """Faces whose vertex complement is a nonface."""
        all_faces = _all_subsets(self.n)
        kept = frozenset(f for f in all_faces if lt.complement_face(f, self.n) not in self.faces)
        return SimplicialComplex(self.n, kept)


def complex_from_facets(n: int, facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    faces: set[Face] = set()
    for facet in facets:
        base = frozenset(facet)
        for k in range(len(base) + 1):
            faces.update(frozenset(c) for c in combinations(sorted(base), k))
    if not faces:
        return SimplicialComplex(n, frozenset())
    return SimplicialComplex(n, frozenset(faces))


def _all_subsets(n: int) -> list[Face]:
    verts = range(n)
    out: list[Face] = []
    for k in range(n + 1):
        out.extend(frozenset(c) for c in combinations(verts, k))
    return out


def stanley_reisner(complex_: SimplicialComplex) -> MonomialIdeal:
    """Squarefree ideal generated by the minimal nonfaces."""
    if complex_.is_full_simplex():
        raise PreconditionError("the full simplex has no nonfaces")
    nonfaces = [f for f in _all_subsets(complex_.n) if f not in complex_.faces]
    minimal = [f for f in nonfaces if all(f - {i} in complex_.faces for i in f)]
    return minimalize(complex_.n, (lt.char_vector(f, complex_.n) for f in minimal))


def complex_of_squarefree(ideal: MonomialIdeal) -> SimplicialComplex:
    """Inverse bridge: faces are the squarefree monomials outside the ideal."""
    if any(any(e > 1 for e in g) for g in ideal.gens):
        raise PreconditionError("ideal is not squarefree")
    faces = frozenset(
        f for f in _all_subsets(ideal.n) if not ideal.member(lt.char_vector(f, ideal.n))
    )
    return SimplicialComplex(ideal.n, faces)
