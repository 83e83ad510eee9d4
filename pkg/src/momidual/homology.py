"""Exact simplicial homology and multigraded Betti and Bass numbers.

Ranks over the rationals use fraction-free Bareiss elimination on Python
ints; a prime field can be selected instead.  Betti numbers of a monomial
ideal come from reduced homology of upper Koszul complexes,

    beta_{i,b}(M) = dim H~_{i-1}(K_b(M)),   K_b(M) = {F : x^{b-F} in M},

evaluated over the lcm lattice of the generators.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping

from . import lattice as lt
from .errors import CapExceededError, DEFAULT_LATTICE_CAP, PreconditionError
from .ideals import MonomialIdeal, MonomialModule
from .lattice import Face, Vec

FieldChoice = int | None  # None -> rationals, p -> GF(p)


class RangeFlagWarning(UserWarning):
    """A Bass query fell outside the valid parameter range; the value is 0."""


def rank_bareiss(rows: list[list[int]]) -> int:
    """Rank over Q of an integer matrix, by fraction-free elimination."""
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(rank, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(rank + 1, nrows):
            # Bareiss update: the division by the previous pivot is exact.
            for j in range(c + 1, ncols):
                m[i][j] = (m[rank][c] * m[i][j] - m[i][c] * m[rank][j]) // prev
            m[i][c] = 0
        prev = m[rank][c]
        rank += 1
        if rank == nrows:
            break
    return rank


def rank_mod_p(rows: list[list[int]], p: int) -> int:
    """Rank of an integer matrix over GF(p)."""
    if p < 2:
        raise PreconditionError(f"field characteristic must be a prime, got {p}")
    m = [[e % p for e in r] for r in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, nrows) if m[i][c] % p != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], -1, p)
        m[rank] = [(e * inv) % p for e in m[rank]]
        for i in range(rank + 1, nrows):
            f = m[i][c]
            if f:
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def matrix_rank(rows: list[list[int]], field: FieldChoice = None) -> int:
    return rank_bareiss(rows) if field is None else rank_mod_p(rows, field)


def boundary_sign(face: Face, vertex: int) -> int:
    """Sign of the codim-1 face obtained by dropping a vertex (alternating)."""
    return -1 if sorted(face).index(vertex) % 2 else 1


def reduced_homology_dims(faces: Iterable[Face], field: FieldChoice = None) -> dict[int, int]:
    """Reduced homology dimensions of an explicit downward-closed face family.

    The void family has no homology at all; the family {0} (only the empty
    face) has one dimension in degree -1.
    """
    family = set(faces)
    if not family:
        return {}
    if frozenset() not in family:
        raise PreconditionError("a nonempty face family must contain the empty face")
    by_dim: dict[int, list[Face]] = {}
    for f in family:
        by_dim.setdefault(len(f) - 1, []).append(f)
    for d in by_dim:
        by_dim[d].sort(key=sorted)
    top = max(by_dim)
    ranks: dict[int, int] = {}
    for d in range(0, top + 1):
        lower = {f: i for i, f in enumerate(by_dim.get(d - 1, []))}
        cols = by_dim.get(d, [])
        rows = [[0] * len(cols) for _ in lower]
        for j, f in enumerate(cols):
            for v in f:
                rows[lower[f - {v}]][j] = boundary_sign(f, v)
        ranks[d] = matrix_rank(rows, field)
    dims: dict[int, int] = {}
    for d in range(-1, top + 1):
        dims[d] = len(by_dim.get(d, [])) - ranks.get(d, 0) - ranks.get(d + 1, 0)
    return dims


# -- upper Koszul complexes and Betti tables ---------------------------------


@dataclass(frozen=True)
class UpperKoszulComplex:
    """Faces F of the coordinate simplex with x^{b-F} in the module."""

    n: int
    base: Vec
    faces: frozenset[Face]


def upper_koszul(target: MonomialIdeal | MonomialModule, b: Vec) -> UpperKoszulComplex:
    n = target.n
    faces = set()
    for k in range(n + 1):
        for combo in combinations(range(n), k):
            f = frozenset(combo)
            if target.member(lt.vsub(b, lt.char_vector(f, n))):
                faces.add(f)
    return UpperKoszulComplex(n, b, frozenset(faces))


def lcm_lattice(ideal: MonomialIdeal, cap: int | None = None) -> frozenset[Vec]:
    """Join closure of the minimal generators (the nonzero joins)."""
    ideal._require_proper("lcm_lattice")
    limit = DEFAULT_LATTICE_CAP if cap is None else cap
    current: set[Vec] = set(ideal.gens)
    frontier = set(ideal.gens)
    while frontier:
        fresh: set[Vec] = set()
        for b in frontier:
            for g in ideal.gens:
                j = lt.join(b, g)
                if j not in current:
                    fresh.add(j)
        current |= fresh
        if len(current) > limit:
            raise CapExceededError(f"lcm lattice exceeded cap {limit}")
        frontier = fresh
    return frozenset(current)


@dataclass(frozen=True)
class BettiTable:
    """Nonzero multigraded Betti numbers, keyed by (homological index, degree)."""

    n: int
    entries: Mapping[tuple[int, Vec], int]

    def beta(self, i: int, b: Vec) -> int:
        return self.entries.get((i, tuple(b)), 0)

    def total(self, i: int) -> int:
        return sum(v for (j, _), v in self.entries.items() if j == i)

    def totals(self) -> tuple[int, ...]:
        if not self.entries:
            return ()
        top = max(i for i, _ in self.entries)
        return tuple(self.total(i) for i in range(top + 1))

    def degrees(self, i: int) -> tuple[Vec, ...]:
        return tuple(sorted(b for (j, b) in self.entries if j == i))

    def z_graded(self) -> dict[tuple[int, int], int]:
        """Coarse aggregation to (index, total degree)."""
        out: dict[tuple[int, int], int] = {}
        for (i, b), v in self.entries.items():
            key = (i, sum(b))
            out[key] = out.get(key, 0) + v
        return out

    def max_index(self) -> int:
        return max((i for i, _ in self.entries), default=-1)


def betti_table(
    ideal: MonomialIdeal,
    field: FieldChoice = None,
    degrees: Iterable[Vec] | None = None,
    cap: int | None = None,
) -> BettiTable:
    """Betti numbers of the ideal as a module (so beta_0 counts generators)."""
    if ideal.is_zero:
        return BettiTable(ideal.n, {})
    if ideal.is_unit:
        return BettiTable(ideal.n, {(0, lt.zero(ideal.n)): 1})
    scan = frozenset(tuple(b) for b in degrees) if degrees is not None else lcm_lattice(ideal, cap)
    entries: dict[tuple[int, Vec], int] = {}
    for b in scan:
        koszul = upper_koszul(ideal, b)
        dims = reduced_homology_dims(koszul.faces, field)
        for i in range(0, ideal.n + 1):
            d = dims.get(i - 1, 0)
            if d:
                entries[(i, b)] = d
    return BettiTable(ideal.n, entries)


def betti_number(ideal: MonomialIdeal, i: int, b: Vec, field: FieldChoice = None) -> int:
    """Single Betti number beta_{i,b} of the ideal, at any degree b."""
    if ideal.is_zero:
        return 0
    koszul = upper_koszul(ideal, tuple(b))
    return reduced_homology_dims(koszul.faces, field).get(i - 1, 0)


def betti_restricted(
    ideal: MonomialIdeal, face: Face, i: int, b: Vec, field: FieldChoice = None
) -> int:
    """beta_{i,b}(I) computed inside the face: equals beta of restrict_to(F)."""
    if lt.support(tuple(b)) - face:
        raise PreconditionError(f"degree {b} is not supported on face {sorted(face)}")
    return betti_number(ideal.restrict_to(face), i, lt.project(tuple(b), face), field)


# -- Bass numbers -------------------------------------------------------------


def bass_number(
    ideal: MonomialIdeal, face: Face, d: Vec, i: int, field: FieldChoice = None
) -> int:
    """Bass number mu_{i,d} of S/I at the prime of the face.

    Computed as beta_{i,c^a} of the Alexander dual, with c = d + F and the
    dual vector a = a_I joined with c.  Bass numbers vanish off the window
    0 <= d <= (a_I - 1).F; such queries return 0 and raise RangeFlagWarning.
    """
    ideal._require_proper("bass_number")
    d = tuple(d)
    if lt.support(d) - face:
        warnings.warn(f"degree {d} not supported on the face", RangeFlagWarning)
        return 0
    if any(e < 0 for e in d):
        warnings.warn(f"degree {d} has a negative coordinate", RangeFlagWarning)
        return 0
    chi = lt.char_vector(face, ideal.n)
    window = lt.join(ideal.lcm_exponent(), chi)
    limit = lt.restrict(tuple(e - 1 for e in window), face)
    if not lt.leq(d, limit):
        warnings.warn(f"degree {d} exceeds (a_I - 1).F = {limit}", RangeFlagWarning)
        return 0
    c = lt.vadd(d, chi)
    a = lt.join(ideal.lcm_exponent(), c)
    dual = ideal.alexander_dual(a)
    return betti_number(dual, i, lt.dual_exponent(c, a), field)
