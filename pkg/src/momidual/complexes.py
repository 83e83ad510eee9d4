"""Labelled regular cell complexes: Taylor, Scarf, subcomplexes, deformation.

Cells are keyed by their vertex sets.  Simplicial complexes get the usual
alternating incidence signs; polytopal face posets get signs solved from
the diamond condition (every codimension-2 interval contributes one parity
constraint over GF(2), with edge endpoints forced opposite through a
virtual empty cell).  Any valid choice of signs yields the same homology.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Mapping

from . import lattice as lt
from .errors import (
    CapExceededError,
    DEFAULT_SCARF_SUBSET_CAP,
    DEFAULT_TAYLOR_CAP,
    PreconditionError,
)
from .homology import FieldChoice, boundary_sign, matrix_rank
from .ideals import MonomialIdeal
from .lattice import Vec

CellKey = frozenset


@dataclass(frozen=True)
class Cell:
    key: CellKey
    dim: int
    label: Vec
    boundary: tuple[tuple[CellKey, int], ...]  # codim-1 subcells with incidence signs


class LabelledCellComplex:
    """Finite regular cell complex with exponent-vector labels."""

    def __init__(self, n: int, cells: Mapping[CellKey, Cell], weak: bool = False):
        self.n = n
        self.cells = dict(cells)
        self.weak = weak
        self._validate_structure()

    # -- construction ---------------------------------------------------

    @classmethod
    def from_simplicial(
        cls, n: int, vertex_labels: Mapping[int, Vec], faces: Iterable[CellKey]
    ) -> "LabelledCellComplex":
        """Complex of simplices keyed by vertex sets, alternating signs."""
        face_set = {frozenset(f) for f in faces}
        face_set.discard(frozenset())
        cells: dict[CellKey, Cell] = {}
        for f in face_set:
            label = lt.join_all((tuple(vertex_labels[v]) for v in f), n)
            boundary = []
            if len(f) > 1:
                for v in f:
                    sub = f - {v}
                    if sub not in face_set:
                        raise PreconditionError(f"face {sorted(f)} is missing subface {sorted(sub)}")
                    boundary.append((sub, boundary_sign(f, v)))
            cells[f] = Cell(f, len(f) - 1, label, tuple(boundary))
        return cls(n, cells)

    @classmethod
    def from_face_poset(
        cls,
        n: int,
        vertex_labels: Mapping[int, Vec],
        face_dims: Mapping[CellKey, int],
    ) -> "LabelledCellComplex":
        """Complex from a polytopal face poset; signs solved over GF(2)."""
        faces = {frozenset(f): d for f, d in face_dims.items()}
        boundary_of: dict[CellKey, list[CellKey]] = {f: [] for f in faces}
        for f, d in faces.items():
            for g, e in faces.items():
                if e == d - 1 and g < f:
                    boundary_of[f].append(g)
        signs = _solve_incidence_signs(faces, boundary_of)
        cells: dict[CellKey, Cell] = {}
        for f, d in faces.items():
            label = lt.join_all((tuple(vertex_labels[v]) for v in f), n)
            boundary = tuple((g, signs[(f, g)]) for g in sorted(boundary_of[f], key=sorted))
            cells[f] = Cell(f, d, label, boundary)
        return cls(n, cells)

    # -- validation -----------------------------------------------------

    def _validate_structure(self) -> None:
        for key, cell in self.cells.items():
            if key != cell.key:
                raise PreconditionError("cell keyed under a different vertex set")
            if len(cell.label) != self.n:
                raise PreconditionError(f"label {cell.label} has wrong length for n={self.n}")
            for sub, sign in cell.boundary:
                if sub not in self.cells:
                    raise PreconditionError(f"boundary cell {sorted(sub)} missing from complex")
                other = self.cells[sub]
                if other.dim != cell.dim - 1:
                    raise PreconditionError("boundary record is not codimension 1")
                if not lt.leq(other.label, cell.label):
                    raise PreconditionError("labels are not monotone under inclusion")
                if sign not in (1, -1):
                    raise PreconditionError(f"incidence sign must be +-1, got {sign}")
            join = self._vertex_join(key)
            if self.weak:
                if cell.dim > 0 and not lt.leq(cell.label, join):
                    raise PreconditionError("weak label exceeds the join of vertex labels")
                if cell.dim == 0 and cell.label != join:
                    raise PreconditionError("vertex labels cannot be weakened")
            elif cell.label != join:
                raise PreconditionError(
                    f"cell {sorted(key)} label {cell.label} differs from vertex join {join}"
                )
        self._check_boundary_squares_to_zero()

    def _vertex_join(self, key: CellKey) -> Vec:
        labels = []
        for v in key:
            vert = frozenset({v})
            if vert not in self.cells:
                raise PreconditionError(f"vertex {v} of cell {sorted(key)} is not in the complex")
            labels.append(self.cells[vert].label)
        return lt.join_all(labels, self.n)

    def _check_boundary_squares_to_zero(self) -> None:
        for cell in self.cells.values():
            if cell.dim == 1:
                if sum(s for _, s in cell.boundary) != 0:
                    raise PreconditionError(f"edge {sorted(cell.key)} endpoints not oppositely signed")
            elif cell.dim >= 2:
                acc: dict[CellKey, int] = {}
                for g, s1 in cell.boundary:
                    for h, s2 in self.cells[g].boundary:
                        acc[h] = acc.get(h, 0) + s1 * s2
                if any(v != 0 for v in acc.values()):
                    raise PreconditionError(f"boundary of boundary nonzero at {sorted(cell.key)}")

    # -- basic queries ----------------------------------------------------

    def dim(self) -> int:
        if not self.cells:
            raise PreconditionError("the empty complex has no dimension")
        return max(c.dim for c in self.cells.values())

    def f_vector(self) -> tuple[int, ...]:
        if not self.cells:
            return ()
        counts = [0] * (self.dim() + 1)
        for c in self.cells.values():
            counts[c.dim] += 1
        return tuple(counts)

    def cells_of_dim(self, d: int) -> list[Cell]:
        return sorted((c for c in self.cells.values() if c.dim == d), key=lambda c: sorted(c.key))

    def vertices(self) -> list[Cell]:
        return self.cells_of_dim(0)

    def label(self, key: CellKey) -> Vec:
        return self.cells[frozenset(key)].label

    def facets(self) -> list[Cell]:
        covered = {sub for c in self.cells.values() for sub, _ in c.boundary}
        return sorted(
            (c for c in self.cells.values() if c.key not in covered), key=lambda c: sorted(c.key)
        )

    def is_strictly_labelled(self) -> bool:
        return all(c.label == self._vertex_join(c.key) for c in self.cells.values())

    # -- subcomplexes -----------------------------------------------------

    def subcomplex(self, keys: Iterable[CellKey]) -> "LabelledCellComplex":
        keep = {frozenset(k) for k in keys}
        for k in keep:
            if k not in self.cells:
                raise PreconditionError(f"cell {sorted(k)} not in complex")
            for sub, _ in self.cells[k].boundary:
                if sub not in keep:
                    raise PreconditionError(f"selection not closed: {sorted(k)} needs {sorted(sub)}")
        return LabelledCellComplex(self.n, {k: self.cells[k] for k in keep}, weak=self.weak)

    def bounded_subcomplex(self, b: Vec) -> "LabelledCellComplex":
        """X_B(b): cells whose label is componentwise <= b."""
        return self.subcomplex(k for k, c in self.cells.items() if lt.leq(c.label, tuple(b)))

    def unbounded_subcomplex(self, b: Vec | None = None) -> "LabelledCellComplex":
        """X_U(b): cells whose label is not componentwise >= b (default b = 1)."""
        bb = tuple(b) if b is not None else lt.ones(self.n)
        return self.subcomplex(k for k, c in self.cells.items() if not lt.leq(bb, c.label))

    def boundary_subcomplex(self) -> "LabelledCellComplex":
        """Closure of the (n-2)-cells lying in exactly one (n-1)-cell."""
        top = self.n - 1
        counts: dict[CellKey, int] = {}
        for c in self.cells.values():
            if c.dim == top:
                for sub, _ in c.boundary:
                    counts[sub] = counts.get(sub, 0) + 1
        seeds = [k for k, m in counts.items() if m == 1]
        keep: set[CellKey] = set()
        stack = list(seeds)
        while stack:
            k = stack.pop()
            if k in keep:
                continue
            keep.add(k)
            stack.extend(sub for sub, _ in self.cells[k].boundary)
        return self.subcomplex(keep)

    # -- homology of the underlying space ---------------------------------

    def space_homology(self, field: FieldChoice = None) -> dict[int, int]:
        """Reduced homology dimensions, empty complex giving no homology."""
        if not self.cells:
            return {}
        top = self.dim()
        by_dim = {d: self.cells_of_dim(d) for d in range(top + 1)}
        ranks: dict[int, int] = {}
        # augmentation: every vertex hits the virtual empty cell with sign +1
        ranks[0] = matrix_rank([[1] * len(by_dim[0])], field)
        for d in range(1, top + 1):
            lower = {c.key: i for i, c in enumerate(by_dim[d - 1])}
            cols = by_dim.get(d, [])
            rows = [[0] * len(cols) for _ in lower]
            for j, cell in enumerate(cols):
                for sub, sign in cell.boundary:
                    rows[lower[sub]][j] = sign
            ranks[d] = matrix_rank(rows, field)
        dims: dict[int, int] = {}
        dims[-1] = 1 - ranks.get(0, 0)
        for d in range(0, top + 1):
            dims[d] = len(by_dim.get(d, [])) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        return dims

    def is_acyclic(self, field: FieldChoice = None) -> bool:
        return all(v == 0 for v in self.space_homology(field).values())

    # -- relabelling -------------------------------------------------------

    def relabelled(self, fn: Callable[[Vec], Vec]) -> "LabelledCellComplex":
        cells = {
            k: Cell(k, c.dim, tuple(fn(c.label)), c.boundary) for k, c in self.cells.items()
        }
        return LabelledCellComplex(self.n, cells, weak=self.weak)


def _solve_incidence_signs(
    faces: Mapping[CellKey, int], boundary_of: Mapping[CellKey, list[CellKey]]
) -> dict[tuple[CellKey, CellKey], int]:
    """Choose signs satisfying the diamond parity constraints over GF(2)."""
    pairs = [(f, g) for f in faces for g in boundary_of[f]]
    index = {p: i for i, p in enumerate(pairs)}
    equations: list[tuple[int, int]] = []  # (bitmask over unknowns, parity)
    for f, d in faces.items():
        if d == 0:
            if boundary_of[f]:
                raise PreconditionError("a vertex cannot have boundary cells")
            continue
        if d == 1:
            mids = boundary_of[f]
            if len(mids) != 2:
                raise PreconditionError(f"edge {sorted(f)} has {len(mids)} endpoints")
            mask = (1 << index[(f, mids[0])]) | (1 << index[(f, mids[1])])
            equations.append((mask, 1))
            continue
        grouped: dict[CellKey, list[CellKey]] = {}
        for g in boundary_of[f]:
            for h in boundary_of[g]:
                grouped.setdefault(h, []).append(g)
        for h, mids in grouped.items():
            if len(mids) != 2:
                raise PreconditionError(
                    f"interval [{sorted(h)}, {sorted(f)}] is not a diamond ({len(mids)} middles)"
                )
            g1, g2 = mids
            mask = 0
            for p in ((f, g1), (g1, h), (f, g2), (g2, h)):
                mask ^= 1 << index[p]
            equations.append((mask, 1))
    solution = _solve_gf2(len(pairs), equations)
    return {p: (-1 if (solution >> i) & 1 else 1) for p, i in index.items()}


def _solve_gf2(nvars: int, equations: list[tuple[int, int]]) -> int:
    """Particular solution of a GF(2) linear system given as bitmask rows."""
    rows = [(mask, rhs) for mask, rhs in equations if mask or rhs]
    pivots: dict[int, tuple[int, int]] = {}
    for mask, rhs in rows:
        while mask:
            lead = mask.bit_length() - 1
            if lead in pivots:
                pmask, prhs = pivots[lead]
                mask ^= pmask
                rhs ^= prhs
            else:
                pivots[lead] = (mask, rhs)
                break
        else:
            if rhs:
                raise PreconditionError("incidence sign constraints are inconsistent")
    solution = 0
    # each pivot's mask has its leading bit highest, so lower bits are settled first
    for lead in sorted(pivots):
        mask, rhs = pivots[lead]
        value = rhs
        rest = mask & ~(1 << lead)
        while rest:
            bit = rest.bit_length() - 1
            value ^= (solution >> bit) & 1
            rest &= ~(1 << bit)
        if value:
            solution |= 1 << lead
    return solution


# -- named complexes ----------------------------------------------------------


def taylor_complex(ideal: MonomialIdeal, cap: int = DEFAULT_TAYLOR_CAP) -> LabelledCellComplex:
    """Full simplex on the minimal generators, labelled by joins."""
    ideal._require_proper("taylor_complex")
    r = len(ideal.gens)
    if r > cap:
        raise CapExceededError(f"taylor complex on {r} generators exceeds cap {cap}")
    labels = {i: ideal.gens[i] for i in range(r)}
    faces = [frozenset(c) for k in range(1, r + 1) for c in combinations(range(r), k)]
    return LabelledCellComplex.from_simplicial(ideal.n, labels, faces)


def scarf_complex(ideal: MonomialIdeal, cap: int = DEFAULT_SCARF_SUBSET_CAP) -> LabelledCellComplex:
    """Subsets of generators whose label is shared by no other subset."""
    ideal._require_proper("scarf_complex")
    if not ideal.is_generic():
        raise PreconditionError("scarf complex requires a generic ideal")
    r = len(ideal.gens)
    if 1 << r > cap:
        raise CapExceededError(f"scarf enumeration over 2^{r} subsets exceeds cap {cap}")
    label_counts: dict[Vec, int] = {}
    labels: dict[CellKey, Vec] = {}
    for k in range(1, r + 1):
        for combo in combinations(range(r), k):
            key = frozenset(combo)
            label = lt.join_all((ideal.gens[i] for i in combo), ideal.n)
            labels[key] = label
            label_counts[label] = label_counts.get(label, 0) + 1
    faces = [key for key, label in labels.items() if label_counts[label] == 1]
    vertex_labels = {i: ideal.gens[i] for i in range(r)}
    return LabelledCellComplex.from_simplicial(ideal.n, vertex_labels, faces)


def deform_complex(complex_: LabelledCellComplex, b: Vec) -> LabelledCellComplex:
    """Relabel every cell by f_b; joins are preserved, so strictness survives."""
    deformed = complex_.relabelled(lambda label: lt.deform(label, tuple(b)))
    for cell in deformed.cells.values():
        expected = lt.join_all(
            (deformed.cells[frozenset({v})].label for v in cell.key), deformed.n
        )
        if cell.label != expected:
            raise PreconditionError("deformation failed to preserve label joins")
    return deformed


def purity_check(complex_: LabelledCellComplex) -> bool:
    """Do all facets have dimension n-1?"""
    return all(c.dim == complex_.n - 1 for c in complex_.facets())
