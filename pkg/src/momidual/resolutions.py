"""Complexes of free modules from labelled cell complexes, and their checks.

A complex of Z^n-graded free modules is stored as generator degrees per
homological position plus sparse integer coefficient matrices; the
monomial on an entry is implied by the degree difference.  Exactness
against a target ideal or module oracle is checked degreewise: for scan
degree b the strand homology must vanish except at the augmentation end,
where the cokernel must match dim_k(target)_b.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping

from . import lattice as lt
from .errors import CapExceededError, PreconditionError, box_cap
from .complexes import LabelledCellComplex
from .homology import FieldChoice, matrix_rank
from .ideals import MonomialIdeal, MonomialModule, minimalize
from .lattice import Vec


@dataclass(frozen=True)
class FreeComplex:
    """Z^n-graded complex of free modules with monomial differentials."""

    n: int
    terms: Mapping[int, tuple[Vec, ...]]
    diffs: Mapping[int, Mapping[tuple[int, int], int]]

    def __post_init__(self) -> None:
        for h, degs in self.terms.items():
            for d in degs:
                if len(d) != self.n:
                    raise PreconditionError(f"degree {d} has wrong length for n={self.n}")
        for h, entries in self.diffs.items():
            if h not in self.terms or h - 1 not in self.terms:
                raise PreconditionError(f"differential at {h} lacks source or destination")
            src, dst = self.terms[h], self.terms[h - 1]
            for (r, c), coeff in entries.items():
                if coeff == 0:
                    raise PreconditionError("stored differential entries must be nonzero")
                if not (0 <= r < len(dst) and 0 <= c < len(src)):
                    raise PreconditionError(f"entry ({r},{c}) out of range at position {h}")
                if not lt.leq(dst[r], src[c]):
                    raise PreconditionError(
                        f"entry ({r},{c}) at {h} has non-monomial degree drop {dst[r]} -> {src[c]}"
                    )
        self._check_composition_zero()

    def _check_composition_zero(self) -> None:
        # entries along a two-step path share the implied monomial, so the
        # numeric coefficient product must cancel on its own
        for h in self.diffs:
            if h - 1 not in self.diffs:
                continue
            later, earlier = self.diffs[h], self.diffs[h - 1]
            acc: dict[tuple[int, int], int] = {}
            for (mid, c), coeff in later.items():
                for (r, mid2), coeff2 in earlier.items():
                    if mid2 == mid:
                        key = (r, c)
                        acc[key] = acc.get(key, 0) + coeff * coeff2
            if any(v != 0 for v in acc.values()):
                raise PreconditionError(f"composition of differentials at {h} is nonzero")

    def positions(self) -> list[int]:
        return sorted(h for h, degs in self.terms.items() if degs)

    def rank(self, h: int) -> int:
        return len(self.terms.get(h, ()))

    def ranks(self) -> dict[int, int]:
        return {h: len(d) for h, d in self.terms.items() if d}

    def generator_degrees(self) -> list[Vec]:
        return [d for degs in self.terms.values() for d in degs]

    def degree_shifted(self, v: Vec) -> "FreeComplex":
        """Add v to every generator degree."""
        terms = {h: tuple(lt.vadd(d, v) for d in degs) for h, degs in self.terms.items()}
        return FreeComplex(self.n, terms, self.diffs)

    def hom_shifted(self, j: int) -> "FreeComplex":
        """Shift homological degrees down by j."""
        terms = {h - j: degs for h, degs in self.terms.items()}
        diffs = {h - j: entries for h, entries in self.diffs.items()}
        return FreeComplex(self.n, terms, diffs)

    def strand_dims(self, b: Vec, field: FieldChoice = None) -> tuple[dict[int, int], dict[int, int]]:
        """Dimensions and differential ranks of the degree-b strand."""
        keep: dict[int, list[int]] = {}
        for h, degs in self.terms.items():
            keep[h] = [i for i, d in enumerate(degs) if lt.leq(d, b)]
        dims = {h: len(ix) for h, ix in keep.items()}
        ranks: dict[int, int] = {}
        for h, entries in self.diffs.items():
            rows = {i: k for k, i in enumerate(keep.get(h - 1, []))}
            cols = {i: k for k, i in enumerate(keep.get(h, []))}
            mat = [[0] * len(cols) for _ in rows]
            for (r, c), coeff in entries.items():
                if c in cols:
                    # monotone degrees: a kept column forces its row to be kept
                    mat[rows[r]][cols[c]] = coeff
            ranks[h] = matrix_rank(mat, field)
        return dims, ranks


def dual_complex(fc: FreeComplex) -> FreeComplex:
    """S-dual: transpose differentials, negate degrees and positions."""
    terms = {-h: tuple(tuple(-e for e in d) for d in degs) for h, degs in fc.terms.items()}
    diffs: dict[int, dict[tuple[int, int], int]] = {}
    for h, entries in fc.diffs.items():
        dual_pos = -h + 1
        diffs[dual_pos] = {(c, r): coeff for (r, c), coeff in entries.items()}
    return FreeComplex(fc.n, terms, diffs)


# -- constructions from labelled complexes ------------------------------------


def cellular_free_complex(complex_: LabelledCellComplex) -> FreeComplex:
    """F_X: one generator per cell at its label, boundary signs as coefficients."""
    if not complex_.cells:
        raise PreconditionError("cellular free complex of an empty complex")
    order: dict[int, list] = {}
    for d in range(complex_.dim() + 1):
        order[d] = complex_.cells_of_dim(d)
    index = {c.key: (c.dim, i) for d, cells in order.items() for i, c in enumerate(cells)}
    terms = {d: tuple(c.label for c in cells) for d, cells in order.items()}
    diffs: dict[int, dict[tuple[int, int], int]] = {}
    for d, cells in order.items():
        if d == 0:
            continue
        entries: dict[tuple[int, int], int] = {}
        for j, cell in enumerate(cells):
            for sub, sign in cell.boundary:
                entries[(index[sub][1], j)] = sign
        diffs[d] = entries
    return FreeComplex(complex_.n, terms, diffs)


def relative_free_complex(
    complex_: LabelledCellComplex, sub: LabelledCellComplex
) -> FreeComplex:
    """F_(X,Y): generators for the cells of X outside the closed subcomplex Y."""
    for key, cell in sub.cells.items():
        if key not in complex_.cells or complex_.cells[key].label != cell.label:
            raise PreconditionError("second argument is not a subcomplex of the first")
    kept: dict[int, list] = {}
    for cell in complex_.cells.values():
        if cell.key not in sub.cells:
            kept.setdefault(cell.dim, []).append(cell)
    if not kept:
        raise PreconditionError("relative complex is empty")
    for d in kept:
        kept[d].sort(key=lambda c: sorted(c.key))
    index = {c.key: i for cells in kept.values() for i, c in enumerate(cells)}
    terms = {d: tuple(c.label for c in cells) for d, cells in kept.items()}
    top = max(kept)
    for d in range(top + 1):
        terms.setdefault(d, ())
    diffs: dict[int, dict[tuple[int, int], int]] = {}
    for d, cells in kept.items():
        if d == 0:
            continue
        entries: dict[tuple[int, int], int] = {}
        for j, cell in enumerate(cells):
            for key, sign in cell.boundary:
                if key in index and complex_.cells[key].dim == d - 1:
                    entries[(index[key], j)] = sign
        if entries:
            diffs[d] = entries
    return FreeComplex(complex_.n, terms, diffs)


def cocellular_dual(
    complex_: LabelledCellComplex, sub: LabelledCellComplex, a: Vec
) -> FreeComplex:
    """F^(X,Y)[-a-1](1-n): cell F gives a generator of degree a+1-a_F at
    homological position n-1-dim(F); differentials are transposed incidences."""
    a = tuple(a)
    n = complex_.n
    shift = lt.vadd(a, lt.ones(n))
    for key, cell in sub.cells.items():
        if key not in complex_.cells or complex_.cells[key].label != cell.label:
            raise PreconditionError("second argument is not a subcomplex of the first")
    outside = [c for c in complex_.cells.values() if c.key not in sub.cells]
    if not outside:
        raise PreconditionError("no cells outside the subcomplex")
    for cell in outside:
        if not lt.leq(cell.label, shift):
            raise PreconditionError(f"cell label {cell.label} exceeds a+1 = {shift}")
    by_pos: dict[int, list] = {}
    for cell in outside:
        by_pos.setdefault(n - 1 - cell.dim, []).append(cell)
    for h in by_pos:
        by_pos[h].sort(key=lambda c: sorted(c.key))
    index = {c.key: i for cells in by_pos.values() for i, c in enumerate(cells)}
    terms = {h: tuple(lt.vsub(shift, c.label) for c in cells) for h, cells in by_pos.items()}
    top = max(by_pos)
    for h in range(min(by_pos), top + 1):
        terms.setdefault(h, ())
    keys_outside = set(index)
    diffs: dict[int, dict[tuple[int, int], int]] = {}
    for cell in outside:
        # the dual map sends the generator of each cell G to its cofaces F
        h_row = n - 1 - cell.dim
        for key, sign in cell.boundary:
            if key in keys_outside:
                h_col = h_row + 1  # boundary cell sits one position later
                entries = diffs.setdefault(h_col, {})
                entries[(index[cell.key], index[key])] = sign
    return FreeComplex(n, terms, diffs)


# -- checks -------------------------------------------------------------------


def is_minimal(fc: FreeComplex) -> bool:
    """No differential entry is a unit (no equal row and column degrees)."""
    for h, entries in fc.diffs.items():
        src, dst = fc.terms[h], fc.terms[h - 1]
        for (r, c) in entries:
            if dst[r] == src[c]:
                return False
    return True


@dataclass(frozen=True)
class ResolutionReport:
    target: str
    exact: bool
    minimal: bool
    ranks: Mapping[int, int]
    failures: tuple[tuple[Vec, int, int], ...]  # (degree, position, homology dim)
    scanned: int

    def __bool__(self) -> bool:
        return self.exact


def _join_closure(vectors: Iterable[Vec], n: int, cap: int) -> set[Vec]:
    current: set[Vec] = set(vectors)
    frontier = set(current)
    base = list(current)
    while frontier:
        fresh: set[Vec] = set()
        for b in frontier:
            for g in base:
                j = lt.join(b, g)
                if j not in current:
                    fresh.add(j)
        current |= fresh
        if len(current) > cap:
            raise CapExceededError(f"scan set exceeded cap {cap}")
        frontier = fresh
    return current


def is_exact_resolution(
    fc: FreeComplex,
    target: MonomialIdeal | MonomialModule,
    *,
    strict: bool = False,
    field: FieldChoice = None,
    cap: int | None = None,
) -> ResolutionReport:
    """Degreewise exactness of fc as a resolution of the target.

    The scan set is the join closure of all generator degrees (plus the
    target's generators when available); strict mode scans the full box
    between the componentwise min and max+1 instead.
    """
    degrees = list(fc.generator_degrees())
    described = getattr(target, "description", None) or f"ideal{getattr(target, 'gens', '')}"
    seeds = list(degrees)
    gens = getattr(target, "gens", None)
    if gens:
        seeds.extend(gens)
    if not seeds:
        return ResolutionReport(described, True, is_minimal(fc), fc.ranks(), (), 0)
    limit = box_cap(cap)
    if strict:
        lo = tuple(min(v[i] for v in seeds) for i in range(fc.n))
        hi = tuple(max(v[i] for v in seeds) + 1 for i in range(fc.n))
        scan: Iterable[Vec] = lt.DegreeBox(lo, hi).points(limit)
    else:
        scan = sorted(_join_closure(seeds, fc.n, limit))
    positions = fc.positions()
    h0 = min(positions) if positions else 0
    failures: list[tuple[Vec, int, int]] = []
    count = 0
    for b in scan:
        count += 1
        dims, ranks = fc.strand_dims(b, field)
        want = 1 if target.member(b) else 0
        coker = dims.get(h0, 0) - ranks.get(h0 + 1, 0)
        if coker != want:
            failures.append((b, h0, coker - want))
        top = max(dims) if dims else h0
        for h in range(h0 + 1, top + 1):
            hom = dims.get(h, 0) - ranks.get(h, 0) - ranks.get(h + 1, 0)
            if hom != 0:
                failures.append((b, h, hom))
    return ResolutionReport(
        described, not failures, is_minimal(fc), fc.ranks(), tuple(failures), count
    )


def acyclicity_check_cellular(
    complex_: LabelledCellComplex, field: FieldChoice = None, cap: int | None = None
) -> tuple[bool, tuple[Vec, ...]]:
    """Bounded subcomplexes X_B(b) must be acyclic for b in the label closure."""
    labels = [c.label for c in complex_.cells.values()]
    scan = sorted(_join_closure(labels, complex_.n, box_cap(cap)))
    bad = tuple(b for b in scan if not complex_.bounded_subcomplex(b).is_acyclic(field))
    return (not bad, bad)


def facet_decomposition(complex_: LabelledCellComplex, a: Vec) -> tuple[Vec, ...]:
    """Irreducible components read off the facet labels of a minimal
    resolution of I + m^{a+1}: each facet contributes its bounded part."""
    a = tuple(a)
    n = complex_.n
    vertex_labels = [c.label for c in complex_.vertices()]
    ideal = minimalize(n, vertex_labels)
    if tuple(sorted(vertex_labels)) != ideal.gens:
        raise PreconditionError("vertex labels are not minimal generators")
    if not ideal.is_artinian():
        raise PreconditionError("facet decomposition needs an artinian ideal")
    inner = minimalize(n, (g for g in ideal.gens if lt.leq(g, a)))
    if inner.is_zero or inner.artinian_augment(a) != ideal:
        raise PreconditionError(f"vertex labels are not of the form I + m^(a+1) for a={a}")
    fc = cellular_free_complex(complex_)
    if not is_minimal(fc):
        raise PreconditionError("facet decomposition needs a minimal resolution")
    report = is_exact_resolution(fc, ideal)
    if not report.exact:
        raise PreconditionError("facet decomposition needs an exact resolution")
    facets = complex_.facets()
    if any(c.dim != n - 1 for c in facets):
        raise PreconditionError("resolution of an artinian ideal must be pure of dimension n-1")
    return tuple(sorted({lt.bounded_part(c.label, a) for c in facets}))


def betti_from_taylor(
    ideal: MonomialIdeal, field: FieldChoice = None, cap: int = 12
) -> dict[tuple[int, Vec], int]:
    """Betti numbers read from the Taylor complex tensored down to the field.

    Independent of the upper-Koszul route: for each degree b the surviving
    basis is the family of generator subsets with join exactly b.
    """
    ideal._require_proper("betti_from_taylor")
    r = len(ideal.gens)
    if r > cap:
        raise CapExceededError(f"taylor strand oracle on {r} generators exceeds cap {cap}")
    label: dict[frozenset, Vec] = {}
    for k in range(1, r + 1):
        for combo in combinations(range(r), k):
            key = frozenset(combo)
            label[key] = lt.join_all((ideal.gens[i] for i in combo), ideal.n)
    grouped: dict[tuple[int, Vec], list[frozenset]] = {}
    for key, b in label.items():
        grouped.setdefault((len(key) - 1, b), []).append(key)
    for v in grouped.values():
        v.sort(key=sorted)
    out: dict[tuple[int, Vec], int] = {}
    degrees = {b for _, b in grouped}
    for b in degrees:
        dims: dict[int, int] = {}
        ranks: dict[int, int] = {}
        for i in range(r):
            cols = grouped.get((i, b), [])
            rows_list = grouped.get((i - 1, b), [])
            dims[i] = len(cols)
            if not cols or not rows_list:
                ranks[i] = 0
                continue
            rows = {key: k for k, key in enumerate(rows_list)}
            mat = [[0] * len(cols) for _ in rows_list]
            for j, key in enumerate(cols):
                for pos, v in enumerate(sorted(key)):
                    sub = key - {v}
                    if sub in rows:
                        mat[rows[sub]][j] = -1 if pos % 2 else 1
            ranks[i] = matrix_rank(mat, field)
        for i in range(r):
            hom = dims.get(i, 0) - ranks.get(i, 0) - ranks.get(i + 1, 0)
            if hom:
                out[(i, b)] = hom
    return out
