"""Hull and cohull complexes via exact rational feasibility.

The hull complex of I is the poset of bounded faces of
conv{t^b : x^b in I} for a parameter t; its bounded faces are exactly the
argmin sets of strictly positive linear functionals over the generator
points.  Feasibility of the defining systems (equalities plus weak and
strict inequalities) is decided by Fourier-Motzkin elimination over the
rationals with strictness flags carried through, returning a witness used
to read off equality sets.

Face enumeration walks the poset bottom-up: the minimal face containing
two already-found faces that share a codimension-1 subface is their join,
computed by one feasibility call plus one strictness probe per candidate
vertex.  Every face arises this way, by the diamond property.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Iterable, Literal, Sequence

from . import lattice as lt
from .errors import CapExceededError, PreconditionError, hull_generator_cap
from .complexes import CellKey, LabelledCellComplex
from .homology import rank_bareiss
from .ideals import MonomialIdeal
from .lattice import Vec
from .resolutions import FreeComplex, cocellular_dual

Rel = Literal["eq", "ge", "gt"]


@dataclass(frozen=True)
class Constraint:
    """sum(coeffs . x) + const REL 0."""

    coeffs: tuple[Fraction, ...]
    const: Fraction
    rel: Rel


def _normalized(c: Constraint) -> Constraint:
    denoms = [f.denominator for f in c.coeffs] + [c.const.denominator]
    scale = 1
    for d in denoms:
        scale = scale * d // _gcd(scale, d)
    nums = [int(f * scale) for f in c.coeffs] + [int(c.const * scale)]
    g = 0
    for v in nums:
        g = _gcd(g, abs(v))
    if g > 1:
        nums = [v // g for v in nums]
    return Constraint(tuple(Fraction(v) for v in nums[:-1]), Fraction(nums[-1]), c.rel)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


class StrictLinearSystem:
    """Rational linear system mixing equalities with weak and strict inequalities."""

    def __init__(self, nvars: int, constraints: Iterable[Constraint]):
        self.nvars = nvars
        self.constraints = list(constraints)

    def feasible(self) -> tuple[Fraction, ...] | None:
        """A witness point, or None when the system has no solution."""
        eqs: list[Constraint] = []
        ineqs: list[Constraint] = []
        for c in self.constraints:
            if len(c.coeffs) != self.nvars:
                raise PreconditionError("constraint arity does not match variable count")
            (eqs if c.rel == "eq" else ineqs).append(c)
        # solve the equalities by substitution
        assignments: list[tuple[int, tuple[Fraction, ...], Fraction]] = []
        while eqs:
            c = eqs.pop()
            pivot = next((i for i, v in enumerate(c.coeffs) if v != 0), None)
            if pivot is None:
                if c.const != 0:
                    return None
                continue
            inv = Fraction(-1, 1) / c.coeffs[pivot]
            expr = tuple(v * inv if i != pivot else Fraction(0) for i, v in enumerate(c.coeffs))
            const = c.const * inv
            assignments.append((pivot, expr, const))
            eqs = [_substitute(e, pivot, expr, const) for e in eqs]
            ineqs = [_substitute(e, pivot, expr, const) for e in ineqs]
        values = self._eliminate(ineqs)
        if values is None:
            return None
        # restore the eliminated variables in reverse order
        for pivot, expr, const in reversed(assignments):
            values[pivot] = sum((e * v for e, v in zip(expr, values)), const)
        return tuple(values)

    def _eliminate(self, ineqs: list[Constraint]) -> list[Fraction] | None:
        if _check_constants(ineqs) is False:
            return None
        remaining = [i for i in range(self.nvars) if any(c.coeffs[i] != 0 for c in ineqs)]
        stack: list[tuple[int, list[Constraint]]] = []
        system = [_normalized(c) for c in ineqs]
        while remaining:
            var = min(remaining, key=lambda i: self._product_cost(system, i))
            lowers, uppers, rest = [], [], []
            for c in system:
                v = c.coeffs[var]
                if v > 0:
                    lowers.append(c)
                elif v < 0:
                    uppers.append(c)
                else:
                    rest.append(c)
            combined = []
            for lo in lowers:
                for up in uppers:
                    combined.append(_combine(lo, up, var))
            stack.append((var, lowers + uppers))
            system = rest + [_normalized(c) for c in combined]
            system = _dedupe(system)
            verdict = _check_constants(system)
            if verdict is False:
                return None
            system = [c for c in system if any(v != 0 for v in c.coeffs)]
            remaining = [i for i in remaining if i != var and any(c.coeffs[i] != 0 for c in system)]
        if _check_constants(system) is False:
            return None
        values: list[Fraction] = [Fraction(0)] * self.nvars
        for var, bounds in reversed(stack):
            lo = hi = None
            lo_strict = hi_strict = False
            for c in bounds:
                v = c.coeffs[var]
                others = sum((c.coeffs[i] * values[i] for i in range(self.nvars) if i != var),
                             c.const)
                bound = -others / v
                if v > 0:
                    if lo is None or bound > lo or (bound == lo and c.rel == "gt"):
                        lo, lo_strict = bound, c.rel == "gt"
                else:
                    if hi is None or bound < hi or (bound == hi and c.rel == "gt"):
                        hi, hi_strict = bound, c.rel == "gt"
            values[var] = _pick(lo, lo_strict, hi, hi_strict)
        return values

    @staticmethod
    def _product_cost(system: list[Constraint], var: int) -> int:
        lo = sum(1 for c in system if c.coeffs[var] > 0)
        hi = sum(1 for c in system if c.coeffs[var] < 0)
        return lo * hi - lo - hi


def _substitute(c: Constraint, var: int, expr: tuple[Fraction, ...], const: Fraction) -> Constraint:
    v = c.coeffs[var]
    if v == 0:
        return c
    coeffs = tuple(
        (c.coeffs[i] + v * expr[i]) if i != var else Fraction(0) for i in range(len(c.coeffs))
    )
    return Constraint(coeffs, c.const + v * const, c.rel)


def _combine(lo: Constraint, up: Constraint, var: int) -> Constraint:
    # lo: positive coefficient on var, up: negative; eliminate var
    a, b = lo.coeffs[var], -up.coeffs[var]
    coeffs = tuple(b * lv + a * uv for lv, uv in zip(lo.coeffs, up.coeffs))
    const = b * lo.const + a * up.const
    rel: Rel = "gt" if ("gt" in (lo.rel, up.rel)) else "ge"
    return Constraint(coeffs, const, rel)


def _dedupe(system: list[Constraint]) -> list[Constraint]:
    seen: dict[tuple, Constraint] = {}
    for c in system:
        key = (c.coeffs, c.const)
        old = seen.get(key)
        if old is None or (old.rel == "ge" and c.rel == "gt"):
            seen[key] = c
    return list(seen.values())


def _check_constants(system: list[Constraint]) -> bool:
    for c in system:
        if all(v == 0 for v in c.coeffs):
            if c.rel == "gt" and not c.const > 0:
                return False
            if c.rel == "ge" and not c.const >= 0:
                return False
    return True


def _pick(lo, lo_strict: bool, hi, hi_strict: bool) -> Fraction:
    if lo is None and hi is None:
        return Fraction(0)
    if lo is None:
        return hi - 1
    if hi is None:
        return lo + 1
    if lo == hi:
        return lo
    return (lo + hi) / 2


# -- hull complex --------------------------------------------------------------


def default_t(n: int) -> Fraction:
    return Fraction(factorial(n + 1) + 1)


class _HullEnumerator:
    def __init__(self, points: Sequence[tuple[Fraction, ...]], n: int):
        self.points = points
        self.n = n
        self.r = len(points)

    def _system(self, eq_set: frozenset, strict_at: frozenset) -> StrictLinearSystem:
        base = min(eq_set)
        cons = [
            Constraint(tuple(Fraction(1 if j == i else 0) for j in range(self.n)),
                       Fraction(-1), "ge")
            for i in range(self.n)
        ]
        for w in range(self.r):
            if w == base:
                continue
            diff = tuple(self.points[w][j] - self.points[base][j] for j in range(self.n))
            rel: Rel = "eq" if w in eq_set else ("gt" if w in strict_at else "ge")
            cons.append(Constraint(diff, Fraction(0), rel))
        return StrictLinearSystem(self.n, cons)

    def witness(self, eq_set: frozenset, strict_at: frozenset = frozenset()):
        return self._system(eq_set, strict_at).feasible()

    def is_vertex(self, v: int) -> bool:
        others = frozenset(range(self.r)) - {v}
        return self.witness(frozenset({v}), strict_at=others) is not None

    def equality_set(self, phi: tuple[Fraction, ...]) -> frozenset:
        values = [sum(p * f for p, f in zip(pt, phi)) for pt in self.points]
        floor = min(values)
        return frozenset(i for i, v in enumerate(values) if v == floor)

    def closure(self, seed: frozenset) -> frozenset | None:
        """Smallest bounded face containing the seed vertices, if any."""
        phi = self.witness(seed)
        if phi is None:
            return None
        face = set(seed)
        for w in sorted(self.equality_set(phi) - seed):
            if self.witness(seed, strict_at=frozenset({w})) is None:
                face.add(w)
        return frozenset(face)

    def affine_dim(self, face: frozenset) -> int:
        members = sorted(face)
        base = members[0]
        rows = []
        for v in members[1:]:
            row = [self.points[v][j] - self.points[base][j] for j in range(self.n)]
            scale = 1
            for entry in row:
                scale = scale * entry.denominator // _gcd(scale, entry.denominator)
            rows.append([int(entry * scale) for entry in row])
        return rank_bareiss(rows)

    def enumerate_faces(self) -> dict[frozenset, int]:
        for v in range(self.r):
            if not self.is_vertex(v):
                raise PreconditionError(
                    f"generator #{v} is not a vertex; raise t above (n+1)!"
                )
        found: dict[frozenset, int] = {frozenset({v}): 0 for v in range(self.r)}
        for d in range(1, self.n):
            prev = [f for f, dim in found.items() if dim == d - 1]
            for f1, f2 in combinations(sorted(prev, key=sorted), 2):
                shared = f1 & f2
                shared_dim = self.affine_dim(shared) if shared else -1
                if shared and shared not in found:
                    continue
                if shared_dim != d - 2:
                    continue
                union = f1 | f2
                if any(dim == d and union <= f for f, dim in found.items()):
                    continue
                face = self.closure(union)
                if face is not None and face not in found:
                    found[face] = self.affine_dim(face)
        return found


def hull_complex(
    ideal: MonomialIdeal, t: Fraction | int | None = None, cap: int | None = None
) -> LabelledCellComplex:
    """Bounded faces of conv{t^b : x^b in I}, as a labelled cell complex."""
    ideal._require_proper("hull_complex")
    limit = cap if cap is not None else hull_generator_cap(ideal.n)
    r = len(ideal.gens)
    if r > limit:
        raise CapExceededError(f"hull on {r} generators exceeds cap {limit}")
    tt = Fraction(t) if t is not None else default_t(ideal.n)
    if tt <= 1:
        raise PreconditionError(f"hull parameter must exceed 1, got {tt}")
    points = [tuple(tt ** e for e in g) for g in ideal.gens]
    faces = _HullEnumerator(points, ideal.n).enumerate_faces()
    labels = {i: ideal.gens[i] for i in range(r)}
    return LabelledCellComplex.from_face_poset(ideal.n, labels, faces)


def cohull(
    ideal: MonomialIdeal,
    a: Vec | None = None,
    t: Fraction | int | None = None,
    cap: int | None = None,
) -> FreeComplex:
    """Cocellular complex resolving I, from the hull of I^a + m^{a+1}."""
    ideal._require_proper("cohull")
    a = ideal._dual_vector(a)
    dual = ideal.alexander_dual(a)
    augmented = dual.artinian_augment(a)
    hull = hull_complex(augmented, t, cap)
    if hull.dim() != ideal.n - 1:
        raise PreconditionError("hull of the augmented dual is not pure of dimension n-1")
    return cocellular_dual(hull, hull.unbounded_subcomplex(), a)


def hull_is_subdivision_check(complex_: LabelledCellComplex) -> tuple[bool, tuple[str, ...]]:
    """For artinian input the hull triangulates a simplex: pure of dimension
    n-1, combinatorial boundary equal to X_U, ridges on one or two facets."""
    problems: list[str] = []
    n = complex_.n
    facets = complex_.facets()
    if any(c.dim != n - 1 for c in facets):
        problems.append("not pure of dimension n-1")
    counts: dict[CellKey, int] = {}
    for c in complex_.cells.values():
        if c.dim == n - 1:
            for sub, _ in c.boundary:
                counts[sub] = counts.get(sub, 0) + 1
    if any(m not in (1, 2) for m in counts.values()):
        problems.append("a ridge lies on more than two facets")
    boundary = set(complex_.boundary_subcomplex().cells)
    unbounded = set(complex_.unbounded_subcomplex().cells)
    if boundary != unbounded:
        problems.append("combinatorial boundary differs from X_U")
    return (not problems, tuple(problems))


def interior_gcd_label_check(complex_: LabelledCellComplex) -> tuple[bool, tuple[CellKey, ...]]:
    """Observation on hulls of artinian ideals: every interior cell label is
    the meet of the labels of the facets containing it."""
    facets = complex_.facets()
    boundary = set(complex_.boundary_subcomplex().cells)
    bad: list[CellKey] = []
    for cell in complex_.cells.values():
        if cell.key in boundary:
            continue
        carriers = [f.label for f in facets if cell.key <= f.key]
        if not carriers or cell.label != lt.meet_all(carriers, complex_.n):
            bad.append(cell.key)
    return (not bad, tuple(bad))
