"""Monomial ideals, their duals, and irreducible decompositions.

An ideal is stored by its unique minimal generating exponents.  The zero
ideal (no generators) and the unit ideal (generated by x^0) are explicit
flagged states; duality operations reject both.

Three independent routes compute the Alexander dual:

* ``alexander_dual`` -- generators of the colon (m^{a+1} : I) with
  exponents <= a,
* ``dual_from_components`` -- dual exponents of the irreducible
  components,
* ``dual_via_box`` -- a brute-force scan of the box 0..a against the
  membership oracle for (cech hull, T-dual, shift) composed.

``DUAL_AUDIT`` cross-checks every top-level dual call against the other
two routes; any disagreement raises.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from . import lattice as lt
from .errors import CapExceededError, DimensionMismatchError, PreconditionError, box_cap
from .lattice import Face, Vec

# When True, alexander_dual re-derives its result via the component route
# and (within the box cap) the box-scan oracle and raises on mismatch.
DUAL_AUDIT = False


def _minimal_vectors(vectors: Iterable[Vec]) -> tuple[Vec, ...]:
    """Antichain of componentwise-minimal elements, sorted."""
    pool = sorted(set(vectors), key=lambda v: (sum(v), v))
    kept: list[Vec] = []
    for v in pool:
        if not any(lt.leq(u, v) for u in kept):
            kept.append(v)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal in n variables, held by its minimal generators."""

    n: int
    gens: tuple[Vec, ...]

    def __post_init__(self) -> None:
        for g in self.gens:
            if len(g) != self.n:
                raise DimensionMismatchError(f"generator {g} has length {len(g)}, expected {self.n}")
            if any(e < 0 for e in g):
                raise PreconditionError(f"negative exponent in generator {g}")
        if self.gens != _minimal_vectors(self.gens):
            raise PreconditionError("generators must be minimal and sorted; use minimalize()")

    # -- basic state ---------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return bool(self.gens) and self.gens[0] == lt.zero(self.n)

    @property
    def is_proper(self) -> bool:
        return not self.is_zero and not self.is_unit

    def _require_proper(self, what: str) -> None:
        if not self.is_proper:
            state = "zero" if self.is_zero else "unit"
            raise PreconditionError(f"{what} rejects the {state} ideal")

    def contains(self, c: Vec) -> bool:
        """Is x^c in the ideal?  Requires c >= 0."""
        lt.check_same_length(c, lt.zero(self.n))
        if any(e < 0 for e in c):
            raise PreconditionError(f"contains() expects a nonnegative exponent, got {c}")
        return any(lt.leq(g, c) for g in self.gens)

    def member(self, c: Vec) -> bool:
        """Total membership: False on any negative coordinate."""
        if len(c) != self.n:
            raise DimensionMismatchError(f"point {c} has length {len(c)}, expected {self.n}")
        return all(e >= 0 for e in c) and any(lt.leq(g, c) for g in self.gens)

    def lcm_exponent(self) -> Vec:
        """a_I, the join of all minimal generators."""
        self._require_proper("lcm_exponent")
        return lt.join_all(self.gens, self.n)

    def is_artinian(self) -> bool:
        """Does the ideal contain a power of every variable?"""
        pure = {next(iter(lt.support(g))) for g in self.gens if len(lt.support(g)) == 1}
        return len(pure) == self.n

    # -- algebra -------------------------------------------------------

    def plus(self, other: "MonomialIdeal") -> "MonomialIdeal":
        lt.check_same_length((0,) * self.n, (0,) * other.n)
        return minimalize(self.n, self.gens + other.gens)

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        lt.check_same_length((0,) * self.n, (0,) * other.n)
        if self.is_zero or other.is_zero:
            return minimalize(self.n, ())
        return minimalize(self.n, (lt.join(g, h) for g in self.gens for h in other.gens))

    def colon_monomial(self, c: Vec) -> "MonomialIdeal":
        """(I : x^c)."""
        if any(e < 0 for e in c):
            raise PreconditionError(f"colon by a monomial needs c >= 0, got {c}")
        return minimalize(self.n, (lt.pos_part(lt.vsub(g, c)) for g in self.gens))

    def colon_ideal(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """(I : J) = intersection of (I : x^g) over generators g of J."""
        if other.is_zero:
            raise PreconditionError("colon by the zero ideal is undefined")
        out = None
        for g in other.gens:
            piece = self.colon_monomial(g)
            out = piece if out is None else out.intersect(piece)
        assert out is not None
        return out

    def radical(self) -> "MonomialIdeal":
        return minimalize(self.n, (lt.char_vector(lt.support(g), self.n) for g in self.gens))

    def artinian_augment(self, a: Vec) -> "MonomialIdeal":
        """I + m^{a+1}.  Requires a >= a_I."""
        self._require_proper("artinian_augment")
        a_i = self.lcm_exponent()
        if not lt.leq(a_i, a):
            raise PreconditionError(f"augment needs a >= a_I = {a_i}, got {a}")
        frame = irreducible_power(lt.vadd(a, lt.ones(self.n)))
        return self.plus(frame)

    # -- restriction and localization -----------------------------------

    def restrict_to(self, face: Face) -> "MonomialIdeal":
        """Generators supported inside the face, as an ideal in |F| variables."""
        kept = [lt.project(g, face) for g in self.gens if lt.support(g) <= face]
        return minimalize(len(face), kept)

    def localize_at(self, face: Face) -> "MonomialIdeal":
        """Invert the variables off the face and contract back to |F| variables."""
        return minimalize(len(face), (lt.project(g, face) for g in self.gens))

    # -- duality --------------------------------------------------------

    def _dual_vector(self, a: Vec | None) -> Vec:
        a_i = self.lcm_exponent()
        if a is None:
            return a_i
        if len(a) != self.n:
            raise DimensionMismatchError(f"dual vector {a} has length {len(a)}, expected {self.n}")
        if not lt.leq(a_i, a):
            raise PreconditionError(f"dual needs a >= a_I = {a_i}, got a={a}")
        return a

    def alexander_dual(self, a: Vec | None = None) -> "MonomialIdeal":
        """I^a via the colon route.  Defaults to the tight vector a = a_I."""
        self._require_proper("alexander_dual")
        a = self._dual_vector(a)
        result = self._dual_colon(a)
        if DUAL_AUDIT:
            _audit_dual(self, a, result)
        return result

    def _dual_colon(self, a: Vec) -> "MonomialIdeal":
        frame = irreducible_power(lt.vadd(a, lt.ones(self.n)))
        colon = frame.colon_ideal(self)
        return minimalize(self.n, (g for g in colon.gens if lt.leq(g, a)))

    def irreducible_decomposition(self) -> tuple[Vec, ...]:
        """Component vectors b with I = intersection of m^b, irredundant."""
        self._require_proper("irreducible_decomposition")
        a_i = self.lcm_exponent()
        dual = self._dual_colon(a_i)
        return tuple(sorted(lt.dual_exponent(g, a_i) for g in dual.gens))

    def is_generic(self) -> bool:
        """No two generators share a positive exponent in any coordinate."""
        self._require_proper("is_generic")
        for i in range(self.n):
            seen: set[int] = set()
            for g in self.gens:
                if g[i] >= 1:
                    if g[i] in seen:
                        return False
                    seen.add(g[i])
        return True

    def is_cogeneric(self) -> bool:
        """No two irreducible components share a positive bound in any coordinate."""
        comps = self.irreducible_decomposition()
        for i in range(self.n):
            seen: set[int] = set()
            for b in comps:
                if b[i] >= 1:
                    if b[i] in seen:
                        return False
                    seen.add(b[i])
        return True


def minimalize(n: int, vectors: Iterable[Vec]) -> MonomialIdeal:
    """Ideal generated by the given exponents; empty input gives the zero ideal."""
    vecs = list(vectors)
    for v in vecs:
        if len(v) != n:
            raise DimensionMismatchError(f"vector {v} has length {len(v)}, expected {n}")
        if any(e < 0 for e in v):
            raise PreconditionError(f"negative exponent in {v}")
    return MonomialIdeal(n, _minimal_vectors(tuple(v) for v in vecs))


def irreducible_power(b: Vec) -> MonomialIdeal:
    """m^b = <x_i^{b_i} : b_i >= 1>."""
    n = len(b)
    if any(e < 0 for e in b):
        raise PreconditionError(f"m^b needs b >= 0, got {b}")
    gens = [tuple(b[i] if j == i else 0 for j in range(n)) for i in range(n) if b[i] >= 1]
    return minimalize(n, gens)


def intersect_all(ideals: Iterable[MonomialIdeal], n: int) -> MonomialIdeal:
    out = None
    for ideal in ideals:
        out = ideal if out is None else out.intersect(ideal)
    if out is None:
        raise PreconditionError("intersection of an empty family is undefined")
    return out


def dual_from_components(components: Iterable[Vec], a: Vec, n: int) -> MonomialIdeal:
    """I^a = <x^{b^a} : m^b an irreducible component of I>."""
    comps = list(components)
    if not comps:
        raise PreconditionError("component route needs at least one component")
    for b in comps:
        if not lt.leq(b, a):
            raise PreconditionError(f"component {b} exceeds dual vector {a}")
    return minimalize(n, (lt.dual_exponent(b, a) for b in comps))


def dual_via_box(ideal: MonomialIdeal, a: Vec, cap: int | None = None) -> MonomialIdeal:
    """Minimal generators of I^a found by scanning the box 0..a.

    Membership test: x^c lies in the dual iff x^{(a-c)+} is not in I.
    """
    ideal._require_proper("dual_via_box")
    a = ideal._dual_vector(a)
    box = lt.DegreeBox(lt.zero(ideal.n), a)
    members = [c for c in box.points(cap) if not ideal.contains(lt.pos_part(lt.vsub(a, c)))]
    return minimalize(ideal.n, _minimal_vectors(members))


def _audit_dual(ideal: MonomialIdeal, a: Vec, result: MonomialIdeal) -> None:
    a_i = ideal.lcm_exponent()
    comps = tuple(sorted(lt.dual_exponent(g, a_i) for g in ideal._dual_colon(a_i).gens))
    via_components = dual_from_components(comps, a, ideal.n)
    if via_components != result:
        raise AssertionError(
            f"dual routes disagree for a={a}: colon {result.gens} vs components {via_components.gens}"
        )
    box = lt.DegreeBox(lt.zero(ideal.n), a)
    if box.cardinality() <= box_cap(None):
        via_box = dual_via_box(ideal, a)
        if via_box != result:
            raise AssertionError(
                f"dual routes disagree for a={a}: colon {result.gens} vs box {via_box.gens}"
            )


# -- membership oracles for modules inside the Laurent ring ------------------


@dataclass(frozen=True)
class MonomialModule:
    """Z^n-graded monomial module known through a membership oracle."""

    n: int
    member_fn: Callable[[Vec], bool]
    description: str = ""

    def member(self, c: Vec) -> bool:
        if len(c) != self.n:
            raise DimensionMismatchError(f"point {c} has length {len(c)}, expected {self.n}")
        return self.member_fn(c)

    def shift(self, a: Vec) -> "MonomialModule":
        """M[a], with M[a]_b = M_{a+b}."""
        lt.check_same_length(a, lt.zero(self.n))
        return MonomialModule(
            self.n, lambda c: self.member(lt.vadd(c, a)), f"({self.description})[{a}]"
        )

    def intersect(self, other: "MonomialModule") -> "MonomialModule":
        lt.check_same_length(lt.zero(self.n), lt.zero(other.n))
        return MonomialModule(
            self.n,
            lambda c: self.member(c) and other.member(c),
            f"({self.description}) cap ({other.description})",
        )

    def plus(self, other: "MonomialModule") -> "MonomialModule":
        lt.check_same_length(lt.zero(self.n), lt.zero(other.n))
        return MonomialModule(
            self.n,
            lambda c: self.member(c) or other.member(c),
            f"({self.description}) + ({other.description})",
        )


def module_of_ideal(ideal: MonomialIdeal) -> MonomialModule:
    return MonomialModule(ideal.n, ideal.member, f"ideal{ideal.gens}")


def ring_module(n: int, shift_by: Vec | None = None) -> MonomialModule:
    """S (or the shifted free module S[b]) as a submodule of the Laurent ring."""
    base = shift_by if shift_by is not None else lt.zero(n)
    neg = tuple(-e for e in base)
    return MonomialModule(n, lambda c: lt.leq(neg, c), f"S[{base}]")


def cech_hull(ideal: MonomialIdeal) -> MonomialModule:
    """Smallest module that agrees with I on S and is flat off the support."""
    ideal._require_proper("cech_hull")
    return MonomialModule(
        ideal.n, lambda c: ideal.contains(lt.pos_part(c)), f"cech({ideal.gens})"
    )


def t_dual(module: MonomialModule) -> MonomialModule:
    """M^T: x^{-b} is a member exactly when x^b is not a member of M."""
    return MonomialModule(
        module.n,
        lambda c: not module.member(tuple(-e for e in c)),
        f"T-dual({module.description})",
    )


def boxed_dual_module(ideal: MonomialIdeal, a: Vec) -> MonomialModule:
    """I^[a] expressed as (cech hull, T-dual, shift by -a) intersected with S."""
    hull = cech_hull(ideal)
    return t_dual(hull).shift(tuple(-e for e in a)).intersect(ring_module(ideal.n))


def deformed_module(ideal: MonomialIdeal, b: Vec) -> MonomialModule:
    """Module generated by the deformed exponents f_b(g)."""
    ideal._require_proper("deformed_module")
    images = [lt.deform(g, b) for g in ideal.gens]
    return MonomialModule(
        ideal.n,
        lambda c: any(lt.leq(img, c) for img in images),
        f"deformed({ideal.gens}, {b})",
    )
