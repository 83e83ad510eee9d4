"""Componentwise calculus on integer exponent vectors.

Exponent vectors are plain tuples of Python ints, so all arithmetic is
arbitrary precision.  A face of the coordinate simplex is a frozenset of
0-based coordinate indices; it is identified with its 0/1 characteristic
vector whenever an exponent vector is expected.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import CapExceededError, DimensionMismatchError, PreconditionError, box_cap

Vec = tuple[int, ...]
Face = frozenset[int]


def check_same_length(u: Vec, v: Vec) -> None:
    if len(u) != len(v):
        raise DimensionMismatchError(f"vector lengths differ: {len(u)} vs {len(v)}")


def zero(n: int) -> Vec:
    return (0,) * n


def ones(n: int) -> Vec:
    return (1,) * n


def unit(n: int, i: int) -> Vec:
    """Standard basis vector e_i."""
    return tuple(1 if j == i else 0 for j in range(n))


def leq(u: Vec, v: Vec) -> bool:
    """Componentwise u <= v."""
    check_same_length(u, v)
    return all(a <= b for a, b in zip(u, v))


def join(u: Vec, v: Vec) -> Vec:
    """Componentwise maximum (lcm of monomials)."""
    check_same_length(u, v)
    return tuple(max(a, b) for a, b in zip(u, v))


def meet(u: Vec, v: Vec) -> Vec:
    """Componentwise minimum (gcd of monomials)."""
    check_same_length(u, v)
    return tuple(min(a, b) for a, b in zip(u, v))


def join_all(vectors, n: int) -> Vec:
    """Join of a finite family; the empty join is 0.

    Seeded from the first element, not from 0, so that joins of vectors
    with negative coordinates (Laurent degrees) come out right.
    """
    out = None
    for v in vectors:
        out = v if out is None else join(out, v)
    return zero(n) if out is None else out


def meet_all(vectors, n: int) -> Vec:
    vectors = list(vectors)
    if not vectors:
        raise PreconditionError("meet of an empty family is undefined")
    out = vectors[0]
    for v in vectors[1:]:
        out = meet(out, v)
    return out


def vadd(u: Vec, v: Vec) -> Vec:
    check_same_length(u, v)
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vec, v: Vec) -> Vec:
    check_same_length(u, v)
    return tuple(a - b for a, b in zip(u, v))


def pos_part(v: Vec) -> Vec:
    """c+ : negative coordinates clamped to 0."""
    return tuple(a if a > 0 else 0 for a in v)


def support(v: Vec) -> Face:
    """Indices with a nonzero coordinate."""
    return frozenset(i for i, a in enumerate(v) if a != 0)


def char_vector(face: Face, n: int) -> Vec:
    if any(i < 0 or i >= n for i in face):
        raise PreconditionError(f"face {sorted(face)} out of range for n={n}")
    return tuple(1 if i in face else 0 for i in range(n))


def full_face(n: int) -> Face:
    return frozenset(range(n))


def complement_face(face: Face, n: int) -> Face:
    return frozenset(range(n)) - face


def restrict(v: Vec, face: Face) -> Vec:
    """Zero out the coordinates off the face (b . F in full-length form)."""
    return tuple(a if i in face else 0 for i, a in enumerate(v))


def project(v: Vec, face: Face) -> Vec:
    """Drop the coordinates off the face, keeping sorted index order."""
    return tuple(v[i] for i in sorted(face))


def embed(v: Vec, face: Face, n: int) -> Vec:
    """Inverse of project: place |F| coordinates back on the face."""
    idx = sorted(face)
    if len(v) != len(idx):
        raise DimensionMismatchError(f"vector of length {len(v)} cannot sit on a {len(idx)}-face")
    out = [0] * n
    for value, i in zip(v, idx):
        out[i] = value
    return tuple(out)


def dual_exponent(b: Vec, a: Vec) -> Vec:
    """b^a: coordinate i is a_i + 1 - b_i where b_i >= 1, and 0 elsewhere.

    Requires 0 <= b <= a componentwise.
    """
    check_same_length(b, a)
    if not all(0 <= x <= y for x, y in zip(b, a)):
        raise PreconditionError(f"dual exponent needs 0 <= b <= a, got b={b}, a={a}")
    return tuple(y + 1 - x if x >= 1 else 0 for x, y in zip(b, a))


def bounded_part(b: Vec, a: Vec) -> Vec:
    """(a+1-b)^a: coordinate i is b_i when b_i <= a_i, and 0 when b_i = a_i + 1.

    Requires 1 <= b <= a+1 componentwise.
    """
    check_same_length(b, a)
    if not all(1 <= x <= y + 1 for x, y in zip(b, a)):
        raise PreconditionError(f"bounded part needs 1 <= b <= a+1, got b={b}, a={a}")
    return tuple(x if x <= y else 0 for x, y in zip(b, a))


def deform(c: Vec, b: Vec) -> Vec:
    """f_b(c): subtract b_i from every nonpositive coordinate c_i.

    Requires b >= 0.  Strictly positive coordinates are left alone, so the
    map preserves componentwise joins.
    """
    check_same_length(c, b)
    if any(x < 0 for x in b):
        raise PreconditionError(f"deformation vector must be nonnegative, got {b}")
    return tuple(x - y if x <= 0 else x for x, y in zip(c, b))


@dataclass(frozen=True)
class DegreeBox:
    """Axis-aligned lattice box lo..hi, iterated under a cardinality cap."""

    lo: Vec
    hi: Vec

    def __post_init__(self) -> None:
        check_same_length(self.lo, self.hi)
        if not leq(self.lo, self.hi):
            raise PreconditionError(f"empty box: lo={self.lo}, hi={self.hi}")

    @property
    def n(self) -> int:
        return len(self.lo)

    def cardinality(self) -> int:
        count = 1
        for a, b in zip(self.lo, self.hi):
            count *= b - a + 1
        return count

    def points(self, cap: int | None = None) -> Iterator[Vec]:
        limit = box_cap(cap)
        if self.cardinality() > limit:
            raise CapExceededError(
                f"box {self.lo}..{self.hi} has {self.cardinality()} points, cap is {limit}"
            )
        yield from self._walk(0, ())

    def _walk(self, i: int, prefix: Vec) -> Iterator[Vec]:
        if i == self.n:
            yield prefix
            return
        for value in range(self.lo[i], self.hi[i] + 1):
            yield from self._walk(i + 1, prefix + (value,))
