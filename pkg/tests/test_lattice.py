"""Exponent lattice operations and their order-theoretic laws."""

import pytest
from hypothesis import given, strategies as st

from momidual import lattice as lt
from momidual.errors import CapExceededError, DimensionMismatchError, PreconditionError
from momidual.ideals import irreducible_power


def vectors(n, lo=0, hi=5):
    return st.tuples(*[st.integers(lo, hi)] * n)


@st.composite
def bounded_pair(draw, n=3, hi=5):
    """A pair (a, b) with 0 <= b <= a coordinatewise."""
    a = draw(vectors(n, 1, hi))
    b = tuple(draw(st.integers(0, ai)) for ai in a)
    return a, b


@st.composite
def bounded_triple(draw, n=3, hi=5):
    a = draw(vectors(n, 1, hi))
    b = tuple(draw(st.integers(0, ai)) for ai in a)
    c = tuple(draw(st.integers(0, ai)) for ai in a)
    return a, b, c


def test_join_meet_basics():
    assert lt.join((1, 5), (3, 2)) == (3, 5)
    assert lt.meet((1, 5), (3, 2)) == (1, 2)
    assert lt.join_all([], 3) == (0, 0, 0)
    assert lt.join_all([(2, 1), (0, 4)], 2) == (2, 4)
    assert lt.meet_all([(2, 1), (0, 4)], 2) == (0, 1)


def test_join_all_keeps_negative_coordinates():
    # Joins of Laurent degrees must not clamp at zero.
    assert lt.join_all([(-3, 1), (-1, -2)], 2) == (-1, 1)
    assert lt.meet_all([(-3, 1), (-1, -2)], 2) == (-3, -2)


def test_leq_and_arithmetic():
    assert lt.leq((1, 2), (1, 3))
    assert not lt.leq((2, 0), (1, 3))
    assert lt.vadd((1, 2), (3, 4)) == (4, 6)
    assert lt.vsub((1, 2), (3, 4)) == (-2, -2)
    assert lt.pos_part((-2, 3)) == (0, 3)
    with pytest.raises(DimensionMismatchError):
        lt.join((1, 2), (1, 2, 3))


def test_support_and_characteristic_vectors():
    assert lt.support((0, 3, 1)) == frozenset({1, 2})
    assert lt.char_vector(frozenset({0, 2}), 3) == (1, 0, 1)
    assert lt.restrict((4, 5, 6), frozenset({0, 2})) == (4, 0, 6)
    assert lt.project((4, 5, 6), (0, 2)) == (4, 6)
    assert lt.embed((4, 6), (0, 2), 3) == (4, 0, 6)


def test_dual_exponent_examples():
    # Coordinates with b_i = 0 are dropped, others reflect through a_i + 1.
    assert lt.dual_exponent((2, 0, 5), (4, 5, 5)) == (3, 0, 1)
    assert lt.dual_exponent((0, 0, 0), (4, 5, 5)) == (0, 0, 0)
    assert lt.dual_exponent((4, 5, 5), (4, 5, 5)) == (1, 1, 1)


@given(bounded_pair())
def test_dual_exponent_involution(data):
    a, b = data
    assert lt.dual_exponent(lt.dual_exponent(b, a), a) == b


@given(bounded_pair())
def test_dual_exponent_preserves_support(data):
    a, b = data
    assert lt.support(lt.dual_exponent(b, a)) == lt.support(b)


def contains_irreducible(b, c):
    """Whether m^b contains m^c, by generator membership."""
    outer = irreducible_power(b)
    inner = irreducible_power(c)
    return all(outer.contains(g) for g in inner.gens)


@given(bounded_triple())
def test_dual_exponent_reverses_containment(data):
    # m^b \superseteq m^c exactly when the dual exponents compare b^a >= c^a.
    a, b, c = data
    lhs = contains_irreducible(b, c)
    rhs = lt.leq(lt.dual_exponent(c, a), lt.dual_exponent(b, a))
    assert lhs == rhs


@st.composite
def deformation_data(draw, n=3, hi=4):
    b = draw(vectors(n, 0, hi))
    bp = tuple(draw(st.integers(0, bi)) for bi in b)
    c = draw(vectors(n, 0, hi + 2))
    return b, bp, c


@given(deformation_data())
def test_deform_composition(data):
    # Epsilon-deformations compose: f_b = f_{b-b'} after f_{b'}.
    b, bp, c = data
    step = lt.deform(c, bp)
    rest = lt.vsub(b, bp)
    assert lt.deform(c, b) == lt.deform(step, rest)


@given(deformation_data())
def test_deform_difference_identity(data):
    b, bp, c = data
    lhs = lt.vsub(lt.deform(c, bp), lt.deform(c, b))
    rhs = lt.vsub(c, lt.deform(c, lt.vsub(b, bp)))
    assert lhs == rhs


@given(vectors(3, 0, 4), vectors(3, 0, 4), vectors(3, 0, 3))
def test_deform_preserves_joins(u, v, b):
    assert lt.deform(lt.join(u, v), b) == lt.join(lt.deform(u, b), lt.deform(v, b))


@given(vectors(3, -3, 4), vectors(3, 0, 3))
def test_deform_moves_only_nonpositive_coordinates(c, b):
    out = lt.deform(c, b)
    for ci, bi, oi in zip(c, b, out):
        assert oi == (ci if ci > 0 else ci - bi)


def test_bounded_part_reflects_top_coordinates_to_zero():
    assert lt.bounded_part((3, 6, 5), (4, 5, 5)) == (3, 0, 5)
    assert lt.bounded_part((1, 1, 1), (4, 5, 5)) == (1, 1, 1)
    with pytest.raises(PreconditionError):
        lt.bounded_part((0, 1, 1), (4, 5, 5))
    with pytest.raises(PreconditionError):
        lt.bounded_part((1, 7, 1), (4, 5, 5))


@given(bounded_pair())
def test_bounded_part_inverts_dual_shift(data):
    # b -> a + 1 - b^a recovers b with top coordinates folded to 0.
    a, b = data
    shifted = lt.vsub(lt.vadd(a, lt.ones(len(a))), lt.dual_exponent(b, a))
    assert lt.bounded_part(shifted, a) == b


def test_degree_box():
    box = lt.DegreeBox((0, 0), (1, 2))
    pts = list(box.points())
    assert len(pts) == box.cardinality() == 6
    assert (1, 2) in pts and (0, 0) in pts
    with pytest.raises(CapExceededError):
        list(lt.DegreeBox((0,) * 4, (100,) * 4).points(cap=1000))
    with pytest.raises(PreconditionError):
        lt.DegreeBox((2, 0), (1, 5))
