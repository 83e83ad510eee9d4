"""Monomial ideal algebra, duality routes, and decomposition oracles."""

import pytest

from momidual import lattice as lt
from momidual.corpus import load_fixture, random_ideal
from momidual.errors import DimensionMismatchError, PreconditionError
from momidual.ideals import (
    MonomialIdeal,
    boxed_dual_module,
    cech_hull,
    deformed_module,
    dual_from_components,
    dual_via_box,
    intersect_all,
    irreducible_power,
    minimalize,
    module_of_ideal,
    ring_module,
    t_dual,
)


def box(hi, lo=None):
    lo = lo if lo is not None else lt.zero(len(hi))
    return list(lt.DegreeBox(lo, hi).points())


def splitter_components(ideal):
    """Irredundant irreducible decomposition by recursive generator splitting.

    Independent of the dual machinery: splits one mixed-support generator at
    a time via I + <uv> = (I + <u>) cap (I + <v>) for coprime u, v, then
    prunes redundant components by exact ideal equality.
    """
    n = ideal.n
    seen = {}

    def rec(cur):
        if cur.gens in seen:
            return seen[cur.gens]
        out = None
        for g in cur.gens:
            sup = lt.support(g)
            if len(sup) >= 2:
                i = min(sup)
                left = cur.plus(minimalize(n, [lt.restrict(g, frozenset({i}))]))
                right = cur.plus(minimalize(n, [lt.restrict(g, sup - {i})]))
                out = rec(left) | rec(right)
                break
        if out is None:
            # every generator is a pure power, so cur is m^b
            out = {lt.join_all(cur.gens, n)}
        seen[cur.gens] = out
        return out

    candidates = rec(ideal)
    assert intersect_all([irreducible_power(b) for b in candidates], n) == ideal
    kept = sorted(candidates)
    changed = True
    while changed and len(kept) > 1:
        changed = False
        for b in list(kept):
            rest = [c for c in kept if c != b]
            if intersect_all([irreducible_power(c) for c in rest], n) == ideal:
                kept.remove(b)
                changed = True
    return tuple(sorted(kept))


def test_minimalize_and_flagged_states():
    ideal = minimalize(2, [(1, 0), (2, 1), (0, 3), (1, 3)])
    assert ideal.gens == ((0, 3), (1, 0))
    zero = minimalize(2, [])
    unit = minimalize(2, [(0, 0), (1, 1)])
    assert zero.is_zero and not zero.is_proper
    assert unit.is_unit and unit.gens == ((0, 0),)
    with pytest.raises(PreconditionError):
        zero.lcm_exponent()
    with pytest.raises(PreconditionError):
        unit.alexander_dual()
    with pytest.raises(PreconditionError):
        zero.irreducible_decomposition()


def test_constructor_rejects_bad_input():
    with pytest.raises(PreconditionError):
        MonomialIdeal(2, ((1, 0), (2, 1)))  # not an antichain
    with pytest.raises(PreconditionError):
        minimalize(2, [(-1, 0)])
    with pytest.raises(DimensionMismatchError):
        minimalize(2, [(1, 0, 0)])


def test_membership():
    ideal = minimalize(2, [(2, 0), (1, 1)])
    assert ideal.contains((2, 5)) and ideal.contains((1, 1))
    assert not ideal.contains((1, 0))
    with pytest.raises(PreconditionError):
        ideal.contains((-1, 2))
    assert not ideal.member((-1, 2))
    assert ideal.member((3, 0))


@pytest.mark.parametrize("seed", range(6))
def test_algebra_against_box_membership(seed):
    left = random_ideal(3, 4, seed)
    right = random_ideal(3, 3, seed + 100)
    hi = lt.vadd(lt.join(left.lcm_exponent(), right.lcm_exponent()), (1, 1, 1))
    both = left.intersect(right)
    either = left.plus(right)
    for c in box(hi):
        assert both.contains(c) == (left.contains(c) and right.contains(c))
        assert either.contains(c) == (left.contains(c) or right.contains(c))


@pytest.mark.parametrize("seed", range(6))
def test_colon_against_box_membership(seed):
    ideal = random_ideal(3, 5, seed)
    other = random_ideal(3, 2, seed + 50)
    shift = (1, 0, 2)
    hi = lt.vadd(ideal.lcm_exponent(), (2, 2, 2))
    by_monomial = ideal.colon_monomial(shift)
    by_ideal = ideal.colon_ideal(other)
    for c in box(hi):
        assert by_monomial.contains(c) == ideal.contains(lt.vadd(c, shift))
        want = all(ideal.contains(lt.vadd(c, g)) for g in other.gens)
        assert by_ideal.contains(c) == want


@pytest.mark.parametrize("seed", range(6))
def test_radical_against_support_oracle(seed):
    ideal = random_ideal(3, 5, seed)
    rad = ideal.radical()
    hi = lt.vadd(ideal.lcm_exponent(), (1, 1, 1))
    for c in box(hi):
        want = any(lt.support(g) <= lt.support(c) for g in ideal.gens)
        assert rad.contains(c) == want


def test_artinian_augment():
    ideal = load_fixture("fig1")
    a = ideal.lcm_exponent()
    augmented = ideal.artinian_augment(a)
    assert augmented.is_artinian()
    assert (5, 0, 0) in augmented.gens and (0, 6, 0) in augmented.gens
    # z^6 is already divisible by the generator z^5
    assert (0, 0, 6) not in augmented.gens and (0, 0, 5) in augmented.gens
    with pytest.raises(PreconditionError):
        ideal.artinian_augment((3, 5, 5))


def test_restrict_and_localize_on_fig1():
    ideal = load_fixture("fig1")
    face = frozenset({1, 2})
    assert ideal.restrict_to(face).gens == ((0, 5), (2, 4), (4, 3))
    assert ideal.localize_at(face).gens == ((0, 2), (1, 1), (3, 0))


def test_dual_requires_dominating_vector():
    ideal = load_fixture("fig1")
    with pytest.raises(PreconditionError):
        ideal.alexander_dual((3, 5, 5))
    with pytest.raises(DimensionMismatchError):
        ideal.alexander_dual((4, 5))


@pytest.mark.parametrize("seed", range(8))
def test_dual_routes_and_involution(seed):
    ideal = random_ideal(3, 5, seed, max_exp=4)
    a = ideal.lcm_exponent()
    for vec in (a, lt.vadd(a, (1, 2, 0))):
        dual = ideal.alexander_dual(vec)
        comps = ideal.irreducible_decomposition()
        assert dual == dual_from_components(comps, vec, ideal.n)
        assert dual == dual_via_box(ideal, vec)
        assert dual.alexander_dual(vec) == ideal


def test_dual_insensitive_to_coordinates_off_the_support():
    ideal = minimalize(3, [(2, 0, 0), (1, 1, 0), (0, 2, 0)])
    assert ideal.alexander_dual((2, 2, 0)) == ideal.alexander_dual((2, 2, 9))
    assert ideal.alexander_dual((2, 2, 0)).gens == ((1, 2, 0), (2, 1, 0))


def test_linkage_identity_on_fixtures():
    # I^a + m^{a+1} equals the colon (m^{a+1} : I) without truncation.
    for name in ("fig1", "tighten", "lastexample"):
        ideal = load_fixture(name)
        a = ideal.lcm_exponent()
        frame = irreducible_power(lt.vadd(a, lt.ones(ideal.n)))
        assert ideal.alexander_dual(a).plus(frame) == frame.colon_ideal(ideal)


@pytest.mark.parametrize(
    "name,count",
    [("fig1", 8), ("permut3", 7), ("tree3", 6), ("tighten", 4), ("lastexample", 3)],
)
def test_decomposition_matches_recursive_splitter(name, count):
    ideal = load_fixture(name)
    got = ideal.irreducible_decomposition()
    assert len(got) == count
    assert got == splitter_components(ideal)


@pytest.mark.parametrize("seed", range(10))
def test_decomposition_matches_splitter_on_random_ideals(seed):
    ideal = random_ideal(3, 5, seed, max_exp=4)
    assert ideal.irreducible_decomposition() == splitter_components(ideal)


def test_decomposition_intersects_back():
    ideal = load_fixture("twistedcubic")
    comps = ideal.irreducible_decomposition()
    assert intersect_all([irreducible_power(b) for b in comps], ideal.n) == ideal


def test_genericity():
    assert load_fixture("fig1").is_generic()
    assert not load_fixture("permut3").is_generic()
    assert load_fixture("fig1").alexander_dual().is_cogeneric()
    assert not load_fixture("tree3").is_cogeneric()


def test_cech_hull_membership():
    ideal = load_fixture("fig1")
    hull = cech_hull(ideal)
    for c in box((2, 2, 2), lo=(-2, -2, -2)):
        assert hull.member(c) == ideal.contains(lt.pos_part(c))


def test_module_laws_pointwise():
    ideal = minimalize(2, [(2, 0), (1, 1), (0, 3)])
    other = minimalize(2, [(0, 1)])
    m = module_of_ideal(ideal)
    k = module_of_ideal(other)
    ring = ring_module(2, (1, -1))
    pts = box((3, 3), lo=(-3, -3))
    for c in pts:
        assert t_dual(t_dual(m)).member(c) == m.member(c)
        assert t_dual(m.intersect(k)).member(c) == (t_dual(m).member(c) or t_dual(k).member(c))
        assert m.shift((1, 1)).member(c) == m.member(lt.vadd(c, (1, 1)))
        assert ring.member(c) == lt.leq((-1, 1), c)


def test_boxed_dual_matches_alexander_dual():
    ideal = load_fixture("tighten")
    a = (3, 4, 1)
    dual = ideal.alexander_dual(a)
    boxed = boxed_dual_module(ideal, a)
    for c in box(a):
        assert boxed.member(c) == dual.contains(c)


def test_deformed_module_membership():
    ideal = minimalize(2, [(2, 0), (0, 2)])
    module = deformed_module(ideal, (1, 1))
    # deformed generators are (2, -1) and (-1, 2)
    assert module.member((2, -1)) and module.member((3, 0))
    assert module.member((-1, 2)) and module.member((1, 5))
    assert not module.member((1, 1))
    assert not module.member((2, -2))
