"""Tests for fixture loading and the seeded ideal families."""

import pytest

from momidual.corpus import (
    FIXTURE_NAMES,
    fixture_document,
    load_fixture,
    make_corpus,
    permutahedron_ideal,
    random_cogeneric_ideal,
    random_generic_ideal,
    random_ideal,
    tree_ideal,
)
from momidual.errors import PreconditionError

EXPECTED_SHAPES = {
    "fig1": (3, 7),
    "permut3": (3, 6),
    "tree3": (3, 7),
    "twistedcubic": (4, 10),
    "tighten": (3, 4),
    "lastexample": (3, 6),
}


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_fixture_shapes(name):
    ideal = load_fixture(name)
    assert (ideal.n, len(ideal.gens)) == EXPECTED_SHAPES[name]
    doc = fixture_document(name)
    assert doc.name == name
    assert tuple(ideal.lcm_exponent()) == tuple(doc.attributes["canonical_a"])


def test_unknown_fixture_rejected():
    with pytest.raises(PreconditionError):
        fixture_document("nosuch")


def test_permutahedron_small():
    assert permutahedron_ideal(1).gens == ((1,),)
    assert permutahedron_ideal(2).gens == ((1, 2), (2, 1))
    assert permutahedron_ideal(3) == load_fixture("permut3")
    with pytest.raises(PreconditionError):
        permutahedron_ideal(0)


def test_tree_small():
    # nonempty subsets of {x, y}: x^2, y^2 and (xy)^1
    assert tree_ideal(2).gens == ((0, 2), (1, 1), (2, 0))
    assert tree_ideal(3) == load_fixture("tree3")
    assert len(tree_ideal(4).gens) == 15


@pytest.mark.parametrize("n", [1, 2, 3])
def test_tree_is_dual_of_permutahedron(n):
    permut = permutahedron_ideal(n)
    assert permut.alexander_dual((n,) * n) == tree_ideal(n)


def test_random_ideals_are_deterministic():
    first = random_ideal(3, 6, 42)
    again = random_ideal(3, 6, 42)
    assert first == again
    assert first.n == 3 and 1 <= len(first.gens) <= 6
    assert random_ideal(3, 6, 43) != first


@pytest.mark.parametrize("seed", range(5))
def test_random_generic_is_generic(seed):
    ideal = random_generic_ideal(3, 5, seed)
    assert ideal.is_generic()
    assert random_generic_ideal(3, 5, seed) == ideal


@pytest.mark.parametrize("seed", range(3))
def test_random_cogeneric_is_cogeneric(seed):
    ideal = random_cogeneric_ideal(3, 4, seed)
    assert ideal.is_cogeneric()


def test_make_corpus_kinds():
    assert make_corpus("paper:fig1") == load_fixture("fig1")
    assert make_corpus("permutahedron", n=3) == permutahedron_ideal(3)
    assert make_corpus("tree", n=2) == tree_ideal(2)
    assert make_corpus("random", n=3, seed=5, size=6) == random_ideal(3, 6, 5)
    assert make_corpus("random_generic", n=3, seed=1, size=4) == random_generic_ideal(3, 4, 1)
    assert make_corpus("random_cogeneric", n=3, seed=1, size=4) == random_cogeneric_ideal(3, 4, 1)
    with pytest.raises(PreconditionError):
        make_corpus("mystery")
