"""Exact rank computations, reduced homology, Betti and Bass numbers."""

import pytest

from momidual import lattice as lt
from momidual.corpus import load_fixture, random_ideal
from momidual.errors import PreconditionError
from momidual.homology import (
    RangeFlagWarning,
    bass_number,
    betti_number,
    betti_restricted,
    betti_table,
    lcm_lattice,
    rank_bareiss,
    rank_mod_p,
    reduced_homology_dims,
    upper_koszul,
)
from momidual.ideals import minimalize
from momidual.resolutions import betti_from_taylor
from momidual.simplicial import complex_from_facets

# minimal 6-vertex triangulation of the real projective plane
RP2_FACETS = [
    [0, 1, 4],
    [0, 1, 5],
    [0, 2, 3],
    [0, 2, 5],
    [0, 3, 4],
    [1, 2, 3],
    [1, 2, 4],
    [1, 3, 5],
    [2, 4, 5],
    [3, 4, 5],
]


def test_rank_functions():
    assert rank_bareiss([[1, 0], [0, 1]]) == 2
    assert rank_bareiss([[1, 2], [2, 4]]) == 1
    assert rank_bareiss([[0, 0], [0, 0]]) == 0
    assert rank_bareiss([[1, 2, 3], [4, 5, 6]]) == 2
    assert rank_bareiss([]) == 0
    # torsion shows up only in finite characteristic
    assert rank_bareiss([[2]]) == 1
    assert rank_mod_p([[2]], 2) == 0
    assert rank_mod_p([[2]], 3) == 1


def test_rank_routes_agree_away_from_torsion():
    rows = [[3, 1, 4, 1], [5, 9, 2, 6], [8, 10, 6, 7], [5, 3, 5, 8]]
    assert rank_bareiss(rows) == rank_mod_p(rows, 1_000_003)


def faces_of(facets, n):
    return complex_from_facets(n, facets).faces


def test_reduced_homology_of_model_spaces():
    # irrelevant complex {empty face}: homology in degree -1
    assert reduced_homology_dims([frozenset()]) == {-1: 1}
    point = faces_of([[0]], 1)
    assert all(v == 0 for v in reduced_homology_dims(point).values())
    two_points = faces_of([[0], [1]], 2)
    assert reduced_homology_dims(two_points).get(0) == 1
    circle = faces_of([[0, 1], [1, 2], [0, 2]], 3)
    assert reduced_homology_dims(circle).get(1) == 1
    disk = faces_of([[0, 1, 2]], 3)
    assert all(v == 0 for v in reduced_homology_dims(disk).values())
    sphere = faces_of([[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]], 4)
    dims = reduced_homology_dims(sphere)
    assert dims.get(2) == 1 and not dims.get(1) and not dims.get(0)


def test_reduced_homology_depends_on_the_field_for_projective_plane():
    faces = faces_of(RP2_FACETS, 6)
    # combinatorial sanity: a closed surface with Euler characteristic one
    triangles = [f for f in faces if len(f) == 3]
    edges = [f for f in faces if len(f) == 2]
    assert len(triangles) == 10 and len(edges) == 15
    for e in edges:
        assert sum(1 for t in triangles if e <= t) == 2
    over_q = reduced_homology_dims(faces, None)
    over_f2 = reduced_homology_dims(faces, 2)
    over_f3 = reduced_homology_dims(faces, 3)
    assert not over_q.get(1) and not over_q.get(2)
    assert over_f2.get(1) == 1 and over_f2.get(2) == 1
    assert over_f3 == over_q


def test_upper_koszul_of_the_koszul_syzygy():
    ideal = minimalize(2, [(1, 0), (0, 1)])
    koszul = upper_koszul(ideal, (1, 1))
    assert koszul.faces == frozenset({frozenset(), frozenset({0}), frozenset({1})})
    assert betti_number(ideal, 1, (1, 1)) == 1
    assert betti_number(ideal, 1, (2, 1)) == 0


def test_lcm_lattice():
    ideal = minimalize(2, [(2, 0), (1, 1), (0, 2)])
    assert lcm_lattice(ideal) == frozenset(
        {(2, 0), (1, 1), (0, 2), (2, 1), (1, 2), (2, 2)}
    )


def test_betti_table_small_cases():
    pair = betti_table(minimalize(2, [(1, 0), (0, 1)]))
    assert pair.totals() == (2, 1)
    assert pair.z_graded() == {(0, 1): 2, (1, 2): 1}
    maximal = betti_table(minimalize(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)]))
    assert maximal.totals() == (3, 3, 1)
    assert maximal.beta(2, (1, 1, 1)) == 1
    assert maximal.degrees(1) == ((0, 1, 1), (1, 0, 1), (1, 1, 0))
    assert maximal.max_index() == 2


def test_betti_table_fixture_values():
    tree = betti_table(load_fixture("tree3"))
    assert tree.totals() == (7, 12, 6)
    dual = betti_table(load_fixture("fig1").alexander_dual())
    assert dual.totals() == (8, 8, 1)


@pytest.mark.parametrize("name", ["fig1", "tree3", "tighten", "lastexample"])
def test_betti_agrees_with_taylor_strand_oracle(name):
    ideal = load_fixture(name)
    table = betti_table(ideal)
    oracle = betti_from_taylor(ideal)
    assert {k: v for k, v in oracle.items() if v} == dict(table.entries)


@pytest.mark.parametrize("seed", range(8))
def test_betti_agrees_with_taylor_on_random_ideals(seed):
    ideal = random_ideal(3, 5, seed)
    table = betti_table(ideal)
    oracle = betti_from_taylor(ideal)
    assert {k: v for k, v in oracle.items() if v} == dict(table.entries)


def test_betti_restricted_matches_full_betti_numbers():
    ideal = load_fixture("fig1")
    face = frozenset({1, 2})
    degrees = [b for b in lcm_lattice(ideal) if lt.support(b) <= face]
    assert degrees
    for b in degrees:
        for i in range(3):
            assert betti_restricted(ideal, face, i, b) == betti_number(ideal, i, b)
    with pytest.raises(PreconditionError):
        betti_restricted(ideal, frozenset({1}), 0, (1, 0, 1))


def test_zeroth_bass_numbers_detect_components():
    ideal = load_fixture("fig1")
    for b in ideal.irreducible_decomposition():
        face = lt.support(b)
        d = lt.vsub(b, lt.char_vector(face, 3))
        assert bass_number(ideal, face, d, 0) == 1
    # a degree whose shift is not a component
    assert bass_number(ideal, frozenset({0, 1, 2}), (0, 0, 0), 0) == 0


def test_bass_numbers_flag_out_of_range_queries():
    ideal = load_fixture("fig1")
    with pytest.warns(RangeFlagWarning):
        assert bass_number(ideal, frozenset({0}), (0, 1, 0), 0) == 0
    with pytest.warns(RangeFlagWarning):
        assert bass_number(ideal, frozenset({0, 1, 2}), (-1, 0, 0), 0) == 0
    with pytest.warns(RangeFlagWarning):
        assert bass_number(ideal, frozenset({0, 1, 2}), (9, 9, 9), 1) == 0


def test_bass_numbers_of_a_fat_point():
    # S/<x^2,xy,y^2>: socle in degrees (1,0) and (0,1), one first syzygy
    # of the Matlis dual in degree (0,0)
    ideal = minimalize(2, [(2, 0), (1, 1), (0, 2)])
    face = frozenset({0, 1})
    assert bass_number(ideal, face, (1, 0), 0) == 1
    assert bass_number(ideal, face, (0, 1), 0) == 1
    assert bass_number(ideal, face, (0, 0), 0) == 0
    assert bass_number(ideal, face, (0, 0), 1) == 1
