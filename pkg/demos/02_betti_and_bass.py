"""Multigraded Betti tables, field dependence, and Bass numbers."""

import warnings

from momidual import lattice as lt
from momidual.corpus import load_fixture
from momidual.homology import RangeFlagWarning, bass_number, betti_table
from momidual.simplicial import complex_from_facets, stanley_reisner

tree = load_fixture("tree3")
table = betti_table(tree)
print("tree3 Betti totals:", table.totals())
print("tree3 by regular degree:", dict(sorted(table.z_graded().items())))
print("first syzygy degrees:", table.degrees(1))

# homology of a triangulated projective plane makes Betti numbers field dependent
rp2 = complex_from_facets(
    6,
    [
        (0, 1, 4), (0, 1, 5), (0, 2, 3), (0, 2, 5), (0, 3, 4),
        (1, 2, 3), (1, 2, 4), (1, 3, 5), (2, 4, 5), (3, 4, 5),
    ],
)
ideal = stanley_reisner(rp2)
print("Stanley-Reisner ideal of a 6-vertex projective plane:", len(ideal.gens), "generators")
print("  totals over Q:   ", betti_table(ideal).totals())
print("  totals over GF(2):", betti_table(ideal, field=2).totals())

# Bass numbers against the prime of a face, read off the dual's Betti numbers
fig1 = load_fixture("fig1")
for b in fig1.irreducible_decomposition():
    face = lt.support(b)
    d = lt.vsub(b, lt.char_vector(face, fig1.n))
    assert bass_number(fig1, face, d, 0) == 1
print("mu_0 = 1 at the socle degree of each of the 8 components of fig1")

with warnings.catch_warnings(record=True) as caught:
    warnings.simplefilter("always")
    value = bass_number(fig1, frozenset({0, 1, 2}), (9, 9, 9), 1)
flagged = any(issubclass(w.category, RangeFlagWarning) for w in caught)
print(f"mu_1 at degree (9,9,9) is {value}; out-of-window query flagged: {flagged}")
