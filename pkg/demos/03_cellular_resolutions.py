"""Scarf, hull and cohull complexes as cellular resolutions."""

from momidual import lattice as lt
from momidual.complexes import deform_complex, scarf_complex
from momidual.corpus import load_fixture
from momidual.hull import cohull, hull_complex
from momidual.ideals import deformed_module
from momidual.resolutions import (
    acyclicity_check_cellular,
    cellular_free_complex,
    is_exact_resolution,
    is_minimal,
)

# fig1 is generic: its scarf complex is the minimal resolution, and the hull
# complex carves out the same face poset
fig1 = load_fixture("fig1")
scarf = scarf_complex(fig1)
print("scarf(fig1) f-vector:", scarf.f_vector())
fc = cellular_free_complex(scarf)
report = is_exact_resolution(fc, fig1)
print("  exact:", report.exact, " minimal:", is_minimal(fc), " ranks:", fc.ranks())
hull = hull_complex(fig1)
assert {k: (c.dim, c.label) for k, c in scarf.cells.items()} == {
    k: (c.dim, c.label) for k, c in hull.cells.items()
}
print("  hull(fig1) has the same labelled face poset")

# permut3 is not generic; its hull is a labelled hexagon
permut = load_fixture("permut3")
hexagon = hull_complex(permut)
print("hull(permut3) f-vector:", hexagon.f_vector())
top = hexagon.cells_of_dim(2)[0]
print("  2-cell label:", top.label)

# cohull: resolve an ideal from the hull of its augmented dual; for tighten
# the canonical choice a = a_I is minimal while hull(I) itself is not
tighten = load_fixture("tighten")
a = tighten.lcm_exponent()
canonical = cohull(tighten, a)
print("cohull(tighten, a_I) ranks:", canonical.ranks(),
      " minimal:", is_minimal(canonical))
wide = cohull(tighten, (3, 4, 1))
print("cohull(tighten, (3,4,1)) ranks:", wide.ranks(), " minimal:", is_minimal(wide))
hull_fc = cellular_free_complex(hull_complex(tighten))
print("hull(tighten) ranks:", hull_fc.ranks(), " minimal:", is_minimal(hull_fc))
for fc in (canonical, wide, hull_fc):
    assert is_exact_resolution(fc, tighten).exact

# deformation: translating vertex labels by f_b keeps the complex acyclic and
# resolves the deformed module
b = (1, 2, 3)
deformed = deform_complex(scarf, b)
acyclic, _ = acyclicity_check_cellular(deformed)
target = deformed_module(fig1, b)
report = is_exact_resolution(cellular_free_complex(deformed), target)
print(f"deform(scarf(fig1), {b}): acyclic {acyclic}, resolves the deformed module {report.exact}")
