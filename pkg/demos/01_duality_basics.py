"""Alexander duality on a worked three-variable example."""

from momidual import lattice as lt
from momidual.corpus import load_fixture
from momidual.documents import default_variables, format_monomial
from momidual.ideals import irreducible_power

names = default_variables(3)


def show(tag, vectors):
    print(f"{tag}: " + ", ".join(format_monomial(v, names) for v in sorted(vectors)))


ideal = load_fixture("fig1")
a = ideal.lcm_exponent()
show("I", ideal.gens)
print(f"a_I = {a}  (join of the generator exponents; smallest legal dual vector)")

# generators of the dual are the dualized irreducible components, and vice versa
components = ideal.irreducible_decomposition()
show("components m^b of I, as b", components)
dual = ideal.alexander_dual(a)
show("I^a", dual.gens)
assert sorted(dual.gens) == sorted(lt.dual_exponent(b, a) for b in components)

# duality is an involution above a_I, and insensitive to padding a upward
assert dual.alexander_dual(a) == ideal
assert ideal.alexander_dual((9, 9, 9)).alexander_dual((9, 9, 9)) == ideal
print("(I^a)^a == I and the same with a = (9,9,9)")

# linkage: the dual is also a colon ideal into the frame m^(a+1)
frame = irreducible_power(lt.vadd(a, lt.ones(3)))
assert frame.colon_ideal(dual) == ideal.plus(frame)
print("(m^(a+1) : I^a) == I + m^(a+1)")

# duality commutes with restricting to a face and localizing at it
face = frozenset({1, 2})
restricted = ideal.restrict_to(face)
assert dual.localize_at(face) == restricted.alexander_dual(lt.project(a, face))
print("localizing I^a at {y,z} == dual of the restriction to {y,z}")
