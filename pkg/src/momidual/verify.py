"""Identity suite: instantiates the duality theorems on a concrete ideal.

Each check is independent and returns pass/fail with a witness on failure,
skip (with a reason) when a precondition or cap rules it out, or info for
report-only observations that assert nothing.
"""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass
from itertools import combinations
from math import factorial

from . import lattice as lt
from .complexes import LabelledCellComplex, deform_complex, scarf_complex
from .errors import CapExceededError, PreconditionError, box_cap, hull_generator_cap
from .homology import (
    FieldChoice,
    RangeFlagWarning,
    bass_number,
    betti_table,
    lcm_lattice,
)
from .hull import cohull, hull_complex, hull_is_subdivision_check, interior_gcd_label_check
from .ideals import (
    MonomialIdeal,
    cech_hull,
    deformed_module,
    dual_from_components,
    dual_via_box,
    boxed_dual_module,
    irreducible_power,
    minimalize,
    module_of_ideal,
    t_dual,
)
from .lattice import Vec
from .resolutions import (
    acyclicity_check_cellular,
    betti_from_taylor,
    cellular_free_complex,
    cocellular_dual,
    facet_decomposition,
    is_exact_resolution,
    is_minimal,
)

TAYLOR_ORACLE_CAP = 12


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # pass | fail | skip | info
    detail: str = ""


def _ok(name: str, good: bool, witness: str = "") -> CheckResult:
    if good:
        return CheckResult(name, "pass")
    return CheckResult(name, "fail", witness)


def _sampled_box(lo: Vec, hi: Vec, seed: int, limit: int = 400) -> list[Vec]:
    box = lt.DegreeBox(lo, hi)
    if box.cardinality() <= limit:
        return list(box.points(limit))
    rng = random.Random(f"boxsample:{seed}:{lo}:{hi}")
    return [
        tuple(rng.randint(lo[i], hi[i]) for i in range(len(lo))) for _ in range(limit)
    ]


def quotient_beta(table, i: int, b: Vec, n: int) -> int:
    """Betti number of the quotient ring read from the ideal's table."""
    if i == 0:
        return 1 if b == lt.zero(n) else 0
    return table.beta(i - 1, b)


def run_identity_suite(
    ideal: MonomialIdeal,
    *,
    field: FieldChoice = None,
    seed: int = 0,
    attributes: dict | None = None,
    cap: int | None = None,
) -> list[CheckResult]:
    ideal._require_proper("run_identity_suite")
    n = ideal.n
    a = ideal.lcm_exponent()
    a1 = lt.vadd(a, lt.ones(n))
    results: list[CheckResult] = []

    def guarded(name, fn):
        try:
            results.append(fn())
        except CapExceededError as exc:
            results.append(CheckResult(name, "skip", f"cap exceeded: {exc}"))

    dual = ideal.alexander_dual(a)

    def check_involution():
        again = dual.alexander_dual(a)
        wide = ideal.alexander_dual(a1).alexander_dual(a1)
        good = again == ideal and wide == ideal
        return _ok("involution", good, f"(I^a)^a gens {again.gens}")

    guarded("involution", check_involution)

    def check_routes():
        comps = ideal.irreducible_decomposition()
        via_components = dual_from_components(comps, a, n)
        witness = f"colon {dual.gens} components {via_components.gens}"
        if via_components != dual:
            return CheckResult("dual_route_agreement", "fail", witness)
        box = lt.DegreeBox(lt.zero(n), a)
        if box.cardinality() <= box_cap(cap):
            via_box = dual_via_box(ideal, a, cap)
            if via_box != dual:
                return CheckResult(
                    "dual_route_agreement", "fail", f"box {via_box.gens} vs colon {dual.gens}"
                )
        return CheckResult("dual_route_agreement", "pass")

    guarded("dual_route_agreement", check_routes)

    def check_linkage():
        lhs = irreducible_power(a1).colon_ideal(dual)
        rhs = ideal.plus(irreducible_power(a1))
        return _ok("linkage", lhs == rhs, f"(m^(a+1):I^a) = {lhs.gens} vs I+m^(a+1) = {rhs.gens}")

    guarded("linkage", check_linkage)

    def check_decomposition():
        comps = ideal.irreducible_decomposition()
        modules = [irreducible_power(b) for b in comps]
        for c in _sampled_box(lt.zero(n), a1, seed):
            want = ideal.contains(c)
            got = all(m.contains(c) for m in modules)
            if want != got:
                return CheckResult(
                    "decomposition_membership", "fail", f"membership differs at {c}"
                )
        return CheckResult("decomposition_membership", "pass")

    guarded("decomposition_membership", check_decomposition)

    def check_insensitivity():
        off = [i for i in range(n) if a[i] == 0]
        if not off:
            return CheckResult(
                "dual_a_insensitivity", "skip", "a_I has full support; nothing off-support"
            )
        bumped = tuple(a[i] + (3 if i in off else 0) for i in range(n))
        return _ok(
            "dual_a_insensitivity",
            ideal.alexander_dual(bumped) == dual,
            f"duals at {a} and {bumped} differ",
        )

    guarded("dual_a_insensitivity", check_insensitivity)

    def check_localize():
        for size in range(1, n + 1):
            for combo in combinations(range(n), size):
                face = frozenset(combo)
                restricted = ideal.restrict_to(face)
                if restricted.is_zero:
                    continue
                lhs = dual.localize_at(face)
                rhs = restricted.alexander_dual(lt.project(a, face))
                if lhs != rhs:
                    return CheckResult(
                        "localize_dualize_commutes",
                        "fail",
                        f"F={sorted(face)}: localized dual {lhs.gens} vs dual of restriction {rhs.gens}",
                    )
        return CheckResult("localize_dualize_commutes", "pass")

    guarded("localize_dualize_commutes", check_localize)

    def check_radical():
        lhs = dual.radical()
        rhs = ideal.radical().alexander_dual(lt.char_vector(lt.support(a), n))
        return _ok("radical_commutation", lhs == rhs, f"rad(I^a) {lhs.gens} vs (rad I)^supp {rhs.gens}")

    guarded("radical_commutation", check_radical)

    def check_modules():
        hullmod = cech_hull(ideal)
        double = t_dual(t_dual(hullmod))
        plain = module_of_ideal(ideal)
        lo = tuple(-2 for _ in range(n))
        hi = lt.vadd(a, (2,) * n)
        for c in _sampled_box(lo, hi, seed + 1):
            if double.member(c) != hullmod.member(c):
                return CheckResult("module_duality_laws", "fail", f"(M^T)^T differs at {c}")
            lhsum = t_dual(hullmod.plus(plain))
            if lhsum.member(c) != (t_dual(hullmod).member(c) and t_dual(plain).member(c)):
                return CheckResult("module_duality_laws", "fail", f"(M+N)^T law differs at {c}")
        boxed = boxed_dual_module(ideal, a)
        for c in _sampled_box(lt.zero(n), a, seed + 2):
            if boxed.member(c) != dual.contains(c):
                return CheckResult(
                    "module_duality_laws", "fail", f"boxed dual differs from I^a at {c}"
                )
        return CheckResult("module_duality_laws", "pass")

    guarded("module_duality_laws", check_modules)

    table = betti_table(ideal, field=field, cap=cap)

    def check_taylor():
        if len(ideal.gens) > TAYLOR_ORACLE_CAP:
            return CheckResult(
                "betti_taylor_agreement", "skip", f"more than {TAYLOR_ORACLE_CAP} generators"
            )
        oracle = betti_from_taylor(ideal, field=field, cap=TAYLOR_ORACLE_CAP)
        return _ok(
            "betti_taylor_agreement",
            oracle == table.entries,
            f"taylor strands {sorted(oracle.items())} vs koszul {sorted(table.entries.items())}",
        )

    guarded("betti_taylor_agreement", check_taylor)

    def check_gorenstein():
        augmented = dual.artinian_augment(a)
        tj = betti_table(augmented, field=field, cap=cap)
        degrees = {b for b in lcm_lattice(ideal, cap) if lt.leq(lt.ones(n), b) and lt.leq(b, a)}
        degrees |= {
            lt.vsub(a1, c)
            for (_, c) in tj.entries
            if lt.leq(lt.ones(n), lt.vsub(a1, c)) and lt.leq(lt.vsub(a1, c), a)
        }
        for b in sorted(degrees):
            for i in range(n + 1):
                lhs = quotient_beta(table, n - i, b, n)
                rhs = tj.beta(i, lt.vsub(a1, b))
                if lhs != rhs:
                    return CheckResult(
                        "gorenstein_duality",
                        "fail",
                        f"beta_(n-i),b(S/I)={lhs} vs beta_i,(a+1-b)(dual+frame)={rhs} at i={i} b={b}",
                    )
        return CheckResult("gorenstein_duality", "pass")

    guarded("gorenstein_duality", check_gorenstein)

    dual_table = betti_table(dual, field=field, cap=cap)

    def check_main_duality():
        local_tables: dict[tuple, object] = {}
        for (i, b), value in sorted(table.entries.items()):
            face = lt.support(b)
            key = tuple(sorted(face))
            if key not in local_tables:
                loc = dual.localize_at(face)
                local_tables[key] = betti_table(loc, field=field, cap=cap) if loc.is_proper else None
            sub = local_tables[key]
            proj = lt.project(lt.dual_exponent(b, a), face)
            rhs = sub.beta(len(face) - i - 1, proj) if sub is not None else 0
            if value != rhs:
                return CheckResult(
                    "main_duality",
                    "fail",
                    f"beta_{i},{b}(I)={value} vs beta_{len(face)-i-1},{proj}(localized dual)={rhs}",
                )
        return CheckResult("main_duality", "pass")

    guarded("main_duality", check_main_duality)

    def check_inequality():
        for (i, b), value in sorted(table.entries.items()):
            face = lt.support(b)
            ba = lt.dual_exponent(b, a)
            bound = sum(
                v
                for (j, c), v in dual_table.entries.items()
                if j == len(face) - i - 1 and lt.restrict(c, face) == ba
            )
            if value > bound:
                return CheckResult(
                    "duality_inequality",
                    "fail",
                    f"beta_{i},{b}(I)={value} exceeds dual-side sum {bound}",
                )
        return CheckResult("duality_inequality", "pass")

    guarded("duality_inequality", check_inequality)

    def check_bass():
        for b in ideal.irreducible_decomposition():
            face = lt.support(b)
            d = lt.vsub(b, lt.char_vector(face, n))
            value = bass_number(ideal, face, d, 0, field=field)
            if value != 1:
                return CheckResult(
                    "bass_zeroth_detects_components", "fail", f"mu_0 at component {b} gave {value}"
                )
        b = ideal.irreducible_decomposition()[0]
        face = lt.support(b)
        outside = tuple(-1 if i in face else 0 for i in range(n))
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            value = bass_number(ideal, face, outside, 0, field=field)
        flagged = any(issubclass(w.category, RangeFlagWarning) for w in caught)
        if value != 0 or not flagged:
            return CheckResult(
                "bass_zeroth_detects_components",
                "fail",
                f"out-of-range bass gave {value}, flagged={flagged}",
            )
        return CheckResult("bass_zeroth_detects_components", "pass")

    guarded("bass_zeroth_detects_components", check_bass)

    hull_cap = hull_generator_cap(n)

    def check_hull():
        if len(ideal.gens) > hull_cap:
            return CheckResult("hull_exactness", "skip", f"more than {hull_cap} generators")
        complex_ = hull_complex(ideal)
        if sorted(c.label for c in complex_.vertices()) != list(ideal.gens):
            return CheckResult("hull_exactness", "fail", "vertex labels differ from generators")
        report = is_exact_resolution(cellular_free_complex(complex_), ideal, field=field, cap=cap)
        if not report.exact:
            return CheckResult("hull_exactness", "fail", f"failures {report.failures[:3]}")
        other = hull_complex(ideal, t=2 * factorial(n + 1))
        same = {k: (c.dim, c.label) for k, c in complex_.cells.items()} == {
            k: (c.dim, c.label) for k, c in other.cells.items()
        }
        if not same:
            return CheckResult("hull_exactness", "fail", "face poset depends on t")
        return CheckResult("hull_exactness", "pass")

    guarded("hull_exactness", check_hull)

    def check_cohull():
        if len(dual.gens) + n > hull_cap:
            return CheckResult("cohull_exactness", "skip", "augmented dual exceeds hull cap")
        fc = cohull(ideal, a)
        report = is_exact_resolution(fc, ideal, field=field, cap=cap)
        if not report.exact:
            return CheckResult("cohull_exactness", "fail", f"failures {report.failures[:3]}")
        if ideal.is_cogeneric() and not is_minimal(fc):
            return CheckResult("cohull_exactness", "fail", "cogeneric ideal with non-minimal cohull")
        return CheckResult("cohull_exactness", "pass")

    guarded("cohull_exactness", check_cohull)

    def check_scarf():
        if not ideal.is_generic():
            return CheckResult("scarf_minimal_resolution", "skip", "ideal is not generic")
        complex_ = scarf_complex(ideal)
        fc = cellular_free_complex(complex_)
        report = is_exact_resolution(fc, ideal, field=field, cap=cap)
        if not (report.exact and is_minimal(fc)):
            return CheckResult(
                "scarf_minimal_resolution", "fail", f"exact={report.exact} minimal={is_minimal(fc)}"
            )
        if len(ideal.gens) <= hull_cap:
            hulled = hull_complex(ideal)
            same = {k: (c.dim, c.label) for k, c in complex_.cells.items()} == {
                k: (c.dim, c.label) for k, c in hulled.cells.items()
            }
            if not same:
                return CheckResult("scarf_minimal_resolution", "fail", "scarf and hull posets differ")
        return CheckResult("scarf_minimal_resolution", "pass")

    guarded("scarf_minimal_resolution", check_scarf)

    def check_facets():
        if not ideal.is_generic():
            return CheckResult("facet_decomposition_roundtrip", "skip", "ideal is not generic")
        augmented = ideal.artinian_augment(a)
        comps = facet_decomposition(scarf_complex(augmented), a)
        return _ok(
            "facet_decomposition_roundtrip",
            comps == ideal.irreducible_decomposition(),
            f"facet components {comps}",
        )

    guarded("facet_decomposition_roundtrip", check_facets)

    def check_subdivision():
        augmented = ideal.artinian_augment(a)
        if len(augmented.gens) > hull_cap:
            return CheckResult("artinian_hull_subdivision", "skip", "augmented ideal exceeds hull cap")
        complex_ = hull_complex(augmented)
        good, problems = hull_is_subdivision_check(complex_)
        return _ok("artinian_hull_subdivision", good, "; ".join(problems))

    guarded("artinian_hull_subdivision", check_subdivision)

    def check_deformation():
        if ideal.is_generic():
            base = scarf_complex(ideal)
        elif len(ideal.gens) <= hull_cap:
            base = hull_complex(ideal)
        else:
            return CheckResult("deformation_acyclicity", "skip", "no complex within caps")
        rng = random.Random(f"deform:{seed}")
        samples = [lt.ones(n), tuple(2 if i == 0 else 1 for i in range(n))]
        samples.append(tuple(rng.randint(0, 3) for _ in range(n)))
        for b in samples:
            deformed = deform_complex(base, b)
            acyclic, bad = acyclicity_check_cellular(deformed, field=field, cap=cap)
            if not acyclic:
                return CheckResult("deformation_acyclicity", "fail", f"b={b} cycle at {bad[:2]}")
            report = is_exact_resolution(
                cellular_free_complex(deformed), deformed_module(ideal, b), field=field, cap=cap
            )
            if not report.exact:
                return CheckResult(
                    "deformation_acyclicity", "fail", f"b={b} failures {report.failures[:3]}"
                )
        return CheckResult("deformation_acyclicity", "pass")

    guarded("deformation_acyclicity", check_deformation)

    # report-only observations
    def observe_variant():
        if len(dual.gens) + n > hull_cap:
            return CheckResult("unbounded_variant_observation", "skip", "hull cap")
        augmented = dual.artinian_augment(a)
        complex_ = hull_complex(augmented)
        spread = lt.pos_part(lt.vsub(a, dual.lcm_exponent()))
        outcomes = []
        for b in {lt.zero(n), spread}:
            sub = complex_.unbounded_subcomplex(lt.vadd(b, lt.ones(n)))
            try:
                fc = cocellular_dual(complex_, sub, a)
                report = is_exact_resolution(fc, ideal, field=field, cap=cap)
                outcomes.append(f"b={b}: exact={report.exact}")
            except PreconditionError as exc:
                outcomes.append(f"b={b}: rejected ({exc})")
        return CheckResult("unbounded_variant_observation", "info", "; ".join(sorted(outcomes)))

    guarded("unbounded_variant_observation", observe_variant)

    def observe_gcd_labels():
        augmented = ideal.artinian_augment(a)
        if len(augmented.gens) > hull_cap:
            return CheckResult("interior_gcd_label_observation", "skip", "hull cap")
        good, bad = interior_gcd_label_check(hull_complex(augmented))
        detail = "holds on every interior cell" if good else f"fails at {sorted(map(sorted, bad))}"
        return CheckResult("interior_gcd_label_observation", "info", detail)

    guarded("interior_gcd_label_observation", observe_gcd_labels)

    def observe_hull_cohull():
        if len(ideal.gens) > hull_cap or len(dual.gens) + n > hull_cap:
            return CheckResult("hull_cohull_comparison", "skip", "hull cap")
        hull_ranks = sorted(cellular_free_complex(hull_complex(ideal)).ranks().values())
        cohull_ranks = sorted(cohull(ideal, a).ranks().values())
        return CheckResult(
            "hull_cohull_comparison",
            "info",
            f"hull ranks {hull_ranks} vs cohull ranks {cohull_ranks}"
            + ("; equal" if hull_ranks == cohull_ranks else "; different"),
        )

    guarded("hull_cohull_comparison", observe_hull_cohull)

    if attributes:
        results.extend(_check_attributes(ideal, table, attributes, cap))
    return results


def _check_attributes(ideal, table, attributes: dict, cap) -> list[CheckResult]:
    results: list[CheckResult] = []
    if "canonical_a" in attributes:
        want = tuple(attributes["canonical_a"])
        results.append(
            _ok("expected_canonical_a", ideal.lcm_exponent() == want,
                f"a_I = {ideal.lcm_exponent()} expected {want}")
        )
    for entry in attributes.get("duals", ()):
        a = tuple(entry["a"])
        want = sorted(tuple(g) for g in entry["generators"])
        got = sorted(ideal.alexander_dual(a).gens)
        results.append(
            _ok(f"expected_dual_at_{'_'.join(map(str, a))}", got == want, f"got {got}")
        )
    if "components" in attributes:
        want = sorted(tuple(b) for b in attributes["components"])
        got = sorted(ideal.irreducible_decomposition())
        results.append(_ok("expected_components", got == want, f"got {got}"))
    if "betti_totals" in attributes:
        want = tuple(attributes["betti_totals"])
        results.append(
            _ok("expected_betti_totals", table.totals() == want, f"got {table.totals()}")
        )
    if "generic" in attributes:
        results.append(
            _ok("expected_genericity", ideal.is_generic() == bool(attributes["generic"]),
                f"is_generic = {ideal.is_generic()}")
        )
    if "hull_f_vector" in attributes:
        want = tuple(attributes["hull_f_vector"])
        try:
            got = hull_complex(ideal).f_vector()
            results.append(_ok("expected_hull_f_vector", got == want, f"got {got}"))
        except CapExceededError as exc:
            results.append(CheckResult("expected_hull_f_vector", "skip", str(exc)))
    return results


def suite_passed(results: list[CheckResult]) -> bool:
    return not any(r.status == "fail" for r in results)
