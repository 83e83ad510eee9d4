"""Alexander duality for monomial ideals, with cellular resolutions.

Exact (integer and rational) computation of Alexander duals, irreducible
decompositions, multigraded Betti and Bass numbers, and Taylor, Scarf, hull
and cohull resolutions, together with an identity suite that instantiates
the underlying duality theorems on concrete ideals.
"""

from .complexes import (
    Cell,
    LabelledCellComplex,
    deform_complex,
    purity_check,
    scarf_complex,
    taylor_complex,
)
from .corpus import (
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
from .documents import (
    IdealDocument,
    NonminimalInputWarning,
    default_variables,
    document_hash,
    document_to_ideal,
    format_monomial,
    ideal_to_document,
    parse_ideal_document,
    parse_monomial,
    serialize_ideal_document,
)
from .errors import CapExceededError, DimensionMismatchError, PreconditionError, box_cap
from .homology import (
    BettiTable,
    RangeFlagWarning,
    UpperKoszulComplex,
    bass_number,
    betti_number,
    betti_restricted,
    betti_table,
    lcm_lattice,
    matrix_rank,
    reduced_homology_dims,
    upper_koszul,
)
from .hull import (
    Constraint,
    StrictLinearSystem,
    cohull,
    hull_complex,
    hull_is_subdivision_check,
    interior_gcd_label_check,
)
from .ideals import (
    MonomialIdeal,
    MonomialModule,
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
from .lattice import (
    DegreeBox,
    bounded_part,
    char_vector,
    deform,
    dual_exponent,
    join,
    join_all,
    meet,
    meet_all,
    pos_part,
    support,
)
from .resolutions import (
    FreeComplex,
    ResolutionReport,
    acyclicity_check_cellular,
    betti_from_taylor,
    cellular_free_complex,
    cocellular_dual,
    dual_complex,
    facet_decomposition,
    is_exact_resolution,
    is_minimal,
    relative_free_complex,
)
from .simplicial import (
    SimplicialComplex,
    complex_from_facets,
    complex_of_squarefree,
    stanley_reisner,
)
from .staircase import staircase_svg
from .verify import CheckResult, run_identity_suite, suite_passed

__version__ = "0.1.0"

__all__ = [
    "BettiTable",
    "CapExceededError",
    "Cell",
    "CheckResult",
    "Constraint",
    "DegreeBox",
    "DimensionMismatchError",
    "FIXTURE_NAMES",
    "FreeComplex",
    "IdealDocument",
    "LabelledCellComplex",
    "MonomialIdeal",
    "MonomialModule",
    "NonminimalInputWarning",
    "PreconditionError",
    "RangeFlagWarning",
    "ResolutionReport",
    "SimplicialComplex",
    "StrictLinearSystem",
    "UpperKoszulComplex",
    "acyclicity_check_cellular",
    "bass_number",
    "betti_from_taylor",
    "betti_number",
    "betti_restricted",
    "betti_table",
    "bounded_part",
    "box_cap",
    "boxed_dual_module",
    "cech_hull",
    "cellular_free_complex",
    "char_vector",
    "cocellular_dual",
    "cohull",
    "complex_from_facets",
    "complex_of_squarefree",
    "deform",
    "deform_complex",
    "deformed_module",
    "default_variables",
    "document_hash",
    "document_to_ideal",
    "dual_complex",
    "dual_exponent",
    "dual_from_components",
    "dual_via_box",
    "facet_decomposition",
    "fixture_document",
    "format_monomial",
    "hull_complex",
    "hull_is_subdivision_check",
    "ideal_to_document",
    "interior_gcd_label_check",
    "intersect_all",
    "irreducible_power",
    "is_exact_resolution",
    "is_minimal",
    "join",
    "join_all",
    "lcm_lattice",
    "load_fixture",
    "make_corpus",
    "matrix_rank",
    "meet",
    "meet_all",
    "minimalize",
    "module_of_ideal",
    "parse_ideal_document",
    "parse_monomial",
    "permutahedron_ideal",
    "pos_part",
    "purity_check",
    "random_cogeneric_ideal",
    "random_generic_ideal",
    "random_ideal",
    "reduced_homology_dims",
    "relative_free_complex",
    "ring_module",
    "run_identity_suite",
    "scarf_complex",
    "serialize_ideal_document",
    "staircase_svg",
    "stanley_reisner",
    "suite_passed",
    "support",
    "t_dual",
    "taylor_complex",
    "tree_ideal",
    "upper_koszul",
]
