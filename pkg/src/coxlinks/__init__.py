"""Exact spectral certification for mixed-sign Coxeter graphs.

A mixed-sign Coxeter graph is a finite connected simple graph with a +-1
label per vertex.  The package builds its reflections and bipartite
Coxeter transformation over the integers, derives Coxeter and Alexander
polynomials, Seifert and monodromy matrices, and certifies the spectral
facts (real negative spectrum, interlacing under vertex extension,
radius monotonicity, the golden-ratio-squared minimum, trapezoidal
coefficients) with Sturm chains and rational interval arithmetic: no
floating point anywhere in a certificate.
"""

from .analysis import (
    AnalysisReport,
    MinSearchResult,
    VerificationSummary,
    analyze,
    log_concavity_check,
    min_dilatation_search,
    sign_alternation_check,
    trapezoidal_check,
    verify_theorems,
)
from .coxeter import (
    CoxeterSystem,
    IdentityMismatch,
    alexander_polynomial,
    bilinear_form,
    bipartite_factors,
    coxeter_polynomial,
    coxeter_transformation,
    homological_monodromy,
    reflection,
    seifert_matrix,
    verify_proof_identities,
)
from .exact import (
    IntMatrix,
    IntPolynomial,
    fraction_to_decimal,
    mat_charpoly,
    poly_divexact,
    poly_eval,
    poly_gcd,
    squarefree_decomposition,
    squarefree_part,
)
from .fixtures import FIXTURES, fixture_graph, fixture_names, fixture_text
from .graphs import (
    MINUS,
    PLUS,
    Bipartition,
    GraphError,
    GraphParseError,
    MixedSignCoxeterGraph,
    NotAlternatingError,
    NotBipartiteError,
    adjacency_matrix,
    add_edge,
    enumerate_alternating_trees,
    graph_to_text,
    is_alternating_sign,
    is_vertex_extension,
    parse_graph,
    random_alternating_tree,
    random_edge_augmentation,
    random_vertex_extension,
    remove_vertex,
    sign_bipartition,
    tree_canonical_key,
    two_coloring,
    vertex_extension,
)
from .spectra import (
    DEFAULT_EPSILON,
    RationalInterval,
    RootIsolation,
    cauchy_bound,
    compare_isolated_roots,
    correspondence_check,
    interlace_check,
    is_real_rooted,
    is_real_stable,
    isolate_real_roots,
    max_real_root,
    min_root_interval,
    spectral_radius_enclosure,
    sturm_count,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "Bipartition",
    "CoxeterSystem",
    "DEFAULT_EPSILON",
    "FIXTURES",
    "GraphError",
    "GraphParseError",
    "IdentityMismatch",
    "IntMatrix",
    "IntPolynomial",
    "MINUS",
    "MinSearchResult",
    "MixedSignCoxeterGraph",
    "NotAlternatingError",
    "NotBipartiteError",
    "PLUS",
    "RationalInterval",
    "RootIsolation",
    "VerificationSummary",
    "adjacency_matrix",
    "add_edge",
    "alexander_polynomial",
    "analyze",
    "bilinear_form",
    "bipartite_factors",
    "cauchy_bound",
    "compare_isolated_roots",
    "correspondence_check",
    "coxeter_polynomial",
    "coxeter_transformation",
    "enumerate_alternating_trees",
    "fixture_graph",
    "fixture_names",
    "fixture_text",
    "fraction_to_decimal",
    "graph_to_text",
    "homological_monodromy",
    "interlace_check",
    "is_alternating_sign",
    "is_real_rooted",
    "is_real_stable",
    "is_vertex_extension",
    "isolate_real_roots",
    "log_concavity_check",
    "mat_charpoly",
    "max_real_root",
    "min_dilatation_search",
    "min_root_interval",
    "parse_graph",
    "poly_divexact",
    "poly_eval",
    "poly_gcd",
    "random_alternating_tree",
    "random_edge_augmentation",
    "random_vertex_extension",
    "reflection",
    "remove_vertex",
    "seifert_matrix",
    "sign_alternation_check",
    "sign_bipartition",
    "spectral_radius_enclosure",
    "squarefree_decomposition",
    "squarefree_part",
    "sturm_count",
    "trapezoidal_check",
    "tree_canonical_key",
    "two_coloring",
    "verify_proof_identities",
    "verify_theorems",
    "vertex_extension",
]
