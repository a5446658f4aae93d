"""Exact face-vector and clique-vector toolkit.

Core objects: simplicial complexes and graphs on small ground sets, Turan
graphs with closed-form clique vectors, certificate-producing membership
tests for the hull generated by a vector's truncations, the constructive
shift operators, and exhaustive desk-scale verification sweeps.
"""

__version__ = "0.1.0"

from .complexes import SimplicialComplex, clique_complex, face_mask, mask_vertices
from .graphs import (
    Graph,
    clique_count,
    clique_number,
    clique_vector,
    complete_graph,
    empty_graph,
    is_r_colorable,
    join_with_independent_set,
    multipartite_parts,
)
from .hull import (
    HullCertificate,
    HullInstance,
    HullViolation,
    membership_coefficients,
    membership_inequalities,
    truncation,
    verify_certificate,
)
from .operators import (
    ColoredKSubset,
    balance_multipartite,
    colored_subset,
    complex_shift,
    dominance_order,
    is_color_shifted,
    shift_all_to_target,
    symmetrize_to_multipartite,
    zykov_clique_delta,
    zykov_shift,
)
from .turan import TuranSpec, turan_clique_vector, turan_graph, turan_parts
from .vectors import IntVector
from .verify import (
    CapExceeded,
    VerificationReport,
    check_section5_chain,
    check_theorem_1_1,
    check_theorem_3_1,
    check_zykov,
    count_complexes,
    enumerate_complexes,
    enumerate_labeled_graphs,
)

__all__ = [
    "__version__",
    "IntVector",
    "SimplicialComplex",
    "Graph",
    "TuranSpec",
    "HullCertificate",
    "HullInstance",
    "HullViolation",
    "VerificationReport",
    "CapExceeded",
    "ColoredKSubset",
    "face_mask",
    "mask_vertices",
    "clique_complex",
    "clique_count",
    "clique_number",
    "clique_vector",
    "complete_graph",
    "empty_graph",
    "is_r_colorable",
    "join_with_independent_set",
    "multipartite_parts",
    "membership_coefficients",
    "membership_inequalities",
    "truncation",
    "verify_certificate",
    "balance_multipartite",
    "colored_subset",
    "complex_shift",
    "dominance_order",
    "is_color_shifted",
    "shift_all_to_target",
    "symmetrize_to_multipartite",
    "zykov_clique_delta",
    "zykov_shift",
    "turan_clique_vector",
    "turan_graph",
    "turan_parts",
    "check_section5_chain",
    "check_theorem_1_1",
    "check_theorem_3_1",
    "check_zykov",
    "count_complexes",
    "enumerate_complexes",
    "enumerate_labeled_graphs",
]
