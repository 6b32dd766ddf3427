"""Spectral lower bounds for chromatic numbers of graphs.

Squared-energy and Hoffman bounds, exact fractional chromatic numbers,
pair-orbit schemes of edge-transitive graphs, homomorphism obstruction
certificates, and randomized verification of the inequalities they
rest on.
"""

from .bounds import (
    BoundReport,
    ando_lin_bound,
    clique_number,
    full_report,
    hoffman_bound,
    inertia_bound,
)
from .certify import (
    LemmaTrialReport,
    ObstructionCertificate,
    certificate_to_dict,
    find_homomorphism,
    obstruction_certificate,
    run_all_lemma_verifiers,
    verify_certificate_dict,
    verify_general_Z_inequality,
    verify_lemma_conformal,
    verify_lemma_main,
    verify_scheme_span_inequality,
)
from .enumeration import enumerate_nonisomorphic
from .errors import (
    BoundUndefinedError,
    BudgetExceededError,
    EigensolverError,
    Graph6Error,
    GraphSpecError,
    NotEdgeTransitiveError,
    SizeLimitError,
    SpecchromError,
)
from .fracchrom import (
    FractionalSolution,
    fractional_chromatic,
    kneser_ratio,
    maximal_independent_sets,
)
from .generators import (
    complete_graph,
    cycle_graph,
    generate,
    kneser_graph,
    paley_graph,
    path_graph,
    petersen_graph,
    resolve_graph_spec,
    wheel_graph,
)
from .graph6 import iter_graph6, parse_graph6, write_graph6
from .graphs import (
    BipartiteCheck,
    Graph,
    connected_components,
    is_bipartite,
    is_connected,
)
from .partitions import (
    HPartition,
    identity_partition,
    partition_from_sizes,
)
from .spectra import (
    SpectralSplit,
    Spectrum,
    block_frobenius,
    eigendecompose,
    inertia,
    psd_split,
    squared_energies,
)
from .survey import SurveyRow, SurveyStats, run_survey
from .symmetry import (
    PairOrbitScheme,
    PermGroup,
    automorphism_group,
    is_edge_transitive,
    is_vertex_transitive,
    pair_orbit_scheme,
    reynolds_average,
)

__version__ = "0.1.0"

__all__ = [
    "BipartiteCheck",
    "BoundReport",
    "BoundUndefinedError",
    "BudgetExceededError",
    "EigensolverError",
    "FractionalSolution",
    "Graph",
    "Graph6Error",
    "GraphSpecError",
    "HPartition",
    "LemmaTrialReport",
    "NotEdgeTransitiveError",
    "ObstructionCertificate",
    "PairOrbitScheme",
    "PermGroup",
    "SizeLimitError",
    "SpecchromError",
    "SpectralSplit",
    "Spectrum",
    "SurveyRow",
    "SurveyStats",
    "ando_lin_bound",
    "automorphism_group",
    "block_frobenius",
    "certificate_to_dict",
    "clique_number",
    "complete_graph",
    "connected_components",
    "cycle_graph",
    "eigendecompose",
    "enumerate_nonisomorphic",
    "find_homomorphism",
    "fractional_chromatic",
    "full_report",
    "generate",
    "hoffman_bound",
    "identity_partition",
    "inertia",
    "inertia_bound",
    "is_bipartite",
    "is_connected",
    "is_edge_transitive",
    "is_vertex_transitive",
    "iter_graph6",
    "kneser_graph",
    "kneser_ratio",
    "maximal_independent_sets",
    "obstruction_certificate",
    "pair_orbit_scheme",
    "paley_graph",
    "parse_graph6",
    "partition_from_sizes",
    "path_graph",
    "petersen_graph",
    "psd_split",
    "resolve_graph_spec",
    "reynolds_average",
    "run_all_lemma_verifiers",
    "run_survey",
    "squared_energies",
    "verify_certificate_dict",
    "verify_general_Z_inequality",
    "verify_lemma_conformal",
    "verify_lemma_main",
    "verify_scheme_span_inequality",
    "wheel_graph",
]
