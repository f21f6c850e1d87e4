"""Independent sets, colorings, and generators for graphs whose induced
odd cycles pack boundedly.

The package revolves around one structural parameter: the maximum number of
vertex-disjoint induced odd cycles with no edges between them (iocp). Small
iocp makes maximum independent set well-approximable and the chromatic
number clique-bounded; the modules here implement seeded approximation
engines, coloring procedures, a probabilistic lower-bound construction, and
exhaustive oracles for ground truth on small graphs.
"""

from .backend import available_backends, current_backend, set_backend
from .coloring import (
    CliqueCertificate,
    TrianglePacking,
    color_bounded_iocp,
    color_triangle_free,
    f_bound,
    locally_maximal_clique,
    maximal_triangle_packing,
)
from .eptas import (
    CycleBranch,
    DecompositionResult,
    ShrinkBranch,
    SolveParams,
    amplify,
    amplify_runs,
    decompose,
    eptas_solve,
    q_bound,
)
from .errors import (
    GenerationError,
    GraphParseError,
    LimitExceededError,
    OcpackError,
    PreconditionError,
    VerificationError,
)
from .flow import max_weight_independent_set_bipartite
from .generators import (
    ConstructionReport,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    find_k33,
    gen_disjoint_odd_cycles,
    gen_high_odd_girth,
    gnp,
    groetzsch,
    mycielski,
    path_graph,
    petersen,
    pruned_complement_construction,
)
from .graph import (
    UNREACHABLE,
    Coloring,
    Graph,
    InducedSubgraph,
    OddCycle,
    ShieldSpec,
    TwoColoringResult,
    VertexWeights,
    bfs_distances,
    closed_neighborhood,
    complement,
    girth,
    induced_subgraph,
    neighborhood,
    odd_girth,
    shield_set,
    shortest_odd_cycle,
    two_coloring,
)
from .graphio import emit_graph, parse_graph
from .highgirth import (
    PackingResult,
    greedy_independent_set,
    maximal_short_odd_packing,
    no_short_odd_solve,
    select_spaced_cycle_vertices,
)
from .oracles import (
    CheckResult,
    OracleLimit,
    check_coloring,
    check_independent,
    exact_chromatic,
    exact_chromatic_coloring,
    exact_iocp,
    exact_max_clique,
    exact_mis,
    exact_mis_bruteforce,
    independent_set_of_size,
)
from .qptas import QptasParams, TrichotomyWitness, qptas_solve, trichotomy_witness
from .seeding import MAX_SEED, check_seed, derive_seed

__version__ = "0.1.0"

__all__ = [
    "MAX_SEED",
    "UNREACHABLE",
    "CheckResult",
    "CliqueCertificate",
    "Coloring",
    "ConstructionReport",
    "CycleBranch",
    "DecompositionResult",
    "GenerationError",
    "Graph",
    "GraphParseError",
    "InducedSubgraph",
    "LimitExceededError",
    "OcpackError",
    "OddCycle",
    "OracleLimit",
    "PackingResult",
    "PreconditionError",
    "QptasParams",
    "ShieldSpec",
    "ShrinkBranch",
    "SolveParams",
    "TrianglePacking",
    "TrichotomyWitness",
    "TwoColoringResult",
    "VerificationError",
    "VertexWeights",
    "amplify",
    "amplify_runs",
    "available_backends",
    "bfs_distances",
    "check_coloring",
    "check_independent",
    "check_seed",
    "closed_neighborhood",
    "color_bounded_iocp",
    "color_triangle_free",
    "complement",
    "complete_bipartite",
    "complete_graph",
    "current_backend",
    "cycle_graph",
    "decompose",
    "derive_seed",
    "emit_graph",
    "eptas_solve",
    "exact_chromatic",
    "exact_chromatic_coloring",
    "exact_iocp",
    "exact_max_clique",
    "exact_mis",
    "exact_mis_bruteforce",
    "f_bound",
    "find_k33",
    "gen_disjoint_odd_cycles",
    "gen_high_odd_girth",
    "girth",
    "gnp",
    "greedy_independent_set",
    "groetzsch",
    "independent_set_of_size",
    "induced_subgraph",
    "locally_maximal_clique",
    "max_weight_independent_set_bipartite",
    "maximal_short_odd_packing",
    "maximal_triangle_packing",
    "mycielski",
    "neighborhood",
    "no_short_odd_solve",
    "odd_girth",
    "parse_graph",
    "path_graph",
    "petersen",
    "pruned_complement_construction",
    "q_bound",
    "qptas_solve",
    "select_spaced_cycle_vertices",
    "set_backend",
    "shield_set",
    "shortest_odd_cycle",
    "trichotomy_witness",
    "two_coloring",
]
