"""Exact circular colouring parameters of small digraphs.

Core objects live in graphs (Digraph, Graph, text format), colourings
(CircularColouring and the checkers), solvers (ladder-based exact minima),
lp (the fractional relaxation with self-verifying certificates), families
(generators), and reproduce (the value tables).  The backtracking kernels
run compiled when the extension built, with a pure-Python fallback.
"""

from .colourings import (
    CircularColouring,
    Violation,
    check_acyclic_kd,
    check_circular_kd,
    check_partition_k,
    check_tree_kd,
    parse_colouring,
    serialize_colouring,
)
from .families import (
    add_source,
    all_orientations,
    build_family,
    circulant,
    complete,
    dicycle,
    family_names,
    kneser2,
    knauer,
    orientation,
    random_orientation,
    symmetric,
    wheel,
    wheel_alternating,
)
from .graphs import (
    CapExceeded,
    Digraph,
    Graph,
    ParseError,
    SccDecomposition,
    digirth,
    find_directed_cycle,
    find_undirected_cycle,
    induced_subdigraph,
    is_acyclic,
    is_forest,
    parse_digraph,
    serialize,
    strong_components,
    underlying_graph,
)
from .kernels import available_backends, backend_name
from .lp import (
    AcyclicSetSystem,
    LinearProgram,
    LpCertificate,
    LpInfeasible,
    LpSolution,
    LpUnbounded,
    covering_lp,
    fractional_dichromatic,
    fractional_lower_bound,
    maximal_acyclic_sets,
    simplex_solve,
    verify_certificate,
)
from .solvers import (
    CandidateLadder,
    SolverResult,
    SolveStats,
    alpha,
    candidate_fractions,
    circular_dichromatic,
    circular_vertex_arboricity,
    dichromatic,
    exists_acyclic_kd,
    exists_circular_kd,
    exists_tree_kd,
    star_dichromatic,
    sweep_orientations,
)

__version__ = "0.1.0"

__all__ = [
    "AcyclicSetSystem",
    "CandidateLadder",
    "CapExceeded",
    "CircularColouring",
    "Digraph",
    "Graph",
    "LinearProgram",
    "LpCertificate",
    "LpInfeasible",
    "LpSolution",
    "LpUnbounded",
    "ParseError",
    "SccDecomposition",
    "SolveStats",
    "SolverResult",
    "Violation",
    "add_source",
    "all_orientations",
    "alpha",
    "available_backends",
    "backend_name",
    "build_family",
    "candidate_fractions",
    "check_acyclic_kd",
    "check_circular_kd",
    "check_partition_k",
    "check_tree_kd",
    "circulant",
    "circular_dichromatic",
    "circular_vertex_arboricity",
    "complete",
    "covering_lp",
    "dichromatic",
    "dicycle",
    "family_names",
    "digirth",
    "exists_acyclic_kd",
    "exists_circular_kd",
    "exists_tree_kd",
    "find_directed_cycle",
    "find_undirected_cycle",
    "fractional_dichromatic",
    "fractional_lower_bound",
    "induced_subdigraph",
    "is_acyclic",
    "is_forest",
    "kneser2",
    "knauer",
    "maximal_acyclic_sets",
    "orientation",
    "parse_colouring",
    "parse_digraph",
    "random_orientation",
    "serialize",
    "serialize_colouring",
    "simplex_solve",
    "star_dichromatic",
    "strong_components",
    "sweep_orientations",
    "symmetric",
    "underlying_graph",
    "verify_certificate",
    "wheel",
    "wheel_alternating",
]
