"""Point partition numbers for loopless multigraphs.

Exact chi_t computation, criticality testing, Dirac/Hajos joins,
complement decomposition, and exhaustive enumeration of critical graphs
at desk scale, with a verification CLI for the structural results the
library is built around.
"""

from .coloring import (
    Coloring,
    brooks_upper_bound,
    chi_t,
    class_hypergraph,
    enumerate_optimal_colorings,
    extreme_coloring,
    greedy_upper_bound,
    recombine,
    validate,
)
from .constructions import (
    HajosSpec,
    complete,
    cycle,
    dirac_join,
    gallai_dirac,
    hajos_join,
    k3t,
    s_clique,
    s_cycle,
)
from .criticality import (
    CriticalityReport,
    LowVertexReport,
    brooks_equality_classify,
    critical_subgraph,
    is_critical,
    is_vertex_critical,
    low_vertex_analysis,
)
from .decomposition import (
    DecompositionReport,
    check_factor_census,
    check_small_order_split,
    decompose,
    rejoin,
    t_dominating_census,
)
from .degeneracy import ClassFeasibility, PeelCertificate, peel_order_greedy, strictly_t_degenerate
from .enumeration import (
    EnumerationResult,
    bound_formulas,
    check_sparse_census_members,
    enumerate_critical,
    ext,
)
from .errors import BudgetExceededError, GraphParseError
from .kernel import IMPLEMENTATION
from .multigraph import (
    Multigraph,
    VertexSet,
    blocks,
    canonical_form,
    components,
    delete_edge,
    induced_subgraph,
    t_complement,
    t_uniform_inflation,
    underlying_degree_stats,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "ClassFeasibility",
    "Coloring",
    "CriticalityReport",
    "DecompositionReport",
    "EnumerationResult",
    "GraphParseError",
    "HajosSpec",
    "IMPLEMENTATION",
    "LowVertexReport",
    "Multigraph",
    "PeelCertificate",
    "VertexSet",
    "blocks",
    "bound_formulas",
    "brooks_equality_classify",
    "brooks_upper_bound",
    "canonical_form",
    "check_factor_census",
    "check_small_order_split",
    "check_sparse_census_members",
    "chi_t",
    "class_hypergraph",
    "complete",
    "components",
    "critical_subgraph",
    "cycle",
    "decompose",
    "delete_edge",
    "dirac_join",
    "enumerate_critical",
    "enumerate_optimal_colorings",
    "ext",
    "extreme_coloring",
    "gallai_dirac",
    "greedy_upper_bound",
    "hajos_join",
    "induced_subgraph",
    "is_critical",
    "is_vertex_critical",
    "k3t",
    "low_vertex_analysis",
    "peel_order_greedy",
    "recombine",
    "rejoin",
    "s_clique",
    "s_cycle",
    "strictly_t_degenerate",
    "t_complement",
    "t_dominating_census",
    "t_uniform_inflation",
    "underlying_degree_stats",
    "validate",
]
