"""trifree: exhaustive verification of the triangle-free invariant
nu(G) = 3e(G) - 17n(G) + 35*alpha(G) + N(C4;G) >= 0 at desk scale."""

from .analysis import (
    DestabiliserReport,
    InvariantRecord,
    destabilises,
    invariants,
    is_edge_critical,
    is_r_stable,
    minimal_destabilisers,
    removal_count_bound,
)
from .canon import CanonicalForm, canonical_form, certificate, is_isomorphic
from .enumerate import EnumerationSpec, enumerate_graphs, enumeration_cap, naive_enumerate
from .graph import (
    Graph,
    GraphError,
    Reduction,
    ReductionVanishedError,
    delete_vertices,
    induced,
    parse_graph6,
    read_graph6,
    reduce_closed,
    to_graph6,
)
from .solvers import (
    CycleCount,
    IndependenceResult,
    count_cycles,
    count_cycles_through,
    e2_half_sum,
    independence_number,
    max_independent_avoiding,
)

__version__ = "0.1.0"

__all__ = [
    "CanonicalForm",
    "CycleCount",
    "DestabiliserReport",
    "EnumerationSpec",
    "Graph",
    "GraphError",
    "IndependenceResult",
    "InvariantRecord",
    "Reduction",
    "ReductionVanishedError",
    "canonical_form",
    "certificate",
    "count_cycles",
    "count_cycles_through",
    "delete_vertices",
    "destabilises",
    "e2_half_sum",
    "enumerate_graphs",
    "enumeration_cap",
    "independence_number",
    "induced",
    "invariants",
    "is_edge_critical",
    "is_isomorphic",
    "is_r_stable",
    "max_independent_avoiding",
    "minimal_destabilisers",
    "naive_enumerate",
    "parse_graph6",
    "read_graph6",
    "reduce_closed",
    "removal_count_bound",
    "to_graph6",
]
