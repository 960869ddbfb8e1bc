"""Structural metrics of bipartite interaction networks and their robustness
to missing interactions."""

__version__ = "0.1.0"

from .errors import (
    CapacityError,
    EmptyInputError,
    EmptyNetworkError,
    GridError,
    ManifestError,
    NetRobustError,
    NumericalError,
    ParseError,
    UndefinedModularityError,
)
from .graph import (
    BipartiteGraph,
    Graph,
    InteractionType,
    connected_components,
    connectance,
    laplacian,
    parse_edge_list,
    parse_incidence_csv,
    to_undirected,
)
from .robustness import (
    MetricId,
    SweepConfig,
    add_random_edges,
    aggregate,
    evaluate_metrics,
    sweep,
)
