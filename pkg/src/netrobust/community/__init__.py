"""Modularity and four community-detection algorithms."""

from .cnm import cnm
from .girvan_newman import edge_betweenness, girvan_newman, girvan_newman_trace
from .label_propagation import label_propagation
from .louvain import louvain
from .partition import (
    Algorithm,
    DetectionResult,
    Partition,
    community_count,
    modularity,
)

__all__ = [
    "Algorithm",
    "DetectionResult",
    "Partition",
    "cnm",
    "community_count",
    "edge_betweenness",
    "girvan_newman",
    "girvan_newman_trace",
    "label_propagation",
    "louvain",
    "modularity",
]
