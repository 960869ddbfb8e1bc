"""Girvan-Newman divisive clustering."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .. import _kernels
from ..graph import Graph
from .partition import Algorithm, DetectionResult, Partition, _result

# relative slack when deciding that two edge betweenness values are tied
TIE_RTOL = 1e-9


def edge_betweenness(g: Graph) -> dict[tuple[int, int], float]:
    """Shortest-path betweenness of every edge, unordered pairs counted once."""
    indptr, indices, slot_edge = g.csr()
    alive = np.ones(g.m, dtype=np.bool_)
    _, eb = _kernels.brandes(g.n, g.m, indptr, indices, slot_edge, alive,
                             np.arange(g.n, dtype=np.int64))
    return {e: float(x) / 2.0 for e, x in zip(g.edges, eb)}


@dataclass(frozen=True)
class GirvanNewmanTrace:
    """Per-split history: modularity and component count of each evaluated partition."""

    modularity: np.ndarray
    component_counts: np.ndarray
    removal_order: tuple


def girvan_newman_trace(g: Graph, exhaustive: bool = False) -> tuple[DetectionResult, GirvanNewmanTrace]:
    """Like :func:`girvan_newman` but also returns the full removal history."""
    if g.m == 0:
        empty = GirvanNewmanTrace(np.empty(0), np.empty(0, dtype=np.int64), ())
        return DetectionResult(Partition.singletons(g.n), float("nan"),
                               Algorithm.GirvanNewman), empty
    indptr, indices, slot_edge = g.csr()
    eu, ev = (np.ascontiguousarray(a) for a in np.array(g.edges, dtype=np.int64).T)
    best, _, q_trace, c_trace, order = _kernels.girvan_newman_run(
        g.n, indptr, indices, slot_edge, eu, ev, TIE_RTOL, exhaustive)
    trace = GirvanNewmanTrace(q_trace, c_trace, tuple(g.edges[e] for e in order))
    return _result(g, best.tolist(), Algorithm.GirvanNewman), trace


def girvan_newman(g: Graph, exhaustive: bool = False) -> DetectionResult:
    """Divisive clustering by repeated removal of the top-betweenness edge.

    After each removal edge betweenness is recomputed (only inside the
    component that lost the edge). Whenever a removal splits a component,
    the resulting component partition is scored against the original graph.
    Removal stops at the first split whose modularity is not higher than the
    previous split's; with ``exhaustive=True`` it continues until no edges
    remain. The highest-modularity partition seen is returned, the earliest
    one on ties. The starting partition (components of the input) is a
    candidate too.

    Ties in betweenness, within a relative ``TIE_RTOL``, go to the edge with
    the smallest ``(u, v)``.
    """
    return girvan_newman_trace(g, exhaustive)[0]
