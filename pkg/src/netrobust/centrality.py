"""Node betweenness, PageRank and the variance summary."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import EmptyInputError, EmptyNetworkError
from .graph import Graph

PAGERANK_DAMPING = 0.85
PAGERANK_TOLERANCE = 1e-10
PAGERANK_MAX_ITERATIONS = 1000


@dataclass(frozen=True)
class CentralityVector:
    """Per-node scores indexed like the graph's nodes.

    ``converged`` and ``iterations`` are only meaningful for PageRank; a
    ``False`` flag means ``values`` is the last iterate, not a fixed point.
    """

    values: np.ndarray
    converged: bool = True
    iterations: int = 0

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]


def _brandes(g: Graph):
    indptr, indices, slot_edge = g.csr()
    alive = np.ones(g.m, dtype=np.bool_)
    return _kernels.brandes(g.n, g.m, indptr, indices, slot_edge, alive,
                            np.arange(g.n, dtype=np.int64))


def betweenness(g: Graph) -> CentralityVector:
    """Unnormalised shortest-path betweenness, each unordered pair counted once.

    Brandes dependency accumulation from every source in node-index order,
    then halved (each pair is reached from both of its ends).
    """
    node_bc, _ = _brandes(g)
    return CentralityVector(node_bc / 2.0)


def pagerank(g: Graph, damping: float = PAGERANK_DAMPING, tolerance: float = PAGERANK_TOLERANCE,
             max_iterations: int = PAGERANK_MAX_ITERATIONS) -> CentralityVector:
    """Damped PageRank by power iteration on the undirected graph.

    Starts from the uniform vector and applies

        PR(x) <- (1 - d)/n + d * (sum_{y ~ x} PR(y)/deg(y) + dangling/n)

    where ``dangling`` is the rank currently held by degree-0 nodes. Stops
    once the L1 change is at most ``tolerance``.
    """
    n = g.n
    if n == 0:
        raise EmptyNetworkError("PageRank of an empty graph")
    if not 0 < damping <= 1:
        raise ValueError("damping must lie in (0, 1]")
    deg = g.degrees().astype(float)
    dangling = deg == 0
    if g.m:
        eu, ev = np.array(g.edges, dtype=np.int64).T
        src = np.concatenate([eu, ev])
        dst = np.concatenate([ev, eu])
    else:
        src = dst = np.empty(0, dtype=np.int64)
    inv_deg = np.where(dangling, 0.0, 1.0 / np.where(dangling, 1.0, deg))

    pr = np.full(n, 1.0 / n)
    for it in range(1, max_iterations + 1):
        share = pr * inv_deg
        incoming = np.bincount(dst, weights=share[src], minlength=n)
        new = (1.0 - damping) / n + damping * (incoming + pr[dangling].sum() / n)
        new /= new.sum()
        change = np.abs(new - pr).sum()
        pr = new
        if change <= tolerance:
            return CentralityVector(pr, True, it)
    return CentralityVector(pr, False, max_iterations)


def variance(values) -> float:
    """Population variance ``sum((x - mean)**2) / n``."""
    x = np.asarray(values.values if isinstance(values, CentralityVector) else values, dtype=float)
    if x.size == 0:
        raise EmptyInputError("variance of an empty list")
    mean = math.fsum(x) / x.size
    return math.fsum((x - mean) ** 2) / x.size
