"""Louvain two-phase modularity optimisation."""

from __future__ import annotations

from typing import Sequence

from ..graph import Graph
from ..rng import SplitMix64
from .partition import Algorithm, DetectionResult, Partition, _result


class _Level:
    """Weighted graph for one Louvain level.

    ``self_loop[i]`` is the diagonal adjacency entry (twice the internal edge
    weight), so ``k[i] = sum(adj[i].values()) + self_loop[i]``.
    """

    def __init__(self, adj, self_loop):
        self.adj = adj
        self.self_loop = self_loop
        self.k = [sum(a.values()) + s for a, s in zip(adj, self_loop)]

    @property
    def n(self):
        return len(self.adj)


def _local_moves(level: _Level, order: Sequence[int], two_m: int) -> tuple[list[int], bool]:
    comm = list(range(level.n))
    tot = list(level.k)
    moved_any = False
    while True:
        moved = False
        for i in order:
            ci = comm[i]
            ki = level.k[i]
            links = {}
            for j, w in level.adj[i].items():
                cj = comm[j]
                links[cj] = links.get(cj, 0) + w
            tot[ci] -= ki
            best = ci
            # scaled gain of inserting i into c: 2m * k_i,c - k_i * tot_c
            best_gain = two_m * links.get(ci, 0) - ki * tot[ci]
            for c in sorted(links):
                gain = two_m * links[c] - ki * tot[c]
                if gain > best_gain:
                    best, best_gain = c, gain
            tot[best] += ki
            if best != ci:
                comm[i] = best
                moved = True
        if not moved:
            return comm, moved_any
        moved_any = True


def _aggregate(level: _Level, comm: list[int]) -> tuple[_Level, list[int]]:
    ids = {}
    renum = [ids.setdefault(c, len(ids)) for c in comm]
    k = len(ids)
    adj = [dict() for _ in range(k)]
    self_loop = [0] * k
    for i in range(level.n):
        ci = renum[i]
        self_loop[ci] += level.self_loop[i]
        for j, w in level.adj[i].items():
            cj = renum[j]
            if ci == cj:
                self_loop[ci] += w  # visited from both ends, so adds 2w in total
            else:
                adj[ci][cj] = adj[ci].get(cj, 0) + w
    return _Level(adj, self_loop), renum


def louvain_with_orders(g: Graph, order_for_level) -> list[int]:
    """Louvain with caller-supplied visiting orders; returns raw node labels.

    ``order_for_level(level_index, n_level)`` returns the node order used by
    every local-move pass on that level.
    """
    node_comm = list(range(g.n))
    level = _Level([dict.fromkeys(a, 1) for a in g.adjacency], [0] * g.n)
    two_m = 2 * g.m
    depth = 0
    while True:
        comm, moved = _local_moves(level, order_for_level(depth, level.n), two_m)
        if not moved:
            return node_comm
        level, renum = _aggregate(level, comm)
        node_comm = [renum[c] for c in node_comm]
        depth += 1


def louvain(g: Graph, seed: int = 0) -> DetectionResult:
    """Louvain community detection at resolution 1.

    Each level shuffles its nodes once with a :class:`SplitMix64` seeded by
    ``seed``; that order is reused for every local-move pass on the level.
    A node moves only for a strictly larger gain than staying put, ties
    among other communities going to the lowest community id.
    """
    if g.m == 0:
        return DetectionResult(Partition.singletons(g.n), float("nan"), Algorithm.Louvain, seed)
    rng = SplitMix64(seed)

    def shuffled(_depth, n):
        order = list(range(n))
        rng.shuffle(order)
        return order

    return _result(g, louvain_with_orders(g, shuffled), Algorithm.Louvain, seed)
