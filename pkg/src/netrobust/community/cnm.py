"""Clauset-Newman-Moore greedy agglomeration."""

from __future__ import annotations

import heapq

from ..graph import Graph
from .partition import Algorithm, DetectionResult, Partition, _result


def cnm(g: Graph) -> DetectionResult:
    """Greedy modularity agglomeration from singleton communities.

    Merges the adjacent community pair with the largest gain until no merge
    has a positive gain. Gains are tracked as the integer
    ``2m * E_ab - K_a * K_b`` (the modularity gain times ``(2m)**2 / 2``),
    where ``E_ab`` counts edges between the communities and ``K`` is the
    degree total, so ties are exact. Ties go to the lexicographically
    smallest ``(a, b)``; the merged community keeps the id ``a``.

    Pairs with no edge between them always have a non-positive gain and are
    never considered.
    """
    n = g.n
    if g.m == 0:
        return DetectionResult(Partition.singletons(n), float("nan"), Algorithm.CNM)
    two_m = 2 * g.m
    between = [dict.fromkeys(a, 1) for a in g.adjacency]
    tot = [len(a) for a in g.adjacency]
    members = [[v] for v in range(n)]
    alive = [True] * n

    heap = [(-(two_m - tot[u] * tot[v]), u, v) for u, v in g.edges]
    heapq.heapify(heap)
    while heap:
        neg_gain, a, b = heapq.heappop(heap)
        if -neg_gain <= 0:
            break
        if not (alive[a] and alive[b]):
            continue
        e_ab = between[a].get(b)
        if e_ab is None or two_m * e_ab - tot[a] * tot[b] != -neg_gain:
            continue  # stale entry
        # merge b into a
        alive[b] = False
        members[a].extend(members[b])
        members[b] = []
        tot[a] += tot[b]
        del between[a][b]
        for c, e_bc in between[b].items():
            if c == a:
                continue
            del between[c][b]
            between[a][c] = between[a].get(c, 0) + e_bc
            between[c][a] = between[a][c]
        between[b] = {}
        for c, e_ac in between[a].items():
            lo, hi = (a, c) if a < c else (c, a)
            heapq.heappush(heap, (-(two_m * e_ac - tot[a] * tot[c]), lo, hi))

    labels = [0] * n
    for cid, group in enumerate(members):
        for v in group:
            labels[v] = cid
    return _result(g, labels, Algorithm.CNM)
