"""Asynchronous label propagation."""

from __future__ import annotations

from ..graph import Graph
from ..rng import SplitMix64
from .partition import Algorithm, _result

LP_MAX_ROUNDS = 100


def _majority(adj_v, labels):
    counts = {}
    for w in adj_v:
        lab = labels[w]
        counts[lab] = counts.get(lab, 0) + 1
    top = max(counts.values())
    return sorted(lab for lab, c in counts.items() if c == top)


def label_propagation(g: Graph, seed: int = 0, max_rounds: int = LP_MAX_ROUNDS):
    """Label propagation with asynchronous, randomly ordered updates.

    Every node starts with its own label. Each round visits the nodes in a
    fresh shuffle and sets each one to the most frequent label among its
    neighbours, drawing uniformly among tied labels (the current label can
    be drawn like any other). Stops once every node holds one of its
    neighbourhood's most frequent labels, or after ``max_rounds`` rounds.
    Isolated nodes keep their own label.
    """
    if max_rounds < 1:
        raise ValueError("max_rounds must be positive")
    rng = SplitMix64(seed)
    adj = g.adjacency
    labels = list(range(g.n))
    active = [v for v in range(g.n) if adj[v]]
    for _ in range(max_rounds):
        order = list(active)
        rng.shuffle(order)
        for v in order:
            best = _majority(adj[v], labels)
            labels[v] = best[0] if len(best) == 1 else rng.choice(best)
        if all(labels[v] in _majority(adj[v], labels) for v in active):
            break
    return _result(g, labels, Algorithm.LabelPropagation, seed)
