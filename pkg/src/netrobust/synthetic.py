"""Seeded generators for synthetic bipartite interaction networks.

Used for the bundled sample networks and the test corpora. All draws come
from :class:`~netrobust.rng.SplitMix64`.
"""

from __future__ import annotations

import bisect
import itertools

from .graph import BipartiteGraph, InteractionType
from .rng import SplitMix64


def _labels(prefix, count):
    return [f"{prefix}{i}" for i in range(count)]


def random_bipartite(n_rows: int, n_cols: int, m: int, seed: int, network_id: str = "",
                     interaction_type=InteractionType.Other) -> BipartiteGraph:
    """``m`` interactions placed uniformly among all row/column pairs."""
    picks = SplitMix64(seed).sample_indices(n_rows * n_cols, m)
    return BipartiteGraph(_labels("r", n_rows), _labels("c", n_cols),
                          [divmod(i, n_cols) for i in picks], network_id, interaction_type)


def modular_bipartite(blocks: int, rows_per_block: int, cols_per_block: int, p_in: float,
                      p_out: float, seed: int, network_id: str = "",
                      interaction_type=InteractionType.Other) -> BipartiteGraph:
    """Block-structured network: pairs inside a block link with ``p_in``,
    pairs across blocks with ``p_out``. Every species gets at least one
    partner inside its own block."""
    rng = SplitMix64(seed)
    n_rows, n_cols = blocks * rows_per_block, blocks * cols_per_block
    edges = set()
    for r, c in itertools.product(range(n_rows), range(n_cols)):
        same = r // rows_per_block == c // cols_per_block
        if rng.random() < (p_in if same else p_out):
            edges.add((r, c))
    for r in range(n_rows):
        b = r // rows_per_block
        edges.add((r, b * cols_per_block + rng.below(cols_per_block)))
    for c in range(n_cols):
        b = c // cols_per_block
        edges.add((b * rows_per_block + rng.below(rows_per_block), c))
    return BipartiteGraph(_labels("r", n_rows), _labels("c", n_cols), edges,
                          network_id, interaction_type)


def star_bipartite(hubs: int, leaves_per_hub: int, extra: int, seed: int, network_id: str = "",
                   interaction_type=InteractionType.Other) -> BipartiteGraph:
    """Hub-dominated network with hubs on both sides.

    Rows ``0..hubs-1`` and columns ``0..hubs-1`` are hubs that all interact
    with each other. Every hub also holds a private fan of ``leaves_per_hub``
    degree-one species on the opposite side. ``extra`` random interactions
    are added on top.
    """
    rng = SplitMix64(seed)
    n = hubs + hubs * leaves_per_hub
    edges = {(r, c) for r in range(hubs) for c in range(hubs)}
    for h in range(hubs):
        for j in range(leaves_per_hub):
            leaf = hubs + h * leaves_per_hub + j
            edges.add((h, leaf))
            edges.add((leaf, h))
    target = len(edges) + extra
    while len(edges) < target:
        edges.add((rng.below(n), rng.below(n)))
    return BipartiteGraph(_labels("r", n), _labels("c", n), edges, network_id, interaction_type)


def heavy_tailed_bipartite(n_rows: int, n_cols: int, m: int, exponent: float, seed: int,
                           network_id: str = "",
                           interaction_type=InteractionType.Other) -> BipartiteGraph:
    """Chung-Lu style network with Zipf-like species weights ``(i + 1) ** -exponent``.

    Pairs are drawn with probability proportional to the product of their
    weights until ``m`` distinct interactions exist, which gives the skewed,
    nested degree distributions typical of pollination data.
    """
    if m > n_rows * n_cols:
        raise ValueError("more interactions than pairs")
    rng = SplitMix64(seed)

    def cumulative(count):
        total, out = 0.0, []
        for i in range(count):
            total += (i + 1) ** -exponent
            out.append(total)
        return out

    cr, cc = cumulative(n_rows), cumulative(n_cols)
    edges = set()
    while len(edges) < m:
        r = bisect.bisect_right(cr, rng.random() * cr[-1])
        c = bisect.bisect_right(cc, rng.random() * cc[-1])
        edges.add((min(r, n_rows - 1), min(c, n_cols - 1)))
    return BipartiteGraph(_labels("r", n_rows), _labels("c", n_cols), edges,
                          network_id, interaction_type)
