from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence

from ..errors import UndefinedModularityError
from ..graph import Graph


class Algorithm(str, enum.Enum):
    CNM = "CNM"
    Louvain = "Louvain"
    GirvanNewman = "GirvanNewman"
    LabelPropagation = "LabelPropagation"


@dataclass(frozen=True)
class Partition:
    """Community id per node; ids are contiguous from 0."""

    assignment: tuple

    @classmethod
    def from_labels(cls, labels: Sequence) -> "Partition":
        """Renumber arbitrary labels by order of first appearance."""
        ids = {}
        return cls(tuple(ids.setdefault(lab, len(ids)) for lab in labels))

    @classmethod
    def singletons(cls, n: int) -> "Partition":
        return cls(tuple(range(n)))

    @classmethod
    def whole(cls, n: int) -> "Partition":
        return cls((0,) * n)

    @property
    def community_count(self) -> int:
        return max(self.assignment) + 1 if self.assignment else 0

    def communities(self) -> list[list[int]]:
        groups = [[] for _ in range(self.community_count)]
        for v, c in enumerate(self.assignment):
            groups[c].append(v)
        return groups

    def __len__(self):
        return len(self.assignment)


@dataclass(frozen=True)
class DetectionResult:
    partition: Partition
    modularity: float  # nan when the graph has no edges
    algorithm: Algorithm
    seed: int | None = None

    @property
    def modularity_defined(self) -> bool:
        return not math.isnan(self.modularity)


def modularity(g: Graph, p: Partition | Sequence[int]) -> float:
    """Newman-Girvan modularity of a node partition.

    Evaluated per community as ``L_c/m - (K_c/2m)**2`` with ``L_c`` the
    internal edge count and ``K_c`` the degree total, which is the ordered
    pair double sum regrouped.
    """
    labels = p.assignment if isinstance(p, Partition) else tuple(p)
    if len(labels) != g.n:
        raise ValueError("partition must cover every node")
    m = g.m
    if m == 0:
        raise UndefinedModularityError("modularity is undefined on a graph with no edges")
    inner, tot = {}, {}
    for v, a in enumerate(g.adjacency):
        c = labels[v]
        tot[c] = tot.get(c, 0) + len(a)
    for u, v in g.edges:
        if labels[u] == labels[v]:
            inner[labels[u]] = inner.get(labels[u], 0) + 1
    # integer numerator over (2m)^2 keeps the sum exact until the final division
    num = sum(4 * m * inner.get(c, 0) - k * k for c, k in tot.items())
    return num / (4 * m * m)


def community_count(r: DetectionResult) -> int:
    return r.partition.community_count


def _result(g: Graph, labels, algorithm: Algorithm, seed=None) -> DetectionResult:
    part = Partition.from_labels(labels)
    q = modularity(g, part) if g.m else math.nan
    return DetectionResult(part, q, algorithm, seed)
