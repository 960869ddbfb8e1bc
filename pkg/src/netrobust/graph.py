"""Graph data model, file ingestion and matrix constructions.

Two representations are used throughout:

* :class:`BipartiteGraph` is what gets read from disk: row species, column
  species and the cross-partition interactions between them.
* :class:`Graph` is the plain simple undirected graph that every algorithm
  runs on. :func:`to_undirected` lays the bipartite nodes out rows-first.
"""

from __future__ import annotations

import csv
import enum
import io
import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import EmptyNetworkError, ParseError


class InteractionType(str, enum.Enum):
    Pollination = "Pollination"
    HostParasite = "HostParasite"
    PlantAnt = "PlantAnt"
    SeedDispersal = "SeedDispersal"
    Other = "Other"

    @classmethod
    def parse(cls, text: str) -> "InteractionType | None":
        """Lenient lookup: case, spaces, hyphens and underscores are ignored."""
        key = "".join(ch for ch in text.lower() if ch.isalnum())
        for member in cls:
            if member.value.lower() == key:
                return member
        return None


@dataclass(frozen=True)
class BipartiteGraph:
    """An observed two-mode interaction network.

    ``edges`` is normalised on construction to a sorted tuple of unique
    ``(row_index, col_index)`` pairs.
    """

    row_labels: tuple
    col_labels: tuple
    edges: tuple
    network_id: str = ""
    interaction_type: InteractionType = InteractionType.Other

    def __post_init__(self):
        object.__setattr__(self, "row_labels", tuple(self.row_labels))
        object.__setattr__(self, "col_labels", tuple(self.col_labels))
        pairs = sorted({(int(r), int(c)) for r, c in self.edges})
        nr, nc = len(self.row_labels), len(self.col_labels)
        for r, c in pairs:
            if not (0 <= r < nr and 0 <= c < nc):
                raise ValueError(f"edge ({r}, {c}) out of range for {nr}x{nc} network")
        object.__setattr__(self, "edges", tuple(pairs))

    @property
    def n_rows(self) -> int:
        return len(self.row_labels)

    @property
    def n_cols(self) -> int:
        return len(self.col_labels)

    @property
    def n(self) -> int:
        return self.n_rows + self.n_cols

    @property
    def m(self) -> int:
        return len(self.edges)

    def incidence(self) -> np.ndarray:
        mat = np.zeros((self.n_rows, self.n_cols), dtype=np.int8)
        if self.edges:
            r, c = np.array(self.edges).T
            mat[r, c] = 1
        return mat

    def with_edges(self, edges: Iterable) -> "BipartiteGraph":
        return BipartiteGraph(
            self.row_labels, self.col_labels, tuple(edges),
            self.network_id, self.interaction_type,
        )


class Graph:
    """Immutable simple undirected graph on nodes ``0..n-1``.

    Neighbour lists are sorted, contain no self-loops and no duplicates.
    CSR arrays (``indptr``, ``indices``) and the matching edge ids
    (``slot_edge``) are exposed for the compiled kernels; edge ids index
    :attr:`edges`, which is sorted lexicographically with ``u < v``.
    """

    __slots__ = ("_adj", "_labels", "_edges", "_csr")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]], node_labels: Sequence | None = None):
        pairs = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop on node {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            pairs.add((u, v) if u < v else (v, u))
        self._edges = tuple(sorted(pairs))
        nbrs = [[] for _ in range(n)]
        for u, v in self._edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        self._adj = tuple(tuple(sorted(a)) for a in nbrs)
        if node_labels is None:
            node_labels = [str(i) for i in range(n)]
        if len(node_labels) != n:
            raise ValueError("node_labels length must equal n")
        self._labels = tuple(node_labels)
        self._csr = None

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def adjacency(self) -> tuple:
        return self._adj

    @property
    def node_labels(self) -> tuple:
        return self._labels

    @property
    def edges(self) -> tuple:
        return self._edges

    def neighbors(self, v: int) -> tuple:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> np.ndarray:
        return np.fromiter((len(a) for a in self._adj), dtype=np.int64, count=self.n)

    def has_edge(self, u: int, v: int) -> bool:
        a = self._adj[u]
        i = np.searchsorted(a, v)
        return i < len(a) and a[i] == v

    def csr(self):
        """``(indptr, indices, slot_edge)`` as int64 arrays, cached."""
        if self._csr is None:
            n = self.n
            indptr = np.zeros(n + 1, dtype=np.int64)
            indptr[1:] = np.cumsum([len(a) for a in self._adj])
            indices = np.empty(2 * self.m, dtype=np.int64)
            slot_edge = np.empty(2 * self.m, dtype=np.int64)
            edge_id = {e: i for i, e in enumerate(self._edges)}
            pos = 0
            for u, a in enumerate(self._adj):
                for v in a:
                    indices[pos] = v
                    slot_edge[pos] = edge_id[(u, v) if u < v else (v, u)]
                    pos += 1
            self._csr = (indptr, indices, slot_edge)
        return self._csr

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with node ``v`` renamed ``perm[v]``."""
        labels = [None] * self.n
        for v, p in enumerate(perm):
            labels[p] = self._labels[v]
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self._edges), labels)

    def with_edges_removed(self, removed: Iterable[tuple[int, int]]) -> "Graph":
        drop = {(min(u, v), max(u, v)) for u, v in removed}
        return Graph(self.n, (e for e in self._edges if e not in drop), self._labels)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


# -- ingestion ---------------------------------------------------------------

def _parse_number(cell: str, row: int) -> float:
    try:
        value = float(cell)
    except ValueError:
        raise ParseError(f"non-numeric cell {cell!r}", row=row) from None
    if math.isnan(value):
        raise ParseError(f"non-numeric cell {cell!r}", row=row)
    if value < 0:
        raise ParseError(f"negative cell {cell!r}", row=row)
    return value


def _csv_rows(text: str):
    rows = []
    for line_no, row in enumerate(csv.reader(io.StringIO(text)), start=1):
        if not row or all(not c.strip() for c in row):
            continue
        rows.append((line_no, [c.strip() for c in row]))
    return rows


def parse_incidence_csv(text: str, has_row_header: bool = False, has_col_header: bool = False,
                        network_id: str = "",
                        interaction_type: InteractionType = InteractionType.Other) -> BipartiteGraph:
    """Read a rows-by-columns incidence matrix.

    Every data row becomes a row-partition node and every data column a
    column-partition node. Cells greater than zero become edges; weights are
    discarded. All-zero rows and columns are kept as isolated nodes.

    Raises
    ------
    ParseError
        Ragged rows, non-numeric or negative cells. ``row`` counts data rows
        from 1.
    EmptyNetworkError
        No data rows or no data columns.
    """
    rows = _csv_rows(text)
    col_labels = None
    if has_col_header and rows:
        header = rows.pop(0)[1]
        col_labels = header[1:] if has_row_header else header
    if not rows:
        raise EmptyNetworkError("incidence matrix has no data rows")

    width = None
    row_labels, edges = [], []
    for i, (_, cells) in enumerate(rows):
        data_row = i + 1
        if has_row_header:
            row_labels.append(cells[0])
            cells = cells[1:]
        else:
            row_labels.append(f"r{i}")
        if width is None:
            width = len(cells)
        elif len(cells) != width:
            raise ParseError(f"expected {width} columns, found {len(cells)}", row=data_row)
        for j, cell in enumerate(cells):
            if _parse_number(cell, data_row) > 0:
                edges.append((i, j))
    if not width:
        raise EmptyNetworkError("incidence matrix has no data columns")
    if col_labels is None or len(col_labels) != width:
        if col_labels is not None:
            raise ParseError(f"header has {len(col_labels)} labels for {width} columns", row=0)
        col_labels = [f"c{j}" for j in range(width)]
    return BipartiteGraph(row_labels, col_labels, edges, network_id, interaction_type)


def sniff_incidence_headers(text: str) -> tuple[bool, bool]:
    """Guess ``(has_row_header, has_col_header)`` from non-numeric cells."""
    rows = _csv_rows(text)
    if not rows:
        return False, False

    def numeric(cell):
        try:
            float(cell)
            return True
        except ValueError:
            return False

    first = rows[0][1]
    has_col = any(not numeric(c) for c in first[1:]) or (len(first) == 1 and not numeric(first[0]))
    body = rows[1:] if has_col else rows
    has_row = any(not numeric(cells[0]) for _, cells in body if cells)
    return has_row, has_col


def parse_edge_list(text: str, network_id: str = "",
                    interaction_type: InteractionType = InteractionType.Other) -> BipartiteGraph:
    """Read ``row<sep>col[<sep>weight]`` lines (comma or tab separated).

    Labels are interned in first-appearance order per partition, duplicate
    lines collapse, ``#`` lines are comments. A weight of zero registers both
    species but no interaction.
    """
    rows, cols = {}, {}
    edges = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        sep = "\t" if "\t" in line else ","
        fields = [f.strip() for f in line.split(sep)]
        if len(fields) not in (2, 3):
            raise ParseError(f"expected 2 or 3 fields, found {len(fields)}", row=line_no)
        a, b = fields[0], fields[1]
        if not a or not b:
            raise ParseError("empty species name", row=line_no)
        weight = _parse_number(fields[2], line_no) if len(fields) == 3 else 1.0
        r = rows.setdefault(a, len(rows))
        c = cols.setdefault(b, len(cols))
        if weight > 0:
            edges.add((r, c))
    if not rows:
        raise EmptyNetworkError("edge list has no interactions")
    return BipartiteGraph(list(rows), list(cols), edges, network_id, interaction_type)


def to_edge_list_text(g: BipartiteGraph) -> str:
    """Serialise as comma-separated ``row,col`` lines (round-trips through
    :func:`parse_edge_list` when every species has at least one edge)."""
    return "".join(f"{g.row_labels[r]},{g.col_labels[c]}\n" for r, c in g.edges)


def drop_isolated(g: BipartiteGraph) -> BipartiteGraph:
    """Remove species with no interactions, preserving order."""
    used_r = sorted({r for r, _ in g.edges})
    used_c = sorted({c for _, c in g.edges})
    rmap = {r: i for i, r in enumerate(used_r)}
    cmap = {c: i for i, c in enumerate(used_c)}
    return BipartiteGraph(
        [g.row_labels[r] for r in used_r],
        [g.col_labels[c] for c in used_c],
        [(rmap[r], cmap[c]) for r, c in g.edges],
        g.network_id, g.interaction_type,
    )


# -- structure ----------------------------------------------------------------

def to_undirected(g: BipartiteGraph) -> Graph:
    offset = g.n_rows
    labels = list(g.row_labels) + list(g.col_labels)
    return Graph(g.n, ((r, offset + c) for r, c in g.edges), labels)


def connected_components(g: Graph) -> tuple[int, np.ndarray]:
    """Component count and per-node labels.

    Labels are numbered in order of each component's lowest node index.
    """
    labels = np.full(g.n, -1, dtype=np.int64)
    count = 0
    adj = g.adjacency
    for start in range(g.n):
        if labels[start] >= 0:
            continue
        labels[start] = count
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if labels[w] < 0:
                    labels[w] = count
                    queue.append(w)
        count += 1
    return count, labels


def is_bipartite_coloring(g: Graph, colors: Sequence[int]) -> bool:
    return all(colors[u] != colors[v] for u, v in g.edges)


def connectance(g: BipartiteGraph) -> float:
    if g.n_rows == 0 or g.n_cols == 0:
        raise EmptyNetworkError("connectance needs both partitions non-empty")
    return g.m / (g.n_rows * g.n_cols)


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    if g.m:
        u, v = np.array(g.edges).T
        a[u, v] = 1.0
        a[v, u] = 1.0
    return a


def degree_matrix(g: Graph) -> np.ndarray:
    return np.diag(g.degrees().astype(float))


def laplacian(g: Graph) -> np.ndarray:
    """Dense combinatorial Laplacian ``D - A``."""
    return degree_matrix(g) - adjacency_matrix(g)
