"""Missing-data sweeps: candidate ground-truth graphs and metric curves.

A candidate ground truth is the observed network plus ``k`` interactions
drawn uniformly from the absent cross-partition pairs. :func:`sweep`
evaluates every metric over a grid of ``k`` and a number of replicates;
:func:`aggregate` turns the long-form records into per-interaction-type
curves normalised by each network's observed value.
"""

from __future__ import annotations

import enum
import logging
import math
import os
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, asdict
from typing import Iterable, Sequence

import numpy as np

from .centrality import PAGERANK_DAMPING, betweenness, pagerank, variance
from .community import cnm, girvan_newman, label_propagation, louvain
from .errors import CapacityError, EmptyInputError, GridError, NumericalError
from .graph import BipartiteGraph, InteractionType, connected_components, laplacian, to_undirected
from .rng import SplitMix64, derive_seed
from .spectral import laplacian_spectrum

log = logging.getLogger(__name__)


class MetricId(str, enum.Enum):
    ComponentCount = "ComponentCount"
    NonzeroEigenvalues = "NonzeroEigenvalues"
    LargestEigenvalue = "LargestEigenvalue"
    BetweennessVariance = "BetweennessVariance"
    PageRankVariance = "PageRankVariance"
    CommunitiesCNM = "CommunitiesCNM"
    CommunitiesLouvain = "CommunitiesLouvain"
    CommunitiesGN = "CommunitiesGN"
    CommunitiesLP = "CommunitiesLP"

    @classmethod
    def parse_list(cls, text: str) -> tuple["MetricId", ...]:
        by_key = {m.value.lower(): m for m in cls}
        out = []
        for part in text.split(","):
            part = part.strip()
            if not part:
                continue
            try:
                out.append(by_key[part.lower()])
            except KeyError:
                raise ValueError(f"unknown metric {part!r}") from None
        return tuple(out)


ALL_METRICS = tuple(MetricId)
_METRIC_RANK = {m: i for i, m in enumerate(MetricId)}
_SPECTRAL = {MetricId.ComponentCount, MetricId.NonzeroEigenvalues, MetricId.LargestEigenvalue}


class SweepMode(str, enum.Enum):
    independent = "independent"  # fresh edges for every (k, replicate)
    cumulative = "cumulative"    # one growing edge sequence per replicate


@dataclass(frozen=True)
class SweepConfig:
    max_added_fraction: float = 0.5
    grid_stride: int = 1
    replicates: int = 10
    base_seed: int = 0
    metrics: tuple = ALL_METRICS
    pagerank_damping: float = PAGERANK_DAMPING
    mode: SweepMode = SweepMode.independent

    def __post_init__(self):
        if not 0 < self.max_added_fraction <= 0.5:
            raise ValueError("max_added_fraction must lie in (0, 0.5]")
        if self.grid_stride < 1:
            raise ValueError("grid_stride must be positive")
        if self.replicates < 1:
            raise ValueError("replicates must be positive")
        metrics = tuple(sorted({MetricId(m) for m in self.metrics}, key=_METRIC_RANK.get))
        object.__setattr__(self, "metrics", metrics)
        object.__setattr__(self, "mode", SweepMode(self.mode))

    def as_dict(self) -> dict:
        d = asdict(self)
        d["metrics"] = [m.value for m in self.metrics]
        d["mode"] = self.mode.value
        return d


@dataclass(frozen=True)
class RobustnessRecord:
    network_id: str
    interaction_type: InteractionType
    k_added: int
    added_fraction: float
    replicate: int
    seed: int
    metric: MetricId
    value: float  # nan when the metric is undefined


@dataclass(frozen=True)
class AggregateCurve:
    interaction_type: InteractionType
    metric: MetricId
    bins: tuple  # (bin_center, mean, std, n_samples)
    unnormalized: tuple = field(default=())  # network ids whose baseline was 0 or missing


# -- candidate graphs ----------------------------------------------------------

def _absent_pairs(g: BipartiteGraph, picks: Sequence[int]) -> list[tuple[int, int]]:
    """Map indices into the row-major list of absent pairs to ``(row, col)``."""
    cols = g.n_cols
    present = np.array([r * cols + c for r, c in g.edges], dtype=np.int64)
    # absent index i sits at flat position i + #{j : present[j] - j <= i}
    shifted = present - np.arange(present.size)
    picks = np.asarray(picks, dtype=np.int64)
    flat = picks + np.searchsorted(shifted, picks, side="right")
    return [(int(f // cols), int(f % cols)) for f in flat]


def capacity(g: BipartiteGraph) -> int:
    """Number of absent cross-partition pairs."""
    return g.n_rows * g.n_cols - g.m


def add_random_edges(g: BipartiteGraph, k: int, rng_seed: int) -> BipartiteGraph:
    """Copy of ``g`` with ``k`` distinct absent pairs added uniformly at random."""
    cap = capacity(g)
    if k < 0:
        raise ValueError("k must be non-negative")
    if k > cap:
        raise CapacityError(k, cap)
    picks = SplitMix64(rng_seed).sample_indices(cap, k)
    return g.with_edges(g.edges + tuple(_absent_pairs(g, picks)))


def edge_trajectory(g: BipartiteGraph, k_max: int, rng_seed: int) -> list[tuple[int, int]]:
    """A random order of ``k_max`` absent pairs; prefixes give nested candidates."""
    cap = capacity(g)
    if k_max > cap:
        raise CapacityError(k_max, cap)
    return _absent_pairs(g, SplitMix64(rng_seed).sample_indices(cap, k_max))


# -- metrics ------------------------------------------------------------------

def evaluate_metrics(g: BipartiteGraph, metrics: Iterable[MetricId] | None = None,
                     config: SweepConfig | None = None, seed: int | None = None) -> dict:
    """Compute the requested metrics on the undirected view of ``g``.

    Stochastic community algorithms are seeded with ``seed`` (default
    ``config.base_seed``). Community counts are ``nan`` when ``g`` has no
    edges.
    """
    config = config or SweepConfig()
    metrics = config.metrics if metrics is None else tuple(MetricId(m) for m in metrics)
    seed = config.base_seed if seed is None else seed
    graph = to_undirected(g)
    out = {}
    if _SPECTRAL & set(metrics):
        eig = laplacian_spectrum(laplacian(graph))
        if MetricId.ComponentCount in metrics:
            bfs_count, _ = connected_components(graph)
            if bfs_count != eig.zero_count:
                raise NumericalError(
                    f"zero eigenvalues ({eig.zero_count}) disagree with "
                    f"component count ({bfs_count})")
            out[MetricId.ComponentCount] = float(eig.zero_count)
        if MetricId.NonzeroEigenvalues in metrics:
            out[MetricId.NonzeroEigenvalues] = float(eig.nonzero_count)
        if MetricId.LargestEigenvalue in metrics:
            out[MetricId.LargestEigenvalue] = eig.largest
    if MetricId.BetweennessVariance in metrics:
        out[MetricId.BetweennessVariance] = variance(betweenness(graph))
    if MetricId.PageRankVariance in metrics:
        pr = pagerank(graph, damping=config.pagerank_damping)
        if not pr.converged:
            log.warning("PageRank did not converge on %s", g.network_id or "graph")
        out[MetricId.PageRankVariance] = variance(pr)
    detectors = {
        MetricId.CommunitiesCNM: lambda: cnm(graph),
        MetricId.CommunitiesLouvain: lambda: louvain(graph, seed),
        MetricId.CommunitiesGN: lambda: girvan_newman(graph),
        MetricId.CommunitiesLP: lambda: label_propagation(graph, seed),
    }
    for metric, run in detectors.items():
        if metric in metrics:
            out[metric] = float(run().partition.community_count) if graph.m else math.nan
    return {m: out[m] for m in sorted(out, key=_METRIC_RANK.get)}


# -- sweeps -------------------------------------------------------------------

def k_grid(m: int, config: SweepConfig) -> list[int]:
    k_max = math.floor(m * config.max_added_fraction + 1e-9)
    return list(range(config.grid_stride, k_max + 1, config.grid_stride))


def _records(g, k, replicate, seed, values):
    return [
        RobustnessRecord(g.network_id, g.interaction_type, k, k / g.m, replicate, seed,
                         metric, float(value))
        for metric, value in values.items()
    ]


def _independent_cells(g, config, cells):
    out = []
    for k, r in cells:
        seed = derive_seed(config.base_seed, g.network_id, k, r)
        candidate = add_random_edges(g, k, seed)
        out.extend(_records(g, k, r, seed, evaluate_metrics(candidate, None, config, seed)))
    return out


def _cumulative_replicate(g, config, ks, r):
    seed = derive_seed(config.base_seed, g.network_id, -1, r)
    order = edge_trajectory(g, ks[-1], seed)
    out = []
    for k in ks:
        candidate = g.with_edges(g.edges + tuple(order[:k]))
        out.extend(_records(g, k, r, seed, evaluate_metrics(candidate, None, config, seed)))
    return out


def _resolve_workers(threads):
    if threads is None:
        return os.cpu_count() or 1
    return max(1, int(threads))


def sweep(g: BipartiteGraph, config: SweepConfig | None = None,
          threads: int | None = 1) -> list[RobustnessRecord]:
    """Evaluate all metrics on candidate ground truths over the ``k`` grid.

    ``k`` runs over ``stride, 2*stride, ...`` up to ``floor(m * fraction)``,
    capped at the number of absent pairs. Each ``(k, replicate)`` cell gets
    its own seed from :func:`derive_seed`, so results do not depend on
    execution order or ``threads``. Baseline records for the observed graph
    have ``k_added = 0`` and ``replicate = 0``. Output is sorted by
    ``(k_added, replicate, metric)``.
    """
    config = config or SweepConfig()
    ks = k_grid(g.m, config)
    cap = capacity(g)
    if ks and ks[-1] > cap:
        log.warning("%s: grid truncated at %d added edges (network nearly complete)",
                    g.network_id or "graph", cap)
        ks = [k for k in ks if k <= cap]
    if not ks:
        raise GridError(f"empty added-edge grid for m={g.m}, capacity={cap}")

    base_seed = derive_seed(config.base_seed, g.network_id, 0, 0)
    records = _records(g, 0, 0, base_seed, evaluate_metrics(g, None, config, base_seed))

    workers = _resolve_workers(threads)
    replicates = range(1, config.replicates + 1)
    if config.mode is SweepMode.independent:
        tasks = [(_independent_cells, (g, config, [(k, r) for r in replicates])) for k in ks]
    else:
        tasks = [(_cumulative_replicate, (g, config, ks, r)) for r in replicates]
    if workers == 1 or len(tasks) == 1:
        for fn, args in tasks:
            records.extend(fn(*args))
    else:
        with ProcessPoolExecutor(max_workers=min(workers, len(tasks))) as pool:
            futures = [pool.submit(fn, *args) for fn, args in tasks]
            for fut in futures:
                records.extend(fut.result())
    records.sort(key=lambda rec: (rec.k_added, rec.replicate, _METRIC_RANK[rec.metric]))
    return records


# -- aggregation ----------------------------------------------------------------

def aggregate(records: Sequence[RobustnessRecord], bin_count: int = 10) -> list[AggregateCurve]:
    """Bin baseline-normalised values by added fraction.

    Each value is divided by its own network's ``k = 0`` value for the same
    metric. Where that baseline is 0 (or absent) the raw value is used and
    the network is listed in ``AggregateCurve.unnormalized``. Baseline
    records themselves are not binned. Bins split ``[0, 0.5]`` into
    ``bin_count`` equal widths; each emitted bin reports the mean, the
    population standard deviation and the sample count. Undefined (nan)
    values are skipped.
    """
    if not records:
        raise EmptyInputError("no records to aggregate")
    if bin_count < 1:
        raise ValueError("bin_count must be positive")
    baseline = {}
    for rec in records:
        if rec.k_added == 0:
            baseline[(rec.network_id, rec.metric)] = rec.value

    width = 0.5 / bin_count
    groups = defaultdict(lambda: defaultdict(list))
    flagged = defaultdict(set)
    for rec in records:
        if rec.k_added == 0 or math.isnan(rec.value):
            continue
        key = (rec.interaction_type, rec.metric)
        base = baseline.get((rec.network_id, rec.metric))
        if base is None or base == 0 or math.isnan(base):
            flagged[key].add(rec.network_id)
            value = rec.value
        else:
            value = rec.value / base
        # bins are [lo, hi); the slack keeps fractions on an edge in the upper bin
        b = min(int(rec.added_fraction * 2 * bin_count + 1e-9), bin_count - 1)
        groups[key][b].append(value)

    type_rank = {t: i for i, t in enumerate(InteractionType)}
    curves = []
    for key in sorted(groups, key=lambda k: (type_rank[k[0]], _METRIC_RANK[k[1]])):
        bins = []
        for b in sorted(groups[key]):
            vals = np.array(groups[key][b])
            bins.append(((b + 0.5) * width, float(vals.mean()), float(vals.std()), int(vals.size)))
        curves.append(AggregateCurve(key[0], key[1], tuple(bins), tuple(sorted(flagged[key]))))
    return curves
