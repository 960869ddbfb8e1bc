"""Command-line entry point: ``netrobust metrics|sweep|aggregate|demo-communities``."""

from __future__ import annotations

import argparse
import json
import logging
import math
import os
import sys
from pathlib import Path

from . import __version__
from .community import cnm, girvan_newman, label_propagation, louvain
from .errors import ManifestError, NetRobustError
from .graph import connectance, drop_isolated, to_undirected
from .io import (
    NetworkFormat,
    RunReport,
    load_manifest,
    read_network,
    read_records_csv,
    write_aggregate_csv,
    write_records_csv,
)
from .robustness import (
    ALL_METRICS,
    MetricId,
    SweepConfig,
    SweepMode,
    add_random_edges,
    aggregate,
    evaluate_metrics,
    sweep,
)

log = logging.getLogger("netrobust")

EXIT_OK, EXIT_NO_SUCCESS, EXIT_USAGE = 0, 1, 2


def _resolve_seed(seed):
    if seed is not None:
        return seed
    env = os.environ.get("NETROBUST_SEED")
    if env:
        try:
            return int(env)
        except ValueError:
            raise SystemExit(f"NETROBUST_SEED must be an integer, got {env!r}")
    return 0


def _config(args) -> SweepConfig:
    return SweepConfig(
        max_added_fraction=args.max_added_fraction,
        grid_stride=args.stride,
        replicates=args.replicates,
        base_seed=_resolve_seed(args.seed),
        metrics=args.metrics,
        pagerank_damping=args.damping,
        mode=args.mode,
    )


def _load(args, path):
    g = read_network(path, args.format, row_header=args.row_header, col_header=args.col_header)
    return drop_isolated(g) if args.drop_isolated else g


def _fmt(value):
    if isinstance(value, float):
        return "nan" if math.isnan(value) else repr(value)
    return str(value)


def _metric_list(text):
    try:
        return MetricId.parse_list(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


# -- commands -------------------------------------------------------------------

def cmd_metrics(args) -> int:
    try:
        g = _load(args, args.file)
        values = evaluate_metrics(g, None, _config(args))
    except (OSError, NetRobustError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    row = {"network_id": g.network_id, "n": g.n, "m": g.m, "connectance": connectance(g)}
    row.update({m.value: v for m, v in values.items()})
    if args.json:
        clean = {k: (None if isinstance(v, float) and math.isnan(v) else v) for k, v in row.items()}
        print(json.dumps(clean))
    else:
        for key, value in row.items():
            print(f"{key}\t{_fmt(value)}")
    return EXIT_OK


def cmd_sweep(args) -> int:
    try:
        entries = load_manifest(args.manifest)
    except ManifestError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out = Path(args.out)
    try:
        out.mkdir(parents=True, exist_ok=True)
        probe = out / ".write-test"
        probe.write_text("")
        probe.unlink()
    except OSError as exc:
        print(f"error: output directory {out} is not writable: {exc}", file=sys.stderr)
        return EXIT_USAGE
    config = _config(args)

    report = RunReport(config_echo={**config.as_dict(), "threads": args.threads,
                                    "bins": args.bins, "drop_isolated": args.drop_isolated},
                       tool_version=__version__)
    records = []
    for entry in entries:
        report.networks_processed += 1
        try:
            g = read_network(entry.path, entry.format, entry.network_id, entry.interaction_type)
            if args.drop_isolated:
                g = drop_isolated(g)
            recs = sweep(g, config, threads=args.threads)
        except Exception as exc:  # one bad network must not sink the batch
            log.error("%s failed: %s", entry.network_id, exc)
            report.failures.append((entry.network_id, f"{type(exc).__name__}: {exc}"))
            continue
        log.info("%s: %d records", entry.network_id, len(recs))
        records.extend(recs)

    report.records_emitted = len(records)
    write_records_csv(records, out / "records.csv")
    write_aggregate_csv(aggregate(records, args.bins) if records else [], out / "aggregate.csv")
    (out / "report.json").write_text(report.to_json(), encoding="utf-8")
    if report.successes == 0:
        return EXIT_NO_SUCCESS
    if report.failures and not args.allow_failures:
        return EXIT_NO_SUCCESS
    return EXIT_OK


def cmd_aggregate(args) -> int:
    try:
        records = read_records_csv(args.records)
        curves = aggregate(records, args.bins)
        write_aggregate_csv(curves, args.out)
    except (OSError, ValueError, KeyError, NetRobustError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def cmd_demo_communities(args) -> int:
    seed = _resolve_seed(args.seed)
    try:
        g = _load(args, args.file)
        candidate = add_random_edges(g, args.k, seed)
    except (OSError, NetRobustError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    algorithms = {
        "CNM": lambda h: cnm(h),
        "Louvain": lambda h: louvain(h, seed),
        "GirvanNewman": lambda h: girvan_newman(h),
        "LabelPropagation": lambda h: label_propagation(h, seed),
    }
    before, after = to_undirected(g), to_undirected(candidate)
    print(f"# {g.network_id}: n={g.n} m={g.m}; candidate adds k={args.k} edges (seed {seed})")
    print("algorithm\tobserved\tcandidate")
    for name, run in algorithms.items():
        print(f"{name}\t{run(before).partition.community_count}\t"
              f"{run(after).partition.community_count}")
    return EXIT_OK


# -- parser -----------------------------------------------------------------------

def _add_input_flags(p):
    p.add_argument("--format", type=NetworkFormat.parse, default=None,
                   help="incidence or edgelist (sniffed when omitted)")
    p.add_argument("--row-header", action=argparse.BooleanOptionalAction, default=None,
                   help="first incidence column holds species names")
    p.add_argument("--col-header", action=argparse.BooleanOptionalAction, default=None,
                   help="first incidence row holds species names")
    p.add_argument("--drop-isolated", action="store_true",
                   help="remove species without interactions")


def _add_config_flags(p):
    p.add_argument("--seed", type=int, default=None, help="base seed (falls back to $NETROBUST_SEED, then 0)")
    p.add_argument("--replicates", type=int, default=10)
    p.add_argument("--max-added-fraction", type=float, default=0.5)
    p.add_argument("--stride", type=int, default=1)
    p.add_argument("--damping", type=float, default=0.85)
    p.add_argument("--metrics", type=_metric_list, default=ALL_METRICS,
                   help="comma-separated metric names (default: all)")
    p.add_argument("--mode", choices=[m.value for m in SweepMode], default=SweepMode.independent.value)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="netrobust",
        description="Structural metrics of bipartite interaction networks and their "
                    "sensitivity to missing interactions.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("metrics", help="all structural metrics of one network")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    _add_input_flags(p)
    _add_config_flags(p)
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser("sweep", help="missing-data sweep over a manifest of networks")
    p.add_argument("manifest")
    p.add_argument("--out", required=True)
    p.add_argument("--threads", type=int, default=None, help="worker processes (default: all cores)")
    p.add_argument("--allow-failures", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--bins", type=int, default=10)
    p.add_argument("--drop-isolated", action="store_true")
    _add_config_flags(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("aggregate", help="records.csv -> aggregate.csv")
    p.add_argument("records")
    p.add_argument("--out", required=True)
    p.add_argument("--bins", type=int, default=10)
    p.set_defaults(func=cmd_aggregate)

    p = sub.add_parser("demo-communities", help="community counts before/after adding k edges")
    p.add_argument("file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--seed", type=int, default=None)
    _add_input_flags(p)
    p.set_defaults(func=cmd_demo_communities)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
