"""Manifests, network files and the tidy CSV/JSON outputs of a batch run."""

from __future__ import annotations

import csv
import enum
import json
import math
import warnings
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .errors import ManifestError
from .graph import (
    BipartiteGraph,
    InteractionType,
    parse_edge_list,
    parse_incidence_csv,
    sniff_incidence_headers,
)
from .robustness import AggregateCurve, MetricId, RobustnessRecord

RECORD_COLUMNS = ("network_id", "interaction_type", "k_added", "added_fraction",
                  "replicate", "seed", "metric", "value")
AGGREGATE_COLUMNS = ("interaction_type", "metric", "bin_center", "mean_normalized_value",
                     "std", "n_samples", "unnormalized_networks")
MANIFEST_COLUMNS = ("path", "network_id", "interaction_type", "format")


class NetworkFormat(str, enum.Enum):
    IncidenceCSV = "IncidenceCSV"
    EdgeList = "EdgeList"

    @classmethod
    def parse(cls, text: str) -> "NetworkFormat":
        key = "".join(ch for ch in text.lower() if ch.isalnum())
        aliases = {"incidencecsv": cls.IncidenceCSV, "incidence": cls.IncidenceCSV,
                   "matrix": cls.IncidenceCSV, "edgelist": cls.EdgeList, "edges": cls.EdgeList}
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown network format {text!r}") from None


@dataclass(frozen=True)
class ManifestEntry:
    path: Path
    network_id: str
    interaction_type: InteractionType
    format: NetworkFormat


def format_float(x: float) -> str:
    """Shortest repr that round-trips; undefined values are written empty."""
    x = float(x)
    return "" if math.isnan(x) else repr(x)


def _parse_float(text: str) -> float:
    return math.nan if text == "" else float(text)


# -- manifests and network files ----------------------------------------------

def load_manifest(path) -> list[ManifestEntry]:
    """Read a ``path,network_id,interaction_type,format`` manifest.

    Relative paths resolve against the manifest's directory. Unknown
    interaction types become ``Other`` with a warning.

    Raises
    ------
    ManifestError
        Bad header, bad format value, duplicate ids, or missing files (all
        missing paths are listed at once).
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ManifestError(f"cannot read manifest {path}: {exc}") from exc
    reader = csv.DictReader(text.splitlines())
    if reader.fieldnames is None or [f.strip() for f in reader.fieldnames] != list(MANIFEST_COLUMNS):
        raise ManifestError(f"manifest header must be {','.join(MANIFEST_COLUMNS)}")
    entries, seen, missing = [], set(), []
    for line_no, row in enumerate(reader, start=2):
        row = {k.strip(): (v or "").strip() for k, v in row.items() if k}
        nid = row["network_id"]
        if not nid:
            raise ManifestError(f"line {line_no}: empty network_id")
        if nid in seen:
            raise ManifestError(f"line {line_no}: duplicate network_id {nid!r}")
        seen.add(nid)
        itype = InteractionType.parse(row["interaction_type"])
        if itype is None:
            warnings.warn(f"{nid}: unknown interaction type {row['interaction_type']!r}, using Other",
                          stacklevel=2)
            itype = InteractionType.Other
        try:
            fmt = NetworkFormat.parse(row["format"])
        except ValueError as exc:
            raise ManifestError(f"line {line_no}: {exc}") from None
        file_path = Path(row["path"])
        if not file_path.is_absolute():
            file_path = path.parent / file_path
        if not file_path.is_file():
            missing.append(str(file_path))
        entries.append(ManifestEntry(file_path, nid, itype, fmt))
    if missing:
        raise ManifestError("missing network files: " + ", ".join(missing))
    return entries


def guess_format(text: str) -> NetworkFormat:
    """Edge list if every line has 2-3 fields and the first two are names."""
    def numeric(cell):
        try:
            float(cell)
            return True
        except ValueError:
            return False

    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines:
        return NetworkFormat.IncidenceCSV
    for ln in lines:
        fields = ln.split("\t" if "\t" in ln else ",")
        if len(fields) not in (2, 3) or numeric(fields[0]) or numeric(fields[1]):
            return NetworkFormat.IncidenceCSV
    return NetworkFormat.EdgeList


def read_network(path, fmt: NetworkFormat | None = None, network_id: str | None = None,
                 interaction_type: InteractionType = InteractionType.Other,
                 row_header: bool | None = None, col_header: bool | None = None) -> BipartiteGraph:
    """Load a network file. Format and incidence headers are sniffed when not given."""
    path = Path(path)
    text = path.read_text(encoding="utf-8-sig")
    network_id = path.stem if network_id is None else network_id
    fmt = guess_format(text) if fmt is None else NetworkFormat(fmt)
    if fmt is NetworkFormat.EdgeList:
        return parse_edge_list(text, network_id, interaction_type)
    sniff_row, sniff_col = sniff_incidence_headers(text)
    return parse_incidence_csv(
        text,
        sniff_row if row_header is None else row_header,
        sniff_col if col_header is None else col_header,
        network_id, interaction_type,
    )


# -- records ----------------------------------------------------------------------

def write_records_csv(records: Iterable[RobustnessRecord], path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(RECORD_COLUMNS)
        for rec in records:
            w.writerow((rec.network_id, rec.interaction_type.value, rec.k_added,
                        format_float(rec.added_fraction), rec.replicate, rec.seed,
                        rec.metric.value, format_float(rec.value)))


def read_records_csv(path) -> list[RobustnessRecord]:
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or tuple(reader.fieldnames) != RECORD_COLUMNS:
            raise ValueError(f"records header must be {','.join(RECORD_COLUMNS)}")
        return [
            RobustnessRecord(
                row["network_id"],
                InteractionType(row["interaction_type"]),
                int(row["k_added"]),
                _parse_float(row["added_fraction"]),
                int(row["replicate"]),
                int(row["seed"]),
                MetricId(row["metric"]),
                _parse_float(row["value"]),
            )
            for row in reader
        ]


def write_aggregate_csv(curves: Sequence[AggregateCurve], path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(AGGREGATE_COLUMNS)
        for curve in curves:
            flagged = ";".join(curve.unnormalized)
            for center, mean, std, count in curve.bins:
                w.writerow((curve.interaction_type.value, curve.metric.value,
                            format_float(center), format_float(mean), format_float(std),
                            count, flagged))


# -- run report -------------------------------------------------------------------

@dataclass
class RunReport:
    networks_processed: int = 0
    records_emitted: int = 0
    failures: list = field(default_factory=list)  # (network_id, message)
    config_echo: dict = field(default_factory=dict)
    tool_version: str = ""

    @property
    def successes(self) -> int:
        return self.networks_processed - len(self.failures)

    def to_json(self) -> str:
        payload = {
            "tool_version": self.tool_version,
            "networks_processed": self.networks_processed,
            "successes": self.successes,
            "records_emitted": self.records_emitted,
            "failures": [{"network_id": nid, "error": msg} for nid, msg in self.failures],
            "config": self.config_echo,
        }
        return json.dumps(payload, indent=2, sort_keys=False) + "\n"
