import json
import math

import pytest

from netrobust.errors import ManifestError
from netrobust.graph import InteractionType
from netrobust.io import (
    NetworkFormat,
    RunReport,
    format_float,
    guess_format,
    load_manifest,
    read_network,
    read_records_csv,
    write_aggregate_csv,
    write_records_csv,
)
from netrobust.robustness import SweepConfig, aggregate, sweep
from netrobust.synthetic import random_bipartite

HEADER = "path,network_id,interaction_type,format\n"


def write(path, text):
    path.write_text(text, encoding="utf-8")
    return path


@pytest.fixture
def two_files(tmp_path):
    write(tmp_path / "a.csv", "1,0\n0,1\n")
    write(tmp_path / "b.txt", "p,q\nr,q\n")
    return tmp_path


class TestManifest:
    def test_valid(self, two_files):
        m = write(two_files / "m.csv", HEADER + "a.csv,A,Pollination,IncidenceCSV\n"
                                                "b.txt,B,host-parasite,edgelist\n")
        entries = load_manifest(m)
        assert [e.network_id for e in entries] == ["A", "B"]
        assert entries[1].interaction_type is InteractionType.HostParasite
        assert entries[1].format is NetworkFormat.EdgeList
        assert entries[0].path == two_files / "a.csv"

    def test_duplicate_ids(self, two_files):
        m = write(two_files / "m.csv", HEADER + "a.csv,A,Pollination,IncidenceCSV\n"
                                                "b.txt,A,Pollination,EdgeList\n")
        with pytest.raises(ManifestError, match="duplicate"):
            load_manifest(m)

    def test_missing_files_all_listed(self, tmp_path):
        m = write(tmp_path / "m.csv", HEADER + "x.csv,X,Pollination,IncidenceCSV\n"
                                               "y.csv,Y,Pollination,IncidenceCSV\n")
        with pytest.raises(ManifestError) as info:
            load_manifest(m)
        assert "x.csv" in str(info.value) and "y.csv" in str(info.value)

    def test_unknown_type_warns(self, two_files):
        m = write(two_files / "m.csv", HEADER + "a.csv,A,mutualism,IncidenceCSV\n")
        with pytest.warns(UserWarning, match="mutualism"):
            (entry,) = load_manifest(m)
        assert entry.interaction_type is InteractionType.Other

    def test_bad_header(self, tmp_path):
        m = write(tmp_path / "m.csv", "file,id\n")
        with pytest.raises(ManifestError):
            load_manifest(m)

    def test_bad_format(self, two_files):
        m = write(two_files / "m.csv", HEADER + "a.csv,A,Pollination,xml\n")
        with pytest.raises(ManifestError):
            load_manifest(m)

    def test_bundled_manifest(self, data_dir):
        entries = load_manifest(data_dir / "manifest.csv")
        assert len(entries) == 4
        assert {e.interaction_type for e in entries} == {
            InteractionType.Pollination, InteractionType.HostParasite,
            InteractionType.PlantAnt, InteractionType.SeedDispersal}


class TestReadNetwork:
    def test_sniffs_format(self, two_files):
        assert read_network(two_files / "a.csv").m == 2
        g = read_network(two_files / "b.txt")
        assert g.row_labels == ("p", "r") and g.network_id == "b"

    def test_guess_format(self):
        assert guess_format("1,0\n0,1") is NetworkFormat.IncidenceCSV
        assert guess_format("a,b\nc,d,2") is NetworkFormat.EdgeList
        assert guess_format(",x\ny,1") is NetworkFormat.IncidenceCSV

    def test_headers_sniffed(self, tmp_path):
        g = read_network(write(tmp_path / "h.csv", ",bee,fly\nrose,1,0\noak,1,1\n"))
        assert g.row_labels == ("rose", "oak") and g.m == 3

    def test_bom(self, tmp_path):
        p = tmp_path / "bom.csv"
        p.write_bytes(b"\xef\xbb\xbf1,1\n0,1\n")
        assert read_network(p).m == 3


class TestRecords:
    def test_round_trip_and_format(self, tmp_path):
        g = random_bipartite(3, 4, 6, seed=1, network_id="r")
        recs = sweep(g, SweepConfig(replicates=2))
        p = tmp_path / "records.csv"
        write_records_csv(recs, p)
        raw = p.read_bytes()
        assert b"\r\n" not in raw
        assert raw.startswith(b"network_id,interaction_type,k_added,added_fraction,replicate,seed,"
                              b"metric,value\n")
        back = read_records_csv(p)
        assert len(back) == len(recs)
        for a, b in zip(recs, back):
            assert a.value == b.value or (math.isnan(a.value) and math.isnan(b.value))
            assert a.added_fraction == b.added_fraction and a.seed == b.seed
            assert (a.network_id, a.interaction_type, a.k_added, a.replicate, a.metric) == \
                (b.network_id, b.interaction_type, b.k_added, b.replicate, b.metric)

    def test_nan_is_empty_cell(self):
        assert format_float(float("nan")) == ""
        assert format_float(0.1) == "0.1"

    def test_aggregate_csv(self, tmp_path):
        g = random_bipartite(3, 4, 6, seed=1, network_id="r")
        p = tmp_path / "agg.csv"
        write_aggregate_csv(aggregate(sweep(g, SweepConfig(replicates=2))), p)
        lines = p.read_text().splitlines()
        assert lines[0] == ("interaction_type,metric,bin_center,mean_normalized_value,std,"
                            "n_samples,unnormalized_networks")
        assert len(lines) > 1

    def test_bad_records_header(self, tmp_path):
        with pytest.raises(ValueError):
            read_records_csv(write(tmp_path / "r.csv", "a,b\n1,2\n"))


def test_run_report_json():
    r = RunReport(networks_processed=3, records_emitted=10, failures=[("x", "boom")],
                  config_echo={"replicates": 10}, tool_version="0.1.0")
    payload = json.loads(r.to_json())
    assert payload["successes"] == 2
    assert payload["failures"] == [{"network_id": "x", "error": "boom"}]
    assert payload["config"] == {"replicates": 10}
