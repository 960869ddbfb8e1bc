import json
import subprocess
import sys

import pytest

from netrobust.cli import main

HEADER = "path,network_id,interaction_type,format\n"
# six edges, capacity 6, so the default grid is k = 1, 2, 3
SIX_EDGES = "1,1,0\n0,1,1\n1,0,1\n0,0,0\n"


@pytest.fixture
def net(tmp_path):
    p = tmp_path / "six.csv"
    p.write_text(SIX_EDGES)
    return p


def manifest(tmp_path, rows):
    p = tmp_path / "manifest.csv"
    p.write_text(HEADER + "".join(f"{r}\n" for r in rows))
    return p


class TestMetrics:
    def test_identity_table(self, tmp_path, capsys):
        p = tmp_path / "id.csv"
        p.write_text("1,0\n0,1\n")
        assert main(["metrics", str(p)]) == 0
        lines = dict(line.split("\t") for line in capsys.readouterr().out.splitlines())
        assert lines["ComponentCount"] == "2.0"
        assert lines["NonzeroEigenvalues"] == "2.0"
        assert lines["m"] == "2"

    def test_json(self, net, capsys):
        assert main(["metrics", str(net), "--json", "--metrics", "ComponentCount,largesteigenvalue"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["n"] == 7 and payload["m"] == 6
        assert set(payload) == {"network_id", "n", "m", "connectance", "ComponentCount",
                                "LargestEigenvalue"}

    def test_edgeless_json_nulls(self, tmp_path, capsys):
        p = tmp_path / "z.csv"
        p.write_text("0,0\n0,0\n")
        assert main(["metrics", str(p), "--json"]) == 0
        assert json.loads(capsys.readouterr().out)["CommunitiesCNM"] is None

    def test_missing_file(self, tmp_path, capsys):
        assert main(["metrics", str(tmp_path / "nope.csv")]) == 2
        assert "error" in capsys.readouterr().err

    def test_parse_error(self, tmp_path, capsys):
        p = tmp_path / "bad.csv"
        p.write_text("1,0\n0,1,1\n")
        assert main(["metrics", str(p)]) == 2
        assert "row 2" in capsys.readouterr().err

    def test_bad_metric_name(self, net):
        assert main(["metrics", str(net), "--metrics", "Diameter"]) == 2


class TestSweep:
    def test_defaults_m6(self, tmp_path, net):
        m = manifest(tmp_path, ["six.csv,six,Pollination,IncidenceCSV"])
        out = tmp_path / "out"
        assert main(["sweep", str(m), "--out", str(out), "--threads", "1"]) == 0
        rows = (out / "records.csv").read_text().splitlines()
        assert len(rows) - 1 == 3 * 10 * 9 + 9
        report = json.loads((out / "report.json").read_text())
        assert report["networks_processed"] == 1 and report["failures"] == []
        assert report["config"]["replicates"] == 10
        assert (out / "aggregate.csv").exists()

    def test_rerun_byte_identical(self, tmp_path, net, monkeypatch):
        m = manifest(tmp_path, ["six.csv,six,Pollination,IncidenceCSV"])
        monkeypatch.setenv("NETROBUST_SEED", "17")
        args = ["sweep", str(m), "--replicates", "3", "--threads", "1"]
        assert main(args + ["--out", str(tmp_path / "a")]) == 0
        assert main(args + ["--out", str(tmp_path / "b")]) == 0
        a = (tmp_path / "a" / "records.csv").read_bytes()
        assert a == (tmp_path / "b" / "records.csv").read_bytes()
        assert json.loads((tmp_path / "a" / "report.json").read_text())["config"]["base_seed"] == 17

    def test_corrupt_file_listed(self, tmp_path, net):
        (tmp_path / "bad.csv").write_text("1,0\nfoo,1\n")
        m = manifest(tmp_path, ["six.csv,six,Pollination,IncidenceCSV",
                                "bad.csv,bad,Pollination,IncidenceCSV"])
        out = tmp_path / "out"
        assert main(["sweep", str(m), "--out", str(out), "--replicates", "2", "--threads", "1"]) == 0
        report = json.loads((out / "report.json").read_text())
        assert report["networks_processed"] == 2 and report["successes"] == 1
        assert report["failures"][0]["network_id"] == "bad"
        assert main(["sweep", str(m), "--out", str(out), "--replicates", "2", "--threads", "1",
                     "--no-allow-failures"]) == 1

    def test_all_failed(self, tmp_path):
        (tmp_path / "bad.csv").write_text("x,1\n1\n")
        m = manifest(tmp_path, ["bad.csv,bad,Pollination,IncidenceCSV"])
        assert main(["sweep", str(m), "--out", str(tmp_path / "o")]) == 1

    def test_unwritable_out(self, tmp_path, net, capsys):
        m = manifest(tmp_path, ["six.csv,six,Pollination,IncidenceCSV"])
        blocker = tmp_path / "file"
        blocker.write_text("")
        assert main(["sweep", str(m), "--out", str(blocker / "sub")]) == 2
        assert "not writable" in capsys.readouterr().err

    def test_bad_manifest(self, tmp_path):
        m = manifest(tmp_path, ["missing.csv,x,Pollination,IncidenceCSV"])
        assert main(["sweep", str(m), "--out", str(tmp_path / "o")]) == 2


def test_aggregate_command(tmp_path, net):
    m = manifest(tmp_path, ["six.csv,six,Pollination,IncidenceCSV"])
    out = tmp_path / "out"
    assert main(["sweep", str(m), "--out", str(out), "--replicates", "2", "--threads", "1",
                 "--bins", "4"]) == 0
    again = tmp_path / "again.csv"
    assert main(["aggregate", str(out / "records.csv"), "--out", str(again), "--bins", "4"]) == 0
    assert again.read_bytes() == (out / "aggregate.csv").read_bytes()
    empty = tmp_path / "empty.csv"
    empty.write_text("network_id,interaction_type,k_added,added_fraction,replicate,seed,metric,value\n")
    assert main(["aggregate", str(empty), "--out", str(tmp_path / "x.csv")]) == 2


class TestDemoCommunities:
    def parse(self, out):
        lines = out.splitlines()[2:]
        return {name: (int(a), int(b)) for name, a, b in (ln.split("\t") for ln in lines)}

    def test_two_blocks_k0(self, tmp_path, capsys):
        # triangles are not bipartite; two K_{2,2} blocks joined by one edge play the barbell
        p = tmp_path / "two.txt"
        p.write_text("a,x\nb,x\na,y\nb,y\nc,z\nd,z\nc,w\nd,w\nb,z\n")
        assert main(["demo-communities", str(p), "--k", "0"]) == 0
        counts = self.parse(capsys.readouterr().out)
        assert counts["CNM"] == (2, 2)
        assert set(counts) == {"CNM", "Louvain", "GirvanNewman", "LabelPropagation"}

    def test_k33_at_capacity(self, tmp_path, capsys):
        p = tmp_path / "k33.csv"
        p.write_text("1,0,0\n0,1,0\n0,0,1\n")
        assert main(["demo-communities", str(p), "--k", "6"]) == 0
        counts = self.parse(capsys.readouterr().out)
        after = {name: c[1] for name, c in counts.items()}
        # on K_{3,3} every further merge of the three row-column pairs has zero gain,
        # so the greedy modularity methods stop at three; the others collapse to one
        assert after == {"CNM": 3, "Louvain": 3, "GirvanNewman": 1, "LabelPropagation": 1}

    def test_invalid_k(self, tmp_path, capsys):
        p = tmp_path / "id.csv"
        p.write_text("1,0\n0,1\n")
        assert main(["demo-communities", str(p), "--k", "3"]) == 2
        assert "only 2 absent pairs" in capsys.readouterr().err


def test_usage_errors():
    assert main([]) == 2
    assert main(["metrics"]) == 2


def test_module_entry_point(tmp_path):
    p = tmp_path / "id.csv"
    p.write_text("1,0\n0,1\n")
    res = subprocess.run([sys.executable, "-m", "netrobust", "metrics", str(p), "--json",
                          "--metrics", "ComponentCount"], capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)["ComponentCount"] == 2.0
