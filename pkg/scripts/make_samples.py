"""Regenerate the bundled sample networks in src/netrobust/data/.

These are synthetic stand-ins for real interaction data; they exist so the
CLI and the tests have something realistic-looking to run on.
"""

from pathlib import Path

from netrobust.graph import InteractionType as T
from netrobust.synthetic import heavy_tailed_bipartite, modular_bipartite, random_bipartite, star_bipartite

DATA = Path(__file__).resolve().parent.parent / "src" / "netrobust" / "data"


def write_incidence(g, path):
    mat = g.incidence()
    lines = ["," + ",".join(g.col_labels)]
    lines += [g.row_labels[i] + "," + ",".join(str(int(x)) for x in row) for i, row in enumerate(mat)]
    path.write_text("\n".join(lines) + "\n")


def write_edges(g, path):
    path.write_text("# plant,disperser\n" + "".join(
        f"{g.row_labels[r]},{g.col_labels[c]}\n" for r, c in g.edges))


def main():
    DATA.mkdir(parents=True, exist_ok=True)
    nets = [
        ("sample_pollination", T.Pollination, "IncidenceCSV",
         heavy_tailed_bipartite(12, 25, 70, 0.9, seed=11)),
        ("sample_host_parasite", T.HostParasite, "IncidenceCSV",
         modular_bipartite(3, 4, 6, 0.5, 0.03, seed=12)),
        ("sample_plant_ant", T.PlantAnt, "IncidenceCSV",
         random_bipartite(8, 10, 14, seed=13)),
        ("sample_seed_dispersal", T.SeedDispersal, "EdgeList",
         star_bipartite(4, 5, 6, seed=14)),
    ]
    manifest = ["path,network_id,interaction_type,format"]
    for name, itype, fmt, g in nets:
        if fmt == "EdgeList":
            fname = name + ".txt"
            write_edges(g, DATA / fname)
        else:
            fname = name + ".csv"
            write_incidence(g, DATA / fname)
        manifest.append(f"{fname},{name},{itype.value},{fmt}")
    (DATA / "manifest.csv").write_text("\n".join(manifest) + "\n")


if __name__ == "__main__":
    main()
