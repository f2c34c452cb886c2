"""Search small maps for the three named fixtures and write them as JSON.

Each fixture is the first map, in census order, with the required
properties:

* fig3_not_antipodal: simple, self-dual with an involutive duality, not
  antipodally self-dual, not strongly involutive, ``I(G)`` has a symmetric
  8-cycle; the wheel ``W4`` is skipped since it is a family member.
* fig4_antipodal_not_strong: antipodally self-dual but not strongly
  involutive, loopless, fewest edges; simple maps preferred (none up to 10 edges).
* fig6_odd_obstruction: 2-connected, loopless, self-dual, with a vertex
  meeting every face an odd number of times; at least 6 edges.

Run with ``python3 experiments/find_fixtures.py [--write]``.
"""

import argparse
from pathlib import Path

from sdmaps import derived
from sdmaps.antipodality import is_antipodally_self_dual, odd_edge_obstruction
from sdmaps.census import is_simple, planar_maps
from sdmaps.duality import enumerate_dualities, is_self_dual, is_strongly_involutive
from sdmaps.families import wheel
from sdmaps.io import serialize_map
from sdmaps.symmetry import enumerate_symmetric_cycles

OUT = Path(__file__).resolve().parents[1] / "src" / "sdmaps" / "fixtures"


def loopless(m):
    return all(u != v for u, v in m.adjacency_counts())


def two_connected(m):
    return all(len({m.vertex_of[d] for d in f}) == len(f) for f in m.faces())


def find_fig3(max_edges=10):
    w4 = wheel(4)
    for e in range(2, max_edges + 1, 2):
        for m in planar_maps(e, simple=True):
            if m == w4 or not is_self_dual(m):
                continue
            if not any(w.involutive for w in enumerate_dualities(m)):
                continue
            if is_antipodally_self_dual(m, with_labeling=False) or is_strongly_involutive(m).verdict:
                continue
            lengths = {w.length for w in enumerate_symmetric_cycles(derived.incidence(m).map)}
            if 8 in lengths:
                return m
    return None


def find_fig4(max_edges=8, simple_edges=12):
    for e in range(2, simple_edges + 1, 2):
        for m in planar_maps(e, simple=True):
            if m.num_vertices == m.num_faces and is_self_dual(m):
                if is_antipodally_self_dual(m, with_labeling=False) and not is_strongly_involutive(m).verdict:
                    return m
    for e in range(2, max_edges + 1, 2):
        for m in planar_maps(e):
            if loopless(m) and is_self_dual(m):
                if is_antipodally_self_dual(m, with_labeling=False) and not is_strongly_involutive(m).verdict:
                    return m
    return None


def find_fig6(max_edges=8):
    for e in range(6, max_edges + 1, 2):
        for m in planar_maps(e):
            if loopless(m) and two_connected(m) and is_self_dual(m) and odd_edge_obstruction(m).verdict:
                return m
    return None


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--write", action="store_true")
    ap.add_argument("--simple-edges", type=int, default=12, help="largest simple census searched for fig4")
    ns = ap.parse_args()
    found = {
        "fig3_not_antipodal": find_fig3(),
        "fig4_antipodal_not_strong": find_fig4(simple_edges=ns.simple_edges),
        "fig6_odd_obstruction": find_fig6(),
    }
    for name, m in found.items():
        if m is None:
            print(name, "not found")
            continue
        print(name, m.counts, "simple" if is_simple(m) else "multigraph")
        if ns.write:
            (OUT / f"{name}.json").write_text(serialize_map(m, metadata={"name": name}), encoding="utf-8")


if __name__ == "__main__":
    main()
