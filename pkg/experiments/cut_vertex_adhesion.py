"""Are antipodally self-dual maps with a cut vertex always adhesions?

For every census map ``H`` with at most ``--max-edges`` edges that is
antipodally self-dual and has a cut vertex, test whether ``H`` is
isomorphic (either orientation) to ``adhesion(G, c)`` for some map ``G``
with ``|E(H)| / 2`` edges and some corner ``c``.  The map-level test is
stricter than the graph-level one, so a miss is reported with the
underlying graph as well.

This only explores the question; it proves nothing beyond the census.

    python3 experiments/cut_vertex_adhesion.py [--max-edges 8]
"""

import argparse
import time

from sdmaps import adhesion, is_antipodally_self_dual
from sdmaps.census import planar_maps
from sdmaps.duality import is_self_dual


def cut_vertices(m):
    """Vertices that appear twice on one face boundary separate the map."""
    out = set()
    for f in m.faces():
        seen = set()
        for d in f:
            v = m.vertex_of[d]
            if v in seen:
                out.add(v)
            seen.add(v)
    return sorted(out)


def adhesion_codes(edges):
    codes = set()
    for g in planar_maps(edges):
        for c in g.darts:
            a = adhesion(g, c)
            codes.add(a.canonical_code())
            codes.add(a.mirror().canonical_code())
    return codes


def graph_key(m):
    return tuple(sorted(m.adjacency_counts().items()))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-edges", type=int, default=8)
    ns = ap.parse_args()
    for e in range(2, ns.max_edges + 1, 2):
        t = time.time()
        codes = adhesion_codes(e // 2)
        hits = misses = 0
        for m in planar_maps(e):
            if not cut_vertices(m) or not is_self_dual(m):
                continue
            if not is_antipodally_self_dual(m, with_labeling=False).verdict:
                continue
            if m.canonical_code() in codes:
                hits += 1
            else:
                misses += 1
                print(f"  E={e}: not an adhesion: counts {m.counts}, edges {graph_key(m)}")
                print(f"    alpha={list(m.alpha)} sigma={list(m.sigma)} cut vertices {cut_vertices(m)}")
        print(f"E={e}: {hits} antipodal maps with a cut vertex are adhesions, {misses} are not "
              f"({time.time() - t:.1f}s)")


if __name__ == "__main__":
    main()
