"""Exhaustive lists of small planar maps, up to orientation-preserving isomorphism.

Every connected plane map with ``E + 1`` edges comes from one with ``E``
edges by drawing a new edge inside a face (between two of its corners,
possibly the same one) or by hanging a pendant edge in a corner.  The
census grows maps that way from the single edge and dedupes by canonical
code.
"""

from functools import lru_cache

from .errors import MapError
from .maps import CombinatorialMap


def _insert(sigma, sigma_inv, corner, dart):
    # put dart into the sector just before corner
    prev = sigma_inv[corner]
    sigma[prev] = dart
    sigma[dart] = corner
    sigma_inv[dart] = prev
    sigma_inv[corner] = dart


def _children(m):
    n = m.dart_count
    x, y = n, n + 1
    alpha = list(m.alpha) + [y, x]
    for c in m.darts:
        # pendant edge
        sigma = list(m.sigma) + [0, y]
        inv = list(m.sigma_inv) + [0, y]
        _insert(sigma, inv, c, x)
        yield alpha, sigma
        for b in m.darts:
            if m.face_of[b] != m.face_of[c]:
                continue
            sigma = list(m.sigma) + [0, 0]
            inv = list(m.sigma_inv) + [0, 0]
            _insert(sigma, inv, c, x)
            _insert(sigma, inv, b, y)
            yield alpha, sigma


def is_simple(m):
    """No loops and no parallel edges."""
    return all(u != v and k == 1 for (u, v), k in m.adjacency_counts().items())


@lru_cache(maxsize=None)
def _level(edges, simple):
    if edges == 1:
        seeds = [CombinatorialMap([1, 0], [0, 1])]
        if not simple:
            seeds.append(CombinatorialMap([1, 0], [1, 0]))
        return tuple(m.canonical_form() for m in seeds)
    seen = {}
    for m in _level(edges - 1, simple):
        for alpha, sigma in _children(m):
            try:
                child = CombinatorialMap(alpha, sigma)
            except MapError:
                continue
            if simple and not is_simple(child):
                continue
            seen.setdefault(child.canonical_code(), child)
    return tuple(seen[k].canonical_form() for k in sorted(seen))


def planar_maps(edges, simple=False):
    """All connected plane maps with exactly ``edges`` edges, in canonical form.

    With ``simple`` only maps without loops and parallel edges are listed;
    deleting an edge keeps a graph simple, so growth stays exhaustive.
    """
    if edges < 1:
        return ()
    return _level(edges, bool(simple))


def self_dual_maps(max_edges, simple=False):
    """Self-dual plane maps with at most ``max_edges`` edges."""
    from .duality import is_self_dual

    out = []
    for e in range(2, max_edges + 1, 2):
        out.extend(m for m in planar_maps(e, simple) if is_self_dual(m))
    return out
