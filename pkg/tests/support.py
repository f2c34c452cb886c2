"""Map generators and brute-force oracles shared by the tests.

The oracles here avoid the library's kernels on purpose: orbits are found
by set closure, isomorphism by trying every dart bijection that respects
the rotation from one root.
"""

import random

from sdmaps import CombinatorialMap
from sdmaps.errors import MapError


def random_rotation_system(rng, max_edges=10, min_edges=1, tries=100000):
    """Random connected graph with a random rotation at each vertex, kept only if spherical.

    Cycle rank stays small so that rejection terminates quickly.
    """
    for _ in range(tries):
        e = rng.randint(min_edges, max_edges)
        rank = rng.randint(0, min(3, e))
        v = e - rank + 1
        if v < 1:
            continue
        # spanning tree, then extra edges (loops and parallels allowed)
        edges = [(rng.randrange(i), i) for i in range(1, v)]
        edges += [(rng.randrange(v), rng.randrange(v)) for _ in range(e - len(edges))]
        at = [[] for _ in range(v)]
        for k, (a, b) in enumerate(edges):
            at[a].append(2 * k)
            at[b].append(2 * k + 1)
        sigma = [0] * (2 * e)
        for ds in at:
            rng.shuffle(ds)
            for i, d in enumerate(ds):
                sigma[d] = ds[(i + 1) % len(ds)]
        alpha = [d ^ 1 for d in range(2 * e)]
        m = CombinatorialMap(alpha, sigma, allow_nonspherical=True)
        if m.euler_characteristic == 2:
            return CombinatorialMap(alpha, sigma)
    raise RuntimeError("no spherical rotation system found")


def random_sphere_maps(seed, count, max_edges=10, min_edges=1):
    rng = random.Random(seed)
    return [random_rotation_system(rng, max_edges, min_edges) for _ in range(count)]


def grow_map(choices):
    """Planar map built by a sequence of edge insertions.

    Each choice ``(c, b, pendant)`` draws a new edge in the corner of dart
    ``c`` (taken modulo the dart count), either as a pendant edge or to the
    corner of ``b`` on the same face.  Every prefix stays on the sphere.
    """
    alpha, sigma = [1, 0], [0, 1]
    for c, b, pendant in choices:
        m = CombinatorialMap(alpha, sigma)
        n = m.dart_count
        c %= n
        x, y = n, n + 1
        sigma = list(sigma) + [0, 0]
        inv = list(m.sigma_inv) + [0, 0]
        alpha = list(alpha) + [y, x]
        if pendant:
            _insert(sigma, inv, c, x)
            sigma[y], inv[y] = y, y
        else:
            face = [d for d in range(n) if m.face_of[d] == m.face_of[c]]
            b = face[b % len(face)]
            _insert(sigma, inv, c, x)
            _insert(sigma, inv, b, y)
    return CombinatorialMap(alpha, sigma)


def _insert(sigma, inv, corner, dart):
    prev = inv[corner]
    sigma[prev] = dart
    sigma[dart] = corner
    inv[dart] = prev
    inv[corner] = dart


def orbits(perm):
    """Cycles of ``perm`` as frozensets, by repeated closure."""
    left = set(range(len(perm)))
    out = []
    while left:
        start = min(left)
        orb = {start}
        frontier = [start]
        while frontier:
            nxt = perm[frontier.pop()]
            if nxt not in orb:
                orb.add(nxt)
                frontier.append(nxt)
        left -= orb
        out.append(frozenset(orb))
    return out


def brute_counts(alpha, sigma):
    phi = [sigma[alpha[d]] for d in range(len(alpha))]
    return len(orbits(sigma)), len(orbits(alpha)), len(orbits(phi))


def brute_isomorphic(m, n, reversing=False):
    """Try every root image and propagate; no kernels involved."""
    if m.dart_count != n.dart_count:
        return False
    rot = [0] * n.dart_count
    for d, s in enumerate(n.sigma):
        rot[s if reversing else d] = d if reversing else s
    for b in range(n.dart_count):
        psi = {0: b}
        stack = [0]
        ok = True
        while stack and ok:
            d = stack.pop()
            for e, f in ((m.alpha[d], n.alpha[psi[d]]), (m.sigma[d], rot[psi[d]])):
                if e not in psi:
                    if f in psi.values():
                        ok = False
                        break
                    psi[e] = f
                    stack.append(e)
                elif psi[e] != f:
                    ok = False
                    break
        if ok and len(psi) == m.dart_count:
            return True
    return False


def safe_map(alpha, sigma):
    try:
        return CombinatorialMap(alpha, sigma)
    except MapError:
        return None
