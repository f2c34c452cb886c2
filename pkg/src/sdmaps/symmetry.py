"""Symmetric cycles and antipodal symmetry.

A simple cycle ``C`` of a sphere map ``H`` splits the faces into two
sides.  ``C`` is symmetric when an automorphism of ``H`` maps ``C`` onto
itself and exchanges the sides.  Three readings of "automorphism" are
supported through ``mode``:

* ``"map"`` (default): any map automorphism, either orientation.
* ``"antipodal"``: a map automorphism acting like the antipodal map on an
  equator, i.e. an involution moving every vertex and every edge of ``C``
  and, on bipartite hosts, exchanging the colour classes.
* ``"graph"``: any automorphism of the underlying multigraph; sides are
  compared by their vertex sets only.

Under ``"map"`` an antipodally self-dual map can have symmetric cycles of
length divisible by 4 in its incidence graph: the cube ``I(W3)`` has a
Hamiltonian 8-cycle whose sides are exchanged by a half-turn about an axis
through two of its edges.  Under ``"antipodal"`` every symmetric cycle of
``I(G)`` has length ``2n`` with ``n`` odd by construction.
"""

from dataclasses import dataclass, field
from itertools import product

from . import derived
from .errors import BadParameter, BudgetExceeded, NotACycle, NotSimple
from .maps import Kind, automorphisms

MODES = ("map", "antipodal", "graph")


@dataclass(frozen=True)
class Cycle:
    """A simple cycle: ``vertices[i]`` and ``vertices[i + 1]`` are joined by ``edges[i]``."""

    vertices: tuple
    edges: tuple

    def __len__(self):
        return len(self.edges)

    @property
    def edge_set(self):
        return frozenset(self.edges)


@dataclass(frozen=True)
class Side:
    vertices: frozenset
    edges: frozenset
    faces: frozenset

    @property
    def counts(self):
        return (len(self.vertices), len(self.edges), len(self.faces))


@dataclass(frozen=True, eq=False)
class SymmetricCycleWitness:
    host: object
    cycle: Cycle
    automorphism: object = field(repr=False)
    side_partition: tuple = field(repr=False)
    mode: str = "map"

    @property
    def length(self):
        return len(self.cycle)


def _edges_between(h):
    table = {}
    for d in h.darts:
        if d < h.alpha[d]:
            u, v = h.vertex_of[d], h.vertex_of[h.alpha[d]]
            table.setdefault(frozenset((u, v)), []).append(h.edge_of[d])
    return table


def _canonical_cycle(h, edge_set):
    """Order a simple cycle given by its edge set, from its least vertex towards the smaller neighbour."""
    inc = {}
    for e in edge_set:
        u, v = h.endpoints(e)
        inc.setdefault(u, []).append((v, e))
        inc.setdefault(v, []).append((u, e))
    start = min(inc)
    (v0, e0), (v1, e1) = sorted(inc[start])
    verts, edges = [start], []
    nxt, ne = (v0, e0) if (v0, e0) <= (v1, e1) else (v1, e1)
    while True:
        edges.append(ne)
        if nxt == start:
            break
        verts.append(nxt)
        prev_edge = ne
        (a, ea), (b, eb) = inc[nxt]
        nxt, ne = (b, eb) if ea == prev_edge else (a, ea)
    return Cycle(tuple(verts), tuple(edges))


def make_cycle(h, vertices=None, edges=None):
    """Build a :class:`Cycle` of ``h`` from a closed vertex sequence or from edge indices.

    A vertex sequence may repeat its first vertex at the end.  Raises
    :class:`NotACycle` when the input is not a closed walk and
    :class:`NotSimple` when it revisits a vertex or an edge.
    """
    if (vertices is None) == (edges is None):
        raise BadParameter("give exactly one of vertices or edges")
    if vertices is not None:
        vs = list(vertices)
        if len(vs) > 1 and vs[0] == vs[-1]:
            vs.pop()
        if not vs:
            raise NotACycle("empty vertex sequence")
        between = _edges_between(h)
        es = []
        for i, u in enumerate(vs):
            v = vs[(i + 1) % len(vs)]
            if not 0 <= u < h.num_vertices:
                raise NotACycle(f"{u} is not a vertex")
            options = [e for e in between.get(frozenset((u, v)), []) if e not in es]
            if u == v:
                raise NotSimple(f"loop at vertex {u}")
            if not options:
                raise NotACycle(f"vertices {u} and {v} are not adjacent")
            es.append(options[0])
        if len(set(vs)) != len(vs):
            raise NotSimple("the cycle revisits a vertex")
        if len(set(es)) != len(es):
            raise NotSimple("the cycle reuses an edge")
        edges = es
    es = list(edges)
    if len(set(es)) != len(es):
        raise NotSimple("the cycle reuses an edge")
    deg = {}
    for e in es:
        if not 0 <= e < h.num_edges:
            raise NotACycle(f"{e} is not an edge")
        u, v = h.endpoints(e)
        if u == v:
            raise NotSimple(f"edge {e} is a loop")
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    if not es or any(k != 2 for k in deg.values()):
        bad = [v for v, k in deg.items() if k > 2]
        raise (NotSimple if bad else NotACycle)("edges do not form a simple closed walk")
    cyc = _canonical_cycle(h, frozenset(es))
    if len(cyc.edges) != len(es):
        raise NotACycle("edges form more than one cycle")
    return cyc


def _as_cycle(h, cycle):
    if isinstance(cycle, Cycle):
        return cycle
    return make_cycle(h, vertices=cycle)


def cycle_sides(h, cycle):
    """The two sides of a simple cycle of the sphere map ``h``.

    Faces are grouped by adjacency across edges not on the cycle; vertices
    and edges off the cycle go with their faces.  The side holding the
    smallest face index is returned first (the "interior").
    """
    cyc = _as_cycle(h, cycle)
    on = cyc.edge_set
    parent = list(range(h.num_faces))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for d in h.darts:
        if h.edge_of[d] not in on:
            a, b = find(h.face_of[d]), find(h.face_of[h.alpha[d]])
            parent[a] = b
    roots = sorted({find(f) for f in range(h.num_faces)}, key=lambda r: min(f for f in range(h.num_faces) if find(f) == r))
    if len(roots) != 2:
        raise NotACycle(f"cycle leaves {len(roots)} face components")
    on_v = set(cyc.vertices)
    sides = []
    for r in roots:
        faces = frozenset(f for f in range(h.num_faces) if find(f) == r)
        verts, edges = set(), set()
        for d in h.darts:
            if h.face_of[d] in faces:
                if h.edge_of[d] not in on:
                    edges.add(h.edge_of[d])
                if h.vertex_of[d] not in on_v:
                    verts.add(h.vertex_of[d])
        sides.append(Side(frozenset(verts), frozenset(edges), frozenset(faces)))
    return tuple(sides)


# -- automorphism tests ----------------------------------------------------


def _acts(aut):
    cells = aut.cell_action()
    return ([j for _, j in cells.vertex], [j for _, j in cells.edge], [j for _, j in cells.face])


def bipartition(h):
    """Colour class (0/1) of every vertex, or ``None`` if ``h`` is not bipartite."""
    col = [-1] * h.num_vertices
    rot = h.vertices()
    for s in range(h.num_vertices):
        if col[s] != -1:
            continue
        col[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for d in rot[u]:
                v = h.vertex_of[h.alpha[d]]
                if col[v] == -1:
                    col[v] = 1 - col[u]
                    stack.append(v)
                elif col[v] == col[u]:
                    return None
    return col


def _exchanges(aut_cells, cyc, sides, antipodal=False, colors=None):
    vmap, emap, fmap = aut_cells
    inside, outside = sides
    if any(emap[e] not in cyc.edge_set for e in cyc.edges):
        return False
    if not all(fmap[f] in outside.faces for f in inside.faces):
        return False
    if antipodal:
        if any(vmap[v] == v for v in cyc.vertices) or any(emap[e] == e for e in cyc.edges):
            return False
        for table in aut_cells:
            if any(table[table[i]] != i for i in range(len(table))):
                return False
        if colors is not None and colors[vmap[0]] == colors[0]:
            return False
    return True


def _map_witness(h, cyc, sides, antipodal):
    colors = bipartition(h) if antipodal else None
    for aut in automorphisms(h):
        if _exchanges(_acts(aut), cyc, sides, antipodal, colors):
            return aut
    return None


def graph_automorphisms(h, limit=10**6):
    """Vertex permutations of ``h`` preserving every edge multiplicity (loops included)."""
    n = h.num_vertices
    mult = [{} for _ in range(n)]
    for d in h.darts:
        u, v = h.vertex_of[d], h.vertex_of[h.alpha[d]]
        mult[u][v] = mult[u].get(v, 0) + 1
    sig = [sorted(m.values()) for m in mult]
    order = sorted(range(n), key=lambda v: (-len(mult[v]), v))
    img = [-1] * n
    used = [False] * n
    out = []
    steps = 0

    def rec(i):
        nonlocal steps
        if i == n:
            out.append(tuple(img))
            return
        u = order[i]
        for w in range(n):
            if used[w] or sig[w] != sig[u]:
                continue
            ok = mult[u].get(u, 0) == mult[w].get(w, 0)
            if ok:
                for x, k in mult[u].items():
                    if x != u and img[x] != -1 and mult[w].get(img[x], 0) != k:
                        ok = False
                        break
            if not ok:
                continue
            steps += 1
            if steps > limit:
                raise BudgetExceeded(f"graph automorphism search exceeded {limit} steps", steps)
            img[u], used[w] = w, True
            rec(i + 1)
            img[u], used[w] = -1, False

    rec(0)
    return out


def _graph_witness(h, cyc, sides, gauts):
    inside, outside = sides
    pairs = sorted(tuple(sorted(h.endpoints(e))) for e in cyc.edges)
    for g in gauts:
        if sorted(tuple(sorted((g[u], g[v]))) for u, v in pairs) != pairs:
            continue
        if {g[v] for v in inside.vertices} == set(outside.vertices):
            return g
    return None


def is_symmetric_cycle(h, cycle, mode="map"):
    """Witness that ``cycle`` is symmetric in ``h``, or ``None``.

    In ``"graph"`` mode the witness automorphism is a vertex permutation;
    otherwise it is a :class:`~sdmaps.maps.MapMorphism`.
    """
    if mode not in MODES:
        raise BadParameter(f"mode must be one of {MODES}")
    cyc = _as_cycle(h, cycle)
    sides = cycle_sides(h, cyc)
    if mode != "graph" and sides[0].counts != sides[1].counts:
        return None
    if mode == "graph":
        if len(sides[0].vertices) != len(sides[1].vertices):
            return None
        aut = _graph_witness(h, cyc, sides, graph_automorphisms(h))
    else:
        aut = _map_witness(h, cyc, sides, mode == "antipodal")
    return None if aut is None else SymmetricCycleWitness(h, cyc, aut, sides, mode)


def _face_adjacency(h):
    adj = [set() for _ in range(h.num_faces)]
    for d in h.darts:
        a, b = h.face_of[d], h.face_of[h.alpha[d]]
        if a != b:
            adj[a].add(b)
    return adj


def _connected(mask, adj_bits):
    if not mask:
        return False
    low = mask & -mask
    seen = low
    frontier = low
    while frontier:
        grow = 0
        f = frontier
        while f:
            b = f & -f
            grow |= adj_bits[b.bit_length() - 1]
            f ^= b
        grow &= mask & ~seen
        seen |= grow
        frontier = grow
    return seen == mask


def _boundary_cycle(h, mask):
    es = set()
    for d in h.darts:
        if (mask >> h.face_of[d]) & 1 and not (mask >> h.face_of[h.alpha[d]]) & 1:
            es.add(h.edge_of[d])
    try:
        return make_cycle(h, edges=sorted(es))
    except (NotACycle, NotSimple):
        return None


def _map_cycles(h, max_len, budget, antipodal):
    found = {}
    adj = _face_adjacency(h)
    adj_bits = [sum(1 << g for g in a) for a in adj]
    full = (1 << h.num_faces) - 1
    colors = bipartition(h) if antipodal else None
    mode = "antipodal" if antipodal else "map"
    candidates = 0
    for aut in automorphisms(h):
        acts = _acts(aut)
        fmap = acts[2]
        orbits, seen = [], set()
        for f in range(h.num_faces):
            if f in seen:
                continue
            orb = [f]
            g = fmap[f]
            while g != f:
                orb.append(g)
                g = fmap[g]
            seen.update(orb)
            orbits.append(orb)
        if any(len(o) % 2 for o in orbits):
            continue
        halves = [(sum(1 << g for g in o[0::2]), sum(1 << g for g in o[1::2])) for o in orbits]
        for phases in product((0, 1), repeat=len(halves) - 1):
            candidates += 1
            if candidates > budget:
                raise BudgetExceeded(f"more than {budget} candidate sides", candidates)
            mask = halves[0][0]
            for (a, b), p in zip(halves[1:], phases):
                mask |= b if p else a
            if not _connected(mask, adj_bits) or not _connected(full ^ mask, adj_bits):
                continue
            cyc = _boundary_cycle(h, mask)
            if cyc is None or (max_len is not None and len(cyc) > max_len):
                continue
            key = cyc.edge_set
            if key in found:
                continue
            sides = cycle_sides(h, cyc)
            if _exchanges(acts, cyc, sides, antipodal, colors):
                found[key] = SymmetricCycleWitness(h, cyc, aut, sides, mode)
    return found


def simple_cycles(h, max_len=None, budget=10**6):
    """Every simple cycle of ``h`` (length at least 2) as a :class:`Cycle`."""
    out = {}
    steps = 0
    nbrs = [[] for _ in range(h.num_vertices)]
    for e in range(h.num_edges):
        u, v = h.endpoints(e)
        if u != v:
            nbrs[u].append((v, e))
            nbrs[v].append((u, e))
    for s in range(h.num_vertices):
        path_v, path_e = [s], []
        on = {s}

        def dfs(u):
            nonlocal steps
            for v, e in nbrs[u]:
                if e in path_e:
                    continue
                steps += 1
                if steps > budget:
                    raise BudgetExceeded(f"cycle enumeration exceeded {budget} steps", steps)
                if v == s and len(path_e) >= 1:
                    es = frozenset(path_e + [e])
                    if len(es) >= 2 and es not in out:
                        out[es] = _canonical_cycle(h, es)
                    continue
                if v in on or v < s:
                    continue
                if max_len is not None and len(path_e) + 1 >= max_len:
                    continue
                on.add(v)
                path_v.append(v)
                path_e.append(e)
                dfs(v)
                path_e.pop()
                path_v.pop()
                on.discard(v)

        dfs(s)
    return [out[k] for k in sorted(out, key=lambda k: (len(k), sorted(k)))]


def enumerate_symmetric_cycles(h, max_len=None, budget=10**6, mode="map"):
    """All symmetric cycles of ``h``, one witness per edge set.

    Map modes enumerate automorphisms first and then every side split that
    alternates along each face orbit; ``"graph"`` mode filters all simple
    cycles and is meant for small hosts.  Raises :class:`BudgetExceeded`
    instead of truncating.
    """
    if mode not in MODES:
        raise BadParameter(f"mode must be one of {MODES}")
    if mode == "graph":
        gauts = graph_automorphisms(h, budget)
        found = {}
        for cyc in simple_cycles(h, max_len, budget):
            try:
                sides = cycle_sides(h, cyc)
            except NotACycle:
                continue
            g = _graph_witness(h, cyc, sides, gauts)
            if g is not None:
                found[cyc.edge_set] = SymmetricCycleWitness(h, cyc, g, sides, mode)
    else:
        found = _map_cycles(h, max_len, budget, mode == "antipodal")
    return [found[k] for k in sorted(found, key=lambda k: (len(k), sorted(k)))]


@dataclass(frozen=True)
class Ant1Report:
    """Symmetric cycles of ``I(m)`` against the length rule ``2n``, ``n`` odd."""

    has_symmetric_cycle: bool
    lengths: tuple
    consistent: bool
    antipodal: bool
    mode: str
    witnesses: tuple = field(default=(), repr=False)
    other_lengths: dict = field(default_factory=dict)

    @property
    def certifies_not_antipodal(self):
        """A length divisible by 4 rules antipodality out (contrapositive use)."""
        return any(n % 4 == 0 for n in self.lengths)


def theorem_ant1_report(m, max_len=None, budget=10**6, mode="map", compare=()):
    """Symmetric-cycle lengths of ``I(m)`` and whether they obey the odd-half rule.

    ``compare`` lists further modes whose lengths are reported alongside in
    ``other_lengths``.
    """
    from .antipodality import is_antipodally_self_dual

    h = derived.incidence(m).map
    ws = enumerate_symmetric_cycles(h, max_len, budget, mode)
    lengths = tuple(sorted({w.length for w in ws}))
    consistent = bool(ws) and all(n % 4 == 2 for n in lengths)
    others = {}
    for other in compare:
        if other != mode:
            others[other] = tuple(sorted({w.length for w in enumerate_symmetric_cycles(h, max_len, budget, other)}))
    return Ant1Report(bool(ws), lengths, consistent, is_antipodally_self_dual(m, with_labeling=False).verdict,
                      mode, tuple(ws), others)


# -- antipodal symmetry ---------------------------------------------------


@dataclass(frozen=True, eq=False)
class SymmetryVerdict:
    verdict: bool
    witness: object = None

    def __bool__(self):
        return self.verdict


def _free_involution(h, aut):
    vmap, emap, fmap = _acts(aut)
    for table in (vmap, emap, fmap):
        if any(table[table[i]] != i or table[i] == i for i in range(len(table))):
            return False
    return True


def is_antipodally_symmetric(h):
    """An involutive automorphism of ``h`` fixing no vertex, edge or face.

    Such an automorphism is the combinatorial trace of the antipodal map: its
    extension to the squares graph of ``h`` has no fixed vertex.  Accepts a
    map or a ``DerivedMap``.
    """
    if isinstance(h, derived.DerivedMap):
        h = h.map
    for aut in automorphisms(h):
        if _free_involution(h, aut):
            return SymmetryVerdict(True, aut)
    return SymmetryVerdict(False)


__all__ = [
    "MODES", "Ant1Report", "Cycle", "bipartition", "Side", "SymmetricCycleWitness", "SymmetryVerdict", "cycle_sides",
    "enumerate_symmetric_cycles", "graph_automorphisms", "is_antipodally_symmetric", "is_symmetric_cycle",
    "make_cycle", "simple_cycles", "theorem_ant1_report",
]
