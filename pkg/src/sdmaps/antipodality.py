"""Antipodal self-duality through involutive labelings of ``I(G)^square``.

A self-dual map is antipodally self-dual exactly when some involutive
duality induces, on the squares graph of its incidence graph, an involution
without fixed vertices.  Dualities swap black and white vertices of
``I(G)``, so the only possible fixed vertices are edges of ``I(G)``
(corners of ``G``) and faces of ``I(G)`` (edges of ``G``).
"""

from collections import namedtuple
from dataclasses import dataclass, field

from . import derived
from .derived import BLACK, WHITE, V_E, V_F, V_V
from .duality import enumerate_dualities, is_self_dual
from .errors import BudgetExceeded, NotAutomorphism, NotInvolution, UnknownVertex
from .maps import InvalidMorphism, MapMorphism, MorphismKind

NOT_SELF_DUAL = "not_self_dual"
SELF_DUAL_NOT_ANTIPODAL = "self_dual_not_antipodal"
ANTIPODAL = "antipodal"


class Label(namedtuple("Label", "index bar")):
    """``x_index`` or, when ``bar`` is set, its partner ``~x_index``."""

    __slots__ = ()

    @property
    def partner(self):
        return Label(self.index, not self.bar)

    def __str__(self):
        return f"~x{self.index}" if self.bar else f"x{self.index}"


# -- square extension ------------------------------------------------------


@dataclass(frozen=True, eq=False)
class SquareExtension:
    """An automorphism of ``H`` acting on ``V(H^sq) = V(H) + E(H) + F(H)``.

    ``action[i]`` is the image of squares-graph vertex ``i``.  ``colors``
    holds the black/white class of each vertex of ``H`` when ``H`` is an
    incidence graph.
    """

    base: MapMorphism
    square: derived.DerivedMap
    action: tuple
    lift: MapMorphism = field(repr=False)
    colors: tuple = None

    @property
    def fixed(self):
        """``(tag, vertex)`` for every fixed squares-graph vertex."""
        return [(self.square.vertex_origin[i][0], i) for i, j in enumerate(self.action) if i == j]

    def fixed_of_type(self, tag):
        return [i for t, i in self.fixed if t == tag]

    @property
    def is_involution(self):
        return all(self.action[j] == i for i, j in enumerate(self.action))


def lift_to_square(aut, sq=None):
    """The dart-level automorphism of ``H^sq`` induced by ``aut`` of ``H``."""
    h = aut.source
    sq = sq or derived.square(h)
    psi = aut.psi
    lifted = [0] * (4 * h.dart_count)
    for d in h.darts:
        p = psi[d]
        # reversing maps the face right of d to the face right of alpha(psi d)
        q = p if aut.preserving else h.alpha[p]
        lifted[4 * d] = 4 * p
        lifted[4 * d + 1] = 4 * p + 1
        lifted[4 * d + 2] = 4 * q + 2
        lifted[4 * d + 3] = 4 * q + 3
    return MapMorphism(sq.map, sq.map, tuple(lifted), aut.orientation, MorphismKind.AUTOMORPHISM)


def square_extension(h, aut, sq=None):
    """Extend an automorphism of ``h`` to its squares graph.

    ``h`` may be a map or an incidence ``DerivedMap``; in the latter case the
    black/white colouring is kept for labeling.  Raises
    :class:`NotAutomorphism` if ``aut`` is not an automorphism of ``h``.
    """
    colors = None
    if isinstance(h, derived.DerivedMap):
        if h.construction == "incidence":
            colors = tuple(tag for tag, _ in h.vertex_origin)
        h = h.map
    for side in (aut.source, aut.target):
        if side.alpha != h.alpha or side.sigma != h.sigma:
            raise NotAutomorphism("morphism is not an automorphism of the given map")
    try:
        aut.check()
    except InvalidMorphism as exc:
        raise NotAutomorphism(str(exc)) from exc
    sq = sq or derived.square(h)
    cells = aut.cell_action()
    q = sq.map
    vv = [q.vertex_of[4 * ds[0]] for ds in h.vertices()]
    ve = [q.vertex_of[4 * ds[0] + 1] for ds in h.edges()]
    vf = [q.vertex_of[4 * ds[0] + 2] for ds in h.faces()]
    action = [0] * q.num_vertices
    for i, (_, j) in enumerate(cells.vertex):
        action[vv[i]] = vv[j]
    for i, (_, j) in enumerate(cells.edge):
        action[ve[i]] = ve[j]
    for i, (_, j) in enumerate(cells.face):
        action[vf[i]] = vf[j]
    return SquareExtension(aut, sq, tuple(action), lift_to_square(aut, sq), colors)


# -- labelings -------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class InvolutiveLabeling:
    """Label sets on the vertices of a squares graph.

    ``labels[v]`` is a frozenset of :class:`Label`; a vertex carrying a pair
    ``{x_i, ~x_i}`` is fixed.
    """

    host: derived.DerivedMap
    labels: tuple
    colors: tuple = None

    @property
    def fixed_vertices(self):
        return tuple(v for v, s in enumerate(self.labels) if len(s) == 2)

    def inverse(self):
        """``label -> vertex``."""
        return {lab: v for v, s in enumerate(self.labels) for lab in s}

    def involution(self):
        """Vertex involution encoded by the labels: ``v`` goes to the owner of ``~Lambda(v)``."""
        inv = self.inverse()
        return tuple(inv[next(iter(s)).partner] for s in self.labels)

    def as_strings(self):
        return [sorted(str(lab) for lab in s) for s in self.labels]


def square_color_function(sq, colors):
    """Colour of squares-graph vertices that come from vertices of ``H``."""
    if colors is None:
        return None

    def color(v):
        tag, ref = sq.vertex_origin[v]
        return colors[ref.index] if tag == V_V else None

    return color


def labeling_from_orbits(host, tau, colors=None):
    """Label the orbits of the vertex involution ``tau`` of ``host``.

    Orbits are numbered by their smallest vertex.  In a 2-orbit the smaller
    vertex gets ``x_i``, except that black vertices always get the unbarred
    label when ``colors`` is given.
    """
    color = square_color_function(host, colors)
    labels = [None] * len(tau)
    k = 0
    for v in range(len(tau)):
        if labels[v] is not None:
            continue
        k += 1
        w = tau[v]
        if tau[w] != v:
            raise NotInvolution(f"vertex {v} is not in an orbit of size 1 or 2")
        if w == v:
            labels[v] = frozenset({Label(k, False), Label(k, True)})
            continue
        first, second = v, w
        if color is not None and color(w) == BLACK:
            first, second = w, v
        labels[first] = frozenset({Label(k, False)})
        labels[second] = frozenset({Label(k, True)})
    return InvolutiveLabeling(host, tuple(labels), colors)


def labeling_from_involution(ext):
    """Involutive labeling of ``H^sq`` encoding the square extension ``ext``.

    Raises :class:`NotInvolution` unless ``ext`` squares to the identity.
    """
    if not ext.is_involution:
        raise NotInvolution("the square extension is not an involution")
    return labeling_from_orbits(ext.square, ext.action, ext.colors)


@dataclass(frozen=True)
class LabelingCheck:
    valid: bool
    clause: str = None
    detail: str = ""

    def __bool__(self):
        return self.valid


def simple_adjacency(m):
    adj = [set() for _ in range(m.num_vertices)]
    for d in m.darts:
        u, v = m.vertex_of[d], m.vertex_of[m.alpha[d]]
        if u != v:
            adj[u].add(v)
    return adj


def verify_involutive_labeling(host, labels, colors=None):
    """Check clauses (i)-(iv) of an involutive labeling from scratch.

    ``host`` is a squares graph (``DerivedMap``) or any map; ``labels`` maps
    vertex indices to iterables of :class:`Label`.  When ``colors`` gives the
    black/white class of each vertex of the incidence graph under ``host``,
    black vertices must also carry labels opposite to white ones (clause
    ``"color"``).  Returns a :class:`LabelingCheck` naming the first
    violated clause.
    """
    hmap = host.map if isinstance(host, derived.DerivedMap) else host
    n = hmap.num_vertices
    items = labels.items() if isinstance(labels, dict) else enumerate(labels)
    lab = {}
    for v, s in items:
        if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < n:
            raise UnknownVertex(f"{v!r} is not a vertex of the host")
        lab[v] = frozenset(s)
    for v in range(n):
        s = lab.setdefault(v, frozenset())
        if len(s) not in (1, 2):
            return LabelingCheck(False, "i", f"vertex {v} has {len(s)} labels")
    for v in range(n):
        if len(lab[v]) == 2:
            a, b = sorted(lab[v])
            if a.index != b.index or a.bar == b.bar:
                return LabelingCheck(False, "ii", f"vertex {v} carries two unpaired labels")
    owner = {}
    for v in range(n):
        for x in lab[v]:
            if x in owner:
                return LabelingCheck(False, "iii", f"label {x} on vertices {owner[x]} and {v}")
            owner[x] = v
    for x in owner:
        if x.partner not in owner:
            return LabelingCheck(False, "iv", f"label {x} has no partner {x.partner}")
    adj = simple_adjacency(hmap)
    for x, u in owner.items():
        pu = owner[x.partner]
        for y, w in owner.items():
            if (w in adj[u]) != (owner[y.partner] in adj[pu]):
                return LabelingCheck(False, "iv", f"edge status of ({x}, {y}) differs from ({x.partner}, {y.partner})")
    if colors is not None:
        color = square_color_function(host, colors)
        for v in range(n):
            cv = color(v)
            if cv is None:
                continue
            for x in lab[v]:
                if color(owner[x.partner]) == cv:
                    return LabelingCheck(False, "color", f"vertex {v} and its partner share colour {cv}")
    return LabelingCheck(True)


# -- dualities acting on I(G) ---------------------------------------------


def induced_incidence_automorphism(w, inc):
    """The colour-swapping automorphism of ``I(G)`` induced by a duality of ``G``."""
    m = w.map
    psi = w.morphism.psi
    out = [0] * (2 * m.dart_count)
    for c in m.darts:
        t = m.phi[psi[c]] if w.morphism.preserving else psi[c]
        out[2 * c] = 2 * t + 1
        out[2 * c + 1] = 2 * t
    return MapMorphism(inc.map, inc.map, tuple(out), w.morphism.orientation, MorphismKind.AUTOMORPHISM)


def fixed_square_cells(w):
    """Cells of ``G`` whose ``I(G)^sq`` vertex the duality fixes.

    Returns ``[("corner", c), ...] + [("edge", e), ...]``; black/white
    vertices are never fixed by a duality.
    """
    return [("corner", c) for c in w.fixed_corners()] + [("edge", e) for e in w.fixed_edges()]


@dataclass(frozen=True, eq=False)
class AntipodalVerdict:
    verdict: bool
    reason: str
    witness: object = None
    labeling: InvolutiveLabeling = None
    extension: SquareExtension = None
    involutive_dualities: int = 0
    dualities: int = 0
    certificate: tuple = ()

    def __bool__(self):
        return self.verdict


def is_antipodally_self_dual(m, with_labeling=True, orientations="both"):
    """Decide antipodal self-duality by searching involutive dualities.

    On success the verdict carries the duality, the square extension of its
    induced automorphism of ``I(m)`` and the involutive labeling of
    ``I(m)^sq`` without fixed vertices.  On failure ``reason`` separates
    "not self-dual" from "self-dual but not antipodal"; in the latter case
    ``certificate`` lists, per involutive duality, one fixed square vertex.
    """
    ws = enumerate_dualities(m, orientations)
    if not ws:
        return AntipodalVerdict(False, NOT_SELF_DUAL)
    involutive = [w for w in ws if w.involutive]
    certificate = []
    for w in involutive:
        fixed = fixed_square_cells(w)
        if fixed:
            certificate.append(fixed[0])
            continue
        ext = labeling = None
        if with_labeling:
            inc = derived.incidence(m)
            ext = square_extension(inc, induced_incidence_automorphism(w, inc))
            labeling = labeling_from_involution(ext)
        return AntipodalVerdict(True, ANTIPODAL, w, labeling, ext, len(involutive), len(ws))
    return AntipodalVerdict(False, SELF_DUAL_NOT_ANTIPODAL, None, None, None,
                            len(involutive), len(ws), tuple(certificate))


# -- raw labeling search (oracle) -----------------------------------------


def edge_multiplicities(m):
    """``mult[u][v]``: number of edges joining distinct vertices ``u`` and ``v``."""
    mult = [{} for _ in range(m.num_vertices)]
    for d in m.darts:
        u, v = m.vertex_of[d], m.vertex_of[m.alpha[d]]
        if u != v:
            mult[u][v] = mult[u].get(v, 0) + 1
    return mult


def search_involution(mult, allowed, fixed_point_free=True, partner_adjacent_ok=True, budget=10**6):
    """Backtracking search for an involutive automorphism of a loopless multigraph.

    ``mult[u]`` maps each neighbour of ``u`` to the number of parallel
    edges; ``allowed(u, w)`` filters partners.  Returns the involution as a
    tuple or ``None``.  Raises :class:`BudgetExceeded` after ``budget``
    search nodes.
    """
    n = len(mult)
    sig = [sorted(a.values()) for a in mult]
    order, seen = [], [False] * n
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        queue = [s]
        while queue:
            u = queue.pop(0)
            order.append(u)
            for x in sorted(mult[u]):
                if not seen[x]:
                    seen[x] = True
                    queue.append(x)
    tau = [-1] * n
    nodes = 0

    def image(x, u, w):
        return w if x == u else (u if x == w else tau[x])

    def consistent(u, w):
        for a, b in ((u, w), (w, u)):
            for x, k in mult[a].items():
                tx = image(x, u, w)
                if tx != -1 and mult[b].get(tx, 0) != k:
                    return False
        return True

    def candidates(u):
        for x in mult[u]:
            if tau[x] != -1:
                return sorted(mult[tau[x]])
        return range(n)

    def rec(i):
        nonlocal nodes
        while i < n and tau[order[i]] != -1:
            i += 1
        if i == n:
            return True
        u = order[i]
        for w in candidates(u):
            if tau[w] != -1 or sig[w] != sig[u]:
                continue
            if w == u and fixed_point_free:
                continue
            if not partner_adjacent_ok and w in mult[u]:
                continue
            if not allowed(u, w) or not consistent(u, w):
                continue
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(f"involution search exceeded {budget} nodes", nodes)
            tau[u], tau[w] = w, u
            if rec(i + 1):
                return True
            tau[u] = tau[w] = -1
        return False

    return tuple(tau) if rec(0) else None


def raw_labeling_search(m, budget=10**6):
    """Search labelings of ``I(m)^sq`` directly, without using dualities.

    Looks for a fixed-point-free involutive automorphism of the squares
    graph (edge multiplicities included) exchanging black and white vertices, which is
    the same thing as an involutive labeling without fixed vertices whose
    black labels are opposite to the white ones.  Returns the labeling or
    ``None``.
    """
    inc = derived.incidence(m)
    sq = derived.square(inc.map)
    colors = tuple(tag for tag, _ in inc.vertex_origin)
    color = square_color_function(sq, colors)
    cols = [color(v) for v in range(sq.map.num_vertices)]

    def allowed(u, w):
        return cols[u] is None or (cols[w] is not None and cols[u] != cols[w])

    tau = search_involution(edge_multiplicities(sq.map), allowed, budget=budget)
    if tau is None:
        return None
    return labeling_from_orbits(sq, tau, colors)


def raw_strong_labeling_search(m, budget=10**6):
    """Involutive colour-swapping labeling of ``I(m)`` with no edge ``{k, ~k}``.

    Independent route to strong involutivity; returns the vertex involution
    of ``I(m)`` or ``None``.
    """
    inc = derived.incidence(m)
    colors = [tag for tag, _ in inc.vertex_origin]

    def allowed(u, w):
        return colors[u] != colors[w]

    return search_involution(edge_multiplicities(inc.map), allowed, partner_adjacent_ok=False, budget=budget)


# -- odd-edge obstruction ---------------------------------------------------


@dataclass(frozen=True)
class ObstructionVerdict:
    verdict: bool
    vertex: int = None
    self_dual: bool = True
    multiplicities: tuple = ()

    @property
    def vacuous(self):
        return not self.self_dual

    def __bool__(self):
        return self.verdict


def corner_multiplicities(m):
    """``counts[v][f]``: number of corners of vertex ``v`` in face ``f``."""
    counts = [[0] * m.num_faces for _ in range(m.num_vertices)]
    for d in m.darts:
        counts[m.vertex_of[d]][m.face_of[d]] += 1
    return counts


def odd_edge_obstruction(m):
    """A black vertex of ``I(m)`` joined to every white vertex an odd number of times.

    Such a vertex rules out antipodal self-duality.  For maps that are not
    self-dual the verdict is still computed but flagged ``vacuous``.
    """
    counts = corner_multiplicities(m)
    sd = is_self_dual(m)
    for v, row in enumerate(counts):
        if all(k % 2 == 1 for k in row):
            return ObstructionVerdict(True, v, sd, tuple(row))
    return ObstructionVerdict(False, None, sd)


__all__ = [
    "ANTIPODAL", "NOT_SELF_DUAL", "SELF_DUAL_NOT_ANTIPODAL", "BLACK", "WHITE", "V_E", "V_F", "V_V",
    "AntipodalVerdict", "InvolutiveLabeling", "Label", "LabelingCheck", "ObstructionVerdict",
    "SquareExtension", "edge_multiplicities", "fixed_square_cells", "induced_incidence_automorphism",
    "is_antipodally_self_dual", "labeling_from_involution", "labeling_from_orbits",
    "lift_to_square", "odd_edge_obstruction", "raw_labeling_search", "raw_strong_labeling_search",
    "search_involution", "square_extension", "verify_involutive_labeling",
]
