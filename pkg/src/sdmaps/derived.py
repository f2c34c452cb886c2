"""Dual, medial, vertex-face incidence and squares graph of a map.

Every construction is a rewrite of dart permutations, indexed by the
source darts (corners), so no geometry is needed.  Dart layouts, for a
source dart ``c``:

* incidence ``I(G)``: ``2c`` is the corner edge at the black end (the
  vertex of ``c``), ``2c + 1`` at the white end (the face of ``c``).
* medial: ``2c`` is the corner edge at the midpoint of the edge of ``c``,
  ``2c + 1`` at the midpoint of the edge of ``sigma^-1(c)``.
* squares graph: ``4c`` / ``4c + 1`` are the primal half-edge of ``c`` at
  its vertex / midpoint end, ``4c + 2`` / ``4c + 3`` the dual half-edge
  of ``c`` at its face / midpoint end.
"""

from dataclasses import dataclass

from .maps import CombinatorialMap, ElementRef, Kind

BLACK = "black"
WHITE = "white"
V_V = "V_V"
V_E = "V_E"
V_F = "V_F"


@dataclass(frozen=True, eq=False)
class DerivedMap:
    """A derived map plus the origin of each of its cells in ``source``.

    ``vertex_origin[i]`` is ``(tag, ElementRef)`` for derived vertex ``i``;
    tags are ``black``/``white`` for the incidence graph, ``V_V``/``V_E``/
    ``V_F`` for the squares graph, and the source kind otherwise.
    ``edge_origin`` and ``face_origin`` follow the same pattern; corner
    origins are given as ``("corner", dart)``.
    """

    map: CombinatorialMap
    source: CombinatorialMap
    construction: str
    vertex_origin: tuple
    edge_origin: tuple
    face_origin: tuple

    def provenance(self, ref):
        table = {Kind.VERTEX: self.vertex_origin, Kind.EDGE: self.edge_origin,
                 Kind.FACE: self.face_origin}[ref.kind]
        return table[ref.index]

    def vertices_tagged(self, tag):
        return [i for i, (t, _) in enumerate(self.vertex_origin) if t == tag]

    @property
    def counts(self):
        return self.map.counts


def _unwrap(m):
    return m.map if isinstance(m, DerivedMap) else m


def _origin_table(count, labels, darts, fn):
    out = [None] * count
    for d in darts:
        k = labels[d]
        if out[k] is None:
            out[k] = fn(d)
    return tuple(out)


def dual(m):
    """The dual map; dual vertices are the faces of ``m`` on the same darts."""
    m = _unwrap(m)
    d = m.dual()
    ref = lambda kind, i: ElementRef(kind, i, m.uid)  # noqa: E731
    vo = _origin_table(d.num_vertices, d.vertex_of, d.darts, lambda x: (Kind.FACE.value, ref(Kind.FACE, m.face_of[x])))
    eo = _origin_table(d.num_edges, d.edge_of, d.darts, lambda x: (Kind.EDGE.value, ref(Kind.EDGE, m.edge_of[x])))
    fo = _origin_table(d.num_faces, d.face_of, d.darts,
                       lambda x: (Kind.VERTEX.value, ref(Kind.VERTEX, m.vertex_of[m.alpha[x]])))
    return DerivedMap(d, m, "dual", vo, eo, fo)


def incidence_permutations(m):
    n = m.dart_count
    alpha = [0] * (2 * n)
    sigma = [0] * (2 * n)
    for c in range(n):
        alpha[2 * c], alpha[2 * c + 1] = 2 * c + 1, 2 * c
        sigma[2 * c] = 2 * m.sigma[c]
        sigma[2 * c + 1] = 2 * m.phi_inv[c] + 1
    return alpha, sigma


def incidence(m):
    """Vertex-face incidence graph: one edge per corner, black/white vertices."""
    m = _unwrap(m)
    alpha, sigma = incidence_permutations(m)
    h = CombinatorialMap(alpha, sigma, name=m.name and f"I({m.name})")
    ref = lambda kind, i: ElementRef(kind, i, m.uid)  # noqa: E731

    def vorigin(x):
        c = x // 2
        if x % 2 == 0:
            return (BLACK, ref(Kind.VERTEX, m.vertex_of[c]))
        return (WHITE, ref(Kind.FACE, m.face_of[c]))

    vo = _origin_table(h.num_vertices, h.vertex_of, h.darts, vorigin)
    eo = _origin_table(h.num_edges, h.edge_of, h.darts, lambda x: ("corner", x // 2))
    fo = _origin_table(h.num_faces, h.face_of, h.darts,
                       lambda x: (Kind.EDGE.value, ref(Kind.EDGE, m.edge_of[_incidence_face_dart(m, x)])))
    return DerivedMap(h, m, "incidence", vo, eo, fo)


def _incidence_face_dart(m, x):
    # the face right of (c, black) surrounds edge(sigma^-1 c); right of (c, white) surrounds edge(c)
    c = x // 2
    return m.sigma_inv[c] if x % 2 == 0 else c


def medial_permutations(m):
    n = m.dart_count
    alpha = [0] * (2 * n)
    sigma = [0] * (2 * n)
    for c in range(n):
        alpha[2 * c], alpha[2 * c + 1] = 2 * c + 1, 2 * c
        sigma[2 * c] = 2 * m.sigma[m.alpha[c]] + 1
        sigma[2 * c + 1] = 2 * m.sigma_inv[c]
    return alpha, sigma


def medial(m):
    """Medial map: a vertex per edge of ``m``, an edge per corner."""
    m = _unwrap(m)
    alpha, sigma = medial_permutations(m)
    h = CombinatorialMap(alpha, sigma, name=m.name and f"med({m.name})")
    ref = lambda kind, i: ElementRef(kind, i, m.uid)  # noqa: E731
    vo = _origin_table(h.num_vertices, h.vertex_of, h.darts,
                       lambda x: (Kind.EDGE.value, ref(Kind.EDGE, m.edge_of[x // 2 if x % 2 == 0 else m.sigma_inv[x // 2]])))
    eo = _origin_table(h.num_edges, h.edge_of, h.darts, lambda x: ("corner", x // 2))

    def forigin(x):
        # phi keeps the parity of medial darts: even darts circle vertex(c), odd darts face(c)
        c = x // 2
        if x % 2 == 0:
            return (Kind.VERTEX.value, ref(Kind.VERTEX, m.vertex_of[c]))
        return (Kind.FACE.value, ref(Kind.FACE, m.face_of[c]))

    fo = _origin_table(h.num_faces, h.face_of, h.darts, forigin)
    return DerivedMap(h, m, "medial", vo, eo, fo)


def square_permutations(m):
    n = m.dart_count
    alpha = [0] * (4 * n)
    sigma = [0] * (4 * n)
    for d in range(n):
        b = 4 * d
        alpha[b], alpha[b + 1] = b + 1, b
        alpha[b + 2], alpha[b + 3] = b + 3, b + 2
        sigma[b] = 4 * m.sigma[d]
        sigma[b + 2] = 4 * m.phi_inv[d] + 2
        sigma[b + 1] = b + 3
        sigma[b + 3] = 4 * m.alpha[d] + 1
    return alpha, sigma


@dataclass(frozen=True)
class SquareFace:
    corner: int
    incidence_diagonal: tuple  # (V_V vertex, V_F vertex) of the squares graph
    intersecting_diagonal: tuple  # (V_E vertex, V_E vertex)


def square(m):
    """Squares graph: ``G`` and ``G*`` overlaid and split at edge crossings."""
    m = _unwrap(m)
    alpha, sigma = square_permutations(m)
    h = CombinatorialMap(alpha, sigma, name=m.name and f"sq({m.name})")
    ref = lambda kind, i: ElementRef(kind, i, m.uid)  # noqa: E731

    def vorigin(x):
        d, r = divmod(x, 4)
        if r == 0:
            return (V_V, ref(Kind.VERTEX, m.vertex_of[d]))
        if r == 2:
            return (V_F, ref(Kind.FACE, m.face_of[d]))
        return (V_E, ref(Kind.EDGE, m.edge_of[d]))

    vo = _origin_table(h.num_vertices, h.vertex_of, h.darts, vorigin)

    def eorigin(x):
        d, r = divmod(x, 4)
        return ("primal" if r < 2 else "dual", d)

    eo = _origin_table(h.num_edges, h.edge_of, h.darts, eorigin)
    fo = [None] * h.num_faces
    for c in m.darts:
        fo[h.face_of[4 * c]] = ("corner", c)
    return DerivedMap(h, m, "square", vo, eo, tuple(fo))


def square_faces(sq):
    """Diagonals of each face of a squares graph, indexed by face."""
    m, h = sq.source, sq.map
    out = []
    for _, c in sq.face_origin:
        vv = h.vertex_of[4 * c]
        vf = h.vertex_of[4 * c + 2]
        e1 = h.vertex_of[4 * c + 1]
        e2 = h.vertex_of[4 * m.sigma_inv[c] + 1]
        out.append(SquareFace(c, (vv, vf), (e1, e2)))
    return out
