"""Duality isomorphisms, self-duality and (strong) involutivity."""

from dataclasses import dataclass, field

from .maps import Kind, automorphisms, element_action, iter_isomorphisms


@dataclass(frozen=True, eq=False)
class DualityWitness:
    """A duality ``G -> G*`` with its action on the cells of ``G``.

    ``involutive`` means the action squares to the identity on vertices,
    edges, faces and corners; ``strongly_involutive`` additionally requires
    that no vertex lies on the boundary of its image face.
    """

    morphism: object
    cells: object = field(repr=False)
    involutive: bool
    strongly_involutive: bool

    @property
    def element_map(self):
        return element_action(self.morphism)

    @property
    def map(self):
        return self.morphism.source

    def vertex_image(self, v):
        """Index of the face ``sigma(v)``."""
        return self.cells.vertex[v][1]

    def face_image(self, f):
        return self.cells.face[f][1]

    def edge_image(self, e):
        return self.cells.edge[e][1]

    def corner_image(self, c):
        return self.cells.corner[c]

    def fixed_edges(self):
        return [e for e, (_, j) in enumerate(self.cells.edge) if j == e]

    def fixed_corners(self):
        return [c for c, j in enumerate(self.cells.corner) if j == c]


def _involutive(m, cells):
    vf = all(cells.face[cells.vertex[v][1]][1] == v for v in range(m.num_vertices))
    fv = all(cells.vertex[cells.face[f][1]][1] == f for f in range(m.num_faces))
    ee = all(cells.edge[cells.edge[e][1]][1] == e for e in range(m.num_edges))
    cc = all(cells.corner[cells.corner[c]] == c for c in m.darts)
    return vf and fv and ee and cc


def _strong(m, cells):
    # v must not lie on the boundary of the face sigma(v)
    for c in m.darts:
        if cells.vertex[m.vertex_of[c]][1] == m.face_of[c]:
            return False
    return True


def make_witness(mor):
    m = mor.source
    cells = mor.cell_action()
    inv = _involutive(m, cells)
    return DualityWitness(mor, cells, inv, inv and _strong(m, cells))


def iter_dualities(m, orientations="both"):
    for mor in iter_isomorphisms(m, m.dual(), orientations):
        yield make_witness(mor)


def enumerate_dualities(m, orientations="both"):
    """All dualities of ``m`` in the given orientation classes, sorted by dart image.

    With both classes the list is empty exactly when ``m`` is not self-dual.
    """
    if m.num_vertices != m.num_faces:
        return []
    ws = list(iter_dualities(m, orientations))
    ws.sort(key=lambda w: (w.morphism.psi, w.morphism.orientation.value))
    return ws


def is_self_dual(m, orientations="both"):
    if m.num_vertices != m.num_faces:
        return False
    return next(iter_isomorphisms(m, m.dual(), orientations), None) is not None


@dataclass(frozen=True)
class DualGroupSummary:
    automorphisms: int
    dualities: int

    @property
    def order(self):
        return self.automorphisms + self.dualities

    @property
    def index_two(self):
        """Automorphisms form an index-2 subgroup (true iff self-dual)."""
        return self.dualities == self.automorphisms and self.dualities > 0


def dual_group(m):
    return DualGroupSummary(len(automorphisms(m)), len(enumerate_dualities(m)))


def is_involutive(w):
    return w.involutive


@dataclass(frozen=True)
class StrongVerdict:
    verdict: bool
    witness: object = None
    self_dual: bool = True


def is_strongly_involutive(m, orientations="both"):
    """First strongly involutive duality in canonical order, if any."""
    ws = enumerate_dualities(m, orientations)
    for w in ws:
        if w.strongly_involutive:
            return StrongVerdict(True, w, True)
    return StrongVerdict(False, None, bool(ws))


def composition_cells(m, a, b):
    """Cell action of ``a`` after ``b`` (both self-actions on ``m``)."""
    from .maps import CellAction

    def img(action, kind, i):
        return {Kind.VERTEX: action.vertex, Kind.EDGE: action.edge, Kind.FACE: action.face}[kind][i]

    def comp(table):
        return tuple(img(a, k, i) for k, i in table)

    return CellAction(comp(b.vertex), comp(b.edge), comp(b.face), tuple(a.corner[c] for c in b.corner))
