"""Combinatorial maps on the sphere.

A map with ``m`` edges lives on the darts ``0 .. 2m-1``.  ``alpha`` pairs the
two darts of each edge and ``sigma`` sends a dart to the next dart
counterclockwise around its origin vertex.  Faces are the cycles of
``phi = sigma o alpha`` (``phi[d] == sigma[alpha[d]]``); each face cycle
walks the boundary with the face on its right.

A dart ``d`` also names the *corner* at its origin vertex lying in the face
``face_of[d]``: the angular sector between ``sigma^-1(d)`` and ``d``.
"""

import itertools
from dataclasses import dataclass
from enum import Enum

from . import kernels
from .errors import (
    Disconnected,
    InvalidMorphism,
    InvalidPermutation,
    NotInvolution,
    NotSphere,
)


class Kind(str, Enum):
    VERTEX = "vertex"
    EDGE = "edge"
    FACE = "face"


class Orientation(str, Enum):
    PRESERVING = "preserving"
    REVERSING = "reversing"


class MorphismKind(str, Enum):
    AUTOMORPHISM = "automorphism"
    ISOMORPHISM = "isomorphism"
    DUALITY = "duality"


_uids = itertools.count()


@dataclass(frozen=True, order=True)
class ElementRef:
    kind: Kind
    index: int
    owner: int

    def __str__(self):
        return f"{self.kind.value[0]}{self.index}"


def invert(perm):
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    return tuple(inv)


def _check_permutation(perm, n, name):
    if len(perm) != n:
        raise InvalidPermutation(f"{name} has length {len(perm)}, expected {n}")
    seen = [False] * n
    for x in perm:
        if not 0 <= x < n or seen[x]:
            raise InvalidPermutation(f"{name} is not a permutation of 0..{n - 1}")
        seen[x] = True


class CombinatorialMap:
    """A connected map given by its edge involution and vertex rotation.

    Instances are immutable.  Equality and hashing use the canonical form,
    so two maps compare equal when an orientation-preserving relabelling of
    darts carries one onto the other.
    """

    __slots__ = (
        "alpha", "sigma", "phi", "uid", "name",
        "vertex_of", "edge_of", "face_of",
        "num_vertices", "num_edges", "num_faces",
        "_sigma_inv", "_phi_inv", "_canon", "_dual", "_dual_source", "_edge_cycles",
    )

    def __init__(self, alpha, sigma, allow_nonspherical=False, name=None):
        alpha = tuple(int(x) for x in alpha)
        sigma = tuple(int(x) for x in sigma)
        n = len(alpha)
        if n == 0 or n % 2:
            raise InvalidPermutation(f"dart count must be positive and even, got {n}")
        _check_permutation(alpha, n, "alpha")
        _check_permutation(sigma, n, "sigma")
        for d in range(n):
            if alpha[d] == d or alpha[alpha[d]] != d:
                raise NotInvolution(f"alpha is not a fixed-point-free involution at dart {d}")
        if kernels.traversal_code(alpha, sigma, 0) is None:
            raise Disconnected("sigma and alpha do not act transitively on darts")

        self.alpha = alpha
        self.sigma = sigma
        self.phi = tuple(sigma[alpha[d]] for d in range(n))
        self.uid = next(_uids)
        self.name = name
        self.vertex_of, self.num_vertices = kernels.orbit_labels(sigma)
        self.face_of, self.num_faces = kernels.orbit_labels(self.phi)
        self.edge_of, self.num_edges = kernels.orbit_labels(alpha)
        self._sigma_inv = None
        self._phi_inv = None
        self._canon = None
        self._dual = None
        self._dual_source = None
        self._edge_cycles = None
        if not allow_nonspherical and self.euler_characteristic != 2:
            raise NotSphere(f"Euler characteristic is {self.euler_characteristic}, not 2")

    # -- basic data ------------------------------------------------------

    @property
    def dart_count(self):
        return len(self.alpha)

    @property
    def darts(self):
        return range(len(self.alpha))

    @property
    def euler_characteristic(self):
        return self.num_vertices - self.num_edges + self.num_faces

    @property
    def counts(self):
        """``(V, E, F)``."""
        return (self.num_vertices, self.num_edges, self.num_faces)

    @property
    def sigma_inv(self):
        if self._sigma_inv is None:
            self._sigma_inv = invert(self.sigma)
        return self._sigma_inv

    @property
    def phi_inv(self):
        if self._phi_inv is None:
            self._phi_inv = invert(self.phi)
        return self._phi_inv

    def _cycles(self, perm, labels, count):
        out = [None] * count
        for d in range(len(perm)):
            k = labels[d]
            if out[k] is None:
                cyc = [d]
                e = perm[d]
                while e != d:
                    cyc.append(e)
                    e = perm[e]
                out[k] = tuple(cyc)
        return out

    def vertices(self):
        """Dart cycles of the vertices, each starting at its smallest dart."""
        return self._cycles(self.sigma, self.vertex_of, self.num_vertices)

    def faces(self):
        """Dart cycles of the faces (``phi`` order), smallest dart first."""
        return self._cycles(self.phi, self.face_of, self.num_faces)

    def edges(self):
        if self._edge_cycles is None:
            self._edge_cycles = tuple(self._cycles(self.alpha, self.edge_of, self.num_edges))
        return list(self._edge_cycles)

    def endpoints(self, e):
        d = self._edge_cycles[e][0] if self._edge_cycles is not None else self.edges()[e][0]
        return self.vertex_of[d], self.vertex_of[self.alpha[d]]

    def degree(self, v):
        return sum(1 for d in self.darts if self.vertex_of[d] == v)

    def corner(self, d):
        """``(vertex, face)`` indices of the corner named by dart ``d``."""
        return self.vertex_of[d], self.face_of[d]

    def count(self, kind):
        return {Kind.VERTEX: self.num_vertices, Kind.EDGE: self.num_edges,
                Kind.FACE: self.num_faces}[Kind(kind)]

    def element(self, kind, index):
        kind = Kind(kind)
        if not 0 <= index < self.count(kind):
            raise IndexError(f"{kind.value} index {index} out of range")
        return ElementRef(kind, index, self.uid)

    def elements(self, kind=None):
        kinds = [Kind(kind)] if kind is not None else list(Kind)
        return [ElementRef(k, i, self.uid) for k in kinds for i in range(self.count(k))]

    def adjacency_counts(self):
        """Multiset of edges as a dict ``{(u, v): multiplicity}`` with u <= v."""
        out = {}
        for d in self.darts:
            if d < self.alpha[d]:
                u, v = sorted((self.vertex_of[d], self.vertex_of[self.alpha[d]]))
                out[(u, v)] = out.get((u, v), 0) + 1
        return out

    # -- transformations -------------------------------------------------

    def relabel(self, perm):
        """Rename dart ``d`` to ``perm[d]``."""
        n = self.dart_count
        _check_permutation(perm, n, "relabelling")
        alpha = [0] * n
        sigma = [0] * n
        for d in range(n):
            alpha[perm[d]] = perm[self.alpha[d]]
            sigma[perm[d]] = perm[self.sigma[d]]
        return CombinatorialMap(alpha, sigma, allow_nonspherical=True, name=self.name)

    def mirror(self):
        """The same map seen from the other side of the sphere."""
        return CombinatorialMap(self.alpha, self.sigma_inv, allow_nonspherical=True,
                                name=self.name and f"mirror({self.name})")

    def dual(self):
        """The geometric dual on the same darts: rotation ``phi^-1``.

        Dart ``d`` of the dual crosses the edge of ``d`` and starts at the face
        ``face_of[d]``, so dual vertices are exactly the faces of ``self``.
        The dual of the dual is ``self`` relabelled by ``alpha``.
        """
        if self._dual is None:
            dual = CombinatorialMap(self.alpha, self.phi_inv, allow_nonspherical=True,
                                    name=self.name and f"dual({self.name})")
            dual._dual_source = self
            self._dual = dual
        return self._dual

    def is_dual_of(self, other):
        return self.alpha == other.alpha and self.sigma == other.phi_inv

    # -- canonical form --------------------------------------------------

    def canonical_code(self):
        """Lexicographically least traversal code over all root darts."""
        if self._canon is None:
            self._canon = min(kernels.traversal_code(self.alpha, self.sigma, r) for r in self.darts)
        return self._canon

    def canonical_form(self):
        code = self.canonical_code()
        n = self.dart_count
        return CombinatorialMap(code[n:], code[:n], allow_nonspherical=True, name=self.name)

    def __eq__(self, other):
        if not isinstance(other, CombinatorialMap):
            return NotImplemented
        return self.dart_count == other.dart_count and self.canonical_code() == other.canonical_code()

    def __hash__(self):
        return hash(self.canonical_code())

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        v, e, f = self.counts
        return f"<CombinatorialMap{label} V={v} E={e} F={f}>"


def build_map(alpha, sigma, allow_nonspherical=False, name=None):
    """Validate permutation data and return the map.

    Raises :class:`NotInvolution`, :class:`Disconnected` or
    :class:`NotSphere` (the last unless ``allow_nonspherical``).
    """
    return CombinatorialMap(alpha, sigma, allow_nonspherical=allow_nonspherical, name=name)


def euler_characteristic(m):
    return m.euler_characteristic


# -- morphisms -------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class MapMorphism:
    """A dart bijection ``psi`` from ``source`` to ``target``.

    ``psi`` commutes with ``alpha``; it conjugates ``sigma`` to the target
    rotation when preserving and to its inverse when reversing.  A duality is
    a morphism whose target is ``source.dual()``.
    """

    source: CombinatorialMap
    target: CombinatorialMap
    psi: tuple
    orientation: Orientation
    kind: MorphismKind

    def check(self):
        src, tgt, psi = self.source, self.target, self.psi
        if sorted(psi) != list(range(src.dart_count)) or tgt.dart_count != src.dart_count:
            raise InvalidMorphism("psi is not a dart bijection")
        rot = tgt.sigma if self.orientation is Orientation.PRESERVING else tgt.sigma_inv
        for d in src.darts:
            if psi[src.alpha[d]] != tgt.alpha[psi[d]]:
                raise InvalidMorphism(f"psi does not commute with alpha at dart {d}")
            if psi[src.sigma[d]] != rot[psi[d]]:
                raise InvalidMorphism(f"psi does not respect the rotation at dart {d}")
        if (self.kind is MorphismKind.DUALITY) != tgt.is_dual_of(src):
            raise InvalidMorphism("kind 'duality' must match target == dual(source)")
        return self

    @property
    def preserving(self):
        return self.orientation is Orientation.PRESERVING

    def cell_action(self):
        """Images of the cells of ``source``.

        Returns a :class:`CellAction`.  For dualities the images are written
        back in ``source``'s own cells through the vertex/face exchange, so
        vertices go to faces and faces to vertices.
        """
        return cell_action(self)

    def element_action(self):
        return element_action(self)

    def __repr__(self):
        return (f"MapMorphism({self.kind.value}, {self.orientation.value}, "
                f"psi={list(self.psi)})")


@dataclass(frozen=True)
class CellAction:
    """Action of a morphism on vertices, edges, faces and corners.

    Each list maps a source index to ``(kind, index)`` in the target (for
    dualities: in the source itself).  Corners are indexed by dart.
    """

    vertex: tuple
    edge: tuple
    face: tuple
    corner: tuple

    def flat(self, m):
        """Encode as one permutation of ``V + E + F + corners`` slots of ``m``."""
        off = {Kind.VERTEX: 0, Kind.EDGE: m.num_vertices, Kind.FACE: m.num_vertices + m.num_edges}
        out = [off[k] + i for k, i in self.vertex]
        out += [off[k] + i for k, i in self.edge]
        out += [off[k] + i for k, i in self.face]
        base = m.num_vertices + m.num_edges + m.num_faces
        out += [base + c for c in self.corner]
        return tuple(out)


def cell_action(mor):
    src, tgt, psi = mor.source, mor.target, mor.psi
    pres = mor.orientation is Orientation.PRESERVING
    first = {}
    for d in src.darts:
        first.setdefault((Kind.VERTEX, src.vertex_of[d]), d)
        first.setdefault((Kind.EDGE, src.edge_of[d]), d)
        first.setdefault((Kind.FACE, src.face_of[d]), d)
    V, E, F = Kind.VERTEX, Kind.EDGE, Kind.FACE
    if mor.kind is MorphismKind.DUALITY:
        # target cells re-read in src: dual vertex(x) = face(x), dual face(x) = vertex(alpha x)
        a = src.alpha
        vert = tuple((F, src.face_of[psi[first[(V, i)]]]) for i in range(src.num_vertices))
        edge = tuple((E, src.edge_of[psi[first[(E, i)]]]) for i in range(src.num_edges))
        if pres:
            face = tuple((V, src.vertex_of[a[psi[first[(F, i)]]]]) for i in range(src.num_faces))
            corner = tuple(src.phi[psi[d]] for d in src.darts)
        else:
            face = tuple((V, src.vertex_of[psi[first[(F, i)]]]) for i in range(src.num_faces))
            corner = tuple(psi[d] for d in src.darts)
    else:
        vert = tuple((V, tgt.vertex_of[psi[first[(V, i)]]]) for i in range(src.num_vertices))
        edge = tuple((E, tgt.edge_of[psi[first[(E, i)]]]) for i in range(src.num_edges))
        if pres:
            face = tuple((F, tgt.face_of[psi[first[(F, i)]]]) for i in range(src.num_faces))
            corner = tuple(psi)
        else:
            ta = tgt.alpha
            face = tuple((F, tgt.face_of[ta[psi[first[(F, i)]]]]) for i in range(src.num_faces))
            corner = tuple(tgt.sigma[psi[d]] for d in src.darts)
    return CellAction(vert, edge, face, corner)


def element_action(mor):
    """Bijection ``ElementRef -> ElementRef`` induced by ``mor``.

    Raises :class:`InvalidMorphism` when the morphism invariants fail.
    """
    mor.check()
    act = cell_action(mor)
    owner = mor.source.uid if mor.kind is MorphismKind.DUALITY else mor.target.uid
    out = {}
    for kind, images in ((Kind.VERTEX, act.vertex), (Kind.EDGE, act.edge), (Kind.FACE, act.face)):
        for i, (k, j) in enumerate(images):
            out[ElementRef(kind, i, mor.source.uid)] = ElementRef(k, j, owner)
    return out


def _morphism_kind(m, n):
    if n.is_dual_of(m):
        return MorphismKind.DUALITY
    if n is m or (n.alpha == m.alpha and n.sigma == m.sigma):
        return MorphismKind.AUTOMORPHISM
    return MorphismKind.ISOMORPHISM


def _orientations(orientations):
    if isinstance(orientations, Orientation):
        return [orientations]
    orientations = str(getattr(orientations, "value", orientations))
    if orientations == "both":
        return [Orientation.PRESERVING, Orientation.REVERSING]
    return [Orientation(orientations)]


def iter_isomorphisms(m, n, orientations="both"):
    """Yield isomorphisms ``m -> n`` lazily, preserving class first."""
    if (m.dart_count, m.num_vertices, m.num_faces) != (n.dart_count, n.num_vertices, n.num_faces):
        return
    kind = _morphism_kind(m, n)
    root = 0
    for orient in _orientations(orientations):
        rot = n.sigma if orient is Orientation.PRESERVING else n.sigma_inv
        for b in n.darts:
            psi = kernels.extend_morphism(m.alpha, m.sigma, n.alpha, rot, root, b)
            if psi is not None:
                yield MapMorphism(m, n, tuple(psi), orient, kind)


def enumerate_isomorphisms(m, n, orientations="both"):
    """Every isomorphism from ``m`` to ``n`` in the requested classes.

    One source dart is anchored to each target dart in each orientation
    class and propagated along ``sigma``/``alpha``; the anchor is accepted
    when the propagation is globally consistent.  The list is ordered by
    orientation (preserving first) then by the image of the anchor dart.
    """
    return list(iter_isomorphisms(m, n, orientations))


def automorphisms(m, orientations="both"):
    return enumerate_isomorphisms(m, m, orientations)


def is_isomorphic(m, n, orientations="both"):
    return next(iter_isomorphisms(m, n, orientations), None) is not None


def compose(f, g):
    """``f o g`` for morphisms with ``g.target`` equal to ``f.source`` dart-for-dart."""
    if g.target.alpha != f.source.alpha or g.target.sigma != f.source.sigma:
        raise InvalidMorphism("cannot compose: g.target is not f.source")
    psi = tuple(f.psi[g.psi[d]] for d in g.source.darts)
    orient = Orientation.PRESERVING if f.preserving == g.preserving else Orientation.REVERSING
    return MapMorphism(g.source, f.target, psi, orient, _morphism_kind(g.source, f.target))


def identity(m):
    return MapMorphism(m, m, tuple(m.darts), Orientation.PRESERVING, MorphismKind.AUTOMORPHISM)
