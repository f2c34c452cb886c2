"""Generators for wheels, ears, pancakes, adhesions and the named fixtures."""

import json
import math
from dataclasses import dataclass
from importlib import resources

from .errors import BadParameter, FixtureSelfCheckFailed, InvalidCorner, UnknownFixture
from .maps import CombinatorialMap, ElementRef, Kind


def from_rotations(num_vertices, edges, rotations, name=None, allow_nonspherical=False):
    """Build a map from an edge list and per-vertex rotations.

    Edge ``k = (u, v)`` gets dart ``2k`` at ``u`` and ``2k + 1`` at ``v``.
    ``rotations[v]`` lists the darts at ``v`` in counterclockwise order.
    """
    n = 2 * len(edges)
    alpha = [d ^ 1 for d in range(n)]
    sigma = [-1] * n
    for v in range(num_vertices):
        rot = rotations[v]
        for i, d in enumerate(rot):
            sigma[d] = rot[(i + 1) % len(rot)]
    if -1 in sigma:
        raise BadParameter("rotations do not cover every dart")
    return CombinatorialMap(alpha, sigma, allow_nonspherical=allow_nonspherical, name=name)


def from_straight_line(coords, edges, name=None):
    """Rotation system of a straight-line plane drawing.

    Darts at each vertex are sorted counterclockwise by angle.  The caller
    is responsible for the drawing being crossing-free.
    """
    at = [[] for _ in coords]
    for k, (u, v) in enumerate(edges):
        at[u].append(2 * k)
        at[v].append(2 * k + 1)

    def angle(d):
        k, end = divmod(d, 2)
        u, v = edges[k] if end == 0 else edges[k][::-1]
        (x0, y0), (x1, y1) = coords[u], coords[v]
        return math.atan2(y1 - y0, x1 - x0)

    rotations = [sorted(ds, key=angle) for ds in at]
    return from_rotations(len(coords), edges, rotations, name=name)


def _polar(r, t):
    return (r * math.cos(t), r * math.sin(t))


def wheel(n):
    """``n``-cycle plus a hub joined to every cycle vertex."""
    if n < 3:
        raise BadParameter(f"wheel needs n >= 3, got {n}")
    return pancake(n, 1, name=f"W{n}")


def ear(n):
    """``n``-cycle with an ear vertex on each cycle edge and a hub joined to every ear.

    Cycle vertices are ``0..n-1``, the ear on edge ``(i, i+1)`` is ``n + i``
    and the hub is ``2n``.
    """
    if n < 3:
        raise BadParameter(f"ear needs n >= 3, got {n}")
    step = 2 * math.pi / n
    coords = [_polar(2.0, i * step) for i in range(n)]
    # ears strictly inside the chords of the outer cycle
    coords += [_polar(math.cos(math.pi / n), (i + 0.5) * step) for i in range(n)]
    coords.append((0.0, 0.0))
    edges = [(i, (i + 1) % n) for i in range(n)]
    for i in range(n):
        edges += [(i, n + i), ((i + 1) % n, n + i), (n + i, 2 * n)]
    return from_straight_line(coords, edges, name=f"E{n}")


def pancake(n, layers, name=None):
    """``layers`` concentric ``n``-cycles joined radially, innermost to a hub.

    Vertex ``(j - 1) * n + i`` is the ``i``-th vertex of cycle ``j``; the hub
    is the last vertex.  ``pancake(n, 1)`` is the wheel.
    """
    if n < 3 or layers < 1:
        raise BadParameter(f"pancake needs n >= 3 and layers >= 1, got ({n}, {layers})")
    step = 2 * math.pi / n
    coords = [_polar(j + 1.0, i * step) for j in range(layers) for i in range(n)]
    hub = len(coords)
    coords.append((0.0, 0.0))
    edges = []
    for j in range(layers):
        base = j * n
        edges += [(base + i, base + (i + 1) % n) for i in range(n)]
        edges += [(hub if j == 0 else base - n + i, base + i) for i in range(n)]
    return from_straight_line(coords, edges, name=name or f"P{n}^{layers}")


def cycle(n):
    """The ``n``-cycle: two faces of length ``n``."""
    if n < 1:
        raise BadParameter(f"cycle needs n >= 1, got {n}")
    if n == 1:
        return CombinatorialMap([1, 0], [1, 0], name="C1")
    coords = [_polar(1.0, 2 * math.pi * i / n) for i in range(n)]
    return from_straight_line(coords, [(i, (i + 1) % n) for i in range(n)], name=f"C{n}")


def triangle():
    return cycle(3)


# -- adhesion ---------------------------------------------------------------


@dataclass(frozen=True)
class Corner:
    """An occurrence of ``vertex`` on the boundary of ``face``, named by ``dart``."""

    vertex: ElementRef
    face: ElementRef
    dart: int


def corner(m, dart):
    if not 0 <= dart < m.dart_count:
        raise InvalidCorner(f"dart {dart} out of range")
    return Corner(m.element(Kind.VERTEX, m.vertex_of[dart]), m.element(Kind.FACE, m.face_of[dart]), dart)


def corners(m):
    return [corner(m, d) for d in m.darts]


def adhesion(g, where, partner=None):
    """Glue ``g`` and its dual at a corresponding vertex/face pair.

    ``where`` is a :class:`Corner` (or dart) ``c`` of ``g``: its vertex is
    identified with the dual vertex of its face.  The dual copy is drawn
    mirrored, as the antipodal image of ``g`` would be, so its rotation is
    ``phi`` of ``g``.  Darts of ``g`` keep their numbers and dart ``d`` of
    the dual becomes ``d + 2|E(g)|``; the splice puts the dual copy in
    corner ``c`` of ``g`` and ``g`` in corner ``c`` of the dual copy.

    ``partner`` overrides the dual dart used for the splice; it exists to
    build gluings at non-corresponding pairs and is a diagnostic only.
    """
    if isinstance(where, Corner):
        if where.vertex.owner != g.uid or where.face.owner != g.uid:
            raise InvalidCorner("corner belongs to another map")
        c = where.dart
        if (g.vertex_of[c], g.face_of[c]) != (where.vertex.index, where.face.index):
            raise InvalidCorner("corner dart does not realise the vertex-face incidence")
    else:
        c = int(where)
        if not 0 <= c < g.dart_count:
            raise InvalidCorner(f"dart {c} out of range")
    x = c if partner is None else int(partner)
    if not 0 <= x < g.dart_count:
        raise InvalidCorner(f"partner dart {x} out of range")
    n = g.dart_count
    alpha = list(g.alpha) + [n + a for a in g.alpha]
    sigma = list(g.sigma) + [n + s for s in g.phi]
    # splice: sigma^-1(c) -> x* ... phi^-1(x)* -> c
    sigma[g.sigma_inv[c]] = n + x
    sigma[n + g.phi_inv[x]] = c
    return CombinatorialMap(alpha, sigma, name=g.name and f"adh({g.name},{c})")


# -- fixtures ---------------------------------------------------------------

FIXTURES = ("fig3_not_antipodal", "fig4_antipodal_not_strong", "fig6_odd_obstruction")


def load_fixture_document(name):
    if name not in FIXTURES:
        raise UnknownFixture(f"unknown fixture {name!r}; choose from {', '.join(FIXTURES)}")
    text = resources.files("sdmaps.fixtures").joinpath(f"{name}.json").read_text(encoding="utf-8")
    return json.loads(text)


def fixture(name, check=True):
    """Load a named fixture and re-verify the properties it is meant to exhibit."""
    from .io import document_to_map

    m = document_to_map(load_fixture_document(name), name=name)
    if check:
        problems = fixture_problems(name, m)
        if problems:
            raise FixtureSelfCheckFailed(f"{name}: " + "; ".join(problems))
    return m


def fixture_problems(name, m):
    from .antipodality import is_antipodally_self_dual, odd_edge_obstruction
    from .duality import is_self_dual, is_strongly_involutive

    problems = []
    if not is_self_dual(m):
        problems.append("not self-dual")
    antipodal = is_antipodally_self_dual(m).verdict
    if name == "fig3_not_antipodal":
        if antipodal:
            problems.append("antipodally self-dual")
        if is_strongly_involutive(m).verdict:
            problems.append("strongly involutive")
    elif name == "fig4_antipodal_not_strong":
        if not antipodal:
            problems.append("not antipodally self-dual")
        if is_strongly_involutive(m).verdict:
            problems.append("strongly involutive")
    elif name == "fig6_odd_obstruction":
        if not odd_edge_obstruction(m).verdict:
            problems.append("no odd-edge black vertex in I(G)")
    return problems
