from collections import Counter

from hypothesis import given

from conftest import sphere_maps
from support import brute_counts, brute_isomorphic
from sdmaps import Kind, dual, incidence, is_isomorphic, medial, square, wheel
from sdmaps.derived import BLACK, V_E, V_F, V_V, WHITE, square_faces


@given(sphere_maps())
def test_dual_counts_and_origins(m):
    d = dual(m)
    assert d.counts == (m.num_faces, m.num_edges, m.num_vertices)
    assert all(ref.kind is Kind.FACE for _, ref in d.vertex_origin)
    assert sorted(ref.index for _, ref in d.vertex_origin) == list(range(m.num_faces))


@given(sphere_maps())
def test_medial_counts(m):
    h = medial(m)
    v, e, f = m.counts
    assert h.counts == (e, 2 * e, v + f)
    assert brute_counts(h.map.alpha, h.map.sigma) == h.counts
    assert all(h.map.degree(x) == 4 for x in range(h.map.num_vertices))
    tags = Counter(t for t, _ in h.face_origin)
    assert tags == {"vertex": v, "face": f}


@given(sphere_maps())
def test_incidence_is_bipartite_quadrangulation(m):
    h = incidence(m)
    v, e, f = m.counts
    assert h.counts == (v + f, 2 * e, e)
    assert all(len(face) == 4 for face in h.map.faces())
    tag = [t for t, _ in h.vertex_origin]
    assert Counter(tag) == {BLACK: v, WHITE: f}
    for d in h.map.darts:
        assert tag[h.map.vertex_of[d]] != tag[h.map.vertex_of[h.map.alpha[d]]]


@given(sphere_maps())
def test_square_graph_structure(m):
    sq = square(m)
    v, e, f = m.counts
    assert sq.counts == (v + e + f, 4 * e, 2 * e)
    assert Counter(t for t, _ in sq.vertex_origin) == {V_V: v, V_E: e, V_F: f}
    assert all(len(face) == 4 for face in sq.map.faces())
    tag = [t for t, _ in sq.vertex_origin]
    for face in square_faces(sq):
        a, b = face.incidence_diagonal
        assert (tag[a], tag[b]) == (V_V, V_F)
        assert {tag[x] for x in face.intersecting_diagonal} == {V_E}


@given(sphere_maps())
def test_medial_identities(m):
    med = medial(m).map
    assert is_isomorphic(medial(dual(m)).map, med)
    assert is_isomorphic(incidence(m).map.dual(), med, "preserving")
    assert brute_isomorphic(incidence(m).map.dual(), med)


def test_constructions_accept_derived_maps():
    m = wheel(3)
    assert medial(dual(m)).counts == medial(m).counts
    assert square(incidence(m)).counts == (26, 48, 24)


def test_provenance_lookup():
    m = wheel(3)
    inc = incidence(m)
    ref = inc.map.element(Kind.VERTEX, 0)
    tag, origin = inc.provenance(ref)
    assert tag in (BLACK, WHITE) and origin.owner == m.uid
    assert len(inc.vertices_tagged(BLACK)) == 4
    edge_tag, corner = inc.provenance(inc.map.element(Kind.EDGE, 3))
    assert edge_tag == "corner" and 0 <= corner < m.dart_count


def test_wheel3_small_objects():
    w = wheel(3)
    assert medial(w).counts == (6, 12, 8)
    assert incidence(w).counts == (8, 12, 6)
    assert square(w).counts == (14, 24, 12)
