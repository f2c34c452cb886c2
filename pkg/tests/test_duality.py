import pytest
from hypothesis import given

from conftest import sphere_maps
from sdmaps import (
    cycle, dual_group, ear, enumerate_dualities, is_involutive, is_self_dual, is_strongly_involutive, pancake, wheel,
)
from sdmaps.census import planar_maps
from sdmaps.duality import composition_cells


@pytest.mark.parametrize("m, dualities, involutive, strong", [
    (wheel(3), 24, 10, True),
    (wheel(4), 8, 4, False),
    (wheel(5), 10, 6, True),
    (wheel(6), 12, 6, False),
    (cycle(2), 8, 4, False),
    (ear(3), 6, 4, False),
    (ear(4), 8, 6, True),
    (pancake(3, 2), 6, 4, True),
    (pancake(4, 2), 8, 4, False),
])
def test_duality_counts(m, dualities, involutive, strong):
    ws = enumerate_dualities(m)
    assert len(ws) == dualities
    assert sum(w.involutive for w in ws) == involutive
    assert is_strongly_involutive(m).verdict is strong


@pytest.mark.parametrize("m", [cycle(1), cycle(3), cycle(5)])
def test_not_self_dual(m):
    assert not is_self_dual(m)
    assert enumerate_dualities(m) == []
    v = is_strongly_involutive(m)
    assert not v.verdict and not v.self_dual


def test_dual_group_is_twice_automorphisms():
    s = dual_group(wheel(4))
    # 8 automorphisms, 8 dualities
    assert (s.automorphisms, s.dualities, s.order) == (8, 8, 16)
    assert s.index_two
    assert not dual_group(cycle(3)).index_two


def test_witness_sends_vertices_to_faces():
    m = wheel(4)
    for w in enumerate_dualities(m):
        images = sorted(w.vertex_image(v) for v in range(m.num_vertices))
        assert images == list(range(m.num_faces))
        if is_involutive(w):
            for v in range(m.num_vertices):
                assert w.face_image(w.vertex_image(v)) == v
            for c in m.darts:
                assert w.corner_image(w.corner_image(c)) == c


def test_involutive_composition_is_identity():
    m = wheel(5)
    for w in enumerate_dualities(m):
        sq = composition_cells(m, w.cells, w.cells)
        ident = all(j == i for i, (_, j) in enumerate(sq.vertex)) and all(j == c for c, j in enumerate(sq.corner))
        assert ident == w.involutive


def test_orientation_classes_split():
    m = wheel(5)
    pres = enumerate_dualities(m, "preserving")
    rev = enumerate_dualities(m, "reversing")
    assert len(pres) + len(rev) == len(enumerate_dualities(m))
    assert all(w.morphism.preserving for w in pres)
    assert not any(w.morphism.preserving for w in rev)


@given(sphere_maps())
def test_self_dual_implies_even_edges(m):
    if is_self_dual(m):
        assert m.num_edges % 2 == 0
        assert m.num_vertices == m.num_faces


def test_strong_implies_no_vertex_on_image_face():
    for m in planar_maps(4):
        v = is_strongly_involutive(m)
        if v.verdict:
            w = v.witness
            for c in m.darts:
                assert w.vertex_image(m.vertex_of[c]) != m.face_of[c]
