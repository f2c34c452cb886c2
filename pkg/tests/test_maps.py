import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import sphere_maps
from support import brute_counts, brute_isomorphic
from sdmaps import CombinatorialMap, Kind, Orientation, automorphisms, build_map, cycle, is_isomorphic, wheel
from sdmaps.errors import Disconnected, InvalidMorphism, InvalidPermutation, NotInvolution, NotSphere
from sdmaps.maps import MapMorphism, MorphismKind, compose, identity


def test_single_edge():
    m = CombinatorialMap([1, 0], [0, 1])
    assert m.counts == (2, 1, 1)
    assert m.euler_characteristic == 2


def test_loop():
    m = CombinatorialMap([1, 0], [1, 0])
    assert m.counts == (1, 1, 2)


@pytest.mark.parametrize("alpha, sigma, exc", [
    ([0, 1], [0, 1], NotInvolution),
    ([1, 0, 2], [0, 1, 2], InvalidPermutation),
    ([1, 1], [0, 1], InvalidPermutation),
    ([1, 0], [0, 0], InvalidPermutation),
    ([1, 0, 3, 2], [0, 1, 2, 3], Disconnected),
    ([], [], InvalidPermutation),
])
def test_invalid_input(alpha, sigma, exc):
    with pytest.raises(exc):
        build_map(alpha, sigma)


def test_torus_rejected_unless_allowed():
    # one vertex, two loops interleaved: the torus
    alpha, sigma = [1, 0, 3, 2], [2, 3, 1, 0]
    with pytest.raises(NotSphere):
        build_map(alpha, sigma)
    m = build_map(alpha, sigma, allow_nonspherical=True)
    assert m.euler_characteristic == 0


def test_wheel_counts_and_degrees():
    m = wheel(5)
    assert m.counts == (6, 10, 6)
    assert sorted(m.degree(v) for v in range(m.num_vertices)) == [3] * 5 + [5]
    assert sorted(len(f) for f in m.faces()) == [3] * 5 + [5]


@given(sphere_maps())
def test_counts_match_brute_orbits(m):
    assert m.counts == brute_counts(m.alpha, m.sigma)
    assert m.euler_characteristic == 2


@given(sphere_maps(), st.randoms(use_true_random=False))
def test_relabel_gives_equal_map(m, rnd):
    perm = list(m.darts)
    rnd.shuffle(perm)
    r = m.relabel(perm)
    assert r == m and hash(r) == hash(m)
    assert r.canonical_code() == m.canonical_code()


@given(sphere_maps())
def test_dual_of_dual_is_isomorphic(m):
    d = m.dual()
    assert d.counts == (m.num_faces, m.num_edges, m.num_vertices)
    assert d.is_dual_of(m)
    assert d.dual() == m


@given(sphere_maps())
def test_mirror_isomorphic_only_by_reversal(m):
    assert is_isomorphic(m, m.mirror(), Orientation.REVERSING)
    assert is_isomorphic(m, m.mirror(), "preserving") == brute_isomorphic(m, m.mirror())


def test_canonical_form_is_fixed_point():
    m = wheel(4)
    c = m.canonical_form()
    assert c.canonical_form().alpha == c.alpha and c.canonical_form().sigma == c.sigma


def test_corner_and_elements():
    m = wheel(3)
    v, f = m.corner(0)
    assert v == m.vertex_of[0] and f == m.face_of[0]
    assert len(m.elements()) == 4 + 6 + 4
    assert len(m.elements(Kind.FACE)) == 4
    with pytest.raises(IndexError):
        m.element(Kind.VERTEX, 4)
    assert str(m.element("edge", 2)) == "e2"


def test_adjacency_counts_multigraph():
    m = cycle(2)
    assert m.adjacency_counts() == {(0, 1): 2}


@pytest.mark.parametrize("m, order", [
    (wheel(3), 24), (wheel(4), 8), (wheel(5), 10), (wheel(6), 12),
    (cycle(1), 4), (cycle(2), 8), (cycle(3), 12), (cycle(5), 20),
])
def test_automorphism_group_orders(m, order):
    auts = automorphisms(m)
    assert len(auts) == order
    assert sum(a.preserving for a in auts) == order // 2
    for a in auts:
        a.check()


def test_compose_and_identity():
    m = wheel(4)
    auts = automorphisms(m)
    ident = identity(m)
    for a in auts[:4]:
        assert compose(a, ident).psi == a.psi
        assert compose(ident, a).psi == a.psi
    a, b = auts[1], auts[-1]
    ab = compose(a, b)
    ab.check()
    assert ab.preserving == (a.preserving == b.preserving)


def test_bad_morphism_detected():
    m = wheel(3)
    psi = list(m.darts)
    psi[0], psi[1] = psi[1], psi[0]
    with pytest.raises(InvalidMorphism):
        MapMorphism(m, m, tuple(psi), Orientation.PRESERVING, MorphismKind.AUTOMORPHISM).check()


def test_element_action_of_rotation_moves_rim():
    m = wheel(5)
    hub = max(range(m.num_vertices), key=m.degree)
    moved = 0
    for a in automorphisms(m):
        act = a.element_action()
        assert act[m.element(Kind.VERTEX, hub)].index == hub
        moved += act[m.element(Kind.VERTEX, 0)].index != 0
    assert moved == 8


def test_random_relabels_keep_automorphism_count():
    rng = random.Random(5)
    m = wheel(4)
    for _ in range(5):
        perm = list(m.darts)
        rng.shuffle(perm)
        assert len(automorphisms(m.relabel(perm))) == 8
