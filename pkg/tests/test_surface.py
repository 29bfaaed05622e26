import pytest

from cyclecomplex.errors import Disconnected, GenusZero, OrientationConflict, UnpairedSide
from cyclecomplex.surface import (
    build_surface,
    fundamental_cycles,
    genus,
    homology_basis,
    one_vertex_torus,
    standard_surface,
    standard_symplectic_matrix,
    walk_intersection,
)


def test_one_vertex_torus_counts(torus):
    assert torus.num_vertices == 1
    assert torus.num_edges == 3
    assert torus.num_triangles == 2
    assert torus.euler_characteristic == 0
    assert genus(torus) == 1


def test_genus2_octagon_counts(genus2):
    # fan-triangulated octagon: V=1, E=9, F=6, chi=-2
    assert genus2.num_triangles == 6
    assert genus2.num_edges == 9
    assert genus2.num_vertices == 1
    assert genus2.euler_characteristic == -2
    assert genus(genus2) == 2


def test_genus3_counts(genus3):
    assert genus3.euler_characteristic == -4
    assert genus(genus3) == 3


def test_triangulation_edge_count_relation():
    for g in (1, 2, 3):
        s = standard_surface(g)
        assert 2 * s.num_edges == 3 * s.num_triangles
        assert genus(s) == (2 - s.euler_characteristic) // 2


def test_self_gluing_rejected():
    with pytest.raises(OrientationConflict):
        build_surface(2, [((0, 0), (0, 0)), ((0, 1), (1, 1)), ((0, 2), (1, 2)), ((1, 0), (0, 0))])


def test_unpaired_side_rejected():
    with pytest.raises(UnpairedSide):
        build_surface(2, [((0, 0), (1, 0)), ((0, 1), (1, 1))])


def test_double_gluing_rejected():
    with pytest.raises(UnpairedSide):
        build_surface(2, [((0, 0), (1, 0)), ((0, 0), (1, 1)), ((0, 1), (1, 2)), ((0, 2), (1, 2))])


def test_disconnected_rejected():
    # two tori side by side
    gl = [((0, s), (1, s)) for s in range(3)] + [((2, s), (3, s)) for s in range(3)]
    with pytest.raises(Disconnected):
        build_surface(4, gl)


def test_sphere_has_no_basis():
    # two triangles glued as a pillowcase: sphere
    sphere = build_surface(
        2, [((0, 0), (1, 2)), ((0, 1), (1, 1)), ((0, 2), (1, 0))]
    )
    assert sphere.euler_characteristic == 2
    with pytest.raises(GenusZero):
        homology_basis(sphere)


def test_fundamental_cycles_count():
    for g in (1, 2, 3):
        s = standard_surface(g)
        assert len(fundamental_cycles(s)) == 2 * g


def _intersection_matrix(surface, walks):
    return [[walk_intersection(surface, a, b) for b in walks] for a in walks]


def test_torus_basis_symplectic(torus):
    basis = homology_basis(torus)
    assert len(basis) == 2
    assert _intersection_matrix(torus, basis) == standard_symplectic_matrix(1)


def test_genus2_basis_symplectic(genus2):
    basis = homology_basis(genus2)
    assert len(basis) == 4
    assert _intersection_matrix(genus2, basis) == standard_symplectic_matrix(2)


def test_genus3_basis_symplectic(genus3):
    basis = homology_basis(genus3)
    assert _intersection_matrix(genus3, basis) == standard_symplectic_matrix(3)


def test_basis_deterministic(genus2):
    assert homology_basis(genus2) == homology_basis(genus2)


def test_basis_walks_are_closed(genus2):
    # consecutive steps must share a vertex: check via end bookkeeping
    surf = genus2
    for walk in homology_basis(surf):
        n = len(walk)
        for i in range(n):
            e1, d1 = walk[i]
            e2, d2 = walk[(i + 1) % n]
            p1, s1 = surf.edge_slots[e1]
            p2, s2 = surf.edge_slots[e2]
            head1 = surf.vertex_of_corner[s1 if d1 == 1 else p1]
            tail2 = surf.vertex_of_corner[p2 if d2 == 1 else s2]
            assert head1 == tail2
