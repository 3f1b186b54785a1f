"""Half-edge map structure, face tracing, and ball decompositions."""

import pytest

from curvagraph.core import (INF, CombinatorialMap, FaithfulnessError,
                             MapError, ball, induced_submap, trace_faces)
from curvagraph.generators import platonic_solid, pq_ball, regular_tree
from curvagraph.io import parse_map


def single_edge():
    return parse_map("v 0: 1\nv 1: 0\n")


def path3():
    return parse_map("v 0: 1\nv 1: 0 2\nv 2: 1\n")


def loop_plus_edge():
    # one loop at 0 (half-edges 0,1) and one plain edge 0-2 (2,3)
    return parse_map("h 0 0 1\nh 1 0 0\nh 2 0 3\nh 3 2 2\n")


def test_vertex_degrees():
    g = pq_ball(4, 4, 3)
    assert g.vertex_degree(0) == 4
    p = path3()
    assert p.vertex_degree(0) == 1      # terminal vertex
    assert p.vertex_degree(1) == 2
    lp = loop_plus_edge()
    assert lp.vertex_degree(0) == 3     # loop counts twice


def test_unknown_vertex():
    with pytest.raises(MapError):
        path3().rotation(99)


def test_twin_involution_enforced():
    with pytest.raises(MapError):
        CombinatorialMap({0: (0,), 1: (1,)}, {0: 0, 1: 1})
    with pytest.raises(MapError):
        CombinatorialMap({0: (0, 0), 1: (1,)}, {0: 1, 1: 0})


def test_disconnected_rejected():
    with pytest.raises(MapError):
        CombinatorialMap({0: (0,), 1: (1,), 2: (2,), 3: (3,)},
                         {0: 1, 1: 0, 2: 3, 3: 2})


def test_trace_cube():
    cube = platonic_solid("cube")
    ft = trace_faces(cube)
    assert len(ft) == 6
    assert all(f.degree == 4 for f in ft)
    assert len(cube.vertices) - cube.n_edges() + len(ft) == 2


def test_trace_single_edge():
    ft = trace_faces(single_edge())
    assert len(ft) == 1
    assert ft.faces[0].degree == 2
    assert ft.corners_at(0) == {0: 1}
    assert ft.corners_at(1) == {0: 1}


def test_trace_path3_degenerate():
    ft = trace_faces(path3())
    assert len(ft) == 1
    assert ft.faces[0].degree == 4
    assert ft.corners_at(1) == {0: 2}   # middle vertex visited twice


def test_orbit_partition_and_corner_sums():
    for g in (platonic_solid("octahedron"), pq_ball(7, 3, 3), path3()):
        ft = trace_faces(g)
        assert sum(len(f.walk) for f in ft) == 2 * g.n_edges()
        for v in g.vertices:
            assert sum(ft.corners_at(v).values()) == g.vertex_degree(v)
        for f in ft:
            if f.complete:
                assert sum(ft.corners_at(v)[f.id]
                           for v in ft.vertices_of(f.id)) == f.degree


def test_incomplete_faces_hinted():
    g = pq_ball(7, 3, 2)
    ft = trace_faces(g)
    assert {f.degree for f in ft} == {3}
    t = regular_tree(3, 3)
    ft = trace_faces(t)
    assert all(not f.complete and f.degree == INF for f in ft)


def test_ball_layers():
    t = regular_tree(3, 3)
    assert ball(t, 0, 2).sphere_sizes() == (1, 3, 6)
    g = pq_ball(4, 4, 3)
    assert ball(g, 0, 2).sphere_sizes()[1:] == (4, 8)
    cube = platonic_solid("cube")
    assert ball(cube, 0, 3).sphere_sizes() == (1, 3, 3, 1)


def test_ball_faithfulness_guard():
    t = regular_tree(3, 3)
    with pytest.raises(FaithfulnessError):
        ball(t, 0, 4)
    # radius == frontier depth is allowed
    ball(t, 0, 3)


def test_boundary_faces_of_ball():
    g = pq_ball(4, 4, 5)
    b = ball(g, 0, 3)
    bdry = b.boundary_faces(1)
    ft = b.faces()
    complete_bdry = [f for f in bdry if ft.face(f).complete]
    assert len(complete_bdry) == 12     # 4 squares at the center + 8 beyond


def test_induced_submap_inherits_rotations():
    cube = platonic_solid("cube")
    sub = induced_submap(cube, [0, 1, 2, 3])
    assert set(sub.vertices) == {0, 1, 2, 3}
    ft = trace_faces(sub)
    assert sum(len(f.walk) for f in ft) == 2 * sub.n_edges()
    euler = len(sub.vertices) - sub.n_edges() + len(ft)
    assert euler == 2
