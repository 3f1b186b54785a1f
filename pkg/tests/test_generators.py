"""Generated maps: degrees, face degrees, counts, and map invariants."""

import pytest

from curvagraph.core import INF, MapError, ball, trace_faces
from curvagraph.generators import (GeneratorSpec, generate, increasing_tree,
                                   increasing_tree_degree, line_graph,
                                   octahedron_hub, platonic_solid, pq_ball,
                                   regular_tree)


@pytest.mark.parametrize("p,q,r", [(7, 3, 4), (3, 7, 5), (4, 5, 4),
                                   (4, 4, 5), (3, 6, 5), (6, 3, 4),
                                   (5, 4, 4), (5, 5, 3)])
def test_pq_ball_structure(p, q, r):
    g = pq_ball(p, q, r)
    assert g.is_simple()
    ft = trace_faces(g)
    assert all(g.vertex_degree(v) == p for v in g.interior_vertices())
    assert all(f.degree == q for f in ft if f.complete)
    assert all(f.degree == q for f in ft if not f.complete)  # hinted
    # half-edge partition
    assert sum(len(f.walk) for f in ft) == 2 * g.n_edges()
    # BFS ball of the stated radius exists and the frontier starts at r
    b = ball(g, 0, r)
    assert len(b.spheres) == r + 1


def test_square_lattice_sphere_sizes():
    g = pq_ball(4, 4, 6)
    assert ball(g, 0, 6).sphere_sizes() == (1, 4, 8, 12, 16, 20, 24)


def test_heptagonal_degree7_spheres():
    g = pq_ball(7, 3, 5)
    assert ball(g, 0, 5).sphere_sizes() == (1, 7, 21, 56, 147, 385)


def test_pq_deterministic():
    a = pq_ball(4, 5, 4)
    b = pq_ball(4, 5, 4)
    assert a.vertices == b.vertices
    assert all(a.neighbors(v) == b.neighbors(v) for v in a.vertices)


def test_pq_rejects_bad_parameters():
    with pytest.raises(ValueError):
        pq_ball(2, 5, 3)
    with pytest.raises(ValueError):
        pq_ball(4, 4, 0)
    with pytest.raises(MapError):
        pq_ball(3, 3, 4)    # spherical: the disk closes up


def test_pq_infinite_faces_is_tree():
    g = generate(GeneratorSpec("pq-tessellation", p=3, q=INF, radius=2))
    assert ball(g, 0, 2).sphere_sizes() == (1, 3, 6)


def test_regular_tree_counts():
    t = regular_tree(3, 2)
    assert len(t.vertices) == 10
    assert len(t.frontier) == 6
    assert t.face_hint == INF
    t4 = regular_tree(4, 3)
    assert ball(t4, 0, 3).sphere_sizes() == (1, 4, 12, 36)


def test_platonic_solids():
    for name, v, e, f in [("tetrahedron", 4, 6, 4), ("cube", 8, 12, 6),
                          ("octahedron", 6, 12, 8)]:
        g = platonic_solid(name)
        ft = trace_faces(g)
        assert (len(g.vertices), g.n_edges(), len(ft)) == (v, e, f)
        assert len(g.frontier) == 0
    with pytest.raises(ValueError):
        platonic_solid("icosahedron")


def test_octahedron_hub():
    g = octahedron_hub(2)
    assert len(g.vertices) == 10
    assert [g.vertex_degree(v) for v in range(6)] == [4, 4, 4, 4, 5, 5]
    # hubs are adjacent to the full equator cycle
    assert set(g.neighbors(4)) >= {0, 1, 2, 3}
    assert set(g.neighbors(5)) >= {0, 1, 2, 3}
    # pendant rays end in terminal vertices
    assert sorted(g.vertex_degree(v) for v in range(6, 10)) == [1, 1, 2, 2]


def test_line_graph():
    g = line_graph(4)
    assert set(g.vertices) == set(range(-4, 5))
    assert g.frontier == frozenset({-4, 4})
    assert all(g.vertex_degree(v) == 2 for v in g.interior_vertices())
    assert len(trace_faces(g)) == 1


def test_increasing_tree():
    t = increasing_tree(3)
    assert ball(t, 0, 3).sphere_sizes() == (1, 3, 9, 36)
    assert t.vertex_degree(0) == 3
    layer1 = ball(t, 0, 1).sphere(1)
    assert all(t.vertex_degree(v) == 4 for v in layer1)
    assert increasing_tree_degree(5) == 8


def test_generate_dispatch():
    assert len(generate(GeneratorSpec("platonic-solid", solid="cube")).vertices) == 8
    assert len(generate(GeneratorSpec("regular-tree", p=3, radius=2)).vertices) == 10
    assert len(generate(GeneratorSpec("line", radius=2)).vertices) == 5
    with pytest.raises(ValueError):
        generate(GeneratorSpec("torus"))
