"""Exact curvature values, Gauss-Bonnet, and the Higuchi gap."""

import random
from fractions import Fraction

import pytest

from curvagraph.core import INF, MapError, trace_faces
from curvagraph.curvature import (MINUS_INFINITY_HINT, UnknownDegreeError,
                                  corner_curvature, curvature_report,
                                  enumerate_negative_patterns, face_curvature,
                                  gauss_bonnet, higuchi_gap,
                                  infinite_face_cases, pattern_curvature,
                                  vertex_curvature)
from curvagraph.generators import (line_graph, platonic_solid, pq_ball,
                                   regular_tree)

F = Fraction


def test_corner_values():
    g = pq_ball(4, 4, 3)
    ft = trace_faces(g)
    fid = ft.faces_at(0)[0]
    assert corner_curvature(g, 0, fid, ft) == 0
    t = regular_tree(3, 3)
    ftt = trace_faces(t)
    assert corner_curvature(t, 0, ftt.faces_at(0)[0], ftt) == F(-1, 6)
    # degree 3 against a 43-gon: 1/3 - 1/2 + 1/43 (exact oracle)
    assert F(1, 3) - F(1, 2) + F(1, 43) == F(-37, 258)


def test_vertex_values():
    assert pattern_curvature((3, 7, 43)) == F(-1, 1806)
    assert pattern_curvature((3, 6, INF)) == 0
    assert pattern_curvature((4, 4, INF)) == 0
    g = pq_ball(4, 4, 3)
    assert vertex_curvature(g, 0) == 0
    g73 = pq_ball(7, 3, 3)
    assert vertex_curvature(g73, 0) == F(-1, 6)


def test_vertex_curvature_needs_interior():
    t = regular_tree(3, 2)
    leaf = sorted(t.frontier)[0]
    with pytest.raises(MapError):
        vertex_curvature(t, leaf)


def test_face_values():
    g73 = pq_ball(7, 3, 4)
    ft = trace_faces(g73)
    tri = next(f.id for f in ft if f.complete)
    assert face_curvature(g73, tri, ft) == F(-1, 14)
    g44 = pq_ball(4, 4, 4)
    ft44 = trace_faces(g44)
    sq = next(f.id for f in ft44 if f.complete)
    assert face_curvature(g44, sq, ft44) == 0
    g36 = pq_ball(3, 6, 4)
    ft36 = trace_faces(g36)
    hexes = [f.id for f in ft36 if f.complete]
    assert all(face_curvature(g36, f, ft36) == 0 for f in hexes)


def test_face_curvature_infinite_flag():
    t = regular_tree(3, 3)
    ft = trace_faces(t)
    assert face_curvature(t, 0, ft) is MINUS_INFINITY_HINT
    ln = line_graph(4)
    assert face_curvature(ln, 0, trace_faces(ln)) == 0


def test_face_curvature_incomplete_error():
    g = pq_ball(3, 7, 2)   # no complete heptagon yet
    ft = trace_faces(g)
    with pytest.raises(UnknownDegreeError):
        face_curvature(g, 0, ft)


def test_curvature_report_suprema():
    g = pq_ball(7, 3, 4)
    rep = curvature_report(g)
    assert rep.sup_vertex == F(-1, 6)
    assert rep.sup_corner == F(1, 7) - F(1, 2) + F(1, 3)
    assert set(rep.vertex.values()) == {F(-1, 6)}


@pytest.mark.parametrize("p,q", [(7, 3), (3, 7), (4, 5), (4, 4), (3, 6)])
def test_interior_curvature_formula(p, q):
    g = pq_ball(p, q, 3)
    rep = curvature_report(g)
    assert set(rep.vertex.values()) == {F(1) - F(p, 2) + F(p, q)}


def test_gauss_bonnet_examples():
    cube = platonic_solid("cube")
    assert gauss_bonnet(cube, range(8)) == 2
    assert gauss_bonnet(cube, [5]) == 2                  # isolated vertex
    assert gauss_bonnet(cube, [0, 1]) == 2               # one edge
    with pytest.raises(MapError):
        gauss_bonnet(cube, [0, 7])                       # antipodal: disconnected


def test_gauss_bonnet_random_subsets():
    rng = random.Random(7)
    maps = [platonic_solid("cube"), platonic_solid("octahedron"),
            pq_ball(4, 4, 5), pq_ball(7, 3, 4), regular_tree(3, 5)]
    for g in maps:
        verts = list(g.vertices)
        for _ in range(20):
            W = {rng.choice(verts)}
            for _ in range(rng.randint(0, 14)):
                options = sorted({w for u in W for w in g.neighbors(u)
                                  if w not in W})
                if not options:
                    break
                W.add(rng.choice(options))
            assert gauss_bonnet(g, W) == 2


def test_higuchi_gap_on_maps():
    assert higuchi_gap(pq_ball(7, 3, 4)).status == "ok"
    assert higuchi_gap(pq_ball(7, 3, 4)).sup == F(-1, 6)
    assert higuchi_gap(pq_ball(4, 4, 4)).status == "not-applicable"
    t = regular_tree(3, 4)
    assert higuchi_gap(t).status == "ok"


def test_enumeration_window():
    hits = enumerate_negative_patterns(max_n=6, max_l=50)
    assert hits == [((3, 7, 43), F(-1, 1806))]


def test_infinite_face_cases():
    cases = infinite_face_cases(max_l=50)
    assert cases["deg5_four_finite"]["max"] == F(-1, 6)
    assert cases["deg4_333"]["value"] == 0
    assert cases["deg4_l3_gt3"]["max"] == F(-1, 12)
    assert cases["deg3_zero"]["holds"]
    assert cases["deg3_l2_gt6"]["max"] == F(-1, 42)
    assert cases["deg3_l1_ge4"]["max"] == F(-1, 20)
    assert all(v["holds"] for v in cases.values())


def test_line_graph_is_flat():
    ln = line_graph(5)
    rep = curvature_report(ln)
    assert set(rep.vertex.values()) == {F(0)}
    for (v, fid), val in rep.corner.items():
        assert val == 0
