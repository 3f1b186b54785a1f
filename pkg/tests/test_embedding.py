"""The tessellating-supergraph construction and its five properties."""

from fractions import Fraction

import pytest

from curvagraph.core import MapError, ball, trace_faces
from curvagraph.curvature import curvature_report, gauss_bonnet
from curvagraph.embedding import (closing_parameter, embed,
                                  serialize_embedding, verify_properties)
from curvagraph.generators import (line_graph, pq_ball, regular_tree)
from curvagraph.io import parse_map

F = Fraction


def test_closing_parameter_examples():
    t = regular_tree(3, 4)
    assert closing_parameter(t, [0], F(1)) == 6          # max{6, 0, 5}
    assert closing_parameter(t, [0], F(5)) == 6          # floor case
    t7 = regular_tree(3, 7)
    W = ball(t7, 0, 2).ball(2)                           # diameter 4
    assert closing_parameter(t7, W, F(1, 10)) == 50      # max{6, 8, 50}


def test_closing_parameter_errors():
    t = regular_tree(3, 4)
    with pytest.raises(MapError):
        closing_parameter(t, [], F(1))
    with pytest.raises(ValueError):
        closing_parameter(t, [0], F(0))


def test_embed_identity_on_flat_lattice():
    g = pq_ball(4, 4, 6)
    res = embed(g, [0], F(1, 2), 4)
    assert res.added_trees == []
    assert res.closed_faces == []
    assert len(res.supergraph.vertices) == len(g.vertices)
    assert verify_properties(res).all_ok()


def test_embed_line_graph_step1():
    ln = line_graph(12)
    res = embed(ln, [0, 1], F(1, 2000), 8)
    assert res.closing_parameter == 8000
    assert res.closed_faces == []                        # far below R_eps
    per_host = dict(res.added_trees)
    assert set(per_host.values()) == {2}                 # two infinigons each
    assert res.supergraph.vertex_degree(0) == 4          # |v'| = |v| + 2
    assert verify_properties(res).all_ok()
    assert res.warnings                                  # two-ended complement


def test_embed_tree_acceptance_parameters():
    t = regular_tree(3, 12)
    W = ball(t, 0, 2).ball(2)
    res = embed(t, W, F(1, 2000), 30)
    assert res.effective_horizon < 30                    # clamped to the map
    assert res.added_trees == []                         # kappa_V < 0
    assert res.closed_faces == []                        # R_eps = 10000
    assert verify_properties(res).all_ok()


def test_embed_tree_with_closures():
    t = regular_tree(3, 11)
    res = embed(t, [0], F(1, 2), 9)
    assert res.closing_parameter == 10
    assert res.closed_faces
    assert min(c.level for c in res.closed_faces) == 5   # 2n+1 > 10
    ft = trace_faces(res.supergraph)
    polys = [f for f in ft if f.complete]
    assert polys
    assert all(f.degree >= max(6, 1 / res.epsilon) for f in polys)
    assert verify_properties(res).all_ok()


def test_embed_line_with_closures():
    ln = line_graph(12)
    res = embed(ln, [0, 1], F(1, 2), 8)
    assert res.closed_faces
    sup = res.supergraph
    ft = trace_faces(sup)
    polys = [f for f in ft if f.complete]
    assert all(f.degree >= 6 for f in polys)
    # step-1 tree vertices keep degree 3 until a closing chord lands on them
    tree_verts = [v for v in sup.interior_vertices()
                  if v not in set(ln.vertices)]
    assert tree_verts
    assert {sup.vertex_degree(v) for v in tree_verts} <= {3, 4}
    assert verify_properties(res).all_ok()
    # the surgery preserved planarity: Gauss-Bonnet still exact
    W = set(ball(sup, 0, 3).ball(3))
    assert gauss_bonnet(sup, W) == 2


def test_embed_curvature_targets():
    ln = line_graph(10)
    res = embed(ln, [0, 1], F(1, 2000), 6)
    rep = curvature_report(res.supergraph)
    # line vertices drop to -1, tree vertices sit at -1/2; sup is -1/6 on corners
    assert rep.sup_vertex <= min(F(0), F(0) + res.epsilon)
    assert rep.sup_corner <= 0


def test_embed_rejects_enclosed_pocket():
    g = pq_ball(4, 4, 6)
    ring = sorted(set(ball(g, 0, 2).ball(2)) - {0})
    with pytest.raises(MapError, match="pocket"):
        embed(g, ring, F(1, 2), 3)


def test_embed_rejects_positive_curvature():
    from curvagraph.generators import platonic_solid
    cube = platonic_solid("cube")
    with pytest.raises(MapError, match="positive"):
        embed(cube, [0], F(1, 2), 2)


def test_serialize_embedding_round_trip():
    ln = line_graph(8)
    res = embed(ln, [0, 1], F(1, 2), 5)
    text = serialize_embedding(res)
    assert "map 0 0" in text
    again = parse_map(text)
    assert len(again.vertices) == len(res.supergraph.vertices)
