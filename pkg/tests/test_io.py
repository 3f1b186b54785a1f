"""Graph file format: parsing, validation errors, round trips."""

import pytest

from curvagraph.core import INF, trace_faces
from curvagraph.generators import octahedron_hub, platonic_solid, pq_ball
from curvagraph.io import ParseError, parse_map, serialize_map


def test_cube_file_round_trip():
    cube = platonic_solid("cube")
    text = serialize_map(cube)
    again = parse_map(text)
    assert serialize_map(again) == text
    ft = trace_faces(again)
    assert len(again.vertices) == 8
    assert sorted(f.degree for f in ft) == [4] * 6


def test_frontier_and_hint_round_trip():
    g = pq_ball(3, 7, 3)
    text = serialize_map(g)
    assert "facehint: 7" in text
    again = parse_map(text)
    assert again.frontier == g.frontier
    assert again.face_hint == 7
    assert serialize_map(again) == text


def test_inf_hint():
    m = parse_map("v 0: 1\nv 1: 0\nfrontier: 1\nfacehint: inf\n")
    assert m.face_hint == INF
    assert trace_faces(m).faces[0].degree == INF


def test_no_vertices():
    with pytest.raises(ParseError, match="no vertices"):
        parse_map("# nothing here\n")


def test_unpaired_adjacency():
    with pytest.raises(ParseError, match="missing from vertex"):
        parse_map("v 0: 1\nv 1:\n")


def test_unknown_neighbor():
    with pytest.raises(ParseError, match="unknown neighbor"):
        parse_map("v 0: 5\n")


def test_loops_need_h_form():
    with pytest.raises(ParseError, match="loop"):
        parse_map("v 0: 0\n")
    with pytest.raises(ParseError, match="multi-edge"):
        parse_map("v 0: 1 1\nv 1: 0 0\n")


def test_mixed_forms_rejected():
    with pytest.raises(ParseError, match="mixes"):
        parse_map("v 0: 1\nv 1: 0\nh 5 0 6\nh 6 1 5\n")


def test_h_form_multigraph():
    text = "h 0 0 3\nh 1 0 4\nh 2 0 5\nh 5 1 2\nh 4 1 1\nh 3 1 0\n"
    m = parse_map(text)
    assert m.vertex_degree(0) == 3
    assert not m.is_simple()
    assert serialize_map(m).startswith("h 0 0 3")
    assert parse_map(serialize_map(m)).n_edges() == 3


def test_h_form_bad_twin():
    with pytest.raises(ParseError, match="unpaired twin"):
        parse_map("h 0 0 1\n")


def test_comments_and_blank_lines():
    m = parse_map("# a cube edge\n\nv 0: 1   # neighbor list\nv 1: 0\n")
    assert len(m.vertices) == 2


def test_byte_identity_for_generated_maps():
    oh = octahedron_hub(2)
    text = serialize_map(oh)
    assert serialize_map(parse_map(text)) == text


def test_map_lines_ignored():
    m = parse_map("v 0: 1\nv 1: 0\nmap 0 0\nmap 1 1\n")
    assert len(m.vertices) == 2
