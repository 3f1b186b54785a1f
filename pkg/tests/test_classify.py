"""Degeneracies, extended edges, and the tessellation classification."""

from curvagraph.core import trace_faces
from curvagraph.classify import (classify, degenerate_faces, degenerate_pairs,
                                 extended_edges, nonpositive_side_conditions)
from curvagraph.curvature import curvature_report
from curvagraph.generators import (line_graph, octahedron_hub,
                                   platonic_solid, pq_ball, regular_tree)
from curvagraph.io import parse_map


def path3():
    return parse_map("v 0: 1\nv 1: 0 2\nv 2: 1\n")


def parallel_edges(k):
    lines = []
    for i in range(k):
        lines.append("h %d 0 %d" % (i, k + i))
    for i in reversed(range(k)):
        lines.append("h %d 1 %d" % (k + i, i))
    return parse_map("\n".join(lines) + "\n")


def test_degenerate_faces():
    assert degenerate_faces(path3()) == {0}
    assert degenerate_faces(platonic_solid("cube")) == set()
    g = pq_ball(7, 3, 4)
    assert degenerate_faces(g) == set()


def test_degenerate_pairs_four_parallel_edges():
    m = parallel_edges(4)
    ft = trace_faces(m)
    assert sorted(f.degree for f in ft) == [2, 2, 2, 2]
    pairs = degenerate_pairs(m, ft)
    # the two non-adjacent face pairs meet in the two hub vertices only
    assert len(pairs) == 2


def test_three_parallel_edges_have_no_degenerate_pair():
    # every pair of the three bigon faces shares an edge, hence meets in one
    # component; a degenerate pair needs at least four parallel edges
    m = parallel_edges(3)
    assert degenerate_pairs(m) == set()


def test_degenerate_pairs_clean_maps():
    assert degenerate_pairs(platonic_solid("cube")) == set()
    chord = parse_map("v 0: 1 3 2\nv 1: 2 0\nv 2: 0 3 1\nv 3: 2 0\n")
    assert degenerate_pairs(chord) == set()   # 4-cycle with a chord


def test_extended_edges():
    ln = line_graph(5)
    ext = extended_edges(ln)
    assert len(ext) == 1
    assert ext[0].regular is True
    assert len(ext[0].path) == 11
    assert extended_edges(regular_tree(3, 3)) == []
    assert extended_edges(pq_ball(7, 3, 3)) == []


def test_classify_examples():
    assert classify(pq_ball(7, 3, 4)).cls == "strictly-locally-tessellating"
    assert classify(regular_tree(3, 4)).cls == "strictly-locally-tessellating"
    assert classify(line_graph(5)).cls == "locally-tessellating"
    assert classify(platonic_solid("cube")).cls == "tessellating"
    assert classify(platonic_solid("octahedron")).cls == "tessellating"


def test_classify_witnesses():
    res = classify(octahedron_hub(2))
    assert res.cls == "other"
    kinds = res.violation_kinds()
    assert "terminal-vertex" in kinds
    assert "degenerate-face" in kinds
    res3 = classify(parallel_edges(3))
    assert "multi-edge" in res3.violation_kinds()
    assert res3.cls == "other"


def test_certified_radius():
    res = classify(pq_ball(4, 4, 5))
    assert res.certified_radius == 4
    assert classify(platonic_solid("cube")).certified_radius is None


def test_side_conditions_nonpositive():
    for g in (pq_ball(4, 4, 4), pq_ball(7, 3, 4)):
        side = nonpositive_side_conditions(g, "corner")
        assert side.applicable
        assert side.all_ok()
    strict = nonpositive_side_conditions(pq_ball(7, 3, 4), "corner")
    assert strict.strict
    assert strict.checks["no-extended-edges"][0]


def test_side_conditions_vacuous_on_terminal_vertex():
    p = path3()
    side = nonpositive_side_conditions(p, "vertex")
    assert not side.applicable
    v, val = side.positive_witness
    assert val > 0


def test_line_graph_side_conditions():
    side = nonpositive_side_conditions(line_graph(5), "vertex")
    assert side.applicable and not side.strict
    assert side.checks["extended-edges-regular"][0]


def test_nonpositive_implies_no_witnesses():
    # desk-scale contrapositive of the structure theorem: certified
    # non-positive curvature forces a clean classification
    for g in (pq_ball(7, 3, 4), pq_ball(3, 7, 4), pq_ball(4, 4, 4),
              regular_tree(3, 4), line_graph(6)):
        rep = curvature_report(g)
        assert rep.sup_corner <= 0
        res = classify(g)
        assert res.cls in ("strictly-locally-tessellating",
                           "locally-tessellating")
        assert not res.witnesses


def test_witnesses_imply_positive_curvature():
    # the path has a degenerate face, so some corner curvature is positive
    p = path3()
    assert classify(p).witnesses
    rep = curvature_report(p)
    assert rep.sup_corner > 0
    oh = octahedron_hub(2)
    assert classify(oh).witnesses
    assert curvature_report(oh).sup_vertex > 0
