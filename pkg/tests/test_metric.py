"""Cut locus, admissibility, sphere enumeration, bigons, and growth."""

import math
from fractions import Fraction

import pytest

from curvagraph.core import FaithfulnessError, MapError, ball, trace_faces
from curvagraph.generators import platonic_solid, pq_ball, regular_tree
from curvagraph.metric import (boundary_face_cycle, check_admissibility,
                               cut_locus, growth_check, minimal_bigons,
                               outer_walk, sphere_enumeration)


def test_cut_locus_cube():
    cube = platonic_solid("cube")
    assert cut_locus(cube, 0, 3) == {7}     # the antipodal vertex


def test_cut_locus_empty_on_nonpositive():
    assert cut_locus(regular_tree(3, 6), 0, 4) == set()
    assert cut_locus(pq_ball(7, 3, 6), 0, 5) == set()
    assert cut_locus(pq_ball(4, 4, 6), 0, 5) == set()


def test_cut_locus_horizon_guard():
    t = regular_tree(3, 4)
    with pytest.raises(FaithfulnessError):
        cut_locus(t, 0, 4)
    assert cut_locus(t, 0, 3) == set()


def test_outer_walk_and_boundary_cycle_square_lattice():
    g = pq_ball(4, 4, 5)
    ft = trace_faces(g)
    region = set(ball(g, 0, 1).ball(1))
    walk = outer_walk(g, region)
    assert walk is not None
    assert {g.tail(h) for h in walk} == region
    cycle = boundary_face_cycle(g, ft, region)
    assert len(cycle) == 12
    assert len(set(cycle)) == 12


def test_sphere_enumeration_cyclic():
    g = pq_ball(7, 3, 6)
    ft = trace_faces(g)
    enum = sphere_enumeration(g, 0, 4, ft)
    b = ball(g, 0, 4)
    for n in range(1, 5):
        level = enum.level(n)
        assert sorted(level) == sorted(b.sphere(n))
        bdry = set(ft.boundary_faces(b.ball(n)))
        for i, v in enumerate(level):
            w = level[(i + 1) % len(level)]
            common = set(ft.faces_at(v)) & set(ft.faces_at(w)) & bdry
            assert common, (n, v, w)
    assert not enum.notes


def test_admissibility_passes_on_tilings():
    for p, q in [(7, 3), (4, 4), (4, 5)]:
        g = pq_ball(p, q, 6)
        rep = check_admissibility(g, 0, 4)
        assert rep.all_ok(), (p, q, rep.violations)
    t = regular_tree(3, 8)
    assert check_admissibility(t, 0, 6).all_ok()


def test_admissibility_fails_on_octahedron():
    octa = platonic_solid("octahedron")
    rep = check_admissibility(octa, 0, 2)
    assert not rep.ok["p2"]
    level, vertex, count = rep.violations["p2"][0]
    assert count == 4    # the antipode sees the whole equator


def test_admissibility_horizon_guard():
    g = pq_ball(7, 3, 4)
    with pytest.raises(FaithfulnessError):
        check_admissibility(g, 0, 4)


def test_bigons_square_lattice():
    g = pq_ball(4, 4, 6)
    bigons = minimal_bigons(g, 2, roots=[0])
    assert len(bigons) == 4            # one per quadrant square
    assert all(b.interior == () for b in bigons)


def test_bigons_tree_has_none():
    t = regular_tree(3, 6)
    assert minimal_bigons(t, 4, roots=[0, 1, 2, 3]) == []


def test_bigons_heptagonal_empty_interiors():
    g = pq_ball(7, 3, 7)
    roots = ball(g, 0, 2).ball(2)
    bigons = minimal_bigons(g, 4, roots=roots)
    assert bigons
    assert all(b.interior == () for b in bigons)


def test_bigons_octahedron_contrast():
    octa = platonic_solid("octahedron")
    bigons = minimal_bigons(octa, 2)
    nonempty = [b for b in bigons if b.interior]
    assert nonempty
    assert all(len(b.interior) == 1 for b in nonempty)


def test_growth_heptagonal():
    g = pq_ball(7, 3, 7)
    rep = growth_check(g, 0, 6)
    assert rep.lower_factor == Fraction(1, 2)
    assert rep.sphere_sizes == (1, 7, 21, 56, 147, 385, 1008)
    assert rep.all_ok()
    assert rep.mu_in_window()
    assert math.isclose(rep.mu_bounds[0], math.log(1.5))
    assert math.isclose(rep.mu_bounds[1], math.log(6))


def test_growth_tree_exact_counts():
    t = regular_tree(3, 9)
    rep = growth_check(t, 0, 8)
    assert rep.lower_factor == 1     # q = inf, kappa = -1/2
    for n in range(1, 9):
        assert rep.sphere_sizes[n] == 3 * 2 ** (n - 1)
        assert rep.sphere_sizes[n] == rep.ball_sizes[n - 1] + 2
    assert rep.all_ok()
    # the finite-n estimate approaches log(p-1) = log 2 from above
    assert rep.mu_estimate > rep.mu_bounds[1]
    assert rep.mu_estimate - rep.mu_bounds[1] < 0.06


def test_growth_preconditions():
    with pytest.raises(MapError):
        growth_check(pq_ball(4, 4, 5), 0, 4)      # flat: kappa not < 0
