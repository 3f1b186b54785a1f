"""Exact-rational curvature of corners, vertices and faces.

All values are ``fractions.Fraction``; the convention 1/|f| = 0 applies to
faces of infinite degree.  Curvature is only defined where the truncation is
faithful: the vertex must be interior and every incident face degree known
(traced or hinted).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple

from .core import (INF, CombinatorialMap, FaceTable, MapError,
                   induced_submap, is_connected_in, trace_faces)

HIGUCHI_GAP = Fraction(-1, 1806)


class UnknownDegreeError(MapError):
    """A face degree needed for curvature is not known on this truncation."""


class _MinusInfinityHint:
    """Face curvature flag: unbounded below as far as the truncation shows."""

    def __repr__(self):
        return "unbounded-negative (hint)"


MINUS_INFINITY_HINT = _MinusInfinityHint()


def _inv_face(degree) -> Fraction:
    if degree is None:
        raise UnknownDegreeError("face degree unknown (truncation too small)")
    if degree == INF:
        return Fraction(0)
    return Fraction(1, int(degree))


def corner_curvature(cmap: CombinatorialMap, v: int, fid: int,
                     faces: Optional[FaceTable] = None) -> Fraction:
    """kappa_C(v, f) = 1/|v| - 1/2 + 1/|f| (with 1/inf = 0)."""
    faces = faces or trace_faces(cmap)
    if fid not in faces.corners_at(v):
        raise MapError("(%r, %r) is not a corner" % (v, fid))
    return Fraction(1, cmap.vertex_degree(v)) - Fraction(1, 2) \
        + _inv_face(faces.degree(fid))


def vertex_curvature(cmap: CombinatorialMap, v: int,
                     faces: Optional[FaceTable] = None) -> Fraction:
    """kappa_V(v) = 1 - |v|/2 + sum over corners of mult/|f|."""
    if not cmap.is_interior(v):
        raise MapError("vertex %r is on the frontier; curvature undefined" % v)
    faces = faces or trace_faces(cmap)
    total = Fraction(1) - Fraction(cmap.vertex_degree(v), 2)
    for fid, mult in faces.corners_at(v).items():
        total += mult * _inv_face(faces.degree(fid))
    return total


def face_curvature(cmap: CombinatorialMap, fid: int,
                   faces: Optional[FaceTable] = None):
    """kappa_F(f) = sum over corners of mult * kappa_C.

    Returns a Fraction for faces of known finite degree whose corner
    vertices are all interior.  For faces of infinite degree the value is
    MINUS_INFINITY_HINT as soon as the materialized boundary shows a vertex
    of degree >= 3 (each such corner contributes <= -1/6, and the infinite
    graph repeats them), and 0 when every materialized boundary vertex has
    degree 2.
    """
    faces = faces or trace_faces(cmap)
    f = faces.face(fid)
    verts = faces.vertices_of(fid)
    if f.degree == INF:
        if any(cmap.vertex_degree(v) >= 3 for v in verts):
            return MINUS_INFINITY_HINT
        return Fraction(0)
    for v in verts:
        if not cmap.is_interior(v):
            raise UnknownDegreeError(
                "face %r has frontier corner %r; curvature incomplete" % (fid, v))
    inv = _inv_face(f.degree)
    total = Fraction(0)
    for v in verts:
        mult = faces.corners_at(v)[fid]
        total += mult * (Fraction(1, cmap.vertex_degree(v)) - Fraction(1, 2) + inv)
    return total


@dataclass
class CurvatureReport:
    """Curvature values over the certified region, with suprema."""
    corner: Dict[Tuple[int, int], Fraction]
    vertex: Dict[int, Fraction]
    face: Dict[int, object]            # Fraction or MINUS_INFINITY_HINT
    sup_corner: Optional[Fraction]
    sup_vertex: Optional[Fraction]
    sup_face: Optional[Fraction]
    skipped_vertices: Tuple[int, ...] = ()

    def vertex_values(self) -> List[Fraction]:
        return sorted(self.vertex.values())


def curvature_report(cmap: CombinatorialMap,
                     faces: Optional[FaceTable] = None) -> CurvatureReport:
    faces = faces or trace_faces(cmap)
    corner: Dict[Tuple[int, int], Fraction] = {}
    vertex: Dict[int, Fraction] = {}
    fvals: Dict[int, object] = {}
    skipped: List[int] = []
    for v in cmap.interior_vertices():
        try:
            vertex[v] = vertex_curvature(cmap, v, faces)
            for fid in faces.corners_at(v):
                corner[(v, fid)] = corner_curvature(cmap, v, fid, faces)
        except UnknownDegreeError:
            skipped.append(v)
    for f in faces:
        try:
            fvals[f.id] = face_curvature(cmap, f.id, faces)
        except UnknownDegreeError:
            continue
    finite_f = [x for x in fvals.values() if isinstance(x, Fraction)]
    return CurvatureReport(
        corner=corner,
        vertex=vertex,
        face=fvals,
        sup_corner=max(corner.values()) if corner else None,
        sup_vertex=max(vertex.values()) if vertex else None,
        sup_face=max(finite_f) if finite_f else None,
        skipped_vertices=tuple(skipped),
    )


def gauss_bonnet(cmap: CombinatorialMap, W: Iterable[int]) -> Fraction:
    """Total curvature of the induced subgraph G_W; equals 2 for finite
    connected W (combinatorial Gauss-Bonnet)."""
    Wset = set(W)
    if not Wset:
        raise MapError("W is empty")
    if not is_connected_in(cmap, Wset):
        raise MapError("W is not connected in the map")
    if len(Wset) == 1:
        # isolated vertex: no corners exist; the formula degenerates and the
        # value 2 is forced if the theorem is to cover |W| = 1
        return Fraction(2)
    sub = induced_submap(cmap, Wset)
    faces = trace_faces(sub)
    total = Fraction(0)
    for v in Wset:
        total += vertex_curvature(sub, v, faces)
    return total


@dataclass
class HiguchiResult:
    status: str                       # ok | not-applicable | violated
    sup: Optional[Fraction]
    witnesses: Tuple[int, ...]        # vertices with kappa_V in (-1/1806, 0)
    nonnegative: Tuple[int, ...] = ()


def higuchi_gap(cmap: CombinatorialMap,
                faces: Optional[FaceTable] = None) -> HiguchiResult:
    """If all interior vertex curvatures are negative, they are <= -1/1806."""
    if not cmap.is_simple():
        raise MapError("higuchi_gap needs a simple map")
    rep = curvature_report(cmap, faces)
    if not rep.vertex:
        raise MapError("no certified vertex curvatures")
    nonneg = tuple(v for v, k in rep.vertex.items() if k >= 0)
    if nonneg:
        return HiguchiResult("not-applicable", rep.sup_vertex, (), nonneg)
    witnesses = tuple(v for v, k in rep.vertex.items() if HIGUCHI_GAP < k < 0)
    status = "violated" if witnesses else "ok"
    return HiguchiResult(status, rep.sup_vertex, witnesses)


# -- exhaustive enumeration of vertex patterns ------------------------------


def pattern_curvature(degrees: Tuple) -> Fraction:
    """kappa_V of a vertex of degree n = len(degrees) whose incident faces
    have the given degrees (INF allowed), all corner multiplicities one."""
    n = len(degrees)
    total = Fraction(1) - Fraction(n, 2)
    for l in degrees:
        total += _inv_face(l)
    return total


def enumerate_negative_patterns(max_n: int = 6, max_l: int = 50):
    """All nondecreasing face-degree vectors (l_1..l_n), l_i in {3..max_l, inf},
    n <= max_n, whose curvature lies in [-1/1806, 0).

    A branch is pruned when even the extreme completions cannot reach the
    window, so the search stays tiny despite the nominal 25M vectors.
    """
    lo = HIGUCHI_GAP
    hits: List[Tuple[Tuple, Fraction]] = []
    values = list(range(3, max_l + 1)) + [INF]

    def best_tail(last, remaining) -> Fraction:
        if last == INF:
            return Fraction(0)
        return Fraction(remaining, int(last))

    def rec(n, prefix, partial):
        remaining = n - len(prefix)
        if remaining == 0:
            k = Fraction(1) - Fraction(n, 2) + partial
            if lo <= k < 0:
                hits.append((tuple(prefix), k))
            return
        base = Fraction(1) - Fraction(n, 2)
        start = prefix[-1] if prefix else 3
        for l in values:
            if start == INF and l != INF:
                continue
            if l != INF and start != INF and l < start:
                continue
            inv = _inv_face(l)
            new_partial = partial + inv
            max_k = base + new_partial + best_tail(l, remaining - 1)
            min_k = base + new_partial
            if max_k < lo or min_k >= 0:
                continue
            rec(n, prefix + [l], new_partial)

    for n in range(1, max_n + 1):
        rec(n, [], Fraction(0))
    return sorted(hits)


def infinite_face_cases(max_l: int = 50) -> Dict[str, Dict]:
    """The extra vertex patterns with one infinite face, with their sharp
    curvature ceilings: (l1..l4,inf) <= -1/6; (3,3,3,inf) = 0;
    (l1,l2,l3,inf), l3 > 3 <= -1/12; (3,6,inf) = (4,4,inf) = 0;
    (l1,l2,inf), l2 > 6 <= -1/42; l1 >= 4, l2 > 4 <= -1/20."""
    out: Dict[str, Dict] = {}

    def scan(vectors, bound):
        best = None
        argmax = []
        for vec in vectors:
            k = pattern_curvature(vec)
            if best is None or k > best:
                best, argmax = k, [vec]
            elif k == best:
                argmax.append(vec)
        return {"bound": bound, "max": best, "argmax": argmax,
                "holds": best is not None and best <= bound}

    out["deg5_four_finite"] = scan(
        [(a, b, c, d, INF)
         for a in range(3, max_l + 1) for b in range(a, max_l + 1)
         for c in range(b, max_l + 1) for d in range(c, max_l + 1)],
        Fraction(-1, 6))
    out["deg4_333"] = {"value": pattern_curvature((3, 3, 3, INF)),
                       "holds": pattern_curvature((3, 3, 3, INF)) == 0}
    out["deg4_l3_gt3"] = scan(
        [(a, b, c, INF)
         for a in range(3, max_l + 1) for b in range(a, max_l + 1)
         for c in range(max(b, 4), max_l + 1) if c > 3],
        Fraction(-1, 12))
    out["deg3_zero"] = {
        "values": [pattern_curvature((3, 6, INF)), pattern_curvature((4, 4, INF))],
        "holds": pattern_curvature((3, 6, INF)) == 0
        and pattern_curvature((4, 4, INF)) == 0}
    out["deg3_l2_gt6"] = scan(
        [(a, b, INF) for a in range(3, max_l + 1)
         for b in range(max(a, 7), max_l + 1)],
        Fraction(-1, 42))
    out["deg3_l1_ge4"] = scan(
        [(a, b, INF) for a in range(4, max_l + 1)
         for b in range(max(a, 5), max_l + 1)],
        Fraction(-1, 20))
    return out
