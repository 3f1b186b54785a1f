"""Cut locus, sphere boundary structure, minimal bigons and ball growth.

The cyclic structure around a ball B_n is read off the outer boundary walk
of the induced subgraph on B_n: restricting the face-successor rule to
half-edges inside B_n, the orbit through any corner that lost an edge is the
boundary walk of the unbounded face.  Sphere enumerations and the cyclic
order of boundary faces both come from that walk.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .core import (INF, CombinatorialMap, FaceTable, FaithfulnessError,
                   MapError, ball, distances_from, trace_faces)
from .curvature import curvature_report


def frontier_distance(cmap: CombinatorialMap, v0: int) -> float:
    """Distance from v0 to the nearest frontier vertex (inf for closed maps)."""
    dist = distances_from(cmap, v0)
    ds = [d for v, d in dist.items() if not cmap.is_interior(v)]
    return min(ds) if ds else INF


def cut_locus(cmap: CombinatorialMap, v0: int, horizon: int) -> Set[int]:
    """Vertices within the horizon where d(v0, .) attains a local maximum."""
    if frontier_distance(cmap, v0) <= horizon:
        raise FaithfulnessError(
            "cut locus to horizon %d needs a ball faithful to horizon + 1"
            % horizon)
    dist = distances_from(cmap, v0)
    out = set()
    for v, d in dist.items():
        if d <= horizon and all(dist[w] <= d for w in cmap.neighbors(v)):
            out.add(v)
    return out


# -- outer boundary walks ---------------------------------------------------


def outer_walk(cmap: CombinatorialMap, region: Set[int]) -> Optional[Tuple[int, ...]]:
    """Boundary walk (half-edges) of the unbounded face of the subgraph
    induced by `region`, or None when no edge leaves the region."""
    gaps = []
    for v in sorted(region):
        hs = cmap.rotation(v)
        for i, h in enumerate(hs):
            if cmap.head(h) not in region:
                gaps.append((v, i))
    if not gaps:
        return None

    def succ(h):
        v = cmap.head(h)
        hs = cmap.rotation(v)
        i = hs.index(cmap.twin(h))
        for step in range(1, len(hs) + 1):
            cand = hs[(i + step) % len(hs)]
            if cmap.head(cand) in region:
                return cand
        raise MapError("region vertex %r has no edge inside the region" % v)

    v, i = gaps[0]
    hs = cmap.rotation(v)
    start = None
    for step in range(1, len(hs) + 1):
        cand = hs[(i + step) % len(hs)]
        if cmap.head(cand) in region:
            start = cand
            break
    if start is None:
        if len(region) == 1:
            return ()
        raise MapError("isolated region vertex %r" % v)
    walk = []
    h = start
    while True:
        walk.append(h)
        h = succ(h)
        if h == start:
            break
    return tuple(walk)


@dataclass
class SphereEnumeration:
    """Cyclic enumerations of the spheres S_0..S_n, aligned so the first
    vertex of S_{n+1} is the first one adjacent to the first vertex of S_n."""
    root: int
    levels: Tuple[Tuple[int, ...], ...]
    notes: Dict[int, str] = field(default_factory=dict)

    def level(self, n: int) -> Tuple[int, ...]:
        return self.levels[n] if n < len(self.levels) else ()


def sphere_enumeration(cmap: CombinatorialMap, v0: int, horizon: int,
                       faces: Optional[FaceTable] = None) -> SphereEnumeration:
    b = ball(cmap, v0, horizon)
    levels: List[Tuple[int, ...]] = [(v0,)]
    notes: Dict[int, str] = {}
    for n in range(1, len(b.spheres)):
        sphere = set(b.sphere(n))
        region = set(b.ball(n))
        walk = outer_walk(cmap, region)
        if walk is None:
            order = list(b.sphere(n))
            notes[n] = "no-outer-walk (region covers the map); BFS order"
        else:
            order = []
            seen = set()
            for h in walk:
                t = cmap.tail(h)
                if t in sphere and t not in seen:
                    order.append(t)
                    seen.add(t)
            missing = [v for v in b.sphere(n) if v not in seen]
            if missing:
                order.extend(missing)
                notes[n] = "vertices off the boundary walk appended: %r" % missing
        # align: rotate so the first vertex adjacent to the previous level's
        # first vertex comes first
        prev_first = levels[n - 1][0]
        adj = set(cmap.neighbors(prev_first))
        shift = next((i for i, v in enumerate(order) if v in adj), 0)
        levels.append(tuple(order[shift:] + order[:shift]))
    return SphereEnumeration(v0, tuple(levels), notes)


def boundary_face_cycle(cmap: CombinatorialMap, faces: FaceTable,
                        region: Set[int]) -> Tuple[int, ...]:
    """Cyclic enumeration of the boundary faces of `region`, in the order
    they appear along the outer boundary walk (consecutive repeats merged)."""
    walk = outer_walk(cmap, region)
    if walk is None:
        return ()
    if walk == ():
        v = next(iter(region))
        wedge = [faces.face_of[h] for h in cmap.rotation(v)]
        seq = wedge
    else:
        seq = []
        m = len(walk)
        for idx in range(m):
            h_prev = walk[idx - 1]
            h_cur = walk[idx]
            v = cmap.tail(h_cur)
            hs = cmap.rotation(v)
            ia = hs.index(cmap.twin(h_prev))
            ic = hs.index(h_cur)
            steps = (ic - ia) % len(hs)
            if steps == 0:
                steps = len(hs)
            for j in range(steps):
                seq.append(faces.face_of[hs[(ia + j + 1) % len(hs)]])
    seq = [f for f in seq
           if faces.vertices_of(f) - region]           # boundary faces only
    out: List[int] = []
    for f in seq:
        if not out or out[-1] != f:
            out.append(f)
    while len(out) > 1 and out[0] == out[-1]:
        out.pop()
    return tuple(out)


# -- admissibility ----------------------------------------------------------


@dataclass
class AdmissibilityReport:
    root: int
    horizon: int
    ok: Dict[str, bool]
    violations: Dict[str, List] = field(default_factory=dict)
    enumeration: Optional[SphereEnumeration] = None

    def all_ok(self) -> bool:
        return all(self.ok.values())


def check_admissibility(cmap: CombinatorialMap, v0: int, horizon: int,
                        faces: Optional[FaceTable] = None) -> AdmissibilityReport:
    """Check the five boundary-structure properties of distance balls for
    all n < horizon.  Needs the map faithful out to horizon + 1."""
    if frontier_distance(cmap, v0) <= horizon + 1:
        raise FaithfulnessError(
            "admissibility to horizon %d needs interior B_%d"
            % (horizon, horizon + 1))
    faces = faces or trace_faces(cmap)
    b = ball(cmap, v0, horizon + 1)
    dist = b.dist
    report = AdmissibilityReport(v0, horizon,
                                 {k: True for k in ("p1", "p2", "p3", "p4", "p5")},
                                 {k: [] for k in ("p1", "p2", "p3", "p4", "p5")})
    enum = sphere_enumeration(cmap, v0, horizon, faces)
    report.enumeration = enum
    for n in range(horizon):
        S_n = b.sphere(n)
        S_n1 = set(b.sphere(n + 1))
        ball_n = set(b.ball(n))
        # (1) every vertex of S_n has a neighbor one sphere out
        for v in S_n:
            if not any(w in S_n1 for w in cmap.neighbors(v)):
                report.ok["p1"] = False
                report.violations["p1"].append((n, v))
        # (2) every vertex of S_{n+1} has at most two neighbors in S_n
        for w in b.sphere(n + 1):
            back = [u for u in cmap.neighbors(w) if dist.get(u) == n]
            if len(back) > 2:
                report.ok["p2"] = False
                report.violations["p2"].append((n + 1, w, len(back)))
        # (3) a shared forward neighbor forces another forward neighbor each
        for w in b.sphere(n + 1):
            back = [u for u in cmap.neighbors(w) if dist.get(u) == n]
            if len(back) == 2:
                for u in back:
                    others = [x for x in cmap.neighbors(u)
                              if x in S_n1 and x != w]
                    if not others:
                        report.ok["p3"] = False
                        report.violations["p3"].append((n, u, w))
        # (4) the forbidden alternating pattern around the ball
        cycle = boundary_face_cycle(cmap, faces, ball_n)
        if _forbidden_alternation(cmap, faces, cycle, ball_n):
            report.ok["p4"] = False
            report.violations["p4"].append((n, cycle))
        # (5) succeeding vertices of the cyclic enumeration share a boundary face
        order = enum.level(n)
        if n in enum.notes and "appended" in enum.notes.get(n, ""):
            report.ok["p5"] = False
            report.violations["p5"].append((n, enum.notes[n]))
        if len(order) > 1:
            bdry = set(faces.boundary_faces(ball_n))
            for i, v in enumerate(order):
                w = order[(i + 1) % len(order)]
                common = set(faces.faces_at(v)) & set(faces.faces_at(w)) & bdry
                if not common:
                    report.ok["p5"] = False
                    report.violations["p5"].append((n, v, w))
    return report


def _forbidden_alternation(cmap, faces, cycle, ball_set) -> bool:
    m = len(cycle)
    if m == 0 or m % 2 == 1:
        return False
    inside = [len(faces.vertices_of(f) & ball_set) for f in cycle]
    outside = [len(faces.vertices_of(f) - ball_set) for f in cycle]
    for offset in (0, 1):
        if all(inside[(offset + 2 * j) % m] == 1
               and outside[(offset + 2 * j + 1) % m] == 1
               for j in range(m // 2)):
            return True
    return False


# -- minimal bigons ---------------------------------------------------------


@dataclass(frozen=True)
class Bigon:
    path1: Tuple[int, ...]
    path2: Tuple[int, ...]
    interior: Tuple[int, ...]
    note: str = ""


def _geodesics(cmap: CombinatorialMap, dist_u: Dict[int, int], u: int,
               v: int) -> List[Tuple[int, ...]]:
    """All shortest u-v paths inside the region dist_u was computed on."""
    paths: List[Tuple[int, ...]] = []

    def back(x, acc):
        if x == u:
            paths.append(tuple(reversed(acc + [u])))
            return
        d = dist_u[x]
        for w in cmap.neighbors(x):
            if dist_u.get(w) == d - 1:
                back(w, acc + [x])
    back(v, [])
    return paths


def minimal_bigons(cmap: CombinatorialMap, horizon: int,
                   faces: Optional[FaceTable] = None,
                   roots: Optional[Sequence[int]] = None) -> List[Bigon]:
    """Exhaustively enumerate minimal bigons between certified vertex pairs.

    A pair (u, v) is certified when every geodesic provably stays in the
    interior: d(u, v) < d(u, frontier) + d(v, frontier).  `roots` restricts
    the first endpoint (default: every interior vertex).
    """
    faces = faces or trace_faces(cmap)
    interior = set(cmap.interior_vertices())
    dfr = _distance_to_frontier(cmap)
    if roots is None:
        roots = sorted(interior)
    out: List[Bigon] = []
    for u in roots:
        dist_u = _bfs_interior(cmap, u, horizon, interior)
        for v in sorted(dist_u):
            if v <= u:
                continue
            d = dist_u[v]
            if d < 2 or d > horizon:
                continue
            if d >= dfr.get(u, 0) + dfr.get(v, 0):
                continue
            geos = _geodesics(cmap, dist_u, u, v)
            for i in range(len(geos)):
                for j in range(i + 1, len(geos)):
                    p1, p2 = geos[i], geos[j]
                    if all(p1[t] != p2[t] for t in range(1, d)):
                        inner, note = _bigon_interior(cmap, faces, p1, p2)
                        out.append(Bigon(p1, p2, inner, note))
    return out


def _distance_to_frontier(cmap) -> Dict[int, float]:
    from collections import deque
    if not cmap.frontier:
        return {v: INF for v in cmap.vertices}
    dist = {v: 0 for v in cmap.frontier}
    queue = deque(cmap.frontier)
    while queue:
        u = queue.popleft()
        for w in cmap.neighbors(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def _bfs_interior(cmap, u, horizon, interior) -> Dict[int, int]:
    from collections import deque
    dist = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if dist[x] >= horizon:
            continue
        for w in cmap.neighbors(x):
            if w in interior and w not in dist:
                dist[w] = dist[x] + 1
                queue.append(w)
    return dist


def _bigon_interior(cmap, faces, p1, p2) -> Tuple[Tuple[int, ...], str]:
    """Vertices strictly enclosed by the simple closed curve p1 + reversed p2.

    The two sides of the curve are flooded in lockstep (always advancing the
    smaller one), so the cost is proportional to the enclosed side, not to
    the whole map.
    """
    cycle_edges = set()
    for path in (p1, p2):
        for a, b in zip(path, path[1:]):
            cycle_edges.add((a, b))
            cycle_edges.add((b, a))
    h0 = next(h for h in cmap.rotation(p1[0])
              if cmap.head(h) == p1[1])
    seeds = [faces.face_of[h0], faces.face_of[cmap.twin(h0)]]
    regions: List[Set[int]] = [{seeds[0]}, {seeds[1]}]
    stacks: List[List[int]] = [[seeds[0]], [seeds[1]]]
    done = [False, False]
    while not (done[0] or done[1]):
        side = 0 if len(regions[0]) <= len(regions[1]) else 1
        if not stacks[side]:
            done[side] = True
            continue
        f = stacks[side].pop()
        for h in faces.face(f).walk:
            if (cmap.tail(h), cmap.head(h)) in cycle_edges:
                continue
            g = faces.face_of[cmap.twin(h)]
            if g not in regions[side]:
                regions[side].add(g)
                stacks[side].append(g)
    closed_side = 0 if done[0] else 1
    cyc_verts = set(p1) | set(p2)

    def verts(region):
        out: Set[int] = set()
        for f in region:
            out |= faces.vertices_of(f)
        return out - cyc_verts

    region = regions[closed_side]
    if all(faces.face(f).complete for f in region):
        if not cmap.frontier:
            return tuple(sorted(verts(region))), \
                "closed map: first exhausted side taken as interior"
        return tuple(sorted(verts(region))), ""
    # the exhausted side touches incomplete faces: the other side is enclosed
    other = closed_side ^ 1
    stack = stacks[other]
    region = regions[other]
    while stack:
        f = stack.pop()
        for h in faces.face(f).walk:
            if (cmap.tail(h), cmap.head(h)) in cycle_edges:
                continue
            g = faces.face_of[cmap.twin(h)]
            if g not in region:
                region.add(g)
                stack.append(g)
    if not all(faces.face(f).complete for f in region):
        return tuple(sorted(verts(region) & verts(regions[closed_side]))), \
            "both sides reach incomplete faces"
    return tuple(sorted(verts(region))), ""


# -- growth ------------------------------------------------------------------


@dataclass
class GrowthReport:
    sphere_sizes: Tuple[int, ...]
    ball_sizes: Tuple[int, ...]
    kappa_sup: Fraction
    p_sup: int
    q_sup: float
    lower_factor: Fraction
    per_level_ok: Tuple[bool, ...]
    mu_estimate: float
    mu_bounds: Tuple[float, float]

    def all_ok(self) -> bool:
        """The per-level sphere inequalities (the finite content of the
        growth theorem).  The mu window bounds the limit rate; the finite-n
        estimate is reported alongside and checked via mu_in_window."""
        return all(self.per_level_ok)

    def mu_in_window(self) -> bool:
        return self.mu_bounds[0] <= self.mu_estimate <= self.mu_bounds[1]


def growth_check(cmap: CombinatorialMap, v0: int, horizon: int,
                 faces: Optional[FaceTable] = None) -> GrowthReport:
    """Verify |S_n| >= -2 kappa_V(G) q/(q-1) |B_{n-1}| and the growth-rate
    window for the exponential rate estimate (1/N) log |S_N|."""
    if not cmap.is_simple():
        raise MapError("growth bounds need a simple map")
    faces = faces or trace_faces(cmap)
    rep = curvature_report(cmap, faces)
    if rep.sup_vertex is None or rep.sup_vertex >= 0:
        raise MapError("growth bounds need kappa_V < 0 on the faithful region")
    fd = frontier_distance(cmap, v0)
    locus_horizon = horizon if fd == INF else min(horizon, int(fd) - 1)
    locus = cut_locus(cmap, v0, locus_horizon)
    if locus:
        raise MapError("cut locus is nonempty: %r" % sorted(locus)[:5])
    degrees = [f.degree for f in faces if f.degree is not None]
    if not degrees:
        raise MapError("no certified face degrees")
    q = max(degrees)
    p = max(cmap.vertex_degree(v) for v in cmap.interior_vertices())
    kappa = rep.sup_vertex
    q_ratio = Fraction(1) if q == INF else Fraction(int(q), int(q) - 1)
    factor = -2 * kappa * q_ratio
    b = ball(cmap, v0, horizon)
    s = b.sphere_sizes()
    bs = b.ball_sizes()
    if len(s) <= horizon:
        raise FaithfulnessError("ball of radius %d not materialized" % horizon)
    ok = tuple(Fraction(s[n]) >= factor * bs[n - 1]
               for n in range(1, horizon + 1))
    mu = math.log(s[horizon]) / horizon
    bounds = (math.log(float(1 + factor)), math.log(p - 1))
    return GrowthReport(s[:horizon + 1], bs[:horizon + 1], kappa, p, q,
                        factor, ok, mu, bounds)
