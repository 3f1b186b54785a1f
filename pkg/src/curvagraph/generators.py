"""Generators for faithful balls of standard infinite graphs and small solids.

The {p,q} generator (vertex degree p, face degree q) grows the tiling disk
by completing vertices in breadth-first rounds: completing a vertex fills
every uncovered corner around it with a full q-gon, reusing the two flanking
spoke edges and creating the q-3 interior path vertices fresh.  The built
region stays a topological disk whose rotation lists are contiguous arcs of
the true rotations (the single gap sits between the last and first entry),
which makes every face insertion a prepend at one end and an append at the
other.  Vertex ids follow creation order, so output is deterministic.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Tuple

from .core import INF, CombinatorialMap, MapBuilder, MapError

_SOLID_COORDS = {
    "tetrahedron": [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)],
    "cube": [(x, y, z) for x in (-1, 1) for y in (-1, 1) for z in (-1, 1)],
    "octahedron": [(1, 0, 0), (0, 1, 0), (-1, 0, 0), (0, -1, 0),
                   (0, 0, 1), (0, 0, -1)],
}

_SOLID_EDGE_DOT = {"tetrahedron": -1, "cube": 1, "octahedron": 0}


@dataclass(frozen=True)
class GeneratorSpec:
    """What to generate.

    kind: pq-tessellation | regular-tree | platonic-solid | octahedron-hub |
          increasing-tree | line
    p:    vertex degree (pq / tree; base degree for increasing-tree)
    q:    face degree or INF (pq-tessellation)
    radius: ball radius / ray length
    solid:  tetrahedron | cube | octahedron (platonic-solid)

    1/p + 1/q <= 1/2 gives the non-positively curved examples; spherical
    parameters are rejected (use platonic-solid for the closed maps).
    """
    kind: str
    p: int = 0
    q: float = 0
    radius: int = 1
    solid: str = ""


def generate(spec: GeneratorSpec) -> CombinatorialMap:
    kind = spec.kind
    if kind in ("pq", "pq-tessellation"):
        if spec.q == INF:
            return regular_tree(spec.p, spec.radius)
        return pq_ball(spec.p, int(spec.q), spec.radius)
    if kind in ("tree", "regular-tree"):
        return regular_tree(spec.p, spec.radius)
    if kind in ("solid", "platonic-solid"):
        return platonic_solid(spec.solid)
    if kind == "octahedron-hub":
        return octahedron_hub(spec.radius)
    if kind in ("inctree", "increasing-tree"):
        return increasing_tree(spec.radius, base=spec.p or 3)
    if kind == "line":
        return line_graph(spec.radius)
    raise ValueError("unsupported generator kind %r" % kind)


def _simple_map(rot: Dict[int, List[int]], frontier=(), face_hint=None,
                frontier_hint=None) -> CombinatorialMap:
    """Neighbor-list rotations of a simple graph -> half-edge map."""
    hid: Dict[Tuple[int, int], int] = {}
    nxt = 0
    for v in sorted(rot):
        for w in rot[v]:
            hid[(v, w)] = nxt
            nxt += 1
    rotation = {v: tuple(hid[(v, w)] for w in rot[v]) for v in rot}
    twin = {}
    for (v, w), h in hid.items():
        if (w, v) not in hid:
            raise MapError("unpaired adjacency %d-%d" % (v, w))
        twin[h] = hid[(w, v)]
    return CombinatorialMap(rotation, twin, frontier, face_hint, frontier_hint)


# -- {p,q} tessellation balls ---------------------------------------------


class _PQDisk:
    """Growing {p,q} disk; rotation lists are arcs with the gap at the wrap.

    Completing a vertex fills its uncovered corners with q-gons.  A new
    q-gon shares the two spoke edges at the center, plus whatever boundary
    chain already exists beyond them: whenever the flanking vertex has full
    degree its wrap corner belongs to this face, so the boundary walk
    continues through it (and the vertex becomes sealed, i.e. surrounded).
    """

    def __init__(self, p: int, q: int):
        self.p = p
        self.q = q
        self.rot: Dict[int, List[int]] = {}
        self.sealed: set = set()
        self.n = 0

    def new_vertex(self) -> int:
        v = self.n
        self.n += 1
        self.rot[v] = []
        return v

    def _bad(self, what: str) -> MapError:
        return MapError("{%d,%d} disk invariant violated (%s); parameters "
                        "may be spherical" % (self.p, self.q, what))

    def _walk(self, prev: int, cur: int, side: str) -> List[int]:
        """Existing boundary chain of the new face beyond `cur`, following
        closed wrap corners of full-degree vertices."""
        chain = [cur]
        while True:
            arc = self.rot[cur]
            i = arc.index(prev)
            edge_pos_ok = (i == 0) if side == "left" else (i == len(arc) - 1)
            if not edge_pos_ok:
                raise self._bad("face would duplicate a covered corner")
            if len(arc) < self.p:
                return chain
            if cur in self.sealed:
                raise self._bad("walk re-entered a sealed vertex")
            self.sealed.add(cur)
            nxt = arc[-1] if side == "left" else arc[0]
            chain.append(nxt)
            prev, cur = cur, nxt
            if len(chain) > self.q:
                raise self._bad("face walk exceeds q edges")

    def add_face(self, v: int, x: int, y: int):
        """Create the q-gon in the ccw corner sector between edges v-x, v-y."""
        rv = self.rot[v]
        ix = rv.index(x)
        if rv[(ix + 1) % len(rv)] != y:
            raise self._bad("sector edges not adjacent")
        chain_l = self._walk(v, x, "left")
        chain_r = self._walk(v, y, "right")
        if set(chain_l) & set(chain_r):
            raise self._bad("face boundary closes on itself")
        new_edges = self.q - 2 - (len(chain_l) - 1) - (len(chain_r) - 1)
        if new_edges < 1:
            raise self._bad("face already bounded")
        end_l, end_r = chain_l[-1], chain_r[-1]
        prev_l = chain_l[-2] if len(chain_l) > 1 else v
        prev_r = chain_r[-2] if len(chain_r) > 1 else v
        if self.rot[end_l][0] != prev_l or self.rot[end_r][-1] != prev_r:
            raise self._bad("arc ends out of place")
        if new_edges == 1:
            self.rot[end_l].insert(0, end_r)
            self.rot[end_r].append(end_l)
            return
        path = [self.new_vertex() for _ in range(new_edges - 1)]
        self.rot[end_l].insert(0, path[0])
        for i, pv in enumerate(path):
            prev = end_l if i == 0 else path[i - 1]
            nxt = end_r if i == len(path) - 1 else path[i + 1]
            self.rot[pv] = [nxt, prev]
        self.rot[end_r].append(path[-1])

    def complete(self, v: int):
        """Fill all uncovered corners around v with q-gons; v reaches degree p."""
        if v in self.sealed:
            return
        arc = self.rot[v]
        k = len(arc)
        if k > self.p:
            raise self._bad("degree overflow at %d" % v)
        if k == 0:
            spokes = [self.new_vertex() for _ in range(self.p)]
            self.rot[v] = list(spokes)
            for w in spokes:
                self.rot[w] = [v]
            for i in range(self.p):
                self.add_face(v, spokes[i], spokes[(i + 1) % self.p])
            return
        first = arc[0]
        cur = arc[-1]
        for _ in range(self.p - k):
            w = self.new_vertex()
            self.rot[w] = [v]
            self.rot[v].append(w)
            self.add_face(v, cur, w)
            cur = w
        self.add_face(v, cur, first)

    def distances(self) -> Dict[int, int]:
        dist = {0: 0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for w in self.rot[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist


def pq_ball(p: int, q: int, radius: int) -> CombinatorialMap:
    """Ball of the {p,q} tiling: interior degrees p, face hint q on the rim."""
    if p < 3 or q < 3:
        raise ValueError("pq-tessellation needs p >= 3 and q >= 3")
    if radius < 1:
        raise ValueError("radius must be >= 1")
    disk = _PQDisk(p, q)
    disk.new_vertex()
    completed: set = set()
    while True:
        dist = disk.distances()
        pending = [v for v in range(disk.n)
                   if v not in completed and v not in disk.sealed
                   and dist[v] < radius]
        if not pending:
            break
        k = min(dist[v] for v in pending)
        for v in sorted(v for v in pending if dist[v] == k):
            disk.complete(v)
            completed.add(v)
    done = completed | disk.sealed
    frontier = [v for v in range(disk.n) if v not in done]
    return _simple_map(disk.rot, frontier, face_hint=q)


# -- trees ----------------------------------------------------------------


def _tree(degree_at, radius: int) -> CombinatorialMap:
    """Rooted plane tree; degree_at(d) = target degree of a depth-d vertex."""
    rot: Dict[int, List[int]] = {0: []}
    depth = {0: 0}
    layer = [0]
    nxt = 1
    for d in range(radius):
        new_layer = []
        kids = degree_at(d) if d == 0 else degree_at(d) - 1
        for v in layer:
            for _ in range(kids):
                c = nxt
                nxt += 1
                rot[c] = [v]
                rot[v].append(c)
                depth[c] = d + 1
                new_layer.append(c)
        layer = new_layer
    frontier = [v for v, d in depth.items() if d == radius]
    return _simple_map(rot, frontier, face_hint=INF)


def regular_tree(p: int, radius: int) -> CombinatorialMap:
    """Ball of the p-regular tree; leaves at depth `radius` form the frontier."""
    if p < 2:
        raise ValueError("regular tree needs degree >= 2")
    if radius < 1:
        raise ValueError("radius must be >= 1")
    return _tree(lambda d: p, radius)


def increasing_tree(radius: int, base: int = 3) -> CombinatorialMap:
    """Tree whose vertices at distance d from the root have degree base + d."""
    if radius < 1:
        raise ValueError("radius must be >= 1")
    return _tree(lambda d: base + d, radius)


def increasing_tree_degree(r: int, base: int = 3) -> int:
    """Analytic degree profile of the increasing tree at distance r."""
    return base + r


# -- line graph over Z -----------------------------------------------------


def line_graph(radius: int) -> CombinatorialMap:
    """The segment [-radius, radius] of the two-sided infinite path."""
    if radius < 1:
        raise ValueError("radius must be >= 1")
    rot = {}
    for i in range(-radius, radius + 1):
        nbrs = []
        if i > -radius:
            nbrs.append(i - 1)
        if i < radius:
            nbrs.append(i + 1)
        rot[i] = nbrs
    return _simple_map(rot, frontier=[-radius, radius], face_hint=INF)


# -- closed sphere maps ----------------------------------------------------


def platonic_solid(name: str) -> CombinatorialMap:
    """Closed map of a platonic solid (tetrahedron, cube, octahedron)."""
    if name not in _SOLID_COORDS:
        raise ValueError("unsupported solid %r (have: %s)"
                         % (name, ", ".join(sorted(_SOLID_COORDS))))
    coords = _SOLID_COORDS[name]
    want = _SOLID_EDGE_DOT[name]
    n = len(coords)
    rot: Dict[int, List[int]] = {}
    for v in range(n):
        nbrs = [w for w in range(n) if w != v
                and _dot(coords[v], coords[w]) == want]
        rot[v] = _ccw_sort(coords, v, nbrs)
    return _simple_map(rot)


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _ccw_sort(coords, v, nbrs) -> List[int]:
    """Sort neighbors ccw around the outward normal at vertex v."""
    import numpy as np

    pv = np.array(coords[v], dtype=float)
    normal = pv / np.linalg.norm(pv)
    d0 = np.array(coords[nbrs[0]], dtype=float) - pv
    u0 = d0 - normal * (d0 @ normal)
    u0 /= np.linalg.norm(u0)
    u1 = np.cross(normal, u0)
    def angle(w):
        d = np.array(coords[w], dtype=float) - pv
        return math.atan2(d @ u1, d @ u0)
    return sorted(nbrs, key=angle)


def octahedron_hub(radius: int) -> CombinatorialMap:
    """Octahedron with pendant rays of length `radius` at the two hubs.

    The equator cycle is 0-1-2-3 and the hubs 4, 5 are adjacent to all four,
    so the vector +1,-1,+1,-1 on the cycle is a finitely supported
    eigenfunction of the combinatorial Laplacian (eigenvalue 6); the rays
    give the hubs neighbors outside that support.
    """
    if radius < 1:
        raise ValueError("ray length must be >= 1")
    octa = platonic_solid("octahedron")
    b = MapBuilder.from_map(octa)
    for hub in (4, 5):
        prev = hub
        pos = 1  # split the face corner between the first two cycle edges
        for _ in range(radius):
            v = b.new_vertex()
            b.add_edge(prev, v, pos_u=pos, pos_v=None)
            prev = v
            pos = None
    return b.finish()
