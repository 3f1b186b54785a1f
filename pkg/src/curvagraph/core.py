"""Oriented combinatorial maps: half-edges, rotations, face tracing, balls.

A planar graph is stored as a rotation system: every vertex carries the
counterclockwise cyclic order of its outgoing half-edges, and a fixed-point
free involution pairs each half-edge with its reversal.  Faces are the orbits
of the successor rule ``next(u->v) = (v->w)`` where ``w`` is the neighbor
immediately after ``u`` in the counterclockwise rotation at ``v``.

Truncations of infinite graphs mark the incomplete rim as ``frontier``;
face degrees of orbits that touch the frontier come from hints supplied by
the generator (or stay unknown).
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

INF = math.inf


class MapError(Exception):
    """Structural problem in a combinatorial map."""


class FaithfulnessError(MapError):
    """A query reached past the faithful (fully materialized) region."""


class CombinatorialMap:
    """Immutable rotation system with frontier marking.

    Parameters
    ----------
    rotation:
        vertex id -> sequence of half-edge ids with that tail, in ccw order.
    twin:
        half-edge id -> half-edge id, a fixed-point free involution.
    frontier:
        vertices whose neighborhood may be incomplete (truncation rim).
    face_hint:
        uniform degree for faces touching the frontier (int or ``INF``),
        or None if unknown.
    frontier_hint:
        optional per-vertex override of ``face_hint``; faces touching a
        tagged frontier vertex take the tag (all touched tags must agree).
    """

    __slots__ = ("_rotation", "_twin", "_tail", "_slot", "_frontier",
                 "_face_hint", "_frontier_hint", "_vertices")

    def __init__(self, rotation: Mapping[int, Sequence[int]],
                 twin: Mapping[int, int],
                 frontier: Iterable[int] = (),
                 face_hint: Optional[float] = None,
                 frontier_hint: Optional[Mapping[int, float]] = None):
        rot = {v: tuple(hs) for v, hs in rotation.items()}
        tw = dict(twin)
        tail: Dict[int, int] = {}
        slot: Dict[int, int] = {}
        for v, hs in rot.items():
            for i, h in enumerate(hs):
                if h in tail:
                    raise MapError("half-edge %r appears in two rotation slots" % h)
                tail[h] = v
                slot[h] = i
        for h, t in tw.items():
            if t == h:
                raise MapError("half-edge %r is its own twin" % h)
            if tw.get(t) != h:
                raise MapError("twin map is not an involution at %r" % h)
            if h not in tail or t not in tail:
                raise MapError("twin references unknown half-edge %r/%r" % (h, t))
        if set(tw) != set(tail):
            raise MapError("every half-edge needs a twin")
        self._rotation = rot
        self._twin = tw
        self._tail = tail
        self._slot = slot
        self._frontier = frozenset(frontier)
        if self._frontier - set(rot):
            raise MapError("frontier lists unknown vertices")
        self._face_hint = face_hint
        self._frontier_hint = dict(frontier_hint or {})
        self._vertices = tuple(sorted(rot))
        if self._vertices:
            self._check_connected()

    # -- basic queries -------------------------------------------------

    @property
    def vertices(self) -> Tuple[int, ...]:
        return self._vertices

    @property
    def frontier(self) -> frozenset:
        return self._frontier

    @property
    def face_hint(self) -> Optional[float]:
        return self._face_hint

    def half_edges(self) -> Iterable[int]:
        return self._tail.keys()

    def n_edges(self) -> int:
        return len(self._tail) // 2

    def rotation(self, v: int) -> Tuple[int, ...]:
        try:
            return self._rotation[v]
        except KeyError:
            raise MapError("unknown vertex id %r" % v) from None

    def tail(self, h: int) -> int:
        return self._tail[h]

    def twin(self, h: int) -> int:
        return self._twin[h]

    def head(self, h: int) -> int:
        return self._tail[self._twin[h]]

    def vertex_degree(self, v: int) -> int:
        """Number of rotation slots at v (a loop occupies two slots)."""
        return len(self.rotation(v))

    def neighbors(self, v: int) -> Tuple[int, ...]:
        """Heads of the outgoing half-edges, in rotation order (with repeats)."""
        return tuple(self.head(h) for h in self.rotation(v))

    def is_interior(self, v: int) -> bool:
        return v not in self._frontier

    def interior_vertices(self) -> Tuple[int, ...]:
        return tuple(v for v in self._vertices if v not in self._frontier)

    def successor(self, h: int) -> int:
        """Next half-edge of the face walk through h."""
        v = self.head(h)
        hs = self._rotation[v]
        i = self._slot[self._twin[h]]
        return hs[(i + 1) % len(hs)]

    def edge_key(self, h: int) -> Tuple[int, int]:
        """Canonical undirected edge id for a half-edge."""
        t = self._twin[h]
        return (h, t) if h < t else (t, h)

    def is_simple(self) -> bool:
        """No loops and no multiple edges."""
        for v in self._vertices:
            seen = set()
            for h in self._rotation[v]:
                w = self.head(h)
                if w == v or w in seen:
                    return False
                seen.add(w)
        return True

    def hint_for(self, v: int) -> Optional[float]:
        """Degree hint contributed by frontier vertex v (None = unknown)."""
        if v in self._frontier_hint:
            return self._frontier_hint[v]
        return self._face_hint

    def _check_connected(self):
        start = self._vertices[0]
        seen = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for h in self._rotation[u]:
                w = self.head(h)
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        if len(seen) != len(self._vertices):
            raise MapError("graph is not connected")


# -- faces --------------------------------------------------------------


@dataclass(frozen=True)
class FaceOrbit:
    """One orbit of the face-successor permutation."""
    id: int
    walk: Tuple[int, ...]          # half-edge ids, cyclic
    complete: bool                 # no frontier vertex on the walk
    degree: Optional[float]        # len(walk) if complete, else hint or None

    def __len__(self):
        return len(self.walk)


class FaceTable:
    """All face orbits of a map plus corner/incidence indexes."""

    def __init__(self, cmap: CombinatorialMap, faces: Sequence[FaceOrbit]):
        self.map = cmap
        self.faces: Tuple[FaceOrbit, ...] = tuple(faces)
        self.face_of: Dict[int, int] = {}
        self._verts: List[frozenset] = []
        self._corners: Dict[int, Dict[int, int]] = {}   # vertex -> {face: mult}
        for f in self.faces:
            tails = []
            for h in f.walk:
                self.face_of[h] = f.id
                tails.append(cmap.tail(h))
            self._verts.append(frozenset(tails))
            for v in tails:
                self._corners.setdefault(v, {})
                self._corners[v][f.id] = self._corners[v].get(f.id, 0) + 1

    def __iter__(self):
        return iter(self.faces)

    def __len__(self):
        return len(self.faces)

    def face(self, fid: int) -> FaceOrbit:
        return self.faces[fid]

    def vertices_of(self, fid: int) -> frozenset:
        return self._verts[fid]

    def corners_at(self, v: int) -> Dict[int, int]:
        """face id -> multiplicity of the corner (v, f)."""
        return dict(self._corners.get(v, {}))

    def faces_at(self, v: int) -> Tuple[int, ...]:
        return tuple(sorted(self._corners.get(v, {})))

    def degree(self, fid: int) -> Optional[float]:
        return self.faces[fid].degree

    def boundary_faces(self, region: Iterable[int]) -> Tuple[int, ...]:
        """Faces meeting both `region` and its complement (by vertex sets)."""
        reg = set(region)
        out = []
        for f in self.faces:
            verts = self._verts[f.id]
            if (verts & reg) and (verts - reg):
                out.append(f.id)
        return tuple(out)


def trace_faces(cmap: CombinatorialMap) -> FaceTable:
    """Partition all half-edges into face orbits of the successor rule."""
    seen = set()
    faces: List[FaceOrbit] = []
    for h0 in sorted(cmap.half_edges()):
        if h0 in seen:
            continue
        walk = []
        h = h0
        while True:
            walk.append(h)
            seen.add(h)
            h = cmap.successor(h)
            if h == h0:
                break
        tails = [cmap.tail(x) for x in walk]
        rim = [v for v in tails if not cmap.is_interior(v)]
        complete = not rim
        if complete:
            degree: Optional[float] = len(walk)
        else:
            hints = {cmap.hint_for(v) for v in rim}
            hints.discard(None)
            degree = hints.pop() if len(hints) == 1 else None
        faces.append(FaceOrbit(len(faces), tuple(walk), complete, degree))
    return FaceTable(cmap, faces)


# -- balls ---------------------------------------------------------------


class BallDecomposition:
    """BFS spheres S_0..S_n around a root, with distances and boundary faces."""

    def __init__(self, cmap: CombinatorialMap, root: int, radius: int,
                 faces: Optional[FaceTable] = None):
        if root not in cmap._rotation:
            raise MapError("unknown root vertex %r" % root)
        if radius < 0:
            raise ValueError("radius must be >= 0")
        dist = {root: 0}
        spheres: List[List[int]] = [[root]]
        layer = [root]
        for n in range(1, radius + 1):
            nxt = []
            for u in layer:
                for w in cmap.neighbors(u):
                    if w not in dist:
                        dist[w] = n
                        nxt.append(w)
            if not nxt:
                break
            spheres.append(nxt)
            layer = nxt
        for v, d in dist.items():
            if d < radius and not cmap.is_interior(v):
                raise FaithfulnessError(
                    "frontier vertex %r at depth %d < radius %d" % (v, d, radius))
        self.map = cmap
        self.root = root
        self.radius = radius
        self.dist = dist
        self.spheres: Tuple[Tuple[int, ...], ...] = tuple(tuple(s) for s in spheres)
        self._faces = faces

    def sphere(self, n: int) -> Tuple[int, ...]:
        return self.spheres[n] if n < len(self.spheres) else ()

    def ball(self, n: int) -> Tuple[int, ...]:
        out: List[int] = []
        for s in self.spheres[:n + 1]:
            out.extend(s)
        return tuple(out)

    def sphere_sizes(self) -> Tuple[int, ...]:
        return tuple(len(s) for s in self.spheres)

    def ball_sizes(self) -> Tuple[int, ...]:
        sizes, total = [], 0
        for s in self.spheres:
            total += len(s)
            sizes.append(total)
        return tuple(sizes)

    def faces(self) -> FaceTable:
        if self._faces is None:
            self._faces = trace_faces(self.map)
        return self._faces

    def boundary_faces(self, n: int) -> Tuple[int, ...]:
        """Faces of the full map meeting both B_n and its complement."""
        return self.faces().boundary_faces(self.ball(n))


def ball(cmap: CombinatorialMap, v0: int, n: int,
         faces: Optional[FaceTable] = None) -> BallDecomposition:
    return BallDecomposition(cmap, v0, n, faces)


def vertex_degree(cmap: CombinatorialMap, v: int) -> int:
    return cmap.vertex_degree(v)


def distances_from(cmap: CombinatorialMap, v0: int) -> Dict[int, int]:
    """BFS distances from v0 over the whole materialized map."""
    dist = {v0: 0}
    queue = deque([v0])
    while queue:
        u = queue.popleft()
        for w in cmap.neighbors(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def induced_submap(cmap: CombinatorialMap, W: Iterable[int],
                   keep_frontier: bool = False) -> CombinatorialMap:
    """Subgraph induced by W, rotations restricted to surviving half-edges.

    Half-edge ids are inherited.  The result is treated as a complete finite
    map (no frontier) unless keep_frontier is set, in which case frontier
    marks and hints survive on vertices of W.
    """
    Wset = set(W)
    unknown = Wset - set(cmap._rotation)
    if unknown:
        raise MapError("unknown vertices in W: %r" % sorted(unknown)[:5])
    rot = {}
    twin = {}
    for v in Wset:
        kept = tuple(h for h in cmap.rotation(v) if cmap.head(h) in Wset)
        rot[v] = kept
        for h in kept:
            twin[h] = cmap.twin(h)
    frontier = (Wset & cmap.frontier) if keep_frontier else ()
    fh = cmap.face_hint if keep_frontier else None
    hints = {v: t for v, t in cmap._frontier_hint.items() if v in Wset} \
        if keep_frontier else None
    return CombinatorialMap(rot, twin, frontier, fh, hints)


def is_connected_in(cmap: CombinatorialMap, W: Iterable[int]) -> bool:
    """Is the subgraph induced by W connected (and nonempty)?"""
    Wset = set(W)
    if not Wset:
        return False
    start = next(iter(Wset))
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in cmap.neighbors(u):
            if w in Wset and w not in seen:
                seen.add(w)
                queue.append(w)
    return seen == Wset


# -- mutable builders ----------------------------------------------------


class MapBuilder:
    """Mutable half-edge structure for generators and graph surgery."""

    def __init__(self):
        self.rot: Dict[int, List[int]] = {}
        self.twin: Dict[int, int] = {}
        self.tail: Dict[int, int] = {}
        self._next_v = 0
        self._next_h = 0

    @classmethod
    def from_map(cls, cmap: CombinatorialMap) -> "MapBuilder":
        b = cls()
        for v in cmap.vertices:
            b.rot[v] = list(cmap.rotation(v))
            for h in b.rot[v]:
                b.tail[h] = v
        b.twin = dict(cmap._twin)
        b._next_v = max(cmap.vertices, default=-1) + 1
        b._next_h = max(cmap.half_edges(), default=-1) + 1
        return b

    def new_vertex(self, vid: Optional[int] = None) -> int:
        if vid is None:
            vid = self._next_v
        if vid in self.rot:
            raise MapError("vertex %r already exists" % vid)
        self.rot[vid] = []
        self._next_v = max(self._next_v, vid + 1)
        return vid

    def _new_half_edge(self, v: int) -> int:
        h = self._next_h
        self._next_h += 1
        self.tail[h] = v
        return h

    def add_edge(self, u: int, v: int, pos_u: Optional[int] = None,
                 pos_v: Optional[int] = None) -> Tuple[int, int]:
        """Insert an edge u-v; positions index into the rotations (None = end)."""
        hu = self._new_half_edge(u)
        hv = self._new_half_edge(v)
        self.twin[hu] = hv
        self.twin[hv] = hu
        if pos_u is None:
            self.rot[u].append(hu)
        else:
            self.rot[u].insert(pos_u, hu)
        if pos_v is None:
            self.rot[v].append(hv)
        else:
            self.rot[v].insert(pos_v, hv)
        return hu, hv

    def head(self, h: int) -> int:
        return self.tail[self.twin[h]]

    def degree(self, v: int) -> int:
        return len(self.rot[v])

    def neighbors(self, v: int) -> List[int]:
        return [self.head(h) for h in self.rot[v]]

    def finish(self, frontier: Iterable[int] = (),
               face_hint: Optional[float] = None,
               frontier_hint: Optional[Mapping[int, float]] = None
               ) -> CombinatorialMap:
        return CombinatorialMap(self.rot, self.twin, frontier,
                                face_hint, frontier_hint)
