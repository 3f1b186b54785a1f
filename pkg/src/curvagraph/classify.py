"""Degeneracies and the tessellation classification (T1), (T2*), (T3*).

A face is degenerate if some corner has multiplicity >= 2; a pair of faces
is degenerate if their intersection (shared vertices plus shared edges) has
at least two connected components.  For simple graphs without terminal
vertices and with regular extended edges, absence of both degeneracies is
equivalent to being locally tessellating.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Set, Tuple

from .core import INF, CombinatorialMap, FaceTable, trace_faces
from .curvature import curvature_report


def degenerate_faces(cmap: CombinatorialMap,
                     faces: Optional[FaceTable] = None) -> Set[int]:
    """Complete faces with a corner of multiplicity >= 2."""
    faces = faces or trace_faces(cmap)
    bad = set()
    for f in faces:
        if not f.complete:
            continue
        counts: Dict[int, int] = {}
        for h in f.walk:
            v = cmap.tail(h)
            counts[v] = counts.get(v, 0) + 1
            if counts[v] >= 2:
                bad.add(f.id)
                break
    return bad


def degenerate_pairs(cmap: CombinatorialMap,
                     faces: Optional[FaceTable] = None) -> Set[Tuple[int, int]]:
    """Pairs of complete faces whose intersection has >= 2 components."""
    faces = faces or trace_faces(cmap)
    shared_verts: Dict[Tuple[int, int], Set[int]] = {}
    for v in cmap.vertices:
        incident = [f for f in faces.faces_at(v) if faces.face(f).complete]
        for a, b in combinations(sorted(set(incident)), 2):
            shared_verts.setdefault((a, b), set()).add(v)
    out = set()
    for pair, verts in shared_verts.items():
        if len(verts) < 2:
            continue
        edges = _shared_edges(cmap, faces, pair)
        if _component_count(verts, edges) >= 2:
            out.add(pair)
    return out


def _shared_edges(cmap, faces, pair):
    a, b = pair
    edges = []
    for h in faces.face(a).walk:
        if faces.face_of[cmap.twin(h)] == b:
            edges.append((cmap.tail(h), cmap.head(h)))
    return edges


def _component_count(verts: Set[int], edges) -> int:
    parent = {v: v for v in verts}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, w in edges:
        if u in parent and w in parent:
            parent[find(u)] = find(w)
    return len({find(v) for v in verts})


@dataclass(frozen=True)
class ExtendedEdge:
    """Maximal path whose inner vertices all have degree two."""
    path: Tuple[int, ...]
    regular: Optional[bool]      # both incident faces infinite; None = unknown
    closed: bool = False         # degree-two cycle, not a path


def extended_edges(cmap: CombinatorialMap,
                   faces: Optional[FaceTable] = None) -> List[ExtendedEdge]:
    faces = faces or trace_faces(cmap)
    is_inner = {v for v in cmap.interior_vertices() if cmap.vertex_degree(v) == 2}
    seen: Set[int] = set()
    out = []
    for v in sorted(is_inner):
        if v in seen:
            continue
        path = deque([v])
        seen.add(v)
        closed = False
        for direction in (0, 1):
            prev, cur = v, cmap.neighbors(v)[direction]
            while cur in is_inner and cur not in seen:
                seen.add(cur)
                if direction == 0:
                    path.appendleft(cur)
                else:
                    path.append(cur)
                nbrs = cmap.neighbors(cur)
                nxt = nbrs[0] if nbrs[1] == prev else nbrs[1]
                prev, cur = cur, nxt
            if cur == v:
                closed = True
                break
            if direction == 0:
                path.appendleft(cur)
            else:
                path.append(cur)
        h = cmap.rotation(v)[0]
        d1 = faces.degree(faces.face_of[h])
        d2 = faces.degree(faces.face_of[cmap.twin(h)])
        if d1 is None or d2 is None:
            regular: Optional[bool] = None
        else:
            regular = d1 == INF and d2 == INF
        out.append(ExtendedEdge(tuple(path), regular, closed))
    return out


@dataclass
class ClassificationResult:
    cls: str                               # tessellating | strictly-locally-
    # tessellating | locally-tessellating | other | undecided-at-radius
    witnesses: List[Tuple[str, object]] = field(default_factory=list)
    certified_radius: Optional[int] = None  # None = closed map, fully certified

    def violation_kinds(self) -> Set[str]:
        return {k for k, _ in self.witnesses}


def _certified_radius(cmap: CombinatorialMap) -> Optional[int]:
    if not cmap.frontier:
        return None
    dist = {v: 0 for v in cmap.frontier}
    queue = deque(cmap.frontier)
    while queue:
        u = queue.popleft()
        for w in cmap.neighbors(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return max(dist.values()) - 1


def classify(cmap: CombinatorialMap,
             faces: Optional[FaceTable] = None) -> ClassificationResult:
    """Classify against (T1), (T2*), (T3*) on the faithful region."""
    faces = faces or trace_faces(cmap)
    res = ClassificationResult("other", certified_radius=_certified_radius(cmap))
    for v in cmap.vertices:
        seen_nbrs: Set[int] = set()
        looped = False
        for h in cmap.rotation(v):
            w = cmap.head(h)
            if w == v:
                if not looped:
                    res.witnesses.append(("loop", v))
                    looped = True
            elif w in seen_nbrs and v < w:
                res.witnesses.append(("multi-edge", (v, w)))
            seen_nbrs.add(w)
    for v in cmap.interior_vertices():
        if cmap.vertex_degree(v) == 1:
            res.witnesses.append(("terminal-vertex", v))
    ext = extended_edges(cmap, faces)
    undecided = False
    for e in ext:
        if e.closed:
            res.witnesses.append(("degree-two-cycle", e.path))
        elif e.regular is False:
            res.witnesses.append(("irregular-extended-edge", e.path))
        elif e.regular is None:
            undecided = True
    for fid in sorted(degenerate_faces(cmap, faces)):
        res.witnesses.append(("degenerate-face", fid))
    for pair in sorted(degenerate_pairs(cmap, faces)):
        res.witnesses.append(("degenerate-pair", pair))
    if res.witnesses:
        res.cls = "other"
    elif undecided:
        res.cls = "undecided-at-radius"
    elif ext:
        res.cls = "locally-tessellating"
    else:
        closed = not cmap.frontier
        all_polygons = all(f.degree not in (None, INF) for f in faces)
        res.cls = "tessellating" if (closed and all_polygons) \
            else "strictly-locally-tessellating"
    return res


@dataclass
class SideConditionReport:
    """The implications of non-positive curvature, checked as facts."""
    mode: str
    applicable: bool
    strict: bool
    positive_witness: Optional[Tuple[object, Fraction]]
    checks: Dict[str, Tuple[bool, Tuple]] = field(default_factory=dict)

    def all_ok(self) -> bool:
        return self.applicable and all(ok for ok, _ in self.checks.values())


def nonpositive_side_conditions(cmap: CombinatorialMap, mode: str,
                                faces: Optional[FaceTable] = None
                                ) -> SideConditionReport:
    """Check what the curvature sign forces: corner mode implies simplicity,
    no terminal vertices and regular extended edges (no extended edges at all
    in the strict case); vertex mode drops simplicity; face mode gives only
    simplicity."""
    if mode not in ("corner", "vertex", "face"):
        raise ValueError("mode must be corner, vertex or face")
    faces = faces or trace_faces(cmap)
    rep = curvature_report(cmap, faces)
    if mode == "corner":
        vals = rep.corner
    elif mode == "vertex":
        vals = rep.vertex
    else:
        vals = {k: v for k, v in rep.face.items() if isinstance(v, Fraction)}
    positive = [(k, val) for k, val in vals.items() if val > 0]
    if positive or not vals:
        return SideConditionReport(mode, False, False,
                                   positive[0] if positive else None)
    strict = all(val < 0 for val in vals.values())
    report = SideConditionReport(mode, True, strict, None)
    ext = [e for e in extended_edges(cmap, faces) if not e.closed]
    if mode in ("corner", "face"):
        multi = [w for w in classify(cmap, faces).witnesses
                 if w[0] in ("loop", "multi-edge")]
        report.checks["simple"] = (not multi, tuple(multi))
    if mode in ("corner", "vertex"):
        terminal = tuple(v for v in cmap.interior_vertices()
                         if cmap.vertex_degree(v) == 1)
        report.checks["no-terminal-vertices"] = (not terminal, terminal)
        irregular = tuple(e.path for e in ext if e.regular is False)
        report.checks["extended-edges-regular"] = (not irregular, irregular)
        if strict:
            report.checks["no-extended-edges"] = (not ext,
                                                  tuple(e.path for e in ext))
    return report
