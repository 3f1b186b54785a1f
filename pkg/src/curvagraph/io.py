"""Line-oriented text format for combinatorial maps.

Simple graphs use ``v`` lines::

    v <id>: <n1> <n2> ... <nk>     # neighbors in ccw cyclic order

Each adjacency must appear on both endpoints' lines.  Multigraphs and loops
use ``h`` lines instead (one per half-edge, grouped by tail in rotation
order)::

    h <halfedge-id> <tail-id> <twin-id>

Optional lines: ``frontier: <id> ...`` and ``facehint: <deg|inf>``.
``#`` starts a comment.  A file uses one of the two edge forms only.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Tuple

from .core import INF, CombinatorialMap, MapError


class ParseError(MapError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)


def _strip(line: str) -> str:
    if "#" in line:
        line = line[:line.index("#")]
    return line.strip()


def parse_map(text) -> CombinatorialMap:
    """Parse the text format; accepts str or bytes."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    vlines: List[Tuple[int, int, List[int]]] = []   # (lineno, vid, neighbors)
    hlines: List[Tuple[int, int, int, int]] = []    # (lineno, hid, tail, twin)
    frontier: List[int] = []
    face_hint: Optional[float] = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        if line.startswith("v ") or line.startswith("v\t"):
            body = line[2:]
            if ":" not in body:
                raise ParseError("expected 'v <id>: <neighbors>'", lineno)
            head, _, rest = body.partition(":")
            try:
                vid = int(head.strip())
                nbrs = [int(tok) for tok in rest.split()]
            except ValueError:
                raise ParseError("bad integer in vertex line", lineno) from None
            vlines.append((lineno, vid, nbrs))
        elif line.startswith("h ") or line.startswith("h\t"):
            toks = line[2:].split()
            if len(toks) != 3:
                raise ParseError("expected 'h <id> <tail> <twin>'", lineno)
            try:
                hid, tail, twin = (int(t) for t in toks)
            except ValueError:
                raise ParseError("bad integer in half-edge line", lineno) from None
            hlines.append((lineno, hid, tail, twin))
        elif line.startswith("frontier:"):
            try:
                frontier = [int(tok) for tok in line[len("frontier:"):].split()]
            except ValueError:
                raise ParseError("bad vertex id in frontier line", lineno) from None
        elif line.startswith("map ") or line.startswith("map\t"):
            continue    # correspondence tables of embedding files
        elif line.startswith("facehint:"):
            tok = line[len("facehint:"):].strip()
            if tok == "inf":
                face_hint = INF
            else:
                try:
                    face_hint = int(tok)
                except ValueError:
                    raise ParseError("facehint must be an integer or 'inf'",
                                     lineno) from None
        else:
            raise ParseError("unrecognized line %r" % raw.strip(), lineno)
    if vlines and hlines:
        raise ParseError("file mixes 'v' and 'h' forms")
    if vlines:
        return _from_vlines(vlines, frontier, face_hint)
    if hlines:
        return _from_hlines(hlines, frontier, face_hint)
    raise ParseError("no vertices")


def _from_vlines(vlines, frontier, face_hint) -> CombinatorialMap:
    order: Dict[int, List[int]] = {}
    seen_line: Dict[int, int] = {}
    for lineno, vid, nbrs in vlines:
        if vid in order:
            raise ParseError("vertex %d defined twice" % vid, lineno)
        order[vid] = nbrs
        seen_line[vid] = lineno
    for vid, nbrs in order.items():
        if vid in nbrs:
            raise ParseError("loop at vertex %d needs the 'h' form" % vid,
                             seen_line[vid])
        if len(set(nbrs)) != len(nbrs):
            raise ParseError("multi-edge at vertex %d needs the 'h' form" % vid,
                             seen_line[vid])
        for w in nbrs:
            if w not in order:
                raise ParseError("vertex %d lists unknown neighbor %d" % (vid, w),
                                 seen_line[vid])
            if vid not in order[w]:
                raise ParseError(
                    "adjacency %d-%d missing from vertex %d's line" % (vid, w, w),
                    seen_line[vid])
    # assign half-edge ids by (vertex line order, slot order)
    hid_of: Dict[Tuple[int, int], int] = {}
    nxt = 0
    for _, vid, nbrs in vlines:
        for w in nbrs:
            hid_of[(vid, w)] = nxt
            nxt += 1
    rotation = {}
    twin = {}
    for _, vid, nbrs in vlines:
        hs = tuple(hid_of[(vid, w)] for w in nbrs)
        rotation[vid] = hs
        for w in nbrs:
            twin[hid_of[(vid, w)]] = hid_of[(w, vid)]
    return CombinatorialMap(rotation, twin, frontier, face_hint)


def _from_hlines(hlines, frontier, face_hint) -> CombinatorialMap:
    twin: Dict[int, int] = {}
    rotation: Dict[int, List[int]] = {}
    for lineno, hid, tail, tw in hlines:
        if hid in twin:
            raise ParseError("half-edge %d defined twice" % hid, lineno)
        twin[hid] = tw
        rotation.setdefault(tail, []).append(hid)
    for lineno, hid, tail, tw in hlines:
        if tw not in twin:
            raise ParseError("half-edge %d has unpaired twin %d" % (hid, tw),
                             lineno)
        if twin[tw] != hid:
            raise ParseError("twin map not involutive at %d" % hid, lineno)
    return CombinatorialMap(rotation, twin, frontier, face_hint)


def serialize_map(cmap: CombinatorialMap) -> str:
    """Canonical text form: sorted vertices, stored rotation order."""
    lines = []
    if cmap.is_simple():
        for v in cmap.vertices:
            nbrs = " ".join(str(w) for w in cmap.neighbors(v))
            lines.append("v %d: %s" % (v, nbrs))
    else:
        for v in cmap.vertices:
            for h in cmap.rotation(v):
                lines.append("h %d %d %d" % (h, v, cmap.twin(h)))
    if cmap.frontier:
        lines.append("frontier: " + " ".join(str(v) for v in sorted(cmap.frontier)))
    if cmap.face_hint is not None:
        tok = "inf" if cmap.face_hint == INF else str(int(cmap.face_hint))
        lines.append("facehint: " + tok)
    return "\n".join(lines) + "\n"
