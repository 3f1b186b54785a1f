"""Cheeger constants: brute force over small connected sets and the
curvature lower bounds.

alpha_U = inf |boundary edges| / vol(W), beta_U = inf |boundary edges| / |W|
over finite W inside U, with vol(W) the sum of vertex degrees.  The infimum
is attained on connected sets, so the search enumerates each connected
subset exactly once (minimal-vertex anchoring).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, FrozenSet, Iterable, List, Optional, Tuple

from .core import (INF, CombinatorialMap, FaceTable, MapError,
                   distances_from, trace_faces)
from .curvature import curvature_report


def edge_boundary(cmap: CombinatorialMap, W: Iterable[int]) -> int:
    """Number of edges joining W to its complement (frontier edges count)."""
    Wset = set(W)
    return sum(1 for v in Wset for h in cmap.rotation(v)
               if cmap.head(h) not in Wset)


def volume(cmap: CombinatorialMap, W: Iterable[int]) -> int:
    return sum(cmap.vertex_degree(v) for v in W)


def connected_subsets(cmap: CombinatorialMap, universe: Iterable[int],
                      k: int) -> Iterable[FrozenSet[int]]:
    """Every connected subset of `universe` with at most k vertices, once.

    Each set is produced from its minimal vertex (the anchor); a candidate
    skipped at a branch point is banned below it, which prevents duplicates.
    """
    allowed_all = set(universe)
    order = sorted(allowed_all)
    results: List[FrozenSet[int]] = []

    def nbrs(v, allowed):
        seen = []
        for w in cmap.neighbors(v):
            if w in allowed and w not in seen:
                seen.append(w)
        return seen

    for anchor in order:
        allowed = {v for v in allowed_all if v > anchor}
        S = {anchor}

        def rec(cand: Tuple[int, ...], banned: FrozenSet[int]):
            results.append(frozenset(S))
            if len(S) == k:
                return
            for i, v in enumerate(cand):
                S.add(v)
                new_banned = banned | frozenset(cand[:i])
                ext = tuple(w for w in nbrs(v, allowed)
                            if w not in S and w not in new_banned
                            and w not in cand[i + 1:])
                rec(cand[i + 1:] + ext, new_banned)
                S.remove(v)

        rec(tuple(nbrs(anchor, allowed)), frozenset())
    return results


@dataclass
class CheegerBounds:
    """Thm-style lower bounds from local degree data and from curvature."""
    p_U: float
    q_U: float
    alpha: Fraction                   # 1 - (1/p)(2q/(q-2))
    beta: Fraction                    # p - 2q/(q-2)
    C: Optional[Fraction] = None
    alpha_curv: Optional[Fraction] = None   # -2C sup kappa_V(v)/|v|
    beta_curv: Optional[Fraction] = None    # -2C sup kappa_V


def _face_ratio(q) -> Fraction:
    """2q/(q-2) with the convention inf/inf = 1."""
    if q == INF:
        return Fraction(2)
    q = int(q)
    if q == 2:
        raise MapError("q_U = 2 (degenerate bigon faces); bound undefined")
    return Fraction(2 * q, q - 2)


def cheeger_lower_bounds(cmap: CombinatorialMap, U: Iterable[int],
                         faces: Optional[FaceTable] = None) -> CheegerBounds:
    Uset = set(U)
    if not Uset:
        raise MapError("U is empty")
    bad = [v for v in Uset if not cmap.is_interior(v)]
    if bad:
        raise MapError("U must be interior; frontier vertices %r" % bad[:5])
    faces = faces or trace_faces(cmap)
    p_U = min(cmap.vertex_degree(v) for v in Uset)
    q_degrees = []
    for f in faces:
        if faces.vertices_of(f.id) & Uset:
            if f.degree is None:
                raise MapError("face %d meeting U has unknown degree" % f.id)
            q_degrees.append(f.degree)
    q_U = min(q_degrees)
    ratio = _face_ratio(q_U)
    alpha = 1 - Fraction(1, p_U) * ratio
    beta = p_U - ratio
    bounds = CheegerBounds(p_U, q_U, alpha, beta)
    rep = curvature_report(cmap, faces)
    if rep.vertex:
        degrees = [f.degree for f in faces if f.degree is not None]
        P = max(cmap.vertex_degree(v) for v in cmap.interior_vertices())
        Q = max(degrees)
        first = 1 + (Fraction(0) if Q == INF else Fraction(2, int(Q) - 2))
        denom = INF if Q == INF else (P - 2) * (int(Q) - 2) - 2
        second = 1 + (Fraction(0) if denom == INF else
                      (Fraction(2, denom) if denom != 0 else None))
        if second is not None:
            C = first * second
            bounds.C = C
            sup_ratio = max(k / cmap.vertex_degree(v)
                            for v, k in rep.vertex.items())
            bounds.alpha_curv = -2 * C * sup_ratio
            bounds.beta_curv = -2 * C * rep.sup_vertex
    return bounds


@dataclass
class CheegerEstimate:
    alpha_upper: Fraction
    beta_upper: Fraction
    alpha_lower: Fraction
    beta_lower: Fraction
    witness_alpha: FrozenSet[int]
    witness_beta: FrozenSet[int]
    searched_k: int
    searched_size: int
    bounds: CheegerBounds = None

    def consistent(self) -> bool:
        return self.alpha_lower <= self.alpha_upper \
            and self.beta_lower <= self.beta_upper


def cheeger_bruteforce(cmap: CombinatorialMap, U: Iterable[int], k: int,
                       faces: Optional[FaceTable] = None,
                       max_sets: int = 2_000_000) -> CheegerEstimate:
    """Exact minimum of both isoperimetric ratios over connected W inside U
    with |W| <= k, plus the matching lower bounds."""
    Uset = set(U)
    bounds = cheeger_lower_bounds(cmap, Uset, faces)
    best_a: Optional[Fraction] = None
    best_b: Optional[Fraction] = None
    wit_a = wit_b = frozenset()
    count = 0
    for W in connected_subsets(cmap, Uset, k):
        count += 1
        if count > max_sets:
            raise MapError("subset cap exceeded (%d sets); lower k" % max_sets)
        bnd = edge_boundary(cmap, W)
        a = Fraction(bnd, volume(cmap, W))
        b = Fraction(bnd, len(W))
        if best_a is None or a < best_a:
            best_a, wit_a = a, W
        if best_b is None or b < best_b:
            best_b, wit_b = b, W
    if best_a is None:
        raise MapError("U is empty")
    return CheegerEstimate(best_a, best_b, bounds.alpha, bounds.beta,
                           wit_a, wit_b, k, len(Uset), bounds)


def complement_components(cmap: CombinatorialMap, W: Iterable[int]) -> int:
    """Connected components of the materialized complement of W."""
    Wset = set(W)
    rest = [v for v in cmap.vertices if v not in Wset]
    seen = set()
    comps = 0
    for start in rest:
        if start in seen:
            continue
        comps += 1
        stack = [start]
        seen.add(start)
        while stack:
            u = stack.pop()
            for w in cmap.neighbors(u):
                if w not in Wset and w not in seen:
                    seen.add(w)
                    stack.append(w)
    return comps


@dataclass
class IsoperimetricCheck:
    tested: int
    skipped_near_frontier: int
    violations: List[FrozenSet[int]]

    def holds(self) -> bool:
        return not self.violations


def check_isoperimetric_inequality(cmap: CombinatorialMap, U: Iterable[int],
                                   k: int,
                                   faces: Optional[FaceTable] = None
                                   ) -> IsoperimetricCheck:
    """|boundary| >= vol(W) - (2q/(q-2)) (|W| + c(W) - 2) for connected W
    with at most two complement components.

    c(W) counted on the materialized map is only faithful away from the rim,
    so sets touching the frontier or its neighbors are skipped.
    """
    Uset = set(U)
    faces = faces or trace_faces(cmap)
    bounds = cheeger_lower_bounds(cmap, Uset, faces)
    ratio = _face_ratio(bounds.q_U)
    near_frontier = set(cmap.frontier)
    for v in cmap.frontier:
        near_frontier.update(cmap.neighbors(v))
    tested = skipped = 0
    violations: List[FrozenSet[int]] = []
    for W in connected_subsets(cmap, Uset, k):
        if W & near_frontier:
            skipped += 1
            continue
        c = complement_components(cmap, W)
        if c > 2:
            continue
        tested += 1
        lhs = Fraction(edge_boundary(cmap, W))
        rhs = volume(cmap, W) - ratio * (len(W) + c - 2)
        if lhs < rhs:
            violations.append(W)
    return IsoperimetricCheck(tested, skipped, violations)


def cheeger_at_infinity_proxy(cmap: CombinatorialMap, v0: int,
                              radii: Iterable[int],
                              faces: Optional[FaceTable] = None
                              ) -> List[Tuple[int, Fraction, Fraction]]:
    """Lower bounds on U_r = interior vertices at distance >= r from v0,
    along the ball exhaustion (a proxy for the boundary Cheeger constants)."""
    faces = faces or trace_faces(cmap)
    dist = distances_from(cmap, v0)
    out = []
    for r in sorted(radii):
        U = {v for v in cmap.interior_vertices() if dist[v] >= r}
        if not U:
            break
        b = cheeger_lower_bounds(cmap, U, faces)
        out.append((r, b.alpha, b.beta))
    return out


def cheeger_at_infinity_profile(degree_at: Callable[[int], int],
                                radii: Iterable[int],
                                q: float = INF
                                ) -> List[Tuple[int, Fraction, object]]:
    """Exact bounds on the complement of the open r-ball for a generator with
    a nondecreasing radial degree profile (no materialization needed)."""
    ratio = _face_ratio(q)
    out = []
    for r in sorted(radii):
        p = degree_at(r)
        alpha = 1 - Fraction(1, p) * ratio
        beta = p - ratio
        out.append((r, alpha, beta))
    return out
