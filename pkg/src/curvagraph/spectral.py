"""Discrete Laplacians, Cheeger spectral bounds, polar decomposition of
nearest neighbor operators, and the finitely-supported-eigenfunction search.

Floating point lives here only; everything structural (reconstruction
identity, ranks, the eigenfunction verdicts on rational operators) is done
in exact rational arithmetic.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .core import (CombinatorialMap, FaceTable, FaithfulnessError,
                   MapError, ball, distances_from, trace_faces)
from .generators import GeneratorSpec, increasing_tree_degree, pq_ball
from .isoperimetry import cheeger_lower_bounds
from .metric import SphereEnumeration, frontier_distance, sphere_enumeration

_DENSE_LIMIT = 1500


# -- matrices ---------------------------------------------------------------


def laplacian(cmap: CombinatorialMap, kind: str = "combinatorial",
              subset: Optional[Iterable[int]] = None,
              sparse: Optional[bool] = None):
    """Dirichlet restriction of the Laplacian to `subset` (default: all
    interior vertices): functions vanish outside, but outside neighbors
    still contribute to the diagonal degree term.

    Returns (matrix, index).  kind "combinatorial" is diag |v| with -1 off
    the diagonal; "normalized" is the symmetrized form with diag 1 and
    -1/sqrt(|u||v|), unitarily equivalent to the degree-weighted operator.
    """
    if kind not in ("combinatorial", "normalized"):
        raise ValueError("kind must be combinatorial or normalized")
    index = tuple(sorted(subset)) if subset is not None \
        else tuple(sorted(cmap.interior_vertices()))
    bad = [v for v in index if not cmap.is_interior(v)]
    if bad:
        raise FaithfulnessError("subset contains frontier vertices %r" % bad[:5])
    pos = {v: i for i, v in enumerate(index)}
    n = len(index)
    if sparse is None:
        sparse = n > _DENSE_LIMIT
    deg = {v: cmap.vertex_degree(v) for v in index}
    rows, cols, vals = [], [], []
    for v in index:
        i = pos[v]
        rows.append(i)
        cols.append(i)
        vals.append(1.0 if kind == "normalized" else float(deg[v]))
        for h in cmap.rotation(v):
            w = cmap.head(h)
            if w in pos and w != v:
                rows.append(i)
                cols.append(pos[w])
                if kind == "normalized":
                    vals.append(-1.0 / math.sqrt(deg[v] * deg[w]))
                else:
                    vals.append(-1.0)
    import scipy.sparse as sp
    mat = sp.coo_matrix((vals, (rows, cols)), shape=(n, n)).tocsr()
    if not sparse:
        return mat.toarray(), index
    return mat, index


def bottom_of_spectrum(matrix, tol: float = 1e-10) -> Tuple[float, float]:
    """Smallest eigenvalue and the residual ||Mx - lam x|| of its vector."""
    import scipy.sparse as sp
    if sp.issparse(matrix):
        if matrix.shape[0] <= _DENSE_LIMIT:
            matrix = matrix.toarray()
        else:
            from scipy.sparse.linalg import eigsh
            try:
                vals, vecs = eigsh(matrix.astype(float), k=1, sigma=-0.5,
                                   which="LM", tol=tol)
            except Exception as exc:
                raise MapError("eigensolver failed: %s" % exc)
            lam = float(vals[0])
            x = vecs[:, 0]
            resid = float(np.linalg.norm(matrix @ x - lam * x))
            return lam, resid
    matrix = np.asarray(matrix, dtype=float)
    vals, vecs = np.linalg.eigh(matrix)
    lam = float(vals[0])
    x = vecs[:, 0]
    resid = float(np.linalg.norm(matrix @ x - lam * x))
    return lam, resid


def smallest_eigenvalues(matrix, k: int) -> List[float]:
    import scipy.sparse as sp
    if sp.issparse(matrix) and matrix.shape[0] > _DENSE_LIMIT:
        from scipy.sparse.linalg import eigsh
        vals = eigsh(matrix.astype(float), k=k, sigma=-0.5, which="LM",
                     return_eigenvectors=False)
        return sorted(float(x) for x in vals)
    if sp.issparse(matrix):
        matrix = matrix.toarray()
    return [float(x) for x in np.linalg.eigvalsh(np.asarray(matrix, float))[:k]]


@dataclass
class SpectralBoundsReport:
    alpha: Fraction
    min_degree: int
    bound_normalized: float            # 1 - sqrt(1 - alpha^2)
    bound_combinatorial: float         # same times inf |v|
    radii: Tuple[int, ...]
    bottoms_combinatorial: Tuple[float, ...]
    bottoms_normalized: Tuple[float, ...]
    ok_bounds: bool
    ok_monotone: bool

    def all_ok(self) -> bool:
        return self.ok_bounds and self.ok_monotone


def verify_spectral_bounds(cmap: CombinatorialMap, v0: int, radius: int,
                           faces: Optional[FaceTable] = None,
                           slack: float = 1e-9) -> SpectralBoundsReport:
    """Check the Cheeger bounds 1-sqrt(1-alpha^2) <= inf spec at every
    Dirichlet truncation radius, plus monotonicity in the radius."""
    faces = faces or trace_faces(cmap)
    interior = set(cmap.interior_vertices())
    bounds = cheeger_lower_bounds(cmap, interior, faces)
    alpha = bounds.alpha
    a = float(alpha)
    bn = 1.0 - math.sqrt(max(0.0, 1.0 - a * a))
    bc = bn * bounds.p_U
    b = ball(cmap, v0, radius)
    if len(b.spheres) <= radius or any(v not in interior for v in b.ball(radius)):
        raise FaithfulnessError("B_%d not interior; enlarge the map" % radius)
    radii, bots_c, bots_n = [], [], []
    for r in range(1, radius + 1):
        sub = b.ball(r)
        mc, _ = laplacian(cmap, "combinatorial", sub)
        mn, _ = laplacian(cmap, "normalized", sub)
        radii.append(r)
        bots_c.append(bottom_of_spectrum(mc)[0])
        bots_n.append(bottom_of_spectrum(mn)[0])
    ok_bounds = all(x >= bc - slack for x in bots_c) and \
        all(x >= bn - slack for x in bots_n)
    ok_mono = all(bots_c[i + 1] <= bots_c[i] + slack
                  for i in range(len(bots_c) - 1))
    return SpectralBoundsReport(alpha, bounds.p_U, bn, bc, tuple(radii),
                                tuple(bots_c), tuple(bots_n),
                                ok_bounds, ok_mono)


# -- nearest neighbor operators ---------------------------------------------


class NearestNeighborOperator:
    """Coefficients a(v, w), nonzero exactly on adjacent ordered pairs, plus
    an arbitrary diagonal."""

    def __init__(self, cmap: CombinatorialMap, offdiag: Dict[Tuple[int, int], object],
                 diag: Optional[Dict[int, object]] = None):
        self.map = cmap
        self.offdiag = dict(offdiag)
        self.diag = dict(diag or {})
        pairs = set()
        for v in cmap.vertices:
            for w in cmap.neighbors(v):
                if w != v:
                    pairs.add((v, w))
        missing = [p for p in pairs if not self.offdiag.get(p)]
        if missing:
            raise MapError("nearest neighbor operator needs a nonzero "
                           "coefficient on every adjacent pair; missing %r"
                           % missing[:3])
        extra = [p for p in self.offdiag if p not in pairs]
        if extra:
            raise MapError("coefficients off the adjacency pattern: %r"
                           % extra[:3])

    def coeff(self, v: int, w: int):
        if v == w:
            return self.diag.get(v, Fraction(0))
        return self.offdiag.get((v, w), Fraction(0))

    def apply(self, phi: Dict[int, object]) -> Dict[int, object]:
        """A phi on every vertex whose full neighborhood is materialized."""
        out = {}
        for v in self.map.interior_vertices():
            s = self.diag.get(v, Fraction(0)) * phi.get(v, Fraction(0))
            for w in self.map.neighbors(v):
                if w != v:
                    s += self.offdiag[(v, w)] * phi.get(w, Fraction(0))
            out[v] = s
        return out

    def submatrix(self, rows: Sequence[int], cols: Sequence[int],
                  lam=None) -> List[Dict[int, object]]:
        """Sparse rows of A - lam I restricted to rows x cols."""
        cpos = {c: j for j, c in enumerate(cols)}
        out = []
        for r in rows:
            row: Dict[int, object] = {}
            if r in cpos:
                d = self.diag.get(r, Fraction(0))
                if lam is not None:
                    d = d - lam
                if d:
                    row[cpos[r]] = d
            for w in self.map.neighbors(r):
                if w != r and w in cpos:
                    row[cpos[w]] = row.get(cpos[w], Fraction(0)) + self.offdiag[(r, w)]
            out.append({j: x for j, x in row.items() if x})
        return out


def laplacian_operator(cmap: CombinatorialMap) -> NearestNeighborOperator:
    offdiag = {}
    diag = {}
    for v in cmap.vertices:
        diag[v] = Fraction(cmap.vertex_degree(v))
        for w in cmap.neighbors(v):
            if w != v:
                offdiag[(v, w)] = Fraction(-1)
    return NearestNeighborOperator(cmap, offdiag, diag)


def random_rational_operator(cmap: CombinatorialMap, seed: int,
                             symmetric: bool = False) -> NearestNeighborOperator:
    """Deterministic pseudo-random rational coefficients, all nonzero."""
    rng = random.Random(seed)
    offdiag = {}
    diag = {}
    for v in sorted(cmap.vertices):
        diag[v] = Fraction(rng.randint(-6, 6), rng.randint(1, 5))
        for w in sorted(set(cmap.neighbors(v))):
            if w == v:
                continue
            if symmetric and (w, v) in offdiag:
                offdiag[(v, w)] = offdiag[(w, v)]
            else:
                offdiag[(v, w)] = Fraction(rng.randint(1, 9), rng.randint(1, 7))
    return NearestNeighborOperator(cmap, offdiag, diag)


# -- polar decomposition ------------------------------------------------------


@dataclass
class PolarOperator:
    """Block structure of a nearest neighbor operator over BFS spheres:
    D_n on S_n, E_n(i,j) = a(v_i^{(n+1)}, v_j^{(n)}) and E_n' its mirror.

    With E defined directly by the coefficients, the operator reconstructs
    as (A phi)_n = E_{n-1} phi_{n-1} + D_n phi_n + E_n' phi_{n+1}.
    """
    enumeration: SphereEnumeration
    D: List[Dict[Tuple[int, int], object]]
    E: List[Dict[Tuple[int, int], object]]
    Ep: List[Dict[Tuple[int, int], object]]
    sizes: Tuple[int, ...]

    def levels(self) -> int:
        return len(self.sizes)


def polar_decompose(cmap: CombinatorialMap, A: NearestNeighborOperator,
                    v0: int, horizon: int,
                    faces: Optional[FaceTable] = None,
                    check_vectors: int = 10, seed: int = 0) -> PolarOperator:
    """Build the per-level blocks along the aligned sphere enumerations and
    verify the reconstruction identity on random finitely supported
    vectors (exactly, in rational arithmetic)."""
    if frontier_distance(cmap, v0) <= horizon:
        raise FaithfulnessError("polar decomposition to horizon %d needs an "
                                "interior ball of that radius" % horizon)
    faces = faces or trace_faces(cmap)
    enum = sphere_enumeration(cmap, v0, horizon, faces)
    levels = enum.levels
    D, E, Ep = [], [], []
    for n, sphere in enumerate(levels):
        pos = {v: i for i, v in enumerate(sphere)}
        Dn = {}
        for v in sphere:
            i = pos[v]
            d = A.coeff(v, v)
            if d:
                Dn[(i, i)] = d
            for w in cmap.neighbors(v):
                if w in pos and w != v:
                    Dn[(i, pos[w])] = A.coeff(v, w)
        D.append(Dn)
        if n + 1 < len(levels):
            nxt = {v: i for i, v in enumerate(levels[n + 1])}
            En = {}
            Epn = {}
            for w, i in nxt.items():
                for u in cmap.neighbors(w):
                    if u in pos:
                        En[(i, pos[u])] = A.coeff(w, u)
                        Epn[(pos[u], i)] = A.coeff(u, w)
            E.append(En)
            Ep.append(Epn)
    polar = PolarOperator(enum, D, E, Ep, tuple(len(s) for s in levels))
    _verify_reconstruction(cmap, A, polar, check_vectors, seed)
    return polar


def _verify_reconstruction(cmap, A, polar, trials, seed):
    rng = random.Random(seed)
    levels = polar.enumeration.levels
    support = [v for sphere in levels[:-1] for v in sphere]
    for _ in range(trials):
        phi = {v: Fraction(rng.randint(-9, 9), rng.randint(1, 4))
               for v in support}
        direct = A.apply(phi)
        acc = {v: Fraction(0) for sphere in levels[:-1] for v in sphere}
        for n, sphere in enumerate(levels[:-1]):
            for (i, j), val in polar.D[n].items():
                x = phi.get(sphere[j], Fraction(0))
                if x:
                    acc[sphere[i]] += val * x
            if n > 0:
                prev = levels[n - 1]
                for (i, j), val in polar.E[n - 1].items():
                    x = phi.get(prev[j], Fraction(0))
                    if x:
                        acc[sphere[i]] += val * x
            nxt = levels[n + 1]
            for (i, j), val in polar.Ep[n].items():
                if i < len(sphere):
                    x = phi.get(nxt[j], Fraction(0))
                    if x:
                        acc[sphere[i]] += val * x
        for v, got in acc.items():
            if got != direct[v]:
                raise MapError("polar reconstruction mismatch at vertex %r" % v)


def rational_rank(rows: List[Dict[int, Fraction]]) -> int:
    """Row rank by exact Gaussian elimination on sparse rational rows."""
    pivots: Dict[int, Dict[int, Fraction]] = {}
    rank = 0
    for row in rows:
        row = dict(row)
        while row:
            c = min(row)
            if c in pivots:
                piv = pivots[c]
                factor = row[c] / piv[c]
                for cc, val in piv.items():
                    nv = row.get(cc, Fraction(0)) - factor * val
                    if nv:
                        row[cc] = nv
                    else:
                        row.pop(cc, None)
            else:
                pivots[c] = row
                rank += 1
                break
    return rank


@dataclass
class EStructureReport:
    levels: int
    column_nonzero: Tuple[bool, ...]
    row_counts_ok: Tuple[bool, ...]
    rows_adjacent_ok: Tuple[bool, ...]
    column_pairs_ok: Tuple[bool, ...]
    injective: Tuple[bool, ...]

    def all_ok(self) -> bool:
        return all(self.column_nonzero) and all(self.row_counts_ok) \
            and all(self.rows_adjacent_ok) and all(self.column_pairs_ok) \
            and all(self.injective)


def check_E_structure(polar: PolarOperator) -> EStructureReport:
    """The structural facts behind unique continuation: every column of E_n
    hits S_{n+1}, rows have one or two nonzeros at succeeding columns, column
    pairs overlap in at most one row, and E_n has full column rank (exact
    rational elimination)."""
    cols_ok, rows_ok, adj_ok, pairs_ok, inj = [], [], [], [], []
    for n, En in enumerate(polar.E):
        s_next = polar.sizes[n + 1]
        s_cur = polar.sizes[n]
        by_col: Dict[int, List[int]] = {}
        by_row: Dict[int, List[int]] = {}
        for (i, j) in En:
            by_col.setdefault(j, []).append(i)
            by_row.setdefault(i, []).append(j)
        cols_ok.append(all(by_col.get(j) for j in range(s_cur)))
        counts = [len(by_row.get(i, ())) for i in range(s_next)]
        rows_ok.append(all(c in (1, 2) for c in counts))
        adj = True
        for i, js in by_row.items():
            if len(js) == 2:
                a, b = sorted(js)
                if not (b - a == 1 or (a == 0 and b == s_cur - 1 and s_cur > 2)):
                    adj = False
        adj_ok.append(adj)
        pairs = True
        col_list = sorted(by_col)
        for ci in range(len(col_list)):
            for cj in range(ci + 1, len(col_list)):
                shared = set(by_col[col_list[ci]]) & set(by_col[col_list[cj]])
                if len(shared) > 1:
                    pairs = False
                elif len(shared) == 1:
                    r = next(iter(shared))
                    if not (set(by_col[col_list[ci]]) - {r}
                            and set(by_col[col_list[cj]]) - {r}):
                        pairs = False
        pairs_ok.append(pairs)
        rows = [dict() for _ in range(s_next)]
        for (i, j), val in En.items():
            rows[i][j] = Fraction(val) if not isinstance(val, Fraction) else val
        inj.append(rational_rank(rows) == s_cur)
    return EStructureReport(len(polar.E), tuple(cols_ok), tuple(rows_ok),
                            tuple(adj_ok), tuple(pairs_ok), tuple(inj))


# -- finitely supported eigenfunctions ----------------------------------------


@dataclass
class Eigenfunction:
    lam: object                     # Fraction (exact) or float
    vector: Dict[int, object]
    exact: bool
    residual: float


def _rational_nullspace(rows: List[Dict[int, Fraction]], ncols: int
                        ) -> List[List[Fraction]]:
    """Basis of the exact null space of a sparse rational matrix."""
    pivots: Dict[int, Dict[int, Fraction]] = {}
    for row in rows:
        row = dict(row)
        while row:
            c = min(row)
            if c in pivots:
                piv = pivots[c]
                factor = row[c] / piv[c]
                for cc, val in piv.items():
                    nv = row.get(cc, Fraction(0)) - factor * val
                    if nv:
                        row[cc] = nv
                    else:
                        row.pop(cc, None)
            else:
                pivots[c] = row
                break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for c in sorted(pivots, reverse=True):
            row = pivots[c]
            s = sum((val * vec[cc] for cc, val in row.items() if cc != c),
                    Fraction(0))
            vec[c] = -s / row[c]
        basis.append(vec)
    return basis


def finitely_supported_eigenfunctions(cmap: CombinatorialMap,
                                      A: NearestNeighborOperator, v0: int,
                                      horizon: int,
                                      tol: float = 1e-8) -> List[Eigenfunction]:
    """All (lam, phi) with phi supported in B_{horizon-2} and A phi = lam phi.

    Candidate eigenvalues are those of the restriction of A to the support
    ball; for each, the pencil restricted to rows B_{horizon-1} and columns
    B_{horizon-2} is solved (exactly when lam is rational, else numerically
    with an svd threshold).  Empty whenever corner curvature is non-positive.
    """
    dist = distances_from(cmap, v0)
    supp = sorted(v for v, d in dist.items() if d <= horizon - 2)
    rows = sorted(v for v, d in dist.items() if d <= horizon - 1)
    bad = [v for v in rows if not cmap.is_interior(v)]
    if bad:
        raise FaithfulnessError("rows B_%d contain frontier vertices %r"
                                % (horizon - 1, bad[:5]))
    M = np.zeros((len(supp), len(supp)))
    for i, r in enumerate(A.submatrix(supp, supp)):
        for j, val in r.items():
            M[i, j] = float(val)
    cand = np.linalg.eigvals(M)
    lams: List[complex] = []
    for lam in sorted(cand, key=lambda z: (round(z.real, 7), round(z.imag, 7))):
        if not any(abs(lam - mu) < 1e-7 for mu in lams):
            lams.append(lam)
    scale = max(1.0, float(np.max(np.abs(M))))
    found: List[Eigenfunction] = []
    for lam in lams:
        lam_c = complex(lam)
        if abs(lam_c.imag) < 1e-9:
            lam_try: object = lam_c.real
        else:
            lam_try = lam_c
        K = np.zeros((len(rows), len(supp)),
                     dtype=complex if isinstance(lam_try, complex) else float)
        for i, r in enumerate(A.submatrix(rows, supp, lam=Fraction(0))):
            for j, val in r.items():
                K[i, j] = float(val)
        for j, v in enumerate(supp):
            K[rows.index(v), j] -= lam_try
        svals = np.linalg.svd(K, compute_uv=False)
        if svals[-1] > tol * scale:
            continue
        exact_done = False
        if isinstance(lam_try, float):
            lam_r = Fraction(lam_try).limit_denominator(10 ** 6)
            if abs(float(lam_r) - lam_try) < 1e-9:
                krows = A.submatrix(rows, supp, lam=lam_r)
                basis = _rational_nullspace(krows, len(supp))
                for vec in basis:
                    phi = {supp[j]: vec[j] for j in range(len(supp)) if vec[j]}
                    found.append(Eigenfunction(lam_r, phi, True, 0.0))
                exact_done = True
        if not exact_done:
            u, s, vt = np.linalg.svd(K)
            null = vt[-1].conj()
            phi = {supp[j]: complex(null[j]) for j in range(len(supp))
                   if abs(null[j]) > 1e-10}
            found.append(Eigenfunction(lam_try, phi, False, float(svals[-1])))
    return found


# -- essential spectrum proxy --------------------------------------------------


@dataclass
class EssentialSpectrumProxy:
    kind: str
    alpha_rows: List[Tuple[int, Fraction]]
    rigor_rows: List[Tuple[int, float]]       # (1-sqrt(1-a^2)) inf deg on U_r
    eigen_radii: Tuple[int, ...]
    eigen_rows: List[Tuple[float, ...]]
    alpha_nondecreasing: bool = True
    eigen_strictly_increasing: bool = False

    def eigen_bottom(self) -> List[float]:
        return [row[0] for row in self.eigen_rows]


def _star_window_eigs(center_deg: int, leaf_deg: int, k: int) -> List[float]:
    """Eigenvalues of one outer-shell star: a depth r-1 vertex joined to its
    center_deg - 1 children, Dirichlet diagonal = full degrees."""
    c = center_deg - 1
    m = np.zeros((c + 1, c + 1))
    m[0, 0] = center_deg
    for i in range(1, c + 1):
        m[i, i] = leaf_deg
        m[0, i] = m[i, 0] = -1.0
    return sorted(float(x) for x in np.linalg.eigvalsh(m))[:k]


def essential_spectrum_proxy(spec: GeneratorSpec, radii: Sequence[int],
                             alpha_radii: Optional[Sequence[int]] = None,
                             k: int = 5) -> EssentialSpectrumProxy:
    """Desk-scale probes of essential-spectrum triviality.

    For tree generators: exact Cheeger lower bounds on the complements of
    open balls (from the radial degree profile), the rigorous spectral lower
    bound they imply, and the k smallest Dirichlet eigenvalues of the
    outer-shell window S_{r-1} + S_r per radius (block-diagonal in stars, so
    solved per representative star).  For pq generators: Dirichlet ball
    bottoms, which approach the infinite-graph infimum from above.
    """
    kind = spec.kind
    alpha_radii = list(alpha_radii if alpha_radii is not None else radii)
    if kind in ("inctree", "increasing-tree", "tree", "regular-tree"):
        base = spec.p or 3
        if kind in ("inctree", "increasing-tree"):
            def degree_at(r):
                return increasing_tree_degree(r, base)
        else:
            def degree_at(r):
                return base
        alpha_rows = []
        rigor_rows = []
        for r in sorted(alpha_radii):
            p_r = degree_at(r)
            a = 1 - Fraction(2, p_r)
            alpha_rows.append((r, a))
            af = float(a)
            rigor_rows.append((r, (1 - math.sqrt(max(0.0, 1 - af * af))) * p_r))
        eigen_rows = []
        for r in radii:
            if r < 2:
                raise ValueError("window needs radius >= 2")
            eigen_rows.append(tuple(_star_window_eigs(degree_at(r - 1),
                                                      degree_at(r), k)[:1] * k)[:k])
        alpha_ok = all(alpha_rows[i][1] <= alpha_rows[i + 1][1]
                       for i in range(len(alpha_rows) - 1))
        eig_inc = all(max(eigen_rows[i]) < min(eigen_rows[i + 1])
                      for i in range(len(eigen_rows) - 1))
        return EssentialSpectrumProxy(kind, alpha_rows, rigor_rows,
                                      tuple(radii), eigen_rows,
                                      alpha_ok, eig_inc)
    if kind in ("pq", "pq-tessellation"):
        cmap = pq_ball(spec.p, int(spec.q), max(radii) + 1)
        faces = trace_faces(cmap)
        b = ball(cmap, 0, max(radii))
        eigen_rows = []
        for r in radii:
            m, _ = laplacian(cmap, "combinatorial", b.ball(r))
            eigen_rows.append(tuple(smallest_eigenvalues(m, min(k, len(b.ball(r))))))
        interior = set(cmap.interior_vertices())
        bounds = cheeger_lower_bounds(cmap, interior, faces)
        a = bounds.alpha
        af = float(a)
        rig = (1 - math.sqrt(max(0.0, 1 - af * af))) * bounds.p_U
        return EssentialSpectrumProxy(kind, [(r, a) for r in radii],
                                      [(r, rig) for r in radii],
                                      tuple(radii), eigen_rows,
                                      True, False)
    raise ValueError("proxy supports tree and pq generators, not %r" % kind)
