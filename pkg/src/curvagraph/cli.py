"""Command line frontend.

Exit codes: 0 = success, 1 = a verified property was violated (a finding),
2 = usage or input error.  Reports are deterministic for a fixed
configuration including the seed.
"""

from __future__ import annotations

import argparse
import random
import sys
from fractions import Fraction

from .core import INF, FaithfulnessError, MapError, ball, trace_faces
from .classify import classify, nonpositive_side_conditions
from .curvature import (curvature_report, gauss_bonnet, higuchi_gap,
                        MINUS_INFINITY_HINT)
from .embedding import embed, serialize_embedding, verify_properties
from .generators import GeneratorSpec, generate
from .io import parse_map
from .isoperimetry import (cheeger_at_infinity_proxy, cheeger_bruteforce,
                           check_isoperimetric_inequality)
from .metric import (check_admissibility, cut_locus, growth_check,
                     minimal_bigons)
from .report import Report
from .spectral import (check_E_structure,
                       finitely_supported_eigenfunctions, laplacian_operator,
                       polar_decompose, random_rational_operator,
                       verify_spectral_bounds)

COMMANDS = ("curvature", "classify", "gauss-bonnet", "embed", "cutlocus",
            "admissibility", "bigons", "growth", "cheeger", "spectrum",
            "polar", "eigensearch")


class UsageError(Exception):
    pass


def parse_gen(text: str, radius: int) -> GeneratorSpec:
    kind, _, rest = text.partition(":")
    if kind == "pq":
        try:
            p, q = rest.split(",")
            qv = INF if q.strip() == "inf" else int(q)
            return GeneratorSpec("pq-tessellation", p=int(p), q=qv,
                                 radius=radius)
        except ValueError:
            raise UsageError("expected pq:<p>,<q>, got %r" % text)
    if kind == "tree":
        return GeneratorSpec("regular-tree", p=int(rest or 3), radius=radius)
    if kind == "solid":
        return GeneratorSpec("platonic-solid", solid=rest or "cube")
    if kind == "octahub":
        return GeneratorSpec("octahedron-hub", radius=radius)
    if kind == "inctree":
        return GeneratorSpec("increasing-tree", p=int(rest or 3),
                             radius=radius)
    if kind == "line":
        return GeneratorSpec("line", radius=radius)
    raise UsageError("unknown generator %r (pq:, tree:, solid:, octahub, "
                     "inctree, line)" % text)


def load_map(args):
    if args.file and args.gen:
        raise UsageError("give either --file or --gen, not both")
    if args.file:
        try:
            with open(args.file, "rb") as fh:
                return parse_map(fh.read())
        except OSError as exc:
            raise UsageError("cannot read %s: %s" % (args.file, exc))
    if args.gen:
        return generate(parse_gen(args.gen, args.radius))
    raise UsageError("an input is required: --file or --gen")


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError("bad rational %r" % text)


def _vertex_list(text: str):
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError("bad vertex list %r" % text)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="curvagraph",
        description="discrete curvature, geometry and spectra of planar "
                    "graphs given as combinatorial maps")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("--file", help="graph file (see docs for the format)")
    ap.add_argument("--gen", help="generator, e.g. pq:7,3 tree:3 solid:cube "
                                  "octahub inctree line")
    ap.add_argument("--radius", type=int, default=4,
                    help="generator radius / ray length")
    ap.add_argument("--root", type=int, default=None,
                    help="root vertex (default: smallest id)")
    ap.add_argument("--horizon", type=int, default=3)
    ap.add_argument("--eps", default="1/2000", help="closing parameter eps")
    ap.add_argument("--w", help="vertex set, comma separated")
    ap.add_argument("--all", action="store_true",
                    help="gauss-bonnet: use every vertex")
    ap.add_argument("--random", type=int, default=0, metavar="N",
                    help="gauss-bonnet: N random connected subsets")
    ap.add_argument("--max-size", type=int, default=12)
    ap.add_argument("--k", type=int, default=6, help="cheeger subset cap")
    ap.add_argument("--u-radius", type=int, default=2,
                    help="cheeger: search region B_r around the root")
    ap.add_argument("--at-infinity", help="cheeger: radii r1,r2,... for the "
                                          "boundary proxy")
    ap.add_argument("--operator", default="laplacian",
                    help="laplacian or random:<seed>")
    ap.add_argument("--kind", default="combinatorial",
                    choices=("combinatorial", "normalized"))
    ap.add_argument("--tol", type=float, default=1e-8)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json", action="store_true")
    ap.add_argument("--out", help="delimited table output path")
    ap.add_argument("--out-graph", help="embed: write the supergraph here")
    ap.add_argument("--figures", help="directory for figure files")
    return ap


def _operator(cmap, text):
    if text == "laplacian":
        return laplacian_operator(cmap)
    if text.startswith("random"):
        _, _, seed = text.partition(":")
        return random_rational_operator(cmap, int(seed or 0))
    raise UsageError("unknown operator %r" % text)


def _root(cmap, args) -> int:
    if args.root is not None:
        if args.root not in set(cmap.vertices):
            raise UsageError("root %d is not a vertex" % args.root)
        return args.root
    return cmap.vertices[0]


_CONFIG_KEYS = {
    "curvature": (),
    "classify": (),
    "gauss-bonnet": ("random", "max_size"),
    "embed": ("w", "eps", "horizon"),
    "cutlocus": ("horizon",),
    "admissibility": ("horizon",),
    "bigons": ("horizon",),
    "growth": ("horizon",),
    "cheeger": ("k", "u_radius"),
    "spectrum": ("horizon", "kind"),
    "polar": ("horizon", "operator"),
    "eigensearch": ("horizon", "operator", "tol"),
}


def _config(args):
    cfg = {"seed": args.seed}
    if args.file:
        cfg["file"] = args.file
    if args.gen:
        cfg["gen"] = args.gen
        cfg["radius"] = args.radius
    for k in _CONFIG_KEYS.get(args.command, ()):
        value = getattr(args, k)
        if value is not None:
            cfg[k] = value
    return cfg


def cmd_curvature(cmap, args, rep: Report):
    faces = trace_faces(cmap)
    cr = curvature_report(cmap, faces)
    rep.add("vertices", len(cmap.vertices))
    rep.add("interior", len(cmap.interior_vertices()))
    rep.add("certified_vertices", len(cr.vertex))
    if cr.sup_corner is not None:
        rep.add("sup_corner", cr.sup_corner)
    if cr.sup_vertex is not None:
        rep.add("sup_vertex", cr.sup_vertex)
    if cr.sup_face is not None:
        rep.add("sup_face_finite", cr.sup_face)
    hint_faces = sum(1 for f, v in cr.face.items() if v is MINUS_INFINITY_HINT)
    rep.add("faces_unbounded_negative_hint", hint_faces)
    t = rep.table("vertex_curvature", ("vertex", "degree", "kappa_V"))
    for v in sorted(cr.vertex):
        t.rows.append((v, cmap.vertex_degree(v), cr.vertex[v]))
    try:
        hig = higuchi_gap(cmap, faces)
        rep.add("higuchi", hig.status)
        if hig.status == "violated":
            rep.finding("vertices in (-1/1806, 0): %r" % list(hig.witnesses))
    except MapError:
        rep.add("higuchi", "not-checked (non-simple map)")
    if args.figures and cr.vertex:
        from . import figures
        figures.curvature_histogram([float(x) for x in cr.vertex.values()],
                                    args.figures)


def cmd_classify(cmap, args, rep: Report):
    res = classify(cmap)
    rep.add("class", res.cls)
    if res.certified_radius is not None:
        rep.add("certified_radius", res.certified_radius)
    t = rep.table("witnesses", ("kind", "payload"))
    for kind, payload in res.witnesses:
        t.rows.append((kind, str(payload)))
    for mode in ("corner", "vertex", "face"):
        side = nonpositive_side_conditions(cmap, mode)
        rep.add("side_conditions_%s" % mode,
                "vacuous" if not side.applicable else
                ("ok" if side.all_ok() else "violated"))
        if side.applicable and not side.all_ok():
            rep.finding("curvature sign implications fail in mode %s" % mode)


def cmd_gauss_bonnet(cmap, args, rep: Report):
    runs = []
    if args.all:
        runs.append(sorted(cmap.vertices))
    if args.w:
        runs.append(_vertex_list(args.w))
    if args.random:
        rng = random.Random(args.seed)
        verts = list(cmap.vertices)
        for _ in range(args.random):
            W = {rng.choice(verts)}
            target = rng.randint(1, args.max_size)
            while len(W) < target:
                options = sorted({w for u in W for w in cmap.neighbors(u)
                                  if w not in W})
                if not options:
                    break
                W.add(rng.choice(options))
            runs.append(sorted(W))
    if not runs:
        raise UsageError("gauss-bonnet needs --all, --w or --random N")
    t = rep.table("gauss_bonnet", ("size", "total_curvature", "exact_two"))
    for W in runs:
        total = gauss_bonnet(cmap, W)
        t.rows.append((len(W), total, total == 2))
        if total != 2:
            rep.finding("gauss-bonnet = %s != 2 on W of size %d"
                        % (total, len(W)))
    rep.add("subsets", len(runs))


def cmd_embed(cmap, args, rep: Report):
    W = _vertex_list(args.w) if args.w else [_root(cmap, args)]
    eps = _parse_fraction(args.eps)
    res = embed(cmap, W, eps, args.horizon)
    rep.add("closing_parameter", res.closing_parameter)
    rep.add("effective_horizon", res.effective_horizon)
    rep.add("trees_attached", sum(n for _, n in res.added_trees))
    rep.add("faces_closed", len(res.closed_faces))
    rep.add("supergraph_vertices", len(res.supergraph.vertices))
    for w in res.warnings:
        rep.add("warning", w)
    props = verify_properties(res)
    t = rep.table("properties", ("property", "ok"))
    for name in sorted(props.ok):
        t.rows.append((name, props.ok[name]))
        if not props.ok[name]:
            rep.finding("embedding property %s fails" % name)
    if args.out_graph:
        with open(args.out_graph, "w") as fh:
            fh.write(serialize_embedding(res))
        rep.add("graph_written", args.out_graph)
    if args.figures:
        from . import figures
        before = [cmap.vertex_degree(v) for v in cmap.interior_vertices()]
        after = [res.supergraph.vertex_degree(v)
                 for v in res.supergraph.interior_vertices()]
        figures.degree_histogram(before, after, args.figures)


def cmd_cutlocus(cmap, args, rep: Report):
    v0 = _root(cmap, args)
    locus = cut_locus(cmap, v0, args.horizon)
    rep.add("root", v0)
    rep.add("horizon", args.horizon)
    rep.add("cut_locus_size", len(locus))
    t = rep.table("cut_locus", ("vertex",))
    for v in sorted(locus):
        t.rows.append((v,))
    cr = curvature_report(cmap)
    nonpos = cr.sup_corner is not None and cr.sup_corner <= 0
    rep.add("corner_curvature_nonpositive", nonpos)
    if nonpos and locus:
        rep.finding("cut locus nonempty despite kappa_C <= 0")


def cmd_admissibility(cmap, args, rep: Report):
    v0 = _root(cmap, args)
    r = check_admissibility(cmap, v0, args.horizon)
    rep.add("root", v0)
    rep.add("horizon", args.horizon)
    t = rep.table("properties", ("property", "ok", "violations"))
    for key in sorted(r.ok):
        t.rows.append((key, r.ok[key], len(r.violations.get(key, ()))))
        if not r.ok[key]:
            rep.finding("admissibility property %s fails: %r"
                        % (key, r.violations[key][:3]))


def cmd_bigons(cmap, args, rep: Report):
    faces = trace_faces(cmap)
    roots = _vertex_list(args.w) if args.w else None
    bigons = minimal_bigons(cmap, args.horizon, faces, roots)
    rep.add("horizon", args.horizon)
    rep.add("bigons", len(bigons))
    nonempty = [b for b in bigons if b.interior]
    rep.add("nonempty_interiors", len(nonempty))
    cr = curvature_report(cmap, faces)
    strict = cr.sup_corner is not None and cr.sup_corner < 0
    rep.add("corner_curvature_negative", strict)
    t = rep.table("nonempty_bigons", ("path1", "path2", "interior"))
    for b in nonempty[:50]:
        t.rows.append(("-".join(map(str, b.path1)),
                       "-".join(map(str, b.path2)),
                       " ".join(map(str, b.interior))))
    if strict and nonempty:
        rep.finding("minimal bigon with nonempty interior despite "
                    "kappa_C < 0")


def cmd_growth(cmap, args, rep: Report):
    v0 = _root(cmap, args)
    g = growth_check(cmap, v0, args.horizon)
    rep.add("root", v0)
    rep.add("kappa_sup", g.kappa_sup)
    rep.add("q_sup", g.q_sup)
    rep.add("p_sup", g.p_sup)
    rep.add("lower_factor", g.lower_factor)
    rep.add("mu_estimate", g.mu_estimate)
    rep.add("mu_lower", g.mu_bounds[0])
    rep.add("mu_upper", g.mu_bounds[1])
    rep.add("mu_in_window", g.mu_in_window())
    t = rep.table("spheres", ("n", "sphere", "ball", "bound_ok"))
    for n, ok in enumerate(g.per_level_ok, start=1):
        t.rows.append((n, g.sphere_sizes[n], g.ball_sizes[n], ok))
        if not ok:
            rep.finding("sphere bound fails at n = %d" % n)
    if args.figures:
        from . import figures
        figures.growth_plot(g.sphere_sizes, float(g.lower_factor),
                            args.figures)


def cmd_cheeger(cmap, args, rep: Report):
    v0 = _root(cmap, args)
    faces = trace_faces(cmap)
    U = ball(cmap, v0, args.u_radius).ball(args.u_radius)
    est = cheeger_bruteforce(cmap, U, args.k, faces)
    rep.add("u_size", est.searched_size)
    rep.add("k", est.searched_k)
    rep.add("alpha_lower", est.alpha_lower)
    rep.add("alpha_upper", est.alpha_upper)
    rep.add("beta_lower", est.beta_lower)
    rep.add("beta_upper", est.beta_upper)
    rep.add("witness_alpha", " ".join(map(str, sorted(est.witness_alpha))))
    if est.bounds.alpha_curv is not None:
        rep.add("alpha_lower_curvature", est.bounds.alpha_curv)
        rep.add("beta_lower_curvature", est.bounds.beta_curv)
    if not est.consistent():
        rep.finding("brute-force ratio beats a lower bound")
    chk = check_isoperimetric_inequality(cmap, U, min(args.k, 8), faces)
    rep.add("isoperimetric_tested", chk.tested)
    if not chk.holds():
        rep.finding("isoperimetric inequality violated on %d sets"
                    % len(chk.violations))
    if args.at_infinity:
        radii = _vertex_list(args.at_infinity)
        rows = cheeger_at_infinity_proxy(cmap, v0, radii, faces)
        t = rep.table("at_infinity", ("r", "alpha_lower", "beta_lower"))
        for r, a, b in rows:
            t.rows.append((r, a, b))
        if args.figures:
            from . import figures
            figures.cheeger_plot([r for r, _, _ in rows],
                                 [float(a) for _, a, _ in rows],
                                 args.figures)


def cmd_spectrum(cmap, args, rep: Report):
    v0 = _root(cmap, args)
    radius = args.horizon
    r = verify_spectral_bounds(cmap, v0, radius)
    rep.add("alpha_lower", r.alpha)
    rep.add("bound_normalized", r.bound_normalized)
    rep.add("bound_combinatorial", r.bound_combinatorial)
    rep.add("monotone", r.ok_monotone)
    t = rep.table("bottoms", ("radius", "combinatorial", "normalized"))
    for i, rad in enumerate(r.radii):
        t.rows.append((rad, r.bottoms_combinatorial[i], r.bottoms_normalized[i]))
    if not r.ok_bounds:
        rep.finding("a Dirichlet bottom lies below its Cheeger bound")
    if not r.ok_monotone:
        rep.finding("Dirichlet bottoms are not nonincreasing in the radius")
    if args.figures:
        from . import figures
        figures.spectrum_plot(r.radii, r.bottoms_combinatorial,
                              r.bound_combinatorial, args.figures)


def cmd_polar(cmap, args, rep: Report):
    v0 = _root(cmap, args)
    A = _operator(cmap, args.operator)
    pol = polar_decompose(cmap, A, v0, args.horizon, seed=args.seed)
    rep.add("levels", pol.levels())
    rep.add("sphere_sizes", " ".join(map(str, pol.sizes)))
    rep.add("reconstruction", "exact")
    st = check_E_structure(pol)
    t = rep.table("E_structure",
                  ("n", "columns_hit", "rows_1_or_2", "rows_adjacent",
                   "column_pairs", "injective"))
    for n in range(len(pol.E)):
        t.rows.append((n, st.column_nonzero[n], st.row_counts_ok[n],
                       st.rows_adjacent_ok[n], st.column_pairs_ok[n],
                       st.injective[n]))
    cr = curvature_report(cmap)
    nonpos = cr.sup_corner is not None and cr.sup_corner <= 0
    rep.add("corner_curvature_nonpositive", nonpos)
    if nonpos and not st.all_ok():
        rep.finding("E_n structure violated despite kappa_C <= 0")


def cmd_eigensearch(cmap, args, rep: Report):
    v0 = _root(cmap, args)
    A = _operator(cmap, args.operator)
    found = finitely_supported_eigenfunctions(cmap, A, v0, args.horizon,
                                              tol=args.tol)
    rep.add("root", v0)
    rep.add("horizon", args.horizon)
    rep.add("eigenfunctions", len(found))
    t = rep.table("eigenfunctions",
                  ("lambda", "support_size", "exact", "residual"))
    for f in found:
        t.rows.append((f.lam, len(f.vector), f.exact, f.residual))
        rep.finding("finitely supported eigenfunction at lambda = %s "
                    "(support %d)" % (f.lam, len(f.vector)))
    if args.figures:
        from . import figures
        figures.eigenvalue_stem([float(f.lam) for f in found
                                 if not isinstance(f.lam, complex)],
                                args.figures)


HANDLERS = {
    "curvature": cmd_curvature,
    "classify": cmd_classify,
    "gauss-bonnet": cmd_gauss_bonnet,
    "embed": cmd_embed,
    "cutlocus": cmd_cutlocus,
    "admissibility": cmd_admissibility,
    "bigons": cmd_bigons,
    "growth": cmd_growth,
    "cheeger": cmd_cheeger,
    "spectrum": cmd_spectrum,
    "polar": cmd_polar,
    "eigensearch": cmd_eigensearch,
}


def run(argv) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    rep = Report(args.command, _config(args))
    try:
        cmap = load_map(args)
        HANDLERS[args.command](cmap, args, rep)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except (MapError, FaithfulnessError, ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    sys.stdout.write(rep.render_json() if args.json else rep.render_text())
    if args.out:
        rep.write_delimited(args.out)
    return 1 if rep.violated else 0


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
