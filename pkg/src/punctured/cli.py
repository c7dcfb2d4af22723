"""Command line entry point.  JSON to stdout, diagnostics to stderr; exit 0 ok, 1 failed check, 2 usage."""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from . import cluster, graded, homology, quiver
from .order import graded_dim
from .polygon import PolygonCtx, all_arcs, all_edges, edge_from_json, edge_to_json
from .triangulation import (
    DEFAULT_BOUND,
    TriangulationError,
    enumerate_all,
    exchange_graph,
    flip,
    flip_kind,
    validate,
)


class UsageError(Exception):
    pass


def _emit(obj) -> None:
    if isinstance(obj, str):
        sys.stdout.write(obj if obj.endswith("\n") else obj + "\n")
    else:
        sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _json_arg(text: str, flag: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{flag}: not valid JSON ({exc.msg})") from None


def _edge(ctx: PolygonCtx, text: str, flag: str):
    try:
        return edge_from_json(ctx, _json_arg(text, flag))
    except ValueError as exc:
        raise UsageError(f"{flag}: {exc}") from None


def _triangulation(args):
    """From --input (a triangulation JSON file) or --arcs (a JSON list of edges)."""
    if getattr(args, "input", None):
        try:
            with open(args.input) as fh:
                obj = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"--input: {exc}") from None
        if args.n is not None and obj.get("n") != args.n:
            raise UsageError(f"--input: file has n={obj.get('n')}, --n says {args.n}")
        args.n = obj["n"]
        arcs = obj["arcs"]
    elif getattr(args, "arcs", None):
        arcs = _json_arg(args.arcs, "--arcs")
        if isinstance(arcs, dict):
            arcs = arcs.get("arcs", [])
    else:
        raise UsageError("give --arcs or --input")
    ctx = _ctx(args)
    try:
        return validate(ctx, [edge_from_json(ctx, a) for a in arcs])
    except TriangulationError as exc:
        raise UsageError(f"--arcs: {exc}") from None
    except ValueError as exc:
        raise UsageError(f"--arcs: {exc}") from None


def _ctx(args) -> PolygonCtx:
    if args.n is None:
        raise UsageError("--n is required")
    try:
        return PolygonCtx(args.n)
    except ValueError as exc:
        raise UsageError(f"--n: {exc}") from None


# ------------------------------------------------------------------ commands

def cmd_arcs(args):
    ctx = _ctx(args)
    edges = all_edges(ctx) if not args.arcs_only else all_arcs(ctx)
    _emit([edge_to_json(e) for e in edges])
    return 0


def cmd_triangulations(args):
    ctx = _ctx(args)
    tris = enumerate_all(ctx, args.bound)
    if args.count:
        _emit(len(tris))
    else:
        _emit([t.to_json() for t in tris])
    return 0


def cmd_flip(args):
    tri = _triangulation(args)
    arc = _edge(tri.ctx, args.arc, "--arc")
    try:
        new_tri, new = flip(tri, arc)
    except TriangulationError as exc:
        raise UsageError(f"--arc: {exc}") from None
    _emit({"triangulation": new_tri.to_json(), "removed": edge_to_json(arc), "added": edge_to_json(new),
           "kind": flip_kind(arc, new)})
    return 0


def cmd_quiver(args):
    tri = _triangulation(args)
    qp = quiver.build_full_qp(tri) if args.full else quiver.build_ice_qp(tri)
    _emit(qp.to_dot() if args.format == "dot" else qp.to_json())
    return 0


def _pair(args):
    ctx = _ctx(args)
    return ctx, _edge(ctx, args.src, "--from"), _edge(ctx, args.dst, "--to")


def cmd_hom(args):
    ctx, a, b = _pair(args)
    d = homology.hom_module(ctx, a, b)
    hi = args.max_degree if args.max_degree is not None else 4 * ctx.n
    dims = {str(k): graded_dim(d, k, ctx.n) for k in range(0, hi + 1) if graded_dim(d, k, ctx.n)}
    _emit({"descriptor": d.to_json(), "graded_dims": dims})
    return 0


def cmd_stable_hom(args):
    ctx, a, b = _pair(args)
    ell, eps = homology.stable_hom(ctx, a, b)
    _emit({"ell": ell, "eps": eps})
    return 0


def cmd_ext(args):
    ctx, a, b = _pair(args)
    if args.list:
        _emit([[edge_to_json(e) for e in mid] for mid in homology.extension_list(ctx, a, b)])
    else:
        _emit(homology.ext1_dim(ctx, a, b))
    return 0


def cmd_ar_quiver(args):
    ctx = _ctx(args)
    seqs = [homology.ar_sequence(ctx, a) for a in all_arcs(ctx)]
    if args.format == "dot":
        name = {e: f"v{k}" for k, e in enumerate(all_edges(ctx))}
        lines = ["digraph AR {"]
        for e in all_edges(ctx):
            shape = "box" if e.is_side else "ellipse"
            lines.append(f'  {name[e]} [label="{e}", shape={shape}];')
        arrows = sorted({(s.left, m) for s in seqs for m in s.middle} | {(m, s.right) for s in seqs for m in s.middle},
                        key=lambda p: (name[p[0]], name[p[1]]))
        lines += [f"  {name[x]} -> {name[y]};" for x, y in arrows]
        lines += [f"  {name[s.right]} -> {name[s.left]} [style=dotted, constraint=false];" for s in seqs]
        lines.append("}")
        _emit("\n".join(lines))
    else:
        _emit([{"left": edge_to_json(s.left), "middle": [edge_to_json(m) for m in s.middle],
                "right": edge_to_json(s.right)} for s in seqs])
    return 0


def cmd_exchange_graph(args):
    ctx = _ctx(args)
    g = exchange_graph(ctx, args.bound)
    tris = list(g.nodes)
    idx = {t: k for k, t in enumerate(tris)}
    edges = sorted((min(idx[s], idx[t]), max(idx[s], idx[t])) for s, t in g.edges)
    if args.format == "dot":
        lines = ["graph exchange {"]
        lines += [f'  t{k} [label="{t}"];' for k, t in enumerate(tris)]
        lines += [f"  t{s} -- t{t};" for s, t in edges]
        lines.append("}")
        _emit("\n".join(lines))
    else:
        _emit({"nodes": [t.to_json() for t in tris], "edges": [list(e) for e in edges]})
    return 0


def cmd_check_tilting(args):
    ctx = _ctx(args)
    arcs = _json_arg(args.arcs, "--arcs")
    try:
        edges = [edge_from_json(ctx, a) for a in arcs]
    except ValueError as exc:
        raise UsageError(f"--arcs: {exc}") from None
    ok = cluster.is_cluster_tilting(ctx, cluster.TiltingCandidate.of(edges))
    _emit({"cluster_tilting": ok})
    return 0 if ok else 1


# ------------------------------------------------------------------ graded

def _gobj(n: int, text: str, flag: str) -> graded.GradedIndec:
    try:
        return graded.from_json(n, _json_arg(text, flag))
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"{flag}: {exc}") from None


def cmd_graded(args):
    n = _ctx(args).n
    if args.what == "ar-quiver":
        g = graded.ar_quiver(n, args.window, args.i0)
        if args.format == "dot":
            _emit(graded.ar_quiver_dot(g))
        else:
            _emit({"vertices": [{**x.to_json(), "projective": x.projective} for x in g.nodes],
                   "arrows": [[x.to_json(), y.to_json()] for x, y in g.edges],
                   "shape": graded.ar_shape(n, args.window)})
        return 0
    if args.what in ("hom", "ext"):
        if args.x is None or args.y is None:
            raise UsageError("graded hom/ext need --x and --y")
        x, y = _gobj(n, args.x, "--x"), _gobj(n, args.y, "--y")
        if args.what == "hom":
            try:
                _emit({"hom": graded.graded_hom_dim(x, y, args.window),
                       "stable": graded.stable_graded_hom_dim(x, y)})
            except graded.WindowExceeded as exc:
                print(f"error: {exc}", file=sys.stderr)
                return 1
        else:
            _emit({"ext": graded.graded_ext1_dim(x, y),
                   "middles": [[z.to_json() for z in mid] for mid in graded.graded_extension_list(x, y)]})
        return 0
    # tilt
    tri = _triangulation(args)
    try:
        lift = graded.lift_triangulation(tri, args.i0)
    except ValueError as exc:
        raise UsageError(f"--i0: {exc}") from None
    ks = range(-args.k_max, args.k_max + 1)
    ok = graded.is_tilting_window(lift, ks)
    _emit({"lift": [x.to_json() for x in lift], "tilting": ok})
    return 0 if ok else 1


# ------------------------------------------------------------------ verify

def _suite_hom_oracle(ctx, args, rng):
    from .oracle import oracle_hom_graded

    bad = 0
    for a in all_edges(ctx):
        for b in all_edges(ctx):
            dims = oracle_hom_graded(ctx, a, b, t=args.t, deg_bound=min(8 * ctx.n, 2 * ctx.n * (args.t - 2)) - 1,
                                     p=args.prime)
            d = homology.hom_module(ctx, a, b)
            bad += sum(dims[k] != graded_dim(d, k, ctx.n) for k in dims)
    return bad == 0, {"mismatches": bad}


def _suite_stable_oracle(ctx, args, rng):
    from .oracle import oracle_stable_and_ext

    bad = 0
    for a in all_edges(ctx):
        for b in all_edges(ctx):
            stable, ext = oracle_stable_and_ext(ctx, a, b, t=args.t, p=args.prime)
            ell, eps = homology.stable_hom(ctx, a, b)
            want = {ell: eps} if eps else {}
            bad += int(stable != want) + int(ext != homology.ext1_dim(ctx, a, b))
    return bad == 0, {"mismatches": bad}


def _suite_crossing(ctx, args, rng):
    from .oracle import cover_crossing

    arcs = all_arcs(ctx)
    bad = sum(1 for a in arcs for b in arcs
              if not homology.ext1_dim(ctx, a, b) == homology.ext1_table(ctx, a, b) == cover_crossing(ctx, a, b))
    return bad == 0, {"mismatches": bad}


def _suite_enumeration(ctx, args, rng):
    from .oracle import oracle_enumerate_maximal_compatible

    ours = len(enumerate_all(ctx, args.bound))
    theirs = oracle_enumerate_maximal_compatible(ctx)
    return ours == theirs, {"enumerated": ours, "oracle": theirs}


def _suite_potential(ctx, args, rng):
    tris = enumerate_all(ctx, args.bound)
    if args.samples and len(tris) > args.samples:
        tris = rng.sample(tris, args.samples)
    bad = sum(not quiver.check_potential_homogeneous(quiver.build_ice_qp(t)) for t in tris)
    return bad == 0, {"checked": len(tris), "failures": bad}


SUITES = {
    "crossing": _suite_crossing,
    "enumeration": _suite_enumeration,
    "hom-oracle": _suite_hom_oracle,
    "potential": _suite_potential,
    "stable-oracle": _suite_stable_oracle,
}


def cmd_verify(args):
    ctx = _ctx(args)
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    rng = random.Random(args.seed)
    report, ok_all = [], True
    for name in names:
        t0 = time.perf_counter()
        ok, detail = SUITES[name](ctx, args, rng)
        print(f"{name}: {'PASS' if ok else 'FAIL'} ({time.perf_counter() - t0:.1f}s)", file=sys.stderr)
        report.append({"suite": name, "pass": ok, **detail})
        ok_all &= ok
    _emit({"n": ctx.n, "report": report})
    return 0 if ok_all else 1


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="punctured", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--n", type=int, help="number of polygon vertices (>= 3)")
        sp.set_defaults(func=func)
        return sp

    def tri_input(sp):
        sp.add_argument("--arcs", help="JSON list of tagged arcs")
        sp.add_argument("--input", help="triangulation JSON file, as printed by `triangulations`")

    def pair_input(sp):
        sp.add_argument("--from", dest="src", required=True, help="edge JSON")
        sp.add_argument("--to", dest="dst", required=True, help="edge JSON")

    sp = add("arcs", cmd_arcs, "list all tagged edges (sides first)")
    sp.add_argument("--arcs-only", action="store_true", help="omit the sides")

    sp = add("triangulations", cmd_triangulations, "enumerate tagged triangulations")
    sp.add_argument("--count", action="store_true")
    sp.add_argument("--bound", type=int, default=DEFAULT_BOUND)

    sp = add("flip", cmd_flip, "flip one arc of a triangulation")
    tri_input(sp)
    sp.add_argument("--arc", required=True, help="edge JSON of the arc to flip")

    sp = add("quiver", cmd_quiver, "ice quiver with potential of a triangulation")
    tri_input(sp)
    sp.add_argument("--full", action="store_true", help="keep every external arrow")
    sp.add_argument("--format", choices=("json", "dot"), default="json")

    sp = add("hom", cmd_hom, "Hom(M_a, M_b) as a descriptor")
    pair_input(sp)
    sp.add_argument("--max-degree", type=int)

    sp = add("stable-hom", cmd_stable_hom, "stable Hom(M_a, M_b) = u^ell (R'/(X,Y))^eps")
    pair_input(sp)

    sp = add("ext", cmd_ext, "dim Ext^1(M_a, M_b)")
    pair_input(sp)
    sp.add_argument("--list", action="store_true", help="print the middle terms instead")

    sp = add("ar-quiver", cmd_ar_quiver, "Auslander-Reiten sequences of the ungraded category")
    sp.add_argument("--format", choices=("json", "dot"), default="json")

    sp = add("exchange-graph", cmd_exchange_graph, "triangulations joined by flips")
    sp.add_argument("--format", choices=("json", "dot"), default="json")
    sp.add_argument("--bound", type=int, default=DEFAULT_BOUND)

    sp = add("check-tilting", cmd_check_tilting, "is a set of arcs cluster tilting")
    sp.add_argument("--arcs", required=True, help="JSON list of tagged arcs")

    sp = add("graded", cmd_graded, "the graded category")
    sp.add_argument("what", choices=("ar-quiver", "hom", "ext", "tilt"))
    sp.add_argument("--window", type=int, default=graded.DEFAULT_WINDOW, help="periods")
    sp.add_argument("--i0", type=int, default=None, help="window start / lifting vertex")
    sp.add_argument("--x", help="graded object JSON")
    sp.add_argument("--y", help="graded object JSON")
    sp.add_argument("--k-max", type=int, default=4)
    sp.add_argument("--format", choices=("json", "dot"), default="json")
    tri_input(sp)

    sp = add("verify", cmd_verify, "run verification suites against the oracles")
    sp.add_argument("--suite", choices=(*sorted(SUITES), "all"), default="all")
    sp.add_argument("--t", type=int, default=6)
    sp.add_argument("--prime", type=int, default=32003)
    sp.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    sp.add_argument("--samples", type=int, default=100, help="triangulations sampled when there are more")
    sp.add_argument("--seed", type=int, default=0)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "graded" and args.what == "ar-quiver" and args.i0 is None:
        args.i0 = 0
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
