"""Command-line interface: generate graphs, draw them under certified slope
budgets, verify drawings against their certificates, and evaluate bounds.

Exit codes: 0 success, 1 usage or input errors, 2 failed verification
(a certificate violation, an invalid drawing, or an ambiguous measurement).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .bounds import elementary_lower_bounds, gap_scan
from .constructions import (
    Certificate,
    ConstructionError,
    blow_up,
    bipartite_slope_bounds,
    draw_bandwidth,
    draw_bipartite,
    draw_forest,
    draw_one_bend,
    draw_power2_multipartite,
    draw_tree_partitioned,
    partition_from_json,
    subdivide_bends,
    verify_certificate,
)
from .geometry import (
    Drawing,
    GeometryError,
    PolygonAssignment,
    PrecisionError,
    count_crossings,
    count_lengths,
    count_slopes,
    drawing_from_json,
    drawing_to_json,
    drawing_to_svg,
    is_convex_drawing,
    ngon_slope_count,
    realize_ngon,
    validate_drawing,
)
from .graphs import (
    Graph,
    GraphError,
    VertexOrdering,
    bandwidth_exact,
    bandwidth_heuristic,
    detect_complete_multipartite,
    make_complete,
    make_complete_multipartite,
    make_cycle,
    make_grid,
    make_path,
    parse_graph,
    petersen,
    random_tree,
    serialize_graph,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _default_seed() -> int:
    raw = os.environ.get("SLOPEFORGE_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise _UsageError(f"SLOPEFORGE_SEED must be an integer, got {raw!r}")


def _make_family(family: str, params: str, seed: int | None = None,
                 max_degree: int | None = None) -> Graph:
    try:
        if family == "complete":
            return make_complete(int(params))
        if family == "multipartite":
            sizes = [int(s) for s in params.replace(",", " ").split()]
            return make_complete_multipartite(sizes)
        if family == "path":
            return make_path(int(params))
        if family == "cycle":
            return make_cycle(int(params))
        if family == "grid":
            rows, _, cols = params.lower().partition("x")
            return make_grid(int(rows), int(cols))
        if family == "tree-random":
            if seed is None:
                seed = _default_seed()
            return random_tree(int(params), max_degree=max_degree, seed=seed)
        if family == "petersen":
            return petersen()
    except ValueError as e:
        raise _UsageError(f"bad parameters for family {family!r}: {e}")
    raise _UsageError(f"unknown graph family {family!r}")


def _load_graph(path: str) -> Graph:
    return parse_graph(Path(path).read_text())


def _write_output(text: str, path: str | None):
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


# ---- gen ----


def cmd_gen(args) -> int:
    g = _make_family(args.family, args.params or "", seed=args.seed,
                     max_degree=args.max_degree)
    _write_output(serialize_graph(g), args.output)
    return EXIT_OK


# ---- draw ----


def _input_graph(args) -> Graph:
    if args.graph and args.gen:
        raise _UsageError("give either --graph or --gen, not both")
    if args.graph:
        return _load_graph(args.graph)
    if args.gen:
        family, _, params = args.gen.partition(":")
        return _make_family(family, params, seed=args.seed)
    raise _UsageError("this method needs a graph: use --graph or --gen")


def _two_parts(g: Graph):
    parts = detect_complete_multipartite(g)
    if parts is None or len(parts) != 2:
        raise _UsageError("graph is not complete bipartite")
    return parts


def _draw_ngon(g: Graph):
    a = PolygonAssignment(max(g.n, 1), tuple(range(g.n)))
    d = realize_ngon(g, a)
    cert = Certificate(ngon_slope_count(g, a), g.n // 2, plane=False,
                       method="ngon")
    return d, cert


def _draw_balanced_bipartite(g: Graph):
    parts = _two_parts(g)
    if len(parts[0]) != len(parts[1]):
        raise _UsageError("parts are unequal, use the bipartite method")
    n = len(parts[0])
    index = [0] * g.n
    for i, v in enumerate(parts[0]):
        index[v] = 2 * i
    for i, v in enumerate(parts[1]):
        index[v] = 2 * i + 1
    d = realize_ngon(g, PolygonAssignment(2 * n, tuple(index)))
    cert = Certificate(n, (n + 1) // 2, plane=(n == 1),
                       method="balanced-bipartite")
    return d, cert


def _draw_bipartite(g: Graph):
    parts = _two_parts(g)
    small, big = sorted(parts, key=len)
    canon_g, canon_d, cert = draw_bipartite(len(small), len(big))
    canon_id = {}
    for i, v in enumerate(small):
        canon_id[v] = i
    for i, v in enumerate(big):
        canon_id[v] = len(small) + i
    pts = tuple(canon_d.points[canon_id[v]] for v in range(g.n))
    d = Drawing(canon_d.mode, pts, g.edges)
    return d, cert


def _draw_with_ordering(g: Graph, args):
    if args.ordering:
        toks = Path(args.ordering).read_text().split()
        try:
            order = [int(t) for t in toks]
        except ValueError:
            raise _UsageError("ordering file must contain integers")
        ordering = VertexOrdering.from_order(g, order)
    elif g.n <= args.node_limit:
        ordering = bandwidth_exact(g, node_limit=args.node_limit)
    else:
        ordering = bandwidth_heuristic(g)
    return draw_bandwidth(g, ordering)


def cmd_draw(args) -> int:
    if args.method == "multipartite-pow2":
        if args.graph or args.gen:
            raise _UsageError("multipartite-pow2 builds its own graph; "
                              "give --p and --k instead of a graph")
        if args.p is None or args.k is None:
            raise _UsageError("multipartite-pow2 needs --p and --k")
        g, d, cert = draw_power2_multipartite(args.p, args.k)
    else:
        g = _input_graph(args)
        if args.method == "ngon":
            d, cert = _draw_ngon(g)
        elif args.method == "balanced-bipartite":
            d, cert = _draw_balanced_bipartite(g)
        elif args.method == "bipartite":
            d, cert = _draw_bipartite(g)
        elif args.method == "blowup":
            if not args.partition or not args.host_drawing:
                raise _UsageError("blowup needs --partition and --host-drawing")
            part = partition_from_json(g, Path(args.partition).read_text())
            hd, _ = drawing_from_json(Path(args.host_drawing).read_text())
            d, cert = blow_up(hd, part)
        elif args.method == "bandwidth":
            d, cert = _draw_with_ordering(g, args)
        elif args.method == "tree":
            d, cert = draw_forest(g)
        elif args.method == "tree-partition":
            if not args.partition:
                raise _UsageError("tree-partition needs --partition")
            part = partition_from_json(g, Path(args.partition).read_text())
            d, cert = draw_tree_partitioned(g, part)
        elif args.method == "one-bend":
            d, cert = draw_one_bend(g)
        else:
            raise _UsageError(f"unknown method {args.method!r}")

    report = verify_certificate(g, d, cert)
    if not report.ok:
        print(f"certificate verification failed ({cert.method}):",
              file=sys.stderr)
        for p in report.problems:
            print(f"  {p}", file=sys.stderr)
        return EXIT_VERIFY

    summary = (f"{cert.method}: {g.n} vertices, {g.m} edges; "
               f"slopes {report.measured_slopes} <= {cert.slope_bound}")
    if cert.length_bound is not None:
        summary += f"; lengths {report.measured_lengths} <= {cert.length_bound}"
    print(summary, file=sys.stderr)

    _write_output(drawing_to_json(d, cert.to_dict()), args.output)
    if args.svg:
        Path(args.svg).write_text(drawing_to_svg(d))
    return EXIT_OK


# ---- verify ----


def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    d, cert_dict = drawing_from_json(Path(args.drawing).read_text())
    g2, d2 = subdivide_bends(g, d)
    validity = validate_drawing(g2, d2)
    try:
        slopes = count_slopes(d2)
        lengths = count_lengths(d2)
        crossings = count_crossings(g2, d2)
    except PrecisionError:
        raise
    except GeometryError as e:
        # zero-extent edges leave nothing to measure; report, don't crash
        print(f"valid: no ({validity.summary()})")
        print(f"unmeasurable: {e}")
        return EXIT_VERIFY
    convex = is_convex_drawing(g, d)
    lb, _ = elementary_lower_bounds(g2)
    consistent = g2.m == 0 or slopes >= lb

    print(f"slopes: {slopes}")
    print(f"lengths: {lengths}")
    print(f"crossings: {crossings}")
    print(f"valid: {'yes' if validity.ok else 'no (' + validity.summary() + ')'}")
    print(f"convex-position: {'yes' if convex else 'no'}")
    print(f"degree-lower-bound: {lb} "
          f"({'consistent' if consistent else 'VIOLATED'})")

    ok = validity.ok and consistent
    if cert_dict is not None:
        cert = Certificate.from_dict(cert_dict)
        report = verify_certificate(g, d, cert)
        if report.ok:
            print(f"certificate: ok (method={cert.method}, "
                  f"slope_bound={cert.slope_bound})")
        else:
            print("certificate: FAILED")
            for p in report.problems:
                print(f"  {p}")
        ok = ok and report.ok
    return EXIT_OK if ok else EXIT_VERIFY


# ---- bounds ----


def cmd_bounds(args) -> int:
    if args.counting:
        if args.delta is None or args.epsilon is None:
            raise _UsageError("counting mode needs --delta and --epsilon")
        if args.sizes:
            try:
                ns = [int(s) for s in args.sizes.replace(",", " ").split()]
            except ValueError:
                raise _UsageError("--sizes must be a comma-separated integer list")
        else:
            ns = [10 ** e for e in range(3, 9)]
        result = gap_scan(args.delta, args.epsilon, ns, c=args.c)
        for row in result["rows"]:
            print(json.dumps(row))
        print(json.dumps({"first_positive_n": result["first_positive_n"]}))
        return EXIT_OK

    if not args.graph:
        raise _UsageError("give --graph FILE or --counting")
    g = _load_graph(args.graph)
    general, convex = elementary_lower_bounds(g)
    print(f"general-lower-bound: {general}")
    print(f"convex-lower-bound: {convex}")
    parts = detect_complete_multipartite(g)
    if parts is not None and len(parts) == 2:
        lo, hi = bipartite_slope_bounds(len(parts[0]), len(parts[1]))
        print(f"bipartite-lower-bound: {lo}")
        print(f"bipartite-upper-bound: {hi}")
    return EXIT_OK


# ---- parser ----


def _build_parser() -> _Parser:
    parser = _Parser(prog="slopeforge",
                     description="graph drawings with few edge slopes")
    sub = parser.add_subparsers(dest="command")

    p_gen = sub.add_parser("gen", help="generate a graph family")
    p_gen.add_argument("family",
                       choices=["complete", "multipartite", "path", "cycle",
                                "grid", "tree-random", "petersen"])
    p_gen.add_argument("params", nargs="?", default="",
                       help="family parameters, e.g. 7 or 3,4 or 3x4")
    p_gen.add_argument("-o", "--output", help="write to a file instead of stdout")
    p_gen.add_argument("--seed", type=int, default=None,
                       help="random seed (default: SLOPEFORGE_SEED or 0)")
    p_gen.add_argument("--max-degree", type=int, default=None)
    p_gen.set_defaults(func=cmd_gen)

    p_draw = sub.add_parser("draw", help="draw a graph with a certificate")
    p_draw.add_argument("--method", required=True,
                        choices=["ngon", "balanced-bipartite", "bipartite",
                                 "multipartite-pow2", "blowup", "bandwidth",
                                 "tree", "tree-partition", "one-bend"])
    p_draw.add_argument("--graph", help="graph file")
    p_draw.add_argument("--gen", help="generate input, e.g. complete:7")
    p_draw.add_argument("--ordering", help="vertex ordering file (bandwidth)")
    p_draw.add_argument("--partition", help="partition JSON file")
    p_draw.add_argument("--host-drawing", help="host drawing JSON (blowup)")
    p_draw.add_argument("--p", type=int, default=None,
                        help="power parameter (multipartite-pow2)")
    p_draw.add_argument("--k", type=int, default=None,
                        help="part count (multipartite-pow2)")
    p_draw.add_argument("--node-limit", type=int, default=20,
                        help="largest graph for exact bandwidth search")
    p_draw.add_argument("--seed", type=int, default=None)
    p_draw.add_argument("-o", "--output", help="drawing JSON output path")
    p_draw.add_argument("--svg", help="also render an SVG to this path")
    p_draw.set_defaults(func=cmd_draw)

    p_verify = sub.add_parser("verify", help="measure and check a drawing")
    p_verify.add_argument("graph")
    p_verify.add_argument("drawing")
    p_verify.set_defaults(func=cmd_verify)

    p_bounds = sub.add_parser("bounds", help="slope lower bounds")
    p_bounds.add_argument("--graph", help="graph file")
    p_bounds.add_argument("--counting", action="store_true",
                          help="counting-argument scan over sizes")
    p_bounds.add_argument("--delta", type=int, default=None)
    p_bounds.add_argument("--epsilon", type=float, default=None)
    p_bounds.add_argument("--c", type=float, default=50.0)
    p_bounds.add_argument("--sizes", help="comma-separated n values")
    p_bounds.set_defaults(func=cmd_bounds)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "func", None):
            parser.print_help(sys.stderr)
            return EXIT_USAGE
        return args.func(args)
    except _UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except PrecisionError as e:
        print(f"ambiguous measurement: {e}", file=sys.stderr)
        return EXIT_VERIFY
    except (GraphError, GeometryError, ConstructionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
