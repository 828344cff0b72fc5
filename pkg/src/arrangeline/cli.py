"""Command-line entry points.

Subcommands: generate, recognize, draw, upset, solve-greedy, stats,
verify, serve.  JSON (or SVG with --svg) goes to stdout, diagnostics to
stderr.  Exit codes: 0 success, 1 domain rejection (the input is not an
arrangement graph, or a drawing fails verification), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .generate import GeneratorError, planarity_level, random_lines
from .greedy import solve
from .griddraw import GridDrawing, best_cut_diagram, draw, to_svg
from .model import ArrangementGraph, validate_graph
from .oracles import crossing_report
from .pointset import universal_points
from .recognize import RejectionReason, recognize
from .wiring import default_wiring, level_stats


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, separators=(",", ":")) + "\n")


def _fail(message: str, code: int = 1) -> int:
    sys.stderr.write(message + "\n")
    return code


def _load_graph(path: str | None) -> ArrangementGraph:
    text = sys.stdin.read() if path in (None, "-") else open(path, "r", encoding="utf-8").read()
    g = ArrangementGraph.from_json(text)
    bad = validate_graph(g)
    if bad is not None:
        raise ValueError(f"{bad.code}: {bad.detail}")
    return g


def _rejection_payload(r: RejectionReason) -> dict:
    out = {"code": r.code, "message": r.detail}
    if r.witness is not None:
        out["witness"] = list(r.witness)
    return out


def _generate(args) -> int:
    try:
        if args.level is not None:
            gen = planarity_level(args.level, args.seed)
        else:
            gen = random_lines(args.lines, args.seed)
    except (ValueError, GeneratorError) as exc:
        return _fail(f"generate: {exc}", 2)
    _emit({
        "l": gen.l,
        "seed": gen.seed,
        "graph": {"n": gen.graph.n, "edges": [list(e) for e in gen.graph.edges]},
        "layout": {str(v): list(gen.layout[v]) for v in sorted(gen.layout)},
        "pseudolines": [list(p) for p in gen.pseudolines],
    })
    return 0


def _recognize(args) -> int:
    g = _load_graph(args.file)
    result = recognize(g)
    if isinstance(result, RejectionReason):
        _emit({"accepted": False, "rejection": _rejection_payload(result)})
        return 1
    _emit(json.loads(result.to_json()))
    return 0


def _drawing_payload(drawing: GridDrawing) -> dict:
    payload = drawing.to_payload()
    payload["edges"] = [list(e) for e in drawing.edges]
    return payload


def _draw(args) -> int:
    g = _load_graph(args.file)
    result = recognize(g)
    if isinstance(result, RejectionReason):
        _emit({"accepted": False, "rejection": _rejection_payload(result)})
        return 1
    diagram = best_cut_diagram(result) if args.optimize_cuts else default_wiring(result)
    drawing = draw(result, diagram)
    if args.svg:
        sys.stdout.write(to_svg(drawing, scale=args.scale))
    else:
        _emit(_drawing_payload(drawing))
    return 0


def _upset(args) -> int:
    try:
        ups = universal_points(args.l, args.cap)
    except ValueError as exc:
        return _fail(f"upset: {exc}", 2)
    if args.svg:
        scale = args.scale
        w, h = ups.width_cap * scale, ups.s * scale
        parts = [f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {w} {h}" '
                 f'width="{w}" height="{h}">']
        for row, count in enumerate(ups.row_counts):
            cy = scale * (ups.s - 1 - row + 0.5)
            for col in range(count):
                parts.append(f'<circle cx="{scale * (col + 0.5):g}" cy="{cy:g}" '
                             f'r="{scale / 8:g}" fill="black"/>')
        parts.append("</svg>")
        sys.stdout.write("\n".join(parts) + "\n")
    else:
        _emit(ups.to_payload())
    return 0


def _solve_greedy(args) -> int:
    g = _load_graph(args.file)
    result = recognize(g)
    if isinstance(result, RejectionReason):
        _emit({"accepted": False, "rejection": _rejection_payload(result)})
        return 1
    plan = solve(g, start=args.start)
    _emit(plan.to_payload())
    return 0


def _stats(args) -> int:
    g = _load_graph(args.file)
    result = recognize(g)
    if isinstance(result, RejectionReason):
        _emit({"accepted": False, "rejection": _rejection_payload(result)})
        return 1
    diagram = best_cut_diagram(result) if args.optimize_cuts else default_wiring(result)
    stats = level_stats(diagram)
    _emit({
        "l": result.l, "n": g.n, "m": g.m,
        "cut": diagram.cut_index,
        "levels": list(stats.sizes),
        "kappa": stats.kappa,
        "width": stats.kappa,
        "height": result.l - 1,
        "area": stats.kappa * (result.l - 1),
    })
    return 0


def _verify(args) -> int:
    obj = json.loads(open(args.drawing, "r", encoding="utf-8").read())
    positions = {int(v): (int(xy[0]), int(xy[1])) for v, xy in obj["positions"].items()}
    edges = [(int(u), int(v)) for u, v in obj["edges"]]
    report = crossing_report(positions, edges)
    _emit({
        "ok": report.ok,
        "crossingCount": report.edge_pair_count,
        "crossings": [list(p) for p in report.edge_pairs],
        "vertexHitCount": report.vertex_hit_count,
        "vertexHits": [list(h) for h in report.vertex_hits],
    })
    return 0 if report.ok else 1


def _serve(args) -> int:
    from .service import run_server
    port = args.port if args.port is not None else int(os.environ.get("ARRANGELINE_PORT", "8080"))
    host = args.host if args.host is not None else os.environ.get("ARRANGELINE_HOST", "127.0.0.1")
    run_server(host, port, static_dir=args.static)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="arrangeline",
                                     description="Pseudoline arrangement graph toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="random line arrangement instance")
    p.add_argument("--lines", type=int, default=None, help="number of lines")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--level", type=int, default=None,
                   help="puzzle level i (uses i+3 lines; overrides --lines)")
    p.set_defaults(func=_generate)

    p = sub.add_parser("recognize", help="test a graph and decompose it into pseudolines")
    p.add_argument("file", nargs="?", help="graph JSON file (default: stdin)")
    p.set_defaults(func=_recognize)

    p = sub.add_parser("draw", help="straight-line grid drawing")
    p.add_argument("file", nargs="?")
    p.add_argument("--optimize-cuts", action="store_true",
                   help="minimize width over all sweep cuts")
    p.add_argument("--svg", action="store_true")
    p.add_argument("--scale", type=int, default=40)
    p.set_defaults(func=_draw)

    p = sub.add_parser("upset", help="universal point set rows")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--cap", type=int, default=None, help="width cap override")
    p.add_argument("--svg", action="store_true")
    p.add_argument("--scale", type=int, default=10)
    p.set_defaults(func=_upset)

    p = sub.add_parser("solve-greedy", help="greedy ear-decomposition plan")
    p.add_argument("file", nargs="?")
    p.add_argument("--start", type=int, default=None)
    p.set_defaults(func=_solve_greedy)

    p = sub.add_parser("stats", help="level sizes and drawing dimensions")
    p.add_argument("file", nargs="?")
    p.add_argument("--optimize-cuts", action="store_true")
    p.set_defaults(func=_stats)

    p = sub.add_parser("verify", help="exact planarity check of a drawing")
    p.add_argument("--drawing", required=True)
    p.set_defaults(func=_verify)

    p = sub.add_parser("serve", help="HTTP JSON API")
    p.add_argument("--port", type=int, default=None)
    p.add_argument("--host", default=None)
    p.add_argument("--static", default=None, help="directory of UI files to serve at /")
    p.set_defaults(func=_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    if args.command == "generate" and args.level is None and args.lines is None:
        return _fail("generate: one of --lines or --level is required", 2)
    try:
        return args.func(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        return _fail(f"{args.command}: {exc}", 2)


if __name__ == "__main__":
    sys.exit(main())
