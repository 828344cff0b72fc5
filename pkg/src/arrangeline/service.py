"""Stateless HTTP/JSON facade for the puzzle UI.

Endpoints (all responses JSON):

* ``GET  /api/generate?level=i&seed=s`` -- fresh puzzle level.
* ``POST /api/recognize``  body: graph JSON.
* ``POST /api/draw``       body: ``{"graph": ..., "optimizeCuts": bool}``.
* ``POST /api/solve-plan`` body: ``{"graph": ..., "start": int?}``.
* ``POST /api/check``      body: ``{"positions": {v: [x, y]}, "edges": [[u, v]]}``
  with coordinates in the unit square; they are snapped to a 2^20 integer
  grid (``floor(clamp(t, 0, 1) * 2**20 + 0.5)``) before the exact crossing scan,
  and clients must mirror that snap to agree with the server's counts.

Handlers are pure functions of the request; there is no session state, so
the threaded server needs no locks.  Errors come back as
``{"code", "message", "witness"?}`` bodies: 400 for malformed requests,
422 for structurally valid graphs that are not arrangement graphs.
"""

from __future__ import annotations

import json
import math
import os
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import parse_qs, urlparse

from .generate import GeneratorError, planarity_level
from .greedy import solve
from .griddraw import best_cut_diagram, draw
from .model import ArrangementGraph, validate_graph
from .oracles import crossing_report
from .recognize import RejectionReason, recognize
from .wiring import default_wiring

SNAP_GRID = 1 << 20


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str, witness=None):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message
        self.witness = witness

    def payload(self) -> dict:
        out = {"code": self.code, "message": self.message}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def _parse_graph(obj) -> ArrangementGraph:
    try:
        g = ArrangementGraph.from_json(obj)
    except (ValueError, TypeError) as exc:
        raise ApiError(400, "BAD_GRAPH", str(exc))
    bad = validate_graph(g)
    if bad is not None:
        raise ApiError(400, "BAD_GRAPH", f"{bad.code}: {bad.detail}")
    return g


def _recognize_or_422(g: ArrangementGraph):
    result = recognize(g)
    if isinstance(result, RejectionReason):
        raise ApiError(422, result.code, result.detail,
                       list(result.witness) if result.witness is not None else None)
    return result


def handle_generate(query: dict) -> dict:
    try:
        level = int(query.get("level", ["1"])[0])
        seed = int(query.get("seed", ["0"])[0])
    except ValueError as exc:
        raise ApiError(400, "BAD_PARAM", f"level and seed must be integers: {exc}")
    try:
        gen = planarity_level(level, seed)
    except (ValueError, GeneratorError) as exc:
        raise ApiError(400, "BAD_PARAM", str(exc))
    return {
        "level": level,
        "l": gen.l,
        "seed": seed,
        "n": gen.graph.n,
        "m": gen.graph.m,
        "graph": {"n": gen.graph.n, "edges": [list(e) for e in gen.graph.edges]},
        "layout": {str(v): list(gen.layout[v]) for v in sorted(gen.layout)},
    }


def handle_recognize(body: dict) -> dict:
    g = _parse_graph(body)
    structure = _recognize_or_422(g)
    return json.loads(structure.to_json())


def handle_draw(body: dict) -> dict:
    if not isinstance(body, dict) or "graph" not in body:
        raise ApiError(400, "BAD_BODY", "expected {'graph': ..., 'optimizeCuts'?: bool}")
    g = _parse_graph(body["graph"])
    structure = _recognize_or_422(g)
    optimize = bool(body.get("optimizeCuts", False))
    diagram = best_cut_diagram(structure) if optimize else default_wiring(structure)
    drawing = draw(structure, diagram)
    payload = drawing.to_payload()
    payload["edges"] = [list(e) for e in drawing.edges]
    return payload


def handle_solve_plan(body: dict) -> dict:
    if not isinstance(body, dict) or "graph" not in body:
        raise ApiError(400, "BAD_BODY", "expected {'graph': ..., 'start'?: int}")
    g = _parse_graph(body["graph"])
    _recognize_or_422(g)
    start = body.get("start")
    if start is not None and not (isinstance(start, int) and 0 <= start < g.n):
        raise ApiError(400, "BAD_PARAM", f"start must be a vertex id below {g.n}")
    return solve(g, start=start).to_payload()


def snap_unit(t: float) -> int:
    # floor(t * G + 0.5): round-half-up, bit-identical to the client's
    # Math.floor(t * G + 0.5) (Python's round() would tie-break to even)
    return math.floor(min(1.0, max(0.0, float(t))) * SNAP_GRID + 0.5)


def handle_check(body: dict) -> dict:
    if not isinstance(body, dict) or "positions" not in body or "edges" not in body:
        raise ApiError(400, "BAD_BODY", "expected {'positions': {...}, 'edges': [...]}")
    try:
        positions = {int(v): (snap_unit(xy[0]), snap_unit(xy[1]))
                     for v, xy in body["positions"].items()}
        edges = [(int(u), int(v)) for u, v in body["edges"]]
    except (TypeError, ValueError, IndexError) as exc:
        raise ApiError(400, "BAD_BODY", f"malformed positions/edges: {exc}")
    for u, v in edges:
        if u not in positions or v not in positions:
            raise ApiError(400, "BAD_BODY", f"edge ({u},{v}) references a missing vertex")
    report = crossing_report(positions, edges)
    return {
        "snapGrid": SNAP_GRID,
        "crossingCount": report.edge_pair_count,
        "crossings": [list(p) for p in report.edge_pairs],
        "vertexHitCount": report.vertex_hit_count,
        "vertexHits": [list(h) for h in report.vertex_hits],
    }


def handle_api(method: str, path: str, query: dict, body) -> tuple[int, dict]:
    """Route one request; returns (status, payload).  Pure."""
    try:
        if method == "GET" and path == "/api/generate":
            return 200, handle_generate(query)
        if method == "POST" and path == "/api/recognize":
            return 200, handle_recognize(body)
        if method == "POST" and path == "/api/draw":
            return 200, handle_draw(body)
        if method == "POST" and path == "/api/solve-plan":
            return 200, handle_solve_plan(body)
        if method == "POST" and path == "/api/check":
            return 200, handle_check(body)
        raise ApiError(404, "NOT_FOUND", f"no route {method} {path}")
    except ApiError as exc:
        return exc.status, exc.payload()


def _make_handler(static_dir: str | None, cors_origin: str):
    class Handler(BaseHTTPRequestHandler):
        protocol_version = "HTTP/1.1"

        def log_message(self, fmt, *args):  # quiet by default
            if os.environ.get("ARRANGELINE_HTTP_LOG"):
                super().log_message(fmt, *args)

        def _send_json(self, status: int, payload: dict) -> None:
            data = json.dumps(payload, separators=(",", ":")).encode()
            self.send_response(status)
            self.send_header("Content-Type", "application/json")
            self.send_header("Content-Length", str(len(data)))
            self.send_header("Access-Control-Allow-Origin", cors_origin)
            self.end_headers()
            self.wfile.write(data)

        def do_OPTIONS(self):
            self.send_response(204)
            self.send_header("Access-Control-Allow-Origin", cors_origin)
            self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
            self.send_header("Access-Control-Allow-Headers", "Content-Type")
            self.send_header("Content-Length", "0")
            self.end_headers()

        def do_GET(self):
            url = urlparse(self.path)
            if url.path.startswith("/api/"):
                status, payload = handle_api("GET", url.path, parse_qs(url.query), None)
                self._send_json(status, payload)
                return
            self._serve_static(url.path)

        def do_POST(self):
            url = urlparse(self.path)
            length = int(self.headers.get("Content-Length") or 0)
            raw = self.rfile.read(length) if length else b""
            try:
                body = json.loads(raw) if raw else None
            except json.JSONDecodeError as exc:
                self._send_json(400, {"code": "BAD_JSON", "message": str(exc)})
                return
            status, payload = handle_api("POST", url.path, parse_qs(url.query), body)
            self._send_json(status, payload)

        def _serve_static(self, path: str) -> None:
            if static_dir is None:
                self._send_json(404, {"code": "NOT_FOUND",
                                      "message": "no static directory configured"})
                return
            rel = path.lstrip("/") or "index.html"
            full = os.path.realpath(os.path.join(static_dir, rel))
            root = os.path.realpath(static_dir)
            if not full.startswith(root + os.sep) and full != root:
                self._send_json(404, {"code": "NOT_FOUND", "message": "outside static root"})
                return
            if os.path.isdir(full):
                full = os.path.join(full, "index.html")
            if not os.path.isfile(full):
                self._send_json(404, {"code": "NOT_FOUND", "message": f"no file {rel}"})
                return
            ctype = {"html": "text/html", "js": "text/javascript", "css": "text/css",
                     "svg": "image/svg+xml", "json": "application/json",
                     "map": "application/json"}.get(full.rsplit(".", 1)[-1],
                                                    "application/octet-stream")
            with open(full, "rb") as fh:
                data = fh.read()
            self.send_response(200)
            self.send_header("Content-Type", ctype)
            self.send_header("Content-Length", str(len(data)))
            self.end_headers()
            self.wfile.write(data)

    return Handler


def make_server(host: str, port: int, static_dir: str | None = None) -> ThreadingHTTPServer:
    cors = os.environ.get("ARRANGELINE_CORS_ORIGIN", "*")
    return ThreadingHTTPServer((host, port), _make_handler(static_dir, cors))


def run_server(host: str, port: int, static_dir: str | None = None) -> None:
    server = make_server(host, port, static_dir)
    bound = server.server_address[1]
    print(f"arrangeline API listening on http://{host}:{bound}/", flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        server.shutdown()
