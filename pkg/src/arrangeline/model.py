"""Core combinatorial types shared across the toolkit.

An arrangement graph has one vertex per crossing of a simple pseudoline
arrangement and one edge per pair of crossings that are consecutive on a
common pseudoline.  Everything downstream (recognition, wiring diagrams,
grid drawings, the greedy solver) works on the types defined here:

* :class:`ArrangementGraph` -- plain undirected graph, max degree 4.
* :class:`RotationSystem` -- combinatorial embedding: cyclic edge order
  per vertex.  Supports parallel edges so the recognizer can embed the
  internally augmented graph.
* :class:`Pseudoline` / :class:`ArrangementStructure` -- the decomposition
  of a recognized graph into its constituent pseudolines.

All types are immutable after construction and safe to share between
threads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping


class StructuralError(ValueError):
    """A rotation system or structure violates its own invariants."""


@dataclass(frozen=True)
class Violation:
    """First problem found by :func:`validate_graph`."""

    code: str
    detail: str


@dataclass(frozen=True)
class ArrangementGraph:
    """Undirected simple graph with dense vertex ids ``0..n-1``.

    Edge ids are positions in ``edges``; endpoints are normalized to
    ``(min, max)`` but input order is preserved so ids are stable.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "ArrangementGraph":
        return ArrangementGraph(n, tuple((min(u, v), max(u, v)) for u, v in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def adjacency(self) -> list[list[int]]:
        """Neighbor lists sorted ascending (deterministic traversals)."""
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for row in adj:
            row.sort()
        return adj

    def incident_edges(self) -> list[list[int]]:
        """Edge-id lists per vertex, in edge-id order."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for e, (u, v) in enumerate(self.edges):
            inc[u].append(e)
            inc[v].append(e)
        return inc

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "edges": [list(e) for e in self.edges]})

    @staticmethod
    def from_json(text: str | bytes | Mapping) -> "ArrangementGraph":
        obj = json.loads(text) if isinstance(text, (str, bytes)) else text
        if not isinstance(obj, Mapping) or "n" not in obj or "edges" not in obj:
            raise ValueError("graph JSON must be an object with 'n' and 'edges'")
        n = obj["n"]
        edges = obj["edges"]
        if not isinstance(n, int) or not isinstance(edges, list):
            raise ValueError("graph JSON: 'n' must be int, 'edges' a list of pairs")
        pairs = []
        for item in edges:
            if not (isinstance(item, (list, tuple)) and len(item) == 2
                    and all(isinstance(x, int) for x in item)):
                raise ValueError(f"graph JSON: bad edge entry {item!r}")
            pairs.append((item[0], item[1]))
        return ArrangementGraph.from_edges(n, pairs)


def validate_graph(g: ArrangementGraph) -> Violation | None:
    """Check simplicity, id contiguity and the degree-4 bound.

    Returns ``None`` when the graph is well formed, else the first
    violation found (the report is the result; nothing raises).
    """
    for e, (u, v) in enumerate(g.edges):
        if not (0 <= u < g.n and 0 <= v < g.n):
            return Violation("bad vertex id", f"edge {e} = {(u, v)} outside 0..{g.n - 1}")
        if u == v:
            return Violation("loop", f"edge {e} is a loop at vertex {u}")
    seen: dict[tuple[int, int], int] = {}
    for e, pair in enumerate(g.edges):
        if pair in seen:
            return Violation("multi-edge", f"edges {seen[pair]} and {e} both join {pair}")
        seen[pair] = e
    for v, d in enumerate(g.degrees()):
        if d > 4:
            return Violation("degree > 4", f"vertex {v} has degree {d}")
    return None


def is_connected(g: ArrangementGraph) -> bool:
    if g.n <= 1:
        return True
    adj = g.adjacency()
    seen = [False] * g.n
    stack = [0]
    seen[0] = True
    count = 1
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == g.n


@dataclass(frozen=True)
class RotationSystem:
    """Combinatorial embedding of a connected (multi)graph.

    ``edge_endpoints[e]`` gives the two endpoints of edge ``e`` (parallel
    edges are distinct ids; loops are not supported).  ``order[v]`` lists
    the incident edge ids in cyclic order around ``v``.
    """

    n: int
    edge_endpoints: tuple[tuple[int, int], ...]
    order: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.edge_endpoints)

    def validate(self) -> None:
        """Raise :class:`StructuralError` unless every edge appears exactly
        once in each endpoint's cyclic order."""
        if len(self.order) != self.n:
            raise StructuralError(f"rotation has {len(self.order)} vertices, expected {self.n}")
        count: list[dict[int, int]] = [dict() for _ in range(self.n)]
        for v, cyc in enumerate(self.order):
            for e in cyc:
                count[v][e] = count[v].get(e, 0) + 1
        for e, (u, v) in enumerate(self.edge_endpoints):
            if u == v:
                raise StructuralError(f"edge {e} is a loop")
            if count[u].get(e, 0) != 1 or count[v].get(e, 0) != 1:
                raise StructuralError(f"edge {e} missing from rotation of an endpoint")
        total = sum(len(cyc) for cyc in self.order)
        if total != 2 * self.m:
            raise StructuralError(f"rotation lists {total} darts, expected {2 * self.m}")

    def reflected(self) -> "RotationSystem":
        return RotationSystem(self.n, self.edge_endpoints,
                              tuple(tuple(reversed(cyc)) for cyc in self.order))


def faces_of(rotation: RotationSystem) -> tuple[tuple[int, ...], ...]:
    """Trace all faces of an embedding by walking darts.

    A dart is an oriented edge; the successor of a dart entering ``v``
    leaves ``v`` along the next edge in ``order[v]``.  The walk partitions
    the 2m darts into cycles; each cycle is reported as the sequence of
    vertices it passes through.  For an embedding of genus 0 the number of
    faces is ``m - n + 2``.
    """
    rotation.validate()
    ends = rotation.edge_endpoints
    pos: list[dict[int, int]] = [dict() for _ in range(rotation.n)]
    for v, cyc in enumerate(rotation.order):
        for i, e in enumerate(cyc):
            pos[v][e] = i

    # dart id: 2e (from endpoints[0] to endpoints[1]) or 2e+1 (reverse)
    def head(d: int) -> int:
        u, v = ends[d // 2]
        return v if d % 2 == 0 else u

    def tail(d: int) -> int:
        u, v = ends[d // 2]
        return u if d % 2 == 0 else v

    used = [False] * (2 * rotation.m)
    faces: list[tuple[int, ...]] = []
    for start in range(2 * rotation.m):
        if used[start]:
            continue
        cycle: list[int] = []
        d = start
        while not used[d]:
            used[d] = True
            cycle.append(tail(d))
            v = head(d)
            cyc = rotation.order[v]
            e2 = cyc[(pos[v][d // 2] + 1) % len(cyc)]
            d = 2 * e2 if ends[e2][0] == v else 2 * e2 + 1
        if d != start:
            raise StructuralError("dart walk did not close into a cycle")
        faces.append(tuple(cycle))
    return tuple(faces)


def canonical_face(cycle: tuple[int, ...]) -> tuple[int, ...]:
    """Canonical form of a cyclic vertex sequence: the lexicographically
    smallest rotation over both directions.  Face-set comparisons are thus
    independent of starting dart and of global reflection."""
    k = len(cycle)
    best: tuple[int, ...] | None = None
    for seq in (cycle, tuple(reversed(cycle))):
        for i in range(k):
            cand = seq[i:] + seq[:i]
            if best is None or cand < best:
                best = cand
    assert best is not None
    return best


def canonical_face_set(faces: Iterable[tuple[int, ...]]) -> frozenset[tuple[int, ...]]:
    return frozenset(canonical_face(f) for f in faces)


@dataclass(frozen=True)
class Pseudoline:
    """One pseudoline: the ordered crossings along it."""

    id: int
    crossings: tuple[int, ...]


@dataclass(frozen=True)
class ArrangementStructure:
    """A recognized arrangement graph with its unique embedding.

    ``rotation`` is the embedding of the base graph.  ``infinity_order``
    records the circular order of the 2l pseudoline ends around the point
    at infinity as ``(pseudoline id, end)`` pairs, where end 0 means the
    ``crossings[0]`` end of the path; it fixes the available sweep cuts.
    ``vertex_membership[v] = (a, i, b, j)`` says vertex ``v`` is crossing
    number ``i`` on pseudoline ``a`` and number ``j`` on pseudoline ``b``
    with ``a < b``.
    """

    graph: ArrangementGraph
    l: int
    rotation: RotationSystem
    pseudolines: tuple[Pseudoline, ...]
    vertex_membership: tuple[tuple[int, int, int, int], ...]
    infinity_order: tuple[tuple[int, int], ...]

    def check_invariants(self) -> None:
        n, l = self.graph.n, self.l
        if n != l * (l - 1) // 2:
            raise StructuralError(f"n={n} but l={l} requires {l * (l - 1) // 2}")
        for p in self.pseudolines:
            if len(p.crossings) != l - 1:
                raise StructuralError(f"pseudoline {p.id} has {len(p.crossings)} crossings")
            if len(set(p.crossings)) != len(p.crossings):
                raise StructuralError(f"pseudoline {p.id} repeats a crossing")
        for v, (a, i, b, j) in enumerate(self.vertex_membership):
            if a >= b:
                raise StructuralError(f"membership of {v} not ordered")
            if self.pseudolines[a].crossings[i] != v or self.pseudolines[b].crossings[j] != v:
                raise StructuralError(f"membership of {v} inconsistent with pseudolines")
        if len(self.infinity_order) != 2 * l:
            raise StructuralError("infinity order must list 2l path ends")
        pair_seen: set[tuple[int, int]] = set()
        for a, i, b, j in self.vertex_membership:
            if (a, b) in pair_seen:
                raise StructuralError(f"pseudolines {a},{b} cross twice")
            pair_seen.add((a, b))

    def to_json(self) -> str:
        return json.dumps({
            "l": self.l,
            "pseudolines": [list(p.crossings) for p in self.pseudolines],
            "rotation": [list(cyc) for cyc in self.rotation.order],
        })
