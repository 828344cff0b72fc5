"""Recognition and decomposition of pseudoline arrangement graphs.

The pipeline augments the input with a vertex at infinity so that every
original vertex has degree four, embeds the augmented graph in the plane,
and splits the edges into paths that go straight through every vertex
(each path leaves a vertex by the edge opposite the one it entered by).
The paths are the candidate pseudolines; a handful of counting checks then
either certifies the decomposition or rejects the graph with a witness.

Rejections are ordinary return values (:class:`RejectionReason`), never
exceptions: a graph failing recognition is a normal outcome.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import networkx as nx

from .model import (
    ArrangementGraph,
    ArrangementStructure,
    Pseudoline,
    RotationSystem,
    is_connected,
    validate_graph,
)

REJECTION_CODES = (
    "NOT_PLANAR", "BAD_DEGREE", "PATH_IS_CYCLE", "PATH_SELF_CROSSES",
    "WRONG_VERTEX_COUNT", "PAIR_MULTI_CROSS", "DISCONNECTED", "TOO_SMALL",
)


@dataclass(frozen=True)
class RejectionReason:
    """Why a graph is not a pseudoline arrangement graph."""

    code: str
    detail: str
    witness: tuple | None = None

    def __post_init__(self):
        assert self.code in REJECTION_CODES, self.code


class NotPlanarError(Exception):
    """Raised by :func:`planar_embed`; carries an optional subgraph witness."""

    def __init__(self, message: str, witness_edges: tuple[tuple[int, int], ...] = ()):
        super().__init__(message)
        self.witness_edges = witness_edges


@dataclass(frozen=True)
class AugmentedGraph:
    """The input graph plus a vertex at infinity soaking up spare degree.

    Each vertex of degree d < 4 receives 4 - d extra edges to ``infinity``
    (so degree-2 vertices get two parallel edges).  ``edge_endpoints``
    lists the base edges first (ids match the base graph), then the
    augmentation edges; ``rotation`` embeds the whole multigraph.
    """

    base: ArrangementGraph
    infinity: int
    edge_endpoints: tuple[tuple[int, int], ...]
    first_aug_edge: int
    rotation: RotationSystem


def planar_embed(n: int, edges: Sequence[tuple[int, int]]) -> RotationSystem:
    """Embed a connected multigraph in the plane.

    Parallel edges are supported (each duplicate is subdivided by a hidden
    vertex before the planarity test and contracted away afterwards);
    loops are not.  Raises :class:`NotPlanarError` with a subgraph witness
    when no embedding exists.
    """
    h = nx.Graph()
    h.add_nodes_from(range(n))
    direct: dict[tuple[int, int], int] = {}
    via_dummy: dict[int, int] = {}  # dummy vertex -> edge id
    next_dummy = n
    for e, (u, v) in enumerate(edges):
        if u == v:
            raise ValueError(f"edge {e} is a loop")
        key = (min(u, v), max(u, v))
        if key not in direct and not h.has_edge(u, v):
            direct[key] = e
            h.add_edge(u, v)
        else:
            d = next_dummy
            next_dummy += 1
            via_dummy[d] = e
            h.add_node(d)
            h.add_edge(u, d)
            h.add_edge(d, v)
    ok, result = nx.check_planarity(h, counterexample=True)
    if not ok:
        witness = tuple(sorted((min(u, v), max(u, v))
                               for u, v in result.edges() if u < n and v < n))
        raise NotPlanarError("augmented graph is not planar", witness)

    order: list[tuple[int, ...]] = []
    for v in range(n):
        cyc = []
        for w in result.neighbors_cw_order(v):
            if w in via_dummy:
                cyc.append(via_dummy[w])
            else:
                cyc.append(direct[(min(v, w), max(v, w))])
        order.append(tuple(cyc))
    rot = RotationSystem(n, tuple(edges), tuple(order))
    rot.validate()
    return rot


def augment(g: ArrangementGraph) -> AugmentedGraph:
    """Build and embed the degree-4 augmentation of ``g``.

    Raises :class:`NotPlanarError` when the augmented graph has no planar
    embedding.
    """
    infinity = g.n
    endpoints = list(g.edges)
    for v, d in enumerate(g.degrees()):
        for _ in range(4 - d):
            endpoints.append((v, infinity))
    rotation = planar_embed(g.n + 1, endpoints)
    return AugmentedGraph(g, infinity, tuple(endpoints), g.m, rotation)


@dataclass(frozen=True)
class _Decomposition:
    paths: tuple[tuple[int, ...], ...]          # vertex sequences
    ends: tuple[tuple[int, int], ...]           # (start aug edge, end aug edge)


def _decompose(aug: AugmentedGraph) -> _Decomposition | RejectionReason:
    g = aug.base
    m = aug.first_aug_edge
    ends = aug.edge_endpoints
    rot = aug.rotation

    opposite: list[dict[int, int]] = [dict() for _ in range(g.n)]
    for v in range(g.n):
        cyc = rot.order[v]
        if len(cyc) != 4:
            return RejectionReason(
                "BAD_DEGREE", f"vertex {v} has augmented degree {len(cyc)}, expected 4",
                (v,))
        for i in range(4):
            opposite[v][cyc[i]] = cyc[(i + 2) % 4]

    def other_end(e: int, v: int) -> int:
        a, b = ends[e]
        return b if a == v else a

    aug_ids = list(range(m, len(ends)))
    used_aug: set[int] = set()
    used_base: set[int] = set()
    paths: list[tuple[int, ...]] = []
    path_ends: list[tuple[int, int]] = []
    for a in aug_ids:
        if a in used_aug:
            continue
        used_aug.add(a)
        crossings: list[int] = []
        seen: set[int] = set()
        e = a
        v = other_end(a, aug.infinity)
        while True:
            if v in seen:
                return RejectionReason(
                    "PATH_SELF_CROSSES", f"path through augmentation edge {a} revisits vertex {v}",
                    (v,))
            seen.add(v)
            crossings.append(v)
            e = opposite[v][e]
            if e >= m:
                used_aug.add(e)
                break
            used_base.add(e)
            v = other_end(e, v)
        paths.append(tuple(crossings))
        path_ends.append((a, e))

    if len(used_base) != m:
        start = min(e for e in range(m) if e not in used_base)
        cycle: list[int] = []
        e = start
        v = ends[e][0]
        while True:
            cycle.append(v)
            e = opposite[v][e]
            v = other_end(e, v)
            if e == start:
                break
        return RejectionReason(
            "PATH_IS_CYCLE",
            f"opposite-edge partition contains a cycle avoiding infinity: {cycle}",
            tuple(cycle))

    return _Decomposition(tuple(paths), tuple(path_ends))


def path_decompose(aug: AugmentedGraph) -> tuple[Pseudoline, ...] | RejectionReason:
    """Split the augmented embedding into straight-through paths."""
    dec = _decompose(aug)
    if isinstance(dec, RejectionReason):
        return dec
    return tuple(Pseudoline(i, p) for i, p in enumerate(dec.paths))


def _pair_multi_cross(paths: Sequence[tuple[int, ...]], n: int) -> RejectionReason | None:
    """Bucket-sorted check that no two paths share more than one vertex."""
    l = len(paths)
    at_vertex: list[list[int]] = [[] for _ in range(n)]
    for p, crossings in enumerate(paths):
        for v in crossings:
            at_vertex[v].append(p)
    first_vertex: dict[int, int] = {}
    for v, lines in enumerate(at_vertex):
        if len(lines) != 2:
            return RejectionReason(
                "PAIR_MULTI_CROSS", f"vertex {v} lies on {len(lines)} paths, expected 2", (v,))
        a, b = sorted(lines)
        key = a * l + b
        if key in first_vertex:
            return RejectionReason(
                "PAIR_MULTI_CROSS",
                f"paths {a} and {b} cross at vertices {first_vertex[key]} and {v}",
                (a, b, first_vertex[key], v))
        first_vertex[key] = v
    return None


def _choose_reflection(g: ArrangementGraph, rot: RotationSystem) -> bool:
    """True when the embedding should be reflected for canonical output.

    Convention: at the lowest-id degree-4 vertex (falling back to vertex 0,
    whose augmented rotation also has four edges), the cyclic order must
    list its lowest-id edge followed by the smaller of that edge's two
    cyclic neighbors.
    """
    pivot = 0
    for v, d in enumerate(g.degrees()):
        if d == 4:
            pivot = v
            break
    cyc = rot.order[pivot]
    i = cyc.index(min(cyc))
    nxt = cyc[(i + 1) % len(cyc)]
    prev = cyc[i - 1]
    return nxt > prev


def recognize(g: ArrangementGraph) -> ArrangementStructure | RejectionReason:
    """Decide whether ``g`` is a pseudoline arrangement graph.

    On success returns the decomposition into pseudolines together with
    the embedding (unique up to reflection; a fixed reflection convention
    makes the output deterministic).  On failure returns the first failed
    check.
    """
    bad = validate_graph(g)
    if bad is not None:
        if bad.code == "degree > 4":
            return RejectionReason("BAD_DEGREE", bad.detail)
        raise ValueError(f"malformed graph: {bad.code}: {bad.detail}")

    n, m = g.n, g.m
    if n < 3:
        return RejectionReason("TOO_SMALL", f"n={n}: smallest arrangement graph has 3 vertices")
    if not is_connected(g):
        return RejectionReason("DISCONNECTED", "arrangement graphs are connected")
    if m > 3 * n - 6:
        return RejectionReason("NOT_PLANAR", f"m={m} exceeds the planar bound 3n-6={3 * n - 6}")
    l = 2 * n - m
    if l < 3 or n != l * (l - 1) // 2:
        return RejectionReason(
            "WRONG_VERTEX_COUNT",
            f"n={n}, m={m} imply {l} pseudoline paths, which require "
            f"{max(l, 0) * (max(l, 0) - 1) // 2} vertices")

    try:
        aug = augment(g)
    except NotPlanarError as exc:
        return RejectionReason("NOT_PLANAR", str(exc), exc.witness_edges)

    dec = _decompose(aug)
    if isinstance(dec, RejectionReason):
        return dec
    assert len(dec.paths) == l, "path count must match the degree count"

    reject = _pair_multi_cross(dec.paths, n)
    if reject is not None:
        return reject

    # canonical orientation and numbering of the paths
    paths = []
    ends = []
    for p, (a, b) in zip(dec.paths, dec.ends):
        if p[0] > p[-1]:
            paths.append(tuple(reversed(p)))
            ends.append((b, a))
        else:
            paths.append(p)
            ends.append((a, b))
    order = sorted(range(l), key=lambda i: paths[i])
    rank = {old: new for new, old in enumerate(order)}
    pseudolines = tuple(Pseudoline(new, paths[old]) for new, old in enumerate(order))

    aug_edge_to_end: dict[int, tuple[int, int]] = {}
    for old, (a, b) in enumerate(ends):
        aug_edge_to_end[a] = (rank[old], 0)
        aug_edge_to_end[b] = (rank[old], 1)

    base_order = tuple(tuple(e for e in aug.rotation.order[v] if e < m) for v in range(n))
    base_rot = RotationSystem(n, g.edges, base_order)
    infinity_cycle = [aug_edge_to_end[e] for e in aug.rotation.order[aug.infinity]]
    if _choose_reflection(g, aug.rotation):
        base_rot = base_rot.reflected()
        infinity_cycle.reverse()
    start = infinity_cycle.index(min(infinity_cycle))
    infinity_order = tuple(infinity_cycle[start:] + infinity_cycle[:start])

    membership: list[tuple[int, int, int, int]] = [(-1, -1, -1, -1)] * n
    seen_once: dict[int, tuple[int, int]] = {}
    for p in pseudolines:
        for idx, v in enumerate(p.crossings):
            if v in seen_once:
                a, i = seen_once.pop(v)
                membership[v] = (a, i, p.id, idx)
            else:
                seen_once[v] = (p.id, idx)

    structure = ArrangementStructure(
        graph=g, l=l, rotation=base_rot, pseudolines=pseudolines,
        vertex_membership=tuple(membership), infinity_order=infinity_order)
    structure.check_invariants()
    return structure
