"""Independent brute-force checkers used by tests and the acceptance suite.

These deliberately avoid sharing code with the construction paths they
audit: the planarity oracle is a quadratic pairwise scan with exact
integer predicates, and the cycle enumerator is a guarded depth-first
search.  Keep them dumb.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from . import _kernels
from .model import ArrangementGraph, canonical_face_set


@dataclass(frozen=True)
class CrossingReport:
    """Violations found in a straight-line drawing.

    ``edge_pairs`` are improperly intersecting edge pairs, ``vertex_hits``
    are (vertex, edge) pairs where the vertex lies on a non-incident
    segment.  Counts are exact; witness lists may be truncated.
    """

    edge_pair_count: int
    edge_pairs: tuple[tuple[int, int], ...]
    vertex_hit_count: int
    vertex_hits: tuple[tuple[int, int], ...]

    @property
    def ok(self) -> bool:
        return self.edge_pair_count == 0 and self.vertex_hit_count == 0


def crossing_report(positions: Mapping[int, tuple[int, int]],
                    edges: Iterable[tuple[int, int]],
                    cap: int = 4096) -> CrossingReport:
    """Exact O(m^2) scan of integer-coordinate segments.

    Non-adjacent edges must be disjoint, adjacent edges may share only
    their common endpoint, and no vertex may lie on a non-incident closed
    segment.
    """
    edge_list = [(int(u), int(v)) for u, v in edges]
    ids = sorted(positions)
    index = {v: i for i, v in enumerate(ids)}
    pts = [positions[v] for v in ids]
    remapped = [(index[u], index[v]) for u, v in edge_list]
    pc, pairs, hc, hits = _kernels.segment_scan(pts, remapped, cap=cap)
    return CrossingReport(pc, tuple(pairs),
                          hc, tuple((ids[v], e) for v, e in hits))


def straightline_planar(drawing) -> CrossingReport:
    """Run :func:`crossing_report` on anything with positions and edges."""
    return crossing_report(drawing.positions, drawing.edges)


def same_face_set(a: Iterable[tuple[int, ...]], b: Iterable[tuple[int, ...]]) -> bool:
    """Face-set equality up to global reflection.

    Each face cycle is canonicalized over rotations and both directions,
    so reversing every cycle (a reflected embedding) compares equal.
    """
    return canonical_face_set(a) == canonical_face_set(b)


def enumerate_cycles_through(g: ArrangementGraph, v: int, max_len: int) -> list[tuple[int, ...]]:
    """All simple cycles through ``v`` with length <= ``max_len``.

    Exhaustive DFS, duplicate-free: each cycle is reported once, starting
    at ``v``, with its second vertex smaller than its last.  Guarded to
    n <= 15 so it stays a desk-scale oracle.
    """
    if g.n > 15:
        raise ValueError(f"cycle enumeration is limited to n <= 15, got n={g.n}")
    adj = g.adjacency()
    cycles: list[tuple[int, ...]] = []
    path = [v]
    on_path = {v}

    def extend(u: int) -> None:
        for w in adj[u]:
            if w == v and len(path) >= 3:
                if path[1] < path[-1]:
                    cycles.append(tuple(path))
            elif w not in on_path and len(path) < max_len:
                path.append(w)
                on_path.add(w)
                extend(w)
                on_path.remove(w)
                path.pop()

    extend(v)
    return cycles
