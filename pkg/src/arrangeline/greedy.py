"""Greedy ear-decomposition embedding of arrangement graphs.

The hand-solution strategy: start from a shortest cycle through some
vertex, then repeatedly pick two attachment vertices on the boundary of
the partial embedding (vertices still carrying unused edges) with no
attachment between them, connect them by a shortest path over unused
edges, and glue that path on as a new face.  On arrangement graphs every
cycle this finds is a genuine face of the embedding induced by the
arrangement, so the procedure terminates with that embedding.

Each round considers every consecutive attachment pair and glues the
shortest clean cycle on offer; remaining ties (start vertex, BFS
neighbor order, equal-length cycles) break toward minimum vertex id, so
runs are deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .model import ArrangementGraph, RotationSystem, canonical_face


class EarSolverError(RuntimeError):
    """Solver state broke an invariant that holds on arrangement graphs."""


@dataclass(frozen=True)
class EarStep:
    u: int
    v: int
    boundary_path: tuple[int, ...]   # along the current boundary, u .. v
    ear_path: tuple[int, ...]        # over unused edges, u .. v

    def face(self) -> tuple[int, ...]:
        return self.boundary_path + tuple(reversed(self.ear_path[1:-1]))


@dataclass
class PartialEmbedding:
    graph: ArrangementGraph
    used_edges: set[tuple[int, int]]
    boundary: list[int]
    faces: list[tuple[int, ...]]
    ear_log: list[EarStep] = field(default_factory=list)


def _cycle_edges(cycle: tuple[int, ...]) -> set[tuple[int, int]]:
    out = set()
    for i, u in enumerate(cycle):
        v = cycle[(i + 1) % len(cycle)]
        out.add((min(u, v), max(u, v)))
    return out


def shortest_cycle_through(g: ArrangementGraph, v: int) -> tuple[int, ...]:
    """A minimum-length simple cycle containing v.

    Breadth-first layering from v; every non-tree edge whose endpoints
    hang off different children of v (or which closes back to v) yields a
    candidate cycle of length dist(a) + dist(b) + 1, and the minimum over
    candidates is exact.  Ties break to the lexicographically smallest
    canonical cycle.
    """
    adj = g.adjacency()
    dist = {v: 0}
    parent: dict[int, int] = {}
    branch: dict[int, int] = {v: -1}
    queue = deque([v])
    tree: set[tuple[int, int]] = set()
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                parent[w] = u
                branch[w] = w if u == v else branch[u]
                tree.add((min(u, w), max(u, w)))
                queue.append(w)

    def path_to_root(a: int) -> list[int]:
        out = [a]
        while out[-1] != v:
            out.append(parent[out[-1]])
        return out

    best_len: int | None = None
    best: tuple[int, ...] | None = None
    for a, b in g.edges:
        if (a, b) in tree:
            continue
        if a == v or b == v:
            other = b if a == v else a
            cand_len = dist[other] + 1
            cycle = tuple(reversed(path_to_root(other)))
        else:
            if branch[a] == branch[b]:
                continue
            cand_len = dist[a] + dist[b] + 1
            cycle = tuple(reversed(path_to_root(a))) + tuple(path_to_root(b)[:-1])
        if cand_len < 3:
            continue
        key = canonical_face(cycle)
        if best_len is None or cand_len < best_len or \
                (cand_len == best_len and key < canonical_face(best)):
            best_len, best = cand_len, cycle
    if best is None:
        raise EarSolverError(f"no cycle through vertex {v}")
    return best


def start_embedding(g: ArrangementGraph, start: int = 0) -> PartialEmbedding:
    c1 = shortest_cycle_through(g, start)
    return PartialEmbedding(g, _cycle_edges(c1), list(c1), [c1])


def _attachment_vertices(state: PartialEmbedding) -> list[int]:
    unused_at: set[int] = set()
    for u, v in state.graph.edges:
        if (u, v) not in state.used_edges:
            unused_at.add(u)
            unused_at.add(v)
    return [b for b in state.boundary if b in unused_at]


def _shortest_unused_path(g: ArrangementGraph, used: set[tuple[int, int]],
                          u: int, v: int) -> tuple[int, ...] | None:
    """Deterministic BFS over unused edges (neighbors in id order)."""
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for a, b in g.edges:
        if (a, b) not in used:
            adj[a].append(b)
            adj[b].append(a)
    for row in adj:
        row.sort()
    parent = {u: -1}
    queue = deque([u])
    while queue and v not in parent:
        x = queue.popleft()
        for w in adj[x]:
            if w not in parent:
                parent[w] = x
                queue.append(w)
    if v not in parent:
        return None
    ear = [v]
    while ear[-1] != u:
        ear.append(parent[ear[-1]])
    ear.reverse()
    return tuple(ear)


def _has_chord(g: ArrangementGraph, cycle: tuple[int, ...]) -> bool:
    pos = {v: i for i, v in enumerate(cycle)}
    k = len(cycle)
    for a, b in g.edges:
        if a in pos and b in pos:
            d = abs(pos[a] - pos[b])
            if d != 1 and d != k - 1:
                return True
    return False


def next_ear(g: ArrangementGraph, state: PartialEmbedding) -> EarStep | None:
    """The next ear to glue on, or None once every edge is embedded.

    Every consecutive attachment pair (u, v) on the boundary proposes a
    candidate: the boundary path P between the attachments plus the
    shortest unused path S joining them.  The shortest proposed cycle
    P + S wins (this is the sense in which the solver greedily adds short
    cycles as faces).  Candidates whose S revisits the boundary or whose
    cycle has a chord are discarded first: a bounded cell of an
    arrangement cannot have a chord or pinch the embedded disk, so those
    proposals always wrap spare faces instead of closing one.
    """
    if len(state.used_edges) == g.m:
        return None
    attach = _attachment_vertices(state)
    if len(attach) < 2:
        raise EarSolverError("fewer than two attachment vertices with edges left")
    boundary = state.boundary
    bset = set(boundary)
    start = boundary.index(min(attach))
    rotated = boundary[start:] + boundary[:start]
    attach_set = set(attach)
    marks = [i for i, b in enumerate(rotated) if b in attach_set]

    best: tuple[int, tuple[int, ...], EarStep] | None = None
    for k in range(len(marks)):
        i0 = marks[k]
        i1 = marks[(k + 1) % len(marks)]
        if i1 > i0:
            path = rotated[i0:i1 + 1]
        else:
            path = rotated[i0:] + rotated[:i1 + 1]
        u, v = path[0], path[-1]
        ear = _shortest_unused_path(g, state.used_edges, u, v)
        if ear is None:
            continue
        if not all(w == u or w == v or w not in bset for w in ear):
            continue
        cycle = tuple(path) + tuple(reversed(ear[1:-1]))
        if _has_chord(g, cycle):
            continue
        key = (len(cycle), canonical_face(cycle))
        if best is None or key < (best[0], best[1]):
            best = (key[0], key[1], EarStep(u, v, tuple(path), ear))
    if best is None:
        raise EarSolverError("no attachment pair admits a chordless, non-pinching ear")
    return best[2]


def apply_ear(state: PartialEmbedding, step: EarStep) -> None:
    """Glue the ear outside the boundary: the boundary path is replaced by
    the ear path and the enclosed cycle becomes a face."""
    for i in range(len(step.ear_path) - 1):
        a, b = step.ear_path[i], step.ear_path[i + 1]
        state.used_edges.add((min(a, b), max(a, b)))
    boundary = state.boundary
    i0 = boundary.index(step.u)
    rest_len = len(boundary) - len(step.boundary_path)
    rest = [boundary[(i0 + len(step.boundary_path) - 1 + k) % len(boundary)]
            for k in range(1, rest_len + 1)]
    new_boundary = list(step.ear_path) + rest
    if len(set(new_boundary)) != len(new_boundary):
        raise EarSolverError("boundary stopped being a simple cycle")
    state.boundary = new_boundary
    state.faces.append(step.face())
    state.ear_log.append(step)


@dataclass(frozen=True)
class SolveResult:
    rotation: RotationSystem
    initial_cycle: tuple[int, ...]
    ears: tuple[EarStep, ...]
    faces: tuple[tuple[int, ...], ...]   # all faces, outer last

    def to_payload(self) -> dict:
        return {
            "initialCycle": list(self.initial_cycle),
            "ears": [{"u": e.u, "v": e.v, "P": list(e.boundary_path),
                      "S": list(e.ear_path)} for e in self.ears],
        }


def _rotation_from_faces(g: ArrangementGraph,
                         oriented_faces: list[tuple[int, ...]]) -> RotationSystem:
    """Rebuild the cyclic edge order at each vertex from coherently
    oriented faces (each dart traversed exactly once)."""
    edge_id = {e: i for i, e in enumerate(g.edges)}
    succ: list[dict[int, int]] = [dict() for _ in range(g.n)]
    for face in oriented_faces:
        k = len(face)
        for i in range(k):
            x, y, z = face[i - 1], face[i], face[(i + 1) % k]
            e_in = edge_id[(min(x, y), max(x, y))]
            e_out = edge_id[(min(y, z), max(y, z))]
            if e_in in succ[y]:
                raise EarSolverError("faces are not coherently oriented")
            succ[y][e_in] = e_out
    order = []
    for v in range(g.n):
        at_v = succ[v]
        if not at_v:
            order.append(())
            continue
        e0 = min(at_v)
        cyc = [e0]
        e = at_v[e0]
        while e != e0:
            cyc.append(e)
            e = at_v[e]
        if len(cyc) != len(at_v):
            raise EarSolverError(f"rotation at vertex {v} is not a single cycle")
        order.append(tuple(cyc))
    return RotationSystem(g.n, g.edges, tuple(order))


def solve(g: ArrangementGraph, start: int | None = None) -> SolveResult:
    """Run the greedy embedding to completion.

    Returns the reconstructed rotation system (unique up to reflection),
    the open ear decomposition, and the full face list (outer face last).
    """
    state = start_embedding(g, 0 if start is None else start)
    while True:
        step = next_ear(g, state)
        if step is None:
            break
        apply_ear(state, step)

    outer = tuple(state.boundary)
    faces = tuple(state.faces) + (outer,)
    oriented = [state.faces[0]]
    oriented.extend(tuple(reversed(e.boundary_path)) + e.ear_path[1:-1]
                    for e in state.ear_log)
    oriented.append(tuple(reversed(outer)))
    rotation = _rotation_from_faces(g, oriented)
    return SolveResult(rotation, tuple(state.faces[0]), tuple(state.ear_log), faces)
