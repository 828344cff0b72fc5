"""Ground-truth instance generators.

Random Euclidean line arrangements (exact rational predicates, no
epsilons), random wiring diagrams, puzzle levels, and the stacked
construction that glues two diagrams into a wider one.

All randomness flows through numpy's counter-based Philox generator keyed
by a 64-bit seed, so identical (operation, parameters, seed) triples
reproduce identical outputs byte for byte.  Stream order is part of the
contract: line generators draw one (a, b, c) triple per attempted line
(rejected attempts consume their draws), then one permutation for the
tangled circular layout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from .model import ArrangementGraph, ArrangementStructure, Pseudoline, RotationSystem
from .wiring import WiringDiagram


class GeneratorError(RuntimeError):
    """Redraw budget exhausted (pathological seed/coefficient range)."""


@dataclass(frozen=True)
class LineSet:
    """Lines a*x + b*y = c with integer coefficients, in general position."""

    lines: tuple[tuple[int, int, int], ...]
    seed: int


@dataclass(frozen=True)
class GeneratedArrangement:
    line_set: LineSet
    graph: ArrangementGraph
    layout: dict[int, tuple[float, float]]       # tangled circular start, in [0,1]^2
    pseudolines: tuple[tuple[int, ...], ...]     # ordered crossings per line
    l: int
    seed: int


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=np.uint64(seed)))


def _parallel(p: tuple[int, int, int], q: tuple[int, int, int]) -> bool:
    return p[0] * q[1] - q[0] * p[1] == 0


def _cross_raw(p: tuple[int, int, int], q: tuple[int, int, int]) -> tuple[int, int, int]:
    """Crossing as an integer triple (xn, yn, d) with d > 0: the point is
    (xn/d, yn/d).  Exact; no normalization."""
    a1, b1, c1 = p
    a2, b2, c2 = q
    det = a1 * b2 - a2 * b1
    xn = c1 * b2 - c2 * b1
    yn = a1 * c2 - a2 * c1
    if det < 0:
        return -xn, -yn, -det
    return xn, yn, det


def _point_key(raw: tuple[int, int, int]) -> tuple[int, int, int]:
    from math import gcd
    xn, yn, d = raw
    g = gcd(gcd(abs(xn), abs(yn)), d)
    return xn // g, yn // g, d // g


def _cross_point(p: tuple[int, int, int], q: tuple[int, int, int]) -> tuple[Fraction, Fraction]:
    xn, yn, d = _cross_raw(p, q)
    return Fraction(xn, d), Fraction(yn, d)


def random_lines(l: int, seed: int, coeff_range: int = 1_000_000,
                 max_redraws: int = 1000) -> GeneratedArrangement:
    """Seeded random line arrangement in general position.

    Coefficients are uniform integers in [-coeff_range, coeff_range];
    draws producing a parallel pair or a concurrent triple are rejected
    exactly and redrawn.  The graph has one vertex per crossing (ids in
    lexicographic line-pair order) and one edge per consecutive crossing
    pair along a line.
    """
    if l < 3:
        raise ValueError("need at least 3 lines")
    rng = _rng(seed)
    redraws = 0

    def draw() -> tuple[int, int, int]:
        nonlocal redraws
        while True:
            a, b, c = (int(x) for x in rng.integers(-coeff_range, coeff_range + 1, size=3))
            if a != 0 or b != 0:
                return a, b, c
            redraws += 1
            if redraws > max_redraws:
                raise GeneratorError("redraw budget exhausted drawing a nonzero line")

    lines: list[tuple[int, int, int]] = []
    while len(lines) < l:
        cand = draw()
        if any(_parallel(cand, q) for q in lines):
            redraws += 1
            if redraws > max_redraws:
                raise GeneratorError("redraw budget exhausted avoiding parallels")
            continue
        lines.append(cand)

    raw_points: dict[tuple[int, int], tuple[int, int, int]] = {}
    while True:  # reject concurrent triples: two crossings sharing a point
        raw_points = {pair: _cross_raw(lines[pair[0]], lines[pair[1]])
                      for pair in combinations(range(l), 2)}
        seen: dict[tuple[int, int, int], tuple[int, int]] = {}
        clash: tuple[int, ...] | None = None
        for pair, raw in raw_points.items():
            key = _point_key(raw)
            if key in seen:
                clash = seen[key] + pair
                break
            seen[key] = pair
        if clash is None:
            break
        redraws += 1
        if redraws > max_redraws:
            raise GeneratorError("redraw budget exhausted avoiding concurrences")
        k = max(clash)
        while True:
            cand = draw()
            if not any(_parallel(cand, q) for idx, q in enumerate(lines) if idx != k):
                lines[k] = cand
                break
            redraws += 1
            if redraws > max_redraws:
                raise GeneratorError("redraw budget exhausted avoiding parallels")

    pair_list = list(combinations(range(l), 2))
    pair_vid = {pair: vid for vid, pair in enumerate(pair_list)}
    n = len(pair_list)
    along: list[list[tuple[Fraction, int]]] = [[] for _ in range(l)]
    for (i, j), vid in pair_vid.items():
        xn, yn, d = raw_points[(i, j)]
        for k in (i, j):
            a, b, _ = lines[k]
            # exact position along the line direction (b, -a)
            along[k].append((Fraction(b * xn - a * yn, d), vid))
    pseudolines = []
    edges: list[tuple[int, int]] = []
    for k in range(l):
        along[k].sort()
        seq = tuple(vid for _, vid in along[k])
        pseudolines.append(seq)
        edges.extend((min(u, v), max(u, v)) for u, v in zip(seq, seq[1:]))
    graph = ArrangementGraph.from_edges(n, edges)

    perm = [int(x) for x in rng.permutation(n)]
    layout = {}
    for slot, v in enumerate(perm):
        ang = 2.0 * np.pi * slot / n
        layout[v] = (round(0.5 + 0.45 * float(np.cos(ang)), 6),
                     round(0.5 + 0.45 * float(np.sin(ang)), 6))

    return GeneratedArrangement(LineSet(tuple(lines), seed), graph, layout,
                                tuple(pseudolines), l, seed)


def planarity_level(i: int, seed: int) -> GeneratedArrangement:
    """Puzzle level i uses i + 3 random lines."""
    if i < 1:
        raise ValueError("levels start at 1")
    return random_lines(i + 3, seed)


def random_wiring(l: int, seed: int) -> WiringDiagram:
    """Uniformly grown wiring diagram on l wires.

    Starting from the identity permutation, repeatedly swap a uniformly
    chosen adjacent pair that has not crossed yet; an uncrossed adjacent
    pair always exists until the permutation is fully reversed.
    """
    if l < 2:
        raise ValueError("need at least 2 wires")
    rng = _rng(seed)
    wire_at = list(range(l))                     # index = track - 1
    crossed: set[tuple[int, int]] = set()
    total = l * (l - 1) // 2
    out: list[tuple[int, int]] = []
    for vid in range(total):
        gaps = [g for g in range(l - 1)
                if (min(wire_at[g], wire_at[g + 1]), max(wire_at[g], wire_at[g + 1]))
                not in crossed]
        assert gaps, "an uncrossed adjacent pair must exist before full reversal"
        g = gaps[int(rng.integers(0, len(gaps)))]
        a, b = wire_at[g], wire_at[g + 1]
        crossed.add((min(a, b), max(a, b)))
        out.append((vid, g + 1))
        wire_at[g], wire_at[g + 1] = b, a
    assert wire_at == list(reversed(range(l)))
    return WiringDiagram(l, tuple(range(l)), tuple(out))


def high_kappa_wiring(l: int, tries: int, seed: int) -> WiringDiagram:
    """Widest diagram among ``tries`` random ones (seeded seed..seed+tries-1).

    A cheap stand-in for maximum-level-complexity blocks when building
    stacked worst cases; the true maximum is an open problem.
    """
    if tries < 1:
        raise ValueError("need at least one try")
    best: WiringDiagram | None = None
    best_kappa = -1
    for k in range(tries):
        d = random_wiring(l, seed + k)
        kappa = max(_level_sizes(d))
        if kappa > best_kappa:
            best, best_kappa = d, kappa
    assert best is not None
    return best


def _level_sizes(d: WiringDiagram) -> list[int]:
    sizes = [0] * (d.l - 1)
    for _, lev in d.crossings:
        sizes[lev - 1] += 1
    return sizes


def stacked(d1: WiringDiagram, d2: WiringDiagram) -> WiringDiagram:
    """Stack d2 on top of d1 and cross every wire pair between the blocks.

    The block diagrams run unchanged (d2 shifted up by |d1| tracks), then
    each wire of d1 bubbles up through all wires of d2, one at a time from
    the top.  Vertex ids are renumbered in emission order: d1's crossings,
    then d2's, then the inter-block grid.
    """
    l1, l2 = d1.l, d2.l
    for d in (d1, d2):
        ids = sorted(v for v, _ in d.crossings)
        assert ids == list(range(len(ids))), "stacked() needs contiguous vertex ids"
    out: list[tuple[int, int]] = [(v, lev) for v, lev in d1.crossings]
    out.extend((v + d1.n, lev + l1) for v, lev in d2.crossings)
    vid = d1.n + d2.n
    for step in range(l1):
        for k in range(l2):
            out.append((vid, l1 - step + k))
            vid += 1
    initial = tuple(d1.initial_tracks) + tuple(w + l1 for w in d2.initial_tracks)
    return WiringDiagram(l1 + l2, initial, tuple(out))


def graph_of(d: WiringDiagram) -> tuple[ArrangementGraph, ArrangementStructure]:
    """Arrangement graph and structure realized by a wiring diagram.

    Vertices are the diagram's crossings (ids must be 0..n-1), edges join
    crossings consecutive on a wire.  The embedding is read off the
    diagram geometry directly: around a crossing, the four neighbors in
    counterclockwise order are (next on rising wire, previous on falling
    wire, previous on rising wire, next on falling wire).
    """
    n = d.n
    ids = sorted(v for v, _ in d.crossings)
    if ids != list(range(n)):
        raise ValueError("graph_of needs contiguous crossing ids 0..n-1")
    l = d.l
    seq: list[list[int]] = [[] for _ in range(l)]
    riser: dict[int, tuple[int, int]] = {}       # vertex -> (rising wire, falling wire)
    wire_at = [-1] + list(d.initial_tracks)
    for v, lev in d.crossings:
        a, b = wire_at[lev], wire_at[lev + 1]
        seq[a].append(v)
        seq[b].append(v)
        riser[v] = (a, b)
        wire_at[lev], wire_at[lev + 1] = b, a

    edges: list[tuple[int, int]] = []
    edge_id: dict[tuple[int, int], int] = {}
    for w in range(l):
        for u, v in zip(seq[w], seq[w][1:]):
            key = (min(u, v), max(u, v))
            edge_id[key] = len(edges)
            edges.append(key)
    graph = ArrangementGraph.from_edges(n, edges)

    index_on: list[dict[int, int]] = [dict() for _ in range(l)]
    for w in range(l):
        for i, v in enumerate(seq[w]):
            index_on[w][v] = i

    def neighbor(w: int, v: int, step: int) -> int | None:
        i = index_on[w][v] + step
        return seq[w][i] if 0 <= i < len(seq[w]) else None

    order: list[tuple[int, ...]] = []
    for v in range(n):
        a, b = riser[v]
        cyc = []
        for u in (neighbor(a, v, +1), neighbor(b, v, -1),
                  neighbor(a, v, -1), neighbor(b, v, +1)):
            if u is not None:
                cyc.append(edge_id[(min(u, v), max(u, v))])
        order.append(tuple(cyc))
    rotation = RotationSystem(n, graph.edges, tuple(order))

    membership: list[tuple[int, int, int, int]] = []
    for v in range(n):
        a, b = sorted(riser[v])
        membership.append((a, index_on[a][v], b, index_on[b][v]))

    final = [wire_at[t] for t in range(l, 0, -1)]   # top-to-bottom after sweep
    east = [(w, 1) for w in reversed(final)]        # bottom track first, ccw
    west = [(d.initial_tracks[l - 1 - j], 0) for j in range(l)]
    ends = east + west
    start = ends.index(min(ends))
    infinity_order = tuple(ends[start:] + ends[:start])

    structure = ArrangementStructure(
        graph=graph, l=l, rotation=rotation,
        pseudolines=tuple(Pseudoline(w, tuple(seq[w])) for w in range(l)),
        vertex_membership=tuple(membership), infinity_order=infinity_order)
    structure.check_invariants()
    return graph, structure
