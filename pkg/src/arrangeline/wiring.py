"""Wiring diagrams: sweep-equivalent normal form of an arrangement.

A wiring diagram places the l pseudolines on l horizontal tracks
(track 1 at the bottom) and realizes each crossing as a swap of two
adjacent tracks.  Level i collects the crossings between tracks i and
i+1; the level complexity kappa is the largest level size and becomes the
width of the straight-line grid drawing.

Instead of a topological sweep, :func:`build_wiring` runs an
output-equivalent simulation: keep the current track permutation, keep a
set of *ready* crossings (next on both of their pseudolines and currently
on adjacent tracks), and repeatedly emit one.  Any emission order yields
the same levels once the cut (the choice of bottom face) is fixed.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Callable

from .model import ArrangementStructure


class InvalidCutError(ValueError):
    """The requested cut window does not hit every pseudoline once."""


class WiringStuckError(RuntimeError):
    """No ready crossing although crossings remain: invalid structure."""


@dataclass(frozen=True)
class WiringDiagram:
    l: int
    initial_tracks: tuple[int, ...]              # [t-1] = pseudoline on track t
    crossings: tuple[tuple[int, int], ...]       # (vertex id, level in 1..l-1)
    cut_index: int = -1                          # -1: not derived from a cut

    @property
    def n(self) -> int:
        return len(self.crossings)

    def to_payload(self) -> dict:
        return {"l": self.l, "initial": list(self.initial_tracks),
                "crossings": [[v, lev] for v, lev in self.crossings]}


@dataclass(frozen=True)
class LevelStats:
    sizes: tuple[int, ...]
    kappa: int


@dataclass(frozen=True)
class OrientedStructure:
    """A structure with a chosen sweep cut.

    ``initial_tracks[t-1]`` is the pseudoline starting on track t;
    ``reversed_line[p]`` says whether pseudoline p is swept from the far
    end of its stored crossing order.
    """

    structure: ArrangementStructure
    cut: int
    initial_tracks: tuple[int, ...]
    reversed_line: tuple[bool, ...]

    def oriented_crossings(self, line: int) -> tuple[int, ...]:
        seq = self.structure.pseudolines[line].crossings
        return tuple(reversed(seq)) if self.reversed_line[line] else seq


def choose_cut(structure: ArrangementStructure, cut: int) -> OrientedStructure:
    """Orient the structure for a sweep starting at the given cut.

    The 2l path ends sit in a circular order around infinity; the window
    of l consecutive ends starting at ``cut`` must contain every
    pseudoline exactly once (else :class:`InvalidCutError`).  Window
    position j is assigned initial track l - j, and each pseudoline is
    swept from its in-window end.
    """
    l = structure.l
    if not 0 <= cut < 2 * l:
        raise InvalidCutError(f"cut {cut} outside 0..{2 * l - 1}")
    ends = structure.infinity_order
    window = [ends[(cut + j) % (2 * l)] for j in range(l)]
    seen = {line for line, _ in window}
    if len(seen) != l:
        dup = next(line for k, (line, _) in enumerate(window)
                   if any(w[0] == line for w in window[:k]))
        raise InvalidCutError(f"cut {cut}: window repeats pseudoline {dup}")
    initial = [0] * l
    reversed_line = [False] * l
    for j, (line, end) in enumerate(window):
        initial[l - j - 1] = line
        reversed_line[line] = (end == 1)
    return OrientedStructure(structure, cut, tuple(initial), tuple(reversed_line))


def valid_cuts(structure: ArrangementStructure) -> list[int]:
    cuts = []
    for c in range(2 * structure.l):
        try:
            choose_cut(structure, c)
        except InvalidCutError:
            continue
        cuts.append(c)
    return cuts


def build_wiring(oriented: OrientedStructure,
                 pick_ready: Callable[[list[int]], int] | None = None) -> WiringDiagram:
    """Simulate the sweep and emit all crossings.

    ``pick_ready`` chooses among the ready levels (sorted ascending);
    the default takes the smallest track index.  Any choice rule emits
    the same multiset of (vertex, level) pairs.
    """
    st = oriented.structure
    l = st.l
    n = st.graph.n
    seqs = [oriented.oriented_crossings(p) for p in range(l)]
    pos = [0] * l
    wire_at = [-1] + list(oriented.initial_tracks)   # 1-based tracks
    lines_of = {}
    for v, (a, _, b, _) in enumerate(st.vertex_membership):
        lines_of[v] = (a, b)

    def ready(gap: int) -> bool:
        a, b = wire_at[gap], wire_at[gap + 1]
        if pos[a] >= len(seqs[a]) or pos[b] >= len(seqs[b]):
            return False
        return seqs[a][pos[a]] == seqs[b][pos[b]]

    heap = [gap for gap in range(1, l) if ready(gap)]
    heapq.heapify(heap)
    in_heap = set(heap)
    out: list[tuple[int, int]] = []
    while len(out) < n:
        if pick_ready is None:
            gap = -1
            while heap:
                cand = heapq.heappop(heap)
                in_heap.discard(cand)
                if ready(cand):
                    gap = cand
                    break
            if gap < 0:
                raise WiringStuckError(
                    f"no ready crossing after {len(out)} of {n} emissions")
        else:
            ready_list = sorted(g for g in range(1, l) if ready(g))
            if not ready_list:
                raise WiringStuckError(
                    f"no ready crossing after {len(out)} of {n} emissions")
            gap = pick_ready(ready_list)
        a, b = wire_at[gap], wire_at[gap + 1]
        v = seqs[a][pos[a]]
        out.append((v, gap))
        wire_at[gap], wire_at[gap + 1] = b, a
        pos[a] += 1
        pos[b] += 1
        if pick_ready is None:
            for g in (gap - 1, gap, gap + 1):
                if 1 <= g < l and g not in in_heap and ready(g):
                    heapq.heappush(heap, g)
                    in_heap.add(g)

    assert wire_at[1:] == list(reversed(oriented.initial_tracks)), \
        "completed sweep must reverse the initial permutation"
    return WiringDiagram(l, oriented.initial_tracks, tuple(out), oriented.cut)


def default_wiring(structure: ArrangementStructure) -> WiringDiagram:
    """Diagram for the smallest valid cut."""
    for c in range(2 * structure.l):
        try:
            oriented = choose_cut(structure, c)
        except InvalidCutError:
            continue
        return build_wiring(oriented)
    raise InvalidCutError("no valid cut exists")


def level_stats(d: WiringDiagram) -> LevelStats:
    sizes = [0] * (d.l - 1)
    for _, lev in d.crossings:
        sizes[lev - 1] += 1
    return LevelStats(tuple(sizes), max(sizes) if sizes else 0)


def replay(d: WiringDiagram) -> list[tuple[int, int]]:
    """Re-run a diagram, returning the pseudoline pair swapped at each
    crossing.  Raises ValueError if any level index is out of range."""
    wire_at = [-1] + list(d.initial_tracks)
    pairs = []
    for v, lev in d.crossings:
        if not 1 <= lev < d.l:
            raise ValueError(f"crossing {v} at invalid level {lev}")
        a, b = wire_at[lev], wire_at[lev + 1]
        pairs.append((min(a, b), max(a, b)))
        wire_at[lev], wire_at[lev + 1] = b, a
    return pairs
