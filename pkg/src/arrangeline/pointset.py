"""Universal point sets for arrangement graphs.

The capacity sequence 1, 3, 1, 7, 1, 3, 1, 15, ... (term i is
``i XOR (i-1)``, a sawtooth whose peaks double along the binary carries)
has the property that any sequence of positive integers summing to s can
be matched, in order, against larger-or-equal terms among the first s.
Using it to size the rows of a grid gives a point set of O(n log n)
points that hosts a planar straight-line drawing of every arrangement
graph of the target size: each drawing row has at most kappa vertices,
drawing rows are matched greedily to capacious point-set rows, and the
row-monotone remap preserves planarity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .griddraw import GridDrawing


class NoMatchError(RuntimeError):
    """Greedy row matching ran out of point-set rows."""


class WidthExceededError(RuntimeError):
    """A drawing row holds more vertices than any point-set row can."""


def sawtooth(i: int) -> int:
    """Term i of the capacity sequence: i XOR (i-1)."""
    if i < 1:
        raise ValueError("terms start at i=1")
    return i ^ (i - 1)


def sawtooth_prefix_sum(s: int) -> int:
    """Exact sum of the first s terms; lies within [s*log2(s) - 2s, s*log2(s) + s]."""
    if s < 1:
        raise ValueError("s must be >= 1")
    return sum(i ^ (i - 1) for i in range(1, s + 1))


@dataclass(frozen=True)
class UniversalPointSet:
    """Rows of a grid, row i holding its ``row_counts[i-1]`` leftmost points."""

    l: int
    s: int
    width_cap: int
    row_counts: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.row_counts)

    def to_payload(self) -> dict:
        return {"l": self.l, "s": self.s, "widthCap": self.width_cap,
                "rows": list(self.row_counts), "total": self.total}


def default_width_cap(l: int) -> int:
    """Stand-in for the (unknown) maximum level complexity: ceil(2 * l^(4/3))."""
    return math.ceil(2 * l ** (4 / 3))


def universal_points(l: int, width_cap: int | None = None) -> UniversalPointSet:
    """Point set hosting every arrangement drawing on l pseudolines.

    Uses s = ceil(3(l-1)/2) rows; row i holds min(l * sawtooth(i),
    width_cap) points.  The cap is configurable because the true maximum
    level complexity is unknown; a cap below l can host no drawing.
    """
    if l < 3:
        raise ValueError("need l >= 3")
    cap = default_width_cap(l) if width_cap is None else width_cap
    if cap < l:
        raise ValueError(f"width cap {cap} < l = {l}: no drawing fits")
    s = math.ceil(3 * (l - 1) / 2)
    rows = tuple(min(l * sawtooth(i), cap) for i in range(1, s + 1))
    return UniversalPointSet(l, s, cap, rows)


@dataclass(frozen=True)
class RowMatch:
    alphas: tuple[int, ...]
    rows: tuple[int, ...]      # 1-based, strictly increasing


def match_rows(alphas: Sequence[int], s: int) -> RowMatch:
    """Greedy leftmost matching of demands into the first s capacity terms.

    Scans rows 1..s once, assigning the next unmatched demand to the first
    row whose term is large enough.  Succeeds whenever sum(alphas) <= s.
    """
    if any(a < 1 for a in alphas):
        raise ValueError("demands must be positive")
    rows: list[int] = []
    r = 0
    for a in alphas:
        r += 1
        while r <= s and (r ^ (r - 1)) < a:
            r += 1
        if r > s:
            raise NoMatchError(
                f"demand {a} (index {len(rows)}) found no row among 1..{s}")
        rows.append(r)
    return RowMatch(tuple(alphas), tuple(rows))


def row_fill_counts(drawing: GridDrawing) -> list[int]:
    """Vertices per drawing row, bottom to top."""
    counts = [0] * drawing.height
    for _, y in drawing.positions.values():
        counts[y] += 1
    return counts


def embed_on(drawing: GridDrawing, ups: UniversalPointSet) -> GridDrawing:
    """Re-home a drawing onto the point set, row-monotonically.

    Drawing row i goes to point-set row r_i (greedy match on the demands
    ceil(n_i / l)), keeping the within-row x-order and packing vertices
    into the leftmost columns.  The result uses only points of ``ups``.
    """
    if drawing.height != ups.l - 1:
        raise ValueError(
            f"drawing has {drawing.height} rows; point set targets {ups.l - 1}")
    counts = row_fill_counts(drawing)
    if max(counts) > ups.width_cap:
        raise WidthExceededError(
            f"a drawing row holds {max(counts)} vertices, cap is {ups.width_cap}")
    alphas = [-(-c // ups.l) for c in counts]
    matched = match_rows(alphas, ups.s)

    by_row: list[list[tuple[int, int]]] = [[] for _ in range(drawing.height)]
    for v, (x, y) in drawing.positions.items():
        by_row[y].append((x, v))
    positions: dict[int, tuple[int, int]] = {}
    for i, row in enumerate(by_row):
        row.sort()
        target = matched.rows[i] - 1
        for col, (_, v) in enumerate(row):
            positions[v] = (col, target)
    width = max(counts)
    height = matched.rows[-1]
    return GridDrawing(positions, width, height, drawing.edges)
