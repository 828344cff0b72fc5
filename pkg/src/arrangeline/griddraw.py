"""Straight-line grid drawings of arrangement graphs.

A wiring diagram sorts the crossings into l-1 levels; placing the k-th
crossing of level j at column k-1 of row j-1 yields a planar straight-line
drawing of width kappa (the largest level) and height l-1.  Every edge
then joins either two x-consecutive vertices of one row or endpoints on
adjacent rows whose left-to-right orders agree, which is why nothing can
cross.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .model import ArrangementStructure
from .wiring import WiringDiagram, build_wiring, choose_cut, level_stats, valid_cuts


@dataclass(frozen=True)
class GridDrawing:
    positions: dict[int, tuple[int, int]] = field(compare=False)
    width: int = 0
    height: int = 0
    edges: tuple[tuple[int, int], ...] = ()

    def to_payload(self) -> dict:
        return {"width": self.width, "height": self.height,
                "positions": {str(v): list(self.positions[v]) for v in sorted(self.positions)}}


def draw(structure: ArrangementStructure, diagram: WiringDiagram) -> GridDrawing:
    """Place each crossing by (rank within its level, level)."""
    stats = level_stats(diagram)
    seen_in_level = [0] * (diagram.l - 1)
    positions: dict[int, tuple[int, int]] = {}
    for v, lev in diagram.crossings:
        positions[v] = (seen_in_level[lev - 1], lev - 1)
        seen_in_level[lev - 1] += 1
    return GridDrawing(positions, stats.kappa, diagram.l - 1, structure.graph.edges)


def best_cut_diagram(structure: ArrangementStructure) -> WiringDiagram:
    """Minimum-width diagram over all valid cuts (ties: smallest cut)."""
    best: WiringDiagram | None = None
    best_kappa = -1
    for c in valid_cuts(structure):
        d = build_wiring(choose_cut(structure, c))
        k = level_stats(d).kappa
        if best is None or k < best_kappa:
            best, best_kappa = d, k
    if best is None:
        raise ValueError("structure admits no valid cut")
    return best


def draw_optimized(structure: ArrangementStructure) -> GridDrawing:
    """Drawing from the cut whose diagram minimizes the width."""
    return draw(structure, best_cut_diagram(structure))


def to_svg(drawing: GridDrawing, scale: int = 40, hstretch: int = 1) -> str:
    """Render as SVG: one circle per vertex, one segment per edge.

    Row 0 is drawn at the bottom (matching wiring-diagram orientation);
    a half-cell margin surrounds the content, so the canvas measures
    width*scale by height*scale.
    """
    if scale < 1:
        raise ValueError("scale must be >= 1")
    w_px = drawing.width * scale * hstretch
    h_px = drawing.height * scale

    def px(v: int) -> tuple[float, float]:
        x, y = drawing.positions[v]
        return (scale * hstretch * (x + 0.5), scale * (drawing.height - 1 - y + 0.5))

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {w_px} {h_px}" '
        f'width="{w_px}" height="{h_px}">'
    ]
    for u, v in drawing.edges:
        (x1, y1), (x2, y2) = px(u), px(v)
        parts.append(f'<line x1="{x1:g}" y1="{y1:g}" x2="{x2:g}" y2="{y2:g}" '
                     f'stroke="black" stroke-width="{scale / 20:g}"/>')
    r = scale / 8
    for v in sorted(drawing.positions):
        x, y = px(v)
        parts.append(f'<circle cx="{x:g}" cy="{y:g}" r="{r:g}" fill="steelblue"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
