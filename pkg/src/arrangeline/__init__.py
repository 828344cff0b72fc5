"""Pseudoline arrangement graphs: recognition, drawing, point sets, solving.

The package recognizes graphs of simple pseudoline arrangements in
near-linear time, draws them planarly on small integer grids via wiring
diagrams, builds universal point sets that host every such drawing, and
solves Planarity-style puzzles with a greedy ear-decomposition that
recovers the arrangement's own embedding.
"""

from .model import (
    ArrangementGraph,
    ArrangementStructure,
    Pseudoline,
    RotationSystem,
    canonical_face,
    canonical_face_set,
    faces_of,
    validate_graph,
)
from .recognize import AugmentedGraph, NotPlanarError, RejectionReason, augment, \
    path_decompose, planar_embed, recognize
from .wiring import (
    InvalidCutError,
    LevelStats,
    OrientedStructure,
    WiringDiagram,
    WiringStuckError,
    build_wiring,
    choose_cut,
    default_wiring,
    level_stats,
    valid_cuts,
)
from .griddraw import GridDrawing, best_cut_diagram, draw, draw_optimized, to_svg
from .pointset import (
    NoMatchError,
    RowMatch,
    UniversalPointSet,
    WidthExceededError,
    embed_on,
    match_rows,
    row_fill_counts,
    sawtooth,
    sawtooth_prefix_sum,
    universal_points,
)
from .greedy import EarSolverError, EarStep, PartialEmbedding, SolveResult, \
    next_ear, shortest_cycle_through, solve, start_embedding
from .generate import (
    GeneratedArrangement,
    GeneratorError,
    LineSet,
    graph_of,
    high_kappa_wiring,
    planarity_level,
    random_lines,
    random_wiring,
    stacked,
)
from .oracles import CrossingReport, crossing_report, enumerate_cycles_through, \
    same_face_set, straightline_planar

__version__ = "0.1.0"

__all__ = [
    "ArrangementGraph", "ArrangementStructure", "Pseudoline", "RotationSystem",
    "canonical_face", "canonical_face_set", "faces_of", "validate_graph",
    "AugmentedGraph", "NotPlanarError", "RejectionReason", "augment",
    "path_decompose", "planar_embed", "recognize",
    "InvalidCutError", "LevelStats", "OrientedStructure", "WiringDiagram",
    "WiringStuckError", "build_wiring", "choose_cut", "default_wiring",
    "level_stats", "valid_cuts",
    "GridDrawing", "best_cut_diagram", "draw", "draw_optimized", "to_svg",
    "NoMatchError", "RowMatch", "UniversalPointSet", "WidthExceededError",
    "embed_on", "match_rows", "row_fill_counts", "sawtooth",
    "sawtooth_prefix_sum", "universal_points",
    "EarSolverError", "EarStep", "PartialEmbedding", "SolveResult",
    "next_ear", "shortest_cycle_through", "solve", "start_embedding",
    "GeneratedArrangement", "GeneratorError", "LineSet", "graph_of",
    "high_kappa_wiring", "planarity_level", "random_lines", "random_wiring", "stacked",
    "CrossingReport", "crossing_report", "enumerate_cycles_through",
    "same_face_set", "straightline_planar",
]
