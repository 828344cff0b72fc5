
import pytest

from arrangeline import _kernels
from arrangeline.model import ArrangementGraph
from arrangeline.griddraw import GridDrawing
from arrangeline.oracles import (
    crossing_report,
    enumerate_cycles_through,
    same_face_set,
    straightline_planar,
)

TRIANGLE = ArrangementGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)])


def test_proper_crossing_detected():
    rep = crossing_report({0: (0, 0), 1: (2, 2), 2: (0, 2), 3: (2, 0)},
                          [(0, 1), (2, 3)])
    assert rep.edge_pair_count == 1 and rep.edge_pairs == ((0, 1),)


def test_collinear_overlap_detected():
    rep = crossing_report({0: (0, 0), 1: (2, 0), 2: (1, 0), 3: (3, 0)},
                          [(0, 1), (2, 3)])
    assert rep.edge_pair_count == 1


def test_collinear_disjoint_allowed():
    rep = crossing_report({0: (0, 0), 1: (1, 0), 2: (2, 0), 3: (3, 0)},
                          [(0, 1), (2, 3)])
    assert rep.ok


def test_shared_endpoint_allowed():
    rep = crossing_report({0: (0, 0), 1: (2, 0), 2: (1, 2)}, [(0, 1), (0, 2)])
    assert rep.ok


def test_shared_endpoint_forward_overlap_detected():
    rep = crossing_report({0: (0, 0), 1: (2, 0), 2: (4, 0)}, [(0, 1), (0, 2)])
    assert rep.edge_pair_count == 1


def test_touching_endpoint_detected():
    # endpoint of one edge in the interior of a non-adjacent edge
    rep = crossing_report({0: (0, 0), 1: (4, 0), 2: (2, 0), 3: (2, 3)},
                          [(0, 1), (2, 3)])
    assert rep.edge_pair_count == 1


def test_vertex_on_edge_interior():
    rep = crossing_report({0: (0, 0), 1: (4, 0), 2: (2, 0)}, [(0, 1)])
    assert rep.vertex_hit_count == 1 and rep.vertex_hits == ((2, 0),)


def test_vertex_at_own_edge_endpoint_ignored():
    rep = crossing_report({0: (0, 0), 1: (4, 0)}, [(0, 1)])
    assert rep.ok


def test_triangle_drawing_clean():
    dr = GridDrawing({0: (0, 0), 1: (1, 0), 2: (0, 1)}, 2, 2, TRIANGLE.edges)
    assert straightline_planar(dr).ok


def test_duplicate_positions_flagged():
    rep = crossing_report({0: (0, 0), 1: (2, 0), 2: (2, 0), 3: (4, 0)},
                          [(0, 1), (2, 3)])
    assert not rep.ok


@pytest.mark.parametrize("mode", ["numba", "numpy", "python"])
def test_backend_parity(mode, monkeypatch):
    if mode == "numba" and not _kernels._NUMBA_OK:
        pytest.skip("numba not importable")
    monkeypatch.setenv("ARRANGELINE_KERNEL", mode)
    import random
    rnd = random.Random(4)
    pts = {v: (rnd.randrange(0, 50), rnd.randrange(0, 50)) for v in range(30)}
    edges = [(rnd.randrange(30), rnd.randrange(30)) for _ in range(60)]
    edges = [(u, v) for u, v in edges if u != v]
    rep = crossing_report(pts, edges)
    monkeypatch.delenv("ARRANGELINE_KERNEL")
    base = crossing_report(pts, edges)
    assert rep.edge_pair_count == base.edge_pair_count
    assert rep.vertex_hit_count == base.vertex_hit_count


def test_huge_coordinates_take_exact_path():
    big = 1 << 40  # beyond the int64-safe window; widens to python ints
    rep = crossing_report({0: (0, 0), 1: (2 * big, 2 * big),
                           2: (0, 2 * big), 3: (2 * big, 0)},
                          [(0, 1), (2, 3)])
    assert rep.edge_pair_count == 1
    rep2 = crossing_report({0: (0, 0), 1: (big, 1), 2: (0, 1), 3: (big, 0)},
                           [(0, 1), (2, 3)])
    assert rep2.edge_pair_count == 1  # near-parallel sliver needs exactness


def test_same_face_set():
    a = [(0, 1, 2), (0, 2, 3)]
    assert same_face_set(a, a)
    assert same_face_set(a, [tuple(reversed(f)) for f in a])
    assert not same_face_set(a, [(0, 1, 2, 3)])


def test_enumerate_cycles_triangle():
    assert enumerate_cycles_through(TRIANGLE, 0, 3) == [(0, 1, 2)]
    assert enumerate_cycles_through(TRIANGLE, 0, 2) == []


def test_enumerate_cycles_guard():
    big = ArrangementGraph.from_edges(16, [(i, i + 1) for i in range(15)])
    with pytest.raises(ValueError):
        enumerate_cycles_through(big, 0, 4)


def test_enumerate_cycles_no_duplicates():
    k4 = ArrangementGraph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    cycles = enumerate_cycles_through(k4, 0, 4)
    assert len(cycles) == len(set(cycles))
    assert sorted(len(c) for c in cycles) == [3, 3, 3, 4, 4, 4]


@pytest.mark.parametrize("s", range(1, 13))
def test_composition_scan_counts(s):
    total, failures = _kernels.composition_match_scan(s)
    assert total == 2 ** (s - 1)
    assert failures == 0


def test_composition_scan_backends_agree(monkeypatch):
    monkeypatch.setenv("ARRANGELINE_KERNEL", "python")
    py = _kernels.composition_match_scan(10)
    monkeypatch.delenv("ARRANGELINE_KERNEL")
    assert py == _kernels.composition_match_scan(10)


def test_kernel_mode_env(monkeypatch):
    monkeypatch.setenv("ARRANGELINE_KERNEL", "numpy")
    assert _kernels.kernel_mode() == "numpy"
    monkeypatch.setenv("ARRANGELINE_KERNEL", "python")
    assert _kernels.kernel_mode() == "python"
