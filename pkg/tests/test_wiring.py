import numpy as np
import pytest

from arrangeline.model import ArrangementGraph
from arrangeline.recognize import recognize
from arrangeline.generate import random_lines, random_wiring, graph_of
from arrangeline.wiring import (
    InvalidCutError,
    WiringDiagram,
    build_wiring,
    choose_cut,
    default_wiring,
    level_stats,
    replay,
    valid_cuts,
)

TRIANGLE = ArrangementGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)])


def test_two_wire_diagram():
    d = random_wiring(2, 0)
    assert d.crossings == ((0, 1),)
    assert level_stats(d) == level_stats(d)
    assert level_stats(d).sizes == (1,)
    assert level_stats(d).kappa == 1


def test_triangle_levels_both_cuts():
    s = recognize(TRIANGLE)
    seen = set()
    for c in valid_cuts(s):
        d = build_wiring(choose_cut(s, c))
        seen.add(tuple(lev for _, lev in d.crossings))
    assert seen <= {(1, 2, 1), (2, 1, 2)}
    assert len(seen) == 2  # both orientations occur over the six cuts


def test_level_stats_example():
    d = WiringDiagram(3, (0, 1, 2), ((0, 1), (1, 2), (2, 1)))
    st = level_stats(d)
    assert st.sizes == (2, 1)
    assert st.kappa == 2


def test_sizes_sum_to_n():
    s = recognize(random_lines(9, 4).graph)
    st = level_stats(default_wiring(s))
    assert sum(st.sizes) == s.graph.n
    assert st.kappa == max(st.sizes)


@pytest.mark.parametrize("l,seed", [(3, 0), (5, 1), (8, 2)])
def test_pair_swap_uniqueness_and_reversal(l, seed):
    d = random_wiring(l, seed)
    pairs = replay(d)
    assert len(pairs) == l * (l - 1) // 2
    assert len(set(pairs)) == len(pairs)  # every pair swaps exactly once


def test_all_cuts_valid_on_recognized_structures():
    for l, seed in [(4, 1), (7, 2), (10, 3)]:
        s = recognize(random_lines(l, seed).graph)
        assert len(valid_cuts(s)) == 2 * l  # >= l required; all hold here


def test_invalid_cut_detected():
    s = recognize(TRIANGLE)
    broken = type(s)(graph=s.graph, l=s.l, rotation=s.rotation,
                     pseudolines=s.pseudolines,
                     vertex_membership=s.vertex_membership,
                     infinity_order=((0, 0), (0, 1), (1, 0), (1, 1), (2, 0), (2, 1)))
    with pytest.raises(InvalidCutError):
        choose_cut(broken, 0)
    with pytest.raises(InvalidCutError):
        choose_cut(s, 99)


def test_crossing_order_follows_pseudolines():
    s = recognize(random_lines(7, 6).graph)
    oriented = choose_cut(s, 0)
    d = build_wiring(oriented)
    order_in_diagram: dict[int, list[int]] = {p: [] for p in range(s.l)}
    lines_of = {v: (a, b) for v, (a, _, b, _) in enumerate(s.vertex_membership)}
    for v, _ in d.crossings:
        a, b = lines_of[v]
        order_in_diagram[a].append(v)
        order_in_diagram[b].append(v)
    for p in range(s.l):
        assert tuple(order_in_diagram[p]) == oriented.oriented_crossings(p)


def test_levels_independent_of_tie_breaking():
    s = recognize(random_lines(8, 7).graph)
    oriented = choose_cut(s, 2)
    base = dict(build_wiring(oriented).crossings)
    rng = np.random.default_rng(5)
    for _ in range(10):
        d = build_wiring(oriented, pick_ready=lambda r: r[rng.integers(0, len(r))])
        assert dict(d.crossings) == base


def test_final_tracks_reverse_initial():
    d = random_wiring(6, 11)
    wire_at = list(d.initial_tracks)
    for _, lev in d.crossings:
        wire_at[lev - 1], wire_at[lev] = wire_at[lev], wire_at[lev - 1]
    assert wire_at == list(reversed(d.initial_tracks))


def test_graph_of_structures_sweepable_from_every_cut():
    for l, seed in [(4, 4), (6, 1), (8, 9)]:
        _, st = graph_of(random_wiring(l, seed))
        cuts = valid_cuts(st)
        assert len(cuts) == 2 * l
        for c in cuts:
            assert len(build_wiring(choose_cut(st, c)).crossings) == st.graph.n


def test_diagram_payload():
    d = random_wiring(3, 2)
    payload = d.to_payload()
    assert payload["l"] == 3
    assert len(payload["crossings"]) == 3
    assert sorted(payload["initial"]) == [0, 1, 2]
