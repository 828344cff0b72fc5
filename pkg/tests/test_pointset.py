import math

import pytest

from arrangeline.recognize import recognize
from arrangeline.generate import random_lines
from arrangeline.griddraw import GridDrawing, draw
from arrangeline.oracles import straightline_planar
from arrangeline.pointset import (
    NoMatchError,
    WidthExceededError,
    embed_on,
    match_rows,
    row_fill_counts,
    sawtooth,
    sawtooth_prefix_sum,
    universal_points,
)
from arrangeline.wiring import default_wiring

# first fifteen terms, frozen by direct evaluation of i ^ (i-1)
FIRST_15 = (1, 3, 1, 7, 1, 3, 1, 15, 1, 3, 1, 7, 1, 3, 1)


def test_sawtooth_first_terms():
    assert tuple(sawtooth(i) for i in range(1, 16)) == FIRST_15
    assert sawtooth(1) == 1
    assert sawtooth(4) == 7
    assert sawtooth(8) == 15


def test_sawtooth_closed_form():
    # term i equals 2^(1 + v2(i)) - 1 where v2 is the 2-adic valuation
    for i in range(1, 200):
        v2 = (i & -i).bit_length() - 1
        assert sawtooth(i) == 2 ** (1 + v2) - 1


def test_sawtooth_guard():
    with pytest.raises(ValueError):
        sawtooth(0)


def test_prefix_sums_frozen():
    assert sawtooth_prefix_sum(1) == 1
    assert sawtooth_prefix_sum(8) == 32       # sum of the listed first 8 terms
    assert sawtooth_prefix_sum(15) == sum(FIRST_15) == 49


@pytest.mark.parametrize("s", [1, 2, 3, 7, 8, 9, 100, 1023, 1024, 5000])
def test_prefix_sum_bounds(s):
    total = sawtooth_prefix_sum(s)
    lg = math.log2(s) if s > 1 else 0.0
    assert s * lg - 2 * s <= total <= s * lg + s


def test_universal_points_l3():
    ups = universal_points(3)
    assert ups.s == 3
    assert ups.row_counts == (3, 9, 3)  # sawtooth (1,3,1) times l, below the cap


def test_universal_points_l5_uncapped():
    ups = universal_points(5, width_cap=10 ** 9)
    assert ups.s == 6
    assert ups.row_counts == (5, 15, 5, 35, 5, 15)
    assert ups.total == 80


def test_universal_points_cap_applies():
    ups = universal_points(9)
    assert all(c <= ups.width_cap for c in ups.row_counts)


def test_universal_points_cap_too_small():
    with pytest.raises(ValueError):
        universal_points(8, width_cap=7)


def test_match_rows_traces():
    assert match_rows((2, 1, 3), 6).rows == (2, 3, 4)
    assert match_rows((1, 1, 1), 3).rows == (1, 2, 3)
    assert match_rows((4,), 4).rows == (4,)


def test_match_rows_monotone_and_capacious():
    m = match_rows((2, 2, 1, 5), 12)
    assert all(a < b for a, b in zip(m.rows, m.rows[1:]))
    assert all(sawtooth(r) >= a for a, r in zip(m.alphas, m.rows))


def test_match_rows_failure():
    with pytest.raises(NoMatchError):
        match_rows((2,), 1)  # row 1 has capacity 1
    with pytest.raises(ValueError):
        match_rows((0,), 3)


def test_demand_sum_bound_on_drawings():
    # per-drawing inequality: sum(ceil(n_i / l)) <= ceil(3(l-1)/2)
    for l, seed in [(4, 1), (7, 2), (11, 3), (14, 4)]:
        s = recognize(random_lines(l, seed).graph)
        dr = draw(s, default_wiring(s))
        alphas = [-(-c // l) for c in row_fill_counts(dr)]
        assert sum(alphas) <= math.ceil(3 * (l - 1) / 2)


@pytest.mark.parametrize("l,seed", [(3, 1), (5, 2), (9, 3), (12, 4)])
def test_embed_on_planar_and_within_point_set(l, seed):
    s = recognize(random_lines(l, seed).graph)
    dr = draw(s, default_wiring(s))
    ups = universal_points(l)
    emb = embed_on(dr, ups)
    assert straightline_planar(emb).ok
    rows_used = sorted({y for _, y in emb.positions.values()})
    assert len(rows_used) == l - 1
    for x, y in emb.positions.values():
        assert x < ups.row_counts[y]  # lands on an actual point of the set


def test_embed_preserves_row_order():
    s = recognize(random_lines(8, 5).graph)
    dr = draw(s, default_wiring(s))
    emb = embed_on(dr, universal_points(8))
    old_rows: dict[int, list[int]] = {}
    new_rows: dict[int, list[int]] = {}
    for v, (x, y) in dr.positions.items():
        old_rows.setdefault(y, []).append(v)
    for y in old_rows:
        old_rows[y].sort(key=lambda v: dr.positions[v][0])
    for v, (x, y) in emb.positions.items():
        new_rows.setdefault(y, []).append(v)
    for y in new_rows:
        new_rows[y].sort(key=lambda v: emb.positions[v][0])
    assert sorted(map(tuple, old_rows.values())) == sorted(map(tuple, new_rows.values()))


def test_embed_width_exceeded():
    wide = GridDrawing({v: (v, 0) for v in range(50)}, 50, 2, ())
    with pytest.raises(WidthExceededError):
        embed_on(wide, universal_points(3, width_cap=9))


def test_embed_wrong_height():
    s = recognize(random_lines(5, 6).graph)
    dr = draw(s, default_wiring(s))
    with pytest.raises(ValueError):
        embed_on(dr, universal_points(7))


def test_point_count_bound():
    for l in range(3, 16):
        ups = universal_points(l)
        s = ups.s
        assert ups.total <= l * (s * math.log2(s) + s)
