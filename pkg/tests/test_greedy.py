import pytest

from arrangeline.model import ArrangementGraph, canonical_face, canonical_face_set, faces_of
from arrangeline.recognize import recognize
from arrangeline.generate import random_lines, random_wiring, graph_of
from arrangeline.greedy import (
    apply_ear,
    next_ear,
    shortest_cycle_through,
    solve,
    start_embedding,
)
from arrangeline.oracles import enumerate_cycles_through, same_face_set

TRIANGLE = ArrangementGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)])


def canonical_faces(g):
    return canonical_face_set(faces_of(recognize(g).rotation))


def test_triangle_no_ears_two_faces():
    res = solve(TRIANGLE)
    assert len(res.ears) == 0
    assert len(res.faces) == 2
    assert same_face_set(res.faces, faces_of(recognize(TRIANGLE).rotation))


def test_four_lines_two_ears_four_faces():
    g = random_lines(4, 1).graph
    res = solve(g)
    assert len(res.ears) == 2          # (l-1)(l-2)/2 - 1
    assert len(res.faces) == 4         # 3 bounded + outer
    assert same_face_set(res.faces, faces_of(recognize(g).rotation))


def test_shortest_cycle_triangle():
    assert canonical_face(shortest_cycle_through(TRIANGLE, 0)) == (0, 1, 2)


@pytest.mark.parametrize("l,seed", [(4, 2), (5, 3), (6, 4)])
def test_shortest_cycles_are_faces_everywhere(l, seed):
    g = random_lines(l, seed).graph
    canon = canonical_faces(g)
    for v in range(g.n):
        assert canonical_face(shortest_cycle_through(g, v)) in canon


@pytest.mark.parametrize("l,seed", [(4, 7), (5, 8)])
def test_shortest_cycle_minimal_by_brute_force(l, seed):
    g = random_lines(l, seed).graph
    for v in range(g.n):
        cycles = enumerate_cycles_through(g, v, g.n)
        best = min(len(c) for c in cycles)
        assert len(shortest_cycle_through(g, v)) == best


def test_non_facial_cycles_are_never_minimal():
    # every non-facial cycle through v admits a strictly shorter cycle
    for l, seed in [(4, 3), (5, 5)]:
        g = random_lines(l, seed).graph
        canon = canonical_faces(g)
        for v in range(g.n):
            cycles = enumerate_cycles_through(g, v, g.n)
            girth_v = min(len(c) for c in cycles)
            for c in cycles:
                if canonical_face(c) not in canon:
                    assert len(c) > girth_v


def test_every_intermediate_state_clean():
    g = random_lines(7, 11).graph
    canon = canonical_faces(g)
    state = start_embedding(g, 0)
    assert canonical_face(tuple(state.boundary)) in canon
    while True:
        step = next_ear(g, state)
        if step is None:
            break
        assert canonical_face(step.face()) in canon
        before = set(state.used_edges)
        apply_ear(state, step)
        # boundary stays a simple cycle; ear edges were all fresh
        assert len(set(state.boundary)) == len(state.boundary)
        new_edges = state.used_edges - before
        assert len(new_edges) == len(step.ear_path) - 1


def test_ears_edge_disjoint():
    g = random_lines(9, 2).graph
    res = solve(g)
    seen = set()
    for e in res.ears:
        for a, b in zip(e.ear_path, e.ear_path[1:]):
            key = (min(a, b), max(a, b))
            assert key not in seen
            seen.add(key)


@pytest.mark.parametrize("l", range(3, 11))
def test_face_sets_match_canonical(l):
    for seed in (1, 2, 3, 4, 5):
        g = random_lines(l, seed).graph
        res = solve(g)
        assert len(res.ears) == (l - 1) * (l - 2) // 2 - 1
        assert same_face_set(res.faces, faces_of(recognize(g).rotation))


def test_solve_rotation_reproduces_faces():
    g = random_lines(8, 6).graph
    res = solve(g)
    assert same_face_set(faces_of(res.rotation), res.faces)


def test_solve_from_any_start():
    g = random_lines(5, 9).graph
    canon = canonical_faces(g)
    for v in range(g.n):
        res = solve(g, start=v)
        assert canonical_face_set(res.faces) == canon


def test_solve_on_wiring_diagram_instances():
    for l, seed in [(5, 1), (7, 3)]:
        g, st = graph_of(random_wiring(l, seed))
        res = solve(g)
        assert same_face_set(res.faces, faces_of(st.rotation))


def test_solve_deterministic():
    g = random_lines(7, 4).graph
    assert solve(g).to_payload() == solve(g).to_payload()


def test_payload_shape():
    g = random_lines(4, 1).graph
    payload = solve(g).to_payload()
    assert set(payload) == {"initialCycle", "ears"}
    for ear in payload["ears"]:
        assert set(ear) == {"u", "v", "P", "S"}
        assert ear["P"][0] == ear["u"] and ear["P"][-1] == ear["v"]
        assert ear["S"][0] == ear["u"] and ear["S"][-1] == ear["v"]


def test_solve_rotation_satisfies_euler():
    g = random_lines(9, 12).graph
    res = solve(g)
    assert len(faces_of(res.rotation)) == g.m - g.n + 2
