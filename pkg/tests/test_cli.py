import json
import subprocess
import sys

import pytest

TRIANGLE_JSON = '{"n": 3, "edges": [[0, 1], [1, 2], [0, 2]]}'
K5_JSON = json.dumps({"n": 5, "edges": [[u, v] for u in range(5) for v in range(u + 1, 5)]})


def run_cli(args, stdin=None):
    return subprocess.run([sys.executable, "-m", "arrangeline.cli", *args],
                          input=stdin, capture_output=True, text=True, timeout=120)


def test_recognize_triangle_exit_zero():
    r = run_cli(["recognize"], stdin=TRIANGLE_JSON)
    assert r.returncode == 0, r.stderr
    obj = json.loads(r.stdout)
    assert obj["l"] == 3


def test_recognize_k5_exit_one_not_planar():
    r = run_cli(["recognize"], stdin=K5_JSON)
    assert r.returncode == 1
    obj = json.loads(r.stdout)
    assert obj["rejection"]["code"] == "NOT_PLANAR"


def test_usage_error_exit_two():
    r = run_cli(["generate", "--seed", "1"])
    assert r.returncode == 2
    r = run_cli(["recognize"], stdin="not json")
    assert r.returncode == 2


def test_generate_then_recognize_pipe():
    gen = run_cli(["generate", "--lines", "5", "--seed", "3"])
    assert gen.returncode == 0
    graph = json.dumps(json.loads(gen.stdout)["graph"])
    rec = run_cli(["recognize"], stdin=graph)
    assert rec.returncode == 0
    assert json.loads(rec.stdout)["l"] == 5


def test_generate_level_sizes():
    out = json.loads(run_cli(["generate", "--level", "1", "--seed", "7"]).stdout)
    assert out["graph"]["n"] == 6 and len(out["graph"]["edges"]) == 8


def test_draw_svg_element_counts():
    gen = run_cli(["generate", "--lines", "7", "--seed", "2"])
    graph = json.dumps(json.loads(gen.stdout)["graph"])
    r = run_cli(["draw", "--optimize-cuts", "--svg"], stdin=graph)
    assert r.returncode == 0
    assert r.stdout.count("<circle") == 21
    assert r.stdout.count("<line") == 35


def test_draw_json_dimensions():
    gen = run_cli(["generate", "--lines", "6", "--seed", "4"])
    graph = json.dumps(json.loads(gen.stdout)["graph"])
    out = json.loads(run_cli(["draw"], stdin=graph).stdout)
    assert out["height"] == 5
    assert len(out["positions"]) == 15


def test_draw_rejects_non_arrangement():
    r = run_cli(["draw"], stdin=K5_JSON)
    assert r.returncode == 1


def test_upset_json():
    out = json.loads(run_cli(["upset", "--l", "3"]).stdout)
    assert out["rows"] == [3, 9, 3]
    out = json.loads(run_cli(["upset", "--l", "5", "--cap", "1000000000"]).stdout)
    assert out["total"] == 80


def test_upset_svg():
    r = run_cli(["upset", "--l", "3", "--svg"])
    assert r.stdout.count("<circle") == 15


def test_solve_greedy_payload():
    gen = run_cli(["generate", "--lines", "5", "--seed", "1"])
    graph = json.dumps(json.loads(gen.stdout)["graph"])
    out = json.loads(run_cli(["solve-greedy"], stdin=graph).stdout)
    assert len(out["ears"]) == 4 * 3 // 2 - 1
    assert out["initialCycle"]


def test_stats_payload():
    gen = run_cli(["generate", "--lines", "8", "--seed", "5"])
    graph = json.dumps(json.loads(gen.stdout)["graph"])
    out = json.loads(run_cli(["stats"], stdin=graph).stdout)
    assert out["l"] == 8 and out["height"] == 7
    assert out["width"] == out["kappa"] == max(out["levels"])
    assert sum(out["levels"]) == out["n"]


def test_verify_good_and_bad(tmp_path):
    gen = run_cli(["generate", "--lines", "5", "--seed", "6"])
    graph = json.dumps(json.loads(gen.stdout)["graph"])
    drawing = json.loads(run_cli(["draw"], stdin=graph).stdout)
    good = tmp_path / "good.json"
    good.write_text(json.dumps(drawing))
    assert run_cli(["verify", "--drawing", str(good)]).returncode == 0

    drawing["positions"]["0"] = drawing["positions"]["1"]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(drawing))
    r = run_cli(["verify", "--drawing", str(bad)])
    assert r.returncode == 1
    assert not json.loads(r.stdout)["ok"]


@pytest.mark.parametrize("args", [
    ["generate", "--lines", "6", "--seed", "11"],
    ["generate", "--level", "2", "--seed", "5"],
    ["upset", "--l", "7"],
])
def test_byte_determinism(args):
    assert run_cli(args).stdout == run_cli(args).stdout
