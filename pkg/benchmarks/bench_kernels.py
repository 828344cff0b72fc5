"""Benchmark the exact-predicate kernels across backends.

Times the straight-line planarity scan on drawings of growing size and
the exhaustive composition scan, under each available backend
(numba / numpy / python).  Run:

    python benchmarks/bench_kernels.py
"""

import os
import time

os.environ.setdefault("ARRANGELINE_KERNEL", "numba")

from arrangeline import _kernels  # noqa: E402
from arrangeline.generate import random_lines  # noqa: E402
from arrangeline.griddraw import draw  # noqa: E402
from arrangeline.oracles import straightline_planar  # noqa: E402
from arrangeline.recognize import recognize  # noqa: E402
from arrangeline.wiring import default_wiring  # noqa: E402


def time_call(fn, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    modes = ["numpy", "python"]
    if _kernels._NUMBA_OK:
        modes.insert(0, "numba")

    drawings = []
    for l in (10, 20, 40, 60):
        s = recognize(random_lines(l, 0).graph)
        drawings.append((l, draw(s, default_wiring(s))))

    print(f"{'scan':<28}", *(f"{m:>12}" for m in modes))
    for l, dr in drawings:
        m = len(dr.edges)
        row = []
        for mode in modes:
            os.environ["ARRANGELINE_KERNEL"] = mode
            if mode == "numba":
                straightline_planar(dr)  # absorb JIT compilation
            t = time_call(lambda: straightline_planar(dr))
            row.append(f"{t * 1e3:>10.2f}ms")
        print(f"{f'planarity scan l={l} (m={m})':<28}", *row)

    for s in (16, 20):
        row = []
        for mode in modes:
            os.environ["ARRANGELINE_KERNEL"] = mode
            if mode == "numpy":
                row.append(f"{'(=python)':>12}")
                continue
            if mode == "numba":
                _kernels.composition_match_scan(4)
            t = time_call(lambda: _kernels.composition_match_scan(s), repeats=1)
            row.append(f"{t * 1e3:>10.2f}ms")
        print(f"{f'composition scan s={s}':<28}", *row)


if __name__ == "__main__":
    main()
