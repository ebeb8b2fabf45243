"""Compare the compiled and pure planarity kernels on solver-shaped work.

Run:  python3 benchmarks/bench_planarity.py
"""

from __future__ import annotations

import time

from suncross.exact import noncrossing_candidate_pairs
from suncross.graph import make_complete, sunlet_star
from suncross.planarity import _lr_pure

try:
    from suncross.planarity import _lr_cython
except ImportError:
    _lr_cython = None


def bench_plain(mod, n, eu, ev, repeats):
    t0 = time.perf_counter()
    for _ in range(repeats):
        mod.is_planar_index(n, eu, ev)
    return (time.perf_counter() - t0) / repeats


def bench_planarized(mod, n, eu, ev, pair_sets, repeats):
    t0 = time.perf_counter()
    for _ in range(repeats):
        for pairs in pair_sets:
            mod.is_planar_planarized_index(n, eu, ev, pairs)
    return (time.perf_counter() - t0) / (repeats * len(pair_sets))


def main():
    kernels = [("pure", _lr_pure)]
    if _lr_cython is not None:
        kernels.append(("cython", _lr_cython))

    cases = [
        ("K6", make_complete(6), 2000),
        ("sunlet_star(3,2)", sunlet_star(3, 2), 1000),
        ("sunlet_star(5,4)", sunlet_star(5, 4), 300),
        ("sunlet_star(8,6)", sunlet_star(8, 6), 100),
    ]
    print(f"{'graph':>18} {'V':>4} {'E':>4}", end="")
    for name, _ in kernels:
        print(f" {name + ' us':>10}", end="")
    if len(kernels) == 2:
        print(f" {'speedup':>8}", end="")
    print()
    for label, g, repeats in cases:
        eu, ev = g.index_arrays()
        times = [bench_plain(mod, g.vertex_count, eu, ev, repeats)
                 for _, mod in kernels]
        print(f"{label:>18} {g.vertex_count:>4} {g.edge_count:>4}", end="")
        for t in times:
            print(f" {t * 1e6:>10.1f}", end="")
        if len(times) == 2:
            print(f" {times[0] / times[1]:>7.1f}x", end="")
        print()

    g = sunlet_star(3, 2)
    eu, ev = g.index_arrays()
    pairs = noncrossing_candidate_pairs(g)
    pair_sets = [[pairs[i], pairs[i + 7], pairs[i + 19]]
                 for i in range(0, 300, 3)]
    print("\nplanarized decisions on sunlet_star(3,2), 3 crossings each:")
    times = []
    for name, mod in kernels:
        t = bench_planarized(mod, g.vertex_count, eu, ev, pair_sets, 30)
        times.append(t)
        print(f"  {name:>7}: {t * 1e6:8.1f} us/call")
    if len(times) == 2:
        print(f"  speedup: {times[0] / times[1]:.1f}x")


if __name__ == "__main__":
    main()
