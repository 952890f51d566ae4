"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import random
import timeit

from jetample import bundled, kernels


def rank_workload(rng: random.Random) -> list[list[list[int]]]:
    """Truncated monomial matrices of the kind the colength routine builds."""
    from jetample import cluster

    captured: list[list[list[int]]] = []
    original = kernels.integer_rank

    def spy(rows, backend=None):
        captured.append([list(r) for r in rows])
        return original(rows, backend)

    cluster.kernels.integer_rank = spy
    try:
        pairs = bundled.germ_pairs()
        for f, g, _ in rng.sample(pairs, 12):
            cluster.codimension_profile(cluster.germ(f), cluster.germ(g), 14)
    finally:
        cluster.kernels.integer_rank = original
    return captured


def scan_workload() -> tuple:
    gram = [[-2, 1, 0], [1, -2, 1], [0, 1, 0]]
    lc = [1, 2, 3]
    bounds = [30, 30, 30]
    constraints = [(9, -1, 0, 0, False), (0, 1, -2, 0, True)]
    return gram, lc, bounds, constraints


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    found = kernels.backends()
    if "cython" not in found:
        print("compiled kernels are not built; only the fallback is available")
    mats = rank_workload(random.Random(0))
    scan = scan_workload()
    results = {}
    for name in found:
        t_rank = min(timeit.repeat(lambda: [kernels.integer_rank(m, name) for m in mats], number=1, repeat=args.repeat))
        t_scan = min(timeit.repeat(lambda: kernels.scan_box(*scan, backend=name), number=1, repeat=args.repeat))
        results[name] = (t_rank, t_scan)
        print(f"{name:8s} integer_rank {t_rank * 1e3:9.2f} ms   scan_box {t_scan * 1e3:9.2f} ms")
    ranks = {name: [kernels.integer_rank(m, name) for m in mats] for name in found}
    scans = {name: kernels.scan_box(*scan, backend=name) for name in found}
    assert len({tuple(v) for v in ranks.values()}) == 1, "backends disagree on integer_rank"
    assert len({tuple(map(str, v)) for v in scans.values()}) == 1, "backends disagree on scan_box"
    if "cython" in results:
        py, cy = results["python"], results["cython"]
        print(f"speed-up  integer_rank {py[0] / cy[0]:9.1f}x     scan_box {py[1] / cy[1]:9.1f}x")


if __name__ == "__main__":
    main()
