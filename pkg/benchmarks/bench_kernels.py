"""Benchmark: compiled kernels vs the pure-Python fallback.

Run from the repository root after building the extension in place:

    python setup.py build_ext --inplace
    python benchmarks/bench_kernels.py
"""

import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from semibiplane import _kernels_py  # noqa: E402
from semibiplane.groups import add_table, make_group, sub_table  # noqa: E402

try:
    from semibiplane import _speedups
except ImportError:
    _speedups = None


def bench(fn, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def case_witness_batch(impl):
    G = make_group([8])
    gadd, gsub = add_table(G), sub_table(G)
    rng = random.Random(42)
    tables = [[rng.randrange(8) for _ in range(8)] for _ in range(20000)]

    def run():
        hits = 0
        for t in tables:
            if impl.semiplanar_witness(t, gadd, gsub, 8) is None:
                hits += 1
        return hits

    return run


def case_z6_unpruned(impl):
    G = make_group([6])
    gadd, gsub = add_table(G), sub_table(G)
    return lambda: impl.search_tables(6, gadd, gsub, gsub, False, -1, False, False)


def case_z6_pruned(impl):
    G = make_group([6])
    gadd, gsub = add_table(G), sub_table(G)
    return lambda: impl.search_tables(6, gadd, gsub, gsub, False, -1, True, True)


def case_z8_pruned(impl):
    G = make_group([8])
    gadd, gsub = add_table(G), sub_table(G)
    return lambda: impl.search_tables(8, gadd, gsub, gsub, True, -1, True, True)


CASES = [
    ("semiplanar_witness x20k (Z8)", case_witness_batch),
    ("search Z6 full, unpruned", case_z6_unpruned),
    ("search Z6 full, pruned", case_z6_pruned),
    ("search Z8 normalized, pruned", case_z8_pruned),
]


def main():
    print(f"{'case':<34} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    for name, make_case in CASES:
        pure = bench(make_case(_kernels_py))
        if _speedups is None:
            print(f"{name:<34} {pure:>9.3f}s {'n/a':>10} {'':>8}")
            continue
        fast = bench(make_case(_speedups))
        print(f"{name:<34} {pure:>9.3f}s {fast:>9.3f}s {pure / fast:>7.1f}x")
    if _speedups is None:
        print("\ncompiled kernels not built; run: python setup.py build_ext --inplace")


if __name__ == "__main__":
    main()
