"""Compare the compiled and pure-Python kernels on representative workloads.

    python benchmarks/bench_kernels.py [--repeat 5]
"""

from __future__ import annotations

import argparse
import random
import timeit

from modunits._kernels import backends
from modunits.qseries import euler_product


def workloads(rng: random.Random):
    small_a = [rng.randint(-1000, 1000) for _ in range(400)]
    small_b = [rng.randint(-1000, 1000) for _ in range(400)]
    big_a = [rng.randint(-(2**80), 2**80) for _ in range(200)]
    big_b = [rng.randint(-(2**80), 2**80) for _ in range(200)]
    unit_b = [1] + small_b[1:300]
    g = [0] + [-24 * x for x in _sigma(600)[1:]]
    row = [rng.randint(-(2**40), 2**40) for _ in range(500)]
    prow = [rng.randint(-(2**40), 2**40) for _ in range(500)]
    return {
        "mul_trunc small ints (n=400)": lambda m: m.mul_trunc(small_a, small_b, 400),
        "mul_trunc 80-bit ints (n=200)": lambda m: m.mul_trunc(big_a, big_b, 200),
        "div_unit_trunc (n=300)": lambda m: m.div_unit_trunc(small_a[:300], unit_b, 300),
        "eta_recurrence eta^24 (n=600)": lambda m: m.eta_recurrence(g, 600),
        "axpy_ff (n=500)": lambda m: m.axpy_ff(row, prow, row[0], prow[0]),
    }


def _sigma(n: int) -> list[int]:
    s = [0] * n
    for d in range(1, n):
        for k in range(d, n, d):
            s[k] += d
    return s


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    mods = backends()
    if "cython" not in mods:
        print("compiled kernels unavailable; only the Python backend will be timed")
    work = workloads(random.Random(0))
    names = list(mods)
    print(f"{'workload':<32}" + "".join(f"{n + ' (ms)':>16}" for n in names) + f"{'speedup':>10}")
    for label, fn in work.items():
        times = {}
        results = {}
        for name, mod in mods.items():
            results[name] = list(fn(mod))
            times[name] = min(timeit.repeat(lambda: fn(mod), number=1, repeat=args.repeat)) * 1e3
        if len({tuple(r) for r in results.values()}) != 1:
            raise SystemExit(f"backends disagree on {label}")
        speed = f"{times['python'] / times['cython']:.1f}x" if "cython" in times else "-"
        print(f"{label:<32}" + "".join(f"{times[n]:>16.2f}" for n in names) + f"{speed:>10}")
    t0 = timeit.default_timer()
    euler_product({1: -8, 2: 16}, 3000)
    print(f"end-to-end: Delta_2 to O(q^3000) with the active backend in {timeit.default_timer() - t0:.2f}s")


if __name__ == "__main__":
    main()
