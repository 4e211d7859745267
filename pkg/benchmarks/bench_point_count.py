"""Benchmark the compiled point-counting kernels against the pure-Python
fallbacks.

Usage:
    python3 benchmarks/bench_point_count.py [--full]

The naive O(p^2) enumeration is what dominates the package's runtime in
practice, so that's the loop worth compiling; the character-sum count is
timed as well.  Results for both backends are asserted equal before timing.
"""

from __future__ import annotations

import argparse
import time

from rmtorus import ecpoints
from rmtorus.ecpoints import Curve, _charsum_count_py, _naive_count_py

CURVE = Curve(2, 3)


def best_of(fn, args, repeats=3):
    best = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn(*args)
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return best, result


def bench(label, compiled_fn, pure_fn, primes):
    print(f"\n{label} (curve {CURVE}):")
    header = f"{'p':>8} {'python':>12} {'compiled':>12} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for p in primes:
        t_py, n_py = best_of(pure_fn, (CURVE.a, CURVE.b, p))
        if compiled_fn is None:
            print(f"{p:>8} {t_py:>11.4f}s {'n/a':>12} {'n/a':>9}")
            continue
        t_c, n_c = best_of(compiled_fn, (CURVE.a, CURVE.b, p))
        assert n_py == n_c, f"backends disagree at p={p}: {n_py} vs {n_c}"
        print(f"{p:>8} {t_py:>11.4f}s {t_c:>11.4f}s {t_py / t_c:>8.1f}x")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--full", action="store_true", help="larger primes (slower)")
    args = parser.parse_args()

    print(f"active backend: {ecpoints.BACKEND}")
    compiled = ecpoints._ecount
    naive_primes = [101, 211, 401, 809] + ([1601, 3203] if args.full else [])
    charsum_primes = [1009, 10007, 100003] + ([1000003] if args.full else [])

    bench(
        "naive O(p^2) enumeration",
        compiled.naive_count if compiled else None,
        _naive_count_py,
        naive_primes,
    )
    bench(
        "character-sum count",
        compiled.charsum_count if compiled else None,
        _charsum_count_py,
        charsum_primes,
    )


if __name__ == "__main__":
    main()
