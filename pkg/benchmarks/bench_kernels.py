#!/usr/bin/env python3
"""Compare the numba loop kernel with the vectorized numpy kernel.

Workloads: Monte Carlo batches of IC profiles (m=3, 101 voters, 11 rules)
and exhaustive Borda audits (m=3 and m=4).
"""

import argparse
import math
import time

import numpy as np

from clwitness import _accel
from clwitness.core import borda_vector
from clwitness.kernels import cl_outcomes, integer_scores, order_types, rank_table
from clwitness.montecarlo import S2_GRID, Culture, chunk_rng, draw_counts
from clwitness.oracle import composition_batches


def timed(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench_montecarlo(samples, repeat):
    ranks = rank_table(order_types(3))
    scores = integer_scores([(1, v, 0) for v in S2_GRID])
    counts = draw_counts(chunk_rng(0, 0), Culture.IC, 101, 6, samples)
    return ranks, scores, [counts]


def bench_audit(m, n):
    ranks = rank_table(order_types(m))
    scores = integer_scores([borda_vector(m)])
    return ranks, scores, list(composition_batches(math.factorial(m), n))


def run(label, ranks, scores, blocks, repeat):
    rows = sum(b.shape[0] for b in blocks)
    print(f"\n{label}: {rows} profiles")
    results = {}
    for backend in ("numba", "numpy"):
        if backend == "numba" and not _accel.USE_NUMBA:
            print("  numba   unavailable or disabled")
            continue
        # first call compiles
        t0 = time.perf_counter()
        cl_outcomes(blocks[0][:1], ranks, scores, backend=backend)
        warm = time.perf_counter() - t0
        secs, out = timed(lambda: [cl_outcomes(b, ranks, scores, backend=backend) for b in blocks], repeat)
        results[backend] = out
        print(f"  {backend:<7} {secs * 1e3:9.1f} ms  ({rows / secs:,.0f} profiles/s, first call {warm:.2f}s)")
    if len(results) == 2:
        same = all(
            np.array_equal(a.loser, b.loser) and np.array_equal(a.in_winners, b.in_winners)
            and np.array_equal(a.unique_winner, b.unique_winner)
            for a, b in zip(results["numba"], results["numpy"])
        )
        print(f"  outcomes identical: {same}")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--samples", type=int, default=200_000)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    print(f"numba available: {_accel.HAVE_NUMBA}, enabled: {_accel.USE_NUMBA}")
    run("IC m=3 n=101, 11 rules", *bench_montecarlo(args.samples, args.repeat), args.repeat)
    run("Borda audit m=3 n=20", *bench_audit(3, 20), args.repeat)
    run("Borda audit m=4 n=5", *bench_audit(4, 5), args.repeat)


if __name__ == "__main__":
    main()
