#!/usr/bin/env python3
"""Per-dimension construction cost across graph sizes.

Generates bipartite graphs at a fixed expected degree, times one random
dimension (permutation draw plus supergraph assembly) at each size, and
prints the consecutive doubling ratios.  Linear scaling shows up as ratios
near 2.0.  Timing uses the median over rounds of back-to-back measurements
so a transient load spike cannot skew a single size.

Usage:
    python scripts/scaling_experiment.py
    python scripts/scaling_experiment.py --sizes 2000,4000,8000 --rounds 12
"""

from __future__ import annotations

import argparse
import statistics
import time

from cuberep import (
    choose_permuted_side,
    degree_profile,
    default_t,
    derive_seed,
    gen_random_bipartite,
    make_rng,
    random_permutation,
    supergraph_from_permutation,
)

DEFAULT_SIZES = "2000,4000,8000,16000,32000"


def time_one_size(n: int, degree: float, seed: int, rounds: int, batch: int):
    half = n // 2
    p = min(1.0, degree / half)
    g = gen_random_bipartite(half, half, p, seed=derive_seed(seed, n))
    profile = degree_profile(g)
    side = choose_permuted_side(profile)
    size = g.side_count(side)
    rng = make_rng(derive_seed(seed, n, 10 ** 6))
    supergraph_from_permutation(random_permutation(size, rng, side), g)  # warmup
    samples = []
    for round_index in range(rounds):
        rng = make_rng(derive_seed(seed, n, round_index))
        started = time.perf_counter()
        for _ in range(batch):
            pi = random_permutation(size, rng, side)
            supergraph_from_permutation(pi, g)
        samples.append((time.perf_counter() - started) / batch)
    return {
        "n": n,
        "m": g.edge_count,
        "delta_prime": profile.delta_prime,
        "t_default": default_t(profile.delta_prime, g.b_count),
        "seconds": statistics.median(samples),
    }


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default=DEFAULT_SIZES,
                        help=f"comma-separated total vertex counts "
                             f"(default {DEFAULT_SIZES})")
    parser.add_argument("--degree", type=float, default=4.0,
                        help="expected degree on each side (default 4)")
    parser.add_argument("--rounds", type=int, default=9)
    parser.add_argument("--batch", type=int, default=4,
                        help="invocations amortized per measurement")
    parser.add_argument("--seed", type=int, default=20260822)
    args = parser.parse_args(argv)

    sizes = [int(s) for s in args.sizes.split(",")]
    rows = [time_one_size(n, args.degree, args.seed, args.rounds, args.batch)
            for n in sizes]

    print(f"expected degree {args.degree}, rounds {args.rounds}, "
          f"batch {args.batch}, seed {args.seed}")
    print(f"{'n':>7} {'m':>8} {'d-prime':>8} {'t-default':>10} "
          f"{'per-dim-ms':>11} {'ratio':>6}")
    previous = None
    for row in rows:
        ratio = "" if previous is None else f"{row['seconds'] / previous:.2f}"
        print(f"{row['n']:>7} {row['m']:>8} {row['delta_prime']:>8} "
              f"{row['t_default']:>10} {row['seconds'] * 1000:>11.3f} {ratio:>6}")
        previous = row["seconds"]
    print("ratio column compares to the previous size; near 2.0 means the "
          "per-dimension cost doubles with n")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
