"""Command line front end: gen, build, verify, probe, bench.

Exit codes: 0 success, 1 verification failure, 2 usage or format error.
Every run logs its seed (stderr), so any result can be reproduced.
"""

from __future__ import annotations

import argparse
import json
import random
import statistics
import sys
import time
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .bitfamily import build_bit_family
from .builder import (
    BuildFailure,
    BuildParams,
    build_representation,
    default_t,
    estimate_failure_rate,
    format_violation,
    parse_dump,
    render_dump,
    report_to_jsonable,
    verify,
)
from .graphs import (
    SIDE_A,
    SIDE_B,
    GraphFormatError,
    degree_profile,
    gen_random_bipartite,
    normalize_sides,
    parse_graph,
    serialize_graph,
)
from .intervals import (
    CubeRepresentation,
    bit_dim_tag,
    random_dim_tag,
    swap_sides,
    vertex_key,
)
from .randomized import (
    choose_permuted_side,
    derive_seed,
    make_rng,
    nonedge_survival_exact,
    random_permutation,
    supergraph_from_permutation,
)


def _seed_type(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be an integer, got {text!r}")
    if not 0 <= value < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return value


def _resolve_seed(seed: int | None) -> int:
    if seed is None:
        seed = random.SystemRandom().getrandbits(64)
    print(f"seed: {seed}", file=sys.stderr)
    return seed


def _read_text(path: str) -> str:
    return Path(path).read_text()


def _write_text(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def cmd_gen(args: argparse.Namespace) -> int:
    seed = _resolve_seed(args.seed)
    g = gen_random_bipartite(args.n1, args.n2, args.p, seed)
    _write_text(args.out, serialize_graph(g))
    return 0


def cmd_build(args: argparse.Namespace) -> int:
    g = parse_graph(_read_text(args.graph))
    normalized, swapped = normalize_sides(g)
    seed = _resolve_seed(args.seed)
    params = BuildParams(master_seed=seed, t_override=args.t,
                         max_retries=args.max_retries)
    rep, report = build_representation(normalized, params)
    if swapped:
        rep = swap_sides(rep)
        leftover = verify(rep, g)
        if leftover:
            raise BuildFailure("representation failed re-verification after "
                               "undoing side normalization", leftover)
    if args.out is not None:
        Path(args.out).write_text(render_dump(rep, report, swapped=swapped))
    if args.format == "machine":
        payload = report_to_jsonable(report, swapped=swapped, include_timings=True)
        payload["verified"] = True
        if args.out is not None:
            payload["dump"] = args.out
        print(json.dumps(payload, sort_keys=True))
    else:
        shown = report_to_jsonable(report, swapped=swapped)
        for key in ("k", "t", "bits_a", "bits_b", "retries", "seed",
                    "nominal_bound", "swapped"):
            print(f"{key}: {shown[key]}")
        print(f"construct: {report.construct_seconds:.6f}s")
        print(f"verify: {report.verify_seconds:.6f}s")
        print("verification: PASS")
        if args.out is not None:
            print(f"dump: {args.out}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    g = parse_graph(_read_text(args.graph))
    rep = parse_dump(_read_text(args.rep))
    violations = verify(rep, g)
    if args.format == "machine":
        payload = {
            "equal": not violations,
            "violations": [
                {"kind": v.kind, "pair": f"{vertex_key(v.u)}-{vertex_key(v.v)}"}
                for v in violations
            ],
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        for v in violations:
            print(format_violation(v))
        print("verification: PASS" if not violations else
              f"verification: FAIL ({len(violations)} violations)")
    return 0 if not violations else 1


def cmd_probe(args: argparse.Namespace) -> int:
    g = parse_graph(_read_text(args.graph))
    seed = _resolve_seed(args.seed)
    trials = args.trials
    profile = degree_profile(g)
    side = choose_permuted_side(profile)
    bound = Fraction(profile.delta_prime, profile.delta_prime + 1)
    non_edges = sorted(g.cross_non_edges())

    def orient(a: int, b: int) -> tuple[tuple[str, int], tuple[str, int]]:
        # (permuted endpoint, non-permuted endpoint)
        if side == SIDE_A:
            return (SIDE_A, a), (SIDE_B, b)
        return (SIDE_B, b), (SIDE_A, a)

    counts = {pair: 0 for pair in non_edges}
    rng = make_rng(seed)
    size = g.side_count(side)
    for _ in range(trials):
        pi = random_permutation(size, rng, side)
        dim = supergraph_from_permutation(pi, g)
        for a, b in non_edges:
            if dim.adjacent((SIDE_A, a), (SIDE_B, b)):
                counts[(a, b)] += 1
    rows = []
    for a, b in non_edges:
        permuted, fixed = orient(a, b)
        exact = nonedge_survival_exact(g, permuted, fixed)
        rows.append({
            "pair": f"A{a}-B{b}",
            "observed": counts[(a, b)] / trials,
            "exact": str(exact),
        })
    normalized, _ = normalize_sides(g)
    t_used = args.t if args.t is not None else \
        default_t(profile.delta_prime, normalized.b_count)
    rate = estimate_failure_rate(
        normalized, BuildParams(master_seed=seed, t_override=args.t), trials)
    if args.format == "machine":
        payload = {
            "seed": seed,
            "trials": trials,
            "permuted_side": side,
            "delta_prime": profile.delta_prime,
            "bound": str(bound),
            "nonedges": rows,
            "failure": {"t": t_used, "rate": rate},
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"permuted side: {side}")
        print(f"delta_prime: {profile.delta_prime}  per-dimension bound: {bound}")
        print(f"trials: {trials}")
        if rows:
            width = max(len(r["pair"]) for r in rows)
            print(f"  {'pair':<{width}}  observed  exact")
            for r in rows:
                print(f"  {r['pair']:<{width}}  {r['observed']:<8.4f}  {r['exact']}")
        else:
            print("  no cross non-edges")
        print(f"single-attempt failure rate (t={t_used}): {rate:.4f}")
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    g = parse_graph(_read_text(args.graph))
    normalized, _ = normalize_sides(g)
    seed = _resolve_seed(args.seed)
    profile = degree_profile(normalized)
    t = args.t if args.t is not None else \
        default_t(profile.delta_prime, normalized.b_count)
    side = choose_permuted_side(profile)
    size = normalized.side_count(side)
    fam_a = build_bit_family(normalized, SIDE_A)
    fam_b = build_bit_family(normalized, SIDE_B)
    provenance = (tuple(random_dim_tag(j + 1) for j in range(t))
                  + tuple(bit_dim_tag(SIDE_A, i + 1) for i in range(fam_a.bit_count))
                  + tuple(bit_dim_tag(SIDE_B, i + 1) for i in range(fam_b.bit_count)))
    construct_times = []
    verify_times = []
    passes = 0
    for round_index in range(args.trials):
        started = time.perf_counter()
        dims = []
        for j in range(t):
            rng = make_rng(derive_seed(seed, round_index, j))
            pi = random_permutation(size, rng, side)
            dims.append(supergraph_from_permutation(pi, normalized))
        rep = CubeRepresentation(normalized.a_count, normalized.b_count,
                                 tuple(dims) + fam_a.reps + fam_b.reps, provenance)
        checked = time.perf_counter()
        violations = verify(rep, normalized)
        done = time.perf_counter()
        construct_times.append(checked - started)
        verify_times.append(done - checked)
        if not violations:
            passes += 1
    per_invocation = min(construct_times) / t if t else 0.0
    summary = {
        "n1": normalized.a_count,
        "n2": normalized.b_count,
        "m": normalized.edge_count,
        "t": t,
        "rounds": args.trials,
        "passes": passes,
        "construct_mean_seconds": statistics.mean(construct_times),
        "construct_min_seconds": min(construct_times),
        "per_invocation_seconds": per_invocation,
        "verify_mean_seconds": statistics.mean(verify_times),
        "verify_min_seconds": min(verify_times),
        "seed": seed,
    }
    if args.format == "machine":
        print(json.dumps(summary, sort_keys=True))
    else:
        print(f"graph: {summary['n1']}+{summary['n2']} vertices, {summary['m']} edges")
        print(f"t: {t}  rounds: {args.trials}  first-attempt passes: {passes}")
        print(f"construct: mean {summary['construct_mean_seconds']:.6f}s"
              f"  min {summary['construct_min_seconds']:.6f}s")
        print(f"per random dimension (min round): {per_invocation:.6f}s")
        print(f"verify: mean {summary['verify_mean_seconds']:.6f}s"
              f"  min {summary['verify_min_seconds']:.6f}s")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cuberep",
        description="Unit-cube intersection representations of bipartite graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate a random bipartite graph file")
    p_gen.add_argument("n1", type=int)
    p_gen.add_argument("n2", type=int)
    p_gen.add_argument("p", type=float)
    p_gen.add_argument("--seed", type=_seed_type, default=None)
    p_gen.add_argument("--out", default=None, help="output path (default stdout)")
    p_gen.set_defaults(func=cmd_gen)

    p_build = sub.add_parser("build", help="build and verify a representation")
    p_build.add_argument("graph", help="graph file path")
    p_build.add_argument("--seed", type=_seed_type, default=None)
    p_build.add_argument("--t", type=int, default=None,
                         help="random dimension count (default from the graph)")
    p_build.add_argument("--max-retries", type=int, default=16)
    p_build.add_argument("--out", default=None, help="write the dump here")
    p_build.add_argument("--format", choices=("human", "machine"), default="human")
    p_build.set_defaults(func=cmd_build)

    p_verify = sub.add_parser("verify", help="re-check a dump against a graph")
    p_verify.add_argument("graph", help="graph file path")
    p_verify.add_argument("rep", help="representation dump path")
    p_verify.add_argument("--format", choices=("human", "machine"), default="human")
    p_verify.set_defaults(func=cmd_verify)

    p_probe = sub.add_parser(
        "probe",
        help="survival frequencies per cross non-edge and a failure-rate estimate")
    p_probe.add_argument("graph", help="graph file path")
    p_probe.add_argument("--trials", type=int, default=1000,
                         help="samples for both the table and the failure estimate")
    p_probe.add_argument("--seed", type=_seed_type, default=None)
    p_probe.add_argument("--t", type=int, default=None,
                         help="random dimension count for the failure estimate")
    p_probe.add_argument("--format", choices=("human", "machine"), default="human")
    p_probe.set_defaults(func=cmd_probe)

    p_bench = sub.add_parser(
        "bench", help="time construction separately from verification")
    p_bench.add_argument("graph", help="graph file path")
    p_bench.add_argument("--t", type=int, default=None)
    p_bench.add_argument("--seed", type=_seed_type, default=None)
    p_bench.add_argument("--trials", type=int, default=5, help="timing rounds")
    p_bench.add_argument("--format", choices=("human", "machine"), default="human")
    p_bench.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BuildFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        for violation in exc.violations:
            print(f"  {format_violation(violation)}", file=sys.stderr)
        return 1
    except (GraphFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
