"""Assemble random and bit-family dimensions, verify exactly, retry on failure.

The result is unconditionally correct: a returned representation has been
checked edge set against edge set with integer arithmetic.  Randomness only
affects how many attempts that takes.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass
from typing import NamedTuple

from .bitfamily import build_bit_family
from .graphs import SIDE_A, SIDE_B, BipartiteGraph, Vertex, degree_profile
from .intervals import (
    CubeRepresentation,
    bit_dim_tag,
    random_dim_tag,
    rep_from_jsonable,
    rep_to_jsonable,
    vertex_key,
)
from .randomized import (
    MASK64,
    choose_permuted_side,
    derive_seed,
    make_rng,
    random_permutation,
    supergraph_from_permutation,
)


class Violation(NamedTuple):
    """One disagreement between a representation and the target graph."""

    kind: str  # "extra-edge" or "missing-edge"
    u: Vertex
    v: Vertex


class BuildFailure(RuntimeError):
    """Raised when no verified representation was produced; carries the
    violations of the last attempt."""

    def __init__(self, message: str, violations: list[Violation]):
        super().__init__(message)
        self.violations = violations


@dataclass(frozen=True)
class BuildParams:
    master_seed: int
    t_override: int | None = None
    max_retries: int = 16

    def __post_init__(self) -> None:
        if self.max_retries < 1:
            raise ValueError(f"max_retries must be >= 1, got {self.max_retries}")
        if self.t_override is not None and self.t_override < 0:
            raise ValueError(f"t_override must be >= 0, got {self.t_override}")


@dataclass(frozen=True)
class BuildReport:
    dimension: int  # k, the total number of dimensions
    t: int
    bits_a: int
    bits_b: int
    retries: int
    seed: int
    nominal_bound: int
    construct_seconds: float
    verify_seconds: float


def default_t(delta_prime: int, n2: int) -> int:
    """Random-dimension count making one attempt fail with probability at
    most 1/n2; clamped to at least 1 so small sides still get a dimension."""
    return max(1, math.ceil(3 * (delta_prime + 1) * math.log(n2)))


def nominal_dimension_bound(delta_prime: int, n2: int) -> int:
    """Reported comparison value 3 * (delta_prime + 2) * ceil(ln n2)."""
    return 3 * (delta_prime + 2) * math.ceil(math.log(n2))


def verify(rep: CubeRepresentation, g: BipartiteGraph) -> list[Violation]:
    """Exact check that the dims' intersection graph equals g.

    Computes the full intersection with integer arithmetic, filtering the
    surviving pairs dimension by dimension (tightest thresholds first; the
    intersection does not depend on the order).  Returns all violations,
    order-normalized; an empty list means the representation is exact.
    """
    if rep.a_count != g.a_count or rep.b_count != g.b_count:
        raise ValueError(
            f"vertex mismatch: representation is {rep.a_count}+{rep.b_count}, "
            f"graph is {g.a_count}+{g.b_count}")
    verts = rep.vertices()
    vset = set(verts)
    for pos, dim in enumerate(rep.dims):
        if set(dim.placement) != vset:
            raise ValueError(f"dimension {pos} placement does not cover the vertex set")
    count = len(verts)
    surviving = [(i, j) for i in range(count) for j in range(i + 1, count)]
    for dim in sorted(rep.dims, key=lambda d: d.threshold):
        f = dim.placement
        values = [f[v] for v in verts]
        c = dim.threshold
        surviving = [(i, j) for i, j in surviving if abs(values[i] - values[j]) <= c]
    survived = set(surviving)
    edge_pairs = {(a - 1, g.a_count + b - 1) for a, b in g.edges}
    violations = [Violation("extra-edge", verts[i], verts[j])
                  for i, j in survived - edge_pairs]
    violations.extend(Violation("missing-edge", verts[i], verts[j])
                      for i, j in edge_pairs - survived)
    return sorted(violations)


def build_representation(
    g: BipartiteGraph, params: BuildParams
) -> tuple[CubeRepresentation, BuildReport]:
    """Build a verified representation of a normalized graph (a_count <= b_count).

    Each attempt draws t random dimensions from seeds derived per (attempt,
    dimension), appends both bit families, and verifies.  Attempts repeat with
    fresh derived seeds until verification passes or max_retries attempts are
    exhausted, which raises BuildFailure listing the surviving pairs.
    """
    if g.a_count > g.b_count:
        raise ValueError("graph is not normalized (a_count > b_count); "
                         "apply normalize_sides first")
    profile = degree_profile(g)
    t = params.t_override if params.t_override is not None \
        else default_t(profile.delta_prime, g.b_count)
    has_cross_non_edge = g.edge_count < g.a_count * g.b_count
    if t == 0 and has_cross_non_edge:
        violations = sorted(Violation("extra-edge", (SIDE_A, a), (SIDE_B, b))
                            for a, b in g.cross_non_edges())
        raise BuildFailure(
            "zero random dimensions cannot remove cross non-edges", violations)
    fam_a = build_bit_family(g, SIDE_A)
    fam_b = build_bit_family(g, SIDE_B)
    side = choose_permuted_side(profile)
    side_size = g.side_count(side)
    provenance = (tuple(random_dim_tag(j + 1) for j in range(t))
                  + tuple(bit_dim_tag(SIDE_A, i + 1) for i in range(fam_a.bit_count))
                  + tuple(bit_dim_tag(SIDE_B, i + 1) for i in range(fam_b.bit_count)))
    construct_seconds = 0.0
    verify_seconds = 0.0
    violations = []
    for attempt in range(params.max_retries):
        started = time.perf_counter()
        random_dims = []
        for j in range(t):
            rng = make_rng(derive_seed(params.master_seed, attempt, j))
            pi = random_permutation(side_size, rng, side)
            random_dims.append(supergraph_from_permutation(pi, g))
        rep = CubeRepresentation(
            g.a_count, g.b_count,
            tuple(random_dims) + fam_a.reps + fam_b.reps,
            provenance)
        checked = time.perf_counter()
        construct_seconds += checked - started
        violations = verify(rep, g)
        verify_seconds += time.perf_counter() - checked
        if any(v.kind == "missing-edge" for v in violations):
            # Retrying cannot help: every dimension is meant to be a supergraph.
            raise RuntimeError(f"internal error: an edge went missing: {violations}")
        if not violations:
            report = BuildReport(
                dimension=rep.dimension,
                t=t,
                bits_a=fam_a.bit_count,
                bits_b=fam_b.bit_count,
                retries=attempt,
                seed=params.master_seed & MASK64,
                nominal_bound=nominal_dimension_bound(profile.delta_prime, g.b_count),
                construct_seconds=construct_seconds,
                verify_seconds=verify_seconds)
            return rep, report
    raise BuildFailure(
        f"verification still failing after {params.max_retries} attempts", violations)


def estimate_failure_rate(g: BipartiteGraph, params: BuildParams, trials: int) -> float:
    """Fraction of `trials` independent single attempts (no retry) whose
    verification fails.  Uses the same per-attempt seed derivation as
    build_representation."""
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    if g.a_count > g.b_count:
        raise ValueError("graph is not normalized (a_count > b_count); "
                         "apply normalize_sides first")
    profile = degree_profile(g)
    t = params.t_override if params.t_override is not None \
        else default_t(profile.delta_prime, g.b_count)
    fam_a = build_bit_family(g, SIDE_A)
    fam_b = build_bit_family(g, SIDE_B)
    side = choose_permuted_side(profile)
    side_size = g.side_count(side)
    provenance = (tuple(random_dim_tag(j + 1) for j in range(t))
                  + tuple(bit_dim_tag(SIDE_A, i + 1) for i in range(fam_a.bit_count))
                  + tuple(bit_dim_tag(SIDE_B, i + 1) for i in range(fam_b.bit_count)))
    failures = 0
    for trial in range(trials):
        random_dims = []
        for j in range(t):
            rng = make_rng(derive_seed(params.master_seed, trial, j))
            pi = random_permutation(side_size, rng, side)
            random_dims.append(supergraph_from_permutation(pi, g))
        rep = CubeRepresentation(
            g.a_count, g.b_count,
            tuple(random_dims) + fam_a.reps + fam_b.reps,
            provenance)
        if verify(rep, g):
            failures += 1
    return failures / trials


def report_to_jsonable(report: BuildReport, swapped: bool = False,
                       include_timings: bool = False) -> dict:
    """Report block for dumps and machine output.  Wall times are excluded
    unless asked for, so dump bytes stay identical across reruns; bits_a and
    bits_b follow the dump's labels when sides were swapped back."""
    bits_a, bits_b = report.bits_a, report.bits_b
    if swapped:
        bits_a, bits_b = bits_b, bits_a
    out = {
        "k": report.dimension,
        "t": report.t,
        "bits_a": bits_a,
        "bits_b": bits_b,
        "retries": report.retries,
        "seed": report.seed,
        "nominal_bound": report.nominal_bound,
        "swapped": swapped,
    }
    if include_timings:
        out["timings"] = {
            "construct_seconds": report.construct_seconds,
            "verify_seconds": report.verify_seconds,
        }
    return out


def render_dump(rep: CubeRepresentation, report: BuildReport,
                swapped: bool = False) -> str:
    """Canonical dump text: representation plus report, sorted keys, stable
    bytes for identical (graph, seed, params)."""
    payload = rep_to_jsonable(rep)
    payload["report"] = report_to_jsonable(report, swapped=swapped)
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def parse_dump(text: str) -> CubeRepresentation:
    """Read a dump back into a representation; raises ValueError on malformed
    or truncated input."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"dump is not valid JSON: {exc}") from None
    return rep_from_jsonable(payload)


def format_violation(violation: Violation) -> str:
    return f"{violation.kind} {vertex_key(violation.u)}-{vertex_key(violation.v)}"
