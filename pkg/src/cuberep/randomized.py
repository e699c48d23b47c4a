"""Random permutations and the permutation-driven supergraph construction.

One random dimension: permute one side uniformly, place each permuted-side
vertex at its rank, and place each vertex of the other side just past the
smallest rank in its neighborhood.  Every edge stays adjacent; each cross
non-edge survives with probability d/(d + 1), d the degree of its
non-permuted endpoint.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .graphs import (
    SIDE_A,
    SIDE_B,
    BipartiteGraph,
    DegreeProfile,
    Vertex,
    degree_profile,
    other_side,
)
from .intervals import UnitIntervalRep

MASK64 = (1 << 64) - 1


def make_rng(seed: int) -> random.Random:
    """Deterministic RNG stream for a 64-bit seed."""
    return random.Random(seed & MASK64)


def derive_seed(master: int, *path: int) -> int:
    """Stable 64-bit seed for a (master, index...) path, so retries and
    per-dimension invocations draw independent streams reproducibly."""
    h = hashlib.blake2b(digest_size=8)
    h.update((master & MASK64).to_bytes(8, "little"))
    for part in path:
        h.update((part & MASK64).to_bytes(8, "little"))
    return int.from_bytes(h.digest(), "little")


@dataclass(frozen=True)
class Permutation:
    """Bijection from one side's vertex indices onto ranks 1..size;
    ranks[i - 1] is the rank of vertex i."""

    side: str
    ranks: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "ranks", tuple(self.ranks))
        other_side(self.side)  # validates the label
        if sorted(self.ranks) != list(range(1, len(self.ranks) + 1)):
            raise ValueError("ranks must be a bijection onto 1..size")

    @property
    def size(self) -> int:
        return len(self.ranks)

    def rank(self, index: int) -> int:
        if not 1 <= index <= len(self.ranks):
            raise ValueError(f"index {index} outside 1..{len(self.ranks)}")
        return self.ranks[index - 1]


def random_permutation(size: int, rng: random.Random, side: str = SIDE_A) -> Permutation:
    """Uniformly random permutation; exact uniform shuffle, deterministic for
    a given rng state."""
    if size < 1:
        raise ValueError(f"size must be >= 1, got {size}")
    ranks = list(range(1, size + 1))
    rng.shuffle(ranks)
    return Permutation(side, tuple(ranks))


def project(pi: Permutation, subset: Iterable[int]) -> dict[int, int]:
    """Rank the subset's indices 1..|subset| in the same order pi ranks them."""
    xs = sorted(set(subset))
    if not xs:
        raise ValueError("cannot project onto an empty subset")
    for x in xs:
        if not 1 <= x <= pi.size:
            raise ValueError(f"index {x} outside 1..{pi.size}")
    ordered = sorted(xs, key=pi.rank)
    return {x: position for position, x in enumerate(ordered, start=1)}


def supergraph_from_permutation(pi: Permutation, g: BipartiteGraph) -> UnitIntervalRep:
    """The unit interval dimension a permutation of one side determines.

    With n = a_count + b_count and threshold n: permuted-side vertex i sits at
    rank(i); a non-permuted vertex sits at n + (smallest rank among its
    neighbors).  A non-permuted isolated vertex has no such rank and sits at
    2n + 2, past the threshold reach of every permuted placement.
    """
    s_size = g.side_count(pi.side)
    if pi.size != s_size:
        raise ValueError(f"permutation size {pi.size} != side {pi.side} size {s_size}")
    t_side = other_side(pi.side)
    t_size = g.side_count(t_side)
    n = g.vertex_count
    ranks = pi.ranks
    placement: dict[Vertex, int] = {}
    for i in range(1, s_size + 1):
        placement[(pi.side, i)] = ranks[i - 1]
    best = [0] * (t_size + 1)  # 0 marks "no neighbor seen", real ranks are >= 1
    if pi.side == SIDE_A:
        for a, b in g.edges:
            r = ranks[a - 1]
            if best[b] == 0 or r < best[b]:
                best[b] = r
    else:
        for a, b in g.edges:
            r = ranks[b - 1]
            if best[a] == 0 or r < best[a]:
                best[a] = r
    for j in range(1, t_size + 1):
        placement[(t_side, j)] = n + best[j] if best[j] else 2 * n + 2
    return UnitIntervalRep(placement, n)


def choose_permuted_side(profile: DegreeProfile) -> str:
    """Permute the side whose opposite has the smaller maximum degree; ties
    permute side A."""
    return SIDE_A if profile.delta_b <= profile.delta_a else SIDE_B


def random_supergraph(g: BipartiteGraph, rng: random.Random) -> UnitIntervalRep:
    """One random dimension: uniform permutation of the side chosen by
    choose_permuted_side, then supergraph_from_permutation."""
    side = choose_permuted_side(degree_profile(g))
    pi = random_permutation(g.side_count(side), rng, side)
    return supergraph_from_permutation(pi, g)


def nonedge_survival_exact(g: BipartiteGraph, permuted: Vertex, other: Vertex) -> Fraction:
    """Probability that a cross non-edge stays adjacent in one random
    dimension permuting `permuted`'s side.

    The pair is adjacent iff some neighbor of the non-permuted endpoint ranks
    below the permuted endpoint; among those d + 1 candidates each is equally
    likely to rank lowest, giving exactly d/(d + 1).  With d = 0 the
    isolated-vertex placement gives probability 0, which the formula matches.
    """
    p_side, p_index = permuted
    o_side, o_index = other
    if p_side == o_side:
        raise ValueError("survival probability applies to cross pairs only")
    if not 1 <= p_index <= g.side_count(p_side):
        raise ValueError(f"index {p_index} outside side {p_side}")
    if not 1 <= o_index <= g.side_count(o_side):
        raise ValueError(f"index {o_index} outside side {o_side}")
    a_index, b_index = (p_index, o_index) if p_side == SIDE_A else (o_index, p_index)
    if g.has_edge(a_index, b_index):
        raise ValueError(f"({p_side}{p_index}, {o_side}{o_index}) is an edge, not a non-edge")
    d = degree_profile(g).degree(other)
    return Fraction(d, d + 1)
