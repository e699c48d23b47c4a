"""Bipartite graph values: degrees, random generation, and file I/O."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterator

Vertex = tuple[str, int]

SIDE_A = "A"
SIDE_B = "B"


def other_side(side: str) -> str:
    if side == SIDE_A:
        return SIDE_B
    if side == SIDE_B:
        return SIDE_A
    raise ValueError(f"unknown side {side!r}")


class GraphFormatError(ValueError):
    """Malformed graph file; `line` is the 1-based offending line when known."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class BipartiteGraph:
    """Simple bipartite graph on sides A (indices 1..a_count) and B (1..b_count).

    Edges are cross pairs stored as (a_index, b_index); same-side edges are
    unrepresentable by construction.
    """

    a_count: int
    b_count: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", frozenset(self.edges))
        if self.a_count < 1:
            raise ValueError(f"a_count must be >= 1, got {self.a_count}")
        if self.b_count < 1:
            raise ValueError(f"b_count must be >= 1, got {self.b_count}")
        for a, b in self.edges:
            if not 1 <= a <= self.a_count:
                raise ValueError(f"edge ({a}, {b}): a-index outside 1..{self.a_count}")
            if not 1 <= b <= self.b_count:
                raise ValueError(f"edge ({a}, {b}): b-index outside 1..{self.b_count}")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def vertex_count(self) -> int:
        return self.a_count + self.b_count

    def side_count(self, side: str) -> int:
        return self.a_count if other_side(side) == SIDE_B else self.b_count

    def vertices(self) -> Iterator[Vertex]:
        for i in range(1, self.a_count + 1):
            yield (SIDE_A, i)
        for j in range(1, self.b_count + 1):
            yield (SIDE_B, j)

    def has_edge(self, a_index: int, b_index: int) -> bool:
        return (a_index, b_index) in self.edges

    def cross_non_edges(self) -> Iterator[tuple[int, int]]:
        """All cross pairs that are not edges, in (a, b) sorted order."""
        for a in range(1, self.a_count + 1):
            for b in range(1, self.b_count + 1):
                if (a, b) not in self.edges:
                    yield (a, b)


@dataclass(frozen=True)
class DegreeProfile:
    """Per-vertex degrees and neighborhoods plus the two side maxima.

    delta_prime is min(delta_a, delta_b); it is 0 exactly when the graph has
    no edges, since every edge raises both side maxima to at least 1.
    """

    delta_a: int
    delta_b: int
    delta_prime: int
    degrees: dict[Vertex, int]
    neighborhoods: dict[Vertex, frozenset[Vertex]]

    def degree(self, v: Vertex) -> int:
        return self.degrees[v]

    def neighbors(self, v: Vertex) -> frozenset[Vertex]:
        return self.neighborhoods[v]


def degree_profile(g: BipartiteGraph) -> DegreeProfile:
    neigh: dict[Vertex, set[Vertex]] = {v: set() for v in g.vertices()}
    for a, b in g.edges:
        va, vb = (SIDE_A, a), (SIDE_B, b)
        neigh[va].add(vb)
        neigh[vb].add(va)
    frozen = {v: frozenset(ns) for v, ns in neigh.items()}
    degrees = {v: len(ns) for v, ns in frozen.items()}
    delta_a = max(degrees[(SIDE_A, i)] for i in range(1, g.a_count + 1))
    delta_b = max(degrees[(SIDE_B, j)] for j in range(1, g.b_count + 1))
    return DegreeProfile(delta_a, delta_b, min(delta_a, delta_b), degrees, frozen)


def normalize_sides(g: BipartiteGraph) -> tuple[BipartiteGraph, bool]:
    """Swap sides if needed so a_count <= b_count; the flag reports a swap.

    Equal side counts keep the original orientation.
    """
    if g.a_count <= g.b_count:
        return g, False
    flipped = frozenset((b, a) for a, b in g.edges)
    return BipartiteGraph(g.b_count, g.a_count, flipped), True


def gen_random_bipartite(n1: int, n2: int, p: float, seed: int) -> BipartiteGraph:
    """Random bipartite graph: each of the n1*n2 cross pairs is an edge
    independently with probability p.  Deterministic for a fixed seed.

    Cells are visited with geometric skips so the work is proportional to the
    number of edges drawn, not n1*n2.
    """
    if n1 < 1 or n2 < 1:
        raise ValueError(f"side counts must be >= 1, got {n1}, {n2}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must be within [0, 1], got {p}")
    total = n1 * n2
    if p == 0.0:
        chosen: list[int] = []
    elif p == 1.0:
        chosen = list(range(total))
    else:
        rng = random.Random(seed)
        log_q = math.log1p(-p)
        chosen = []
        cell = -1
        while True:
            gap = int(math.log1p(-rng.random()) / log_q)
            cell += gap + 1
            if cell >= total:
                break
            chosen.append(cell)
    edges = frozenset((c // n2 + 1, c % n2 + 1) for c in chosen)
    return BipartiteGraph(n1, n2, edges)


def parse_graph(text: str) -> BipartiteGraph:
    """Parse the graph file format:

        c optional comment
        p bipartite <n1> <n2> <m>
        e <a-index> <b-index>     (1-based, one line per edge)

    Raises GraphFormatError with the offending line number on malformed
    headers, out-of-range indices, and duplicate edges.
    """
    n1 = n2 = m = None
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n1 is not None:
                raise GraphFormatError("duplicate header", lineno)
            if len(fields) != 5 or fields[1] != "bipartite":
                raise GraphFormatError(
                    "malformed header, expected 'p bipartite <n1> <n2> <m>'", lineno)
            try:
                n1, n2, m = int(fields[2]), int(fields[3]), int(fields[4])
            except ValueError:
                raise GraphFormatError("malformed header, counts must be integers",
                                       lineno) from None
            if n1 < 1 or n2 < 1:
                raise GraphFormatError("side counts must be >= 1", lineno)
            if m < 0:
                raise GraphFormatError("edge count must be >= 0", lineno)
        elif fields[0] == "e":
            if n1 is None or n2 is None or m is None:
                raise GraphFormatError("edge line before header", lineno)
            if len(fields) != 3:
                raise GraphFormatError("malformed edge, expected 'e <a> <b>'", lineno)
            try:
                a, b = int(fields[1]), int(fields[2])
            except ValueError:
                raise GraphFormatError("malformed edge, indices must be integers",
                                       lineno) from None
            if not 1 <= a <= n1:
                raise GraphFormatError(f"a-index {a} outside 1..{n1}", lineno)
            if not 1 <= b <= n2:
                raise GraphFormatError(f"b-index {b} outside 1..{n2}", lineno)
            if (a, b) in edges:
                raise GraphFormatError(f"duplicate edge ({a}, {b})", lineno)
            if len(edges) == m:
                raise GraphFormatError(f"more than the declared {m} edges", lineno)
            edges.add((a, b))
        else:
            raise GraphFormatError(f"unrecognized line type {fields[0]!r}", lineno)
    if n1 is None or n2 is None or m is None:
        raise GraphFormatError("missing 'p bipartite' header")
    if len(edges) != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(edges)}")
    return BipartiteGraph(n1, n2, frozenset(edges))


def serialize_graph(g: BipartiteGraph) -> str:
    """Canonical serialization: header, then edges sorted by (a, b)."""
    lines = [f"p bipartite {g.a_count} {g.b_count} {g.edge_count}"]
    lines.extend(f"e {a} {b}" for a, b in sorted(g.edges))
    return "\n".join(lines) + "\n"
