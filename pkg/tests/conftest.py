"""Shared strategies and helpers for the test suite."""

from __future__ import annotations

import itertools

from hypothesis import strategies as st

from cuberep import BipartiteGraph, SIDE_A, SIDE_B


@st.composite
def bipartite_graphs(draw, max_a: int = 5, max_b: int = 5):
    n1 = draw(st.integers(1, max_a))
    n2 = draw(st.integers(1, max_b))
    cells = [(a, b) for a in range(1, n1 + 1) for b in range(1, n2 + 1)]
    chosen = draw(st.sets(st.sampled_from(cells)))
    return BipartiteGraph(n1, n2, frozenset(chosen))


def brute_force_degree(g: BipartiteGraph, v) -> int:
    side, index = v
    if side == SIDE_A:
        return sum(1 for a, _ in g.edges if a == index)
    return sum(1 for _, b in g.edges if b == index)


def all_graphs(n1: int, n2: int):
    """Every bipartite graph on fixed side sizes, one per edge subset."""
    cells = [(a, b) for a in range(1, n1 + 1) for b in range(1, n2 + 1)]
    for mask in range(2 ** len(cells)):
        edges = frozenset(cells[k] for k in range(len(cells)) if mask >> k & 1)
        yield BipartiteGraph(n1, n2, edges)


def all_pairs(vertices):
    return itertools.combinations(vertices, 2)
