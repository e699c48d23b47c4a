"""Interval representations: induced graphs, intersections, cube views, dumps."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import all_pairs
from cuberep import (
    SIDE_A,
    SIDE_B,
    CubeRepresentation,
    UnitIntervalRep,
    VertexGraph,
    induced_graph,
    intersect_graphs,
    rep_from_jsonable,
    rep_to_jsonable,
    swap_sides,
    to_unit_cubes,
    vertex_key,
)
from cuberep.intervals import bit_dim_tag, parse_vertex_key, random_dim_tag

VERTS = [(SIDE_A, 1), (SIDE_A, 2), (SIDE_B, 1), (SIDE_B, 2)]


@st.composite
def placements(draw, vertices=tuple(VERTS), lo=-20, hi=20):
    return {v: draw(st.integers(lo, hi)) for v in vertices}


@st.composite
def unit_interval_reps(draw):
    return UnitIntervalRep(draw(placements()), draw(st.integers(1, 10)))


@st.composite
def vertex_graphs(draw, vertices=tuple(VERTS)):
    pairs = [frozenset(p) for p in all_pairs(vertices)]
    edges = draw(st.sets(st.sampled_from(pairs)))
    return VertexGraph(frozenset(vertices), frozenset(edges))


class TestUnitIntervalRep:
    def test_threshold_must_be_positive_integer(self):
        with pytest.raises(ValueError):
            UnitIntervalRep({(SIDE_A, 1): 0}, 0)
        with pytest.raises(ValueError):
            UnitIntervalRep({(SIDE_A, 1): 0}, -3)

    def test_placements_must_be_integers(self):
        with pytest.raises(ValueError):
            UnitIntervalRep({(SIDE_A, 1): 0.5}, 1)

    def test_adjacency_is_closed(self):
        rep = UnitIntervalRep({(SIDE_A, 1): 0, (SIDE_B, 1): 4, (SIDE_B, 2): 5}, 4)
        # distance exactly the threshold counts as adjacent
        assert rep.adjacent((SIDE_A, 1), (SIDE_B, 1))
        assert not rep.adjacent((SIDE_A, 1), (SIDE_B, 2))


class TestInducedGraph:
    def test_bit_pattern_example(self):
        # Two side-A vertices at 0/2 and one side-B vertex at 1, threshold 1:
        # the A pair is separated, both cross pairs stay.
        rep = UnitIntervalRep({(SIDE_A, 1): 2, (SIDE_A, 2): 0, (SIDE_B, 1): 1}, 1)
        graph = induced_graph(rep, [(SIDE_A, 1), (SIDE_A, 2), (SIDE_B, 1)])
        assert not graph.has_edge((SIDE_A, 1), (SIDE_A, 2))
        assert graph.has_edge((SIDE_A, 1), (SIDE_B, 1))
        assert graph.has_edge((SIDE_A, 2), (SIDE_B, 1))

    def test_missing_placement_rejected(self):
        rep = UnitIntervalRep({(SIDE_A, 1): 0}, 1)
        with pytest.raises(ValueError, match="no placement"):
            induced_graph(rep, [(SIDE_A, 1), (SIDE_B, 1)])

    @settings(max_examples=120, deadline=None)
    @given(unit_interval_reps())
    def test_matches_pairwise_adjacency(self, rep):
        graph = induced_graph(rep, VERTS)
        for u, v in all_pairs(VERTS):
            assert graph.has_edge(u, v) == rep.adjacent(u, v)
            assert graph.has_edge(u, v) == graph.has_edge(v, u)
        for v in VERTS:
            assert not graph.has_edge(v, v)


class TestIntersectGraphs:
    def test_single_operand_identity(self):
        g = VertexGraph(frozenset(VERTS), frozenset({frozenset(p) for p in all_pairs(VERTS)}))
        assert intersect_graphs([g]) == g

    def test_complete_is_identity_element(self):
        complete = VertexGraph(
            frozenset(VERTS), frozenset({frozenset(p) for p in all_pairs(VERTS)}))
        some = VertexGraph(
            frozenset(VERTS), frozenset({frozenset((VERTS[0], VERTS[2]))}))
        assert intersect_graphs([complete, some]) == some

    def test_mismatched_vertices_rejected(self):
        g1 = VertexGraph(frozenset(VERTS), frozenset())
        g2 = VertexGraph(frozenset(VERTS[:2]), frozenset())
        with pytest.raises(ValueError, match="vertex sets differ"):
            intersect_graphs([g1, g2])

    def test_empty_list_rejected(self):
        with pytest.raises(ValueError):
            intersect_graphs([])

    @settings(max_examples=100, deadline=None)
    @given(vertex_graphs(), vertex_graphs(), vertex_graphs())
    def test_algebraic_laws(self, g1, g2, g3):
        assert intersect_graphs([g1, g2]) == intersect_graphs([g2, g1])
        assert intersect_graphs([g1, g1]) == g1
        left = intersect_graphs([intersect_graphs([g1, g2]), g3])
        right = intersect_graphs([g1, intersect_graphs([g2, g3])])
        assert left == right == intersect_graphs([g1, g2, g3])


def two_dim_rep() -> CubeRepresentation:
    dim1 = UnitIntervalRep({(SIDE_A, 1): 1, (SIDE_B, 1): 5}, 4)
    dim2 = UnitIntervalRep({(SIDE_A, 1): 0, (SIDE_B, 1): 1}, 1)
    return CubeRepresentation(1, 1, (dim1, dim2), (random_dim_tag(1), bit_dim_tag(SIDE_B, 1)))


class TestCubeRepresentation:
    def test_provenance_arity_enforced(self):
        dim = UnitIntervalRep({(SIDE_A, 1): 0, (SIDE_B, 1): 1}, 1)
        with pytest.raises(ValueError):
            CubeRepresentation(1, 1, (dim,), ())

    def test_vertices_ordered(self):
        rep = two_dim_rep()
        assert rep.dimension == 2
        assert rep.vertices() == [(SIDE_A, 1), (SIDE_B, 1)]


class TestToUnitCubes:
    def test_quarter_scaling_example(self):
        # placement 1 with threshold 4 becomes [1/4, 5/4]; placement 5 becomes
        # [5/4, 9/4]; the intervals touch, matching |5 - 1| <= 4.
        cubes = to_unit_cubes(two_dim_rep())
        assert cubes[(SIDE_A, 1)][0] == (Fraction(1, 4), Fraction(5, 4))
        assert cubes[(SIDE_B, 1)][0] == (Fraction(5, 4), Fraction(9, 4))

    def test_lowest_terms(self):
        rep = CubeRepresentation(
            1, 1,
            (UnitIntervalRep({(SIDE_A, 1): 2, (SIDE_B, 1): 6}, 4),),
            (random_dim_tag(1),))
        cubes = to_unit_cubes(rep)
        lo = cubes[(SIDE_A, 1)][0][0]
        assert (lo.numerator, lo.denominator) == (1, 2)

    @settings(max_examples=120, deadline=None)
    @given(st.lists(unit_interval_reps(), min_size=1, max_size=4))
    def test_cube_overlap_equals_threshold_adjacency(self, dims):
        rep = CubeRepresentation(
            2, 2, tuple(dims), tuple(random_dim_tag(i + 1) for i in range(len(dims))))
        cubes = to_unit_cubes(rep)
        for u, v in all_pairs(VERTS):
            overlap = all(
                ulo <= vhi and vlo <= uhi
                for (ulo, uhi), (vlo, vhi) in zip(cubes[u], cubes[v]))
            threshold_adjacent = all(dim.adjacent(u, v) for dim in dims)
            assert overlap == threshold_adjacent


class TestSwapSides:
    def test_relabels_and_swaps_tags(self):
        rep = two_dim_rep()
        swapped = swap_sides(rep)
        assert swapped.a_count == rep.b_count and swapped.b_count == rep.a_count
        assert swapped.dims[0].placement == {(SIDE_B, 1): 1, (SIDE_A, 1): 5}
        assert swapped.provenance == (random_dim_tag(1), bit_dim_tag(SIDE_A, 1))

    def test_involution(self):
        rep = two_dim_rep()
        assert swap_sides(swap_sides(rep)) == rep


class TestDumpPayload:
    def test_vertex_key_round_trip(self):
        for v in [(SIDE_A, 1), (SIDE_B, 17)]:
            assert parse_vertex_key(vertex_key(v)) == v
        for bad in ["C1", "A0", "A", "Ax", "1A", ""]:
            with pytest.raises(ValueError):
                parse_vertex_key(bad)

    def test_jsonable_round_trip(self):
        rep = two_dim_rep()
        payload = rep_to_jsonable(rep)
        assert payload["cubes"]["A1"][0] == ["1/4", "5/4"]
        assert rep_from_jsonable(payload) == rep

    @pytest.mark.parametrize("mangle", [
        lambda p: p.pop("dims"),
        lambda p: p.update(a_count="x"),
        lambda p: p["dims"][0].pop("placement"),
        lambda p: p["dims"][0].update(threshold=0),
        lambda p: p["dims"][0]["placement"].update(A9=1),
        lambda p: p["dims"][0]["placement"].update(A1=1.5),
    ])
    def test_malformed_payload_rejected(self, mangle):
        payload = rep_to_jsonable(two_dim_rep())
        mangle(payload)
        with pytest.raises(ValueError):
            rep_from_jsonable(payload)
