from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from levelslope import (
    DistanceGraph,
    DistEdge,
    Drawing,
    Infeasible,
    Labeling,
    NegativeCycleWitness,
    add_boundaries,
    build_distance_graph,
    check_drawing,
    dump_distance_graph,
    enumerate_drawings,
    find_gaps,
    rightmost_drawing,
    shortest_labeling,
    verify_labeling,
    width_bound,
)

from conftest import diamond, fan_in, fan_out, lg, single_edge
from strategies import level_graphs


def augmented(g, slopes):
    aug, b = add_boundaries(g)
    return aug, b, build_distance_graph(aug, slopes)


class TestBuild:
    def test_edge_lengths_per_slope_count(self):
        aug, _, dg = augmented(single_edge(), 3)
        ups = [e for e in dg.edges if e.kind == "slope_up"]
        downs = [e for e in dg.edges if e.kind == "slope_down"]
        rows = [e for e in dg.edges if e.kind == "same_level"]
        assert {e.length for e in ups} == {2}
        assert {e.length for e in downs} == {0}
        assert {e.length for e in rows} == {-1}
        assert len(ups) == len(downs) == len(aug.edges)
        assert len(rows) == 2 * 2

    def test_single_slope_forces_vertical(self):
        _, _, dg = augmented(single_edge(), 1)
        assert {e.length for e in dg.edges if e.kind == "slope_up"} == {0}

    def test_two_slopes_lengths_match_unit_steps(self):
        _, _, dg = augmented(diamond(), 2)
        assert {e.length for e in dg.edges if e.kind == "slope_up"} == {1}

    def test_source_is_level_one_east_boundary(self):
        aug, b, dg = augmented(diamond(), 2)
        assert dg.source == b.v_right
        assert aug.order[1][-1] == b.v_right

    def test_same_level_edges_point_west(self):
        aug, _, dg = augmented(lg(1, {1: ("a", "b")}), 2)
        rows = [(e.tail, e.head) for e in dg.edges if e.kind == "same_level"]
        pos = aug.positions()
        assert all(pos[t] == pos[h] + 1 for t, h in rows)

    def test_rejects_nonpositive_slope_count(self):
        aug, _ = add_boundaries(single_edge())
        with pytest.raises(ValueError):
            build_distance_graph(aug, 0)

    def test_dump_is_deterministic(self):
        _, _, dg = augmented(diamond(), 2)
        _, _, dg2 = augmented(diamond(), 2)
        assert dump_distance_graph(dg) == dump_distance_graph(dg2)
        assert dump_distance_graph(dg).startswith("source ")


class TestShortestLabeling:
    def test_single_edge_labels_by_hand(self):
        aug, b, dg = augmented(single_edge(), 2)
        labeling = shortest_labeling(dg)
        assert isinstance(labeling, Labeling)
        left, right = b.left_path, b.right_path
        assert labeling.x == {
            right[0]: 0,
            right[1]: 1,
            "b": 0,
            "a": -1,
            left[0]: -2,
            left[1]: -1,
        }

    def test_labeling_verifies_and_is_tight(self):
        _, _, dg = augmented(diamond(), 2)
        labeling = shortest_labeling(dg)
        assert verify_labeling(dg, labeling).ok
        incoming = {v: [] for v in dg.vertices}
        for e in dg.edges:
            incoming[e.head].append(e)
        for v in dg.vertices:
            if v == dg.source:
                continue
            assert any(labeling.x[v] == labeling.x[e.tail] + e.length for e in incoming[v])

    def test_overloaded_vertex_gives_witness(self):
        for slopes in (1, 2, 3):
            _, _, dg = augmented(fan_out(slopes + 1), slopes)
            result = shortest_labeling(dg)
            assert isinstance(result, NegativeCycleWitness)
            assert result.total < 0

    def test_witness_is_closed_walk(self):
        _, _, dg = augmented(fan_out(3), 2)
        witness = shortest_labeling(dg)
        cycle = witness.cycle
        for e, nxt in zip(cycle, cycle[1:] + cycle[:1]):
            assert e.head == nxt.tail

    def test_unreachable_vertex_rejected(self):
        dg = DistanceGraph(("a", "b"), (DistEdge("a", "b", 1, "constraint"),), "b")
        with pytest.raises(ValueError):
            shortest_labeling(dg)

    def test_labels_independent_of_edge_order(self):
        _, _, dg = augmented(diamond(), 2)
        reordered = DistanceGraph(dg.vertices, tuple(reversed(dg.edges)), dg.source)
        a = shortest_labeling(dg)
        b = shortest_labeling(reordered)
        assert a.x == b.x


class TestVerifyLabeling:
    def test_violated_row_edge_itemized(self):
        _, _, dg = augmented(lg(1, {1: ("a", "b")}), 2)
        labeling = shortest_labeling(dg)
        broken = dict(labeling.x)
        broken["a"] = broken["b"]
        report = verify_labeling(dg, Labeling(broken))
        assert "ConstraintViolated" in report.codes()

    def test_missing_label(self):
        _, _, dg = augmented(single_edge(), 2)
        assert "MissingLabel" in verify_labeling(dg, Labeling({})).codes()

    def test_anchor_must_be_zero(self):
        _, _, dg = augmented(single_edge(), 2)
        labeling = shortest_labeling(dg)
        shifted = Labeling({v: c + 1 for v, c in labeling.x.items()})
        assert "AnchorNotZero" in verify_labeling(dg, shifted).codes()

    def test_oracle_drawing_coordinates_are_labelings(self):
        g = diamond()
        aug, b, dg = augmented(g, 2)
        for d in enumerate_drawings(g, 2).drawings:
            x = dict(d.x)
            lo, hi = min(x.values()), max(x.values())
            for lv in b.left_path:
                x[lv] = lo - 1
            for rv in b.right_path:
                x[rv] = hi + 1
            anchored = {v: c - x[b.v_right] for v, c in x.items()}
            assert verify_labeling(dg, Labeling(anchored)).ok


class TestRightmost:
    def test_diamond_unique(self):
        d = rightmost_drawing(diamond(), 2)
        assert d.x == {"u": 0, "a": 0, "b": 1, "w": 1}

    def test_single_vertex(self):
        d = rightmost_drawing(lg(1, {1: ("a",)}), 3)
        assert d.x == {"a": 0}

    def test_fan_infeasible_with_witness(self):
        result = rightmost_drawing(fan_out(3), 2)
        assert isinstance(result, Infeasible)
        assert result.witness is not None and result.witness.total < 0

    def test_fan_in_infeasible(self):
        result = rightmost_drawing(fan_in(4), 3)
        assert isinstance(result, Infeasible)

    def test_invalid_graph_rejected(self):
        g = lg(3, {1: ("a",), 2: (), 3: ("b",)}, (("a", "b"),))
        with pytest.raises(ValueError):
            rightmost_drawing(g, 2)

    def test_output_compact_and_checked(self):
        g = lg(2, {1: ("a", "x"), 2: ("b", "y")}, (("a", "b"), ("x", "y")))
        d = rightmost_drawing(g, 3)
        assert find_gaps(d) == []
        assert check_drawing(g, d, 3).ok
        assert min(d.x.values()) == 0

    @settings(max_examples=40, deadline=None)
    @given(level_graphs(max_vertices=5))
    def test_rightmost_matches_oracle_feasibility(self, g):
        for slopes in (1, 2):
            engine = rightmost_drawing(g, slopes)
            oracle = enumerate_drawings(g, slopes)
            assert isinstance(engine, Drawing) == (oracle.count > 0)
            if isinstance(engine, Drawing):
                assert engine.width <= width_bound(slopes, len(g.level))


class TestLabelingDrawingEquivalence:
    @settings(max_examples=60, deadline=None)
    @given(level_graphs(max_vertices=4, max_levels=3), st.integers(1, 3), st.data())
    def test_labelings_are_exactly_drawings(self, g, slopes, data):
        # an anchored integer assignment satisfies the distance constraints
        # if and only if it is a valid slope-bounded drawing of the
        # boundary-augmented graph
        aug, b, dg = augmented(g, slopes)
        x = {v: data.draw(st.integers(-6, 6), label=v) for v in sorted(aug.level)}
        x[b.v_right] = 0
        as_labeling = verify_labeling(dg, Labeling(x)).ok
        as_drawing = check_drawing(aug, Drawing(aug, x), slopes).ok
        assert as_labeling == as_drawing
