from __future__ import annotations

from hypothesis import given, settings

from levelslope import (
    Drawing,
    add_boundaries,
    check_drawing,
    find_gaps,
    remove_gaps,
    strip_boundaries,
    subdivide_long_edges,
    validate,
    width_bound,
)

from conftest import diamond, lg, single_edge
from strategies import level_graphs


class TestValidate:
    def test_minimal_proper_graph_ok(self):
        assert validate(single_edge(), require_proper=True).ok

    def test_length_two_edge_flagged_only_when_proper_required(self):
        g = lg(3, {1: ("a",), 2: (), 3: ("b",)}, (("a", "b"),))
        assert validate(g).ok
        report = validate(g, require_proper=True)
        assert report.codes() == {"NonProperEdge"}

    def test_downward_edge_always_flagged(self):
        g = lg(2, {1: ("a",), 2: ("b",)}, (("b", "a"),))
        assert "NonProperEdge" in validate(g).codes()

    def test_crossing_embedding(self):
        g = lg(2, {1: ("u", "v"), 2: ("x", "w")}, (("u", "w"), ("v", "x")))
        assert validate(g).codes() == {"EmbeddingCrossing"}

    def test_level_out_of_range(self):
        g = lg(1, {1: ("a",)})
        bad = type(g)(1, {"a": 0}, {1: ("a",)}, ())
        assert "LevelOutOfRange" in validate(bad).codes()

    def test_duplicate_vertex_across_orders(self):
        g = type(diamond())(2, {"a": 1}, {1: ("a",), 2: ("a",)}, ())
        assert "DuplicateVertex" in validate(g).codes()

    def test_vertex_missing_from_order(self):
        g = type(diamond())(1, {"a": 1, "b": 1}, {1: ("a",)}, ())
        assert "OrderMismatch" in validate(g).codes()

    def test_unknown_edge_endpoint(self):
        g = lg(2, {1: ("a",), 2: ("b",)}, (("a", "ghost"),))
        assert "OrderMismatch" in validate(g).codes()

    @settings(max_examples=60, deadline=None)
    @given(level_graphs())
    def test_generated_graphs_validate_and_are_pure(self, g):
        before = (dict(g.level), dict(g.order), tuple(g.edges))
        assert validate(g, require_proper=True).ok
        assert validate(g, require_proper=True).ok
        assert (dict(g.level), dict(g.order), tuple(g.edges)) == before


class TestSubdivide:
    def test_length_two_edge(self):
        g = lg(3, {1: ("a",), 2: ("m",), 3: ("b",)}, (("a", "b"),))
        proper, mapping = subdivide_long_edges(g)
        assert validate(proper, require_proper=True).ok
        path = mapping[("a", "b")]
        assert len(path) == 2
        assert path[0][0] == "a" and path[-1][1] == "b"
        assert len(proper.level) == len(g.level) + 1

    def test_proper_graph_unchanged(self):
        g = diamond()
        proper, mapping = subdivide_long_edges(g)
        assert proper == g
        assert mapping == {}

    def test_length_three_edge(self):
        g = lg(4, {1: ("a",), 2: (), 3: (), 4: ("b",)}, (("a", "b"),))
        proper, mapping = subdivide_long_edges(g)
        assert validate(proper, require_proper=True).ok
        assert len(mapping[("a", "b")]) == 3
        assert len(proper.level) == 4

    def test_path_reconstructs_edge(self):
        g = lg(4, {1: ("a",), 2: (), 3: (), 4: ("b",)}, (("a", "b"),))
        _, mapping = subdivide_long_edges(g)
        path = mapping[("a", "b")]
        for first, second in zip(path, path[1:]):
            assert first[1] == second[0]

    def test_position_hint_respected(self):
        g = lg(3, {1: ("a",), 2: ("m", "n"), 3: ("b",)}, (("a", "b"),))
        proper, mapping = subdivide_long_edges(g, position_hints={(("a", "b"), 2): 1})
        mid = mapping[("a", "b")][0][1]
        assert proper.order[2].index(mid) == 1

    def test_default_position_uses_anchors(self):
        # n hangs off p which is east of a, so the new vertex must land west of n
        g = lg(3, {1: ("a", "p"), 2: ("n",), 3: ("b", "q")}, (("a", "b"), ("p", "n"), ("n", "q")))
        proper, mapping = subdivide_long_edges(g)
        mid = mapping[("a", "b")][0][1]
        assert proper.order[2].index(mid) == 0
        assert validate(proper, require_proper=True).ok


class TestBoundaries:
    def test_empty_one_level_graph(self):
        g = lg(1, {1: ()})
        aug, b = add_boundaries(g)
        assert len(aug.level) == 2
        assert aug.edges == ()
        assert aug.order[1] == (b.left_path[0], b.right_path[0])

    def test_three_level_path(self):
        g = lg(3, {1: ("a",), 2: ("b",), 3: ("c",)}, (("a", "b"), ("b", "c")))
        aug, _ = add_boundaries(g)
        assert len(aug.level) == 3 + 6
        assert len(aug.edges) == 2 + 4

    def test_boundaries_extreme_on_every_level(self):
        g = diamond()
        aug, b = add_boundaries(g)
        for lvl in range(1, 4):
            assert aug.order[lvl][0] == b.left_path[lvl - 1]
            assert aug.order[lvl][-1] == b.right_path[lvl - 1]
        assert validate(aug, require_proper=True).ok

    def test_name_collision_avoided(self):
        g = lg(1, {1: ("__l1", "__r1")})
        aug, b = add_boundaries(g)
        assert len(aug.level) == 4
        assert b.left_path[0] not in g.vertices
        assert b.right_path[0] not in g.vertices

    def test_strip_add_round_trip(self):
        g = diamond()
        aug, b = add_boundaries(g)
        d = Drawing(aug, {v: i for i, v in enumerate(sorted(aug.level))})
        stripped = strip_boundaries(d, b)
        assert stripped.graph == g
        assert stripped.x == {v: d.x[v] for v in g.level}

    @settings(max_examples=40, deadline=None)
    @given(level_graphs())
    def test_round_trip_identity_on_generated(self, g):
        aug, b = add_boundaries(g)
        d = Drawing(aug, {v: 0 for v in aug.level})
        assert strip_boundaries(d, b).graph == g


class TestGaps:
    def test_isolated_vertices_with_gap(self):
        g = lg(1, {1: ("a", "b")})
        assert find_gaps(Drawing(g, {"a": 0, "b": 3})) == [1, 2]

    def test_adjacent_columns_no_gap(self):
        g = lg(1, {1: ("a", "b")})
        assert find_gaps(Drawing(g, {"a": 0, "b": 1})) == []

    def test_edge_covers_column(self):
        g = lg(2, {1: ("a",), 2: ("b",)}, (("a", "b"),))
        assert find_gaps(Drawing(g, {"a": 0, "b": 2})) == []

    def test_remove_gaps_shifts_left(self):
        g = lg(1, {1: ("a", "b")})
        out = remove_gaps(Drawing(g, {"a": 0, "b": 3}))
        assert out.x == {"a": 0, "b": 1}

    def test_remove_gaps_identity_on_compact(self):
        g = lg(1, {1: ("a", "b")})
        d = Drawing(g, {"a": 0, "b": 1})
        assert remove_gaps(d).x == d.x

    def test_two_width_one_components_gap_five_apart(self):
        # components {a,b} and {c,d}, each of width 1, with a five-column gap run
        g = lg(1, {1: ("a", "b", "c", "d")})
        out = remove_gaps(Drawing(g, {"a": 0, "b": 1, "c": 6, "d": 7}))
        assert out.width == 3
        assert find_gaps(out) == []
        assert out.x == {"a": 0, "b": 1, "c": 2, "d": 3}

    def test_stretched_drawing_recompacts_validly(self):
        g = lg(1, {1: ("a", "b", "c")})
        stretched = Drawing(g, {"a": 0, "b": 4, "c": 9})
        out = remove_gaps(stretched)
        assert find_gaps(out) == []
        assert check_drawing(g, out, 2).ok
        assert remove_gaps(out).x == out.x
        assert [out.x[v] for v in ("a", "b", "c")] == [0, 1, 2]


class TestCheckDrawing:
    def test_diamond_unique_drawing_ok(self):
        g = diamond()
        d = Drawing(g, {"u": 0, "a": 0, "b": 1, "w": 1})
        assert check_drawing(g, d, 2).ok

    def test_diamond_swapped_pair_order_mismatch(self):
        g = diamond()
        d = Drawing(g, {"u": 0, "a": 1, "b": 0, "w": 1})
        assert "OrderMismatch" in check_drawing(g, d, 2).codes()

    def test_slope_out_of_range(self):
        g = single_edge()
        d = Drawing(g, {"a": 0, "b": 2})
        assert "SlopeOutOfRange" in check_drawing(g, d, 2).codes()

    def test_negative_slope_rejected(self):
        g = single_edge()
        d = Drawing(g, {"a": 1, "b": 0})
        assert "SlopeOutOfRange" in check_drawing(g, d, 2).codes()

    def test_same_column_collision(self):
        g = lg(1, {1: ("a", "b")})
        assert "XCollision" in check_drawing(g, Drawing(g, {"a": 0, "b": 0}), 2).codes()

    def test_missing_coordinate(self):
        g = single_edge()
        assert "MissingCoordinate" in check_drawing(g, Drawing(g, {"a": 0}), 2).codes()


def test_width_bound_values():
    assert width_bound(2, 5) == 4
    assert width_bound(3, 5) == 8
    assert width_bound(1, 5) == 4
    assert width_bound(2, 1) == 0
    assert width_bound(4, 0) == 0
