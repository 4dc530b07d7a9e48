from __future__ import annotations

from levelslope import Drawing, LevelGraph, add_boundaries


def lg(num_levels: int, orders: dict[int, tuple[str, ...]], edges: tuple[tuple[str, str], ...] = ()) -> LevelGraph:
    """Build a LevelGraph from per-level orders; levels derive from the orders."""
    level = {v: lvl for lvl, seq in orders.items() for v in seq}
    return LevelGraph(num_levels, level, {lvl: tuple(seq) for lvl, seq in orders.items()}, tuple(edges))


def diamond() -> LevelGraph:
    return lg(3, {1: ("u",), 2: ("a", "b"), 3: ("w",)}, (("u", "a"), ("u", "b"), ("a", "w"), ("b", "w")))


def single_edge() -> LevelGraph:
    return lg(2, {1: ("a",), 2: ("b",)}, (("a", "b"),))


def fan_out(children: int) -> LevelGraph:
    kids = tuple(f"v{i}" for i in range(1, children + 1))
    return lg(2, {1: ("u",), 2: kids}, tuple(("u", kid) for kid in kids))


def fan_in(parents: int) -> LevelGraph:
    tops = tuple(f"v{i}" for i in range(1, parents + 1))
    return lg(2, {1: tops, 2: ("u",)}, tuple((top, "u") for top in tops))


def drawing(g: LevelGraph, **x: int) -> Drawing:
    return Drawing(g, x)


def canonical_augment(g: LevelGraph, d: Drawing) -> tuple[LevelGraph, object, Drawing]:
    """Extend a drawing of g by vertical boundary paths one column outside the
    occupied range, anchored so the level-1 east boundary vertex sits at 0."""
    aug, b = add_boundaries(g)
    x = dict(d.x)
    if x:
        lo, hi = min(x.values()) - 1, max(x.values()) + 1
    else:
        lo, hi = 0, 1
    for lv in b.left_path:
        x[lv] = lo
    for rv in b.right_path:
        x[rv] = hi
    anchored = {v: c - hi for v, c in x.items()}
    return aug, b, Drawing(aug, anchored)
