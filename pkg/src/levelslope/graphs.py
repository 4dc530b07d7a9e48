"""Embedded level graphs and their straight-line grid drawings.

A level graph assigns every vertex to one of ``k`` horizontal levels; every
edge points from a lower level to a higher one.  An embedding fixes the
left-to-right order of the vertices on each level.  A drawing maps every
vertex to an integer x-coordinate; the y-coordinate is the vertex's level.

The drawing operations in this package require *proper* graphs (every edge
spans exactly one level).  ``subdivide_long_edges`` turns an arbitrary level
graph into a proper one.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Violation:
    code: str
    message: str
    items: tuple[str, ...] = ()


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def codes(self) -> set[str]:
        return {v.code for v in self.violations}

    def summary(self) -> str:
        if self.ok:
            return "ok"
        return "; ".join(f"{v.code}: {v.message}" for v in self.violations)


@dataclass(frozen=True)
class LevelGraph:
    """Directed graph with a level assignment and per-level vertex orders.

    ``order`` maps every level in 1..num_levels to the left-to-right sequence
    of exactly the vertices assigned to that level.
    """

    num_levels: int
    level: dict[str, int]
    order: dict[int, tuple[str, ...]]
    edges: tuple[tuple[str, str], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "level", dict(self.level))
        object.__setattr__(
            self,
            "order",
            {lvl: tuple(self.order.get(lvl, ())) for lvl in range(1, self.num_levels + 1)},
        )
        object.__setattr__(self, "edges", tuple(sorted({(u, v) for u, v in self.edges})))

    @property
    def vertices(self) -> frozenset[str]:
        return frozenset(self.level)

    def positions(self) -> dict[str, int]:
        """Index of every vertex within its level's order."""
        pos: dict[str, int] = {}
        for seq in self.order.values():
            for i, v in enumerate(seq):
                pos[v] = i
        return pos

    def edge_length(self, edge: tuple[str, str]) -> int:
        u, v = edge
        return self.level[v] - self.level[u]

    def is_proper(self) -> bool:
        return all(self.edge_length(e) == 1 for e in self.edges)

    def span_edges(self, low_level: int) -> list[tuple[str, str]]:
        """Edges from ``low_level`` to the next level, west to east.

        Sorting by (tail position, head position) is the planar left-to-right
        order; ties on the tail happen only for edges sharing that tail.
        """
        pos = self.positions()
        span = [e for e in self.edges if self.level[e[0]] == low_level]
        span.sort(key=lambda e: (pos[e[0]], pos[e[1]]))
        return span

    def consecutive_pairs(self) -> list[tuple[int, int]]:
        """All (level, position) pairs of horizontally adjacent vertices."""
        pairs = []
        for lvl in range(1, self.num_levels + 1):
            for p in range(len(self.order[lvl]) - 1):
                pairs.append((lvl, p))
        return pairs


@dataclass(frozen=True)
class Drawing:
    """Integer x-coordinate per vertex of ``graph``."""

    graph: LevelGraph
    x: dict[str, int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", dict(self.x))

    @property
    def width(self) -> int:
        if not self.x:
            return 0
        return max(self.x.values()) - min(self.x.values())

    def translated(self, dx: int) -> "Drawing":
        return Drawing(self.graph, {v: c + dx for v, c in self.x.items()})

    def normalized(self) -> "Drawing":
        """Translate so the smallest x-coordinate becomes 0."""
        if not self.x:
            return self
        return self.translated(-min(self.x.values()))


@dataclass(frozen=True)
class BoundaryInfo:
    """The two monotone paths added west and east of a graph, one vertex per level."""

    left_path: tuple[str, ...]
    right_path: tuple[str, ...]

    @property
    def v_right(self) -> str:
        """The level-1 vertex of the right path; the anchor for labelings."""
        return self.right_path[0]

    @property
    def vertices(self) -> frozenset[str]:
        return frozenset(self.left_path) | frozenset(self.right_path)


def width_bound(slopes: int, n: int) -> int:
    """Largest possible width of a compact drawing of an n-vertex graph.

    Consecutive occupied columns differ by at most max(1, slopes - 1): an
    empty column must be crossed by an edge, whose x-extent is at most
    slopes - 1, and the edge's endpoints sit on occupied columns.
    """
    return max(1, slopes - 1) * max(0, n - 1)


def validate(g: LevelGraph, require_proper: bool = False) -> ValidationReport:
    """Check every structural invariant of a level graph.

    With ``require_proper``, edges spanning two or more levels are reported
    as NonProperEdge.  Edges that do not point strictly upward are always
    reported (no subdivision can repair them).
    """
    violations: list[Violation] = []

    if g.num_levels < 0:
        violations.append(Violation("LevelOutOfRange", "negative level count", (str(g.num_levels),)))
    for v, lvl in sorted(g.level.items()):
        if not 1 <= lvl <= g.num_levels:
            violations.append(
                Violation("LevelOutOfRange", f"vertex {v!r} has level {lvl}, expected 1..{g.num_levels}", (v,))
            )

    seen: dict[str, int] = {}
    for lvl in range(1, g.num_levels + 1):
        for v in g.order.get(lvl, ()):
            if v in seen:
                violations.append(
                    Violation("DuplicateVertex", f"vertex {v!r} appears in the orders of levels {seen[v]} and {lvl}", (v,))
                )
                continue
            seen[v] = lvl
            if v not in g.level:
                violations.append(Violation("OrderMismatch", f"order of level {lvl} lists unknown vertex {v!r}", (v,)))
            elif g.level[v] != lvl:
                violations.append(
                    Violation("OrderMismatch", f"vertex {v!r} has level {g.level[v]} but sits in the order of level {lvl}", (v,))
                )
    for v in sorted(g.level):
        if v not in seen and 1 <= g.level.get(v, 0) <= g.num_levels:
            violations.append(Violation("OrderMismatch", f"vertex {v!r} missing from the order of level {g.level[v]}", (v,)))

    for u, v in g.edges:
        for end in (u, v):
            if end not in g.level:
                violations.append(Violation("OrderMismatch", f"edge ({u!r}, {v!r}) references unknown vertex {end!r}", (u, v)))
    well_formed = {e for e in g.edges if e[0] in g.level and e[1] in g.level}
    for u, v in g.edges:
        if (u, v) not in well_formed:
            continue
        length = g.edge_length((u, v))
        if length < 1:
            violations.append(
                Violation("NonProperEdge", f"edge ({u!r}, {v!r}) does not point to a higher level (length {length})", (u, v))
            )
        elif length > 1 and require_proper:
            violations.append(Violation("NonProperEdge", f"edge ({u!r}, {v!r}) has length {length}", (u, v)))

    pos = g.positions()
    placed = {e for e in well_formed if e[0] in pos and e[1] in pos and g.edge_length(e) >= 1}
    by_span: dict[tuple[int, int], list[tuple[str, str]]] = {}
    for e in sorted(placed):
        by_span.setdefault((g.level[e[0]], g.level[e[1]]), []).append(e)
    for span in sorted(by_span):
        edges = by_span[span]
        for i, (u, w) in enumerate(edges):
            for v, x in edges[i + 1 :]:
                if (pos[u] - pos[v]) * (pos[w] - pos[x]) < 0:
                    violations.append(
                        Violation(
                            "EmbeddingCrossing",
                            f"edges ({u!r}, {w!r}) and ({v!r}, {x!r}) cross in the given embedding",
                            (u, w, v, x),
                        )
                    )
    return ValidationReport(tuple(violations))


def fresh_names(base: str, count: int, taken: frozenset[str] | set[str]) -> list[str]:
    """Deterministic vertex names ``base1..baseN`` avoiding ``taken``."""
    prefix = base
    while any(f"{prefix}{i}" in taken for i in range(1, count + 1)):
        prefix = "_" + prefix
    return [f"{prefix}{i}" for i in range(1, count + 1)]


def add_boundaries(
    g: LevelGraph,
    left_base: str = "__l",
    right_base: str = "__r",
    avoid: frozenset[str] = frozenset(),
) -> tuple[LevelGraph, BoundaryInfo]:
    """Insert a west and an east boundary path, one vertex per level.

    The boundary vertices become the extreme vertices of every level and are
    connected into two monotone chains of length-1 edges.  ``avoid`` adds
    extra names the fresh vertices must not collide with.
    """
    taken = g.vertices | set(avoid)
    k = max(g.num_levels, 1)
    left = fresh_names(left_base, k, taken)
    right = fresh_names(right_base, k, taken | set(left))

    level = dict(g.level)
    order: dict[int, tuple[str, ...]] = {}
    for i in range(1, k + 1):
        lv, rv = left[i - 1], right[i - 1]
        level[lv] = i
        level[rv] = i
        order[i] = (lv,) + tuple(g.order.get(i, ())) + (rv,)
    edges = list(g.edges)
    for i in range(k - 1):
        edges.append((left[i], left[i + 1]))
    for i in range(k - 1):
        edges.append((right[i], right[i + 1]))
    aug = LevelGraph(k, level, order, tuple(edges))
    return aug, BoundaryInfo(tuple(left), tuple(right))


def strip_boundaries(d: Drawing, b: BoundaryInfo) -> Drawing:
    """Restrict a drawing of a boundary-augmented graph to the original vertices."""
    g = d.graph
    drop = b.vertices
    level = {v: lvl for v, lvl in g.level.items() if v not in drop}
    order = {lvl: tuple(v for v in seq if v not in drop) for lvl, seq in g.order.items()}
    edges = tuple(e for e in g.edges if e[0] not in drop and e[1] not in drop)
    core = LevelGraph(g.num_levels, level, order, edges)
    return Drawing(core, {v: c for v, c in d.x.items() if v not in drop})


def find_gaps(d: Drawing) -> list[int]:
    """All integer columns strictly inside the drawing that no vertex occupies
    and no edge crosses.  Empty exactly when the drawing is compact."""
    if len(d.x) < 2:
        return []
    occupied = set(d.x.values())
    lo, hi = min(occupied), max(occupied)
    gaps = []
    for c in range(lo + 1, hi):
        if c in occupied:
            continue
        if any(min(d.x[u], d.x[v]) < c < max(d.x[u], d.x[v]) for u, v in d.graph.edges):
            continue
        gaps.append(c)
    return gaps


def remove_gaps(d: Drawing) -> Drawing:
    """Shift everything east of each gap westward until no gap remains.

    No edge spans a gap, so both endpoints of every edge move together and
    all slopes are preserved.  The minimum x-coordinate stays fixed.
    """
    gaps = find_gaps(d)
    if not gaps:
        return d
    new_x = {v: c - sum(1 for gp in gaps if gp < c) for v, c in d.x.items()}
    return Drawing(d.graph, new_x)


def check_drawing(g: LevelGraph, d: Drawing, slopes: int) -> ValidationReport:
    """Check that ``d`` is an embedding-preserving grid drawing of the proper
    graph ``g`` whose edge slopes all lie in {0, ..., slopes - 1}.

    For proper graphs, straight-line edges between consecutive levels cannot
    pass through other vertices once per-level x-coordinates are distinct, so
    no separate overlap test is needed.
    """
    violations: list[Violation] = []
    for v in sorted(g.level):
        if v not in d.x:
            violations.append(Violation("MissingCoordinate", f"vertex {v!r} has no x-coordinate", (v,)))
        elif not isinstance(d.x[v], int):
            violations.append(Violation("MissingCoordinate", f"vertex {v!r} has non-integer x {d.x[v]!r}", (v,)))
    if violations:
        return ValidationReport(tuple(violations))

    for lvl in range(1, g.num_levels + 1):
        seq = g.order[lvl]
        xs = [d.x[v] for v in seq]
        if len(set(xs)) != len(xs):
            violations.append(Violation("XCollision", f"level {lvl} places two vertices on the same column", tuple(seq)))
            continue
        if xs != sorted(xs):
            violations.append(
                Violation("OrderMismatch", f"x-coordinates on level {lvl} do not follow the embedding order", tuple(seq))
            )

    for u, v in g.edges:
        slope = d.x[v] - d.x[u]
        if not 0 <= slope <= slopes - 1:
            violations.append(
                Violation("SlopeOutOfRange", f"edge ({u!r}, {v!r}) has slope {slope}, allowed 0..{slopes - 1}", (u, v))
            )

    for lvl in range(1, g.num_levels):
        span = g.span_edges(lvl)
        for i, (u, w) in enumerate(span):
            for v, z in span[i + 1 :]:
                if (d.x[u] - d.x[v]) * (d.x[w] - d.x[z]) < 0:
                    violations.append(
                        Violation("EmbeddingCrossing", f"edges ({u!r}, {w!r}) and ({v!r}, {z!r}) cross", (u, w, v, z))
                    )
    return ValidationReport(tuple(violations))


def subdivide_long_edges(
    g: LevelGraph,
    position_hints: dict[tuple[tuple[str, str], int], int] | None = None,
) -> tuple[LevelGraph, dict[tuple[str, str], tuple[tuple[str, str], ...]]]:
    """Replace every edge of length >= 2 by a chain of length-1 edges.

    Each subdivision vertex needs a position inside its level's order.  A
    hint maps (original edge, level) to an insertion index; without one the
    vertex goes immediately west of the first existing vertex whose incoming
    edge lies east of the subdivided edge at that level, and east of
    everything when no such vertex exists.

    Returns the proper graph and a map from each subdivided edge to its
    replacement path.
    """
    hints = position_hints or {}
    level = dict(g.level)
    orders = {lvl: list(g.order.get(lvl, ())) for lvl in range(1, g.num_levels + 1)}
    working: list[tuple[str, str]] = [e for e in g.edges if g.edge_length(e) == 1]
    mapping: dict[tuple[str, str], tuple[tuple[str, str], ...]] = {}

    taken = set(g.level)
    counter = 0
    for edge in g.edges:
        if g.edge_length(edge) <= 1:
            continue
        u, v = edge
        prev = u
        path: list[tuple[str, str]] = []
        for lvl in range(g.level[u] + 1, g.level[v]):
            counter += 1
            (node,) = fresh_names(f"__s{counter}_", 1, frozenset(taken))
            taken.add(node)
            level[node] = lvl
            idx = hints.get((edge, lvl))
            if idx is None:
                idx = _default_insertion(orders, level, working, lvl, prev)
            orders[lvl].insert(idx, node)
            path.append((prev, node))
            working.append((prev, node))
            prev = node
        path.append((prev, v))
        working.append((prev, v))
        mapping[edge] = tuple(path)

    proper = LevelGraph(g.num_levels, level, {lvl: tuple(seq) for lvl, seq in orders.items()}, tuple(working))
    return proper, mapping


def _default_insertion(
    orders: dict[int, list[str]],
    level: dict[str, int],
    working: list[tuple[str, str]],
    lvl: int,
    prev: str,
) -> int:
    pos_below = {v: i for i, v in enumerate(orders[lvl - 1])}
    prev_pos = pos_below[prev]
    for idx, w in enumerate(orders[lvl]):
        anchors = [pos_below[a] for a, b in working if b == w and level[a] == lvl - 1 and a in pos_below]
        if anchors and min(anchors) > prev_pos:
            return idx
    return len(orders[lvl])
