"""Shortest-distance model for slope-bounded level drawings.

The distance graph of a boundary-augmented proper level graph has the same
vertex set and encodes every drawing constraint as an edge length:

* each graph edge (u, v) yields an upward edge (u, v) of length slopes - 1
  and a downward edge (v, u) of length 0, bounding the slope of (u, v);
* each pair of horizontally adjacent vertices yields an edge from the east
  vertex to the west vertex of length -1, keeping the embedding order and a
  gap of at least one column.

Labelings that satisfy every constraint are exactly the x-coordinate
assignments of valid drawings.  Shortest distances from the level-1 right
boundary vertex form the pointwise-maximal labeling: the rightmost drawing.
A reachable negative cycle certifies that no drawing exists.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import (
    BoundaryInfo,
    Drawing,
    LevelGraph,
    ValidationReport,
    Violation,
    add_boundaries,
    check_drawing,
    remove_gaps,
    strip_boundaries,
    validate,
    width_bound,
)

SLOPE_UP = "slope_up"
SLOPE_DOWN = "slope_down"
SAME_LEVEL = "same_level"
CONSTRAINT = "constraint"


@dataclass(frozen=True)
class DistEdge:
    tail: str
    head: str
    length: int
    kind: str


@dataclass(frozen=True)
class DistanceGraph:
    vertices: tuple[str, ...]
    edges: tuple[DistEdge, ...]
    source: str


@dataclass(frozen=True)
class Labeling:
    """Integer label per vertex; x(head) <= x(tail) + length on every edge."""

    x: dict[str, int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", dict(self.x))


@dataclass(frozen=True)
class NegativeCycleWitness:
    cycle: tuple[DistEdge, ...]

    @property
    def total(self) -> int:
        return sum(e.length for e in self.cycle)


@dataclass(frozen=True)
class Infeasible:
    """Definitive negative answer, normally carrying a negative-cycle certificate."""

    witness: NegativeCycleWitness | None = None
    reason: str = "negative cycle"


def build_distance_graph(g_aug: LevelGraph, slopes: int) -> DistanceGraph:
    """Distance graph of a boundary-augmented proper level graph.

    The source is the east boundary vertex of level 1, i.e. the last vertex
    in level 1's order.  Every vertex is reachable from it: the east boundary
    chain climbs the levels and the same-level edges walk west.
    """
    if slopes < 1:
        raise ValueError(f"slope count must be at least 1, got {slopes}")
    edges: list[DistEdge] = []
    for u, v in g_aug.edges:
        edges.append(DistEdge(u, v, slopes - 1, SLOPE_UP))
        edges.append(DistEdge(v, u, 0, SLOPE_DOWN))
    for lvl in range(1, g_aug.num_levels + 1):
        seq = g_aug.order[lvl]
        for p in range(len(seq) - 2, -1, -1):
            edges.append(DistEdge(seq[p + 1], seq[p], -1, SAME_LEVEL))
    source = g_aug.order[1][-1]
    return DistanceGraph(tuple(sorted(g_aug.vertices)), tuple(edges), source)


def shortest_labeling(d: DistanceGraph) -> Labeling | NegativeCycleWitness:
    """Single-source shortest distances from ``d.source`` with negative lengths.

    Queue-based relaxation in rounds; a vertex still improving after as many
    rounds as there are vertices lies on (or behind) a negative cycle, which
    is extracted by walking predecessor links.
    """
    n = len(d.vertices)
    adj: dict[str, list[DistEdge]] = {v: [] for v in d.vertices}
    for e in d.edges:
        adj[e.tail].append(e)

    dist: dict[str, int] = {d.source: 0}
    pred: dict[str, DistEdge] = {}
    frontier = {d.source}
    for _ in range(n):
        changed: set[str] = set()
        for u in sorted(frontier):
            du = dist[u]
            for e in adj[u]:
                nd = du + e.length
                if e.head not in dist or nd < dist[e.head]:
                    dist[e.head] = nd
                    pred[e.head] = e
                    changed.add(e.head)
        frontier = changed
        if not frontier:
            break
    if frontier:
        return _extract_cycle(min(frontier), pred, n)
    missing = [v for v in d.vertices if v not in dist]
    if missing:
        raise ValueError(f"vertices unreachable from {d.source!r}: {missing}")
    return Labeling(dist)


def _extract_cycle(start: str, pred: dict[str, DistEdge], n: int) -> NegativeCycleWitness:
    v = start
    for _ in range(n):
        v = pred[v].tail
    seen: dict[str, int] = {}
    chain: list[DistEdge] = []
    while v not in seen:
        seen[v] = len(chain)
        e = pred[v]
        chain.append(e)
        v = e.tail
    cycle = tuple(reversed(chain[seen[v] :]))
    witness = NegativeCycleWitness(cycle)
    if witness.total >= 0:
        raise RuntimeError(f"extracted cycle has non-negative total {witness.total}")
    return witness


def verify_labeling(d: DistanceGraph, labeling: Labeling) -> ValidationReport:
    violations: list[Violation] = []
    for v in d.vertices:
        if v not in labeling.x:
            violations.append(Violation("MissingLabel", f"vertex {v!r} has no label", (v,)))
    if violations:
        return ValidationReport(tuple(violations))
    if labeling.x.get(d.source) != 0:
        violations.append(
            Violation("AnchorNotZero", f"source {d.source!r} labeled {labeling.x.get(d.source)}, expected 0", (d.source,))
        )
    for e in d.edges:
        if labeling.x[e.head] > labeling.x[e.tail] + e.length:
            violations.append(
                Violation(
                    "ConstraintViolated",
                    f"{e.kind} edge ({e.tail!r}, {e.head!r}) of length {e.length}: "
                    f"{labeling.x[e.head]} > {labeling.x[e.tail]} + {e.length}",
                    (e.tail, e.head),
                )
            )
    return ValidationReport(tuple(violations))


def augmented_rightmost(
    g: LevelGraph, slopes: int
) -> tuple[LevelGraph, BoundaryInfo, DistanceGraph, Labeling | NegativeCycleWitness]:
    """Boundary-augment ``g`` and compute its shortest labeling."""
    g_aug, b = add_boundaries(g)
    dg = build_distance_graph(g_aug, slopes)
    return g_aug, b, dg, shortest_labeling(dg)


def rightmost_drawing(g: LevelGraph, slopes: int) -> Drawing | Infeasible:
    """The unique drawing placing every vertex as far east as possible,
    compacted and translated to start at x = 0, or Infeasible with a
    negative-cycle witness when no slope-bounded drawing exists."""
    report = validate(g, require_proper=True)
    if not report.ok:
        raise ValueError(f"invalid level graph: {report.summary()}")
    if slopes < 1:
        raise ValueError(f"slope count must be at least 1, got {slopes}")

    g_aug, b, _, result = augmented_rightmost(g, slopes)
    if isinstance(result, NegativeCycleWitness):
        return Infeasible(witness=result)
    drawing = remove_gaps(strip_boundaries(Drawing(g_aug, result.x), b).normalized())
    final = check_drawing(drawing.graph, drawing, slopes)
    if not final.ok:
        raise RuntimeError(f"rightmost drawing failed its own check: {final.summary()}")
    if drawing.width > width_bound(slopes, len(drawing.x)):
        raise RuntimeError(f"rightmost drawing exceeds the compact width bound: {drawing.width}")
    return drawing


def dump_distance_graph(d: DistanceGraph) -> str:
    """Deterministic one-line-per-edge listing, used by golden tests."""
    lines = [f"source {d.source}"]
    for e in d.edges:
        lines.append(f"{e.tail} {e.head} {e.length} {e.kind}")
    return "\n".join(lines) + "\n"
