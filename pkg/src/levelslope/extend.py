"""Extending immutable partial drawings and drawing two graphs simultaneously.

Both problems reduce to shortest labelings of constraint-augmented distance
graphs.  A partial drawing pins the offsets of the pre-drawn vertices to a
reference vertex through pairs of opposite constraint edges.  Simultaneous
drawings are found iteratively: as long as the rightmost drawings disagree
on a shared vertex, the graph placing it further east receives an upper
bound on that vertex and is recomputed; a negative cycle, or exhausting the
iteration budget, certifies infeasibility.
"""

from __future__ import annotations

from dataclasses import dataclass

from .distance import (
    CONSTRAINT,
    DistanceGraph,
    DistEdge,
    Infeasible,
    NegativeCycleWitness,
    build_distance_graph,
    rightmost_drawing,
    shortest_labeling,
)
from .graphs import (
    Drawing,
    LevelGraph,
    add_boundaries,
    check_drawing,
    strip_boundaries,
    validate,
    width_bound,
)


class MalformedInstance(ValueError):
    """The instance itself is inconsistent (as opposed to merely undrawable)."""


@dataclass(frozen=True)
class PartialInstance:
    """A graph, a subgraph of it, and an immutable drawing of the subgraph."""

    g: LevelGraph
    h_vertices: frozenset[str]
    h_edges: frozenset[tuple[str, str]]
    pi: dict[str, int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "h_vertices", frozenset(self.h_vertices))
        object.__setattr__(self, "h_edges", frozenset(self.h_edges))
        object.__setattr__(self, "pi", dict(self.pi))


@dataclass(frozen=True)
class SimultaneousInstance:
    """Two graphs identified on a shared subgraph by common vertex ids."""

    g1: LevelGraph
    g2: LevelGraph
    shared_vertices: frozenset[str]
    shared_edges: frozenset[tuple[str, str]]

    def __post_init__(self) -> None:
        object.__setattr__(self, "shared_vertices", frozenset(self.shared_vertices))
        object.__setattr__(self, "shared_edges", frozenset(self.shared_edges))


@dataclass(frozen=True)
class SimultaneousDrawings:
    """Result pair plus the constraints the iteration applied, in order.

    Each constraint entry is (graph index, vertex, enforced upper bound).
    """

    first: Drawing
    second: Drawing
    iterations: int
    constraints: tuple[tuple[int, str, int], ...] = ()


def induced_subgraph(g: LevelGraph, vertices: frozenset[str], edges: frozenset[tuple[str, str]]) -> LevelGraph:
    """The subgraph on ``vertices``/``edges`` with levels and orders from ``g``."""
    level = {v: g.level[v] for v in vertices}
    order = {lvl: tuple(v for v in seq if v in vertices) for lvl, seq in g.order.items()}
    return LevelGraph(g.num_levels, level, order, tuple(e for e in g.edges if e in edges))


def augment_with_constraint(d: DistanceGraph, tail: str, head: str, length: int) -> DistanceGraph:
    """Append one constraint edge x(head) <= x(tail) + length."""
    if tail not in d.vertices or head not in d.vertices:
        raise ValueError(f"constraint endpoints {tail!r}, {head!r} must be existing vertices")
    return DistanceGraph(d.vertices, d.edges + (DistEdge(tail, head, length, CONSTRAINT),), d.source)


def check_partial_instance(inst: PartialInstance, slopes: int) -> None:
    """Raise MalformedInstance unless the instance is internally consistent."""
    report = validate(inst.g, require_proper=True)
    if not report.ok:
        raise MalformedInstance(f"base graph invalid: {report.summary()}")
    stray = inst.h_vertices - inst.g.vertices
    if stray:
        raise MalformedInstance(f"subgraph vertices not in the graph: {sorted(stray)}")
    for e in sorted(inst.h_edges):
        if e not in set(inst.g.edges):
            raise MalformedInstance(f"subgraph edge {e} not in the graph")
        if e[0] not in inst.h_vertices or e[1] not in inst.h_vertices:
            raise MalformedInstance(f"subgraph edge {e} has an endpoint outside the subgraph")
    if set(inst.pi) != set(inst.h_vertices):
        raise MalformedInstance("pinned coordinates must cover exactly the subgraph vertices")
    h = induced_subgraph(inst.g, inst.h_vertices, inst.h_edges)
    if inst.h_vertices:
        report = check_drawing(h, Drawing(h, inst.pi), slopes)
        if not report.ok:
            raise MalformedInstance(f"pinned drawing is not a valid drawing of the subgraph: {report.summary()}")


def reference_vertex(h_vertices: frozenset[str], level: dict[str, int]) -> str:
    """Deterministic anchor: smallest id on the lowest occupied level."""
    lowest = min(level[v] for v in h_vertices)
    return min(v for v in h_vertices if level[v] == lowest)


def extend_partial(inst: PartialInstance, slopes: int) -> Drawing | Infeasible:
    """Drawing of the whole graph matching the pinned subgraph coordinates
    exactly, or Infeasible with a negative-cycle witness.

    Pinning works for disconnected subgraphs: every pinned vertex is tied to
    one reference vertex by a pair of opposite constraint edges fixing their
    offset, and the result is translated onto the pinned coordinates.
    """
    check_partial_instance(inst, slopes)
    if slopes < 1:
        raise ValueError(f"slope count must be at least 1, got {slopes}")
    if not inst.h_vertices:
        return rightmost_drawing(inst.g, slopes)

    g_aug, b = add_boundaries(inst.g)
    dg = build_distance_graph(g_aug, slopes)
    ref = reference_vertex(inst.h_vertices, inst.g.level)
    for v in sorted(inst.h_vertices - {ref}):
        offset = inst.pi[ref] - inst.pi[v]
        dg = augment_with_constraint(dg, v, ref, offset)
        dg = augment_with_constraint(dg, ref, v, -offset)

    result = shortest_labeling(dg)
    if isinstance(result, NegativeCycleWitness):
        return Infeasible(witness=result)
    drawing = strip_boundaries(Drawing(g_aug, result.x), b)
    drawing = drawing.translated(inst.pi[ref] - drawing.x[ref])
    for v in sorted(inst.h_vertices):
        if drawing.x[v] != inst.pi[v]:
            raise RuntimeError(f"extension moved pinned vertex {v!r}")
    final = check_drawing(drawing.graph, drawing, slopes)
    if not final.ok:
        raise RuntimeError(f"extension failed its own check: {final.summary()}")
    return drawing


def check_simultaneous_instance(inst: SimultaneousInstance) -> None:
    """Raise MalformedInstance unless the shared identification is consistent."""
    for name, g in (("first", inst.g1), ("second", inst.g2)):
        report = validate(g, require_proper=True)
        if not report.ok:
            raise MalformedInstance(f"{name} graph invalid: {report.summary()}")
    common = inst.g1.vertices & inst.g2.vertices
    if inst.shared_vertices != common:
        raise MalformedInstance(
            f"shared vertex set {sorted(inst.shared_vertices)} must equal the common ids {sorted(common)}"
        )
    common_edges = set(inst.g1.edges) & set(inst.g2.edges)
    if inst.shared_edges != common_edges:
        raise MalformedInstance(
            f"shared edge set {sorted(inst.shared_edges)} must equal the common edges {sorted(common_edges)}"
        )
    for v in sorted(inst.shared_vertices):
        if inst.g1.level[v] != inst.g2.level[v]:
            raise MalformedInstance(f"shared vertex {v!r} sits on levels {inst.g1.level[v]} and {inst.g2.level[v]}")
    for lvl in range(1, max(inst.g1.num_levels, inst.g2.num_levels) + 1):
        seq1 = [v for v in inst.g1.order.get(lvl, ()) if v in inst.shared_vertices]
        seq2 = [v for v in inst.g2.order.get(lvl, ()) if v in inst.shared_vertices]
        if seq1 != seq2:
            raise MalformedInstance(f"embeddings disagree on the shared vertices of level {lvl}: {seq1} vs {seq2}")


def _joint_compact(d1: Drawing, d2: Drawing) -> tuple[Drawing, Drawing]:
    """Translate to a common origin and drop every column unused by both."""
    coords = list(d1.x.values()) + list(d2.x.values())
    if not coords:
        return d1, d2
    shift = -min(coords)
    d1, d2 = d1.translated(shift), d2.translated(shift)

    support: set[int] = set()
    for d in (d1, d2):
        support.update(d.x.values())
        for u, v in d.graph.edges:
            lo, hi = sorted((d.x[u], d.x[v]))
            support.update(range(lo + 1, hi))
    top = max(support)
    unused = [c for c in range(top) if c not in support]

    def compact(d: Drawing) -> Drawing:
        return Drawing(d.graph, {v: c - sum(1 for g in unused if g < c) for v, c in d.x.items()})

    return compact(d1), compact(d2)


def simultaneous(inst: SimultaneousInstance, slopes: int) -> SimultaneousDrawings | Infeasible:
    """Drawings of both graphs that agree exactly on every shared vertex.

    Both graphs are augmented with the same east boundary, so their labelings
    share the anchor vertex.  Starting from the rightmost drawings, whenever
    a shared vertex differs the graph placing it further east gets an upper
    bound at the other graph's position and is relabeled; each round lowers
    some shared vertex by at least one, bounding the number of rounds.
    """
    check_simultaneous_instance(inst)
    if slopes < 1:
        raise ValueError(f"slope count must be at least 1, got {slopes}")

    union = inst.g1.vertices | inst.g2.vertices
    aug1, b1 = add_boundaries(inst.g1, left_base="__la", avoid=frozenset(union))
    aug2, b2 = add_boundaries(inst.g2, left_base="__lb", avoid=frozenset(union))
    if b1.v_right != b2.v_right:
        raise RuntimeError("boundary generation failed to share the east anchor")

    dgs = [build_distance_graph(aug1, slopes), build_distance_graph(aug2, slopes)]
    labels: list[dict[str, int]] = []
    for dg in dgs:
        result = shortest_labeling(dg)
        if isinstance(result, NegativeCycleWitness):
            return Infeasible(witness=result)
        labels.append(result.x)

    n_total = len(aug1.level) + len(aug2.level)
    budget = n_total * width_bound(slopes, n_total)
    iterations = 0
    applied: list[tuple[int, str, int]] = []
    shared = sorted(inst.shared_vertices)
    while True:
        differing = [v for v in shared if labels[0][v] != labels[1][v]]
        if not differing:
            break
        if iterations >= budget:
            return Infeasible(reason=f"no agreement within the iteration budget of {budget}")
        v = differing[0]
        loser = 0 if labels[0][v] > labels[1][v] else 1
        bound = labels[1 - loser][v]
        dgs[loser] = augment_with_constraint(dgs[loser], dgs[loser].source, v, bound)
        result = shortest_labeling(dgs[loser])
        if isinstance(result, NegativeCycleWitness):
            return Infeasible(witness=result)
        labels[loser] = result.x
        iterations += 1
        applied.append((loser + 1, v, bound))

    d1 = strip_boundaries(Drawing(aug1, labels[0]), b1)
    d2 = strip_boundaries(Drawing(aug2, labels[1]), b2)
    d1, d2 = _joint_compact(d1, d2)
    for v in shared:
        if d1.x[v] != d2.x[v]:
            raise RuntimeError(f"simultaneous drawings disagree on shared vertex {v!r}")
    for d in (d1, d2):
        final = check_drawing(d.graph, d, slopes)
        if not final.ok:
            raise RuntimeError(f"simultaneous drawing failed its own check: {final.summary()}")
    return SimultaneousDrawings(d1, d2, iterations, tuple(applied))
