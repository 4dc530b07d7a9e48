"""Circulation model for slope-bounded level drawings.

The flow network of a boundary-augmented proper level graph is a directed
dual that respects levels.  Every graph edge contributes a westward slope
arc whose flow is the edge's slope (demand 0, capacity slopes - 1); every
pair of horizontally adjacent vertices contributes an upward space arc whose
flow is the horizontal distance between them (demand 1, capacity bounded by
the compact width bound).  Face nodes between horizontally consecutive edges
are merged; leftover pure sources and sinks collapse into single nodes s and
t joined by an unbounded return arc.

Circulations of this network are in one-to-one correspondence with drawings:
the flow on an arc equals the x-distance between the faces on its two sides.
"""

from __future__ import annotations

from dataclasses import dataclass

from .distance import Infeasible, Labeling, build_distance_graph, shortest_labeling
from .graphs import (
    Drawing,
    LevelGraph,
    ValidationReport,
    Violation,
    check_drawing,
    width_bound,
)

SLOPE = "slope"
SPACE = "space"
RETURN = "return"

SOURCE = "s"
SINK = "t"


@dataclass(frozen=True)
class Arc:
    """``faces`` holds one graph vertex on each side of the arc (west, east
    for space arcs; bottom, top for slope arcs); the flow across the arc in
    the circulation dual to a drawing is x(faces[1]) - x(faces[0])."""

    tail: str
    head: str
    demand: int
    capacity: int | None
    kind: str
    dual: tuple
    faces: tuple[str, str]


@dataclass(frozen=True)
class FlowNetwork:
    nodes: tuple[str, ...]
    members: dict[str, tuple[str, ...]]
    arcs: tuple[Arc, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "members", dict(self.members))

    def slope_arc_index(self) -> dict[tuple[str, str], int]:
        return {(a.dual[1], a.dual[2]): i for i, a in enumerate(self.arcs) if a.kind == SLOPE}

    def space_arc_index(self) -> dict[tuple[int, int], int]:
        return {(a.dual[1], a.dual[2]): i for i, a in enumerate(self.arcs) if a.kind == SPACE}


@dataclass(frozen=True)
class Circulation:
    """Integral flow per arc, aligned with ``FlowNetwork.arcs``."""

    flows: tuple[int, ...]


def build_flow_network(g_aug: LevelGraph, slopes: int) -> FlowNetwork:
    """Construct the flow network of a boundary-augmented proper level graph.

    Between two horizontally consecutive edges e (west) and e' (east) of the
    same span lies one face node: it absorbs e's east side, e''s west side,
    the tops of the space arcs between their tails and the bottoms of the
    space arcs between their heads.  The east boundary side and the bottoms
    of level 1 merge into s; the west boundary side and the tops of the top
    level merge into t.
    """
    if slopes < 1:
        raise ValueError(f"slope count must be at least 1, got {slopes}")
    pos = g_aug.positions()
    k = g_aug.num_levels
    n = len(g_aug.level)
    space_cap = width_bound(slopes, n)

    spans: dict[int, list[tuple[str, str]]] = {s: g_aug.span_edges(s) for s in range(1, k)}

    def gap_node(span: int, j: int) -> str:
        return f"f{span}.{j}"

    def east_node(span: int, j: int) -> str:
        return gap_node(span, j) if j < len(spans[span]) - 1 else SOURCE

    def west_node(span: int, j: int) -> str:
        return gap_node(span, j - 1) if j > 0 else SINK

    def low_node(lvl: int, p: int) -> str:
        if lvl == 1:
            return SOURCE
        heads = [pos[e[1]] for e in spans[lvl - 1]]
        j = max(i for i, hp in enumerate(heads) if hp <= p)
        return gap_node(lvl - 1, j)

    def high_node(lvl: int, p: int) -> str:
        if lvl == k:
            return SINK
        tails = [pos[e[0]] for e in spans[lvl]]
        j = max(i for i, tp in enumerate(tails) if tp <= p)
        return gap_node(lvl, j)

    edge_slot: dict[tuple[str, str], tuple[int, int]] = {}
    for s, span in spans.items():
        for j, e in enumerate(span):
            edge_slot[e] = (s, j)

    arcs: list[Arc] = []
    for e in g_aug.edges:
        s, j = edge_slot[e]
        arcs.append(
            Arc(
                tail=east_node(s, j),
                head=west_node(s, j),
                demand=0,
                capacity=slopes - 1,
                kind=SLOPE,
                dual=(SLOPE, e[0], e[1]),
                faces=(e[0], e[1]),
            )
        )
    for lvl, p in g_aug.consecutive_pairs():
        west, east = g_aug.order[lvl][p], g_aug.order[lvl][p + 1]
        arcs.append(
            Arc(
                tail=low_node(lvl, p),
                head=high_node(lvl, p),
                demand=1,
                capacity=space_cap,
                kind=SPACE,
                dual=(SPACE, lvl, p),
                faces=(west, east),
            )
        )
    arcs.append(
        Arc(
            tail=SINK,
            head=SOURCE,
            demand=0,
            capacity=None,
            kind=RETURN,
            dual=(RETURN,),
            faces=(g_aug.order[1][0], g_aug.order[k][-1]),
        )
    )

    nodes = [SOURCE, SINK]
    members: dict[str, tuple[str, ...]] = {
        SOURCE: tuple(g_aug.order[1]) + tuple(g_aug.order[lvl][-1] for lvl in range(2, k + 1)),
        SINK: tuple(g_aug.order[k]) + tuple(g_aug.order[lvl][0] for lvl in range(1, k)),
    }
    for s in range(1, k):
        span = spans[s]
        for j in range(len(span) - 1):
            node = gap_node(s, j)
            nodes.append(node)
            (u, w), (v, x) = span[j], span[j + 1]
            bottom = g_aug.order[s][pos[u] : pos[v] + 1]
            top = g_aug.order[s + 1][pos[w] : pos[x] + 1]
            members[node] = tuple(bottom) + tuple(top)
    return FlowNetwork(tuple(nodes), members, tuple(arcs))


def verify_circulation(f: FlowNetwork, c: Circulation) -> ValidationReport:
    """Check demands, capacities and per-node flow conservation."""
    violations: list[Violation] = []
    if len(c.flows) != len(f.arcs):
        violations.append(
            Violation("MissingFlow", f"expected {len(f.arcs)} flow values, got {len(c.flows)}")
        )
        return ValidationReport(tuple(violations))
    balance: dict[str, int] = {node: 0 for node in f.nodes}
    for i, (arc, flow) in enumerate(zip(f.arcs, c.flows)):
        if flow < arc.demand:
            violations.append(
                Violation("DemandViolation", f"arc {i} ({arc.kind}) carries {flow} < demand {arc.demand}", (str(i),))
            )
        if arc.capacity is not None and flow > arc.capacity:
            violations.append(
                Violation("CapacityViolation", f"arc {i} ({arc.kind}) carries {flow} > capacity {arc.capacity}", (str(i),))
            )
        balance[arc.tail] -= flow
        balance[arc.head] += flow
    for node in f.nodes:
        if balance[node] != 0:
            violations.append(
                Violation("ConservationViolation", f"node {node} has net flow {balance[node]}", (node,))
            )
    return ValidationReport(tuple(violations))


def drawing_to_circulation(g_aug: LevelGraph, slopes: int, d: Drawing) -> Circulation:
    """The circulation dual to a drawing: each arc carries the x-distance
    between its east and west face representatives."""
    report = check_drawing(g_aug, d, slopes)
    if not report.ok:
        raise ValueError(f"not a valid drawing: {report.summary()}")
    network = build_flow_network(g_aug, slopes)
    return Circulation(tuple(d.x[a.faces[1]] - d.x[a.faces[0]] for a in network.arcs))


def circulation_to_drawing(g_aug: LevelGraph, slopes: int, c: Circulation) -> Drawing:
    """The drawing dual to a circulation.

    The east boundary vertex of level 1 is placed at x = 0; the east boundary
    chain is climbed using slope-arc flows, then every level is filled east
    to west by subtracting space-arc flows.
    """
    network = build_flow_network(g_aug, slopes)
    report = verify_circulation(network, c)
    if not report.ok:
        raise ValueError(f"not a valid circulation: {report.summary()}")
    slope_of = network.slope_arc_index()
    space_of = network.space_arc_index()

    x: dict[str, int] = {}
    right = [g_aug.order[lvl][-1] for lvl in range(1, g_aug.num_levels + 1)]
    x[right[0]] = 0
    for i in range(len(right) - 1):
        x[right[i + 1]] = x[right[i]] + c.flows[slope_of[(right[i], right[i + 1])]]
    for lvl in range(1, g_aug.num_levels + 1):
        seq = g_aug.order[lvl]
        for p in range(len(seq) - 2, -1, -1):
            x[seq[p]] = x[seq[p + 1]] - c.flows[space_of[(lvl, p)]]
    return Drawing(g_aug, x)


def find_circulation(g_aug: LevelGraph, slopes: int) -> Circulation | Infeasible:
    """A circulation exists exactly when a drawing does; computed through the
    shortest labeling of the dual distance graph rather than a flow solver."""
    result = shortest_labeling(build_distance_graph(g_aug, slopes))
    if not isinstance(result, Labeling):
        return Infeasible(witness=result)
    return drawing_to_circulation(g_aug, slopes, Drawing(g_aug, result.x))


def dump_flow_network(f: FlowNetwork) -> str:
    """Deterministic text listing of nodes and arcs, used by golden tests."""
    lines = []
    for node in f.nodes:
        lines.append(f"node {node} [{' '.join(f.members[node])}]")
    for a in f.arcs:
        cap = "inf" if a.capacity is None else str(a.capacity)
        dual = " ".join(str(part) for part in a.dual)
        lines.append(f"arc {a.tail} {a.head} demand={a.demand} capacity={cap} {dual}")
    return "\n".join(lines) + "\n"
