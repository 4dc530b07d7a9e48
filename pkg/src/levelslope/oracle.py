"""Exhaustive ground truth for small instances.

Shares only the domain types with the solver: drawings are found by direct
search over integer x-assignments, level by level and west to east, pruning
on embedding order and slope range.  Completeness rests on the compact width
bound: a compact drawing of an n-vertex graph fits in [0, width_bound], and
partial extensions and simultaneous pairs fit in windows widened by the same
bound around the pinned coordinates.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .extend import (
    PartialInstance,
    SimultaneousInstance,
    check_partial_instance,
    check_simultaneous_instance,
)
from .graphs import Drawing, LevelGraph, find_gaps, validate, width_bound

DEFAULT_MAX_VERTICES = 10
MAX_VERTICES_ENV = "LEVELSLOPE_ORACLE_MAX_N"


class SizeGuardExceeded(ValueError):
    """Instance too large for exhaustive search."""


@dataclass(frozen=True)
class EnumerationResult:
    drawings: tuple[Drawing, ...]
    count: int
    search_bound: int


def resolve_max_vertices(max_vertices: int | None) -> int:
    if max_vertices is not None:
        return max_vertices
    env = os.environ.get(MAX_VERTICES_ENV)
    return int(env) if env else DEFAULT_MAX_VERTICES


def _guard(g: LevelGraph, max_vertices: int | None) -> None:
    limit = resolve_max_vertices(max_vertices)
    if len(g.level) > limit:
        raise SizeGuardExceeded(f"graph has {len(g.level)} vertices, search limit is {limit}")


def _search(
    g: LevelGraph,
    slopes: int,
    window: tuple[int, int],
    pinned: dict[str, int],
    stop_after: int | None,
) -> list[dict[str, int]]:
    """All embedding- and slope-respecting x-assignments within ``window``.

    Vertices are assigned level-major and west to east, so the western
    neighbor and all parents of the current vertex are already placed.
    """
    vs = [v for lvl in range(1, g.num_levels + 1) for v in g.order[lvl]]
    west: dict[str, str | None] = {}
    for seq in g.order.values():
        for i, v in enumerate(seq):
            west[v] = seq[i - 1] if i > 0 else None
    parents: dict[str, list[str]] = {v: [] for v in vs}
    for u, v in g.edges:
        parents[v].append(u)

    lo_w, hi_w = window
    results: list[dict[str, int]] = []
    assign: dict[str, int] = {}

    def rec(i: int) -> bool:
        if i == len(vs):
            results.append(dict(assign))
            return stop_after is not None and len(results) >= stop_after
        v = vs[i]
        lo, hi = lo_w, hi_w
        if west[v] is not None:
            lo = max(lo, assign[west[v]] + 1)
        for p in parents[v]:
            lo = max(lo, assign[p])
            hi = min(hi, assign[p] + slopes - 1)
        if v in pinned:
            if not lo <= pinned[v] <= hi:
                return False
            lo = hi = pinned[v]
        for xv in range(lo, hi + 1):
            assign[v] = xv
            if rec(i + 1):
                return True
        assign.pop(v, None)
        return False

    rec(0)
    return results


def _sorted_drawings(g: LevelGraph, assignments: list[dict[str, int]]) -> list[Drawing]:
    ids = sorted(g.level)
    assignments.sort(key=lambda a: tuple(a[v] for v in ids))
    return [Drawing(g, a) for a in assignments]


def enumerate_drawings(g: LevelGraph, slopes: int, max_vertices: int | None = None) -> EnumerationResult:
    """Every compact drawing of ``g`` with slopes in {0..slopes-1}, translated
    to minimum x = 0, in lexicographic x-vector order."""
    _guard(g, max_vertices)
    report = validate(g, require_proper=True)
    if not report.ok:
        raise ValueError(f"invalid level graph: {report.summary()}")
    if slopes < 1:
        raise ValueError(f"slope count must be at least 1, got {slopes}")
    bound = width_bound(slopes, len(g.level))
    raw = _search(g, slopes, (0, bound), {}, None)
    kept = [
        a
        for a in raw
        if (not a or min(a.values()) == 0) and not find_gaps(Drawing(g, a))
    ]
    drawings = _sorted_drawings(g, kept)
    return EnumerationResult(tuple(drawings), len(drawings), bound)


def oracle_extendable(
    inst: PartialInstance,
    slopes: int,
    max_vertices: int | None = None,
    stop_after: int | None = None,
) -> list[Drawing]:
    """All drawings of the graph whose restriction to the pinned subgraph is
    exactly the pinned placement, searched in a window widened by the compact
    width bound around the pinned coordinates.

    Any extension can be squeezed into that window: a column that no vertex
    occupies and no edge crosses can be eliminated unless pinned vertices lie
    strictly on both of its sides.  ``stop_after`` truncates the search once
    that many extensions are found (feasibility checks need just one).
    """
    _guard(inst.g, max_vertices)
    check_partial_instance(inst, slopes)
    if not inst.h_vertices:
        return list(enumerate_drawings(inst.g, slopes, max_vertices).drawings)
    bound = width_bound(slopes, len(inst.g.level))
    window = (min(inst.pi.values()) - bound, max(inst.pi.values()) + bound)
    raw = _search(inst.g, slopes, window, dict(inst.pi), stop_after)
    return _sorted_drawings(inst.g, raw)


def _merged_level_order(inst: SimultaneousInstance, lvl: int) -> list[str]:
    """One processing sequence per level containing both graphs' orders as
    subsequences (the shared subsequence is common by the instance invariant).
    Vertices exclusive to different graphs carry no mutual constraint."""
    seq1, seq2 = inst.g1.order.get(lvl, ()), inst.g2.order.get(lvl, ())
    shared = inst.shared_vertices
    out: list[str] = []
    i = j = 0
    while i < len(seq1) or j < len(seq2):
        if i < len(seq1) and seq1[i] not in shared:
            out.append(seq1[i])
            i += 1
        elif j < len(seq2) and seq2[j] not in shared:
            out.append(seq2[j])
            j += 1
        elif i < len(seq1) and j < len(seq2):
            out.append(seq1[i])
            i += 1
            j += 1
        elif i < len(seq1):
            out.append(seq1[i])
            i += 1
        else:
            out.append(seq2[j])
            j += 1
    return out


def oracle_simultaneous(
    inst: SimultaneousInstance,
    slopes: int,
    max_vertices: int | None = None,
    stop_after: int | None = None,
) -> list[tuple[Drawing, Drawing]]:
    """All agreeing drawing pairs, one representative per common translation,
    restricted to placements in which every column is used by at least one of
    the two drawings (any agreeing pair squeezes down to such a placement).

    The search assigns one joint coordinate per vertex id; order and slope
    constraints apply per graph, so vertices exclusive to different graphs
    may share a column.
    """
    _guard(inst.g1, max_vertices)
    _guard(inst.g2, max_vertices)
    check_simultaneous_instance(inst)
    if slopes < 1:
        raise ValueError(f"slope count must be at least 1, got {slopes}")

    k = max(inst.g1.num_levels, inst.g2.num_levels)
    vs = [v for lvl in range(1, k + 1) for v in _merged_level_order(inst, lvl)]
    n_total = len(inst.g1.level) + len(inst.g2.level)
    bound = width_bound(slopes, n_total)

    west: dict[str, set[str]] = {v: set() for v in vs}
    parents: dict[str, set[str]] = {v: set() for v in vs}
    for g in (inst.g1, inst.g2):
        for seq in g.order.values():
            for i in range(1, len(seq)):
                west[seq[i]].add(seq[i - 1])
        for u, v in g.edges:
            parents[v].add(u)

    accepted: list[dict[str, int]] = []
    assign: dict[str, int] = {}

    def keep(a: dict[str, int]) -> bool:
        if a and min(a.values()) != 0:
            return False
        d1 = Drawing(inst.g1, {v: a[v] for v in inst.g1.level})
        d2 = Drawing(inst.g2, {v: a[v] for v in inst.g2.level})
        return not _has_joint_gap(d1, d2)

    def rec(i: int) -> bool:
        if i == len(vs):
            if keep(assign):
                accepted.append(dict(assign))
                return stop_after is not None and len(accepted) >= stop_after
            return False
        v = vs[i]
        lo, hi = 0, bound
        for w in west[v]:
            lo = max(lo, assign[w] + 1)
        for p in parents[v]:
            lo = max(lo, assign[p])
            hi = min(hi, assign[p] + slopes - 1)
        for xv in range(lo, hi + 1):
            assign[v] = xv
            if rec(i + 1):
                return True
        assign.pop(v, None)
        return False

    rec(0)

    ids = sorted(set(inst.g1.level) | set(inst.g2.level))
    accepted.sort(key=lambda a: tuple(a[v] for v in ids))
    return [
        (
            Drawing(inst.g1, {v: a[v] for v in inst.g1.level}),
            Drawing(inst.g2, {v: a[v] for v in inst.g2.level}),
        )
        for a in accepted
    ]


def _has_joint_gap(d1: Drawing, d2: Drawing) -> bool:
    support: set[int] = set()
    for d in (d1, d2):
        support.update(d.x.values())
        for u, v in d.graph.edges:
            lo, hi = sorted((d.x[u], d.x[v]))
            support.update(range(lo + 1, hi))
    if not support:
        return False
    return any(c not in support for c in range(min(support), max(support)))
