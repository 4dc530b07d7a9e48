"""Hypothesis strategies for small embedded proper level graphs."""

from __future__ import annotations

from hypothesis import strategies as st

from levelslope import LevelGraph


@st.composite
def level_graphs(draw, max_vertices: int = 6, max_levels: int = 3) -> LevelGraph:
    k = draw(st.integers(1, max_levels))
    n = draw(st.integers(0, max_vertices))
    levels = [draw(st.integers(1, k)) for _ in range(n)]
    ids = [f"v{i}" for i in range(n)]
    order: dict[int, list[str]] = {lvl: [] for lvl in range(1, k + 1)}
    for vid, lvl in zip(ids, levels):
        seq = order[lvl]
        seq.insert(draw(st.integers(0, len(seq))), vid)
    pos = {v: i for seq in order.values() for i, v in enumerate(seq)}

    edges: list[tuple[str, str]] = []
    for lvl in range(1, k):
        lower, upper = order[lvl], order[lvl + 1]
        for u in lower:
            for w in upper:
                crosses = any(
                    (pos[u] - pos[v]) * (pos[w] - pos[x]) < 0
                    for v, x in edges
                    if v in lower and x in upper
                )
                if not crosses and draw(st.booleans()):
                    edges.append((u, w))
    level = {v: lvl for lvl, seq in order.items() for v in seq}
    return LevelGraph(k, level, {lvl: tuple(seq) for lvl, seq in order.items()}, tuple(edges))
