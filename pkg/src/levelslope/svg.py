"""SVG rendering of level drawings: levels as horizontal rows, straight edges."""

from __future__ import annotations

from .graphs import Drawing, LevelGraph

MARGIN = 20


def render_svg(
    g: LevelGraph,
    d: Drawing,
    unit: int = 40,
    radius: int = 5,
    grid: bool = False,
    labels: bool = True,
) -> str:
    """Deterministic SVG 1.1 text for a drawing of ``g``.

    Vertices sit at (unit * x, -unit * level) before translation into the
    viewport, so level 1 is the bottom row.  ``grid`` adds one horizontal
    line per level.  Rejects drawings that collide or break the embedding.
    """
    _check_geometry(g, d)
    xs = list(d.x.values()) or [0]
    min_x, max_x = min(xs), max(xs)
    k = max(g.num_levels, 1)

    def px(x: int) -> int:
        return MARGIN + unit * (x - min_x)

    def py(lvl: int) -> int:
        return MARGIN + unit * (k - lvl)

    width = 2 * MARGIN + unit * (max_x - min_x)
    height = 2 * MARGIN + unit * (k - 1)
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
    ]
    if grid:
        for lvl in range(1, k + 1):
            y = py(lvl)
            parts.append(
                f'<line x1="{MARGIN // 2}" y1="{y}" x2="{width - MARGIN // 2}" y2="{y}" '
                f'stroke="#dddddd" stroke-width="1"/>'
            )
    for u, v in sorted(g.edges):
        parts.append(
            f'<line x1="{px(d.x[u])}" y1="{py(g.level[u])}" x2="{px(d.x[v])}" y2="{py(g.level[v])}" '
            f'stroke="#333333" stroke-width="2"/>'
        )
    ordered = sorted(d.x, key=lambda v: (g.level[v], d.x[v], v))
    for v in ordered:
        parts.append(
            f'<circle cx="{px(d.x[v])}" cy="{py(g.level[v])}" r="{radius}" fill="#1f6fb2"/>'
        )
    if labels:
        for v in ordered:
            parts.append(
                f'<text x="{px(d.x[v]) + radius + 2}" y="{py(g.level[v]) - radius}" '
                f'font-family="monospace" font-size="12">{_escape(v)}</text>'
            )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _check_geometry(g: LevelGraph, d: Drawing) -> None:
    missing = sorted(set(g.level) - set(d.x))
    if missing:
        raise ValueError(f"drawing lacks coordinates for {missing}")
    for lvl in range(1, g.num_levels + 1):
        xs = [d.x[v] for v in g.order[lvl]]
        if len(set(xs)) != len(xs):
            raise ValueError(f"two vertices of level {lvl} share a column")
        if xs != sorted(xs):
            raise ValueError(f"level {lvl} violates the embedding order")


def _escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
