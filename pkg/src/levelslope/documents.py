"""Plain-text instance and drawing documents.

Grammar (one directive per line, ``#`` starts a comment, blank lines are
ignored)::

    document   = graph | partial | simultaneous
    graph      = "levels" INT
                 { "vertex" ID INT }        vertex id and its level
                 { "order" INT { ID } }     west-to-east order of one level
                 { "edge" ID ID }
    partial    = graph
                 { "partial" "vertex" ID INT }   pinned vertex and x
                 { "partial" "edge" ID ID }
    simultaneous = "graph" "1" graph "graph" "2" graph
                 { "shared" "vertex" ID }
                 { "shared" "edge" ID ID }

Canonical form lists levels first, then vertices sorted by id, one order
line per level, edges sorted, then the optional sections in the same
fashion; parse and emit are mutually inverse on canonical documents.
"""

from __future__ import annotations

from .extend import PartialInstance, SimultaneousInstance
from .graphs import Drawing, LevelGraph, validate


class DocumentError(ValueError):
    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.message = message


class _GraphSection:
    def __init__(self) -> None:
        self.levels: int | None = None
        self.vertex_lines: dict[str, tuple[int, int]] = {}
        self.order_lines: dict[int, tuple[str, ...]] = {}
        self.order_line_no: dict[int, int] = {}
        self.edge_lines: list[tuple[str, str]] = []
        self.line_of: dict[str, int] = {}


def _fail(line: int, message: str, column: int = 1) -> DocumentError:
    return DocumentError(line, column, message)


def _int(token: str, line: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise _fail(line, f"{what} must be an integer, got {token!r}") from None


def _build_graph(section: _GraphSection, line: int) -> LevelGraph:
    if section.levels is None:
        raise _fail(line, "missing 'levels' directive")
    for lvl in sorted(section.order_lines):
        if not 1 <= lvl <= section.levels:
            raise _fail(section.order_line_no.get(lvl, line), f"order line for level {lvl}, expected 1..{section.levels}")
    level = {v: lvl for v, (lvl, _) in section.vertex_lines.items()}
    g = LevelGraph(section.levels, level, section.order_lines, tuple(section.edge_lines))
    report = validate(g)
    if not report.ok:
        first = report.violations[0]
        at = min((section.line_of.get(item, line) for item in first.items), default=line)
        raise _fail(at, f"{first.code}: {first.message}")
    return g


def parse_instance(text: str) -> LevelGraph | PartialInstance | SimultaneousInstance:
    """Parse a document into the instance type its sections imply.

    Structural problems raise DocumentError with the offending line; graph
    validity is checked (properness is not, callers decide per operation).
    """
    sections: list[_GraphSection] = [_GraphSection()]
    current = sections[0]
    partial_x: dict[str, int] = {}
    partial_edges: list[tuple[str, str]] = []
    shared_vertices: set[str] = set()
    shared_edges: set[tuple[str, str]] = set()
    saw_graph_marker = False
    saw_partial = False
    content_seen = False
    last_line = 1

    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        tokens = body.split()
        head, rest = tokens[0], tokens[1:]
        if head in ("levels", "vertex", "order", "edge"):
            content_seen = True
        if head == "graph":
            if len(rest) != 1 or rest[0] not in ("1", "2"):
                raise _fail(lineno, "expected 'graph 1' or 'graph 2'")
            index = int(rest[0])
            if index == 1:
                if saw_graph_marker or content_seen:
                    raise _fail(lineno, "'graph 1' must be the first directive")
            else:
                if not saw_graph_marker:
                    raise _fail(lineno, "'graph 2' requires a preceding 'graph 1' section")
                if len(sections) != 1:
                    raise _fail(lineno, "duplicate 'graph 2' section")
                sections.append(_GraphSection())
                current = sections[1]
            saw_graph_marker = True
        elif head == "levels":
            if len(rest) != 1:
                raise _fail(lineno, "expected 'levels <count>'")
            if current.levels is not None:
                raise _fail(lineno, "duplicate 'levels' directive")
            count = _int(rest[0], lineno, "level count")
            if count < 1:
                raise _fail(lineno, f"level count must be positive, got {count}")
            current.levels = count
        elif head == "vertex":
            if len(rest) != 2:
                raise _fail(lineno, "expected 'vertex <id> <level>'")
            vid, lvl = rest[0], _int(rest[1], lineno, "vertex level")
            if vid in current.vertex_lines:
                raise _fail(lineno, f"duplicate vertex {vid!r}")
            current.vertex_lines[vid] = (lvl, lineno)
            current.line_of.setdefault(vid, lineno)
        elif head == "order":
            if not rest:
                raise _fail(lineno, "expected 'order <level> [ids...]'")
            lvl = _int(rest[0], lineno, "order level")
            if lvl in current.order_lines:
                raise _fail(lineno, f"duplicate order line for level {lvl}")
            current.order_lines[lvl] = tuple(rest[1:])
            current.order_line_no[lvl] = lineno
        elif head == "edge":
            if len(rest) != 2:
                raise _fail(lineno, "expected 'edge <tail> <head>'")
            current.edge_lines.append((rest[0], rest[1]))
        elif head == "partial":
            saw_partial = True
            if len(sections) > 1:
                raise _fail(lineno, "'partial' lines are not allowed in simultaneous documents")
            if len(rest) == 3 and rest[0] == "vertex":
                vid = rest[1]
                if vid in partial_x:
                    raise _fail(lineno, f"duplicate partial vertex {vid!r}")
                partial_x[vid] = _int(rest[2], lineno, "pinned x")
            elif len(rest) == 3 and rest[0] == "edge":
                partial_edges.append((rest[1], rest[2]))
            else:
                raise _fail(lineno, "expected 'partial vertex <id> <x>' or 'partial edge <tail> <head>'")
        elif head == "shared":
            if len(rest) == 2 and rest[0] == "vertex":
                shared_vertices.add(rest[1])
            elif len(rest) == 3 and rest[0] == "edge":
                shared_edges.add((rest[1], rest[2]))
            else:
                raise _fail(lineno, "expected 'shared vertex <id>' or 'shared edge <tail> <head>'")
        else:
            raise _fail(lineno, f"unknown directive {head!r}")

    if len(sections) == 2:
        if saw_partial:
            raise _fail(last_line, "simultaneous documents cannot carry a partial section")
        g1 = _build_graph(sections[0], last_line)
        g2 = _build_graph(sections[1], last_line)
        return SimultaneousInstance(g1, g2, frozenset(shared_vertices), frozenset(shared_edges))
    if saw_graph_marker:
        raise _fail(last_line, "found 'graph 1' but no 'graph 2' section")
    if shared_vertices or shared_edges:
        raise _fail(last_line, "'shared' lines require two graph sections")
    g = _build_graph(sections[0], last_line)
    if saw_partial:
        for vid in sorted(partial_x):
            if vid not in g.level:
                raise _fail(sections[0].line_of.get(vid, last_line), f"partial vertex {vid!r} is not a graph vertex")
        for u, v in partial_edges:
            if (u, v) not in set(g.edges):
                raise _fail(last_line, f"partial edge ({u!r}, {v!r}) is not a graph edge")
        return PartialInstance(g, frozenset(partial_x), frozenset(partial_edges), partial_x)
    return g


def _emit_graph(g: LevelGraph) -> list[str]:
    lines = [f"levels {g.num_levels}"]
    for v in sorted(g.level):
        lines.append(f"vertex {v} {g.level[v]}")
    for lvl in range(1, g.num_levels + 1):
        lines.append(" ".join(["order", str(lvl), *g.order[lvl]]).rstrip())
    for u, v in sorted(g.edges):
        lines.append(f"edge {u} {v}")
    return lines


def emit_instance(obj: LevelGraph | PartialInstance | SimultaneousInstance) -> str:
    """Canonical document for an instance; inverse of parse_instance."""
    if isinstance(obj, LevelGraph):
        lines = _emit_graph(obj)
    elif isinstance(obj, PartialInstance):
        lines = _emit_graph(obj.g)
        for v in sorted(obj.pi):
            lines.append(f"partial vertex {v} {obj.pi[v]}")
        for u, v in sorted(obj.h_edges):
            lines.append(f"partial edge {u} {v}")
    elif isinstance(obj, SimultaneousInstance):
        lines = ["graph 1", *_emit_graph(obj.g1), "graph 2", *_emit_graph(obj.g2)]
        for v in sorted(obj.shared_vertices):
            lines.append(f"shared vertex {v}")
        for u, v in sorted(obj.shared_edges):
            lines.append(f"shared edge {u} {v}")
    else:
        raise TypeError(f"cannot emit {type(obj).__name__}")
    return "\n".join(lines) + "\n"


def emit_drawing(d: Drawing) -> str:
    """One line per vertex, ``id level x``, sorted by (level, x)."""
    lines = ["drawing"]
    for v in sorted(d.x, key=lambda v: (d.graph.level[v], d.x[v], v)):
        lines.append(f"{v} {d.graph.level[v]} {d.x[v]}")
    return "\n".join(lines) + "\n"


def parse_drawing(text: str, g: LevelGraph) -> Drawing:
    """Inverse of emit_drawing for drawings of the known graph ``g``."""
    x: dict[str, int] = {}
    lines = text.splitlines()
    if not lines or lines[0].strip() != "drawing":
        raise _fail(1, "expected a 'drawing' header line")
    for lineno, raw in enumerate(lines[1:], start=2):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        tokens = body.split()
        if len(tokens) != 3:
            raise _fail(lineno, "expected '<id> <level> <x>'")
        vid, lvl, xv = tokens[0], _int(tokens[1], lineno, "level"), _int(tokens[2], lineno, "x")
        if vid not in g.level:
            raise _fail(lineno, f"unknown vertex {vid!r}")
        if g.level[vid] != lvl:
            raise _fail(lineno, f"vertex {vid!r} has level {g.level[vid]}, not {lvl}")
        if vid in x:
            raise _fail(lineno, f"duplicate coordinate for {vid!r}")
        x[vid] = xv
    missing = sorted(set(g.level) - set(x))
    if missing:
        raise _fail(len(lines), f"missing coordinates for {missing}")
    return Drawing(g, x)
