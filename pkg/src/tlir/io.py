"""Line-oriented graph and coloring files, and DOT export.

Graph files hold ``v <id> full|empty`` and ``e <u> <v>`` lines; coloring
files hold ``vc <id> <color>`` and ``ec <u> <v> <color>`` lines.  ``#``
starts a comment and blank lines are ignored.  Serialized files list
vertex lines by id, then edge lines with ascending endpoints.
"""

from __future__ import annotations

from pathlib import Path

from .coloring import TotalColoring
from .errors import ParseError
from .graph import TotalGraph, edge_key


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line.split()


def _int(tok: str, no: int, what: str, low: int = 0) -> int:
    try:
        val = int(tok)
    except ValueError:
        raise ParseError(f"line {no}: {what} must be an integer, got {tok!r}") from None
    if val < low:
        raise ParseError(f"line {no}: {what} must be at least {low}, got {val}")
    return val


def parse_graph(text: str) -> TotalGraph:
    vertices: dict[int, bool] = {}
    edges: set = set()
    for no, tok in _lines(text):
        if tok[0] == "v" and len(tok) == 3:
            v = _int(tok[1], no, "vertex id")
            if tok[2] not in ("full", "empty"):
                raise ParseError(f"line {no}: vertex kind must be full or empty, got {tok[2]!r}")
            if v in vertices:
                raise ParseError(f"line {no}: vertex {v} declared twice")
            vertices[v] = tok[2] == "full"
        elif tok[0] == "e" and len(tok) == 3:
            u, v = _int(tok[1], no, "vertex id"), _int(tok[2], no, "vertex id")
            if u == v:
                raise ParseError(f"line {no}: self-loop at {u}")
            for w in (u, v):
                if w not in vertices:
                    raise ParseError(f"line {no}: edge uses undeclared vertex {w}")
            e = edge_key(u, v)
            if e in edges:
                raise ParseError(f"line {no}: edge {e} listed twice")
            edges.add(e)
        else:
            raise ParseError(f"line {no}: cannot parse {' '.join(tok)!r}")
    empty = [v for v, full in vertices.items() if not full]
    return TotalGraph(sorted(vertices), sorted(edges), empty)


def format_graph(G: TotalGraph) -> str:
    out = [f"v {v} {'full' if G.is_full(v) else 'empty'}" for v in G.vertices]
    out += [f"e {u} {v}" for u, v in G.edges]
    return "".join(line + "\n" for line in out)


def parse_coloring(text: str) -> TotalColoring:
    c = TotalColoring()
    for no, tok in _lines(text):
        if tok[0] == "vc" and len(tok) == 3:
            v = _int(tok[1], no, "vertex id")
            if v in c.vertex_colors:
                raise ParseError(f"line {no}: vertex {v} colored twice")
            c.vertex_colors[v] = _int(tok[2], no, "color", 1)
        elif tok[0] == "ec" and len(tok) == 4:
            u, v = _int(tok[1], no, "vertex id"), _int(tok[2], no, "vertex id")
            if u == v:
                raise ParseError(f"line {no}: self-loop at {u}")
            e = edge_key(u, v)
            if e in c.edge_colors:
                raise ParseError(f"line {no}: edge {e} colored twice")
            c.edge_colors[e] = _int(tok[3], no, "color", 1)
        else:
            raise ParseError(f"line {no}: cannot parse {' '.join(tok)!r}")
    return c


def format_coloring(c: TotalColoring) -> str:
    out = [f"vc {v} {k}" for v, k in sorted(c.vertex_colors.items())]
    out += [f"ec {u} {v} {k}" for (u, v), k in sorted(c.edge_colors.items())]
    return "".join(line + "\n" for line in out)


def read_graph(path: str | Path) -> TotalGraph:
    return parse_graph(_read(path))


def read_coloring(path: str | Path) -> TotalColoring:
    return parse_coloring(_read(path))


def _read(path: str | Path) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


DOT_COLORS = ("red", "blue", "green")
DOT_PALETTE = ("orange", "purple", "brown", "cyan", "magenta", "gold", "gray40")


def dot_color(k: int) -> str:
    if k <= len(DOT_COLORS):
        return DOT_COLORS[k - 1]
    return DOT_PALETTE[(k - len(DOT_COLORS) - 1) % len(DOT_PALETTE)]


def to_dot(G: TotalGraph, c: TotalColoring | None = None, name: str = "G") -> str:
    """Graphviz source; vertices are filled with their color, edges stroked."""
    c = c or TotalColoring()
    out = [f"graph {name} {{", "  node [shape=circle, style=filled, fillcolor=white];"]
    for v in G.vertices:
        attrs = []
        k = c.vertex(v)
        if k is not None:
            attrs.append(f'fillcolor="{dot_color(k)}"')
        if not G.is_full(v):
            attrs.append('style="dashed"')
        out.append(f"  {v}" + (f" [{', '.join(attrs)}];" if attrs else ";"))
    for u, v in G.edges:
        k = c.edge(u, v)
        attr = f' [color="{dot_color(k)}", penwidth=2]' if k is not None else ""
        out.append(f"  {u} -- {v}{attr};")
    out.append("}")
    return "\n".join(out) + "\n"
