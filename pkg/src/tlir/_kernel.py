"""Backend selection and array marshalling for the search kernel.

The compiled kernel is used when the extension is importable; otherwise the
pure-Python implementation is used.  Both return identical results.
"""

from __future__ import annotations

from array import array
from typing import Sequence

from . import _search_py
from .coloring import Element, TotalColoring
from .graph import TotalGraph

try:  # pragma: no cover - depends on the build
    from . import _search_c
except ImportError:  # pragma: no cover
    _search_c = None

BACKENDS = ("cython", "python") if _search_c is not None else ("python",)
BACKEND = BACKENDS[0]

FOUND, INFEASIBLE, EXHAUSTED = 1, 0, -1


def closure_order(G: TotalGraph, free: Sequence[Element]) -> list[Element]:
    """Order free elements so each vertex's elements are assigned together.

    Vertices are visited in ascending id; at each one its still-unplaced free
    edges (by other endpoint) come first, then the vertex itself.  A vertex is
    closed as soon as its last element is placed, which lets the kernel check
    edges long before the whole assignment is complete.
    """
    free_edges = {key for kind, key in free if kind == "e"}
    free_vertices = {key for kind, key in free if kind == "v"}
    touched = sorted(free_vertices | {w for e in free_edges for w in e})
    placed: set = set()
    out: list[Element] = []
    for v in touched:
        for w in G.neighbors(v):
            e = (v, w) if v < w else (w, v)
            if e in free_edges and e not in placed:
                placed.add(e)
                out.append(("e", e))
        if v in free_vertices:
            out.append(("v", v))
    return out


def run_search(
    G: TotalGraph,
    coloring: TotalColoring,
    free: Sequence[Element],
    palette: Sequence[int],
    symmetric: bool = False,
    node_limit: int = 0,
    deadline: float = 0.0,
    backend: str | None = None,
) -> tuple[int, TotalColoring | None, int]:
    """Assign palette colors to ``free`` so that affected edges stay irregular.

    Affected edges are those with an endpoint touched by a free element.
    Returns ``(status, coloring or None, nodes)``.
    """
    backend = backend or BACKEND
    index = {v: i for i, v in enumerate(G.vertices)}
    n, m = G.n, G.m
    eidx = {e: i for i, e in enumerate(G.edges)}
    eu = [index[u] for u, _ in G.edges]
    ev = [index[v] for _, v in G.edges]
    inc: list[list[int]] = [[] for _ in range(n)]
    for i, (u, v) in enumerate(G.edges):
        inc[index[u]].append(i)
        inc[index[v]].append(i)
    inc_ptr = [0]
    inc_idx: list[int] = []
    for lst in inc:
        inc_idx.extend(lst)
        inc_ptr.append(len(inc_idx))

    colors = [0] * (m + n)
    for e, c in coloring.edge_colors.items():
        colors[eidx[e]] = c
    for v, c in coloring.vertex_colors.items():
        colors[m + index[v]] = c

    order_el = closure_order(G, free)
    remaining = [0] * n
    elem_ids = []
    touches = []
    for kind, key in order_el:
        if kind == "e":
            i = eidx[key]
            colors[i] = 0
            ts = (index[key[0]], index[key[1]])
        else:
            i = m + index[key]
            colors[i] = 0
            ts = (index[key],)
        elem_ids.append(i)
        touches.append(ts)
        for t in ts:
            remaining[t] += 1
    touched = [r > 0 for r in remaining]
    closed = [0 if t else 1 for t in touched]
    check = [1 if (touched[eu[i]] or touched[ev[i]]) else 0 for i in range(m)]
    close_ptr = [0]
    close_idx: list[int] = []
    for ts in touches:
        for t in ts:
            remaining[t] -= 1
            if remaining[t] == 0:
                close_idx.append(t)
        close_ptr.append(len(close_idx))

    if backend == "cython":
        if _search_c is None:
            raise RuntimeError("compiled kernel is not available")
        carr = array("i", colors)
        status, nodes = _search_c.search_total(
            n, array("i", eu), array("i", ev), array("i", inc_ptr), array("i", inc_idx),
            array("i", elem_ids), array("i", close_ptr), array("i", close_idx),
            carr, array("b", check), array("b", closed), array("i", palette),
            bool(symmetric), int(node_limit), float(deadline),
        )
        colors = list(carr)
    elif backend == "python":
        status, nodes = _search_py.search_total(
            n, eu, ev, inc_ptr, inc_idx, elem_ids, close_ptr, close_idx,
            colors, check, closed, list(palette), symmetric, node_limit, deadline,
        )
    else:
        raise ValueError(f"unknown backend {backend!r}")
    if status != FOUND:
        return status, None, nodes
    out = coloring.copy()
    for kind, key in order_el:
        if kind == "e":
            out.edge_colors[key] = colors[eidx[key]]
        else:
            out.vertex_colors[key] = colors[m + index[key]]
    return status, out, nodes
