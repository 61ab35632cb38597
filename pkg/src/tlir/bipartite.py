"""Red-blue building blocks on bipartite graphs and pendant trees."""

from __future__ import annotations

from collections import deque
from typing import Iterable

from .coloring import BLUE, RED, TotalColoring, verify_tlir
from .errors import InputError, InvariantError, PreconditionError
from .graph import Edge, TotalGraph, bipartition, edge_key, is_tree


def _check_parts(G: TotalGraph, X: Iterable[int], Y: Iterable[int]) -> tuple[set, set]:
    X, Y = set(X), set(Y)
    if X & Y or (X | Y) != set(G.vertices):
        raise PreconditionError("parts must partition the vertex set")
    for u, v in G.edges:
        if (u in X) == (v in X):
            raise PreconditionError(f"edge ({u}, {v}) lies inside one part")
    return X, Y


def _require_full(G: TotalGraph) -> None:
    if not G.all_full:
        raise PreconditionError("all vertices must be full")


def bipartite_tlir2(
    G: TotalGraph,
    parts: tuple[Iterable[int], Iterable[int]] | None = None,
    red: int = RED,
    blue: int = BLUE,
) -> TotalColoring:
    """All edges red; vertices colored so X has even and Y odd total red-degree.

    The blue class then has no edges, so the coloring is locally irregular.
    When ``parts`` is omitted a bipartition is computed.
    """
    _require_full(G)
    if parts is None:
        parts = bipartition(G)
        if parts is None:
            raise PreconditionError("graph is not bipartite")
    X, _ = _check_parts(G, *parts)
    c = TotalColoring()
    for e in G.edges:
        c.edge_colors[e] = red
    for v in G.vertices:
        even = G.degree(v) % 2 == 0
        if v in X:
            c.vertex_colors[v] = blue if even else red
        else:
            c.vertex_colors[v] = red if even else blue
    return c


def partial_bipartite_tlir(
    G: TotalGraph,
    X: Iterable[int],
    Y: Iterable[int],
    red: int = RED,
    blue: int = BLUE,
) -> tuple[TotalColoring, set[Edge]]:
    """Partial red-blue coloring leaving Y uncolored and a matching of edges uncolored.

    Every X vertex is colored and has even total red-degree, every Y vertex
    has odd red-degree.  Each even-degree y sends one edge (to its smallest
    neighbour) into a blue forest of stars; stars with two or more edges are
    colored blue, single-edge stars stay uncolored, all other edges are red.
    """
    X, Y = _check_parts(G, X, Y)
    isolated = sorted(y for y in Y if G.degree(y) == 0)
    if isolated:
        raise PreconditionError(f"Y contains isolated vertices {isolated}")
    star_edges: dict[int, list[Edge]] = {}
    chosen: set[Edge] = set()
    for y in sorted(Y):
        if G.degree(y) % 2 == 0:
            x = G.neighbors(y)[0]
            e = edge_key(x, y)
            chosen.add(e)
            star_edges.setdefault(x, []).append(e)
    c = TotalColoring()
    uncolored: set[Edge] = set()
    for x, es in star_edges.items():
        if len(es) >= 2:
            for e in es:
                c.edge_colors[e] = blue
        else:
            uncolored.add(es[0])
    for e in G.edges:
        if e not in chosen:
            c.edge_colors[e] = red
    for x in sorted(X):
        reds = sum(1 for w in G.neighbors(x) if c.edge(x, w) == red)
        c.vertex_colors[x] = red if reds % 2 else blue
    return c, uncolored


def _tree_parity_coloring(
    T: TotalGraph, root: int, root_color: int, edge_color: int
) -> TotalColoring:
    """Monochromatic edges; vertex colors alternate the parity of the edge-color degree."""
    other = BLUE if edge_color == RED else RED
    dist = {root: 0}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in T.neighbors(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    root_parity = (T.degree(root) + (root_color == edge_color)) % 2
    c = TotalColoring()
    for e in T.edges:
        c.edge_colors[e] = edge_color
    c.vertex_colors[root] = root_color
    for w in T.vertices:
        if w == root:
            continue
        want = root_parity if dist[w] % 2 == 0 else 1 - root_parity
        c.vertex_colors[w] = edge_color if (T.degree(w) + 1) % 2 == want else other
    return c


def _edges_ok(G: TotalGraph, c: TotalColoring, edges: Iterable[Edge]) -> bool:
    from .coloring import total_color_degree

    for u, v in edges:
        k = c.edge(u, v)
        if k is not None and total_color_degree(G, c, u, k) == total_color_degree(G, c, v, k):
            return False
    return True


def attach_pendant_tree(
    G: TotalGraph, c: TotalColoring, v: int, T: TotalGraph
) -> TotalColoring:
    """Extend a red-blue coloring of G to G plus a tree T hanging at v.

    All edges of T get one color.  If at most one color appears on the edges
    of G at v, T takes the other color with v's color kept; otherwise v is
    recolored by trying the four monochromatic parity colorings of T in a
    fixed order, switching the non-root vertex colors of T when v then ties
    with a tree neighbour.
    """
    if not is_tree(T):
        raise InputError("T must be a tree")
    shared = set(T.vertices) & set(G.vertices)
    if shared != {v}:
        raise InputError(f"tree must meet the graph exactly in {{{v}}}, shares {sorted(shared)}")
    if G.degree(v) > 2:
        raise PreconditionError(f"vertex {v} has degree {G.degree(v)} > 2 in G")
    _require_full(G)
    _require_full(T)
    if T.n == 1:
        return c.copy()
    H = G.union(T)
    at_v = {c.edge(v, w) for w in G.neighbors(v)}
    if None in at_v:
        raise PreconditionError(f"edges at {v} must be colored")
    if len(at_v) <= 1:
        edge_color = RED if at_v != {RED} else BLUE
        out = c.copy()
        out.update(_tree_parity_coloring(T, v, c.vertex(v), edge_color))
        if not verify_tlir(H, out).valid:
            raise InvariantError("pendant tree attachment produced a conflict")
        return out

    g_edges = G.incident_edges(v)
    t_edges = T.incident_edges(v)
    for edge_color, v_color in ((RED, BLUE), (RED, RED), (BLUE, BLUE), (BLUE, RED)):
        out = c.copy()
        out.update(_tree_parity_coloring(T, v, v_color, edge_color))
        if not _edges_ok(H, out, g_edges):
            continue
        if not _edges_ok(H, out, t_edges):
            for w in T.vertices:
                if w != v:
                    out.vertex_colors[w] = BLUE if out.vertex_colors[w] == RED else RED
        if verify_tlir(H, out).valid:
            return out
    raise InvariantError(f"no candidate coloring of the pendant tree at {v} works")
