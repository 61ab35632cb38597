"""Red-blue locally irregular total colorings of cacti.

The recursion peels pendant cycles around a good vertex x: every pendant
cycle at x is opened into two pendant edges, the rest is colored
recursively, the resulting tree at x is attached by
``attach_pendant_tree``, and each cycle is closed again by a fixed pattern
that depends on its length.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .bipartite import attach_pendant_tree, bipartite_tlir2
from .coloring import BLUE, RED, TotalColoring, total_color_degree, verify_tlir
from .errors import ClassPreconditionError, InvariantError, PreconditionError
from .graph import TotalGraph, edge_key, find_good_vertex, is_cactus, is_tree
from .oracle import complete_partial_tlir

log = logging.getLogger(__name__)

LEN3, LEN5, EVEN, ODD = "len3", "len5", "even", "odd>=7"


def _case_tag(length: int) -> str:
    if length == 3:
        return LEN3
    if length == 5:
        return LEN5
    return EVEN if length % 2 == 0 else ODD


@dataclass(frozen=True)
class PendantCycleCase:
    """A pendant cycle ``(x, x1, ..., xn)`` about to be closed again."""

    cycle: tuple[int, ...]
    tag: str
    first_color: int | None
    last_color: int | None

    def __post_init__(self) -> None:
        if len(self.cycle) < 3:
            raise PreconditionError("a cycle has at least 3 vertices")
        if self.tag != _case_tag(len(self.cycle)):
            raise PreconditionError(f"tag {self.tag} does not match length {len(self.cycle)}")

    @classmethod
    def of(cls, cycle: tuple[int, ...], c: TotalColoring) -> "PendantCycleCase":
        return cls(tuple(cycle), _case_tag(len(cycle)), c.vertex(cycle[1]), c.vertex(cycle[-1]))


def _cycle_elements(cycle: tuple[int, ...]) -> list:
    x, path = cycle[0], cycle[1:]
    els = [("e", edge_key(path[i], path[i + 1])) for i in range(len(path) - 1)]
    els += [("v", v) for v in path]
    return els


def _literal_extension(G: TotalGraph, c: TotalColoring, case: PendantCycleCase) -> TotalColoring:
    x, p = case.cycle[0], (None,) + case.cycle[1:]  # p[1..n]
    n = len(case.cycle) - 1
    out = c.copy()

    def path_edge(i: int, color: int) -> None:
        out.set_edge(p[i], p[i + 1], color)

    blue_x = total_color_degree(G, c, x, BLUE)
    if case.tag == LEN3:
        if blue_x != 2:
            out.set_vertex(p[1], BLUE)
            path_edge(1, RED)
            out.set_vertex(p[2], RED)
        else:
            out.set_vertex(x, BLUE)
            out.set_edge(x, p[2], RED)
            out.set_vertex(p[1], BLUE)
            path_edge(1, BLUE)
            out.set_vertex(p[2], RED)
            if total_color_degree(G, out, x, RED) == total_color_degree(G, out, p[2], RED):
                out.set_vertex(p[2], BLUE)
    elif case.tag == LEN5:
        if blue_x == 2:
            out.set_vertex(p[1], BLUE)
            path_edge(1, BLUE)
            for i in (2, 3, 4):
                out.set_vertex(p[i], RED)
            path_edge(2, RED)
            path_edge(3, RED)
        else:
            for i in (1, 3, 4):
                out.set_vertex(p[i], BLUE)
            out.set_vertex(p[2], RED)
            for i in (1, 2, 3):
                path_edge(i, RED)
    elif case.tag == EVEN:
        _odd_path_pattern(out, p, 1, n)
    else:
        if case.first_color == BLUE:
            for i in range(1, n):
                path_edge(i, RED)
            for i in range(2, n):
                out.set_vertex(p[i], BLUE if i % 2 else RED)
        else:
            path_edge(1, RED)
            out.set_vertex(p[2], RED)
            path_edge(2, RED)
            out.set_vertex(p[4], RED)
            out.set_vertex(p[3], BLUE)
            path_edge(3, BLUE)
            _odd_path_pattern(out, p, 4, n)
    return out


def _odd_path_pattern(out: TotalColoring, p, lo: int, hi: int) -> None:
    """Red path p[lo..hi]; interior vertices red, blue, red, ... from p[lo+1]."""
    for i in range(lo, hi):
        out.set_edge(p[i], p[i + 1], RED)
    for i in range(lo + 1, hi):
        out.set_vertex(p[i], RED if (i - lo) % 2 else BLUE)


def _local_edges(G: TotalGraph, cycle: tuple[int, ...]) -> list:
    seen = set()
    for v in cycle:
        seen.update(G.incident_edges(v))
    return sorted(seen)


def _locally_valid(G: TotalGraph, c: TotalColoring, cycle: tuple[int, ...]) -> bool:
    for u, v in _local_edges(G, cycle):
        k = c.edge(u, v)
        if k is None:
            return False
        if total_color_degree(G, c, u, k) == total_color_degree(G, c, v, k):
            return False
    return all(c.vertex(v) is not None for v in cycle)


def extend_cycle_case(G: TotalGraph, c: TotalColoring, case: PendantCycleCase) -> TotalColoring:
    """Close the opened pendant cycle ``case.cycle`` in the coloring ``c``.

    ``G`` is the graph with the cycle present; ``c`` colors everything except
    the reinstated cycle elements (the interior path, and for a triangle the
    edge x1x2).  The case pattern is applied first; if it leaves a conflict
    around the cycle, an exhaustive completion over the cycle's elements and
    the vertex x is used instead.
    """
    out = _literal_extension(G, c, case)
    if _locally_valid(G, out, case.cycle):
        return out
    log.info("cycle %s: %s pattern conflicted, using local completion", case.cycle, case.tag)
    base = c.copy()
    elements = _cycle_elements(case.cycle)
    x = case.cycle[0]
    for kind, key in elements:
        base.clear((kind, key))
    base.clear_vertex(x)
    done = complete_partial_tlir(G, base, elements + [("v", x)])
    if done is None:
        raise InvariantError(f"no extension of the coloring over cycle {case.cycle}")
    return done


def _split_component(G: TotalGraph, solve) -> TotalColoring:
    out = TotalColoring()
    for comp in G.components():
        out.update(solve(G.subgraph(comp)))
    return out


def cactus_tlir2(G: TotalGraph) -> TotalColoring:
    """Locally irregular total 2-coloring (1 = red, 2 = blue) of a cactus."""
    if not G.all_full:
        raise PreconditionError("all vertices must be full")
    for comp in G.components():
        if not is_cactus(G.subgraph(comp)):
            raise ClassPreconditionError("graph is not a cactus")
    c = _split_component(G, _solve)
    report = verify_tlir(G, c, require_total=True)
    if not report.valid or c.num_colors > 2:
        raise InvariantError(f"cactus coloring failed verification: {report.violations[:3]}")
    return c


def _solve(G: TotalGraph) -> TotalColoring:
    if is_tree(G):
        return bipartite_tlir2(G)
    gv = find_good_vertex(G)
    x = gv.x

    # A pendant cycle vertex other than x with extra (tree) edges: cut the
    # trees off, color the rest, and hang them back.
    for cyc in gv.cycles:
        cyc_set = set(cyc)
        for v in cyc[1:]:
            if G.degree(v) <= 2:
                continue
            branch = _branches_off_cycle(G, v, cyc_set)
            T = G.subgraph(branch)
            rest = G.remove_vertices(set(branch) - {v})
            return attach_pendant_tree(rest, _solve(rest), v, T)

    # Open every pendant cycle at x.
    tx_edges: set = set()
    tx_vertices: set = {x}
    for cyc in gv.cycles:
        tx_edges |= {edge_key(x, cyc[1]), edge_key(x, cyc[-1])}
        tx_vertices |= {cyc[1], cyc[-1]}
    for tree in gv.trees:
        sub = G.subgraph(tree)
        tx_edges |= set(sub.edges)
        tx_vertices |= set(tree)
    T = TotalGraph(sorted(tx_vertices), sorted(tx_edges))
    cycle_vertices = {v for cyc in gv.cycles for v in cyc}
    rest = G.remove_vertices((tx_vertices | cycle_vertices) - {x})
    if rest.degree(x) > 2:
        raise InvariantError(f"good vertex {x} keeps degree {rest.degree(x)} > 2")
    c = attach_pendant_tree(rest, _solve(rest), x, T)
    if c.edge(*next(iter(sorted(tx_edges)))) == RED:
        c = c.swap(RED, BLUE)

    for cyc in gv.cycles:
        inner = [v for v in cyc[1:] if G.degree(v) > 2]
        if inner:
            raise InvariantError(f"pendant cycle {cyc} has extra branches at {inner}")
    for cyc in gv.cycles:
        c = extend_cycle_case(G, c, PendantCycleCase.of(cyc, c))
    return c


def _branches_off_cycle(G: TotalGraph, v: int, cycle: set) -> list[int]:
    """v plus everything reachable from v without using cycle vertices."""
    seen = {v}
    stack = [w for w in G.neighbors(v) if w not in cycle]
    seen.update(stack)
    while stack:
        u = stack.pop()
        for w in G.neighbors(u):
            if w not in seen and w not in cycle:
                seen.add(w)
                stack.append(w)
    return sorted(seen)
