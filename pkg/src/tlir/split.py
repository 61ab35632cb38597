"""Red-blue locally irregular total colorings of split graphs.

The clique X and independent set Y are found first; the outside-degrees
d_1 >= ... >= d_n of the clique vertices decide which construction applies.
Only two degree profiles can force three colors in an edge-only locally
irregular coloring, and those get dedicated constructions.  Everything else
has a 2-color edge coloring, found by exact search and lifted by coloring
every vertex 1.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Mapping

from .bipartite import bipartite_tlir2
from .coloring import BLUE, RED, TotalColoring, total_color_degree, verify_tlir
from .errors import BudgetExhausted, ClassPreconditionError, InvariantError, PreconditionError
from .graph import Edge, TotalGraph, edge_key, is_clique, is_independent, split_sets
from .oracle import BUDGET, SearchBudget, complete_partial_tlir, find_lir_coloring
from .subcubic import regular_layered_tlir2

log = logging.getLogger(__name__)

TREE, COMPLETE, PENDANT, PAIR, LIR2 = "tree", "complete", "pendant", "pair", "lir-2 search"


@dataclass(frozen=True)
class SplitPartition:
    """Clique ``X`` ordered by nonincreasing outside-degree, independent ``Y``."""

    X: tuple[int, ...]
    Y: tuple[int, ...]
    d: tuple[int, ...]

    def check(self, G: TotalGraph) -> None:
        if set(self.X) & set(self.Y) or set(self.X) | set(self.Y) != set(G.vertices):
            raise InvariantError("X and Y must partition the vertices")
        if not is_clique(G, self.X) or not is_independent(G, self.Y):
            raise InvariantError("X must be a clique and Y independent")
        if list(self.d) != [sum(1 for w in G.neighbors(x) if w in set(self.Y)) for x in self.X]:
            raise InvariantError("outside-degrees do not match X")
        if any(a < b for a, b in zip(self.d, self.d[1:])):
            raise InvariantError("outside-degrees must be nonincreasing")
        if any(G.degree(y) == len(self.X) for y in self.Y):
            raise InvariantError("X is not maximal")


def split_partition(G: TotalGraph) -> SplitPartition:
    """Maximal clique X with independent complement, x_1..x_n by outside-degree."""
    sets = split_sets(G)
    if sets is None:
        raise ClassPreconditionError("graph is not a split graph")
    X, Y = sets
    ys = set(Y)
    outside = {x: sum(1 for w in G.neighbors(x) if w in ys) for x in X}
    order = tuple(sorted(X, key=lambda x: (-outside[x], x)))
    part = SplitPartition(order, tuple(Y), tuple(outside[x] for x in order))
    part.check(G)
    return part


def lir_to_tlir(G: TotalGraph, ec: TotalColoring | Mapping[Edge, int]) -> TotalColoring:
    """Total coloring with the edge colors of ``ec`` and every vertex colored 1.

    Every vertex joins class 1, so degrees in class 1 all grow by one and
    stay distinct across each edge; other classes are untouched.
    """
    if not G.all_full:
        raise PreconditionError("all vertices must be full")
    edges = ec.edge_colors if isinstance(ec, TotalColoring) else {edge_key(*e): k for e, k in ec.items()}
    if set(edges) != set(G.edges):
        raise PreconditionError("edge coloring must color exactly the edges of G")
    if not verify_tlir(G.with_fullness(False), TotalColoring({}, dict(edges))).valid:
        raise PreconditionError("edge coloring is not locally irregular")
    return TotalColoring({v: 1 for v in G.vertices}, dict(edges))


def _permuted_clique_coloring(K: TotalGraph, c: TotalColoring, order: tuple[int, ...]) -> TotalColoring:
    """Relabel the clique coloring so the vertex of largest red-degree becomes order[0]."""
    reds = {v: total_color_degree(K, c, v, RED) for v in order}
    top = max(reds.values())
    hub = min(v for v in order if reds[v] == top)
    if sum(1 for v in order if reds[v] == top) != 1:
        raise InvariantError("clique red-degrees are not distinct")
    x1 = order[0]
    swap = {hub: x1, x1: hub}
    out = TotalColoring()
    for v in order:
        out.vertex_colors[swap.get(v, v)] = c.vertex(v)
    for (u, v), k in c.edge_colors.items():
        out.edge_colors[edge_key(swap.get(u, u), swap.get(v, v))] = k
    return out


def _pendant_case(G: TotalGraph, part: SplitPartition) -> TotalColoring:
    K = G.subgraph(part.X)
    c = _permuted_clique_coloring(K, regular_layered_tlir2(K), part.X)
    x1 = part.X[0]
    for y in part.Y:
        c.set_edge(x1, y, RED)
        c.set_vertex(y, BLUE)
    return c


def _pair_case(G: TotalGraph, part: SplitPartition) -> TotalColoring:
    # At most 10 vertices: an exhaustive red-blue search over all elements.
    elements = [("e", e) for e in G.edges] + [("v", v) for v in G.vertices]
    done = complete_partial_tlir(G, TotalColoring(), elements)
    if done is None:
        raise InvariantError("no red-blue coloring found for the two-pendant profile")
    return done


def dispatch(G: TotalGraph, part: SplitPartition) -> str:
    """Which construction applies to the connected split graph G.

    P4 has a 2-vertex maximal clique, so it takes the tree route.
    """
    n, d = len(part.X), part.d
    if n <= 2:
        return TREE
    if not part.Y:
        return COMPLETE
    if d[0] < n // 2 and d[1] == 0:
        return PENDANT
    if d[0] == d[1] == 1 and (n < 3 or d[2] == 0) and n in (6, 7, 8):
        return PAIR
    return LIR2


def split_tlir2(G: TotalGraph, budget: SearchBudget | None = None) -> TotalColoring:
    """Locally irregular total 2-coloring (1 = red, 2 = blue) of a split graph."""
    if not G.all_full:
        raise PreconditionError("all vertices must be full")
    isolated = [v for v in G.vertices if G.degree(v) == 0]
    H = G.remove_vertices(isolated)
    if not H.is_connected():
        raise ClassPreconditionError("graph is not a split graph")
    part = split_partition(H)
    route = dispatch(H, part)
    log.debug("split route %s for d=%s", route, part.d)
    if route == TREE:
        c = bipartite_tlir2(H)
    elif route == COMPLETE:
        c = regular_layered_tlir2(H)
    elif route == PENDANT:
        c = _pendant_case(H, part)
    elif route == PAIR:
        c = _pair_case(H, part)
    else:
        n, d = len(part.X), part.d
        if (d[0] < n // 2 and d[1] == 0) or (d[0] == d[1] == 1 and d[2] == 0 and n in (6, 7, 8)):
            raise InvariantError("exact search reached for a profile that may need three colors")
        if n < 3 or not part.Y:
            raise InvariantError("exact search reached for K2, K3 or P4")
        res = find_lir_coloring(H, 2, budget)
        if res.status == BUDGET:
            raise BudgetExhausted("2-color edge search ran out of budget")
        if not res.ok:
            raise InvariantError(f"no 2-color locally irregular edge coloring ({res.status})")
        c = lir_to_tlir(H, res.witness)
    for v in isolated:
        c.set_vertex(v, 1)
    report = verify_tlir(G, c, require_total=True)
    if not report.valid or c.num_colors > 2:
        raise InvariantError(f"split coloring failed verification: {report.violations[:3]}")
    return c
