"""From acyclic vertex colorings to locally irregular total colorings.

Given a proper vertex coloring in which every two classes induce a forest,
each edge of such a forest is colored like its endpoint closer to a chosen
root.  The edge classes are then star forests whose centers carry the
class color, and the vertex and edge colorings together are locally
irregular.  Acyclic colorings come from a clique-degenerate greedy order
(maximal outerplanar graphs) or from exact search.
"""

from __future__ import annotations

import logging
import random
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Mapping

from .coloring import TotalColoring, verify_acyclic, verify_proper, verify_tlir
from .errors import ClassPreconditionError, InputError, InvariantError, PreconditionError
from .graph import Edge, TotalGraph, edge_key
from .oracle import SearchBudget, find_vertex_coloring

log = logging.getLogger(__name__)

PEEL, SEARCH = "peel", "search"


@dataclass(frozen=True)
class CliqueOrder:
    """Vertex order with the earlier neighbours of each vertex."""

    order: tuple[int, ...]
    back: dict[int, tuple[int, ...]]

    @classmethod
    def of(cls, G: TotalGraph, order) -> "CliqueOrder":
        pos = {v: i for i, v in enumerate(order)}
        back = {v: tuple(sorted(w for w in G.neighbors(v) if pos[w] < pos[v])) for v in order}
        return cls(tuple(order), back)

    def problems(self, G: TotalGraph, k: int) -> str | None:
        if sorted(self.order) != sorted(G.vertices):
            return "order is not a permutation of the vertices"
        for v in self.order:
            nb = self.back[v]
            if len(nb) > k:
                return f"vertex {v} has {len(nb)} earlier neighbours"
            if any(not G.has_edge(a, b) for a, b in combinations(nb, 2)):
                return f"earlier neighbours of {v} are not a clique"
        return None


def maximal_outerplanar_order(G: TotalGraph) -> CliqueOrder:
    """Order whose every vertex has at most two, adjacent, earlier neighbours.

    Degree-2 vertices with adjacent neighbours are peeled off (smallest id
    first) until an edge remains.  A graph peels down to K2 exactly when it
    is a 2-tree; it is maximal outerplanar when in addition no edge lies in
    more than two of the peeled triangles.
    """
    if G.n <= 2:
        if G.n == 2 and G.m != 1:
            raise ClassPreconditionError("graph is not maximal outerplanar (disconnected)")
        return CliqueOrder.of(G, sorted(G.vertices))
    adj = {v: set(G.neighbors(v)) for v in G.vertices}
    triangles: dict[Edge, int] = {}
    peeled: list[int] = []
    while len(adj) > 2:
        cands = [v for v in adj if len(adj[v]) == 2]
        ear = None
        for v in sorted(cands):
            x, y = sorted(adj[v])
            if y in adj[x]:
                ear = v
                break
        if ear is None:
            raise ClassPreconditionError("graph is not maximal outerplanar (peeling is stuck)")
        x, y = sorted(adj.pop(ear))
        adj[x].discard(ear)
        adj[y].discard(ear)
        for e in (edge_key(ear, x), edge_key(ear, y), edge_key(x, y)):
            triangles[e] = triangles.get(e, 0) + 1
            if triangles[e] > 2:
                raise ClassPreconditionError(f"graph is not maximal outerplanar (edge {e} in 3 triangles)")
        peeled.append(ear)
    base = sorted(adj)
    if len(adj[base[0]]) != 1:
        raise ClassPreconditionError("graph is not maximal outerplanar (peeling ends without an edge)")
    return CliqueOrder.of(G, base + peeled[::-1])


def greedy_clique_acyclic(G: TotalGraph, order: CliqueOrder, k: int) -> dict[int, int]:
    """Greedy coloring along ``order`` with colors 1..k+1; acyclic by construction."""
    bad = order.problems(G, k)
    if bad:
        raise PreconditionError(f"invalid clique order: {bad}")
    vc: dict[int, int] = {}
    for v in order.order:
        used = [vc[w] for w in order.back[v]]
        if len(used) != len(set(used)):
            raise InvariantError(f"two earlier neighbours of {v} share a color")
        vc[v] = next(c for c in range(1, k + 2) if c not in used)
    return dict(sorted(vc.items()))


def star_from_acyclic(
    G: TotalGraph, vc: Mapping[int, int], rng: random.Random | None = None
) -> dict[Edge, int]:
    """Edge coloring whose classes are star forests centered on their own color.

    For every pair of colors a < b, each tree of the forest induced by the
    two classes is searched breadth-first from a root, and every edge takes
    the color of its endpoint nearer the root.  Roots are the smallest
    vertex of each tree, or random ones when ``rng`` is given.
    """
    try:
        cyc = verify_acyclic(G, vc)
    except PreconditionError as exc:
        raise PreconditionError(f"vertex coloring must be proper and total: {exc}") from None
    if cyc is not None:
        raise PreconditionError(f"vertex coloring has a two-colored cycle {cyc}")
    ec: dict[Edge, int] = {}
    colors = sorted(set(vc[v] for v in G.vertices))
    for a, b in combinations(colors, 2):
        members = {v for v in G.vertices if vc[v] in (a, b)}
        seen: set[int] = set()
        for s in sorted(members):
            if s in seen:
                continue
            comp = [s]
            seen.add(s)
            i = 0
            while i < len(comp):
                for w in G.neighbors(comp[i]):
                    if w in members and w not in seen:
                        seen.add(w)
                        comp.append(w)
                i += 1
            root = rng.choice(sorted(comp)) if rng is not None else s
            done = {root}
            queue = deque([root])
            while queue:
                u = queue.popleft()
                for w in G.neighbors(u):
                    if w in members and w not in done:
                        done.add(w)
                        ec[edge_key(u, w)] = vc[u]
                        queue.append(w)
    return ec


def acyclic_to_tlir(
    G: TotalGraph, vc: Mapping[int, int], rng: random.Random | None = None
) -> TotalColoring:
    """Vertex colors from ``vc`` and edge colors from :func:`star_from_acyclic`."""
    if not G.all_full:
        raise PreconditionError("all vertices must be full")
    ec = star_from_acyclic(G, vc, rng)
    c = TotalColoring({v: vc[v] for v in G.vertices}, ec)
    report = verify_tlir(G, c, require_total=True)
    if not report.valid:
        raise InvariantError(f"acyclic conversion failed verification: {report.violations[:3]}")
    return c


def _acyclic_by_search(G: TotalGraph, k: int, budget: SearchBudget | None) -> dict[int, int] | None:
    return find_vertex_coloring(G, k, acyclic=True, budget=budget)


def outerplanar_tlir3(
    G: TotalGraph, budget: SearchBudget | None = None, routes: list | None = None
) -> TotalColoring:
    """Locally irregular total coloring with at most 3 colors of an outerplanar graph.

    Each maximal outerplanar component is peeled and colored greedily;
    other components get an acyclic 3-coloring by exact search.  ``routes``
    collects the route taken per component.
    """
    if not G.all_full:
        raise PreconditionError("all vertices must be full")
    vc: dict[int, int] = {}
    for comp in G.components():
        H = G.subgraph(comp)
        try:
            part = greedy_clique_acyclic(H, maximal_outerplanar_order(H), 2)
            route = PEEL
        except ClassPreconditionError as exc:
            log.debug("component %s: %s; searching", comp[:5], exc)
            part = _acyclic_by_search(H, 3, budget)
            if part is None:
                raise ClassPreconditionError(
                    "graph is not outerplanar: it does not peel as maximal outerplanar "
                    "and has no acyclic 3-coloring"
                ) from None
            route = SEARCH
        if routes is not None:
            routes.append(route)
        vc.update(part)
    c = acyclic_to_tlir(G, vc)
    if max(c.colors_used(), default=1) > 3:
        raise InvariantError("more than 3 colors used")
    return c


def planar_tlir_k(
    G: TotalGraph,
    k: int = 5,
    hypothesis: str = "planar",
    budget: SearchBudget | None = None,
) -> TotalColoring:
    """Locally irregular total coloring with at most k colors, k in {5, 7}.

    ``hypothesis`` is ``"planar"`` (k = 5, screened by the edge bound
    |E| <= 3|V| - 6) or ``"max-degree"`` (maximum degree 4 for k = 5,
    5 for k = 7).  The acyclic k-coloring comes from exact search.
    """
    if k not in (5, 7):
        raise InputError("k must be 5 or 7")
    if hypothesis == "planar":
        if k != 5:
            raise InputError("the planar bound uses k = 5")
        if G.n >= 3 and G.m > 3 * G.n - 6:
            raise ClassPreconditionError(f"not planar: {G.m} edges exceed 3n - 6 = {3 * G.n - 6}")
    elif hypothesis == "max-degree":
        cap = 4 if k == 5 else 5
        if G.max_degree > cap:
            raise ClassPreconditionError(f"maximum degree {G.max_degree} exceeds {cap}")
    else:
        raise InputError(f"unknown hypothesis {hypothesis!r}")
    if not G.all_full:
        raise PreconditionError("all vertices must be full")
    vc = _acyclic_by_search(G, k, budget)
    if vc is None:
        raise ClassPreconditionError(f"no acyclic {k}-coloring exists; the {hypothesis} hypothesis fails")
    if verify_proper(G, vc) is not None:
        raise InvariantError("search returned an improper coloring")
    return acyclic_to_tlir(G, vc)
