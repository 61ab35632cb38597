"""Shared helpers: independent re-implementations used as test oracles."""

from __future__ import annotations

import itertools

import pytest

from tlir import _kernel
from tlir.graph import TotalGraph


@pytest.fixture(params=_kernel.BACKENDS)
def backend(request):
    return request.param


def class_degree(G: TotalGraph, c, v: int, k: int) -> int:
    """Total degree of v inside color class k, computed from scratch."""
    deg = 1 if c.vertex_colors.get(v) == k else 0
    for u, w in G.edges:
        if v in (u, w) and c.edge_colors.get((u, w)) == k:
            deg += 1
    return deg


def naive_valid(G: TotalGraph, c, total: bool = True) -> bool:
    """Locally irregular total coloring check written without the package verifier."""
    if total:
        if any(e not in c.edge_colors for e in G.edges):
            return False
        if any(G.is_full(v) and v not in c.vertex_colors for v in G.vertices):
            return False
    if any(not G.is_full(v) for v in c.vertex_colors):
        return False
    for u, w in G.edges:
        k = c.edge_colors.get((u, w))
        if k is not None and class_degree(G, c, u, k) == class_degree(G, c, w, k):
            return False
    return True


def brute_tlir(G: TotalGraph, max_k: int = 3) -> int | None:
    """Minimum colors by trying every assignment (tiny graphs only)."""
    from tlir.coloring import TotalColoring

    elems = [("e", e) for e in G.edges] + [("v", v) for v in G.full]
    if not elems:
        return 0
    for k in range(1, max_k + 1):
        for assign in itertools.product(range(1, k + 1), repeat=len(elems)):
            c = TotalColoring(
                {key: a for (t, key), a in zip(elems, assign) if t == "v"},
                {key: a for (t, key), a in zip(elems, assign) if t == "e"},
            )
            if naive_valid(G, c):
                return k
    return None


def brute_lir(G: TotalGraph, max_k: int = 4) -> int | None:
    """Minimum colors of a locally irregular edge coloring, by enumeration."""
    edges = list(G.edges)
    if not edges:
        return 0
    for k in range(1, min(max_k, len(edges)) + 1):
        for assign in itertools.product(range(1, k + 1), repeat=len(edges)):
            col = dict(zip(edges, assign))
            ok = True
            for u, w in edges:
                a = col[(u, w)]
                du = sum(1 for e in edges if u in e and col[e] == a)
                dw = sum(1 for e in edges if w in e and col[e] == a)
                if du == dw:
                    ok = False
                    break
            if ok:
                return k
    return None


def random_graph(rng, n: int, p: float) -> TotalGraph:
    edges = [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p]
    return TotalGraph.simple(n, edges)


def brute_acyclic(G: TotalGraph) -> int:
    """Acyclic chromatic number by enumeration; forests checked with networkx."""
    import networkx as nx

    H = nx.Graph()
    H.add_nodes_from(G.vertices)
    H.add_edges_from(G.edges)
    for k in range(1, G.n + 1):
        for assign in itertools.product(range(k), repeat=G.n):
            vc = dict(zip(G.vertices, assign))
            if any(vc[u] == vc[v] for u, v in G.edges):
                continue
            if all(
                nx.is_forest(H.subgraph([v for v in H if vc[v] in (a, b)]))
                for a, b in itertools.combinations(range(k), 2)
                if any(vc[v] in (a, b) for v in H)
            ):
                return k
    return 0
