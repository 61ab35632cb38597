"""Exhaustive desk-scale solvers used as ground truth.

Everything here is exponential in the worst case and meant for graphs with a
few dozen elements.  Searches are deterministic: equal inputs and budgets
yield identical answers and identical witnesses.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

from . import _kernel
from .coloring import (
    Element,
    TotalColoring,
    verify_proper,
)
from .errors import InputError, PreconditionError
from .graph import TotalGraph, edge_key

OK = "ok"
UNCOLORABLE = "uncolorable"
BUDGET = "budget"


@dataclass(frozen=True)
class SearchBudget:
    """Limits for one oracle call; ``time_limit`` is in seconds."""

    max_colors: int = 6
    node_limit: int | None = None
    time_limit: float | None = None

    def __post_init__(self) -> None:
        if self.max_colors < 1:
            raise InputError("max_colors must be at least 1")
        if self.node_limit is not None and self.node_limit <= 0:
            raise InputError("node_limit must be positive")
        if self.time_limit is not None and self.time_limit <= 0:
            raise InputError("time_limit must be positive")


@dataclass
class SearchResult:
    """Outcome of an exact search.

    ``value`` is the optimum when ``status`` is ``"ok"``; otherwise it is None
    and ``status`` says why (``"uncolorable"`` or ``"budget"``).
    """

    value: int | None
    status: str
    witness: object = None
    nodes: int = 0

    @property
    def ok(self) -> bool:
        return self.status == OK


class _Meter:
    """Shared node/time accounting across the k-iterations of one call."""

    def __init__(self, budget: SearchBudget) -> None:
        self.node_limit = budget.node_limit
        self.deadline = time.monotonic() + budget.time_limit if budget.time_limit else 0.0
        self.nodes = 0

    def remaining_nodes(self) -> int:
        if self.node_limit is None:
            return 0
        return max(1, self.node_limit - self.nodes)

    def tick(self) -> bool:
        """Count one node; False once the budget is spent."""
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            return False
        if self.deadline and not self.nodes & 255 and time.monotonic() > self.deadline:
            return False
        return True


def _all_elements(G: TotalGraph) -> list[Element]:
    return [("e", e) for e in G.edges] + [("v", v) for v in G.full]


def _search_k(G: TotalGraph, free: list[Element], k: int, meter: _Meter, backend=None):
    status, col, nodes = _kernel.run_search(
        G, TotalColoring(), free, list(range(1, k + 1)), symmetric=True,
        node_limit=meter.remaining_nodes(), deadline=meter.deadline, backend=backend,
    )
    meter.nodes += nodes
    return status, col


def exact_tlir(G: TotalGraph, budget: SearchBudget | None = None, backend=None) -> SearchResult:
    """Minimum number of colors of a locally irregular total coloring."""
    budget = budget or SearchBudget()
    free = _all_elements(G)
    if not free:
        return SearchResult(0, OK, TotalColoring())
    meter = _Meter(budget)
    for k in range(1, budget.max_colors + 1):
        status, col = _search_k(G, free, k, meter, backend)
        if status == _kernel.FOUND:
            return SearchResult(k, OK, col, meter.nodes)
        if status == _kernel.EXHAUSTED:
            break
    return SearchResult(None, BUDGET, None, meter.nodes)


def exact_lir(G: TotalGraph, budget: SearchBudget | None = None, backend=None) -> SearchResult:
    """Minimum number of colors of a locally irregular edge coloring.

    Vertex colors play no part: the search runs on G with every vertex empty.
    ``"uncolorable"`` is certified by exhausting k = |E|, since more colors
    than edges cannot help.  The witness colors edges only.
    """
    budget = budget or SearchBudget()
    H = G.with_fullness(False)
    free: list[Element] = [("e", e) for e in H.edges]
    if not free:
        return SearchResult(0, OK, TotalColoring())
    meter = _Meter(budget)
    top = min(budget.max_colors, H.m)
    for k in range(1, top + 1):
        status, col = _search_k(H, free, k, meter, backend)
        if status == _kernel.FOUND:
            return SearchResult(k, OK, col, meter.nodes)
        if status == _kernel.EXHAUSTED:
            return SearchResult(None, BUDGET, None, meter.nodes)
    if top == H.m:
        return SearchResult(None, UNCOLORABLE, None, meter.nodes)
    status, _ = _search_k(H, free, H.m, meter, backend)
    if status == _kernel.INFEASIBLE:
        return SearchResult(None, UNCOLORABLE, None, meter.nodes)
    return SearchResult(None, BUDGET, None, meter.nodes)


def find_lir_coloring(
    G: TotalGraph, k: int, budget: SearchBudget | None = None, backend=None
) -> SearchResult:
    """Locally irregular edge coloring with at most k colors, if one exists."""
    budget = budget or SearchBudget()
    H = G.with_fullness(False)
    free: list[Element] = [("e", e) for e in H.edges]
    if not free:
        return SearchResult(0, OK, TotalColoring())
    meter = _Meter(budget)
    status, col = _search_k(H, free, k, meter, backend)
    if status == _kernel.FOUND:
        return SearchResult(col.num_colors, OK, col, meter.nodes)
    if status == _kernel.INFEASIBLE:
        return SearchResult(None, UNCOLORABLE, None, meter.nodes)
    return SearchResult(None, BUDGET, None, meter.nodes)


def complete_partial_tlir(
    G: TotalGraph,
    c: TotalColoring,
    elements: Iterable[Element],
    palette: Sequence[int] = (1, 2),
    backend=None,
) -> TotalColoring | None:
    """Color exactly ``elements`` from ``palette`` keeping affected edges irregular.

    Every edge with an endpoint touched by a listed element must end up
    valid; edges elsewhere are left as they are.  Returns None when no such
    completion exists.
    """
    elements = list(dict.fromkeys(elements))
    for el in elements:
        kind, key = el
        if kind == "e":
            if not G.has_edge(*key):
                raise InputError(f"edge {key} is not in the graph")
            el_key = edge_key(*key)
            if el_key in c.edge_colors:
                raise PreconditionError(f"edge {el_key} is already colored")
        elif kind == "v":
            if not G.is_full(key):
                raise PreconditionError(f"vertex {key} is empty and cannot be colored")
            if key in c.vertex_colors:
                raise PreconditionError(f"vertex {key} is already colored")
        else:
            raise InputError(f"unknown element {el!r}")
    elements = [("e", edge_key(*k)) if t == "e" else (t, k) for t, k in elements]
    status, col, _ = _kernel.run_search(G, c, elements, list(palette), backend=backend)
    return col if status == _kernel.FOUND else None


# ---------------------------------------------------------------------------
# Vertex-coloring searches
# ---------------------------------------------------------------------------

def _vertex_order(G: TotalGraph) -> list[int]:
    """Greedy connected order: start at max degree, then most-constrained next."""
    order: list[int] = []
    placed: set[int] = set()
    remaining = set(G.vertices)
    while remaining:
        start = min(remaining, key=lambda v: (-G.degree(v), v))
        frontier = [start]
        while frontier:
            v = min(frontier, key=lambda u: (-sum(w in placed for w in G.neighbors(u)), -G.degree(u), u))
            frontier.remove(v)
            if v in placed:
                continue
            placed.add(v)
            remaining.discard(v)
            order.append(v)
            for w in G.neighbors(v):
                if w not in placed and w not in frontier:
                    frontier.append(w)
    return order


def _bicolored_cycle_through(G: TotalGraph, vc: Mapping[int, int], v: int) -> bool:
    """True when coloring v closes a cycle alternating between two colors."""
    a = vc[v]
    by_color: dict[int, list[int]] = {}
    for w in G.neighbors(v):
        b = vc.get(w)
        if b is not None:
            by_color.setdefault(b, []).append(w)
    for b, ws in by_color.items():
        if len(ws) < 2:
            continue
        # Two b-neighbours in one component of G[{a, b}] - v close a cycle.
        seen = {v}
        for w in ws:
            if w in seen:
                return True
            seen.add(w)
            stack = [w]
            while stack:
                u = stack.pop()
                for z in G.neighbors(u):
                    if z not in seen and vc.get(z) in (a, b):
                        seen.add(z)
                        stack.append(z)
    return False


def _color_search(
    G: TotalGraph,
    k: int,
    meter: _Meter,
    acyclic: bool,
) -> dict[int, int] | None | bool:
    """Proper (optionally acyclic) k-coloring; None if none, False on budget."""
    order = _vertex_order(G)
    vc: dict[int, int] = {}
    exhausted = False

    def rec(i: int, used: int) -> bool:
        nonlocal exhausted
        if i == len(order):
            return True
        v = order[i]
        banned = {vc[w] for w in G.neighbors(v) if w in vc}
        for col in range(1, min(k, used + 1) + 1):
            if col in banned:
                continue
            if not meter.tick():
                exhausted = True
                return False
            vc[v] = col
            if not (acyclic and _bicolored_cycle_through(G, vc, v)):
                if rec(i + 1, max(used, col)):
                    return True
                if exhausted:
                    return False
            del vc[v]
        return False

    if rec(0, 0):
        return dict(sorted(vc.items()))
    return False if exhausted else None


def find_vertex_coloring(
    G: TotalGraph, k: int, acyclic: bool = False, budget: SearchBudget | None = None
) -> dict[int, int] | None:
    """A proper (acyclic) coloring with at most k colors, or None if none exists.

    Raises BudgetExhausted when the budget runs out first.
    """
    from .errors import BudgetExhausted

    found = _color_search(G, k, _Meter(budget or SearchBudget(max_colors=k)), acyclic)
    if found is False:
        raise BudgetExhausted(f"no decision for k={k} within budget")
    return found


def _min_coloring(G: TotalGraph, budget: SearchBudget, acyclic: bool) -> SearchResult:
    if G.n == 0:
        return SearchResult(0, OK, {})
    meter = _Meter(budget)
    for k in range(1, budget.max_colors + 1):
        found = _color_search(G, k, meter, acyclic)
        if found is False:
            break
        if found is not None:
            return SearchResult(k, OK, found, meter.nodes)
    return SearchResult(None, BUDGET, None, meter.nodes)


def exact_acyclic(G: TotalGraph, budget: SearchBudget | None = None) -> SearchResult:
    """Acyclic chromatic number; the witness is a vertex-color dict."""
    return _min_coloring(G, budget or SearchBudget(), acyclic=True)


def exact_chromatic(G: TotalGraph, budget: SearchBudget | None = None) -> SearchResult:
    """Chromatic number; the witness is a vertex-color dict."""
    budget = budget or SearchBudget(max_colors=max(1, G.n))
    res = _min_coloring(G, budget, acyclic=False)
    if res.ok:
        assert verify_proper(G, res.witness) is None
    return res


# ---------------------------------------------------------------------------
# Maximum-weight independent set
# ---------------------------------------------------------------------------

def maximum_independent_set(
    G: TotalGraph,
    weight: Callable[[int], int] | None = None,
    vertices: Iterable[int] | None = None,
) -> tuple[int, ...]:
    """Exact maximum-weight independent set by branch and bound.

    Components are solved separately; isolated vertices are always taken, a
    leaf is taken over its neighbour when it weighs at least as much, and
    otherwise the search branches on a vertex of maximum degree (include
    first).  Weights must be positive integers; default weight 1.
    """
    w = weight or (lambda v: 1)
    pool = set(G.vertices if vertices is None else vertices)
    adj = {v: {u for u in G.neighbors(v) if u in pool} for v in pool}

    def components(S: set[int]) -> list[set[int]]:
        out = []
        seen: set[int] = set()
        for s in sorted(S):
            if s in seen:
                continue
            comp = {s}
            stack = [s]
            seen.add(s)
            while stack:
                u = stack.pop()
                for z in adj[u]:
                    if z in S and z not in seen:
                        seen.add(z)
                        comp.add(z)
                        stack.append(z)
            out.append(comp)
        return out

    def solve(S: set[int]) -> tuple[int, list[int]]:
        total, chosen = 0, []
        for comp in components(S):
            val, sel = solve_connected(comp)
            total += val
            chosen += sel
        return total, chosen

    def solve_connected(S: set[int]) -> tuple[int, list[int]]:
        S = set(S)
        taken: list[int] = []
        base = 0
        # Cheap reductions.
        changed = True
        while changed and S:
            changed = False
            for v in sorted(S):
                nb = adj[v] & S
                if not nb:
                    taken.append(v)
                    base += w(v)
                    S.discard(v)
                    changed = True
                    break
                if len(nb) == 1:
                    (u,) = nb
                    if w(v) >= w(u):
                        taken.append(v)
                        base += w(v)
                        S.discard(v)
                        S.discard(u)
                        changed = True
                        break
        if not S:
            return base, taken
        comps = components(S)
        if len(comps) > 1:
            val, sel = solve(S)
            return base + val, taken + sel
        best_val = -1
        best_sel: list[int] = []
        v = max(sorted(S), key=lambda u: len(adj[u] & S))
        # Include v.
        val, sel = solve(S - adj[v] - {v})
        best_val, best_sel = val + w(v), sel + [v]
        # Exclude v, pruned by the total remaining weight.
        rest = S - {v}
        if sum(w(u) for u in rest) > best_val:
            val, sel = solve(rest)
            if val > best_val:
                best_val, best_sel = val, sel
        return base + best_val, taken + best_sel

    _, chosen = solve(pool)
    return tuple(sorted(chosen))
