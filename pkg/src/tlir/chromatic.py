"""Locally irregular total colorings with at most 2k - 2 colors from a proper k-coloring.

The color classes A_1..A_k are first made maximal: every vertex of A_i has
a neighbour in each earlier class.  Stage j (j <= k - 2) colors the
bipartite graph B_j between A_j and the later classes, together with the
edges left uncolored by earlier stages that end in A_j, with the pair of
colors (2j - 1, 2j).  The last stage colors all remaining elements with the
pair (2k - 3, 2k - 2).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bipartite import bipartite_tlir2, partial_bipartite_tlir
from .coloring import TotalColoring, total_color_degree, verify_proper, verify_tlir
from .errors import BudgetExhausted, InvariantError, NoColoringError, PreconditionError
from .graph import Edge, TotalGraph
from .oracle import BUDGET, SearchBudget, exact_chromatic, find_vertex_coloring


@dataclass(frozen=True)
class ProperClasses:
    """Ordered color classes A_1..A_k of a proper vertex coloring."""

    classes: tuple[tuple[int, ...], ...]
    index: dict[int, int] = field(compare=False)

    @classmethod
    def from_coloring(cls, vc: dict[int, int]) -> "ProperClasses":
        k = max(vc.values(), default=0)
        classes = tuple(tuple(sorted(v for v in vc if vc[v] == i)) for i in range(1, k + 1))
        return cls(classes, {v: i for i, A in enumerate(classes, 1) for v in A})

    @property
    def k(self) -> int:
        return len(self.classes)

    def is_maximal(self, G: TotalGraph) -> bool:
        for v, i in self.index.items():
            seen = {self.index[w] for w in G.neighbors(v)}
            if any(j not in seen for j in range(1, i)):
                return False
        return True


def _greedy_coloring(G: TotalGraph) -> dict[int, int]:
    """Saturation-degree greedy coloring."""
    vc: dict[int, int] = {}
    while len(vc) < G.n:
        v = max(
            (u for u in G.vertices if u not in vc),
            key=lambda u: (len({vc[w] for w in G.neighbors(u) if w in vc}), G.degree(u), -u),
        )
        banned = {vc[w] for w in G.neighbors(v) if w in vc}
        vc[v] = next(c for c in range(1, G.n + 2) if c not in banned)
    return vc


def maximalize(G: TotalGraph, vc: dict[int, int]) -> dict[int, int]:
    """Move vertices to the smallest class without a neighbour until nothing moves."""
    vc = dict(vc)
    moved = True
    while moved:
        moved = False
        for v in sorted(vc):
            seen = {vc[w] for w in G.neighbors(v)}
            low = next(j for j in range(1, vc[v] + 1) if j not in seen)
            if low < vc[v]:
                vc[v] = low
                moved = True
    return vc


def maximal_proper_classes(
    G: TotalGraph,
    k: int | None = None,
    greedy: bool = False,
    budget: SearchBudget | None = None,
) -> ProperClasses:
    """Maximal proper color classes.

    Without ``k`` the chromatic number is found by exact search, or with
    ``greedy`` a saturation-degree greedy coloring is used.  With ``k`` the
    greedy coloring is tried first and an exact k-coloring search follows
    when it needs more than k colors.
    """
    if G.n == 0:
        raise PreconditionError("graph has no vertices")
    if k is not None:
        vc = _greedy_coloring(G)
        if max(vc.values()) > k:
            vc = find_vertex_coloring(G, k, budget=budget)
            if vc is None:
                raise NoColoringError(f"no proper {k}-coloring exists")
    elif greedy:
        vc = _greedy_coloring(G)
    else:
        res = exact_chromatic(G, budget)
        if res.status == BUDGET:
            raise BudgetExhausted("chromatic number search ran out of budget")
        if not res.ok:
            raise NoColoringError(f"chromatic number not decided ({res.status})")
        vc = res.witness
    vc = maximalize(G, vc)
    if verify_proper(G, vc) is not None:
        raise InvariantError("maximalized coloring is not proper")
    pc = ProperClasses.from_coloring(vc)
    if any(not A for A in pc.classes) or not pc.is_maximal(G):
        raise InvariantError("classes are not maximal")
    return pc


@dataclass
class Stage:
    """Bookkeeping for one bipartite stage."""

    j: int
    colors: tuple[int, int]
    X: tuple[int, ...]
    Y: tuple[int, ...]
    edges: tuple[Edge, ...]
    left_uncolored: tuple[Edge, ...] = ()


def chromatic_tlir(
    G: TotalGraph,
    classes: ProperClasses | None = None,
    trace: list | None = None,
    budget: SearchBudget | None = None,
) -> TotalColoring:
    """Locally irregular total coloring with at most 2k - 2 colors.

    ``classes`` defaults to maximal classes of a minimum proper coloring.
    Staged invariants are checked as the stages run; ``trace`` collects one
    ``Stage`` record per stage.
    """
    if not G.all_full:
        raise PreconditionError("all vertices must be full")
    if not G.is_connected():
        raise PreconditionError("graph must be connected")
    if G.m == 0:
        return TotalColoring({v: 1 for v in G.vertices})
    pc = classes or maximal_proper_classes(G, budget=budget)
    if verify_proper(G, {v: pc.index[v] for v in G.vertices}) is not None or not pc.is_maximal(G):
        raise PreconditionError("classes must be proper and maximal")
    k, cls = pc.k, pc.index
    c = TotalColoring()
    pending: set[Edge] = set()

    def frontier(j: int) -> None:
        for v in G.vertices:
            if (cls[v] < j) != (v in c.vertex_colors):
                raise InvariantError(f"stage {j}: vertex {v} of class {cls[v]} breaks the frontier")

    for j in range(1, k - 1):
        frontier(j)
        red, blue = 2 * j - 1, 2 * j
        up = [(u, v) for u, v in G.edges if j in (cls[u], cls[v]) and max(cls[u], cls[v]) > j]
        back = sorted(e for e in pending if j in (cls[e[0]], cls[e[1]]))
        X = set(pc.classes[j - 1])
        edges = sorted(set(up) | set(back))
        Y = {w for e in edges for w in e} - X
        B = TotalGraph(sorted(X | Y), edges)
        for u, v in back:
            y = u if cls[u] < j else v
            if B.degree(y) != 1:
                raise InvariantError(f"stage {j}: earlier vertex {y} has degree {B.degree(y)} in B")
        part, left = partial_bipartite_tlir(B, X, Y, red, blue)
        for e in back:
            if e in left:
                raise InvariantError(f"stage {j}: carried edge {e} left uncolored again")
        for x in X:
            c.vertex_colors[x] = part.vertex(x)
        c.edge_colors.update(part.edge_colors)
        pending -= set(back)
        pending |= left
        if trace is not None:
            trace.append(Stage(j, (red, blue), tuple(sorted(X)), tuple(sorted(Y)), tuple(edges), tuple(sorted(left))))

    frontier(k - 1)
    red, blue = 2 * k - 3, 2 * k - 2
    A_prev, A_last = set(pc.classes[k - 2]), set(pc.classes[k - 1])
    top = A_prev | A_last
    stray = [e for e in pending if not set(e) & top]
    if stray:
        raise InvariantError(f"uncolored edges {stray} miss the last two classes")
    between = [e for e in G.edges if {cls[e[0]], cls[e[1]]} == {k - 1, k}]
    edges = sorted(set(between) | pending)
    U_prev = {w for e in pending for w in e if w not in top and set(e) & A_prev}
    U_last = {w for e in pending for w in e if w not in top and set(e) & A_last}
    if U_prev & U_last:
        raise InvariantError(f"U sets meet in {sorted(U_prev & U_last)}")
    B = TotalGraph(sorted(top | U_prev | U_last), edges)
    for u in U_prev | U_last:
        if B.degree(u) != 1:
            raise InvariantError(f"last stage: vertex {u} has degree {B.degree(u)} in B")
    X, Y = A_prev | U_last, A_last | U_prev
    last = bipartite_tlir2(B, (X, Y), red, blue)
    for u in U_prev | U_last:
        del last.vertex_colors[u]
    for u in U_last:
        (y,) = B.neighbors(u)
        if total_color_degree(B, last, y, red) == total_color_degree(B, last, u, red):
            if B.degree(y) != 1:
                raise InvariantError(f"last stage: repair at {y} needs degree 1")
            last.vertex_colors[y] = red
    for v in top:
        c.vertex_colors[v] = last.vertex(v)
    c.edge_colors.update(last.edge_colors)
    if trace is not None:
        trace.append(Stage(k - 1, (red, blue), tuple(sorted(X)), tuple(sorted(Y)), tuple(edges)))

    report = verify_tlir(G, c, require_total=True)
    if not report.valid:
        raise InvariantError(f"chromatic construction failed verification: {report.violations[:3]}")
    if max(c.colors_used()) > 2 * k - 2:
        raise InvariantError("more than 2k - 2 colors used")
    return c
