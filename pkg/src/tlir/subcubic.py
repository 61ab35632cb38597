"""Red-blue locally irregular total colorings of regular and subcubic graphs.

Regular graphs are colored through a layering into successive maximum
independent sets: a vertex in layer i of a d-regular graph gets total
red-degree d + 1 - i, so adjacent vertices (which lie in different layers)
differ in both color classes.  The red edges are found by a small
degree-constrained search.

Subcubic graphs are reduced step by step (pendant trees, adjacent
2-vertices, W-gadgets on isolated 2-vertices) until a tree or a regular
graph remains, and the coloring is lifted back through each step.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from typing import Iterable

from .bipartite import attach_pendant_tree, bipartite_tlir2
from .coloring import (
    BLUE,
    RED,
    TotalColoring,
    color_degrees,
    total_color_degree,
    verify_tlir,
)
from .errors import ClassPreconditionError, InvariantError, PreconditionError
from .graph import (
    Edge,
    TotalGraph,
    edge_key,
    is_independent,
    is_subcubic,
    is_tree,
    next_vertex_id,
    regular_degree,
)
from .oracle import complete_partial_tlir, maximum_independent_set

log = logging.getLogger(__name__)

# ---------------------------------------------------------------------------
# Layered coloring of regular graphs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Layering:
    """Successive maximum independent sets V_0, V_1, ..."""

    layers: tuple[tuple[int, ...], ...]
    index: dict[int, int] = field(hash=False, compare=False, default_factory=dict)

    def __post_init__(self) -> None:
        if not self.index:
            self.index.update({v: i for i, layer in enumerate(self.layers) for v in layer})

    def layer(self, v: int) -> int:
        return self.index[v]


def build_layering(
    G: TotalGraph,
    avoid: Iterable[int] = (),
    first_layer: Iterable[int] | None = None,
) -> Layering:
    """Layer G into maximum independent sets.

    V_0 is a maximum independent set with as few ``avoid`` vertices as
    possible, unless ``first_layer`` is supplied by a caller that knows a
    maximum one.  Later layers are maximum independent sets of what is left.
    """
    avoid = set(avoid)
    if first_layer is not None:
        V0 = tuple(sorted(first_layer))
        if not is_independent(G, V0):
            raise PreconditionError("first layer is not independent")
    else:
        big = G.n + 1
        V0 = maximum_independent_set(G, weight=lambda v: big - (v in avoid))
    layers = [V0]
    left = set(G.vertices) - set(V0)
    while left:
        Vi = maximum_independent_set(G, vertices=left)
        layers.append(Vi)
        left -= set(Vi)
    return Layering(tuple(layers))


def _red_targets(G: TotalGraph, layering: Layering, d: int) -> dict[int, int]:
    targets = {}
    for v in G.vertices:
        t = d + 1 - layering.layer(v)
        if t < 1:
            raise InvariantError(f"vertex {v} sits in layer {layering.layer(v)} > {d}")
        targets[v] = t
    return targets


def _red_edge_set(
    G: TotalGraph,
    targets: dict[int, int],
    exact: Iterable[int] = (),
    node_limit: int = 2_000_000,
) -> set[Edge] | None:
    """Edge set F with deg_F(v) in {t(v) - 1, t(v)} for every v.

    Vertices in ``exact`` need deg_F(v) = t(v), which makes them blue.

    Depth-first search with forcing: a vertex that reached its target forces
    its open edges blue, one that can only just reach t(v) - 1 forces them
    red.  Branches on an open edge of the tightest vertex, red first.
    """
    inc = {v: G.incident_edges(v) for v in G.vertices}
    color: dict[Edge, int] = {}
    red = {v: 0 for v in G.vertices}
    open_ = {v: len(inc[v]) for v in G.vertices}
    trail: list[Edge] = []
    nodes = 0
    low = {v: targets[v] - (v not in set(exact)) for v in G.vertices}

    def assign(e: Edge, k: int) -> bool:
        color[e] = k
        trail.append(e)
        ok = True
        for w in e:
            open_[w] -= 1
            if k == RED:
                red[w] += 1
            if red[w] > targets[w] or red[w] + open_[w] < low[w]:
                ok = False
        return ok

    def undo(mark: int) -> None:
        while len(trail) > mark:
            e = trail.pop()
            k = color.pop(e)
            for w in e:
                open_[w] += 1
                if k == RED:
                    red[w] -= 1

    def propagate(queue: list[int]) -> bool:
        while queue:
            v = queue.pop()
            if open_[v] == 0:
                continue
            if red[v] == targets[v]:
                k = BLUE
            elif red[v] + open_[v] == low[v]:
                k = RED
            else:
                continue
            for e in inc[v]:
                if e not in color:
                    if not assign(e, k):
                        return False
                    queue.extend(e)
        return True

    def slack(v: int) -> int:
        return min(targets[v] - red[v], red[v] + open_[v] - low[v])

    def search() -> bool:
        nonlocal nodes
        pending = [v for v in G.vertices if open_[v]]
        if not pending:
            return True
        nodes += 1
        if nodes > node_limit:
            raise InvariantError("degree-constrained search exceeded its node limit")
        v = min(pending, key=lambda u: (slack(u), u))
        e = next(e for e in inc[v] if e not in color)
        for k in (RED, BLUE):
            mark = len(trail)
            if assign(e, k) and propagate(list(e)) and search():
                return True
            undo(mark)
        return False

    if not propagate(list(G.vertices)) or not search():
        return None
    return {e for e, k in color.items() if k == RED}


def regular_layered_tlir2(
    G: TotalGraph,
    avoid: Iterable[int] = (),
    first_layer: Iterable[int] | None = None,
    layering: Layering | None = None,
    prefer_blue: Iterable[int] = (),
) -> TotalColoring:
    """Red-blue locally irregular total coloring of a regular graph.

    Every vertex of layer V_i gets total red-degree d + 1 - i.  Vertices in
    ``prefer_blue`` are colored blue when some coloring allows it for all of
    them at once.
    """
    d = regular_degree(G)
    if d is None:
        raise ClassPreconditionError("graph is not regular")
    if not G.all_full:
        raise PreconditionError("all vertices must be full")
    if layering is None:
        layering = build_layering(G, avoid, first_layer)
    targets = _red_targets(G, layering, d)
    prefer_blue = sorted(prefer_blue)
    F = _red_edge_set(G, targets, prefer_blue) if prefer_blue else None
    if F is None:
        if prefer_blue:
            log.info("blue preference for %s cannot be met", prefer_blue)
        F = _red_edge_set(G, targets)
    if F is None:
        raise InvariantError("no edge set meets the layer red-degree targets")
    c = TotalColoring()
    for e in G.edges:
        c.edge_colors[e] = RED if e in F else BLUE
    for v in G.vertices:
        reds = sum(1 for e in G.incident_edges(v) if e in F)
        c.vertex_colors[v] = RED if reds == targets[v] - 1 else BLUE
    if not verify_tlir(G, c, require_total=True).valid:
        raise InvariantError("layered coloring is not locally irregular")
    return c


# ---------------------------------------------------------------------------
# Reductions
# ---------------------------------------------------------------------------

PENDANT_TREE = "pendant-tree"
CASE1 = "adjacent-2 case 1"
CASE2 = "adjacent-2 case 2"
CASE2_PENDANT = "adjacent-2 case 2 pendant C4"
CASE3 = "adjacent-2 case 3"
W_GADGET = "w-gadget"


@dataclass(frozen=True)
class Reduction:
    """One reduction step: ``before`` becomes ``after``.

    ``removed_edges`` lists every edge that disappears, including those at
    removed vertices, so :meth:`apply` and :meth:`undo` are exact inverses.
    ``path`` is ``(x0, x1, x2, x3)`` for the adjacent-2-vertex cases;
    ``root``/``tree`` describe a pendant tree; ``gadgets`` pairs each
    original 2-vertex with its W copy ``(w0, w1, w2, w3, w4)``.
    """

    kind: str
    before: TotalGraph
    after: TotalGraph
    removed_vertices: tuple[int, ...] = ()
    removed_edges: tuple[Edge, ...] = ()
    added_vertices: tuple[int, ...] = ()
    added_edges: tuple[Edge, ...] = ()
    path: tuple[int, ...] = ()
    root: int | None = None
    tree: TotalGraph | None = None
    gadgets: tuple[tuple[int, tuple[int, ...]], ...] = ()

    def apply(self, G: TotalGraph) -> TotalGraph:
        H = G.remove_edges(self.removed_edges).remove_vertices(self.removed_vertices)
        return H.add_vertices(self.added_vertices).add_edges(self.added_edges)

    def undo(self, H: TotalGraph) -> TotalGraph:
        G = H.remove_edges(self.added_edges).remove_vertices(self.added_vertices)
        return G.add_vertices(self.removed_vertices).add_edges(self.removed_edges)


def deficiency(G: TotalGraph) -> int:
    """s(G): the sum of 3 - deg(v)."""
    return sum(3 - G.degree(v) for v in G.vertices)


def measure(G: TotalGraph) -> tuple[int, int]:
    return deficiency(G), G.n


def _two_core(G: TotalGraph) -> set[int]:
    deg = {v: G.degree(v) for v in G.vertices}
    alive = set(G.vertices)
    stack = [v for v in G.vertices if deg[v] <= 1]
    while stack:
        v = stack.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for w in G.neighbors(v):
            if w in alive:
                deg[w] -= 1
                if deg[w] <= 1:
                    stack.append(w)
    return alive


def _make(kind: str, G: TotalGraph, removed=(), added=(), **kw) -> Reduction:
    removed = tuple(sorted(removed))
    gone = set(removed)
    removed_edges = tuple(e for e in G.edges if gone & set(e))
    added = tuple(sorted(edge_key(*e) for e in added))
    new = tuple(sorted({w for e in added for w in e} - set(G.vertices)))
    red = Reduction(kind, G, G, removed, removed_edges, new, added, **kw)
    return replace(red, after=red.apply(G))


def find_reduction(G: TotalGraph) -> Reduction | None:
    """First applicable reduction in priority order, or None for a base graph.

    Base graphs (trees, regular graphs, a single vertex) have no reduction.
    """
    if not is_subcubic(G):
        raise ClassPreconditionError("graph is not subcubic")
    if not G.is_connected():
        raise PreconditionError("graph must be connected")
    if G.n <= 1 or is_tree(G) or regular_degree(G) is not None:
        return None

    leaves = [v for v in G.vertices if G.degree(v) == 1]
    if leaves:
        core = _two_core(G)
        leaf = leaves[0]
        seen = {leaf}
        stack = [leaf]
        root = None
        while stack:
            u = stack.pop()
            for w in G.neighbors(u):
                if w in core:
                    root = w
                elif w not in seen:
                    seen.add(w)
                    stack.append(w)
        T = G.subgraph(seen | {root})
        return _make(PENDANT_TREE, G, removed=seen, root=root, tree=T)

    twos = [v for v in G.vertices if G.degree(v) == 2]
    for x1 in twos:
        partners = [w for w in G.neighbors(x1) if G.degree(w) == 2]
        if not partners:
            continue
        x2 = partners[0]
        x0 = next(w for w in G.neighbors(x1) if w != x2)
        x3 = next(w for w in G.neighbors(x2) if w != x1)
        if x0 == x3:
            return _make(CASE3, G, removed=(x1, x2), path=(x0, x1, x2, x3))
        if G.has_edge(x0, x3):
            if G.degree(x0) == 3 and G.degree(x3) == 3:
                return _make(CASE2, G, removed=(x1, x2), path=(x0, x1, x2, x3))
            if G.degree(x0) == 2:
                x0, x1, x2, x3 = x3, x2, x1, x0
            return _make(CASE2_PENDANT, G, removed=(x1, x2, x3), path=(x0, x1, x2, x3))
        return _make(
            CASE1, G, removed=(x1, x2), added=[(x0, x3)], path=(x0, x1, x2, x3)
        )

    # Isolated 2-vertices: a W copy on each of them makes the graph cubic.
    nxt = next_vertex_id(G)
    added: list[Edge] = []
    gadgets = []
    for x in twos:
        w = tuple(range(nxt, nxt + 5))
        nxt += 5
        w0, w1, w2, w3, w4 = w
        added += [(x, w0), (w0, w1), (w0, w2), (w1, w3), (w1, w4), (w2, w3), (w2, w4), (w3, w4)]
        gadgets.append((x, w))
    return _make(W_GADGET, G, added=added, gadgets=tuple(gadgets))


# ---------------------------------------------------------------------------
# Lifting
# ---------------------------------------------------------------------------


def _require_valid_near(G: TotalGraph, c: TotalColoring, vertices: Iterable[int], what: str) -> None:
    for v in vertices:
        for u, w in G.incident_edges(v):
            k = c.edge(u, w)
            if k is None or total_color_degree(G, c, u, k) == total_color_degree(G, c, w, k):
                raise InvariantError(f"{what}: conflict on edge ({u}, {w})")


def _lift_case1(red: Reduction, c: TotalColoring) -> TotalColoring:
    G, Gp = red.before, red.after
    x0, x1, x2, x3 = red.path
    if c.edge(x0, x3) != RED:
        c = c.swap(RED, BLUE)
    a = total_color_degree(Gp, c, x0, RED)
    b = total_color_degree(Gp, c, x3, RED)
    if a < b:
        x0, x1, x2, x3 = x3, x2, x1, x0
        a, b = b, a
    out = c.copy()
    out.clear_edge(x0, x3)
    out.set_edge(x0, x1, RED)
    out.set_edge(x2, x3, RED)
    out.set_vertex(x1, BLUE)
    out.set_vertex(x2, RED)
    if b in (1, 3):
        out.set_edge(x1, x2, BLUE)
    elif b == 2 and a in (3, 4):
        out.set_edge(x1, x2, RED)
    else:
        raise InvariantError(f"unexpected red degrees (a, b) = ({a}, {b})")
    _require_valid_near(G, out, red.path, "case 1 lift")
    return out


def _lift_by_completion(red: Reduction, c: TotalColoring, clear_vertices: Iterable[int], clear_edges) -> TotalColoring:
    G = red.before
    base = c.restrict(G)
    elements = []
    for v in clear_vertices:
        base.clear_vertex(v)
        elements.append(("v", v))
    for e in clear_edges:
        base.clear_edge(*e)
        elements.append(("e", edge_key(*e)))
    for v in red.removed_vertices:
        elements.append(("v", v))
    for e in G.edges:
        if any(w in red.removed_vertices for w in e):
            elements.append(("e", e))
    done = complete_partial_tlir(G, base, elements)
    if done is None:
        raise InvariantError(f"{red.kind}: no local completion exists")
    return done


def _edge_at(G: TotalGraph, v: int) -> Edge:
    (e,) = G.incident_edges(v)
    return e


def _lift_case2(red: Reduction, c: TotalColoring) -> TotalColoring:
    x0, _, _, x3 = red.path
    return _lift_by_completion(red, c, (x0, x3), [(x0, x3)])


def _lift_case2_pendant(red: Reduction, c: TotalColoring) -> TotalColoring:
    G, Gp = red.before, red.after
    x0, x1, x2, x3 = red.path
    if c.edge(*_edge_at(Gp, x0)) != BLUE:
        c = c.swap(RED, BLUE)
    square = G.subgraph(red.path)
    parts = ((x0, x2), (x1, x3)) if c.vertex(x0) == BLUE else ((x1, x3), (x0, x2))
    out = c.copy()
    out.update(bipartite_tlir2(square, parts))
    if out.vertex(x0) != c.vertex(x0):
        raise InvariantError("pendant C4 changed the color of its attachment vertex")
    _require_valid_near(G, out, red.path, "pendant C4 lift")
    return out


def _lift_case3(red: Reduction, c: TotalColoring) -> TotalColoring:
    Gp = red.after
    x0 = red.path[0]
    if c.edge(*_edge_at(Gp, x0)) != BLUE:
        c = c.swap(RED, BLUE)
    return _lift_by_completion(red, c, (x0,), ())


def _gadget_base(red: Reduction) -> tuple[TotalColoring, Layering]:
    G, Gp = red.before, red.after
    X = {x for x, _ in red.gadgets}
    big = G.n + 1
    core = maximum_independent_set(G, weight=lambda v: big - (v in X))
    first = set(core) | {w for _, ws in red.gadgets for w in ws[1:3]}
    layering = build_layering(Gp, first_layer=first)
    # A neighbour of red-degree 2 next to a 2-vertex in V_0 must be blue for
    # the gadget repair to work.
    blue = {u for x in X if layering.layer(x) == 0 for u in G.neighbors(x) if layering.layer(u) == 2}
    c = regular_layered_tlir2(Gp, layering=layering, prefer_blue=blue)
    for v in Gp.vertices:
        want = 4 - layering.layer(v)
        got = total_color_degree(Gp, c, v, RED)
        if got != want:
            raise InvariantError(f"vertex {v} in layer {layering.layer(v)} has red degree {got}")
    return c, layering


def _gadget_candidates(x: int, y: int, z: int, c: TotalColoring):
    """Repairs at a 2-vertex x that keep the color-degrees of y and z.

    The vertex color of x may flip; a neighbour u may trade colors with the
    edge xu when they differ, which leaves u's color-degrees unchanged.  The
    order starts with the proof's repairs (keep, flip x, fix y, fix z) and
    then tries the remaining combinations.
    """
    other = {RED: BLUE, BLUE: RED}
    x_now = c.vertex(x)
    swappable = [u for u in (y, z) if c.vertex(u) != c.edge(x, u)]
    combos = [((), x_now), ((), other[x_now])]
    combos += [((u,), RED) for u in (y, z) if u in swappable]
    combos += [((u,), BLUE) for u in (y, z) if u in swappable]
    if len(swappable) == 2:
        combos += [((y, z), RED), ((y, z), BLUE)]
    for swaps, x_color in combos:
        def repair(t, swaps=swaps, x_color=x_color):
            for u in swaps:
                t.set_vertex(u, c.edge(x, u))
                t.set_edge(x, u, c.vertex(u))
            t.set_vertex(x, x_color)

        yield f"swap {swaps}, x {x_color}", repair


def _lift_gadgets(red: Reduction, c: TotalColoring) -> TotalColoring:
    """Remove the W copies one at a time, repairing each 2-vertex locally.

    A repair may trade colors between a neighbour and its edge to x; such a
    trade is avoided on neighbours of 2-vertices still waiting for their
    gadget to be removed, since their later repair may rely on that color.
    """
    cur = red.after
    pending = [x for x, _ in red.gadgets]
    for x, ws in red.gadgets:
        pending.remove(x)
        nxt = cur.remove_vertices(ws)
        base = c.restrict(nxt)
        y, z = nxt.neighbors(x)
        before = {u: color_degrees(nxt, base, u) for u in (y, z)}
        watched = {u for u in (y, z) if any(nxt.has_edge(u, p) for p in pending)}
        valid = []
        for name, repair in _gadget_candidates(x, y, z, base):
            trial = base.copy()
            repair(trial)
            if all(color_degrees(nxt, trial, u) == before[u] for u in (y, z)) and _near_ok(nxt, trial, x):
                valid.append(trial)
        quiet = [t for t in valid if all(t.vertex(u) == base.vertex(u) for u in watched)]
        if quiet or valid:
            c = (quiet or valid)[0]
        else:
            log.info("gadget at %s: no degree-preserving repair, using local completion", x)
            done = None
            for extra in ((), (("v", y), ("v", z))):
                elements = [("v", x), ("e", edge_key(x, y)), ("e", edge_key(x, z)), *extra]
                trial = base.copy()
                for el in elements:
                    trial.clear(el)
                done = complete_partial_tlir(nxt, trial, elements)
                if done is not None:
                    break
            if done is None:
                raise InvariantError(f"gadget at {x}: no repair found")
            c = done
        cur = nxt
    return c


def _near_ok(G: TotalGraph, c: TotalColoring, v: int) -> bool:
    for u, w in G.incident_edges(v):
        k = c.edge(u, w)
        if total_color_degree(G, c, u, k) == total_color_degree(G, c, w, k):
            return False
    return True


def _lift(red: Reduction, c: TotalColoring) -> TotalColoring:
    if red.kind == PENDANT_TREE:
        return attach_pendant_tree(red.after, c, red.root, red.tree)
    if red.kind == CASE1:
        return _lift_case1(red, c)
    if red.kind == CASE2:
        return _lift_case2(red, c)
    if red.kind == CASE2_PENDANT:
        return _lift_case2_pendant(red, c)
    if red.kind == CASE3:
        return _lift_case3(red, c)
    if red.kind == W_GADGET:
        return _lift_gadgets(red, c)
    raise InvariantError(f"unknown reduction {red.kind}")


def _solve_connected(G: TotalGraph, trace: list | None = None) -> TotalColoring:
    stack: list[Reduction] = []
    cur = G
    while True:
        if cur.n == 1 or is_tree(cur):
            c = bipartite_tlir2(cur)
            break
        if regular_degree(cur) is not None:
            c = regular_layered_tlir2(cur)
            break
        red = find_reduction(cur)
        if not measure(red.after) < measure(cur):
            raise InvariantError(f"{red.kind} did not decrease (s, |V|)")
        if red.kind == W_GADGET and deficiency(red.after) != 0:
            raise InvariantError("W-gadget attachment did not produce a cubic graph")
        if trace is not None:
            trace.append(red.kind)
        stack.append(red)
        if red.kind == W_GADGET:
            c, _ = _gadget_base(red)
            break
        cur = red.after
    while stack:
        c = _lift(stack.pop(), c)
    return c


def subcubic_tlir2(G: TotalGraph, trace: list | None = None) -> TotalColoring:
    """Locally irregular total 2-coloring of a subcubic graph.

    ``trace``, when given, receives the kind of every reduction applied.
    """
    if not is_subcubic(G):
        raise ClassPreconditionError("graph is not subcubic")
    if not G.all_full:
        raise PreconditionError("all vertices must be full")
    c = TotalColoring()
    for comp in G.components():
        c.update(_solve_connected(G.subgraph(comp), trace))
    report = verify_tlir(G, c, require_total=True)
    if not report.valid or c.num_colors > 2:
        raise InvariantError(f"subcubic coloring failed verification: {report.violations[:3]}")
    return c
