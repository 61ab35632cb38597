"""Total graphs, structural queries and graph-class recognizers.

A total graph carries a set of *full* vertices (which contribute one to
their own total degree and may carry a color) and *empty* vertices (which
contribute nothing and are never colored).  Ordinary graphs have every
vertex full.  Vertex ids are nonnegative integers and every iteration in
this package is in ascending id order, so all algorithms are reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

from .errors import ClassPreconditionError, InputError

Edge = tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    """Canonical (ascending) form of the edge uv."""
    if u == v:
        raise InputError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


class TotalGraph:
    """Immutable simple graph whose vertices are split into full and empty.

    >>> g = TotalGraph(range(3), [(0, 1), (2, 1)], empty=[2])
    >>> g.edges
    ((0, 1), (1, 2))
    >>> total_degree(g, 1), total_degree(g, 2)
    (3, 1)
    """

    def __init__(
        self,
        vertices: Iterable[int] | None = None,
        edges: Iterable[tuple[int, int]] = (),
        empty: Iterable[int] = (),
    ) -> None:
        eset = set()
        for e in edges:
            u, v = e
            eset.add(edge_key(int(u), int(v)))
        if vertices is None:
            vset = {w for e in eset for w in e}
        else:
            vset = {int(v) for v in vertices}
        for v in vset:
            if v < 0:
                raise InputError(f"vertex ids must be nonnegative, got {v}")
        for u, v in eset:
            if u not in vset or v not in vset:
                raise InputError(f"edge ({u}, {v}) has an undeclared endpoint")
        empty_set = frozenset(int(v) for v in empty)
        if not empty_set <= vset:
            raise InputError(f"empty vertices {sorted(empty_set - vset)} are not declared")
        adj: dict[int, list[int]] = {v: [] for v in vset}
        for u, v in eset:
            adj[u].append(v)
            adj[v].append(u)
        self._vertices = tuple(sorted(vset))
        self._vset = frozenset(vset)
        self._edges = tuple(sorted(eset))
        self._eset = frozenset(eset)
        self._empty = empty_set
        self._adj = {v: tuple(sorted(ns)) for v, ns in adj.items()}

    @classmethod
    def simple(cls, n: int, edges: Iterable[tuple[int, int]] = ()) -> "TotalGraph":
        """Ordinary graph on vertices ``0..n-1`` (all full)."""
        return cls(range(n), edges)

    # -- basic accessors -------------------------------------------------
    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def empty(self) -> frozenset[int]:
        return self._empty

    @cached_property
    def full(self) -> tuple[int, ...]:
        return tuple(v for v in self._vertices if v not in self._empty)

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return len(self._edges)

    def is_full(self, v: int) -> bool:
        self._check(v)
        return v not in self._empty

    def has_vertex(self, v: int) -> bool:
        return v in self._vset

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and edge_key(u, v) in self._eset

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self._adj[v])

    def incident_edges(self, v: int) -> list[Edge]:
        return [edge_key(v, w) for w in self.neighbors(v)]

    @cached_property
    def max_degree(self) -> int:
        return max((len(ns) for ns in self._adj.values()), default=0)

    @property
    def all_full(self) -> bool:
        return not self._empty

    def _check(self, v: int) -> None:
        if v not in self._vset:
            raise InputError(f"unknown vertex id {v}")

    # -- derived graphs ---------------------------------------------------
    def subgraph(self, vertices: Iterable[int]) -> "TotalGraph":
        keep = set(vertices)
        for v in keep:
            self._check(v)
        return TotalGraph(
            keep,
            [e for e in self._edges if e[0] in keep and e[1] in keep],
            self._empty & keep,
        )

    def remove_vertices(self, vertices: Iterable[int]) -> "TotalGraph":
        drop = set(vertices)
        return self.subgraph(v for v in self._vertices if v not in drop)

    def remove_edges(self, edges: Iterable[tuple[int, int]]) -> "TotalGraph":
        drop = {edge_key(*e) for e in edges}
        return TotalGraph(self._vertices, [e for e in self._edges if e not in drop], self._empty)

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> "TotalGraph":
        return TotalGraph(self._vertices, list(self._edges) + list(edges), self._empty)

    def add_vertices(self, vertices: Iterable[int], empty: bool = False) -> "TotalGraph":
        new = set(vertices)
        return TotalGraph(
            self._vset | new, self._edges, self._empty | (new if empty else set())
        )

    def union(self, other: "TotalGraph") -> "TotalGraph":
        """Union of two graphs; shared vertices must agree on fullness."""
        for v in self._vset & other._vset:
            if (v in self._empty) != (v in other._empty):
                raise InputError(f"vertex {v} is full in one graph and empty in the other")
        return TotalGraph(
            self._vset | other._vset,
            self._edges + other._edges,
            self._empty | other._empty,
        )

    def with_fullness(self, full: bool) -> "TotalGraph":
        """Same vertices and edges with every vertex full (or every vertex empty)."""
        return TotalGraph(self._vertices, self._edges, () if full else self._vertices)

    def relabel(self, mapping: dict[int, int]) -> "TotalGraph":
        return TotalGraph(
            (mapping[v] for v in self._vertices),
            ((mapping[u], mapping[v]) for u, v in self._edges),
            (mapping[v] for v in self._empty),
        )

    # -- connectivity -----------------------------------------------------
    def components(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        comps = []
        for s in self._vertices:
            if s in seen:
                continue
            seen.add(s)
            comp = [s]
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self._adj[u]:
                    if w not in seen:
                        seen.add(w)
                        comp.append(w)
                        queue.append(w)
            comps.append(tuple(sorted(comp)))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    # -- dunder -----------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TotalGraph):
            return NotImplemented
        return (
            self._vertices == other._vertices
            and self._edges == other._edges
            and self._empty == other._empty
        )

    def __hash__(self) -> int:
        return hash((self._vertices, self._edges, self._empty))

    def __iter__(self) -> Iterator[int]:
        return iter(self._vertices)

    def __len__(self) -> int:
        return len(self._vertices)

    def __repr__(self) -> str:
        extra = f", empty={sorted(self._empty)}" if self._empty else ""
        return f"TotalGraph(n={self.n}, edges={list(self._edges)}{extra})"


def total_degree(G: TotalGraph, v: int) -> int:
    """Number of edges containing ``v`` plus one if ``v`` is full."""
    return G.degree(v) + (1 if G.is_full(v) else 0)


def next_vertex_id(G: TotalGraph) -> int:
    return G.vertices[-1] + 1 if G.vertices else 0


# ---------------------------------------------------------------------------
# Block-cut tree
# ---------------------------------------------------------------------------

CYCLE = "cycle"
BRIDGE = "bridge"
OTHER = "other"

BCNode = tuple[str, int]  # ("block", index) or ("cut", vertex id)


@dataclass
class BlockCutTree:
    """Blocks, cut vertices and their incidence, plus the pruned tree.

    ``pruned`` keeps only the nodes that survive repeated deletion of leaves
    that are bridge-blocks or cut vertices; its leaves are cycle blocks.
    """

    blocks: list[tuple[int, ...]]
    block_edges: list[tuple[Edge, ...]]
    kinds: list[str]
    cut_vertices: tuple[int, ...]
    incidence: dict[BCNode, tuple[BCNode, ...]]
    pruned: dict[BCNode, tuple[BCNode, ...]]
    connected: bool = True
    block_of_edge: dict[Edge, int] = field(default_factory=dict)

    def pruned_leaves(self) -> list[BCNode]:
        return [node for node, nbrs in self.pruned.items() if len(nbrs) <= 1]


def _biconnected_components(G: TotalGraph) -> list[list[Edge]]:
    """Edge sets of the biconnected components (iterative Hopcroft-Tarjan)."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    out: list[list[Edge]] = []
    counter = 0
    for root in G.vertices:
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        edge_stack: list[Edge] = []
        stack = [(root, -1, iter(G.neighbors(root)))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if w not in disc:
                    disc[w] = low[w] = counter
                    counter += 1
                    edge_stack.append(edge_key(u, w))
                    stack.append((w, u, iter(G.neighbors(w))))
                    advanced = True
                    break
                if disc[w] < disc[u]:
                    low[u] = min(low[u], disc[w])
                    edge_stack.append(edge_key(u, w))
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[u])
                if low[u] >= disc[parent]:
                    comp = []
                    key = edge_key(parent, u)
                    while True:
                        e = edge_stack.pop()
                        comp.append(e)
                        if e == key:
                            break
                    out.append(sorted(comp))
    return out


def block_cut_tree(G: TotalGraph) -> BlockCutTree:
    comps = sorted(_biconnected_components(G))
    blocks: list[tuple[int, ...]] = []
    kinds: list[str] = []
    block_of_edge: dict[Edge, int] = {}
    membership: dict[int, list[int]] = {}
    for i, comp in enumerate(comps):
        vs = tuple(sorted({w for e in comp for w in e}))
        blocks.append(vs)
        if len(comp) == 1:
            kinds.append(BRIDGE)
        elif len(comp) == len(vs) and all(
            sum(1 for e in comp if v in e) == 2 for v in vs
        ):
            kinds.append(CYCLE)
        else:
            kinds.append(OTHER)
        for e in comp:
            block_of_edge[e] = i
        for v in vs:
            membership.setdefault(v, []).append(i)
    cuts = tuple(sorted(v for v, bs in membership.items() if len(bs) >= 2))
    incidence: dict[BCNode, list[BCNode]] = {("block", i): [] for i in range(len(blocks))}
    for v in cuts:
        incidence[("cut", v)] = [("block", i) for i in membership[v]]
        for i in membership[v]:
            incidence[("block", i)].append(("cut", v))
    incidence_t = {k: tuple(sorted(v)) for k, v in incidence.items()}

    # Prune leaves that are bridge blocks or cut vertices until none remain.
    alive = {k: set(v) for k, v in incidence_t.items()}
    queue = deque(sorted(alive))
    while queue:
        node = queue.popleft()
        if node not in alive or len(alive[node]) > 1:
            continue
        if node[0] == "block" and kinds[node[1]] != BRIDGE:
            continue
        for nb in alive.pop(node):
            alive[nb].discard(node)
            queue.append(nb)
    pruned = {k: tuple(sorted(v)) for k, v in sorted(alive.items())}
    return BlockCutTree(
        blocks=blocks,
        block_edges=[tuple(c) for c in comps],
        kinds=kinds,
        cut_vertices=cuts,
        incidence=incidence_t,
        pruned=pruned,
        connected=G.is_connected(),
        block_of_edge=block_of_edge,
    )


# ---------------------------------------------------------------------------
# Recognizers
# ---------------------------------------------------------------------------

def is_tree(G: TotalGraph) -> bool:
    return G.n >= 1 and G.m == G.n - 1 and G.is_connected()


def is_forest(G: TotalGraph) -> bool:
    return G.m == G.n - len(G.components())


def bipartition(G: TotalGraph) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """A 2-coloring (X, Y) of G, or None when G has an odd cycle.

    In each component the smallest vertex goes to X.
    """
    side: dict[int, int] = {}
    for s in G.vertices:
        if s in side:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in G.neighbors(u):
                if w not in side:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    X = tuple(v for v in G.vertices if side[v] == 0)
    Y = tuple(v for v in G.vertices if side[v] == 1)
    return X, Y


def is_cactus(G: TotalGraph) -> bool:
    """Connected graph in which every block is a cycle or a bridge."""
    if G.n == 0 or not G.is_connected():
        return False
    # A connected graph is a cactus iff every biconnected component has
    # |E| <= |V| (bridges and cycles only).
    return all(k != OTHER for k in block_cut_tree(G).kinds)


def is_subcubic(G: TotalGraph) -> bool:
    return G.max_degree <= 3


def regular_degree(G: TotalGraph) -> int | None:
    """Common degree if G is regular, else None."""
    degs = {G.degree(v) for v in G.vertices}
    return degs.pop() if len(degs) == 1 else None


def split_sets(G: TotalGraph) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Clique/independent split (X, Y) with X maximal, or None.

    Degree-sequence test of Hammer and Simeone, followed by growing X with any
    vertex of Y adjacent to all of X.
    """
    if G.n == 0:
        return (), ()
    order = sorted(G.vertices, key=lambda v: (-G.degree(v), v))
    degs = [G.degree(v) for v in order]
    m = max(i + 1 for i in range(len(degs)) if degs[i] >= i)
    if sum(degs[:m]) != m * (m - 1) + sum(degs[m:]):
        return None
    X = set(order[:m])
    Y = set(order[m:])
    changed = True
    while changed:
        changed = False
        for y in sorted(Y):
            if all(G.has_edge(y, x) for x in X):
                Y.remove(y)
                X.add(y)
                changed = True
                break
    return tuple(sorted(X)), tuple(sorted(Y))


def is_clique(G: TotalGraph, vs: Iterable[int]) -> bool:
    vs = list(vs)
    return all(G.has_edge(a, b) for i, a in enumerate(vs) for b in vs[i + 1:])


def is_independent(G: TotalGraph, vs: Iterable[int]) -> bool:
    vs = list(vs)
    return not any(G.has_edge(a, b) for i, a in enumerate(vs) for b in vs[i + 1:])


def _to_networkx(G: TotalGraph):
    import networkx as nx

    H = nx.Graph()
    H.add_nodes_from(G.vertices)
    H.add_edges_from(G.edges)
    return H


def is_planar(G: TotalGraph) -> bool:
    import networkx as nx

    return nx.check_planarity(_to_networkx(G))[0]


def is_outerplanar(G: TotalGraph) -> bool:
    """G is outerplanar iff G plus a universal apex vertex is planar."""
    import networkx as nx

    H = _to_networkx(G)
    apex = next_vertex_id(G)
    H.add_edges_from((apex, v) for v in G.vertices)
    H.add_node(apex)
    return nx.check_planarity(H)[0]


# ---------------------------------------------------------------------------
# Pendant cycles and the good vertex of a cactus
# ---------------------------------------------------------------------------

def _require_cactus(G: TotalGraph) -> BlockCutTree:
    if not is_cactus(G):
        raise ClassPreconditionError("graph is not a cactus")
    return block_cut_tree(G)


def cycle_sequence(G: TotalGraph, vertices: Iterable[int], start: int) -> tuple[int, ...]:
    """Walk the cycle on ``vertices`` from ``start`` toward its smaller neighbour."""
    vs = set(vertices)
    seq = [start]
    prev = None
    cur = start
    while True:
        nxt = [w for w in G.neighbors(cur) if w in vs and w != prev]
        if prev is None:
            nxt = nxt[:1]
        step = nxt[0]
        if step == start:
            break
        seq.append(step)
        prev, cur = cur, step
        if len(seq) > len(vs):
            raise InputError("vertex set does not induce a cycle")
    return tuple(seq)


def find_pendant_cycle(G: TotalGraph) -> tuple[int, ...] | None:
    """A pendant cycle of the cactus G, or None when G is a tree.

    A cycle is pendant when at most one component of G - E(C) contains a
    cycle; pendant cycles are the leaves of the pruned block-cut tree.  Ties
    go to the cycle with the lexicographically smallest vertex set.
    """
    bct = _require_cactus(G)
    leaves = [bct.blocks[i] for kind, i in bct.pruned_leaves() if kind == "block"]
    if not leaves:
        return None
    best = min(leaves)
    return cycle_sequence(G, best, best[0])


@dataclass
class GoodVertex:
    """A vertex x with all but at most two incident edges on pendant structures.

    ``cycles`` are vertex sequences ``(x, x1, ..., xn)``; ``trees`` are vertex
    sets containing x; ``leftover`` are the incident edges of x on neither.
    """

    x: int
    cycles: list[tuple[int, ...]]
    trees: list[tuple[int, ...]]
    leftover: list[Edge]


def _bfs_far(adj: dict, start) -> tuple[object, dict]:
    parent = {start: None}
    order = [start]
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in parent:
                parent[w] = u
                order.append(w)
                queue.append(w)
    dist = {start: 0}
    for u in order[1:]:
        dist[u] = dist[parent[u]] + 1
    far = max(order, key=lambda u: (dist[u], _neg_key(u)))
    return far, parent


def _neg_key(node):
    # Larger key wins in max(); prefer smaller node ids on ties.
    if isinstance(node, tuple):
        return (-node[1], node[0])
    return -node


def _longest_path(adj: dict, start) -> list:
    a, _ = _bfs_far(adj, start)
    b, parent = _bfs_far(adj, a)
    path = [b]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def _tree_branch(G: TotalGraph, x: int, w: int) -> tuple[int, ...] | None:
    """Vertex set of the component of G - x containing w, if it is a tree."""
    seen = {w}
    queue = deque([w])
    edges = 0
    while queue:
        u = queue.popleft()
        for z in G.neighbors(u):
            if z == x:
                if u != w:
                    return None
                continue
            edges += 1
            if z not in seen:
                seen.add(z)
                queue.append(z)
    edges //= 2
    if edges != len(seen) - 1:
        return None
    return tuple(sorted(seen | {x}))


def find_good_vertex(G: TotalGraph) -> GoodVertex:
    """Vertex whose incident edges, except at most two, lie on pendant structures.

    For trees, x is the second vertex of a longest path; otherwise x is the
    second node of a longest path of the pruned block-cut tree (a cut vertex),
    or a vertex of the only cycle when the pruned tree is a single cycle.
    """
    bct = _require_cactus(G)
    if G.n == 1:
        return GoodVertex(G.vertices[0], [], [], [])
    cycles: list[tuple[int, ...]] = []
    cycle_edges: set[Edge] = set()
    if not bct.pruned:
        path = _longest_path({v: G.neighbors(v) for v in G.vertices}, G.vertices[0])
        x = path[1]
    elif len(bct.pruned) == 1:
        (node,) = bct.pruned
        block = bct.blocks[node[1]]
        big = [v for v in block if G.degree(v) > 2]
        x = big[0] if big else block[0]
        cycles.append(cycle_sequence(G, block, x))
    else:
        path = _longest_path(bct.pruned, min(bct.pruned))
        x = path[1][1]
        for nb in bct.pruned[("cut", x)]:
            if len(bct.pruned[nb]) == 1:
                cycles.append(cycle_sequence(G, bct.blocks[nb[1]], x))
    for cyc in cycles:
        for i, u in enumerate(cyc):
            cycle_edges.add(edge_key(u, cyc[(i + 1) % len(cyc)]))
    trees = []
    tree_edges: set[Edge] = set()
    for w in G.neighbors(x):
        e = edge_key(x, w)
        if e in cycle_edges or bct.kinds[bct.block_of_edge[e]] != BRIDGE:
            continue
        branch = _tree_branch(G, x, w)
        if branch is not None:
            trees.append(branch)
            tree_edges.add(e)
    leftover = [e for e in G.incident_edges(x) if e not in cycle_edges and e not in tree_edges]
    return GoodVertex(x, cycles, trees, leftover)


# ---------------------------------------------------------------------------
# Class report
# ---------------------------------------------------------------------------

@dataclass
class ClassReport:
    n: int
    m: int
    max_degree: int
    connected: bool
    all_full: bool
    is_tree: bool
    bipartition: tuple[tuple[int, ...], tuple[int, ...]] | None
    is_cactus: bool
    is_subcubic: bool
    regular_degree: int | None
    split: tuple[tuple[int, ...], tuple[int, ...]] | None
    is_outerplanar: bool
    is_planar: bool

    @property
    def is_bipartite(self) -> bool:
        return self.bipartition is not None

    @property
    def is_regular(self) -> bool:
        return self.regular_degree is not None

    @property
    def is_split(self) -> bool:
        return self.split is not None


def classify(G: TotalGraph) -> ClassReport:
    return ClassReport(
        n=G.n,
        m=G.m,
        max_degree=G.max_degree,
        connected=G.is_connected(),
        all_full=G.all_full,
        is_tree=is_tree(G),
        bipartition=bipartition(G),
        is_cactus=is_cactus(G),
        is_subcubic=is_subcubic(G),
        regular_degree=regular_degree(G) if G.n else None,
        split=split_sets(G),
        is_outerplanar=is_outerplanar(G),
        is_planar=is_planar(G),
    )
