"""Seeded instance generators, named graphs and small-graph enumeration.

Every random generator draws from its own ``random.Random(seed)`` stream
(Mersenne Twister), so equal arguments give bit-identical graphs on every
platform.  Generated instances are checked by the matching recognizer before
being returned.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .errors import InputError, InvariantError
from .graph import (
    TotalGraph,
    bipartition,
    edge_key,
    is_cactus,
    is_outerplanar,
    is_planar,
    is_subcubic,
    is_tree,
    regular_degree,
    split_sets,
)

# ---------------------------------------------------------------------------
# Named graphs
# ---------------------------------------------------------------------------


def path(n: int) -> TotalGraph:
    return TotalGraph.simple(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> TotalGraph:
    if n < 3:
        raise InputError("a cycle needs at least 3 vertices")
    return TotalGraph.simple(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> TotalGraph:
    return TotalGraph.simple(n, combinations(range(n), 2))


def star(leaves: int) -> TotalGraph:
    return TotalGraph.simple(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> TotalGraph:
    return TotalGraph.simple(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def fan(n: int) -> TotalGraph:
    """Path on vertices 1..n-1 plus apex 0 joined to all of them."""
    edges = [(i, i + 1) for i in range(1, n - 1)] + [(0, i) for i in range(1, n)]
    return TotalGraph.simple(n, edges)


def butterfly() -> TotalGraph:
    """Two triangles sharing vertex 0."""
    return TotalGraph.simple(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


def bow_tie() -> TotalGraph:
    """Two butterflies whose centers 0 and 1 are joined by an edge.

    This is the cactus with lir = 4: every locally irregular edge coloring
    needs four colors.
    """
    return TotalGraph.simple(10, [
        (0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (2, 3), (4, 5),
        (1, 6), (1, 7), (1, 8), (1, 9), (6, 7), (8, 9),
    ])


def octahedron() -> TotalGraph:
    return TotalGraph.simple(6, [(u, v) for u, v in combinations(range(6), 2) if v != u + 3])


def w_gadget() -> TotalGraph:
    """K4 on 1..4 with edge 12 subdivided by vertex 0."""
    return TotalGraph.simple(5, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])


def petersen() -> TotalGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return TotalGraph.simple(10, outer + spokes + inner)


NAMED = {
    "butterfly": butterfly,
    "bow_tie": bow_tie,
    "octahedron": octahedron,
    "w_gadget": w_gadget,
    "petersen": petersen,
}

# ---------------------------------------------------------------------------
# Random generators
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GenSpec:
    """Everything that determines a generated instance."""

    cls: str
    n: int
    seed: int
    params: tuple[tuple[str, object], ...] = field(default=())

    def build(self) -> TotalGraph:
        return gen(self.cls, self.n, self.seed, **dict(self.params))


def _relabel(rng: random.Random, n: int, edges) -> TotalGraph:
    perm = list(range(n))
    rng.shuffle(perm)
    return TotalGraph.simple(n, [(perm[u], perm[v]) for u, v in edges])


def _tree(rng: random.Random, n: int, max_degree: int | None = None) -> list[tuple[int, int]]:
    deg = [0] * n
    edges = []
    for i in range(1, n):
        pool = [j for j in range(i) if max_degree is None or deg[j] < max_degree]
        p = rng.choice(pool)
        deg[p] += 1
        deg[i] += 1
        edges.append((p, i))
    return edges


def _gen_tree(rng: random.Random, n: int) -> TotalGraph:
    return _relabel(rng, n, _tree(rng, n))


def _gen_gnp(rng: random.Random, n: int, p: float = 0.4, connected: bool = True) -> TotalGraph:
    for _ in range(1000):
        G = TotalGraph.simple(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])
        if not connected or G.is_connected():
            return G
    raise InputError(f"no connected G(n={n}, p={p}) found; raise p")


def _gen_bipartite(rng: random.Random, n: int, p: float = 0.2) -> TotalGraph:
    """Random spanning tree across two sides plus cross edges with probability p."""
    side = [0]
    edges = set()
    for i in range(1, n):
        s = rng.randrange(2)
        if all(t == s for t in side):
            s = 1 - s
        side.append(s)
        edges.add((rng.choice([j for j in range(i) if side[j] != s]), i))
    for u, v in combinations(range(n), 2):
        if side[u] != side[v] and rng.random() < p:
            edges.add((u, v))
    return _relabel(rng, n, sorted(edges))


def _gen_cactus(rng: random.Random, n: int, cycle_prob: float = 0.6, max_cycle: int = 8) -> TotalGraph:
    """Grow from one vertex by hanging a leaf or a new cycle on a random vertex."""
    edges: list[tuple[int, int]] = []
    size = 1
    while size < n:
        v = rng.randrange(size)
        room = n - size
        if room >= 2 and rng.random() < cycle_prob:
            length = rng.randint(3, min(max_cycle, room + 1))
            ring = [v] + list(range(size, size + length - 1))
            edges += [(ring[i], ring[(i + 1) % length]) for i in range(length)]
            size += length - 1
        else:
            edges.append((v, size))
            size += 1
    return _relabel(rng, n, edges)


def _gen_subcubic(rng: random.Random, n: int, extra: int | None = None) -> TotalGraph:
    """Degree-capped random tree plus random extra edges between deficient vertices."""
    edges = set(edge_key(u, v) for u, v in _tree(rng, n, max_degree=3))
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    if extra is None:
        extra = rng.randint(0, n)
    for _ in range(extra):
        cand = [
            (u, v) for u, v in combinations(range(n), 2)
            if deg[u] < 3 and deg[v] < 3 and (u, v) not in edges
        ]
        if not cand:
            break
        u, v = rng.choice(cand)
        edges.add((u, v))
        deg[u] += 1
        deg[v] += 1
    return _relabel(rng, n, sorted(edges))


def _gen_regular(rng: random.Random, n: int, d: int = 3, retries: int = 300) -> TotalGraph:
    """Pairing model with rejection of loops and multi-edges.

    Rejection rarely succeeds for d >= 5, so after ``retries`` attempts the
    networkx sampler takes over, seeded from ``rng``.
    """
    if d < 0 or d >= n and not (n == 1 and d == 0):
        raise InputError(f"no {d}-regular graph on {n} vertices")
    if n * d % 2:
        raise InputError("n * d must be even")
    if d == n - 1:
        return complete(n)
    for _ in range(retries):
        points = [v for v in range(n) for _ in range(d)]
        rng.shuffle(points)
        edges = set()
        ok = True
        for i in range(0, len(points), 2):
            u, v = points[i], points[i + 1]
            e = (min(u, v), max(u, v))
            if u == v or e in edges:
                ok = False
                break
            edges.add(e)
        if ok:
            return TotalGraph.simple(n, sorted(edges))
    import networkx as nx

    H = nx.random_regular_graph(d, n, seed=rng.randrange(2**32))
    return TotalGraph.simple(n, sorted((min(u, v), max(u, v)) for u, v in H.edges()))


def _gen_split(
    rng: random.Random,
    n: int,
    profile: str = "random",
    clique: int | None = None,
    p: float = 0.5,
) -> TotalGraph:
    """Clique on the first vertices, independent rest attached to the clique.

    ``profile`` selects the outside-degree pattern: ``"random"`` attaches each
    independent vertex to a random nonempty subset of the clique;
    ``"pendant"`` hangs all independent vertices on one clique vertex, fewer
    than half the clique size of them; ``"pair"`` uses a clique of size 6..8
    with either two pendant vertices on distinct clique vertices or one
    vertex adjacent to two clique vertices.
    """
    if profile == "pendant":
        ks = [k for k in range(3, n) if 1 <= n - k < k // 2]
        if clique is not None:
            ks = [k for k in ks if k == clique]
        if not ks:
            raise InputError(f"no pendant split profile with n={n}")
        k = rng.choice(ks)
        hub = rng.randrange(k)
        edges = list(combinations(range(k), 2)) + [(hub, y) for y in range(k, n)]
    elif profile == "pair":
        ks = [k for k in (6, 7, 8) if n - k in (1, 2) and clique in (None, k)]
        if not ks:
            raise InputError(f"pair profile needs clique 6..8 and 1 or 2 outside vertices, got n={n}")
        k = rng.choice(ks)
        a, b = rng.sample(range(k), 2)
        edges = list(combinations(range(k), 2))
        if n - k == 1:
            edges += [(a, k), (b, k)]
        else:
            edges += [(a, k), (b, k + 1)]
    elif profile == "random":
        k = clique if clique is not None else rng.randint(1, n)
        if not 1 <= k <= n:
            raise InputError("clique size out of range")
        edges = list(combinations(range(k), 2))
        for y in range(k, n):
            nb = [x for x in range(k) if rng.random() < p] or [rng.randrange(k)]
            edges += [(x, y) for x in nb]
    else:
        raise InputError(f"unknown split profile {profile!r}")
    return _relabel(rng, n, edges)


def _triangulated_polygon(rng: random.Random, n: int) -> list[tuple[int, int]]:
    """Random triangulation of the convex polygon 0..n-1 by recursive splitting."""
    edges = [(i, (i + 1) % n) for i in range(n)] if n >= 3 else ([(0, 1)] if n == 2 else [])
    stack = [list(range(n))] if n > 3 else []
    while stack:
        poly = stack.pop()
        if len(poly) <= 3:
            continue
        i = rng.randrange(len(poly))
        candidates = [j for j in range(len(poly)) if (j - i) % len(poly) not in (0, 1, len(poly) - 1)]
        j = rng.choice(candidates)
        a, b = sorted((i, j))
        edges.append((poly[a], poly[b]))
        stack.append(poly[a:b + 1])
        stack.append(poly[b:] + poly[:a + 1])
    return edges


def _gen_maximal_outerplanar(rng: random.Random, n: int) -> TotalGraph:
    return _relabel(rng, n, _triangulated_polygon(rng, n))


def _gen_outerplanar(rng: random.Random, n: int, drop: float = 0.3, connected: bool = True) -> TotalGraph:
    """Maximal outerplanar graph with a random fraction of edges removed."""
    base = _triangulated_polygon(rng, n)
    for _ in range(1000):
        kept = [e for e in base if rng.random() >= drop]
        G = _relabel(rng, n, kept)
        if not connected or G.is_connected():
            return G
    raise InputError("could not keep the outerplanar graph connected")


def _gen_planar_triangulation(rng: random.Random, n: int, flips: int | None = None) -> TotalGraph:
    """Stacked triangulation followed by random edge flips."""
    if n < 3:
        raise InputError("a planar triangulation needs at least 3 vertices")
    faces = {(0, 1, 2), (0, 2, 1)}  # both sides of the initial triangle
    for v in range(3, n):
        f = rng.choice(sorted(faces))
        faces.remove(f)
        a, b, c = f
        faces |= {(a, b, v), (b, c, v), (c, a, v)}
    adj: dict[int, set[int]] = {v: set() for v in range(n)}
    for a, b, c in faces:
        for u, w in ((a, b), (b, c), (c, a)):
            adj[u].add(w)
            adj[w].add(u)
    # Directed edge -> third vertex of the face on its left.
    left = {}
    for a, b, c in faces:
        left[(a, b)], left[(b, c)], left[(c, a)] = c, a, b
    if flips is None:
        flips = 2 * n
    for _ in range(flips):
        u, w = rng.choice(sorted((u, w) for u in adj for w in adj[u] if u < w))
        p, q = left[(u, w)], left[(w, u)]
        if p == q or q in adj[p] or len(adj[u]) <= 3 or len(adj[w]) <= 3:
            continue
        # Faces (u, w, p) and (w, u, q) become (p, q, w)... rotate the diagonal.
        adj[u].discard(w)
        adj[w].discard(u)
        adj[p].add(q)
        adj[q].add(p)
        for key in ((u, w), (w, p), (p, u), (w, u), (u, q), (q, w)):
            left.pop(key, None)
        for a, b, c in ((p, u, q), (q, w, p)):
            left[(a, b)], left[(b, c)], left[(c, a)] = c, a, b
    edges = sorted({edge_key(u, w) for u in adj for w in adj[u]})
    return _relabel(rng, n, edges)


_GENERATORS = {
    "tree": (_gen_tree, is_tree),
    "gnp": (_gen_gnp, lambda G: True),
    "bipartite": (_gen_bipartite, lambda G: bipartition(G) is not None),
    "cactus": (_gen_cactus, is_cactus),
    "subcubic": (_gen_subcubic, is_subcubic),
    "split": (_gen_split, lambda G: split_sets(G) is not None),
    "regular": (_gen_regular, lambda G: regular_degree(G) is not None),
    "maximal_outerplanar": (_gen_maximal_outerplanar, is_outerplanar),
    "outerplanar": (_gen_outerplanar, is_outerplanar),
    "planar_triangulation": (
        _gen_planar_triangulation,
        lambda G: is_planar(G) and (G.n < 3 or G.m == 3 * G.n - 6),
    ),
}

CLASSES = tuple(sorted(_GENERATORS))


def gen(cls: str, n: int, seed: int, **params) -> TotalGraph:
    """Random instance of class ``cls`` on ``n`` vertices, deterministic in ``seed``."""
    if cls not in _GENERATORS:
        raise InputError(f"unknown class {cls!r}; choose from {', '.join(CLASSES)}")
    if n < 1:
        raise InputError("n must be positive")
    make, check = _GENERATORS[cls]
    rng = random.Random(seed)
    try:
        G = make(rng, n, **params)
    except TypeError as exc:
        raise InputError(f"bad parameters for {cls}: {exc}") from None
    if not check(G):
        raise InvariantError(f"generated {cls} instance failed its recognizer")
    return G


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


def enumerate_connected(n: int) -> Iterator[TotalGraph]:
    """All connected graphs on n vertices, one per isomorphism class (n <= 7)."""
    if not 1 <= n <= 7:
        raise InputError("enumeration is available for 1 <= n <= 7")
    import networkx as nx

    for H in nx.graph_atlas_g():
        if H.number_of_nodes() != n or not nx.is_connected(H):
            continue
        yield TotalGraph.simple(n, H.edges())
