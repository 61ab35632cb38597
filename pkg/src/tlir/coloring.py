"""Partial total colorings and the verifiers for every coloring notion used.

Colors are positive integers; an element that has no entry is uncolored.
By convention color 1 is red and color 2 is blue.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import InputError, PreconditionError
from .graph import Edge, TotalGraph, edge_key

RED = 1
BLUE = 2

Element = tuple  # ("v", vertex) or ("e", (u, v))


def vertex_element(v: int) -> Element:
    return ("v", v)


def edge_element(u: int, v: int) -> Element:
    return ("e", edge_key(u, v))


@dataclass
class TotalColoring:
    """Partial assignment of colors to vertices and edges."""

    vertex_colors: dict[int, int] = field(default_factory=dict)
    edge_colors: dict[Edge, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.vertex_colors = {int(v): int(c) for v, c in self.vertex_colors.items()}
        self.edge_colors = {edge_key(*e): int(c) for e, c in self.edge_colors.items()}
        for c in list(self.vertex_colors.values()) + list(self.edge_colors.values()):
            if c < 1:
                raise InputError(f"colors must be positive integers, got {c}")

    # -- element access ---------------------------------------------------
    def vertex(self, v: int) -> int | None:
        return self.vertex_colors.get(v)

    def edge(self, u: int, v: int) -> int | None:
        return self.edge_colors.get(edge_key(u, v))

    def get(self, element: Element) -> int | None:
        kind, key = element
        return self.vertex_colors.get(key) if kind == "v" else self.edge_colors.get(key)

    def set_vertex(self, v: int, color: int) -> None:
        if color < 1:
            raise InputError(f"colors must be positive integers, got {color}")
        self.vertex_colors[v] = color

    def set_edge(self, u: int, v: int, color: int) -> None:
        if color < 1:
            raise InputError(f"colors must be positive integers, got {color}")
        self.edge_colors[edge_key(u, v)] = color

    def set(self, element: Element, color: int) -> None:
        kind, key = element
        if kind == "v":
            self.set_vertex(key, color)
        else:
            self.set_edge(*key, color)

    def clear_vertex(self, v: int) -> None:
        self.vertex_colors.pop(v, None)

    def clear_edge(self, u: int, v: int) -> None:
        self.edge_colors.pop(edge_key(u, v), None)

    def clear(self, element: Element) -> None:
        kind, key = element
        if kind == "v":
            self.clear_vertex(key)
        else:
            self.clear_edge(*key)

    # -- whole-coloring operations ----------------------------------------
    def copy(self) -> "TotalColoring":
        return TotalColoring(dict(self.vertex_colors), dict(self.edge_colors))

    def colors_used(self) -> list[int]:
        return sorted(set(self.vertex_colors.values()) | set(self.edge_colors.values()))

    @property
    def num_colors(self) -> int:
        return len(self.colors_used())

    def swap(self, a: int = RED, b: int = BLUE) -> "TotalColoring":
        """Copy with colors a and b exchanged everywhere."""
        table = {a: b, b: a}
        return TotalColoring(
            {v: table.get(c, c) for v, c in self.vertex_colors.items()},
            {e: table.get(c, c) for e, c in self.edge_colors.items()},
        )

    def recolored(self, mapping: Mapping[int, int]) -> "TotalColoring":
        return TotalColoring(
            {v: mapping.get(c, c) for v, c in self.vertex_colors.items()},
            {e: mapping.get(c, c) for e, c in self.edge_colors.items()},
        )

    def update(self, other: "TotalColoring") -> None:
        self.vertex_colors.update(other.vertex_colors)
        self.edge_colors.update(other.edge_colors)

    def restrict(self, G: TotalGraph) -> "TotalColoring":
        return TotalColoring(
            {v: c for v, c in self.vertex_colors.items() if G.has_vertex(v)},
            {e: c for e, c in self.edge_colors.items() if G.has_edge(*e)},
        )


def check_coloring(G: TotalGraph, c: TotalColoring) -> None:
    """Raise InputError unless c only colors elements of G and no empty vertex."""
    for v in c.vertex_colors:
        if not G.has_vertex(v):
            raise InputError(f"coloring references unknown vertex {v}")
        if not G.is_full(v):
            raise InputError(f"empty vertex {v} carries a color")
    for u, v in c.edge_colors:
        if not G.has_edge(u, v):
            raise InputError(f"coloring references missing edge ({u}, {v})")


def uncolored_elements(G: TotalGraph, c: TotalColoring) -> list[Element]:
    """Uncolored edges (ascending) followed by uncolored full vertices."""
    out: list[Element] = [("e", e) for e in G.edges if e not in c.edge_colors]
    out += [("v", v) for v in G.full if v not in c.vertex_colors]
    return out


def total_color_degree(G: TotalGraph, c: TotalColoring, v: int, k: int) -> int:
    """Incident edges of color k plus one if v itself has color k."""
    deg = sum(1 for w in G.neighbors(v) if c.edge(v, w) == k)
    return deg + (1 if c.vertex(v) == k else 0)


def color_degrees(G: TotalGraph, c: TotalColoring, v: int) -> Counter:
    """All total color-degrees of v at once, as a Counter keyed by color."""
    cnt: Counter = Counter()
    for w in G.neighbors(v):
        k = c.edge(v, w)
        if k is not None:
            cnt[k] += 1
    k = c.vertex(v)
    if k is not None:
        cnt[k] += 1
    return cnt


@dataclass(frozen=True, order=True)
class Violation:
    """Edge whose endpoints tie in the total degree of the edge's color class."""

    edge: Edge
    color: int
    degrees: tuple[int, int]

    def __str__(self) -> str:
        return f"edge {self.edge[0]} {self.edge[1]} class {self.color} degrees {self.degrees[0]} {self.degrees[1]}"


@dataclass
class TLIRReport:
    violations: list[Violation]
    uncolored: list[Element]

    @property
    def valid(self) -> bool:
        return not self.violations and not self.uncolored

    def __bool__(self) -> bool:
        return self.valid


def verify_tlir(G: TotalGraph, c: TotalColoring, require_total: bool = False) -> TLIRReport:
    """Check that every color class induces a locally irregular total subgraph.

    Uncolored edges impose no constraint, so partial colorings can be checked;
    with ``require_total`` every edge and every full vertex must be colored.
    """
    check_coloring(G, c)
    degs = {v: color_degrees(G, c, v) for v in G.vertices}
    violations = []
    for e in G.edges:
        k = c.edge_colors.get(e)
        if k is None:
            continue
        a, b = degs[e[0]][k], degs[e[1]][k]
        if a == b:
            violations.append(Violation(e, k, (a, b)))
    violations.sort()
    missing = uncolored_elements(G, c) if require_total else []
    return TLIRReport(violations, missing)


def is_tlir(G: TotalGraph, c: TotalColoring, require_total: bool = True) -> bool:
    return verify_tlir(G, c, require_total).valid


def is_locally_irregular(G: TotalGraph) -> bool:
    """Adjacent vertices have distinct total degrees."""
    return all(
        G.degree(u) + G.is_full(u) != G.degree(v) + G.is_full(v) for u, v in G.edges
    )


def verify_proper(G: TotalGraph, vc: Mapping[int, int]) -> Edge | None:
    """First edge whose colored endpoints share a color, or None."""
    for u, v in G.edges:
        a, b = vc.get(u), vc.get(v)
        if a is not None and a == b:
            return (u, v)
    return None


def _forest_cycle(vertices: Iterable[int], adj: Mapping[int, Iterable[int]]) -> tuple[int, ...] | None:
    """A cycle in the graph (vertices, adj) or None if it is a forest."""
    parent: dict[int, int | None] = {}
    depth: dict[int, int] = {}
    for s in vertices:
        if s in parent:
            continue
        parent[s] = None
        depth[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w == parent[u]:
                    continue
                if w in parent:
                    # Non-tree edge closes a cycle: join the two tree paths.
                    a, b = u, w
                    left, right = [a], [b]
                    while a != b:
                        if depth[a] >= depth[b]:
                            a = parent[a]
                            left.append(a)
                        else:
                            b = parent[b]
                            right.append(b)
                    right.pop()
                    return tuple(left + right[::-1])
                parent[w] = u
                depth[w] = depth[u] + 1
                queue.append(w)
    return None


def verify_acyclic(G: TotalGraph, vc: Mapping[int, int]) -> tuple[int, ...] | None:
    """Witness cycle alternating between two color classes, or None.

    ``vc`` must color every vertex properly.
    """
    missing = [v for v in G.vertices if v not in vc]
    if missing:
        raise PreconditionError(f"vertex coloring misses vertices {missing}")
    bad = verify_proper(G, vc)
    if bad is not None:
        raise PreconditionError(f"vertex coloring is not proper on edge {bad}")
    colors = sorted(set(vc[v] for v in G.vertices))
    for i, a in enumerate(colors):
        for b in colors[i + 1:]:
            vs = [v for v in G.vertices if vc[v] in (a, b)]
            adj = {v: [w for w in G.neighbors(v) if vc[w] in (a, b)] for v in vs}
            cyc = _forest_cycle(vs, adj)
            if cyc is not None:
                return cyc
    return None


@dataclass
class StarViolation:
    color: int
    vertices: tuple[int, ...]
    reason: str


def verify_star(
    G: TotalGraph,
    ec: Mapping[Edge, int],
    vc: Mapping[int, int] | None = None,
) -> StarViolation | None:
    """Check that every edge color class induces a star forest.

    With ``vc`` given, every star of class a with at least two edges must
    also have its center colored a, and every single-edge star of class a
    exactly one end colored a.
    """
    missing = [e for e in G.edges if e not in ec]
    if missing:
        raise PreconditionError(f"edge coloring misses edges {missing[:5]}")
    classes: dict[int, list[Edge]] = {}
    for e in G.edges:
        classes.setdefault(ec[e], []).append(e)
    for a in sorted(classes):
        adj: dict[int, list[int]] = {}
        for u, v in classes[a]:
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
        seen: set[int] = set()
        for s in sorted(adj):
            if s in seen:
                continue
            comp = []
            queue = deque([s])
            seen.add(s)
            while queue:
                u = queue.popleft()
                comp.append(u)
                for w in adj[u]:
                    if w not in seen:
                        seen.add(w)
                        queue.append(w)
            n_edges = sum(len(adj[u]) for u in comp) // 2
            comp_t = tuple(sorted(comp))
            if n_edges != len(comp) - 1:
                return StarViolation(a, comp_t, "class component contains a cycle")
            if n_edges == 1:
                if vc is not None and sum(vc.get(u) == a for u in comp) != 1:
                    return StarViolation(a, comp_t, f"trivial star needs exactly one end colored {a}")
                continue
            centers = [u for u in comp if len(adj[u]) == n_edges]
            if not centers:
                return StarViolation(a, comp_t, "class component is not a star")
            if vc is not None and vc.get(centers[0]) != a:
                return StarViolation(a, comp_t, f"center {centers[0]} is not colored {a}")
    return None
