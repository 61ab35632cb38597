import pytest

from tlir.coloring import (
    BLUE,
    RED,
    TotalColoring,
    color_degrees,
    total_color_degree,
    verify_acyclic,
    verify_proper,
    verify_star,
    verify_tlir,
)
from tlir.errors import InputError, PreconditionError
from tlir.generators import complete, cycle, gen, path, star
from tlir.graph import TotalGraph, total_degree

from conftest import class_degree, naive_valid


def _mono(G, k=1):
    return TotalColoring({v: k for v in G.full}, {e: k for e in G.edges})


def test_total_color_degree_examples():
    G = star(2)
    c = TotalColoring({1: 1, 0: 2}, {(0, 1): 1, (0, 2): 1})
    assert total_color_degree(G, c, 1, 1) == 2
    c.set_vertex(1, 2)
    assert total_color_degree(G, c, 1, 1) == 1
    c.clear_vertex(2)
    assert total_color_degree(G, c, 2, 3) == 0
    assert total_color_degree(G, c, 0, 1) == 2


def test_color_zero_rejected():
    with pytest.raises(InputError):
        TotalColoring({0: 0})


def test_color_degrees_sum_to_total_degree():
    G = gen("gnp", 10, 4, p=0.5)
    c = TotalColoring({v: 1 + v % 3 for v in G.vertices}, {e: 1 + sum(e) % 3 for e in G.edges})
    for v in G.vertices:
        assert sum(color_degrees(G, c, v).values()) == total_degree(G, v)


def test_p4_monochromatic_violation():
    G = path(4)
    report = verify_tlir(G, _mono(G))
    assert not report.valid
    assert [(v.edge, v.color, v.degrees) for v in report.violations] == [((1, 2), 1, (3, 3))]
    assert str(report.violations[0]) == "edge 1 2 class 1 degrees 3 3"


def test_single_vertex_valid():
    G = TotalGraph([0])
    assert verify_tlir(G, TotalColoring({0: 1}), require_total=True).valid


def test_require_total_reports_missing():
    G = path(3)
    report = verify_tlir(G, TotalColoring(), require_total=True)
    assert not report.valid and len(report.uncolored) == 5
    assert verify_tlir(G, TotalColoring()).valid


def test_empty_vertex_cannot_be_colored():
    G = TotalGraph([0, 1], [(0, 1)], empty=[1])
    with pytest.raises(InputError):
        verify_tlir(G, TotalColoring({1: 1}))


def test_single_class_matches_local_irregularity():
    for seed in range(30):
        G = gen("gnp", 7, seed, p=0.4)
        degs = {v: G.degree(v) + 1 for v in G.vertices}
        irregular = all(degs[u] != degs[v] for u, v in G.edges)
        assert verify_tlir(G, _mono(G), require_total=True).valid == irregular


def test_violation_degrees_match_recount():
    G = gen("gnp", 10, 11, p=0.5)
    c = TotalColoring({v: 1 + v % 2 for v in G.vertices}, {e: 1 + (e[0] * e[1]) % 2 for e in G.edges})
    for viol in verify_tlir(G, c).violations:
        u, v = viol.edge
        assert viol.degrees == (class_degree(G, c, u, viol.color), class_degree(G, c, v, viol.color))
    assert verify_tlir(G, c).valid == naive_valid(G, c)


def test_uncoloring_only_affects_incident_edges():
    G = gen("gnp", 10, 2, p=0.5)
    c = TotalColoring({v: 1 + v % 2 for v in G.vertices}, {e: 1 + sum(e) % 2 for e in G.edges})
    before = {v.edge for v in verify_tlir(G, c).violations}
    e = G.edges[3]
    c.clear_edge(*e)
    after = {v.edge for v in verify_tlir(G, c).violations}
    changed = (before ^ after) - {e}
    assert all(set(f) & set(e) for f in changed)


def test_proper_examples():
    assert verify_proper(complete(3), {0: 1, 1: 2, 2: 3}) is None
    assert verify_proper(complete(2), {0: 1, 1: 1}) == (0, 1)
    assert verify_proper(TotalGraph([0, 1, 2]), {0: 1, 1: 1, 2: 1}) is None


def test_acyclic_examples():
    C4 = cycle(4)
    assert sorted(verify_acyclic(C4, {0: 1, 1: 2, 2: 1, 3: 2})) == [0, 1, 2, 3]
    assert verify_acyclic(C4, {0: 1, 1: 2, 2: 1, 3: 3}) is None
    T = gen("tree", 12, 5)
    from tlir.graph import bipartition

    X, _ = bipartition(T)
    assert verify_acyclic(T, {v: 1 if v in X else 2 for v in T.vertices}) is None
    with pytest.raises(PreconditionError):
        verify_acyclic(C4, {0: 1, 1: 1, 2: 2, 3: 2})


def test_star_examples():
    P3 = path(3)
    assert verify_star(P3, {(0, 1): 1, (1, 2): 1}) is None
    assert verify_star(P3, {(0, 1): 1, (1, 2): 1}, {0: 2, 1: 1, 2: 2}) is None
    assert verify_star(P3, {(0, 1): 1, (1, 2): 1}, {0: 1, 1: 2, 2: 1}) is not None
    P4 = path(4)
    assert verify_star(P4, {e: 1 for e in P4.edges}) is not None
    assert verify_star(cycle(3), {e: 1 for e in cycle(3).edges}) is not None


def test_swap_preserves_validity():
    from tlir.bipartite import bipartite_tlir2

    G = cycle(6)
    c = bipartite_tlir2(G)
    assert verify_tlir(G, c.swap(RED, BLUE), require_total=True).valid
