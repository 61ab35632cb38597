import random

import pytest

from tlir.coloring import TotalColoring, verify_acyclic, verify_tlir
from tlir.generators import bow_tie, butterfly, complete, cycle, gen, path, star
from tlir.graph import TotalGraph
from tlir.oracle import (
    BUDGET,
    OK,
    UNCOLORABLE,
    SearchBudget,
    complete_partial_tlir,
    exact_acyclic,
    exact_chromatic,
    exact_lir,
    exact_tlir,
    find_lir_coloring,
    maximum_independent_set,
)

from conftest import brute_acyclic, brute_lir, brute_tlir, naive_valid, random_graph


def test_tlir_anchors(backend):
    assert exact_tlir(TotalGraph([0]), backend=backend).value == 1
    res = exact_tlir(path(4), backend=backend)
    assert res.value == 2 and naive_valid(path(4), res.witness)
    res = exact_tlir(bow_tie(), backend=backend)
    assert res.value == 2 and naive_valid(bow_tie(), res.witness)


def test_lir_anchors(backend):
    assert exact_lir(bow_tie(), backend=backend).value == 4
    assert exact_lir(complete(2), backend=backend).status == UNCOLORABLE
    assert exact_lir(star(3), backend=backend).value == 1


def test_lir_of_odd_paths_and_cycles(backend):
    for G in (path(2), path(4), path(6), cycle(3), cycle(5), cycle(7)):
        assert exact_lir(G, backend=backend).status == UNCOLORABLE


def test_acyclic_anchors():
    assert exact_acyclic(gen("tree", 9, 1)).value == 2
    assert exact_acyclic(cycle(4)).value == 3
    assert exact_acyclic(complete(4)).value == 4


def test_tlir_matches_brute_force(backend):
    rng = random.Random(7)
    for _ in range(40):
        G = random_graph(rng, rng.randint(1, 5), 0.5)
        if G.m + G.n > 11:
            continue
        assert exact_tlir(G, backend=backend).value == brute_tlir(G)


def test_lir_matches_brute_force(backend):
    rng = random.Random(3)
    for _ in range(60):
        G = random_graph(rng, rng.randint(2, 6), 0.5)
        if G.m > 9:
            continue
        res = exact_lir(G, backend=backend)
        expect = brute_lir(G, max_k=G.m)
        assert res.value == expect
        if expect is None:
            assert res.status == UNCOLORABLE


def test_witnesses_verify(backend):
    for seed in range(15):
        G = gen("gnp", 7, seed, p=0.5)
        res = exact_tlir(G, backend=backend)
        assert res.ok and verify_tlir(G, res.witness, require_total=True).valid
        assert res.witness.num_colors == res.value


def test_tlir_one_iff_locally_irregular(backend):
    for seed in range(25):
        G = gen("gnp", 6, seed, p=0.5)
        degs = {v: G.degree(v) for v in G.vertices}
        irregular = all(degs[u] != degs[v] for u, v in G.edges)
        assert (exact_tlir(G, backend=backend).value == 1) == irregular


def test_backends_agree():
    from tlir import _kernel

    if len(_kernel.BACKENDS) < 2:
        pytest.skip("compiled kernel not built")
    for seed in range(10):
        G = gen("gnp", 7, seed, p=0.45)
        a = exact_tlir(G, backend="cython")
        b = exact_tlir(G, backend="python")
        assert a.value == b.value and a.witness == b.witness and a.nodes == b.nodes


def test_determinism():
    G = gen("gnp", 8, 5, p=0.5)
    assert exact_tlir(G).witness == exact_tlir(G).witness


def test_budget_is_reported():
    G = gen("gnp", 9, 1, p=0.6)
    res = exact_tlir(G, SearchBudget(node_limit=5))
    assert res.status == BUDGET and res.value is None and not res.ok


def test_completion_examples(backend):
    G = path(4)
    full = exact_tlir(G).witness
    assert complete_partial_tlir(G, full.copy(), [], backend=backend) == full
    K2 = complete(2)
    els = [("v", 0), ("v", 1), ("e", (0, 1))]
    assert complete_partial_tlir(K2, TotalColoring(), els, palette=(1,), backend=backend) is None
    c = full.copy()
    for el in (("e", (1, 2)), ("v", 1), ("v", 2)):
        c.clear(el)
    done = complete_partial_tlir(G, c, [("e", (1, 2)), ("v", 1), ("v", 2)], backend=backend)
    assert done is not None and naive_valid(G, done)


def test_find_lir_coloring():
    res = find_lir_coloring(butterfly(), 3)
    assert res.status == OK and res.value <= 3
    assert find_lir_coloring(bow_tie(), 3).status == UNCOLORABLE


def test_chromatic_numbers():
    assert exact_chromatic(cycle(5)).value == 3
    assert exact_chromatic(complete(5)).value == 5
    assert exact_chromatic(cycle(6)).value == 2


def test_maximum_independent_set():
    C5 = cycle(5)
    mis = maximum_independent_set(C5)
    assert len(mis) == 2
    G = gen("gnp", 12, 4, p=0.3)
    best = maximum_independent_set(G)
    import itertools

    size = max(
        k for k in range(G.n + 1)
        for S in itertools.combinations(G.vertices, k)
        if all(not G.has_edge(a, b) for a, b in itertools.combinations(S, 2))
    ) if G.n <= 12 else None
    assert len(best) == size


def test_acyclic_witness_valid():
    for seed in range(10):
        G = gen("planar_triangulation", 8, seed)
        res = exact_acyclic(G)
        assert res.ok and verify_acyclic(G, res.witness) is None


def test_acyclic_cycle_between_later_neighbours():
    # Two triangles on one edge plus vertex 4 adjacent to 1 and 2: the
    # alternating cycle 4-1-3-2 avoids the first same-colored neighbour 0.
    from tlir.oracle import _bicolored_cycle_through

    G = TotalGraph.simple(5, [(0, 4), (1, 4), (2, 4), (1, 3), (2, 3)])
    assert _bicolored_cycle_through(G, {0: 2, 1: 2, 2: 2, 3: 1, 4: 1}, 4)
    assert not _bicolored_cycle_through(G, {0: 2, 1: 2, 2: 2, 3: 3, 4: 1}, 4)
    res = exact_acyclic(G)
    assert verify_acyclic(G, res.witness) is None and res.value == brute_acyclic(G)


def test_acyclic_matches_brute():
    rng = random.Random(21)
    for _ in range(120):
        G = random_graph(rng, rng.randint(1, 7), rng.choice([0.3, 0.5, 0.7]))
        res = exact_acyclic(G)
        assert verify_acyclic(G, res.witness) is None
        assert res.value == brute_acyclic(G)
