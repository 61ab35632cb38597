import pytest

from tlir.bipartite import bipartite_tlir2
from tlir.chromatic import ProperClasses, chromatic_tlir, maximal_proper_classes, maximalize
from tlir.errors import NoColoringError, PreconditionError
from tlir.generators import complete, complete_bipartite, cycle, gen, octahedron, petersen
from tlir.graph import TotalGraph
from tlir.oracle import exact_chromatic

from conftest import naive_valid


def test_bipartite_classes():
    G = gen("bipartite", 12, 3)
    pc = maximal_proper_classes(G)
    assert pc.k == 2 and pc.is_maximal(G)
    for v in pc.classes[1]:
        assert any(pc.index[w] == 1 for w in G.neighbors(v))


def test_k4_singletons():
    pc = maximal_proper_classes(complete(4))
    assert pc.k == 4 and all(len(A) == 1 for A in pc.classes)


def test_c5_classes():
    pc = maximal_proper_classes(cycle(5))
    assert pc.k == 3 and pc.is_maximal(cycle(5))


def test_k_below_chromatic_number():
    with pytest.raises(NoColoringError):
        maximal_proper_classes(complete(4), k=3)
    assert maximal_proper_classes(cycle(5), k=4).k <= 4


def test_maximalize_fixpoint():
    G = cycle(6)
    vc = maximalize(G, {v: 1 + v for v in G.vertices})
    assert ProperClasses.from_coloring(vc).is_maximal(G)
    assert max(vc.values()) == 2


def test_bipartite_matches_proposition():
    for seed in range(10):
        G = gen("bipartite", 10, seed)
        pc = maximal_proper_classes(G)
        c = chromatic_tlir(G, pc)
        assert c == bipartite_tlir2(G, (pc.classes[0], pc.classes[1]))


@pytest.mark.parametrize("G, bound", [(cycle(5), 4), (complete(4), 6), (complete(5), 8), (petersen(), 4), (octahedron(), 4)], ids=str)
def test_named(G, bound):
    c = chromatic_tlir(G)
    assert naive_valid(G, c) and max(c.colors_used()) <= bound


def test_edgeless_and_disconnected():
    assert chromatic_tlir(TotalGraph([0])).vertex_colors == {0: 1}
    with pytest.raises(PreconditionError):
        chromatic_tlir(TotalGraph.simple(4, [(0, 1), (2, 3)]))


def test_staged_trace():
    G = complete(5)
    trace = []
    chromatic_tlir(G, trace=trace)
    assert [s.j for s in trace] == [1, 2, 3, 4]
    assert [s.colors for s in trace] == [(1, 2), (3, 4), (5, 6), (7, 8)]


def test_random_bound():
    for seed in range(80):
        G = gen("gnp", 5 + seed % 8, seed, p=0.25 + 0.6 * (seed % 4) / 3, connected=True)
        chi = exact_chromatic(G).value
        c = chromatic_tlir(G)
        assert naive_valid(G, c) and max(c.colors_used()) <= max(2 * chi - 2, 1)


def test_greedy_mode():
    G = gen("gnp", 30, 2, p=0.3, connected=True)
    pc = maximal_proper_classes(G, greedy=True)
    c = chromatic_tlir(G, pc)
    assert naive_valid(G, c) and max(c.colors_used()) <= 2 * pc.k - 2
