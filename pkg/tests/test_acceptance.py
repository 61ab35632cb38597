"""Acceptance criteria AC1-AC11.

Each test prints one ``ACn PASS|FAIL`` line (shown even under capture) and
then asserts.  Seeds are fixed, so every run checks the same instances.
"""

from __future__ import annotations

import random
import time

import networkx as nx
import pytest

from tlir.acyclic import PEEL, SEARCH, acyclic_to_tlir, outerplanar_tlir3, planar_tlir_k, star_from_acyclic
from tlir.bipartite import bipartite_tlir2
from tlir.cactus import cactus_tlir2
from tlir.chromatic import chromatic_tlir, maximal_proper_classes
from tlir.coloring import verify_star, verify_tlir
from tlir.generators import CONNECTED_COUNTS, bow_tie, complete, enumerate_connected, gen, path
from tlir.graph import bipartition, is_cactus, is_outerplanar, is_planar, is_subcubic, regular_degree
from tlir.oracle import UNCOLORABLE, exact_acyclic, exact_chromatic, exact_lir, exact_tlir
from tlir.split import COMPLETE, LIR2, PAIR, PENDANT, TREE, dispatch, lir_to_tlir, split_partition, split_tlir2
from tlir.subcubic import subcubic_tlir2

from conftest import class_degree, naive_valid


@pytest.fixture
def report(capsys):
    def emit(ac: str, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\n{ac} {'PASS' if ok else 'FAIL'} {detail}")
        assert ok, f"{ac}: {detail}"

    return emit


def _valid(G, c, bound: int) -> bool:
    """Both the package verifier and the independent checker, plus the color bound."""
    return bool(verify_tlir(G, c, require_total=True)) and naive_valid(G, c) and max(c.colors_used(), default=0) <= bound


def _sweep(n_max: int) -> tuple[int, int, float]:
    start, worst, count = time.perf_counter(), 0, 0
    for n in range(1, n_max + 1):
        for G in enumerate_connected(n):
            res = exact_tlir(G)
            assert res.ok and naive_valid(G, res.witness)
            worst, count = max(worst, res.value), count + 1
    return count, worst, time.perf_counter() - start


def test_ac1_sweep(report):
    count, worst, secs = _sweep(5)
    report("AC1", count == 31 and worst <= 2 and secs < 60, f"n<=5: {count} graphs, max tlir {worst}, {secs:.2f}s")


def test_ac1_stretch_six(report):
    count, worst, secs = _sweep(6)
    report("AC1-stretch", count == 31 + 112 and worst <= 2 and secs < 1800,
           f"n<=6: {count} graphs, max tlir {worst}, {secs:.2f}s")


def test_ac1_beyond_seven(report):
    count, worst, secs = _sweep(7)
    report("AC1-n7", count == sum(CONNECTED_COUNTS[n] for n in range(1, 8)) and worst <= 2,
           f"n<=7: {count} graphs, max tlir {worst}, {secs:.2f}s")


def test_ac2_cactus(report):
    rng = random.Random(2)
    fails, slowest = [], 0.0
    for i in range(200):
        G = gen("cactus", rng.randint(4, 40), 1000 + i)
        assert is_cactus(G)
        t = time.perf_counter()
        c = cactus_tlir2(G)
        slowest = max(slowest, time.perf_counter() - t)
        if not _valid(G, c, 2):
            fails.append(i)
    report("AC2", not fails and slowest < 1.0, f"200 cacti, failures {fails}, slowest {slowest:.3f}s")


def test_ac3_subcubic(report):
    rng = random.Random(3)
    graphs = [gen("regular", rng.randrange(4, 31, 2), 2000 + i, d=3) for i in range(60)]
    graphs += [gen("subcubic", rng.randint(2, 30), 3000 + i) for i in range(140)]
    cubic = sum(1 for G in graphs if regular_degree(G) == 3)
    fails = []
    for i, G in enumerate(graphs):
        assert is_subcubic(G) and G.n <= 30
        trace: list = []
        if not _valid(G, subcubic_tlir2(G, trace), 2):
            fails.append(i)
    report("AC3", not fails and cubic >= 50, f"200 subcubic ({cubic} cubic), failures {fails}")


def _split_instances():
    out = []
    for i in range(20):
        out.append(gen("split", 6 + i % 5, 4000 + i, profile="pendant"))
    for i in range(24):
        k = 6 + i % 3
        out.append(gen("split", k + 1 + (i // 3) % 2, 4100 + i, profile="pair", clique=k))
    for i in range(10):
        out.append(gen("split", 4 + i, 4200 + i, clique=2))
    for i in range(10):
        out.append(complete(3 + i))
    for i in range(36):
        out.append(gen("split", 5 + i % 8, 4300 + i))
    return out


def test_ac4_split(report):
    graphs = _split_instances()
    routes, fails = {}, []
    for i, G in enumerate(graphs):
        H = G.remove_vertices([v for v in G.vertices if G.degree(v) == 0])
        route = dispatch(H, split_partition(H))
        routes[route] = routes.get(route, 0) + 1
        if not _valid(G, split_tlir2(G), 2):
            fails.append(i)
    covered = set(routes) == {TREE, COMPLETE, PENDANT, PAIR, LIR2}
    report("AC4", len(graphs) == 100 and covered and not fails, f"{len(graphs)} split graphs, routes {routes}, failures {fails}")


def test_ac5_chromatic(report):
    want = {2: 25, 3: 25, 4: 25, 5: 25}
    seen = {k: 0 for k in want}
    fails, seed = [], 5000
    while any(seen[k] < want[k] for k in want):
        seed += 1
        rng = random.Random(seed)
        G = gen("gnp", rng.randint(4, 12), seed, p=rng.choice([0.25, 0.4, 0.55, 0.7, 0.85]))
        chi = exact_chromatic(G).value
        if chi not in seen or seen[chi] >= want[chi]:
            continue
        seen[chi] += 1
        pc = maximal_proper_classes(G)
        trace: list = []
        c = chromatic_tlir(G, pc, trace=trace)
        staged = [s.j for s in trace] == list(range(1, chi))
        if pc.k != chi or not staged or not _valid(G, c, 2 * chi - 2):
            fails.append(seed)
    report("AC5", not fails, f"100 graphs by chi {seen}, failures {fails}")


def test_ac6_outerplanar(report):
    fails = []
    for i in range(100):
        G = gen("maximal_outerplanar", 3 + i % 48, 6000 + i)
        routes: list = []
        if not (_valid(G, outerplanar_tlir3(G, routes=routes), 3) and routes == [PEEL]):
            fails.append(("max", i))
    done, seed = 0, 6100
    while done < 20:
        seed += 1
        G = gen("outerplanar", 5 + seed % 8, seed)
        if G.m == 2 * G.n - 3:
            continue
        assert is_outerplanar(G)
        routes = []
        if not (_valid(G, outerplanar_tlir3(G, routes=routes), 3) and routes == [SEARCH]):
            fails.append(("non-max", seed))
        done += 1
    report("AC6", not fails, f"100 maximal (peel) + 20 non-maximal (search), failures {fails}")


def _forest_pairs(G, vc) -> bool:
    """Every two color classes induce a forest, checked with networkx."""
    H = nx.Graph(list(G.edges))
    for a in set(vc.values()):
        for b in set(vc.values()):
            if a < b:
                S = H.subgraph([v for v in H if vc[v] in (a, b)])
                if S.number_of_nodes() and not nx.is_forest(S):
                    return False
    return all(vc[u] != vc[v] for u, v in G.edges)


def test_ac7_planar(report):
    fails = []
    for i in range(20):
        G = gen("planar_triangulation", 4 + i % 9, 7000 + i)
        assert is_planar(G) and G.m == 3 * G.n - 6
        c = planar_tlir_k(G)
        vc = dict(c.vertex_colors)
        acyc = exact_acyclic(G)
        if not (_valid(G, c, 5) and _forest_pairs(G, vc) and acyc.ok and acyc.value <= max(vc.values()) <= 5):
            fails.append(i)
    report("AC7", not fails, f"20 triangulations, failures {fails}")


def test_ac8_anchors(report):
    got = {
        "lir(bow-tie)": exact_lir(bow_tie()).value,
        "lir(K2)": exact_lir(complete(2)).status,
        "tlir(P4)": exact_tlir(path(4)).value,
        "tlir(bow-tie)": exact_tlir(bow_tie()).value,
        "acyclic(K4)": exact_acyclic(complete(4)).value,
    }
    want = {"lir(bow-tie)": 4, "lir(K2)": UNCOLORABLE, "tlir(P4)": 2, "tlir(bow-tie)": 2, "acyclic(K4)": 4}
    report("AC8", got == want, str(got))


def test_ac9_parity(report):
    fails = []
    for i in range(500):
        G = gen("bipartite", 2 + i % 39, 9000 + i)
        X, Y = bipartition(G)
        c = bipartite_tlir2(G, (X, Y))
        # nx.bipartite.color certifies the sides independently of tlir.graph
        side = nx.bipartite.color(nx.Graph(list(G.edges)))
        ok = all(k == 1 for k in c.edge_colors.values()) and set(c.edge_colors) == set(G.edges)
        ok &= all(class_degree(G, c, x, 1) % 2 == 0 for x in X)
        ok &= all(class_degree(G, c, y, 1) % 2 == 1 for y in Y)
        ok &= all(side[u] != side[v] for u, v in G.edges) and naive_valid(G, c)
        if not ok:
            fails.append(i)
    report("AC9", not fails, f"500 bipartite graphs, failures {fails}")


def test_ac10_acyclic_stars(report):
    fails = []
    for i in range(200):
        rng = random.Random(10_000 + i)
        G = gen("gnp", rng.randint(3, 12), 10_000 + i, p=rng.choice([0.2, 0.35, 0.5]))
        vc = exact_acyclic(G).witness
        for r in range(5):
            ec = star_from_acyclic(G, vc, random.Random(r))
            c = acyclic_to_tlir(G, vc, random.Random(r))
            if verify_star(G, ec, vc) is not None or not naive_valid(G, c):
                fails.append((i, r))
    report("AC10", not fails, f"200 graphs x 5 roots, failures {fails}")


def test_ac11_lift(report):
    fails, got, seed = [], 0, 11_000
    while got < 100:
        seed += 1
        rng = random.Random(seed)
        G = gen("gnp", rng.randint(3, 9), seed, p=rng.choice([0.3, 0.5, 0.7]))
        res = exact_lir(G)
        if not res.ok:
            continue
        got += 1
        c = lir_to_tlir(G, res.witness)
        if not (verify_tlir(G, c, require_total=True) and naive_valid(G, c) and c.num_colors == res.value):
            fails.append(seed)
    report("AC11", not fails, f"100 lir witnesses, failures {fails}")
