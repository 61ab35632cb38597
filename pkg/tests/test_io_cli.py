import pytest

from tlir.cli import main
from tlir.coloring import TotalColoring
from tlir.errors import ParseError
from tlir.generators import bow_tie, complete, gen, path
from tlir.graph import TotalGraph
from tlir.io import dot_color, format_coloring, format_graph, parse_coloring, parse_graph, to_dot


def test_roundtrip_graph():
    G = TotalGraph([0, 1, 2, 5], [(2, 1), (0, 5)], empty=[2])
    text = format_graph(G)
    assert text == "v 0 full\nv 1 full\nv 2 empty\nv 5 full\ne 0 5\ne 1 2\n"
    assert parse_graph(text) == G
    assert format_graph(parse_graph(text)) == text


def test_roundtrip_coloring():
    c = TotalColoring({3: 2, 1: 1}, {(4, 2): 5})
    text = format_coloring(c)
    assert text == "vc 1 1\nvc 3 2\nec 2 4 5\n"
    assert parse_coloring(text) == c


def test_comments_and_blanks():
    G = parse_graph("# header\n\nv 0 full  # a vertex\nv 1 empty\ne 1 0\n")
    assert G.edges == ((0, 1),) and not G.is_full(1)


@pytest.mark.parametrize("text", ["v 0 half\n", "e 0 1\n", "v 0 full\ne 0 0\n", "x 1\n", "v a full\n", "v 0 full\nv 0 full\n"])
def test_graph_parse_errors(text):
    with pytest.raises(ParseError):
        parse_graph(text)


@pytest.mark.parametrize("text", ["vc 0 0\n", "ec 0 1\n", "vc 1 1\nvc 1 2\n"])
def test_coloring_parse_errors(text):
    with pytest.raises(ParseError):
        parse_coloring(text)


def test_dot_palette():
    assert [dot_color(k) for k in (1, 2, 3)] == ["red", "blue", "green"]
    assert dot_color(4) == dot_color(4 + 7)
    dot = to_dot(path(2), TotalColoring({0: 1}, {(0, 1): 2}))
    assert 'fillcolor="red"' in dot and 'color="blue"' in dot


@pytest.fixture
def files(tmp_path):
    def write(name, G):
        p = tmp_path / name
        p.write_text(format_graph(G))
        return str(p)

    return tmp_path, write


def test_color_bow_tie_cactus(files, capsys):
    tmp, write = files
    g = write("b.txt", bow_tie())
    out, dot = str(tmp / "b.col"), str(tmp / "b.dot")
    assert main(["color", "--algo", "cactus", "--in", g, "--out", out, "--dot", dot]) == 0
    assert "colors 2" in capsys.readouterr().out
    assert main(["verify", "--graph", g, "--coloring", out]) == 0
    assert capsys.readouterr().out == "VALID\n"
    assert (tmp / "b.dot").read_text().startswith("graph")


def test_color_k5_planar_exit3(files):
    tmp, write = files
    assert main(["color", "--algo", "planar", "--in", write("k5.txt", complete(5)), "--out", str(tmp / "o")]) == 3


def test_color_auto_p4(files, capsys):
    tmp, write = files
    assert main(["color", "--in", write("p4.txt", path(4)), "--out", str(tmp / "o")]) == 0
    assert capsys.readouterr().out.strip() == "route bipartite colors 2"


def test_auto_covers_classes(files):
    tmp, write = files
    for i, G in enumerate([gen("gnp", 9, 1, p=0.6), gen("maximal_outerplanar", 12, 2), complete(6),
                           TotalGraph([0, 1, 2], [(0, 1), (1, 2)], empty=[1])]):
        g = write(f"g{i}.txt", G)
        assert main(["color", "--in", g, "--out", str(tmp / f"c{i}")]) == 0
        assert main(["verify", "--graph", g, "--coloring", str(tmp / f"c{i}")]) == 0


def test_verify_outcomes(files, capsys):
    tmp, write = files
    g = write("p4.txt", path(4))
    ones = tmp / "ones.col"
    ones.write_text("".join(f"vc {v} 1\n" for v in range(4)) + "ec 0 1 1\nec 1 2 1\nec 2 3 1\n")
    assert main(["verify", "--graph", g, "--coloring", str(ones)]) == 1
    assert capsys.readouterr().out == "edge 1 2 class 1 degrees 3 3\n"
    bad = tmp / "bad.col"
    bad.write_text("ec 0 3 1\n")
    assert main(["verify", "--graph", g, "--coloring", str(bad)]) == 2
    part = tmp / "part.col"
    part.write_text("vc 1 1\nec 0 1 1\n")
    assert main(["verify", "--graph", g, "--coloring", str(part), "--partial"]) == 0
    assert main(["verify", "--graph", g, "--coloring", str(part)]) == 1


def test_oracle_outputs(files, capsys):
    tmp, write = files
    assert main(["oracle", "--graph", write("b.txt", bow_tie()), "--mode", "lir"]) == 0
    assert capsys.readouterr().out == "4\n"
    assert main(["oracle", "--graph", write("k2.txt", complete(2)), "--mode", "lir"]) == 0
    assert capsys.readouterr().out == "UNCOLORABLE\n"
    assert main(["oracle", "--graph", write("p4.txt", path(4)), "--mode", "tlir"]) == 0
    assert capsys.readouterr().out == "2\n"
    assert main(["oracle", "--graph", write("k4.txt", complete(4)), "--mode", "acyclic"]) == 0
    assert capsys.readouterr().out == "4\n"


def test_oracle_budget(files, capsys, monkeypatch):
    tmp, write = files
    g = write("g.txt", gen("gnp", 10, 4, p=0.6))
    assert main(["oracle", "--graph", g, "--node-limit", "3"]) == 4
    assert capsys.readouterr().out == "UNKNOWN\n"
    monkeypatch.setenv("TLIR_BUDGET_MS", "nope")
    assert main(["oracle", "--graph", g]) == 2


def test_gen_deterministic(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    assert main(["gen", "--class", "cactus", "--n", "12", "--seed", "7", "--out", str(a)]) == 0
    assert main(["gen", "--class", "cactus", "--n", "12", "--seed", "7", "--out", str(b)]) == 0
    assert a.read_text() == b.read_text()
    assert main(["gen", "--class", "regular", "--n", "7", "--param", "d=3", "--out", str(a)]) == 2


def test_sweep(capsys):
    assert main(["sweep", "--n-max", "4"]) == 0
    out = capsys.readouterr().out
    assert "max tlir observed = 2" in out
    assert [line.split()[2] for line in out.splitlines()[:4]] == ["1", "1", "2", "6"]
    assert main(["sweep", "--n-max", "1"]) == 0
    assert "max tlir observed = 1" in capsys.readouterr().out
    assert main(["sweep", "--n-max", "4", "--jobs", "2"]) == 0


def test_bad_arguments():
    assert main(["color"]) == 2
    assert main(["sweep", "--n-max", "9"]) == 2
