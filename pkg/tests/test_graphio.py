import io
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zarlab.constructions import complete_graph, friendship_graph
from zarlab.errors import GraphFormatError
from zarlab.graph import Graph
from zarlab.graphio import (
    iter_graph6,
    parse_graph,
    parse_matrix,
    write_graph,
    write_graph6,
    write_matrix,
)

TRIANGLE = Graph(3, [(0, 1), (1, 2), (0, 2)])


def random_graph(rng, n):
    return Graph(n, [(i, j) for j in range(n) for i in range(j) if rng.random() < 0.3])


class TestEdgelist:
    def test_parse_triangle(self):
        G = parse_graph("vertices 3\n0 1\n1 2\n0 2\n")
        assert G == TRIANGLE and (G.n, G.e) == (3, 3)

    def test_write_sorted(self):
        assert write_graph(TRIANGLE, "edgelist") == "vertices 3\n0 1\n0 2\n1 2\n"

    def test_friendship1_same_bytes(self):
        assert write_graph(friendship_graph(1), "edgelist") == write_graph(TRIANGLE, "edgelist")

    def test_comments_and_blank_lines(self):
        G = parse_graph("# header\n\nvertices 2  # two\n0 1 # edge\n")
        assert G.edges() == [(0, 1)]

    @pytest.mark.parametrize("text,line,fragment", [
        ("vertices 3\n0 0\n", 2, "loop"),
        ("vertices 3\n0 1\n1 0\n", 3, "duplicate"),
        ("vertices 3\n0 3\n", 2, "out of range"),
        ("vertex 3\n", 1, "header"),
        ("vertices x\n", 1, "integer"),
        ("vertices 3\n0 1 2\n", 2, "expected"),
        ("vertices 3\na b\n", 2, "non-integer"),
    ])
    def test_errors_name_the_line(self, text, line, fragment):
        with pytest.raises(GraphFormatError) as exc:
            parse_graph(text, "edgelist")
        assert exc.value.line == line
        assert f"line {line}" in str(exc.value) and fragment in str(exc.value)

    def test_missing_header(self):
        with pytest.raises(GraphFormatError):
            parse_graph("# nothing\n", "edgelist")


class TestGraph6:
    def test_triangle_vector(self):
        assert write_graph6(TRIANGLE) == "Bw"
        assert parse_graph("Bw") == TRIANGLE
        assert write_graph(friendship_graph(1), "graph6") == "Bw\n"

    def test_known_vectors(self):
        # nauty: K4 = "C~", empty graph on 5 vertices = "D??", single vertex = "@"
        assert write_graph6(complete_graph(4)) == "C~"
        assert write_graph6(Graph(5)) == "D??"
        assert write_graph6(Graph(1)) == "@"
        assert write_graph6(Graph(0)) == "?"

    def test_header_accepted(self):
        assert parse_graph(">>graph6<<Bw", "graph6") == TRIANGLE

    def test_extended_size_form(self):
        G = Graph(63, [(0, 62), (10, 20)])
        text = write_graph6(G)
        assert text.startswith("~??~")
        assert parse_graph(text, "graph6") == G

    def test_eight_byte_size_field_roundtrip_header(self):
        from zarlab.graphio import _decode_n, _encode_n
        code = _encode_n(258048)
        assert code.startswith("~~") and len(code) == 8
        assert _decode_n(code) == (258048, 8)

    @pytest.mark.parametrize("text,fragment", [
        ("Bx", "padding"),
        ("B", "needs 1"),
        ("Bww", "needs 1"),
        ("~??^", "non-canonical"),
        ("B\x7f", "'?'..'~'"),
    ])
    def test_rejects_malformed(self, text, fragment):
        with pytest.raises(GraphFormatError) as exc:
            parse_graph(text, "graph6")
        assert fragment in str(exc.value)

    def test_multiple_graphs(self):
        gs = list(iter_graph6("Bw\nC~\n"))
        assert gs == [TRIANGLE, complete_graph(4)]
        with pytest.raises(GraphFormatError):
            parse_graph("Bw\nC~\n", "graph6")


def test_sniffing_and_sources():
    assert parse_graph(b"Bw\n") == TRIANGLE
    assert parse_graph(io.BytesIO(b"# c\nvertices 3\n0 1\n0 2\n1 2\n")) == TRIANGLE
    assert parse_graph(io.StringIO("Bw")) == TRIANGLE


@pytest.mark.parametrize("fmt", ["edgelist", "graph6"])
def test_roundtrip_100_random_graphs(fmt):
    rng = random.Random(0)
    for _ in range(100):
        G = random_graph(rng, rng.randint(0, 40))
        assert parse_graph(write_graph(G, fmt), fmt) == G


@settings(max_examples=100)
@given(st.integers(0, 70), st.data())
def test_roundtrip_property(n, data):
    pairs = [(i, j) for j in range(n) for i in range(j)]
    keep = data.draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    G = Graph(n, [p for p, k in zip(pairs, keep) if k])
    for fmt in ("edgelist", "graph6"):
        assert parse_graph(write_graph(G, fmt)) == G


def test_matrix_roundtrip():
    rows = ["110", "011"]
    assert parse_matrix(write_matrix(rows, "demo")) == rows
    with pytest.raises(GraphFormatError):
        parse_matrix("matrix 2 3\n110\n")
    with pytest.raises(GraphFormatError):
        parse_matrix("matrix 1 3\n1102\n")
