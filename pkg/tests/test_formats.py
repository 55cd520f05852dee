import pytest
from hypothesis import given, settings

from conftest import C5, K3, P4, graph, graphs
from gallai.errors import DuplicateEdge, MalformedRecord, SelfLoop, UnsupportedSize, VertexOutOfRange
from gallai.formats import iter_graph6_lines, parse_edge_list, parse_graph6, to_edge_list, to_graph6
from gallai.graph import Graph


def reference_graph6(g):
    """Straight transcription of the format: bit string, pad, chop into sixes."""
    bitstring = "".join("1" if g.has_edge(i, j) else "0" for j in range(1, g.n) for i in range(j))
    bitstring += "0" * (-len(bitstring) % 6)
    chunks = [bitstring[k:k + 6] for k in range(0, len(bitstring), 6)]
    return chr(g.n + 63) + "".join(chr(int(c, 2) + 63) for c in chunks)


@pytest.mark.parametrize("text, expected", [("Bw", K3), ("Ch", P4), ("Dhc", C5)])
def test_hand_encoded_records(text, expected):
    assert parse_graph6(text) == expected
    assert to_graph6(expected) == text


def test_single_vertex_and_empty_graph():
    assert to_graph6(Graph(1, [0])) == "@"
    assert to_graph6(Graph(0, [])) == "?"
    assert parse_graph6("?").n == 0


def test_header_is_stripped():
    assert parse_graph6(">>graph6<<Bw") == K3


@pytest.mark.parametrize("bad", ["", "B", "Bww", "B\x1f", "Bx", "D~"])
def test_malformed_records(bad):
    with pytest.raises(MalformedRecord):
        parse_graph6(bad)


def test_oversized_records():
    with pytest.raises(UnsupportedSize):
        parse_graph6("~??~")
    with pytest.raises(UnsupportedSize):
        to_graph6(Graph(63, [0] * 63))


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=20))
def test_round_trip_and_reference_encoder(g):
    s = to_graph6(g)
    assert s == reference_graph6(g)
    assert parse_graph6(s) == g


def test_edge_list_examples():
    assert parse_edge_list("3 3\n0 1\n0 2\n1 2") == K3
    g = parse_edge_list("2 0")
    assert g.n == 2 and g.num_edges() == 0
    with pytest.raises(SelfLoop):
        parse_edge_list("3 1\n0 0")
    with pytest.raises(DuplicateEdge):
        parse_edge_list("3 2\n0 1\n1 0")
    with pytest.raises(VertexOutOfRange):
        parse_edge_list("2 1\n0 5")
    for bad in ["", "3", "3 2\n0 1", "x y", "2 1\n0 a"]:
        with pytest.raises(MalformedRecord):
            parse_edge_list(bad)


def test_edge_list_round_trip():
    g = graph(6, [(0, 1), (2, 5), (3, 4)])
    assert parse_edge_list(to_edge_list(g)) == g


def test_batch_reader_skips_comments_and_blanks():
    text = "# header\nBw\n\n  Ch  \n#x\nDhc\n"
    assert [rec for rec, _ in iter_graph6_lines(text)] == ["Bw", "Ch", "Dhc"]
