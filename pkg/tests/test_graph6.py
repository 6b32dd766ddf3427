import numpy as np
import pytest

from specchrom import Graph, Graph6Error, iter_graph6, parse_graph6, write_graph6
from specchrom.generators import complete_graph, cycle_graph, petersen_graph


# hand-packed vectors: size byte n+63, then upper-triangle bits
# x(0,1) x(0,2) x(1,2) x(0,3) ... six per byte, MSB first, offset 63
def test_known_encodings():
    assert write_graph6(Graph([[0]])) == "@"
    assert write_graph6(complete_graph(2)) == "A_"
    assert write_graph6(Graph(np.zeros((3, 3)))) == "B?"
    assert write_graph6(complete_graph(4)) == "C~"


def test_known_decodings():
    assert parse_graph6("A_") == complete_graph(2)
    assert parse_graph6("C~") == complete_graph(4)
    g = parse_graph6("B?")
    assert g.n == 3 and g.m == 0
    # D?{ : size byte 5, data bytes 000000 111100 -> the star K_{1,4}
    g = parse_graph6("D?{")
    assert g.n == 5
    assert g.m == 4
    assert sorted(g.degrees().tolist()) == [1, 1, 1, 1, 4]


def test_header_accepted():
    assert parse_graph6(">>graph6<<A_") == complete_graph(2)


def test_trailing_newline_accepted():
    assert parse_graph6("A_\n") == complete_graph(2)


def test_roundtrip_menagerie():
    for g in [petersen_graph(), cycle_graph(7), complete_graph(6)]:
        assert parse_graph6(write_graph6(g)) == g


def test_roundtrip_random_graphs():
    rng = np.random.default_rng(42)
    for _ in range(50):
        n = int(rng.integers(1, 20))
        a = (rng.random((n, n)) < 0.4).astype(int)
        a = np.triu(a, 1)
        g = Graph(a + a.T)
        assert parse_graph6(write_graph6(g)) == g


def test_roundtrip_long_form():
    # n >= 63 switches to the 4-byte size prefix
    rng = np.random.default_rng(7)
    n = 70
    a = (rng.random((n, n)) < 0.1).astype(int)
    a = np.triu(a, 1)
    g = Graph(a + a.T)
    text = write_graph6(g)
    assert text[0] == chr(126)
    assert parse_graph6(text) == g


def test_nonzero_padding_rejected():
    # K2's data byte is 100000 + 63 = '_'; set the last padding bit
    bad = "A" + chr(63 + 0b100001)
    with pytest.raises(Graph6Error):
        parse_graph6(bad)


@pytest.mark.parametrize("bad", ["", "A", "A_x", "A\x19", "A\x7f"])
def test_malformed_inputs_rejected(bad):
    with pytest.raises(Graph6Error):
        parse_graph6(bad)


def test_error_reports_byte_offset():
    with pytest.raises(Graph6Error) as exc:
        parse_graph6("A\x19")
    assert "offset" in str(exc.value)


def test_non_ascii_rejected():
    with pytest.raises(Graph6Error):
        parse_graph6("Aÿ")


def test_iter_graph6_line_numbers():
    lines = ["A_", "", "C~"]
    out = list(iter_graph6(lines))
    assert [lineno for lineno, _ in out] == [1, 3]
    assert out[0][1] == complete_graph(2)
    assert out[1][1] == complete_graph(4)


def test_iter_graph6_error_carries_line_number():
    with pytest.raises(Graph6Error) as exc:
        list(iter_graph6(["A_", "oops!"]))
    assert "line 2" in str(exc.value)
