import pytest

from chaingraphs import (
    InvalidTripletError,
    ParseError,
    Triplet,
    all_triplets,
    arrow,
    build_graph,
    format_triplet,
    line,
    parse_graph,
    parse_graphs,
    parse_triplet,
    serialize_graph,
    serialize_graphs,
    to_dot,
)

SAMPLE = """\
# fixture
nodes a b c d
a -- b
b -> c
a -> d
"""


def test_parse_graph():
    g = parse_graph(SAMPLE)
    assert g.nodes == ("a", "b", "c", "d")
    assert g.is_line("a", "b")
    assert g.has_arrow("b", "c")
    assert g.has_arrow("a", "d")


def test_round_trip_bit_exact():
    g = parse_graph(SAMPLE)
    text = serialize_graph(g)
    assert parse_graph(text) == g
    assert serialize_graph(parse_graph(text)) == text
    assert text.endswith("\n")


def test_serialize_order():
    g = build_graph("abc", [arrow("c", "b"), line("a", "c")])
    assert serialize_graph(g) == "nodes a b c\na -- c\nc -> b\n"


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_graph("a -- b\n")  # missing header
    with pytest.raises(ParseError):
        parse_graph("nodes a b\na == b\n")
    with pytest.raises(ParseError):
        parse_graph("nodes a b!\n")
    err = None
    try:
        parse_graph("nodes a b\n\na -- b -- c\n")
    except ParseError as exc:
        err = exc
    assert err is not None and err.lineno == 3


def test_parse_graphs_blocks():
    g = build_graph("ab", [line("a", "b")])
    h = build_graph("ab", [arrow("a", "b")])
    text = serialize_graphs([g, h])
    assert parse_graphs(text) == [g, h]


def test_to_dot():
    g = build_graph("ab", [arrow("a", "b")])
    dot = to_dot(g)
    assert dot.startswith("digraph")
    assert '"a" -> "b";' in dot
    ug = build_graph("ab", [line("a", "b")])
    assert "dir=none" in to_dot(ug)


def test_triplet_validation():
    with pytest.raises(InvalidTripletError):
        Triplet(set(), {"b"}, set())
    with pytest.raises(InvalidTripletError):
        Triplet({"a"}, {"a"}, set())
    with pytest.raises(InvalidTripletError):
        Triplet({"a"}, {"b"}, {"a"})
    t = Triplet({"a"}, {"b"}, {"c"})
    assert t.symmetric() == Triplet({"b"}, {"a"}, {"c"})


def test_triplet_text_format():
    t = parse_triplet("a | f | c,e,g")
    assert t == Triplet({"a"}, {"f"}, {"c", "e", "g"})
    assert format_triplet(t) == "a | f | c,e,g"
    empty_z = parse_triplet("a,b | c |")
    assert empty_z.Z == frozenset()
    with pytest.raises(InvalidTripletError):
        parse_triplet("a | b")
    with pytest.raises(InvalidTripletError):
        parse_triplet("a! | b | c")


def test_all_triplets_counts():
    assert sum(1 for _ in all_triplets("ab")) == 2
    # inclusion-exclusion: 4^n - 2*3^n + 2^n
    assert sum(1 for _ in all_triplets("abc")) == 18
    assert list(all_triplets("a")) == []
