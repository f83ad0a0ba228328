import pytest

from chaingraphs import (
    BoundExceededError,
    Complex,
    GraphError,
    NotChainGraphError,
    arrow,
    build_graph,
    enumerate_complexes,
    equivalence_class,
    is_chain_graph,
    is_larger,
    largest_cg_oracle,
    line,
    markov_equivalent,
    pattern_of,
    underlying,
)


def test_complex_canonical_orientation():
    c1 = Complex(("a", "w", "b"))
    c2 = Complex(("b", "w", "a"))
    assert c1 == c2
    assert c1.parents == ("a", "b")
    assert c1.region == ("w",)
    assert c1.degree == 1


def test_enumerate_complexes_ga(ga):
    assert enumerate_complexes(ga) == [Complex(("a", "d", "c"))]


def test_enumerate_complexes_ge(ge):
    assert enumerate_complexes(ge) == [Complex(("a", "c", "d", "e", "b")),
                                       Complex(("b", "g", "d"))]


def test_ug_has_no_complexes():
    ug = build_graph("abc", [line("a", "b"), line("b", "c")])
    assert enumerate_complexes(ug) == []


def test_extra_edge_kills_complex():
    g = build_graph("abw", [arrow("a", "w"), arrow("b", "w"), line("a", "b")])
    assert enumerate_complexes(g) == []


def test_pattern_of_ga(ga):
    pat = pattern_of(ga)
    assert pat.is_line("a", "b")
    assert pat.is_line("b", "c")
    assert pat.has_arrow("a", "d")
    assert pat.has_arrow("c", "d")


def test_pattern_of_ug_is_identity():
    ug = build_graph("abc", [line("a", "b"), line("b", "c")])
    assert pattern_of(ug) == ug


def test_pattern_of_ge(ge):
    pat = pattern_of(ge)
    assert sorted(pat.arrows()) == [("a", "c"), ("b", "e"), ("b", "g"), ("d", "g")]
    assert sorted(pat.lines()) == [("c", "d"), ("d", "e"), ("d", "f")]


def test_pattern_may_fail_chain_graph():
    # b -> c is not in any complex, so the pattern turns it into a line and
    # the kept complex arrow b -> d closes a directed pseudocycle b, d, c, b
    g = build_graph("abcd", [
        line("c", "d"), arrow("a", "d"), arrow("b", "c"), arrow("b", "d"),
    ])
    assert is_chain_graph(g)
    pat = pattern_of(g)
    assert not is_chain_graph(pat)


def test_pattern_requires_cg():
    tri = build_graph("abc", [arrow("a", "b"), arrow("b", "c"), arrow("c", "a")])
    with pytest.raises(NotChainGraphError):
        pattern_of(tri)


def test_markov_equivalent(ga):
    h = build_graph("abcd", [line("a", "b"), line("b", "c"),
                             arrow("a", "d"), arrow("c", "d")])
    assert markov_equivalent(ga, h)
    assert markov_equivalent(ga, ga)
    left = build_graph("abc", [arrow("a", "b"), arrow("c", "b")])
    right = build_graph("abc", [line("a", "b"), line("b", "c")])
    assert not markov_equivalent(left, right)


def test_markov_equivalent_errors(ga):
    other = build_graph("abc")
    with pytest.raises(GraphError):
        markov_equivalent(ga, other)


def test_is_larger(ga):
    pat = pattern_of(ga)
    assert is_larger(ga, pat)
    assert not is_larger(pat, ga)
    assert is_larger(ga, ga)
    a = build_graph("ab", [arrow("a", "b")])
    b = build_graph("ab", [arrow("b", "a")])
    assert not is_larger(a, b) and not is_larger(b, a)


def test_is_larger_skeleton_mismatch(ga):
    with pytest.raises(GraphError):
        is_larger(ga, underlying(build_graph("abcd", [line("a", "b")])))


def test_equivalence_class_ug():
    ug = build_graph("ab", [line("a", "b")])
    cls = equivalence_class(ug)
    assert len(cls) == 3
    assert ug in cls


def test_equivalence_class_rigid():
    g = build_graph("abc", [arrow("a", "b"), arrow("c", "b")])
    assert equivalence_class(g) == [g]


def test_equivalence_class_ga(ga):
    cls = equivalence_class(ga)
    assert ga in cls
    # skeleton has two non-complex edges; every orientation except the one
    # creating a new complex a -> b <- c survives: 9 - 1 = 8 members
    assert len(cls) == 8
    for member in cls:
        assert markov_equivalent(ga, member)


def test_equivalence_class_bound(ga):
    with pytest.raises(BoundExceededError):
        equivalence_class(ga, max_edges=2)


def test_largest_cg_oracle(ga):
    largest = largest_cg_oracle(ga)
    assert largest == pattern_of(ga)
    ug = build_graph("ab", [line("a", "b")])
    assert largest_cg_oracle(ug) == ug
    rigid = build_graph("abc", [arrow("a", "b"), arrow("c", "b")])
    assert largest_cg_oracle(rigid) == rigid


def test_largest_cg_extremality(ga, gc):
    for g in (ga, gc):
        largest = largest_cg_oracle(g)
        cls = equivalence_class(g)
        assert largest in cls
        for member in cls:
            assert is_larger(member, largest)


def test_pattern_arrows_in_every_member(cgs4):
    for g in cgs4[:300]:
        pat_arrows = set(pattern_of(g).arrows())
        for member in equivalence_class(g):
            assert pat_arrows <= set(member.arrows())
