import pytest

from chaingraphs import (
    EdgeKind,
    GraphError,
    NotChainGraphError,
    ancestral_set,
    arrow,
    boundary,
    build_graph,
    children,
    component_chain,
    components,
    descendants,
    find_directed_pseudocycle,
    induced_subgraph,
    is_chain_graph,
    line,
    parents,
    siblings,
    underlying,
)


def test_single_node_graph():
    g = build_graph(["a"])
    assert g.nodes == ("a",)
    assert g.edges == {}


def test_duplicate_node_rejected():
    with pytest.raises(GraphError):
        build_graph(["a", "a"])


def test_self_loop_rejected():
    with pytest.raises(GraphError):
        build_graph("ab", [line("a", "a")])


def test_duplicate_edge_rejected():
    with pytest.raises(GraphError):
        build_graph("ab", [arrow("a", "b"), line("a", "b")])
    # the same pair twice with the same kind is also a duplicate
    with pytest.raises(GraphError):
        build_graph("ab", [arrow("a", "b"), arrow("b", "a")])


def test_unknown_endpoint_rejected():
    with pytest.raises(GraphError):
        build_graph("ab", [line("a", "c")])


def test_invalid_label_rejected():
    with pytest.raises(GraphError):
        build_graph(["a b"])


def test_edge_accessors(ga):
    assert ga.has_arrow("b", "a")
    assert not ga.has_arrow("a", "b")
    assert not ga.is_line("b", "a")
    assert sorted(ga.arrows()) == [("a", "d"), ("b", "a"), ("b", "c"), ("c", "d")]
    assert list(ga.lines()) == []


def test_underlying(ga):
    u = underlying(ga)
    assert set(u.edges) == set(ga.edges)
    assert all(kind is EdgeKind.LINE for kind in u.edges.values())
    assert underlying(u) == u


def test_induced_subgraph(ga):
    sub = induced_subgraph(ga, {"a", "c", "d"})
    assert sorted(sub.arrows()) == [("a", "d"), ("c", "d")]
    assert not sub.has_edge("a", "c")
    assert induced_subgraph(ga, ga.nodes) == ga
    single = induced_subgraph(ga, {"a"})
    assert single.edges == {}


def test_induced_subgraph_errors(ga):
    with pytest.raises(GraphError):
        induced_subgraph(ga, set())
    with pytest.raises(GraphError):
        induced_subgraph(ga, {"z"})


def test_components(ga, ge):
    assert components(ga) == [frozenset(x) for x in ("a", "b", "c", "d")]
    assert components(ge) == [frozenset("a"), frozenset("b"), frozenset("cde"),
                              frozenset("f"), frozenset("g")]
    path = build_graph("abc", [line("a", "b"), line("b", "c")])
    assert components(path) == [frozenset("abc")]


def test_is_chain_graph(ga):
    assert is_chain_graph(ga)
    tri = build_graph("abc", [arrow("a", "b"), arrow("b", "c"), arrow("c", "a")])
    assert not is_chain_graph(tri)
    # pseudocycle through a line's component
    mixed = build_graph("abc", [line("a", "b"), arrow("b", "c"), arrow("c", "a")])
    assert not is_chain_graph(mixed)


def test_find_directed_pseudocycle():
    tri = build_graph("abc", [arrow("a", "b"), arrow("b", "c"), arrow("c", "a")])
    cyc = find_directed_pseudocycle(tri)
    assert cyc[0] == cyc[-1] and len(cyc) >= 4
    mixed = build_graph("abc", [line("a", "b"), arrow("b", "c"), arrow("c", "a")])
    cyc = find_directed_pseudocycle(mixed)
    assert cyc[0] == cyc[-1]
    # each step is an edge, at least one step is an arrow in route direction
    assert any(mixed.has_arrow(x, y) for x, y in zip(cyc, cyc[1:]))
    ok = build_graph("ab", [line("a", "b")])
    assert find_directed_pseudocycle(ok) is None


def test_intra_component_arrow_is_pseudocycle():
    g = build_graph("abc", [line("a", "b"), line("b", "c"), arrow("a", "c")])
    assert not is_chain_graph(g)
    cyc = find_directed_pseudocycle(g)
    assert cyc[0] == cyc[-1]


def test_component_chain(ge):
    assert component_chain(ge) == (frozenset("a"), frozenset("b"), frozenset("cde"),
                                   frozenset("f"), frozenset("g"))
    edgeless = build_graph("ab")
    assert component_chain(edgeless) == (frozenset("a"), frozenset("b"))
    ug = build_graph("ab", [line("a", "b")])
    assert component_chain(ug) == (frozenset("ab"),)


def test_component_chain_requires_cg():
    tri = build_graph("abc", [arrow("a", "b"), arrow("b", "c"), arrow("c", "a")])
    with pytest.raises(NotChainGraphError):
        component_chain(tri)


def test_boundary_family(ga, ge):
    assert parents(ga, "d") == frozenset("ac")
    assert siblings(ga, "d") == frozenset()
    assert boundary(ga, "d") == frozenset("ac")
    assert boundary(ge, "d") == frozenset("ce")
    assert children(ge, "d") == frozenset("fg")
    isolated = build_graph("ab")
    assert boundary(isolated, "a") == frozenset()


def test_boundary_unknown_node(ga):
    with pytest.raises(GraphError):
        boundary(ga, "z")


def test_ancestral_set(ga, ge):
    assert ancestral_set(ga, {"d"}) == frozenset("abcd")
    assert ancestral_set(ga, ga.nodes) == frozenset(ga.nodes)
    assert ancestral_set(ge, {"a", "f", "c", "e", "g"}) == frozenset("abcdefg")


def test_ancestral_set_monotone_idempotent(ga):
    small = ancestral_set(ga, {"a"})
    big = ancestral_set(ga, {"a", "d"})
    assert small <= big
    assert ancestral_set(ga, big) == big


def test_descendants(ga, ge):
    assert descendants(ga, "b") == frozenset("abcd")
    assert descendants(ge, "c") == frozenset("cdefg")
    isolated = build_graph("ab")
    assert descendants(isolated, "a") == frozenset("a")


def test_descendants_duality(cgs3):
    for g in cgs3[:200]:
        for u in g.nodes:
            for v in descendants(g, u):
                assert u in ancestral_set(g, {v})
