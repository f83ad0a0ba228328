import pytest

from chaingraphs import arrow, build_graph, line
from chaingraphs.enumeration import all_chain_graphs, orbit_representatives


@pytest.fixture
def ga():
    """Four-node DAG with the single complex a -> d <- c."""
    return build_graph("abcd", [arrow("b", "a"), arrow("b", "c"),
                                arrow("a", "d"), arrow("c", "d")])


@pytest.fixture
def ge():
    """Seven-node chain graph with a degree-3 and a degree-1 complex."""
    return build_graph("abcdefg", [arrow("a", "c"), line("c", "d"), line("d", "e"),
                                   arrow("b", "e"), arrow("b", "g"),
                                   arrow("d", "g"), arrow("d", "f")])


@pytest.fixture
def gc():
    """Degree-2 complex u -> p - q <- v; its equivalence class is a singleton."""
    return build_graph(["u", "p", "q", "v"],
                       [arrow("u", "p"), line("p", "q"), arrow("v", "q")])


@pytest.fixture(scope="session")
def cgs3():
    return list(all_chain_graphs("abc"))


@pytest.fixture(scope="session")
def cgs4():
    return list(all_chain_graphs("abcd"))


@pytest.fixture(scope="session")
def reps5():
    """Orbit representatives of the 5-node chain graphs.

    Enumerating all 4^10 hybrid graphs takes about half a minute; every
    session-level sweep shares this list.
    """
    return list(orbit_representatives(all_chain_graphs("abcde")))
