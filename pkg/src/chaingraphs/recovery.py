"""Two-stage structure recovery from a dependency model.

Stage 1 rebuilds the pattern of the (unknown) equivalence class from the
two predicate families "dependent for every Z" and "dependent for every Z
containing w": level 0 lays down the skeleton, level 1 directs degree-1
complexes, and level l directs the end arrows of degree-l complexes found
as chordless mixed paths.

Stage 2 turns the pattern into the largest chain graph of the class by
alternating orientation bans (transitivity principle) with line directing
(necessity and doublecycle principles); bans have priority.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .complexes import pattern_of
from .depmodel import DependencyModel, dep_all, dep_plus
from .graph import EdgeKind, GraphError, HybridGraph, is_chain_graph

__all__ = [
    "PatternConflictError",
    "InvalidPatternError",
    "AnnotatedPattern",
    "Directing",
    "recover_pattern",
    "feasible_semislide_exists",
    "transitivity_fixpoint",
    "necessity_step",
    "doublecycle_step",
    "recover_largest",
    "recover_end_to_end",
]


class PatternConflictError(ValueError):
    """Stage-1 directings clashed; the model is not induced by a chain graph."""


class InvalidPatternError(ValueError):
    """Stage-2 input was not the pattern of a Markov-equivalence class."""


# ---------------------------------------------------------------------------
# stage 1: pattern recovery

def recover_pattern(model: DependencyModel) -> HybridGraph:
    """Reconstruct the pattern of the class inducing ``model``.

    Level-l directings are computed against the previous level in full
    before any is applied, so scan order cannot matter.
    """
    nodes = sorted(model.nodes)
    n = len(nodes)

    # level 0: skeleton
    state: dict[tuple[str, str], object] = {}
    for i, u in enumerate(nodes):
        for v in nodes[i + 1:]:
            if dep_all(model, u, v):
                state[(u, v)] = "line"

    def kind(a: str, b: str):
        return state.get((a, b) if a < b else (b, a))

    def is_line(a, b):
        return kind(a, b) == "line"

    def is_arrow(tail, head):
        return kind(tail, head) == (tail, head)

    def apply_level(demands: set[tuple[str, str]]) -> None:
        by_edge: dict[tuple[str, str], set] = {}
        for tail, head in demands:
            key = (tail, head) if tail < head else (head, tail)
            by_edge.setdefault(key, set()).add((tail, head))
        for key, dirs in by_edge.items():
            if len(dirs) > 1:
                raise PatternConflictError(f"line {key!r} demanded in both directions")
            (tail, head), = dirs
            current = state[key]
            if current == "line":
                state[key] = (tail, head)
            elif current != (tail, head):
                raise PatternConflictError(
                    f"demanded arrow {tail}->{head} contradicts existing {current!r}")

    # level 1: degree-1 complexes
    demands: set[tuple[str, str]] = set()
    for w in nodes:
        for u, v in permutations(nodes, 2):
            if u >= v or w in (u, v):
                continue
            if (is_line(u, w) and is_line(v, w) and kind(u, v) is None
                    and dep_plus(model, u, v, w)):
                demands.add((u, w))
                demands.add((v, w))
    apply_level(demands)

    # levels 2 .. n-2: higher-degree complexes as chordless mixed paths
    for level in range(2, n - 1):
        demands = set()
        for seq in permutations(nodes, level + 2):
            if seq[0] > seq[-1]:
                continue  # the reversed sequence yields the same demands
            if not (is_line(seq[0], seq[1]) or is_arrow(seq[0], seq[1])):
                continue
            if not (is_line(seq[-2], seq[-1]) or is_arrow(seq[-1], seq[-2])):
                continue
            if not all(is_line(seq[i], seq[i + 1]) for i in range(1, level)):
                continue
            if any(kind(seq[i], seq[j]) is not None
                   for i in range(level + 2) for j in range(i + 2, level + 2)):
                continue
            if not dep_plus(model, seq[0], seq[-1], seq[1]):
                continue
            if not dep_plus(model, seq[0], seq[-1], seq[-2]):
                continue
            demands.add((seq[0], seq[1]))
            demands.add((seq[-1], seq[-2]))
        apply_level(demands)

    edges = {}
    for key, value in state.items():
        if value == "line":
            edges[key] = EdgeKind.LINE
        else:
            tail, _head = value
            edges[key] = EdgeKind.ARROW_FORWARD if tail == key[0] else EdgeKind.ARROW_BACKWARD
    return HybridGraph(nodes, edges)


# ---------------------------------------------------------------------------
# stage 2: annotated patterns and the working state

@dataclass(frozen=True)
class AnnotatedPattern:
    """A hybrid graph whose lines may carry per-direction orientation bans.

    A ban ``(u, v)`` records that the line u - v may never be oriented as
    u <- v (no arrow from v to u) in the largest chain graph.
    """

    graph: HybridGraph
    bans: frozenset[tuple[str, str]] = frozenset()

    def __post_init__(self):
        for u, v in self.bans:
            if not self.graph.is_line(u, v):
                raise GraphError(f"ban {(u, v)!r} does not refer to a line")


@dataclass(frozen=True)
class Directing:
    """One line converted to the arrow tail -> head by a named rule."""

    rule: str
    tail: str
    head: str
    witness: tuple = ()


class _State:
    """Mutable working copy of an annotated pattern."""

    def __init__(self, g: HybridGraph, bans=()):
        self.nodes = list(g.nodes)
        self.state: dict[tuple[str, str], object] = {}
        for (u, v), k in g.edges.items():
            if k is EdgeKind.LINE:
                self.state[(u, v)] = "line"
            elif k is EdgeKind.ARROW_FORWARD:
                self.state[(u, v)] = (u, v)
            else:
                self.state[(u, v)] = (v, u)
        self.bans: set[tuple[str, str]] = set(bans)
        self.neighbors: dict[str, list[str]] = {u: [] for u in self.nodes}
        for u, v in self.state:
            self.neighbors[u].append(v)
            self.neighbors[v].append(u)
        for lst in self.neighbors.values():
            lst.sort()

    def _key(self, a, b):
        return (a, b) if a < b else (b, a)

    def adjacent(self, a, b):
        return self._key(a, b) in self.state

    def is_line(self, a, b):
        return self.state.get(self._key(a, b)) == "line"

    def is_arrow(self, tail, head):
        return self.state.get(self._key(tail, head)) == (tail, head)

    def d_step(self, a, b):
        """Arrow a -> b, or line a - b banned against the a <- b orientation."""
        value = self.state.get(self._key(a, b))
        if value == (a, b):
            return True
        return value == "line" and (a, b) in self.bans

    def lines(self):
        return sorted(k for k, v in self.state.items() if v == "line")

    def direct(self, d: Directing) -> None:
        key = self._key(d.tail, d.head)
        assert self.state[key] == "line"
        if (d.head, d.tail) in self.bans:
            raise InvalidPatternError(
                f"{d.rule} demands {d.tail}->{d.head}, which is banned")
        self.state[key] = (d.tail, d.head)
        self.bans.discard((d.tail, d.head))
        self.bans.discard((d.head, d.tail))

    def snapshot(self) -> AnnotatedPattern:
        return AnnotatedPattern(self.to_graph(), frozenset(self.bans))

    def to_graph(self) -> HybridGraph:
        edges = {}
        for key, value in self.state.items():
            if value == "line":
                edges[key] = EdgeKind.LINE
            else:
                tail, _ = value
                edges[key] = EdgeKind.ARROW_FORWARD if tail == key[0] else EdgeKind.ARROW_BACKWARD
        return HybridGraph(self.nodes, edges)


def _semislide_exists(st: _State, target: str, excluded: str) -> bool:
    """Feasible semislide w1, ..., wk = target whose head step is a genuine
    arrow, with no edge between ``excluded`` and any of w1 .. w_{k-1}.

    Backward simple-path search over the auxiliary directed relation; a
    repeated node never enables a new head, so simple paths suffice.
    """
    seen = {target}

    def back(cur: str) -> bool:
        for u in st.neighbors[cur]:
            if u in seen or u == excluded or st.adjacent(u, excluded):
                continue
            if st.is_arrow(u, cur):
                return True
            if st.d_step(u, cur):  # banned line traversed forward
                seen.add(u)
                if back(u):
                    return True
        return False

    return back(target)


def feasible_semislide_exists(a: AnnotatedPattern, target: str,
                              excluded_neighbor: str) -> bool:
    """Transitivity-principle hypothesis test on an annotated pattern."""
    if target == excluded_neighbor:
        raise GraphError("target and excluded neighbor must be distinct")
    if not a.graph.is_line(target, excluded_neighbor):
        raise GraphError("expected a line between target and excluded neighbor")
    return _semislide_exists(_State(a.graph, a.bans), target, excluded_neighbor)


def _transitivity(st: _State, trace=None) -> None:
    """Add every ban the transitivity principle forces, to a fixpoint."""
    changed = True
    while changed:
        changed = False
        for u, v in st.lines():
            for x, y in ((u, v), (v, u)):
                if (x, y) in st.bans:
                    continue
                if _semislide_exists(st, x, y):
                    st.bans.add((x, y))
                    changed = True
                    if trace is not None:
                        trace(("ban", x, y))


def transitivity_fixpoint(a: AnnotatedPattern) -> AnnotatedPattern:
    st = _State(a.graph, a.bans)
    _transitivity(st)
    return st.snapshot()


def _necessity(st: _State, limit: int) -> Directing | None:
    """Find a necessity-principle pseudocycle; ``limit`` caps node visits."""
    nodes = st.nodes
    max_steps = 2 * len(nodes) + 2

    for r0 in nodes:
        for r1 in st.neighbors[r0]:
            if not st.is_arrow(r0, r1):
                continue
            counts = {r1: 1}

            def walk(cur: str, steps: int, designated) -> Directing | None:
                if steps > max_steps:
                    return None
                for nxt in st.neighbors[cur]:
                    d_ok = st.d_step(cur, nxt)
                    line_ok = designated is None and st.is_line(cur, nxt)
                    if nxt == r0:
                        if steps + 1 >= 3:
                            if d_ok and designated is not None:
                                a, b = designated
                                return Directing("necessity", b, a, (r0, r1, cur))
                            if line_ok:
                                return Directing("necessity", r0, cur, (r0, r1, cur))
                        continue
                    if counts.get(nxt, 0) >= limit:
                        continue
                    counts[nxt] = counts.get(nxt, 0) + 1
                    if d_ok:
                        found = walk(nxt, steps + 1, designated)
                        if found:
                            return found
                    if line_ok:
                        found = walk(nxt, steps + 1, (cur, nxt))
                        if found:
                            return found
                    counts[nxt] -= 1
                return None

            found = walk(r1, 1, None)
            if found:
                return found
    return None


def necessity_step(a: AnnotatedPattern | _State) -> Directing | None:
    """One necessity-principle directing, or None.

    Searches simple pseudocycles first, then widens to routes visiting each
    node at most twice.  The demanded direction being banned signals an
    invalid pattern.
    """
    st = a if isinstance(a, _State) else _State(a.graph, a.bans)
    found = _necessity(st, 1) or _necessity(st, 2)
    if found and (found.head, found.tail) in st.bans:
        raise InvalidPatternError(f"necessity demands {found.tail}->{found.head}, which is banned")
    return found


def _semislide_with_anchor(st: _State, r0: str, r1: str, rk: str) -> bool:
    """Feasible semislide s0, ..., sm = r1 with s0 != r0 and an index
    n <= m-1 where {rk, s_n} is an edge and no edge joins r0 to s0 .. s_n.
    """

    def forward(cur, seen, clear, qualified):
        # clear: every node so far is nonadjacent to r0
        for nxt in st.neighbors[cur]:
            if not st.d_step(cur, nxt) or nxt in seen:
                continue
            if nxt == r1:
                if qualified:
                    return True
                continue
            if forward(nxt, seen | {nxt}, clear and not st.adjacent(nxt, r0),
                       qualified or (clear and not st.adjacent(nxt, r0)
                                     and st.adjacent(rk, nxt))):
                return True
        return False

    for s0 in st.nodes:
        if s0 == r0:
            continue
        clear0 = not st.adjacent(s0, r0)
        qualified0 = clear0 and st.adjacent(rk, s0)
        for s1 in st.neighbors[s0]:
            if not st.is_arrow(s0, s1):
                continue
            if s1 == r1:
                if qualified0:
                    return True
                continue
            if forward(s1, {s0, s1},
                       clear0 and not st.adjacent(s1, r0),
                       qualified0 or (clear0 and not st.adjacent(s1, r0)
                                      and st.adjacent(rk, s1))):
                return True
    return False


def _doublecycle(st: _State, limit: int) -> Directing | None:
    """Find a doublecycle-principle configuration; ``limit`` caps visits
    on the pseudocycle prefix.
    """
    max_steps = 2 * len(st.nodes) + 2

    for r0 in st.nodes:
        for r1 in st.neighbors[r0]:
            if not st.is_arrow(r0, r1):
                continue
            counts = {r0: 1, r1: 1}

            def walk(path: list[str]) -> Directing | None:
                last = path[-1]
                for rk in st.neighbors[last]:
                    if (st.is_line(last, rk) and st.is_line(rk, r0)
                            and counts.get(rk, 0) == 0 and len(path) >= 2):
                        if _semislide_with_anchor(st, r0, path[1], rk):
                            return Directing("doublecycle", rk, last, (r0, path[1], rk))
                if len(path) >= max_steps:
                    return None
                for nxt in st.neighbors[last]:
                    if not st.d_step(last, nxt) or counts.get(nxt, 0) >= limit:
                        continue
                    counts[nxt] = counts.get(nxt, 0) + 1
                    found = walk(path + [nxt])
                    if found:
                        return found
                    counts[nxt] -= 1
                return None

            found = walk([r0, r1])
            if found:
                return found
    return None


def doublecycle_step(a: AnnotatedPattern | _State) -> Directing | None:
    """One doublecycle-principle directing, or None."""
    st = a if isinstance(a, _State) else _State(a.graph, a.bans)
    found = _doublecycle(st, 1) or _doublecycle(st, 2)
    if found and (found.head, found.tail) in st.bans:
        raise InvalidPatternError(
            f"doublecycle demands {found.tail}->{found.head}, which is banned")
    return found


_RULES = {"necessity": necessity_step, "doublecycle": doublecycle_step}


def recover_largest(g0: HybridGraph, order=("necessity", "doublecycle"),
                    trace=None, validate: bool = True) -> HybridGraph:
    """Stage 2: largest chain graph from a pattern.

    Loops ban-fixpoint, then one directing by the first applicable rule in
    ``order``, until neither rule fires.  Validation is post hoc: the
    result must be a chain graph whose pattern equals the input.
    """
    for rule in order:
        if rule not in _RULES:
            raise ValueError(f"unknown rule {rule!r}")
    st = _State(g0)
    while True:
        _transitivity(st, trace)
        directing = None
        for rule in order:
            directing = _RULES[rule](st)
            if directing is not None:
                break
        if directing is None:
            break
        st.direct(directing)
        if trace is not None:
            trace((directing.rule, directing.tail, directing.head, directing.witness))
    result = st.to_graph()
    if validate:
        if not is_chain_graph(result) or pattern_of(result) != g0:
            raise InvalidPatternError("input is not the pattern of a Markov-equivalence class")
    return result


def recover_end_to_end(model: DependencyModel, **kwargs) -> HybridGraph:
    """Full recovery: pattern from predicates, then the largest chain graph."""
    return recover_largest(recover_pattern(model), **kwargs)
