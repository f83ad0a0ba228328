"""Exhaustive and random generation of small graphs and triplets.

The exhaustive sweeps in the test suite run over all hybrid graphs on a
fixed label set; isomorphism-orbit representatives cut the 5-node sweeps
down to one graph per relabelling class for properties that are
label-equivariant.
"""

from __future__ import annotations

from itertools import combinations, permutations, product
from typing import Iterator, Sequence

from .graph import EdgeKind, HybridGraph, is_chain_graph
from .triplets import Triplet

__all__ = [
    "all_hybrid_graphs",
    "all_chain_graphs",
    "orbit_representatives",
    "random_chain_graph",
    "random_triplet",
]

_KINDS = (None, EdgeKind.LINE, EdgeKind.ARROW_FORWARD, EdgeKind.ARROW_BACKWARD)


def all_hybrid_graphs(labels: Sequence[str]) -> Iterator[HybridGraph]:
    """Every hybrid graph on ``labels``: 4 choices per node pair."""
    labels = sorted(labels)
    pairs = list(combinations(labels, 2))
    for assignment in product(_KINDS, repeat=len(pairs)):
        edges = {p: k for p, k in zip(pairs, assignment) if k is not None}
        yield HybridGraph(labels, edges)


def all_chain_graphs(labels: Sequence[str]) -> Iterator[HybridGraph]:
    for g in all_hybrid_graphs(labels):
        if is_chain_graph(g):
            yield g


def _signature(g: HybridGraph, perm: Sequence[int]) -> tuple:
    """Edge code per node pair after relabelling node i to position perm[i]."""
    n = len(g)
    code = {}
    for (u, v), kind in g.edges.items():
        i, j = perm[g.index_of(u)], perm[g.index_of(v)]
        if kind is EdgeKind.LINE:
            c = 1
        elif kind is EdgeKind.ARROW_FORWARD:
            c = 2 if i < j else 3
        else:
            c = 3 if i < j else 2
        code[(i, j) if i < j else (j, i)] = c
    return tuple(code.get(p, 0) for p in combinations(range(n), 2))


def is_canonical(g: HybridGraph) -> bool:
    """True iff ``g`` is the lexicographic minimum of its relabelling orbit."""
    n = len(g)
    base = _signature(g, tuple(range(n)))
    for perm in permutations(range(n)):
        if _signature(g, perm) < base:
            return False
    return True


def orbit_representatives(graphs) -> Iterator[HybridGraph]:
    """One graph per relabelling orbit, for label-equivariant sweeps."""
    for g in graphs:
        if is_canonical(g):
            yield g


def random_chain_graph(rng, labels: Sequence[str], p_edge: float = 0.4) -> HybridGraph:
    """A random chain graph: sample edge kinds, retry until acyclic."""
    labels = sorted(labels)
    pairs = list(combinations(labels, 2))
    while True:
        edges = {}
        for pair in pairs:
            if rng.random() < p_edge:
                edges[pair] = rng.choice(_KINDS[1:])
        g = HybridGraph(labels, edges)
        if is_chain_graph(g):
            return g


def random_triplet(rng, labels: Sequence[str]) -> Triplet:
    """A uniform random triplet: roles X/Y/Z/outside, retried until valid."""
    while True:
        roles = [rng.randrange(4) for _ in labels]
        X = [lab for lab, r in zip(labels, roles) if r == 0]
        Y = [lab for lab, r in zip(labels, roles) if r == 1]
        if X and Y:
            Z = [lab for lab, r in zip(labels, roles) if r == 2]
            return Triplet(X, Y, Z)
