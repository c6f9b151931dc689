"""Hypothesis strategies and small instance helpers shared by the test modules."""
from __future__ import annotations
from typing import List, Tuple

from hypothesis import strategies as st

from orientnet.core.model import MixedGraph, PairSet, TreeView
from orientnet.core.semantics import satisfied_pairs


@st.composite
def trees(draw, min_n: int = 1, max_n: int = 12) -> TreeView:
    n = draw(st.integers(min_n, max_n))
    parents = [draw(st.integers(0, i - 1)) for i in range(1, n)]
    return TreeView(frozenset(range(n)), tuple((p, i) for i, p in enumerate(parents, start=1)))


@st.composite
def pair_lists(draw, n: int, max_p: int = 6) -> PairSet:
    vertex = st.integers(0, n - 1)
    return PairSet(tuple(draw(st.lists(st.tuples(vertex, vertex), max_size=max_p))))


@st.composite
def connected_graphs(draw, min_n: int = 2, max_n: int = 9) -> MixedGraph:
    """Random tree plus chords, with vertex ids shuffled so component order and id order differ."""
    n = draw(st.integers(min_n, max_n))
    parents = [draw(st.integers(0, i - 1)) for i in range(1, n)]
    edges = {(p, i) for i, p in enumerate(parents, start=1)}
    others = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    if others:
        edges |= set(draw(st.lists(st.sampled_from(others), max_size=3, unique=True)))
    perm = draw(st.permutations(range(n)))
    return MixedGraph(n, tuple((perm[u], perm[v]) for u, v in sorted(edges)))


def tree_graph(tree: TreeView) -> MixedGraph:
    return MixedGraph(len(tree.vertices), tree.edges)


def star(leaves: int) -> TreeView:
    return TreeView(frozenset(range(leaves + 1)), tuple((0, i) for i in range(1, leaves + 1)))


def path_tree(n: int) -> TreeView:
    return TreeView(frozenset(range(n)), tuple((i, i + 1) for i in range(n - 1)))


def recount(graph: MixedGraph, solution, pairs: PairSet) -> int:
    return len(satisfied_pairs(graph, solution.orientation, pairs))


def pairs_of(*items: Tuple[int, int]) -> PairSet:
    return PairSet(tuple(items))


def degrees(tree: TreeView) -> List[int]:
    return [tree.degree(v) for v in sorted(tree.vertices)]
