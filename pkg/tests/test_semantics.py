from collections import deque

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orientnet.core.model import FixedPathInstance, MixedGraph, Orientation, PairSet
from orientnet.core.semantics import satisfied_fixed_pairs, satisfied_pairs
from orientnet.gadgets import clique_to_mugo, figure_instance
from orientnet.exceptions import InvalidOrientationError


PATH = MixedGraph(3, ((0, 1), (1, 2)))


def test_forward_and_reverse_on_path():
    forward = Orientation.along([0, 1, 2])
    assert satisfied_pairs(PATH, forward, PairSet(((0, 2),))) == {0}
    assert satisfied_pairs(PATH, forward, PairSet(((2, 0),))) == frozenset()


def test_equal_endpoints_always_satisfied():
    assert satisfied_pairs(PATH, Orientation.along([2, 1, 0]), PairSet(((1, 1),))) == {0}


def test_arcs_take_part_in_reachability():
    g = MixedGraph(4, ((0, 1), (2, 3)), ((1, 2),))
    o = Orientation(frozenset({(0, 1), (2, 3)}))
    assert satisfied_pairs(g, o, PairSet(((0, 3), (3, 0)))) == {0}


def test_domain_mismatch_is_rejected():
    with pytest.raises(InvalidOrientationError):
        satisfied_pairs(PATH, Orientation.along([0, 1]), PairSet())


def _bfs(n, arcs, s, t):
    seen, queue = {s}, deque([s])
    while queue:
        x = queue.popleft()
        for a, b in arcs:
            if a == x and b not in seen:
                seen.add(b)
                queue.append(b)
    return t in seen


@settings(max_examples=60)
@given(st.data())
def test_matches_independent_reachability(data):
    n = 8
    all_edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = data.draw(st.lists(st.sampled_from(all_edges), min_size=10, max_size=10, unique=True))
    g = MixedGraph(n, tuple(edges))
    mask = data.draw(st.integers(0, (1 << len(edges)) - 1))
    o = Orientation.from_bits(g.edges, mask)
    vertex = st.integers(0, n - 1)
    pairs = PairSet(tuple(data.draw(st.lists(st.tuples(vertex, vertex), min_size=5, max_size=5))))
    expected = {j for j, (s, t) in enumerate(pairs) if _bfs(n, o.arcs, s, t)}
    assert satisfied_pairs(g, o, pairs) == expected


def test_adding_arcs_never_loses_pairs():
    g = MixedGraph(4, ((0, 1), (1, 2), (2, 3)))
    o = Orientation(frozenset({(0, 1), (2, 1), (2, 3)}))
    pairs = PairSet(((0, 3), (2, 3), (0, 1)))
    before = satisfied_pairs(g, o, pairs)
    wider = MixedGraph(4, ((0, 1), (1, 2), (2, 3)), ((0, 2),))
    assert before <= satisfied_pairs(wider, o, pairs)


def test_fixed_pairs_follow_their_paths():
    g = MixedGraph(3, ((0, 1), (1, 2)))
    inst = FixedPathInstance(g, ((0, 1), (1, 0), (0, 1, 2)))
    assert satisfied_fixed_pairs(inst, Orientation.along([0, 1, 2])) == {0, 2}


def test_figure_reduction_has_three_compatible_paths():
    inst = clique_to_mugo(figure_instance())
    arcs = {}
    for j in (1, 2, 4):
        path = inst.fixed_paths[j]
        for a, b in zip(path, path[1:]):
            arcs[min(a, b), max(a, b)] = (a, b)
    for e in inst.graph.edges:
        arcs.setdefault(e, e)
    assert satisfied_fixed_pairs(inst, Orientation(frozenset(arcs.values()))) == {1, 2, 4}
