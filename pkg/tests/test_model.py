import pytest
from hypothesis import given

from orientnet.core.model import FixedPathInstance, MixedGraph, Orientation, PairSet, Solution, TreeView
from orientnet.exceptions import InvalidOrientationError, ValidationError

from strategies import path_tree, star, trees


def test_edges_are_stored_lower_id_first():
    g = MixedGraph(3, ((1, 0), (2, 1)))
    assert g.edges == ((0, 1), (1, 2))


@pytest.mark.parametrize("edges, arcs", [
    (((0, 0),), ()),
    ((), ((1, 1),)),
    (((0, 1),), ((1, 0),)),
    (((0, 1), (1, 0)), ()),
    (((0, 3),), ()),
])
def test_mixed_graph_rejects_invalid_connections(edges, arcs):
    with pytest.raises(ValidationError):
        MixedGraph(3, edges, arcs)


def test_pairs_allow_duplicates_and_check_range():
    pairs = PairSet(((0, 1), (0, 1)))
    assert len(pairs) == 2
    with pytest.raises(ValidationError):
        pairs.validate(1)


def test_orientation_from_bits():
    o = Orientation.from_bits([(0, 1), (1, 2)], 0b10)
    assert o.arcs == {(0, 1), (2, 1)}
    assert o.direction((1, 2)) == (2, 1)


def test_orientation_rejects_both_directions():
    with pytest.raises(InvalidOrientationError):
        Orientation(frozenset({(0, 1), (1, 0)}))


def test_check_covers_reports_missing_edges():
    g = MixedGraph(3, ((0, 1), (1, 2)))
    with pytest.raises(InvalidOrientationError):
        Orientation(frozenset({(0, 1)})).check_covers(g)
    Orientation.default(g.edges).check_covers(g)


def test_solution_unpacks_to_count_and_orientation():
    count, orientation = Solution(2, Orientation.along([0, 1, 2]))
    assert count == 2
    assert orientation.points(1, 2)


def test_fixed_path_must_use_existing_edges():
    g = MixedGraph(3, ((0, 1),))
    with pytest.raises(ValidationError):
        FixedPathInstance(g, ((0, 1, 2),))
    assert FixedPathInstance(g, ((1, 0),)).pairs.pairs == ((1, 0),)


def test_tree_view_rejects_cycles():
    with pytest.raises(ValidationError):
        TreeView.from_graph(MixedGraph(3, ((0, 1), (1, 2), (0, 2))))


def test_tree_paths():
    assert star(2).path(1, 2) == [1, 0, 2]
    assert path_tree(4).path(3, 0) == [3, 2, 1, 0]
    assert path_tree(4).path(2, 2) == [2]


@given(trees(max_n=15))
def test_tree_path_reversed_is_path_back(tree):
    vs = sorted(tree.vertices)
    for u in vs[:4]:
        for v in vs[-4:]:
            forward = tree.path(u, v)
            assert forward[::-1] == tree.path(v, u)
            assert forward[0] == u and forward[-1] == v
            assert all(b in tree.neighbors(a) for a, b in zip(forward, forward[1:]))


def test_induced_subtree_keeps_inner_edges():
    sub = path_tree(5).induced({1, 2, 3})
    assert sub.edges == ((1, 2), (2, 3))
    assert sub.root == 1
