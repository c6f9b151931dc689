from hypothesis import given

from orientnet.core.model import TreeView
from orientnet.core.trees import branches_at, classify_vertices, far_neighbors, tree_path, walk_chain

from strategies import path_tree, star, trees


def test_classify_path_and_star():
    leaves, middle, high = classify_vertices(path_tree(5))
    assert (len(leaves), len(middle), len(high)) == (2, 3, 0)
    leaves, middle, high = classify_vertices(star(4))
    assert (leaves, middle, high) == ([1, 2, 3, 4], [], [0])


@given(trees(min_n=2, max_n=50))
def test_branching_vertices_bounded_by_leaves(tree):
    leaves, middle, high = classify_vertices(tree)
    assert len(high) <= len(leaves) - 2
    assert len(leaves) + len(middle) + len(high) == len(tree.vertices)


def test_tree_path_identity():
    assert tree_path(star(3), 2, 2) == [2]


def _spider() -> TreeView:
    # 0 branches to 1-2 (leaf), 3 (leaf) and 4-5, where 5 branches to leaves 6 and 7
    edges = ((0, 1), (1, 2), (0, 3), (0, 4), (4, 5), (5, 6), (5, 7))
    return TreeView(frozenset(range(8)), edges)


def test_walk_chain_stops_at_non_degree_two():
    tree = _spider()
    assert walk_chain(tree, 0, 1) == [0, 1, 2]
    assert walk_chain(tree, 0, 4) == [0, 4, 5]


def test_branches_and_far_neighbors():
    tree = _spider()
    to_leaves, to_branching = branches_at(tree, 0)
    assert to_leaves == [[0, 1, 2], [0, 3]]
    assert to_branching == [[0, 4, 5]]
    assert far_neighbors(tree, 0) == [5]
    assert far_neighbors(tree, 5) == [0]
