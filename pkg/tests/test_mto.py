import pytest
from hypothesis import given, settings

from orientnet.core.model import PairSet, TreeView
from orientnet.core.trees import classify_vertices
from orientnet.exceptions import PreconditionError
from orientnet.gadgets import GeneratorConfig, generate
from orientnet.oracle import brute_force_orient
from orientnet.undirected.mto import SplitChoice, apply_split, mto_leaves, solve_undirected_path, update_pairs

from strategies import pair_lists, pairs_of, path_tree, recount, star, tree_graph, trees


def _two_hubs() -> TreeView:
    # hub 0 with chain 0-1-2 and leaf 3; hub 4 with leaves 5 and 6
    return TreeView(frozenset(range(7)), ((0, 1), (1, 2), (0, 3), (0, 4), (4, 5), (4, 6)))


def test_path_examples():
    assert solve_undirected_path(path_tree(3), pairs_of((0, 1), (1, 2)))[0] == 2
    count, orientation = solve_undirected_path(path_tree(3), pairs_of((0, 1), (2, 1)))
    assert count == 2
    assert orientation.arcs == {(0, 1), (2, 1)}


def test_path_solver_rejects_branching_trees():
    with pytest.raises(PreconditionError):
        solve_undirected_path(star(3), PairSet())


def test_star_pairs_share_an_edge():
    assert mto_leaves(star(3), pairs_of((1, 2), (3, 2))).count == 2


def test_path_input_matches_path_solver():
    pairs = pairs_of((0, 4), (4, 2), (3, 1), (1, 3), (2, 2))
    assert mto_leaves(path_tree(5), pairs).count == solve_undirected_path(path_tree(5), pairs)[0] == 3


def test_split_keeps_inside_pairs_and_drops_crossing_ones():
    tree = _two_hubs()
    choice = SplitChoice(0, ((0, 1, 2), (0, 3)), (1, 1))
    assert choice.new_branch(0) == (0, 1)
    assert choice.separated(0) == (1, 2)
    pending = [(0, 2, 1), (1, 2, 5), (2, 1, 5), (3, 3, 6)]
    partial = apply_split(tree, choice, pending)
    assert partial.satisfied == {0}
    assert partial.arcs == {(2, 1)}
    assert [j for j, _, _ in partial.pending] == [2, 3]
    assert partial.residual.vertices == {0, 4, 5, 6}


def test_branch_orientation_rewrites_or_removes_endpoints():
    tree = _two_hubs()
    choice = SplitChoice(0, ((0, 1, 2), (0, 3)), (1, 1))
    partial = apply_split(tree, choice, [(2, 1, 5), (3, 3, 6), (4, 1, 3), (5, 5, 3)])
    toward = update_pairs(partial, choice, (True, True))
    assert toward.pending == ((2, 0, 5), (3, 0, 6))
    assert toward.satisfied == set()
    mixed = update_pairs(partial, choice, (True, False))
    assert mixed.pending == ((2, 0, 5), (5, 5, 0))
    assert mixed.satisfied == {4}
    assert {(1, 0), (0, 3)} <= mixed.arcs


def test_deep_rewrites_compose():
    tree = _two_hubs()
    pairs = pairs_of((2, 6), (3, 5), (1, 0), (6, 3))
    result = mto_leaves(tree, pairs)
    assert result.count == brute_force_orient(tree_graph(tree), pairs).best_count
    assert recount(tree_graph(tree), result, pairs) == result.count


@settings(max_examples=80, deadline=None)
@given(trees(max_n=9).flatmap(lambda t: pair_lists(len(t.vertices), 5).map(lambda p: (t, p))))
def test_random_trees_match_oracle(case):
    tree, pairs = case
    graph = tree_graph(tree)
    result = mto_leaves(tree, pairs)
    assert result.count == brute_force_orient(graph, pairs).best_count
    assert recount(graph, result, pairs) == result.count


def test_repeat_solves_give_identical_witnesses():
    graph, pairs = generate(GeneratorConfig(seed=11, n=12, p=6, shape="tree", max_leaves=5))
    tree = TreeView.from_graph(graph)
    assert mto_leaves(tree, pairs) == mto_leaves(tree, pairs)


@pytest.mark.slow
def test_seeded_trees_match_oracle_within_enumeration_bounds():
    for seed in range(300):
        n = 4 + seed % 9
        graph, pairs = generate(GeneratorConfig(seed=seed, n=n, p=1 + seed % 6, shape="tree", max_leaves=5))
        tree = TreeView.from_graph(graph)
        result = mto_leaves(tree, pairs)
        assert result.count == brute_force_orient(graph, pairs).best_count, seed
        assert recount(graph, result, pairs) == result.count
        k = len(classify_vertices(tree)[0])
        assert result.details["split_choices"] <= result.details["orientation_choices"]
        assert result.details["orientation_choices"] <= (2 * n) ** (2 * k - 2)
