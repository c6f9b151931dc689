import pytest

from orientnet.core.model import MixedGraph, PairSet, TreeView
from orientnet.exceptions import PreconditionError
from orientnet.gadgets import GeneratorConfig, generate
from orientnet.mixed.tree import required_steps, solve_mixed_tree
from orientnet.oracle import brute_force_orient

from strategies import pairs_of, recount


def test_empty_pairs_give_default_orientation():
    g = MixedGraph(3, ((1, 0), (1, 2)))
    solution = solve_mixed_tree(g, PairSet())
    assert solution.count == 0
    assert solution.orientation.arcs == {(0, 1), (1, 2)}


def test_star_of_arcs():
    g = MixedGraph(4, (), ((1, 0), (0, 2), (3, 0)))
    assert solve_mixed_tree(g, pairs_of((1, 2))).count == 1
    assert solve_mixed_tree(g, pairs_of((2, 1))).count == 0


def test_required_steps_skip_arcs_and_detect_blocks():
    tree = TreeView.from_graph(MixedGraph(4, ((0, 1), (2, 3)), ((1, 2),)), include_arcs=True)
    assert required_steps(tree, 0, 3) == {(0, 1): (0, 1), (2, 3): (2, 3)}
    assert required_steps(tree, 3, 0) is None


def test_rejects_non_trees():
    with pytest.raises(PreconditionError):
        solve_mixed_tree(MixedGraph(3, ((0, 1), (1, 2), (0, 2))), PairSet())


@pytest.mark.slow
def test_seeded_mixed_trees_match_oracle():
    for seed in range(150):
        n = 2 + seed % 11
        g, pairs = generate(GeneratorConfig(seed=seed, n=n, p=seed % 9, shape="tree", arcs=min(seed % 4, n - 1)))
        solution = solve_mixed_tree(g, pairs)
        assert solution.count == brute_force_orient(g, pairs).best_count, seed
        assert recount(g, solution, pairs) == solution.count
