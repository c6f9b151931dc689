import pytest

from orientnet.core.model import MixedGraph, PairSet
from orientnet.exceptions import PreconditionError
from orientnet.gadgets import GeneratorConfig, generate
from orientnet.oracle import brute_force_orient
from orientnet.undirected.pipeline import solve_mugo

from strategies import pairs_of, recount


def test_cycle_with_pendant():
    g = MixedGraph(4, ((0, 1), (1, 2), (0, 2), (2, 3)))
    pairs = pairs_of((0, 3), (1, 0), (2, 1))
    solution = solve_mugo(g, pairs)
    assert solution.count == 3
    assert recount(g, solution, pairs) == 3


def test_pendant_conflict_survives_contraction():
    g = MixedGraph(4, ((0, 1), (1, 2), (0, 2), (2, 3)))
    pairs = pairs_of((0, 3), (3, 1), (1, 0))
    assert solve_mugo(g, pairs).count == 2


def test_pairs_across_components_stay_unsatisfied():
    g = MixedGraph(4, ((0, 1), (2, 3)))
    pairs = pairs_of((0, 2), (0, 1), (3, 2))
    solution = solve_mugo(g, pairs)
    assert solution.count == 2
    assert solution.details["components"] == 2
    assert recount(g, solution, pairs) == 2


def test_isolated_vertices_and_loops():
    g = MixedGraph(3)
    assert solve_mugo(g, pairs_of((1, 1), (0, 2))).count == 1


def test_arcs_are_rejected():
    with pytest.raises(PreconditionError):
        solve_mugo(MixedGraph(2, (), ((0, 1),)), PairSet())


def _union(first: MixedGraph, second: MixedGraph) -> MixedGraph:
    shift = first.n
    return MixedGraph(first.n + second.n, first.edges + tuple((u + shift, v + shift) for u, v in second.edges))


@pytest.mark.slow
def test_seeded_general_graphs_match_oracle():
    for seed in range(200):
        n = 3 + seed % 7
        extra = min(seed % 4, (n - 1) * (n - 2) // 2)
        g, pairs = generate(GeneratorConfig(seed=seed, n=n, p=seed % 7, shape="general", extra_edges=extra))
        solution = solve_mugo(g, pairs)
        assert solution.count == brute_force_orient(g, pairs).best_count, seed
        assert recount(g, solution, pairs) == solution.count


@pytest.mark.slow
def test_seeded_disconnected_graphs_match_oracle():
    for seed in range(100):
        a, _ = generate(GeneratorConfig(seed=seed, n=3 + seed % 4, p=0, shape="general", extra_edges=seed % 2))
        b, _ = generate(GeneratorConfig(seed=seed + 1000, n=2 + seed % 3, p=0, shape="tree"))
        g = _union(a, b)
        _, pairs = generate(GeneratorConfig(seed=seed, n=g.n, p=1 + seed % 6, shape="path"))
        solution = solve_mugo(g, pairs)
        assert solution.count == brute_force_orient(g, pairs).best_count, seed
        assert recount(g, solution, pairs) == solution.count
