import pytest

from orientnet.core.model import MixedGraph, PairSet, TreeView
from orientnet.exceptions import PreconditionError
from orientnet.gadgets import GeneratorConfig, generate
from orientnet.mixed.fpt import decompose_components, enumerate_routes, solve_mixed_fpt
from orientnet.oracle import brute_force_orient
from orientnet.undirected.mto import mto_leaves

from strategies import pairs_of, recount

BRIDGED = MixedGraph(4, ((0, 1), (2, 3)), ((1, 2),))


def test_arc_free_tree_is_one_component():
    g = MixedGraph(4, ((0, 1), (1, 2), (1, 3)))
    decomp = decompose_components(g, pairs_of((0, 2), (3, 0)))
    assert len(decomp.components) == 1
    assert decomp.spanning_pairs == ()
    assert decomp.local_pairs == (0, 1)


def test_bridged_components_have_single_boundary_vertex():
    decomp = decompose_components(BRIDGED)
    first, second = decomp.components
    assert first.boundary == (1,)
    assert second.boundary == (2,)
    assert first.outputs == (1,) and second.inputs == (2,)


def test_undirected_cycle_in_a_component_is_rejected():
    g = MixedGraph(4, ((0, 1), (1, 2), (0, 2)), ((2, 3),))
    with pytest.raises(PreconditionError):
        decompose_components(g)


def test_routes_follow_arcs():
    decomp = decompose_components(BRIDGED, pairs_of((0, 3), (3, 0)))
    (route,) = enumerate_routes(decomp, (0, 3))
    assert route.arcs == ((1, 2),)
    assert route.hops == ((0, 0, 1), (1, 2, 3))
    assert enumerate_routes(decomp, (3, 0)) == []


def test_conflicting_hops_and_local_pairs():
    pairs = pairs_of((0, 3), (1, 0), (2, 3))
    solution = solve_mixed_fpt(BRIDGED, pairs)
    assert solution.count == 2
    assert recount(BRIDGED, solution, pairs) == 2
    assert solution.details["spanning_pairs"] == 1


def test_arc_free_tree_agrees_with_leaf_solver():
    g = MixedGraph(6, ((0, 1), (1, 2), (1, 3), (3, 4), (3, 5)))
    pairs = pairs_of((0, 4), (5, 2), (2, 0), (4, 5), (3, 3))
    assert solve_mixed_fpt(g, pairs).count == mto_leaves(TreeView.from_graph(g), pairs).count


@pytest.mark.slow
def test_seeded_mixed_acyclic_graphs_match_oracle():
    for seed in range(200):
        arcs = seed % 3
        extra = 1 if arcs and seed % 2 else 0
        config = GeneratorConfig(seed=seed, n=4 + seed % 7, p=seed % 5, shape="mixed-acyclic",
                                 arcs=arcs, extra_arcs=extra)
        g, pairs = generate(config)
        solution = solve_mixed_fpt(g, pairs)
        assert solution.count == brute_force_orient(g, pairs).best_count, seed
        assert recount(g, solution, pairs) == solution.count
