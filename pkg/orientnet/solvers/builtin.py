"""Built-in solvers, exposed through the ``orientnet.solvers`` entry-point group."""
from __future__ import annotations
from typing import Any

import networkx as nx

from ..core.model import MixedGraph, PairSet, Solution, TreeView
from ..exceptions import PreconditionError
from ..mixed.cycle import cycle_order, solve_mixed_cycle
from ..mixed.fpt import decompose_components, solve_mixed_fpt
from ..mixed.path import PathLayout, solve_mixed_path
from ..mixed.tree import solve_mixed_tree
from ..oracle import brute_force_orient
from ..undirected.backbone import solve_backbone
from ..undirected.pipeline import solve_mugo
from .base import Solver
from .registry import register


def _undirected_tree(graph: MixedGraph) -> bool:
    return not graph.arcs and graph.n > 0 and nx.is_tree(graph.undirected())


class PathSolver(Solver):
    name = "path"

    def applies(self, graph: MixedGraph) -> bool:
        try:
            PathLayout.from_graph(graph)
        except PreconditionError:
            return False
        return True

    def solve(self, graph: MixedGraph, pairs: PairSet, **options: Any) -> Solution:
        return solve_mixed_path(graph, pairs)


class CycleSolver(Solver):
    name = "cycle"

    def applies(self, graph: MixedGraph) -> bool:
        try:
            cycle_order(graph)
        except PreconditionError:
            return False
        return True

    def solve(self, graph: MixedGraph, pairs: PairSet, **options: Any) -> Solution:
        return solve_mixed_cycle(graph, pairs)


class TreeSolver(Solver):
    """Undirected graphs of any shape; cycles are contracted before the tree solve."""
    name = "tree"

    def applies(self, graph: MixedGraph) -> bool:
        return not graph.arcs

    def solve(self, graph: MixedGraph, pairs: PairSet, **options: Any) -> Solution:
        return solve_mugo(graph, pairs)


class MixedTreeSolver(Solver):
    name = "tree-mixed"

    def applies(self, graph: MixedGraph) -> bool:
        return graph.n > 0 and nx.is_tree(graph.skeleton())

    def solve(self, graph: MixedGraph, pairs: PairSet, **options: Any) -> Solution:
        return solve_mixed_tree(graph, pairs)


class MixedFptSolver(Solver):
    name = "mixed"

    def applies(self, graph: MixedGraph) -> bool:
        try:
            decompose_components(graph)
        except PreconditionError:
            return False
        return True

    def solve(self, graph: MixedGraph, pairs: PairSet, **options: Any) -> Solution:
        return solve_mixed_fpt(graph, pairs)


class BackboneSolver(Solver):
    name = "backbone"
    exact = False

    def applies(self, graph: MixedGraph) -> bool:
        return _undirected_tree(graph)

    def solve(self, graph: MixedGraph, pairs: PairSet, **options: Any) -> Solution:
        if not _undirected_tree(graph):
            raise PreconditionError("the backbone approximation expects an undirected tree")
        return solve_backbone(TreeView.from_graph(graph), pairs, seed=options.get("seed"))


class OracleSolver(Solver):
    name = "oracle"

    def solve(self, graph: MixedGraph, pairs: PairSet, **options: Any) -> Solution:
        result = brute_force_orient(graph, pairs, threads=options.get("threads") or 1)
        return Solution(result.best_count, result.witness, {"explored": result.explored})


for _cls in (PathSolver, CycleSolver, TreeSolver, MixedTreeSolver, MixedFptSolver, BackboneSolver, OracleSolver):
    register(_cls.name, _cls)
