"""Undirected graphs: contract cycles per component, solve the trees, lift back."""
from __future__ import annotations
import logging
from typing import Dict, List

import networkx as nx

from ..core.contraction import contract_cycles
from ..core.model import MixedGraph, Orientation, PairSet, Solution, TreeView
from ..exceptions import PreconditionError
from .mto import mto_leaves

LOGGER = logging.getLogger("orientnet.pipeline")


def solve_mugo(graph: MixedGraph, pairs: PairSet) -> Solution:
    """Exact optimum for an undirected graph; pairs across components stay unsatisfied."""
    if graph.arcs:
        raise PreconditionError("expected an undirected graph")
    pairs.validate(graph.n)
    if graph.n and nx.is_tree(graph.undirected()):
        return mto_leaves(TreeView.from_graph(graph), pairs)

    components = sorted((sorted(c) for c in nx.connected_components(graph.undirected())), key=lambda c: c[0])
    total = 0
    parts: List[Orientation] = []
    contracted = 0
    for comp in components:
        local: Dict[int, int] = {v: i for i, v in enumerate(comp)}
        sub = MixedGraph(len(comp), tuple((local[u], local[v]) for u, v in graph.edges if u in local))
        sub_pairs = PairSet(tuple((local[s], local[t]) for s, t in pairs if s in local and t in local))
        contraction = contract_cycles(sub, sub_pairs)
        contracted += len(contraction.tree.vertices)
        solved = mto_leaves(contraction.tree, contraction.pairs)
        total += solved.count
        parts.append(contraction.lift(solved.orientation).relabel(dict(enumerate(comp))))
    LOGGER.debug("mugo: %d components contracted to %d tree vertices, optimum %d",
                 len(components), contracted, total)
    return Solution(total, Orientation().merge(*parts), {
        "components": len(components), "tree_vertices": contracted})
