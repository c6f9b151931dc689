"""Cycle contraction: reduce an undirected graph to the tree of its bridges."""
from __future__ import annotations
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Tuple

import networkx as nx

from ..exceptions import PreconditionError
from .model import Edge, MixedGraph, Orientation, PairSet, TreeView, canonical

LOGGER = logging.getLogger("orientnet.contraction")


def strong_orientation(graph: MixedGraph, vertices: Iterable[int]) -> Orientation:
    """Orient the edges inside a 2-edge-connected vertex set so it becomes strongly connected.

    DFS tree edges point away from the root, every other edge points from the deeper
    endpoint to the shallower one (in an undirected DFS every non-tree edge joins an
    ancestor and a descendant).
    """
    keep = frozenset(vertices)
    sub = graph.undirected().subgraph(keep)
    if sub.number_of_edges() == 0:
        return Orientation()
    root = min(keep)
    depth = {root: 0}
    arcs = set()
    for u, v in nx.dfs_edges(sub, source=root):
        depth[v] = depth[u] + 1
        arcs.add((u, v))
    tree_edges = {canonical(u, v) for u, v in arcs}
    for u, v in sub.edges:
        if canonical(u, v) in tree_edges:
            continue
        arcs.add((u, v) if depth[u] > depth[v] else (v, u))
    return Orientation(frozenset(arcs))


@dataclass(frozen=True)
class Contraction:
    """Tree of 2-edge-connected components joined by the bridges of the input."""
    graph: MixedGraph
    tree: TreeView
    pairs: PairSet
    vertex_map: Tuple[int, ...]
    components: Tuple[FrozenSet[int], ...]
    bridges: Tuple[Tuple[Edge, Edge], ...]  # (original bridge, contracted edge)

    def lift(self, tree_orientation: Orientation) -> Orientation:
        """Orientation of the input graph from one of the contracted tree.

        Bridges follow the tree; every component is oriented strongly connected, so any
        pair satisfied in the tree stays satisfied in the graph.
        """
        arcs = set()
        for (u, v), _ in self.bridges:
            forward = tree_orientation.points(self.vertex_map[u], self.vertex_map[v])
            arcs.add((u, v) if forward else (v, u))
        parts = [strong_orientation(self.graph, comp) for comp in self.components if len(comp) > 1]
        return Orientation(frozenset(arcs)).merge(*parts)


def contract_cycles(graph: MixedGraph, pairs: PairSet) -> Contraction:
    """Contract every 2-edge-connected component of a connected undirected graph."""
    if graph.arcs:
        raise PreconditionError("cycle contraction expects an undirected graph")
    pairs.validate(graph.n)
    g = graph.undirected()
    if graph.n == 0 or not nx.is_connected(g):
        raise PreconditionError("cycle contraction expects a connected graph; split components first")
    bridges = sorted(canonical(u, v) for u, v in nx.bridges(g))
    h = g.copy()
    h.remove_edges_from(bridges)
    comps = sorted((frozenset(c) for c in nx.connected_components(h)), key=min)
    comp_of: Dict[int, int] = {}
    for i, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = i
    vertex_map = tuple(comp_of[v] for v in range(graph.n))
    lifted = tuple((b, canonical(comp_of[b[0]], comp_of[b[1]])) for b in bridges)
    tree = TreeView(frozenset(range(len(comps))), tuple(e for _, e in lifted))
    mapped = PairSet(tuple((comp_of[s], comp_of[t]) for s, t in pairs))
    LOGGER.debug("contracted %d vertices into %d components over %d bridges",
                 graph.n, len(comps), len(bridges))
    return Contraction(graph, tree, mapped, vertex_map, tuple(comps), lifted)
