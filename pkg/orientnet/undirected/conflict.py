"""Conflict graphs, the K4-freeness check and the Ramsey kernel.

Two pairs conflict when their paths use a common edge in opposite directions. On a tree
(and for fixed paths) these per-edge constraints are the only ones, so a largest
independent set of the conflict graph is a largest simultaneously satisfiable pair set.
"""
from __future__ import annotations
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

import networkx as nx

from ..core.model import Arc, Edge, FixedPathInstance, Orientation, PairSet, TreeView, canonical, steps
from ..exceptions import PreconditionError, ValidationError

LOGGER = logging.getLogger("orientnet.conflict")


@dataclass(frozen=True)
class ConflictGraph:
    """One vertex per pair index; an edge joins every two conflicting pairs."""
    vertices: Tuple[int, ...]
    edges: FrozenSet[Tuple[int, int]]

    def __post_init__(self) -> None:
        vertices = tuple(sorted(self.vertices))
        present = set(vertices)
        edges = frozenset(canonical(u, v) for u, v in self.edges)
        for u, v in edges:
            if u == v or u not in present or v not in present:
                raise ValidationError(f"invalid conflict edge ({u}, {v})")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", edges)

    def __len__(self) -> int:
        return len(self.vertices)

    def neighbors(self) -> Dict[int, Set[int]]:
        adj: Dict[int, Set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def adjacent(self, u: int, v: int) -> bool:
        return canonical(u, v) in self.edges

    def induced(self, keep: Iterable[int]) -> "ConflictGraph":
        keep = frozenset(keep)
        return ConflictGraph(tuple(v for v in self.vertices if v in keep),
                             frozenset(e for e in self.edges if e[0] in keep and e[1] in keep))

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return g


def _conflicts(directed_paths: Sequence[Iterable[Arc]]) -> FrozenSet[Tuple[int, int]]:
    users: Dict[Arc, List[int]] = {}
    for j, path in enumerate(directed_paths):
        for step in set(path):
            users.setdefault(step, []).append(j)
    edges = set()
    for (a, b), forward in users.items():
        if a < b:
            for i in forward:
                for j in users.get((b, a), ()):
                    if i != j:
                        edges.add(canonical(i, j))
    return frozenset(edges)


def build_conflict_graph_tree(tree: TreeView, pairs: PairSet) -> ConflictGraph:
    """Conflict graph of pairs on an undirected tree."""
    if tree.arcs:
        raise PreconditionError("conflict graphs are built on undirected trees")
    paths = [steps(tree.path(s, t)) for s, t in pairs]
    return ConflictGraph(tuple(range(len(pairs))), _conflicts(paths))


def build_conflict_graph_fixed(instance: FixedPathInstance) -> ConflictGraph:
    """Conflict graph of fixed paths; unlike the tree case it may contain a K4."""
    paths = [steps(p) for p in instance.fixed_paths]
    return ConflictGraph(tuple(range(len(paths))), _conflicts(paths))


def is_k4_free(cg: ConflictGraph) -> bool:
    """True iff no four vertices are pairwise adjacent (a triangle inside some neighbourhood pair)."""
    adj = cg.neighbors()
    for u, v in cg.edges:
        common = sorted(adj[u] & adj[v])
        for x, y in combinations(common, 2):
            if y in adj[x]:
                return False
    return True


def ramsey_bound(beta: int) -> int:
    """Vertex count from which a K4-free graph surely has an independent set of size beta."""
    return (beta + 2) * (beta + 1) * beta // 6


def ramsey_kernel(cg: ConflictGraph, beta: int) -> ConflictGraph:
    """Keep the lowest ``ramsey_bound(beta)`` vertices of a large K4-free conflict graph."""
    if beta < 1:
        raise ValidationError(f"beta must be at least 1, got {beta}")
    if not is_k4_free(cg):
        raise PreconditionError("kernelization needs a K4-free conflict graph")
    bound = ramsey_bound(beta)
    if len(cg) <= bound:
        return cg
    return cg.induced(cg.vertices[:bound])


def maximum_independent_set(cg: ConflictGraph) -> FrozenSet[int]:
    """Exact maximum independent set by branching on a maximum-degree vertex."""
    adj = cg.neighbors()

    def solve(alive: FrozenSet[int]) -> FrozenSet[int]:
        if not alive:
            return frozenset()
        degree = {v: len(adj[v] & alive) for v in alive}
        pick = min(alive, key=lambda v: (-degree[v], v))
        if degree[pick] == 0:
            return alive
        if degree[pick] == 1 and all(d <= 1 for d in degree.values()):
            # matching plus isolated vertices: keep one end of every edge
            chosen, taken = set(), set()
            for v in sorted(alive):
                if v not in taken:
                    chosen.add(v)
                    taken |= adj[v] & alive
                    taken.add(v)
            return frozenset(chosen)
        with_pick = solve(alive - adj[pick] - {pick}) | {pick}
        without = solve(alive - {pick})
        return with_pick if len(with_pick) >= len(without) else without

    return solve(frozenset(cg.vertices))


def orientation_from_pairs(tree: TreeView, pairs: PairSet, chosen: Iterable[int]) -> Orientation:
    """Orientation giving every chosen pair its path; other edges go lower id to higher."""
    directions: Dict[Edge, Arc] = {e: e for e in tree.edges}
    for j in chosen:
        s, t = pairs[j]
        for a, b in steps(tree.path(s, t)):
            directions[canonical(a, b)] = (a, b)
    return Orientation(frozenset(directions.values()))


@dataclass(frozen=True)
class BudgetDecision:
    feasible: bool
    beta: int
    bound: int
    kernel_size: int
    independent_set: FrozenSet[int]
    witness: Optional[Orientation]


def solve_mto_budget(tree: TreeView, pairs: PairSet, beta: int) -> BudgetDecision:
    """Decide whether some orientation satisfies at least ``beta`` pairs of a tree instance."""
    if beta < 1:
        raise ValidationError(f"beta must be at least 1, got {beta}")
    cg = build_conflict_graph_tree(tree, pairs)
    assert is_k4_free(cg), "tree conflict graph contains a K4"
    bound = ramsey_bound(beta)
    kernel = ramsey_kernel(cg, beta)
    mis = maximum_independent_set(kernel)
    if len(pairs) > bound:
        # a K4-free graph on this many vertices always has the independent set
        assert len(mis) >= beta
        feasible = True
    else:
        feasible = len(mis) >= beta
    witness = orientation_from_pairs(tree, pairs, mis) if feasible else None
    LOGGER.debug("budget beta=%d: p=%d bound=%d kernel=%d mis=%d -> %s",
                 beta, len(pairs), bound, len(kernel), len(mis), feasible)
    return BudgetDecision(feasible, beta, bound, len(kernel), mis, witness)


def decide_mto_budget(tree: TreeView, pairs: PairSet, beta: int) -> bool:
    """True iff some orientation of the tree satisfies at least ``beta`` pairs."""
    return solve_mto_budget(tree, pairs, beta).feasible
