"""Exhaustive ground-truth solvers for desk-scale instances."""
from __future__ import annotations
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, List, Optional, Tuple

import networkx as nx

from .config import get_config
from .core.model import Arc, FixedPathInstance, MixedGraph, Orientation, PairSet, canonical, steps
from .core.semantics import satisfied_in_digraph
from .exceptions import CapExceededError
from .utils import chunk_ranges, parallel_map

LOGGER = logging.getLogger("orientnet.oracle")


@dataclass(frozen=True)
class OracleResult:
    best_count: int
    witness: Orientation
    explored: int


def _best_mask(count_for, masks: range) -> Tuple[int, int]:
    best, best_mask = -1, masks.start
    for mask in masks:
        c = count_for(mask)
        if c > best:
            best, best_mask = c, mask
    return best, best_mask


def _search(m: int, count_for, threads: int) -> Tuple[int, int, int]:
    total = 1 << m
    parts = parallel_map(lambda r: _best_mask(count_for, r), chunk_ranges(total, threads), threads)
    best, mask = max(parts, key=lambda bm: (bm[0], -bm[1]))
    return best, mask, total


def _edge_cap(cap: Optional[int]) -> int:
    return get_config().oracle_max_edges() if cap is None else cap


def _vertex_cap(cap: Optional[int]) -> int:
    return get_config().oracle_max_vertices() if cap is None else cap


def brute_force_orient(graph: MixedGraph, pairs: PairSet, cap: Optional[int] = None,
                       threads: int = 1) -> OracleResult:
    """Best count over all 2^|E| orientations; ties go to the smallest bitmask."""
    limit = _edge_cap(cap)
    m = len(graph.edges)
    if m > limit:
        raise CapExceededError(f"oracle cap exceeded: {m} edges > {limit}")
    pairs.validate(graph.n)
    fixed = list(graph.arcs)
    edges = graph.edges
    plist = pairs.pairs

    def count_for(mask: int) -> int:
        arcs: List[Arc] = [(v, u) if (mask >> i) & 1 else (u, v) for i, (u, v) in enumerate(edges)]
        return len(satisfied_in_digraph(graph.n, fixed + arcs, plist))

    best, mask, explored = _search(m, count_for, threads)
    LOGGER.debug("oracle: %d orientations, best %d", explored, best)
    return OracleResult(best, Orientation.from_bits(edges, mask), explored)


def brute_force_fixed(instance: FixedPathInstance, cap: Optional[int] = None,
                      threads: int = 1) -> OracleResult:
    """Best number of fixed paths traversed along an orientation.

    Only edges on two or more fixed paths are enumerated; any other edge follows the one
    path using it (or its default direction), which never costs a pair.

    Ties go to the smallest bitmask over the shared edges alone, in edge order. The witness
    can therefore differ from the smallest-mask orientation over every edge that
    ``brute_force_orient`` would report; the best count is the same.
    """
    limit = _edge_cap(cap)
    usage: dict = {}
    for j, path in enumerate(instance.fixed_paths):
        for a, b in steps(path):
            usage.setdefault(canonical(a, b), []).append((a, b))
    shared = [e for e in instance.graph.edges if len(usage.get(e, [])) >= 2]
    if len(shared) > limit:
        raise CapExceededError(f"oracle cap exceeded: {len(shared)} shared edges > {limit}")
    settled = {e: (usage[e][0] if e in usage else e) for e in instance.graph.edges if e not in shared}
    paths = [steps(p) for p in instance.fixed_paths]

    def arcs_for(mask: int) -> FrozenSet[Arc]:
        chosen = {(v, u) if (mask >> i) & 1 else (u, v) for i, (u, v) in enumerate(shared)}
        return frozenset(chosen) | frozenset(settled.values())

    def count_for(mask: int) -> int:
        arcs = arcs_for(mask)
        return sum(1 for path in paths if all(step in arcs for step in path))

    best, mask, explored = _search(len(shared), count_for, threads)
    return OracleResult(best, Orientation(arcs_for(mask)), explored)


def _check_vertices(graph: nx.Graph, cap: Optional[int]) -> List[int]:
    limit = _vertex_cap(cap)
    if graph.number_of_nodes() > limit:
        raise CapExceededError(f"oracle cap exceeded: {graph.number_of_nodes()} vertices > {limit}")
    return sorted(graph.nodes)


def brute_force_max_clique(graph: nx.Graph, cap: Optional[int] = None) -> int:
    """Size of a maximum clique by trying vertex subsets from the largest down."""
    nodes = _check_vertices(graph, cap)
    for size in range(len(nodes), 0, -1):
        for subset in combinations(nodes, size):
            if all(graph.has_edge(u, v) for u, v in combinations(subset, 2)):
                return size
    return 0


def brute_force_max_independent_set(graph: nx.Graph, cap: Optional[int] = None) -> FrozenSet[int]:
    """A maximum independent set; the lexicographically first among the largest."""
    nodes = _check_vertices(graph, cap)
    for size in range(len(nodes), 0, -1):
        for subset in combinations(nodes, size):
            if not any(graph.has_edge(u, v) for u, v in combinations(subset, 2)):
                return frozenset(subset)
    return frozenset()
