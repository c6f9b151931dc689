"""Satisfaction semantics: which pairs an orientation serves."""
from __future__ import annotations
from collections import deque
from typing import Dict, FrozenSet, Iterable, List, Sequence, Set, Tuple

from .model import Arc, FixedPathInstance, MixedGraph, Orientation, PairSet, steps


def adjacency(n: int, arcs: Iterable[Arc]) -> List[List[int]]:
    adj: List[List[int]] = [[] for _ in range(n)]
    for u, v in arcs:
        adj[u].append(v)
    return adj


def reachable(adj: Sequence[Sequence[int]], source: int) -> Set[int]:
    seen = {source}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def satisfied_in_digraph(n: int, arcs: Iterable[Arc], pairs: Sequence[Tuple[int, int]]) -> FrozenSet[int]:
    """Indices of pairs whose target is reachable from their source over ``arcs``."""
    adj = adjacency(n, arcs)
    cache: Dict[int, Set[int]] = {}
    hit = []
    for i, (s, t) in enumerate(pairs):
        if s == t:
            hit.append(i)
            continue
        if s not in cache:
            cache[s] = reachable(adj, s)
        if t in cache[s]:
            hit.append(i)
    return frozenset(hit)


def satisfied_pairs(graph: MixedGraph, orientation: Orientation, pairs: PairSet) -> FrozenSet[int]:
    """Pairs with a directed source-target path over the arcs plus the oriented edges.

    A pair whose source equals its target is always satisfied.
    """
    orientation.check_covers(graph)
    pairs.validate(graph.n)
    return satisfied_in_digraph(graph.n, list(graph.arcs) + list(orientation.arcs), pairs.pairs)


def satisfied_fixed_pairs(instance: FixedPathInstance, orientation: Orientation) -> FrozenSet[int]:
    """Pairs whose fixed path is traversed entirely along the orientation."""
    orientation.check_covers(instance.graph)
    return frozenset(
        j for j, path in enumerate(instance.fixed_paths)
        if all(orientation.points(u, v) for u, v in steps(path))
    )
