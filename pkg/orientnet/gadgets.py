"""Clique-to-fixed-path reduction and seeded random instance generators."""
from __future__ import annotations
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
from typing_extensions import Literal

from .core.model import Arc, Edge, FixedPathInstance, MixedGraph, PairSet, canonical
from .exceptions import ValidationError
from .oracle import brute_force_fixed, brute_force_max_clique

LOGGER = logging.getLogger("orientnet.gadgets")

Shape = Literal["path", "cycle", "tree", "mixed-acyclic", "general"]
SHAPES: Tuple[str, ...] = ("path", "cycle", "tree", "mixed-acyclic", "general")


@dataclass(frozen=True)
class CliqueInstance:
    graph: nx.Graph
    k: Optional[int] = None

    def __post_init__(self) -> None:
        if self.graph.is_directed():
            raise ValidationError("clique instances are undirected")
        if any(u == v for u, v in self.graph.edges):
            raise ValidationError("clique instance has a self-loop")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]], k: Optional[int] = None) -> "CliqueInstance":
        g = nx.Graph()
        g.add_nodes_from(range(n))
        g.add_edges_from(edges)
        return cls(g, k)


def figure_instance() -> CliqueInstance:
    """Five vertices; {1, 2, 4} is the only triangle and there is no larger clique."""
    return CliqueInstance.from_edges(5, [(0, 1), (1, 2), (1, 4), (2, 4), (3, 4), (0, 3)], k=3)


def clique_to_mugo(instance: CliqueInstance) -> FixedPathInstance:
    """One fixed path per clique vertex, crossing exactly where two vertices are not adjacent.

    Paths run as lanes from ``s_i`` to ``t_i`` through one gadget column per vertex pair
    ``{i, j}`` (``i < j``). Lane ``i`` always uses the edge ``u_ij - v_ij``. Lane ``j`` uses
    ``u_ji - v_ji`` when ``i`` and ``j`` are adjacent, and ``u_ji - v_ij - u_ij - v_ji``
    otherwise, which runs through the edge of lane ``i`` backwards. Connectors between
    columns belong to a single lane.
    """
    nodes = sorted(instance.graph.nodes)
    n_c = len(nodes)
    counter = [0]

    def fresh() -> int:
        counter[0] += 1
        return counter[0] - 1

    lanes: List[List[int]] = [[fresh()] for _ in nodes]
    edges: List[Edge] = []

    def extend(lane: int, sequence: Sequence[int], new_edges: Sequence[Tuple[int, int]]) -> None:
        edges.append(canonical(lanes[lane][-1], sequence[0]))
        edges.extend(canonical(u, v) for u, v in new_edges)
        lanes[lane].extend(sequence)

    for i, j in combinations(range(n_c), 2):
        u_ij, v_ij, u_ji, v_ji = fresh(), fresh(), fresh(), fresh()
        extend(i, (u_ij, v_ij), [(u_ij, v_ij)])
        if instance.graph.has_edge(nodes[i], nodes[j]):
            extend(j, (u_ji, v_ji), [(u_ji, v_ji)])
        else:
            extend(j, (u_ji, v_ij, u_ij, v_ji), [(u_ji, v_ij), (u_ij, v_ji)])
    for lane in range(n_c):
        t = fresh()
        edges.append(canonical(lanes[lane][-1], t))
        lanes[lane].append(t)
    assert len(edges) <= 3 * max(n_c, 1) ** 2
    graph = MixedGraph(counter[0], tuple(edges))
    return FixedPathInstance(graph, tuple(tuple(lane) for lane in lanes))


def verify_reduction(instance: CliqueInstance, threads: int = 1) -> bool:
    """Best fixed-path count of the reduced instance equals the maximum clique size."""
    satisfied = brute_force_fixed(clique_to_mugo(instance), threads=threads).best_count
    clique = brute_force_max_clique(instance.graph)
    if satisfied != clique:
        LOGGER.warning("reduction mismatch: %d fixed paths vs clique of %d", satisfied, clique)
    return satisfied == clique


@dataclass(frozen=True)
class GeneratorConfig:
    """Knobs for ``generate``.

    ``arcs`` is the number of connections made directed; for ``mixed-acyclic`` it is the
    number of arcs tying ``arcs + 1`` tree components together, with ``extra_arcs`` more
    arcs between components on top.
    """
    seed: int = 0
    n: int = 8
    p: int = 4
    arcs: int = 0
    shape: Shape = "tree"
    max_leaves: Optional[int] = None
    extra_edges: int = 0
    extra_arcs: int = 0

    def __post_init__(self) -> None:
        if self.shape not in SHAPES:
            raise ValidationError(f"unknown shape {self.shape!r}; expected one of {', '.join(SHAPES)}")
        for name in ("n", "p", "arcs", "extra_edges", "extra_arcs"):
            if getattr(self, name) < 0:
                raise ValidationError(f"{name} must be non-negative")
        if self.n < 1:
            raise ValidationError("n must be at least 1")
        if self.shape == "cycle" and self.n < 3:
            raise ValidationError("a cycle needs at least 3 vertices")
        if self.max_leaves is not None and self.max_leaves < 2 and self.n >= 2:
            raise ValidationError(f"leaf bound {self.max_leaves} is infeasible for {self.n} vertices")
        if self.p and self.n < 2:
            raise ValidationError("pairs need at least two vertices")
        if self.shape == "mixed-acyclic" and self.arcs + 1 > self.n:
            raise ValidationError(f"{self.arcs + 1} components do not fit in {self.n} vertices")


def _random_tree(rng: np.random.Generator, vertices: Sequence[int], max_leaves: Optional[int]) -> List[Edge]:
    """Random attachment tree over ``vertices`` with at most ``max_leaves`` leaves."""
    order = [vertices[i] for i in rng.permutation(len(vertices))]
    degree = {order[0]: 0}
    edges: List[Edge] = []
    for v in order[1:]:
        leaves = sum(1 for d in degree.values() if d <= 1) if len(degree) > 1 else 1
        placed = list(degree)
        if max_leaves is not None and len(degree) > 1 and leaves >= max_leaves:
            placed = [w for w in placed if degree[w] <= 1]
        w = placed[int(rng.integers(len(placed)))]
        edges.append(canonical(v, w))
        degree[w] += 1
        degree[v] = 1
    return edges


def _sample(rng: np.random.Generator, pool: Sequence, count: int, what: str) -> list:
    if count > len(pool):
        raise ValidationError(f"cannot place {count} {what}; only {len(pool)} available")
    return [pool[i] for i in sorted(rng.choice(len(pool), size=count, replace=False))] if count else []


def _direct(rng: np.random.Generator, connections: Sequence[Edge], count: int) -> Tuple[List[Edge], List[Arc]]:
    chosen = set(_sample(rng, sorted(connections), count, "arcs"))
    arcs = [(u, v) if rng.integers(2) == 0 else (v, u) for u, v in sorted(chosen)]
    return sorted(e for e in connections if e not in chosen), arcs


def generate(config: GeneratorConfig) -> Tuple[MixedGraph, PairSet]:
    """Seeded random instance of the requested shape; identical configs give identical output."""
    rng = np.random.Generator(np.random.Philox(config.seed))
    n = config.n
    vertices = list(range(n))
    edges: List[Edge]
    arcs: List[Arc]
    if config.shape in ("path", "tree", "general"):
        bound = 2 if config.shape == "path" else config.max_leaves
        connections = _random_tree(rng, vertices, bound)
        if config.shape == "general" and config.extra_edges:
            present = set(connections)
            free = [e for e in combinations(vertices, 2) if e not in present]
            connections += _sample(rng, free, config.extra_edges, "extra edges")
        edges, arcs = _direct(rng, connections, config.arcs)
    elif config.shape == "cycle":
        ring = [int(v) for v in rng.permutation(n)]
        connections = [canonical(ring[i], ring[(i + 1) % n]) for i in range(n)]
        edges, arcs = _direct(rng, connections, config.arcs)
    else:
        order = [int(v) for v in rng.permutation(n)]
        cuts = sorted(int(c) for c in rng.choice(np.arange(1, n), size=config.arcs, replace=False)) if config.arcs else []
        bounds = [0] + cuts + [n]
        parts = [order[bounds[i]:bounds[i + 1]] for i in range(len(bounds) - 1)]
        edges = sorted(e for part in parts for e in _random_tree(rng, part, config.max_leaves))
        arcs = []
        for i in range(1, len(parts)):
            other = parts[int(rng.integers(i))]
            u = parts[i][int(rng.integers(len(parts[i])))]
            v = other[int(rng.integers(len(other)))]
            arcs.append((u, v) if rng.integers(2) == 0 else (v, u))
        if config.extra_arcs:
            comp = {v: i for i, part in enumerate(parts) for v in part}
            taken = {canonical(u, v) for u, v in arcs}
            free = [e for e in combinations(vertices, 2) if comp[e[0]] != comp[e[1]] and e not in taken]
            for u, v in _sample(rng, free, config.extra_arcs, "extra arcs"):
                arcs.append((u, v) if rng.integers(2) == 0 else (v, u))
    pairs = []
    for _ in range(config.p):
        s = int(rng.integers(n))
        t = int(rng.integers(n - 1))
        pairs.append((s, t + 1 if t >= s else t))
    return MixedGraph(n, tuple(edges), tuple(arcs)), PairSet(tuple(pairs))
