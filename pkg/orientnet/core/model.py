from __future__ import annotations
from collections import deque
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

import networkx as nx
from typing_extensions import TypeAlias

from ..exceptions import InvalidOrientationError, ValidationError

Vertex: TypeAlias = int
Edge: TypeAlias = Tuple[int, int]   # canonical, lower id first
Arc: TypeAlias = Tuple[int, int]    # (tail, head)
Pair: TypeAlias = Tuple[int, int]   # (source, target)


def canonical(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def steps(sequence: Sequence[int]) -> List[Arc]:
    """Consecutive (from, to) steps of a vertex sequence."""
    return [(sequence[i], sequence[i + 1]) for i in range(len(sequence) - 1)]


@dataclass(frozen=True)
class MixedGraph:
    """Vertices 0..n-1, undirected edges and arcs (tail, head).

    Edges are stored canonically (lower id first) in the order given; that order is the
    bit order used by the exhaustive oracle.
    """
    n: int
    edges: Tuple[Edge, ...] = ()
    arcs: Tuple[Arc, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValidationError(f"vertex count must be non-negative, got {self.n}")
        edges = tuple(canonical(int(u), int(v)) for u, v in self.edges)
        arcs = tuple((int(u), int(v)) for u, v in self.arcs)
        seen = set()
        for kind, (u, v) in [("edge", e) for e in edges] + [("arc", a) for a in arcs]:
            if u == v:
                raise ValidationError(f"self-loop {kind} at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValidationError(f"{kind} ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
            key = canonical(u, v)
            if key in seen:
                raise ValidationError(f"duplicate connection between {key[0]} and {key[1]}")
            seen.add(key)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "arcs", arcs)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def connections(self) -> List[Edge]:
        """Canonical form of every edge and arc."""
        return list(self.edges) + [canonical(u, v) for u, v in self.arcs]

    def skeleton(self) -> nx.Graph:
        """Undirected graph on all vertices using edges and arcs alike."""
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.connections())
        return g

    def undirected(self) -> nx.Graph:
        """Undirected graph on all vertices using the edges only (arcs deleted)."""
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    def relabel(self, perm: Sequence[int]) -> "MixedGraph":
        """Copy with vertex ``v`` renamed ``perm[v]``."""
        return MixedGraph(
            self.n,
            tuple((perm[u], perm[v]) for u, v in self.edges),
            tuple((perm[u], perm[v]) for u, v in self.arcs),
        )


@dataclass(frozen=True)
class PairSet:
    """Ordered source-target pairs; duplicates count separately."""
    pairs: Tuple[Pair, ...] = ()

    def __post_init__(self) -> None:
        pairs = tuple((int(s), int(t)) for s, t in self.pairs)
        for s, t in pairs:
            if s < 0 or t < 0:
                raise ValidationError(f"pair ({s}, {t}) has a negative endpoint")
        object.__setattr__(self, "pairs", pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[Pair]:
        return iter(self.pairs)

    def __getitem__(self, i: int) -> Pair:
        return self.pairs[i]

    def validate(self, n: int) -> "PairSet":
        for s, t in self.pairs:
            if s >= n or t >= n:
                raise ValidationError(f"pair ({s}, {t}) has an endpoint outside 0..{n - 1}")
        return self

    def subset(self, indices: Iterable[int]) -> "PairSet":
        return PairSet(tuple(self.pairs[i] for i in indices))


@dataclass(frozen=True)
class Orientation:
    """A direction for every undirected edge, stored as the chosen (tail, head) arcs."""
    arcs: FrozenSet[Arc] = frozenset()

    def __post_init__(self) -> None:
        arcs = frozenset((int(u), int(v)) for u, v in self.arcs)
        for u, v in arcs:
            if (v, u) in arcs:
                raise InvalidOrientationError(f"edge {canonical(u, v)} oriented both ways")
        object.__setattr__(self, "arcs", arcs)

    @classmethod
    def along(cls, sequence: Sequence[int]) -> "Orientation":
        """Orient every step of a vertex sequence forward."""
        return cls(frozenset(steps(sequence)))

    @classmethod
    def from_bits(cls, edges: Sequence[Edge], mask: int) -> "Orientation":
        """Bit i clear orients edge i from its lower id, set from its higher id."""
        return cls(frozenset((v, u) if (mask >> i) & 1 else (u, v) for i, (u, v) in enumerate(edges)))

    @classmethod
    def default(cls, edges: Iterable[Edge]) -> "Orientation":
        return cls(frozenset(canonical(u, v) for u, v in edges))

    def domain(self) -> FrozenSet[Edge]:
        return frozenset(canonical(u, v) for u, v in self.arcs)

    def points(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def direction(self, edge: Edge) -> Arc:
        u, v = edge
        if (u, v) in self.arcs:
            return (u, v)
        if (v, u) in self.arcs:
            return (v, u)
        raise InvalidOrientationError(f"edge {edge} is not oriented")

    def merge(self, *others: "Orientation") -> "Orientation":
        arcs = set(self.arcs)
        for other in others:
            arcs |= other.arcs
        return Orientation(frozenset(arcs))

    def relabel(self, mapping: Mapping[int, int]) -> "Orientation":
        return Orientation(frozenset((mapping[u], mapping[v]) for u, v in self.arcs))

    def check_covers(self, graph: MixedGraph) -> None:
        if self.domain() != frozenset(graph.edges):
            missing = sorted(frozenset(graph.edges) - self.domain())
            extra = sorted(self.domain() - frozenset(graph.edges))
            raise InvalidOrientationError(
                f"orientation domain mismatch (missing {missing[:5]}, extra {extra[:5]})")

    def sorted_arcs(self) -> List[Arc]:
        return sorted(self.arcs, key=lambda a: (canonical(*a), a))


@dataclass(frozen=True)
class FixedPathInstance:
    """Undirected graph whose pairs each come with an explicit path from s_j to t_j."""
    graph: MixedGraph
    fixed_paths: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.graph.arcs:
            raise ValidationError("fixed-path instances are undirected")
        paths = tuple(tuple(int(v) for v in p) for p in self.fixed_paths)
        edges = frozenset(self.graph.edges)
        for j, path in enumerate(paths):
            if not path:
                raise ValidationError(f"fixed path {j} is empty")
            if len(set(path)) != len(path):
                raise ValidationError(f"fixed path {j} is not simple")
            for u, v in steps(path):
                if canonical(u, v) not in edges:
                    raise ValidationError(f"fixed path {j} uses missing edge ({u}, {v})")
        object.__setattr__(self, "fixed_paths", paths)

    @property
    def pairs(self) -> PairSet:
        return PairSet(tuple((p[0], p[-1]) for p in self.fixed_paths))


@dataclass(frozen=True)
class Solution:
    """Solver result; unpacks as ``count, orientation``."""
    count: int
    orientation: Orientation
    details: Mapping[str, Any] = field(default_factory=dict, compare=False)

    def __iter__(self):
        yield self.count
        yield self.orientation


@dataclass(frozen=True)
class TreeView:
    """Connected acyclic structure over a vertex subset.

    ``edges`` holds every connection canonically; ``arcs`` marks the ones that are already
    directed (empty for undirected trees). Rooted at the lowest vertex id.
    """
    vertices: FrozenSet[int]
    edges: Tuple[Edge, ...]
    arcs: FrozenSet[Arc] = frozenset()
    _adj: Dict[int, Tuple[int, ...]] = field(init=False, repr=False, compare=False, hash=False)
    _parent: Dict[int, Optional[int]] = field(init=False, repr=False, compare=False, hash=False)
    _depth: Dict[int, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        vertices = frozenset(int(v) for v in self.vertices)
        edges = tuple(sorted(canonical(int(u), int(v)) for u, v in self.edges))
        if not vertices:
            raise ValidationError("a tree needs at least one vertex")
        g = nx.Graph()
        g.add_nodes_from(vertices)
        g.add_edges_from(edges)
        if g.number_of_nodes() != len(vertices) or g.number_of_edges() != len(edges):
            raise ValidationError("tree edges must join distinct listed vertices")
        if not nx.is_tree(g):
            raise ValidationError("connections do not form a tree")
        for u, v in self.arcs:
            if canonical(u, v) not in g.edges:
                raise ValidationError(f"arc ({u}, {v}) is not a tree connection")
        adj = {v: tuple(sorted(g.neighbors(v))) for v in vertices}
        root = min(vertices)
        parent: Dict[int, Optional[int]] = {root: None}
        depth = {root: 0}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in depth:
                    parent[y] = x
                    depth[y] = depth[x] + 1
                    queue.append(y)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "arcs", frozenset(self.arcs))
        object.__setattr__(self, "_adj", adj)
        object.__setattr__(self, "_parent", parent)
        object.__setattr__(self, "_depth", depth)

    @classmethod
    def from_graph(cls, graph: MixedGraph, include_arcs: bool = False) -> "TreeView":
        """Tree over all vertices of ``graph``; arcs join the structure only on request."""
        edges = graph.connections() if include_arcs else list(graph.edges)
        arcs = frozenset(graph.arcs) if include_arcs else frozenset()
        return cls(frozenset(range(graph.n)), tuple(edges), arcs)

    @property
    def root(self) -> int:
        return min(self.vertices)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> Dict[int, int]:
        return {v: len(ns) for v, ns in self._adj.items()}

    def is_path(self) -> bool:
        return all(len(ns) <= 2 for ns in self._adj.values())

    def path(self, u: int, v: int) -> List[int]:
        """Unique vertex sequence from ``u`` to ``v``."""
        if u not in self._depth or v not in self._depth:
            raise ValidationError(f"vertex {u if u not in self._depth else v} is not in the tree")
        left, right = [u], [v]
        a, b = u, v
        while self._depth[a] > self._depth[b]:
            a = self._parent[a]  # type: ignore[assignment]
            left.append(a)
        while self._depth[b] > self._depth[a]:
            b = self._parent[b]  # type: ignore[assignment]
            right.append(b)
        while a != b:
            a = self._parent[a]  # type: ignore[assignment]
            b = self._parent[b]  # type: ignore[assignment]
            left.append(a)
            right.append(b)
        return left + right[-2::-1]

    def induced(self, vertices: Iterable[int]) -> "TreeView":
        keep = frozenset(vertices)
        edges = tuple(e for e in self.edges if e[0] in keep and e[1] in keep)
        arcs = frozenset(a for a in self.arcs if a[0] in keep and a[1] in keep)
        return TreeView(keep, edges, arcs)

    def undirected_edges(self) -> List[Edge]:
        directed = {canonical(u, v) for u, v in self.arcs}
        return [e for e in self.edges if e not in directed]

    def with_arcs(self, arcs: Iterable[Arc]) -> "TreeView":
        return TreeView(self.vertices, self.edges, frozenset(self.arcs) | frozenset(arcs))
