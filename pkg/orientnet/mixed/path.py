"""Exact orientation of a mixed path by interval dynamic programming.

Positions 0..m-1 run along the path. ``R[v, w]`` (v <= w) is the best count over pairs
with both endpoints in ``[v, m-1]`` when ``[v, w]`` is oriented rightwards, ``L[v, w]``
the same with ``[v, w]`` oriented leftwards. With ``u = w + 1``:

    R[v, w] = max(A_R[v, w] + L[w, u], R[v, u])      # split at w, or extend
    L[v, w] = max(A_L[v, w] + R[w, u], L[v, u])
    R[v, m-1] = A_R[v, m-1],  L[v, m-1] = A_L[v, m-1]

and the optimum is ``R[0, 0]``. A segment holding an arc against its direction is
infeasible; such cells hold 0 and are never chosen.
"""
from __future__ import annotations
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

import numpy as np

from ..core.model import Arc, MixedGraph, Orientation, PairSet, Solution, canonical
from ..exceptions import PreconditionError

LOGGER = logging.getLogger("orientnet.mixed.path")

RIGHT, LEFT = 0, 1


@dataclass(frozen=True)
class PathLayout:
    """Vertex order along a path and the fixed direction of each step, if any.

    ``fixed[i]`` is +1 for an arc ``order[i] -> order[i+1]``, -1 for the reverse arc and
    0 for an undirected edge.
    """
    order: Tuple[int, ...]
    fixed: Tuple[int, ...]

    @classmethod
    def from_sequence(cls, order: Sequence[int], arcs: Iterable[Arc] = ()) -> "PathLayout":
        arcs = frozenset(arcs)
        fixed = []
        for a, b in zip(order, order[1:]):
            fixed.append(1 if (a, b) in arcs else -1 if (b, a) in arcs else 0)
        return cls(tuple(order), tuple(fixed))

    @classmethod
    def from_graph(cls, graph: MixedGraph) -> "PathLayout":
        """Lay out a graph whose edges and arcs form one simple path over all vertices."""
        g = graph.skeleton()
        if graph.n == 0:
            raise PreconditionError("empty graph is not a path")
        if g.number_of_edges() != graph.n - 1 or any(d > 2 for _, d in g.degree):
            raise PreconditionError("edges and arcs do not form a simple path")
        if graph.n == 1:
            return cls((0,), ())
        ends = sorted(v for v, d in g.degree if d == 1)
        if len(ends) != 2:
            raise PreconditionError("edges and arcs do not form a simple path")
        order = [ends[0]]
        prev = None
        while len(order) < graph.n:
            cur = order[-1]
            nxt = [x for x in g.neighbors(cur) if x != prev]
            if not nxt:
                raise PreconditionError("edges and arcs do not form a simple path")
            prev = cur
            order.append(nxt[0])
        return cls.from_sequence(order, graph.arcs)

    def __len__(self) -> int:
        return len(self.order)

    def position(self) -> Dict[int, int]:
        return {v: i for i, v in enumerate(self.order)}

    def orient(self, v: int, w: int) -> List[Arc]:
        """Arcs orienting positions ``v..w`` from ``v`` toward ``w`` (either order)."""
        lo, hi = min(v, w), max(v, w)
        seq = self.order[lo:hi + 1]
        if v > w:
            seq = seq[::-1]
        return [(seq[i], seq[i + 1]) for i in range(len(seq) - 1)]


def _pair_positions(layout: PathLayout, pairs: Sequence[Tuple[int, int]]) -> List[Tuple[int, int, int]]:
    """(index, source position, target position) of the pairs lying on the path."""
    pos = layout.position()
    return [(i, pos[s], pos[t]) for i, (s, t) in enumerate(pairs) if s in pos and t in pos]


class PathTables:
    """Filled A and S tables with the traceback needed to rebuild a witness."""

    def __init__(self, layout: PathLayout, pairs: Sequence[Tuple[int, int]]) -> None:
        self.layout = layout
        m = len(layout)
        self.m = m
        placed = _pair_positions(layout, pairs)
        self.loops = [i for i, s, t in placed if s == t]
        forward = np.zeros((m, m), dtype=np.int64)
        backward = np.zeros((m, m), dtype=np.int64)
        for _, s, t in placed:
            if s < t:
                forward[s, t] += 1
            elif s > t:
                backward[t, s] += 1
        # A_R[v, w] = #pairs with v <= s < t <= w: suffix sums over rows, prefix over columns
        self.a_right = np.cumsum(np.cumsum(forward[::-1, :], axis=0)[::-1, :], axis=1)
        self.a_left = np.cumsum(np.cumsum(backward[::-1, :], axis=0)[::-1, :], axis=1)
        fixed = np.array(layout.fixed, dtype=np.int64)
        against_right = np.concatenate(([0], np.cumsum(fixed < 0)))
        against_left = np.concatenate(([0], np.cumsum(fixed > 0)))
        idx = np.arange(m)
        # segment [v, w] covers steps v..w-1
        self.ok_right = (against_right[idx][None, :] - against_right[idx][:, None]) == 0
        self.ok_left = (against_left[idx][None, :] - against_left[idx][:, None]) == 0
        upper = idx[None, :] >= idx[:, None]
        self.ok_right &= upper
        self.ok_left &= upper
        self.a_right = np.where(self.ok_right, self.a_right, 0)
        self.a_left = np.where(self.ok_left, self.a_left, 0)
        self.right = np.zeros((m, m), dtype=np.int64)
        self.left = np.zeros((m, m), dtype=np.int64)
        self.split_right = np.zeros((m, m), dtype=bool)
        self.split_left = np.zeros((m, m), dtype=bool)
        self._fill()

    def _fill(self) -> None:
        m = self.m
        R, L = self.right, self.left
        okR, okL = self.ok_right, self.ok_left
        for v in range(m - 1, -1, -1):
            R[v, m - 1] = self.a_right[v, m - 1]
            L[v, m - 1] = self.a_left[v, m - 1]
            for w in range(m - 2, v - 1, -1):
                u = w + 1
                if okR[v, w]:
                    extend = R[v, u] if okR[v, u] else None
                    split = self.a_right[v, w] + L[w, u] if okL[w, u] else None
                    if split is not None and (extend is None or split > extend):
                        R[v, w], self.split_right[v, w] = split, True
                    else:
                        R[v, w] = extend
                if okL[v, w]:
                    extend = L[v, u] if okL[v, u] else None
                    split = self.a_left[v, w] + R[w, u] if okR[w, u] else None
                    if split is not None and (extend is None or split > extend):
                        L[v, w], self.split_left[v, w] = split, True
                    else:
                        L[v, w] = extend

    @property
    def optimum(self) -> int:
        if self.m == 0:
            return len(self.loops)
        return int(self.right[0, 0]) + len(self.loops)

    def traceback(self) -> List[Arc]:
        """Arcs of an optimal orientation (undirected steps only are meaningful)."""
        arcs: List[Arc] = []
        if self.m <= 1:
            return arcs
        direction, v, w = RIGHT, 0, 0
        while True:
            if w == self.m - 1:
                arcs += self.layout.orient(v, w) if direction == RIGHT else self.layout.orient(w, v)
                return arcs
            split = (self.split_right if direction == RIGHT else self.split_left)[v, w]
            if split:
                arcs += self.layout.orient(v, w) if direction == RIGHT else self.layout.orient(w, v)
                direction, v, w = 1 - direction, w, w + 1
            else:
                w += 1


def count_forward(layout: PathLayout, v: int, w: int, pairs: PairSet) -> int:
    """Pairs with both endpoints in positions ``[v, w]`` satisfied orienting ``v`` toward ``w``.

    Zero when an arc inside the interval points the other way; ``count_forward(v, v) == 0``.
    """
    if v == w:
        return 0
    lo, hi = min(v, w), max(v, w)
    step = 1 if w > v else -1
    if any(f == -step for f in layout.fixed[lo:hi]):
        return 0
    count = 0
    for _, s, t in _pair_positions(layout, pairs.pairs):
        if lo <= s <= hi and lo <= t <= hi and (t - s) * step > 0:
            count += 1
    return count


def solve_layout(layout: PathLayout, pairs: Sequence[Tuple[int, int]]) -> Tuple[int, List[Arc]]:
    """Optimal count over pairs lying on the path, and arcs for its undirected steps."""
    tables = PathTables(layout, pairs)
    directed = {canonical(layout.order[i], layout.order[i + 1])
                for i, f in enumerate(layout.fixed) if f != 0}
    return tables.optimum, [a for a in tables.traceback() if canonical(*a) not in directed]


def solve_mixed_path(graph: MixedGraph, pairs: PairSet) -> Solution:
    """Maximum number of satisfiable pairs on a mixed path, with a witness orientation."""
    pairs.validate(graph.n)
    layout = PathLayout.from_graph(graph)
    tables = PathTables(layout, pairs.pairs)
    directed = {canonical(u, v) for u, v in graph.arcs}
    arcs = frozenset(a for a in tables.traceback() if canonical(*a) not in directed)
    LOGGER.debug("path of %d vertices, %d pairs: optimum %d", len(layout), len(pairs), tables.optimum)
    return Solution(tables.optimum, Orientation(arcs), {"tables": tables})
