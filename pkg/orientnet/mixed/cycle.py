"""Exact orientation of a mixed cycle.

Without opposing arcs the cycle can be oriented one way round and every pair is
satisfied. Otherwise an optimal orientation has two split vertices ``a`` and ``b``; the
cycle falls apart into the two ``a``-to-``b`` routes, which are solved as paths and
recombined.
"""
from __future__ import annotations
import logging
from typing import List, Optional, Sequence, Tuple

import networkx as nx

from ..core.model import Arc, MixedGraph, Orientation, PairSet, Solution, canonical
from ..exceptions import PreconditionError
from .path import PathLayout, solve_layout

LOGGER = logging.getLogger("orientnet.mixed.cycle")


def cycle_order(graph: MixedGraph) -> List[int]:
    """Vertices around the cycle, from the lowest id toward its lower-id neighbour."""
    g = graph.skeleton()
    if graph.n < 3 or g.number_of_edges() != graph.n or any(d != 2 for _, d in g.degree) \
            or not nx.is_connected(g):
        raise PreconditionError("edges and arcs do not form a simple cycle")
    order = [0]
    nxt = min(g.neighbors(0))
    while nxt != 0:
        prev = order[-1]
        order.append(nxt)
        nxt = next(x for x in g.neighbors(nxt) if x != prev)
    return order


def uniform_cycle_orientation(graph: MixedGraph) -> Optional[Orientation]:
    """One-way-round orientation agreeing with every arc, if the arcs allow one."""
    order = cycle_order(graph)
    arcs = set(graph.arcs)
    for seq in (order, order[::-1]):
        ring = [(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq))]
        if all((b, a) not in arcs for a, b in ring):
            directed = {canonical(u, v) for u, v in arcs}
            return Orientation(frozenset(a for a in ring if canonical(*a) not in directed))
    return None


def _forward_count(seq: Sequence[int], pairs: Sequence[Tuple[int, int]]) -> int:
    pos = {v: i for i, v in enumerate(seq)}
    return sum(1 for s, t in pairs if s in pos and t in pos and pos[s] < pos[t])


def solve_mixed_cycle(graph: MixedGraph, pairs: PairSet) -> Solution:
    """Maximum number of satisfiable pairs on a mixed cycle, with a witness orientation."""
    pairs.validate(graph.n)
    uniform = uniform_cycle_orientation(graph)
    if uniform is not None:
        return Solution(len(pairs), uniform, {"uniform": True})

    order = cycle_order(graph)
    m = len(order)
    arcs = frozenset(graph.arcs)
    directed = {canonical(u, v) for u, v in arcs}
    loops = sum(1 for s, t in pairs if s == t)
    proper = [(s, t) for s, t in pairs if s != t]

    best: Optional[Tuple[int, Orientation]] = None
    examined = 0
    for i in range(m):
        for j in range(m):
            if i == j:
                continue
            a, b = order[i], order[j]
            routes = (
                [order[(i + k) % m] for k in range((j - i) % m + 1)],
                [order[(i - k) % m] for k in range((i - j) % m + 1)],
            )
            without_ab = [q for q in proper if q != (a, b)]
            without_both = [q for q in without_ab if q != (b, a)]
            alpha = len(proper) - len(without_ab)
            layouts = [PathLayout.from_sequence(r, arcs) for r in routes]
            plus: List[Optional[Tuple[int, List[Arc]]]] = []
            for route, layout in zip(routes, layouts):
                if any(f < 0 for f in layout.fixed):
                    plus.append(None)
                else:
                    plus.append((_forward_count(route, proper), layout.orient(0, len(route) - 1)))
            dp1 = solve_layout(layouts[0], without_ab)
            dp2 = solve_layout(layouts[1], without_ab)
            dp2_strict = solve_layout(layouts[1], without_both)
            options = []
            if plus[0] is not None and plus[1] is not None:
                options.append((plus[0][0] + plus[1][0] - alpha, plus[0][1] + plus[1][1]))
            if plus[0] is not None:
                options.append((plus[0][0] + dp2[0], plus[0][1] + dp2[1]))
            if plus[1] is not None:
                options.append((plus[1][0] + dp1[0], plus[1][1] + dp1[1]))
            options.append((dp1[0] + dp2_strict[0], dp1[1] + dp2_strict[1]))
            for value, chosen in options:
                examined += 1
                if best is None or value > best[0]:
                    oriented = frozenset(x for x in chosen if canonical(*x) not in directed)
                    best = (value, Orientation(oriented))
    assert best is not None
    LOGGER.debug("cycle of %d vertices: %d split combinations, optimum %d", m, examined, best[0] + loops)
    return Solution(best[0] + loops, best[1], {"uniform": False, "examined": examined})
