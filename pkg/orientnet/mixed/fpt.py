"""Mixed graphs built from undirected trees joined by arcs.

Deleting the arcs leaves undirected components that must be trees. A pair spanning two
components is satisfied through a route: a sequence of arcs, each hop inside a component
being the unique tree path from the vertex it entered at to the tail of the next arc. The
solver enumerates one route (or none) per pair, keeps assignments whose hops can be
oriented together, and solves the pairs local to each component on top of the directions
the assignment forces.
"""
from __future__ import annotations
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple, Union

import networkx as nx

from ..core.model import Arc, Edge, MixedGraph, Orientation, Pair, PairSet, Solution, TreeView, canonical, steps
from ..exceptions import PreconditionError
from .tree import solve_tree_pairs

LOGGER = logging.getLogger("orientnet.mixed.fpt")


@dataclass(frozen=True)
class Component:
    index: int
    tree: TreeView
    inputs: Tuple[int, ...]    # heads of arcs landing in the component
    outputs: Tuple[int, ...]   # tails of arcs leaving the component

    @property
    def boundary(self) -> Tuple[int, ...]:
        return tuple(sorted(set(self.inputs) | set(self.outputs)))


@dataclass(frozen=True)
class ComponentDecomposition:
    graph: MixedGraph
    components: Tuple[Component, ...]
    component_of: Tuple[int, ...]
    pairs: PairSet
    local_pairs: Tuple[int, ...]      # both endpoints in one component
    spanning_pairs: Tuple[int, ...]   # endpoints in different components


@dataclass(frozen=True)
class Route:
    """Arc sequence of a route and the (component, entry, exit) hop it induces per visit."""
    arcs: Tuple[Arc, ...]
    hops: Tuple[Tuple[int, int, int], ...]


def decompose_components(graph: MixedGraph, pairs: PairSet = PairSet()) -> ComponentDecomposition:
    """Split ``graph`` into its arc-free components; each one must be a tree."""
    pairs.validate(graph.n)
    g = graph.undirected()
    comps = sorted((sorted(c) for c in nx.connected_components(g)), key=lambda c: c[0])
    component_of = [0] * graph.n
    for i, comp in enumerate(comps):
        for v in comp:
            component_of[v] = i
    built = []
    for i, comp in enumerate(comps):
        sub = g.subgraph(comp)
        if not nx.is_tree(sub):
            raise PreconditionError(
                f"component containing vertex {comp[0]} has an undirected cycle")
        tree = TreeView(frozenset(comp), tuple(sub.edges))
        inputs = tuple(sorted({h for _, h in graph.arcs if component_of[h] == i}))
        outputs = tuple(sorted({t for t, _ in graph.arcs if component_of[t] == i}))
        built.append(Component(i, tree, inputs, outputs))
    local = tuple(j for j, (s, t) in enumerate(pairs) if component_of[s] == component_of[t])
    spanning = tuple(j for j, (s, t) in enumerate(pairs) if component_of[s] != component_of[t])
    return ComponentDecomposition(graph, tuple(built), tuple(component_of), pairs, local, spanning)


def enumerate_routes(decomp: ComponentDecomposition, pair: Pair) -> List[Route]:
    """All arc sequences without a repeated arc leading from ``s``'s component to ``t``.

    For a pair inside one component the first route is the empty one (the direct tree
    path). Components may be revisited.
    """
    s, t = pair
    comp_of = decomp.component_of
    arcs = decomp.graph.arcs
    target = comp_of[t]
    found: List[Route] = []

    def explore(entry: int, used: Tuple[int, ...], hops: Tuple[Tuple[int, int, int], ...]) -> None:
        here = comp_of[entry]
        if here == target:
            found.append(Route(tuple(arcs[i] for i in used), hops + ((here, entry, t),)))
        for i, (tail, head) in enumerate(arcs):
            if i in used or comp_of[tail] != here:
                continue
            explore(head, used + (i,), hops + ((here, entry, tail),))

    explore(s, (), ())
    return found


def _hop_demands(decomp: ComponentDecomposition, route: Route) -> Optional[Dict[Edge, Arc]]:
    """Edge directions a route needs; None if the route contradicts itself."""
    demands: Dict[Edge, Arc] = {}
    for comp, entry, exit_ in route.hops:
        for a, b in steps(decomp.components[comp].tree.path(entry, exit_)):
            key = canonical(a, b)
            if demands.setdefault(key, (a, b)) != (a, b):
                return None
    return demands


LOCAL = "local"
Choice = Union[None, str, int]


def solve_mixed_fpt(graph: MixedGraph, pairs: PairSet) -> Solution:
    """Exact solver parameterized by the number of pairs and arcs."""
    decomp = decompose_components(graph, pairs)
    p = len(pairs)
    local = set(decomp.local_pairs)

    routes: List[List[Route]] = []
    demands: List[List[Dict[Edge, Arc]]] = []
    for j, pair in enumerate(pairs):
        usable, needs = [], []
        for route in enumerate_routes(decomp, pair):
            if j in local and not route.arcs:
                continue  # the direct path is left to the component solve
            d = _hop_demands(decomp, route)
            if d is not None:
                usable.append(route)
                needs.append(d)
        routes.append(usable)
        demands.append(needs)

    memo: Dict[Tuple[int, FrozenSet[Arc], Tuple[int, ...]], Tuple[int, Orientation]] = {}

    def component_solve(comp: Component, forced: FrozenSet[Arc], members: Tuple[int, ...]) -> Tuple[int, Orientation]:
        key = (comp.index, forced, members)
        if key not in memo:
            tree = comp.tree.with_arcs(forced)
            count, _, orient = solve_tree_pairs(tree, [pairs[j] for j in members])
            memo[key] = (count, orient.merge(Orientation(forced)))
        return memo[key]

    def evaluate(choice: List[Choice], forced: Dict[Edge, Arc]) -> Tuple[int, Orientation]:
        total = sum(1 for c in choice if isinstance(c, int))
        orientation = Orientation()
        for comp in decomp.components:
            members = tuple(j for j in decomp.local_pairs
                            if choice[j] == LOCAL and decomp.component_of[pairs[j][0]] == comp.index)
            comp_forced = frozenset(arc for e, arc in forced.items()
                                    if decomp.component_of[e[0]] == comp.index)
            count, orient = component_solve(comp, comp_forced, members)
            total += count
            orientation = orientation.merge(orient)
        return total, orientation

    best: List[Optional[Tuple[int, Orientation]]] = [None]
    stats = {"assignments": 0, "consistent": 0}

    def assign(j: int, choice: List[Choice], forced: Dict[Edge, Arc]) -> None:
        if j == p:
            stats["consistent"] += 1
            value = evaluate(choice, forced)
            if best[0] is None or value[0] > best[0][0]:
                best[0] = value
            return
        first: Choice = LOCAL if j in local else None
        assign(j + 1, choice + [first], forced)
        for r, need in enumerate(demands[j]):
            stats["assignments"] += 1
            merged = dict(forced)
            if any(merged.setdefault(e, arc) != arc for e, arc in need.items()):
                continue
            assign(j + 1, choice + [r], merged)

    assign(0, [], {})
    assert best[0] is not None
    count, orientation = best[0]
    LOGGER.debug("fpt: %d components, %d arcs, %d consistent assignments, optimum %d",
                 len(decomp.components), len(graph.arcs), stats["consistent"], count)
    return Solution(count, orientation, {
        "components": len(decomp.components),
        "local_pairs": len(decomp.local_pairs),
        "spanning_pairs": len(decomp.spanning_pairs),
        **stats,
    })
