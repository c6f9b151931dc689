"""Mixed trees: every pair has one candidate path, so feasibility is a per-edge question."""
from __future__ import annotations
import logging
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from ..core.model import Arc, Edge, MixedGraph, Orientation, PairSet, Solution, TreeView, canonical, steps
from ..exceptions import PreconditionError, ValidationError

LOGGER = logging.getLogger("orientnet.mixed.tree")


def required_steps(tree: TreeView, s: int, t: int) -> Optional[Dict[Edge, Arc]]:
    """Directions the pair forces on undirected connections, or None if an arc blocks it."""
    forced: Dict[Edge, Arc] = {}
    for a, b in steps(tree.path(s, t)):
        if (b, a) in tree.arcs:
            return None
        if (a, b) not in tree.arcs:
            forced[canonical(a, b)] = (a, b)
    return forced


def solve_tree_pairs(tree: TreeView, pairs: Sequence[Tuple[int, int]]) -> Tuple[int, List[int], Orientation]:
    """Largest set of pairs satisfiable together on a (mixed) tree.

    Returns the count, the chosen pair indices and an orientation of the undirected
    connections; edges no chosen pair constrains go from lower to higher id.
    """
    demands: List[Optional[Dict[Edge, Arc]]] = [required_steps(tree, s, t) for s, t in pairs]
    candidates = [i for i, d in enumerate(demands) if d is not None]

    def compatible(i: int, j: int) -> bool:
        di, dj = demands[i], demands[j]
        small, large = (di, dj) if len(di) <= len(dj) else (dj, di)  # type: ignore[arg-type]
        return all(large.get(e, arc) == arc for e, arc in small.items())  # type: ignore[union-attr]

    clash = {(i, j) for i, j in combinations(candidates, 2) if not compatible(i, j)}
    chosen: Tuple[int, ...] = ()
    for size in range(len(candidates), 0, -1):
        found = next((c for c in combinations(candidates, size)
                      if all(pair not in clash for pair in combinations(c, 2))), None)
        if found is not None:
            chosen = found
            break
    directions: Dict[Edge, Arc] = {}
    for i in chosen:
        directions.update(demands[i])  # type: ignore[arg-type]
    for e in tree.undirected_edges():
        directions.setdefault(e, e)
    return len(chosen), list(chosen), Orientation(frozenset(directions.values()))


def solve_mixed_tree(graph: MixedGraph, pairs: PairSet) -> Solution:
    """Exact solver for mixed graphs whose edges and arcs form a tree (2^p subsets)."""
    pairs.validate(graph.n)
    try:
        tree = TreeView.from_graph(graph, include_arcs=True)
    except ValidationError as exc:
        raise PreconditionError(f"edges and arcs do not form a tree: {exc}")
    count, chosen, orientation = solve_tree_pairs(tree, pairs.pairs)
    LOGGER.debug("mixed tree: %d of %d pairs satisfiable", count, len(pairs))
    return Solution(count, orientation, {"chosen": tuple(chosen)})
