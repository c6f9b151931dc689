"""Exact orientation of undirected trees, exponential only in the number of leaves.

A branching vertex ``r`` adjacent (through degree-2 chains) to at most one other branching
vertex is picked. Each chain from ``r`` to a leaf is cut at its first split vertex ``a``:
the part ``[r..a]`` becomes a new branch oriented one way as a whole, the part ``[a..leaf]``
is a separated path solved on its own. Pairs touching new branches either get resolved,
dropped, or have their endpoint moved to ``r``; the rest of the tree (where ``r`` is now a
leaf) is solved recursively.

Interval notation used below: ``[a..leaf]`` includes ``a``, ``(a..leaf]`` excludes it.
"""
from __future__ import annotations
import logging
from dataclasses import dataclass
from itertools import product
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from ..core.model import Arc, Orientation, PairSet, Solution, TreeView, steps
from ..core.trees import branches_at, classify_vertices, far_neighbors, walk_chain
from ..exceptions import PreconditionError
from ..mixed.path import PathLayout, solve_layout

LOGGER = logging.getLogger("orientnet.mto")

Tagged = Tuple[int, int, int]   # (pair index, source, target)


def _path_order(tree: TreeView) -> List[int]:
    if len(tree.vertices) == 1:
        return [tree.root]
    start = min(v for v in tree.vertices if tree.degree(v) == 1)
    return walk_chain(tree, start, tree.neighbors(start)[0])


def _solve_on_sequence(order: Sequence[int], tagged: Sequence[Tagged]) -> Tuple[List[int], List[Arc]]:
    """Indices satisfied by an optimal orientation of the path ``order`` and its arcs."""
    if len(order) <= 1:
        return [], []
    layout = PathLayout.from_sequence(order)
    count, arcs = solve_layout(layout, [(s, t) for _, s, t in tagged])
    pos = layout.position()
    chosen = set(arcs)
    forward = {i for i, step in enumerate(steps(order)) if step in chosen}
    satisfied = []
    for j, s, t in tagged:
        lo, hi = sorted((pos[s], pos[t]))
        wanted = pos[s] < pos[t]
        if all((i in forward) == wanted for i in range(lo, hi)):
            satisfied.append(j)
    assert len(satisfied) == count
    return satisfied, arcs


def solve_undirected_path(path: TreeView, pairs: PairSet) -> Tuple[int, Orientation]:
    """Optimal orientation of an undirected path via the mixed path DP with no arcs."""
    if path.arcs or not path.is_path():
        raise PreconditionError("expected an undirected path")
    order = _path_order(path)
    tagged = [(j, s, t) for j, (s, t) in enumerate(pairs) if s != t]
    satisfied, arcs = _solve_on_sequence(order, tagged)
    loops = sum(1 for s, t in pairs if s == t)
    return len(satisfied) + loops, Orientation(frozenset(arcs))


@dataclass(frozen=True)
class SplitChoice:
    """First split vertex chosen on every branch leaving ``root``.

    ``branches[b]`` is the chain ``[root, x1, ..., leaf]`` and ``splits[b]`` the position
    of the split vertex in it (the leaf's position when nothing splits).
    """
    root: int
    branches: Tuple[Tuple[int, ...], ...]
    splits: Tuple[int, ...]

    def __post_init__(self) -> None:
        for chain, at in zip(self.branches, self.splits):
            assert 1 <= at < len(chain), "split vertex must lie on its branch"

    def new_branch(self, b: int) -> Tuple[int, ...]:
        return self.branches[b][:self.splits[b] + 1]

    def separated(self, b: int) -> Tuple[int, ...]:
        return self.branches[b][self.splits[b]:]

    def locate(self) -> Dict[int, Tuple[int, int]]:
        """Branch and position of every branch vertex other than the root."""
        return {v: (b, i) for b, chain in enumerate(self.branches) for i, v in enumerate(chain) if i}


@dataclass(frozen=True)
class PartialSolution:
    """Oriented part of the tree, pairs it satisfies, and what is left to solve."""
    arcs: FrozenSet[Arc]
    satisfied: FrozenSet[int]
    residual: TreeView
    pending: Tuple[Tagged, ...]


def apply_split(tree: TreeView, choice: SplitChoice, pending: Sequence[Tagged]) -> PartialSolution:
    """Solve the separated paths and drop pairs that would have to cross a split vertex.

    A pair with both endpoints in some ``[a..leaf]`` is settled by that path's solve; a pair
    with one endpoint in ``(a..leaf]`` and the other outside ``[a..leaf]`` is unsatisfiable.
    """
    where = choice.locate()
    arcs: List[Arc] = []
    satisfied: List[int] = []
    inside: List[List[Tagged]] = [[] for _ in choice.branches]
    rest: List[Tagged] = []
    for j, s, t in pending:
        ls, lt = where.get(s), where.get(t)
        if ls and lt and ls[0] == lt[0] and min(ls[1], lt[1]) >= choice.splits[ls[0]]:
            inside[ls[0]].append((j, s, t))
        elif (ls and ls[1] > choice.splits[ls[0]]) or (lt and lt[1] > choice.splits[lt[0]]):
            continue
        else:
            rest.append((j, s, t))
    for b in range(len(choice.branches)):
        done, oriented = _solve_on_sequence(choice.separated(b), inside[b])
        satisfied += done
        arcs += oriented
    keep = tree.vertices - where.keys()
    return PartialSolution(frozenset(arcs), frozenset(satisfied), tree.induced(keep), tuple(rest))


def update_pairs(partial: PartialSolution, choice: SplitChoice, toward_root: Sequence[bool]) -> PartialSolution:
    """Orient every new branch and rewrite the pending pairs accordingly.

    A pair inside one new branch is satisfied or lost right away. An endpoint on a new
    branch moves to the root when the branch direction lets the pair pass through it, and
    the pair is lost otherwise. Pairs not touching new branches are kept as they are.
    """
    r = choice.root
    where = choice.locate()
    arcs = set(partial.arcs)
    for b, toward in enumerate(toward_root):
        seq = choice.new_branch(b)
        arcs.update(steps(seq[::-1] if toward else seq))
    satisfied = set(partial.satisfied)
    residual: List[Tagged] = []
    for j, s, t in partial.pending:
        ls, lt = where.get(s), where.get(t)
        if ls and lt and ls[0] == lt[0]:
            away = not toward_root[ls[0]]
            if (ls[1] < lt[1]) == away:
                satisfied.add(j)
            continue
        if ls:
            if not toward_root[ls[0]]:
                continue
            s = r
        if lt:
            if toward_root[lt[0]]:
                continue
            t = r
        if s == t:
            satisfied.add(j)
        else:
            residual.append((j, s, t))
    return PartialSolution(frozenset(arcs), frozenset(satisfied), partial.residual, tuple(residual))


def _pick_root(tree: TreeView, high: Sequence[int]) -> int:
    if len(high) == 1:
        return high[0]
    return min(v for v in high if len(far_neighbors(tree, v)) == 1)


class _LeafSolver:
    def __init__(self) -> None:
        self.memo: Dict[Tuple[FrozenSet[int], Tuple[Tagged, ...]], Tuple[FrozenSet[int], FrozenSet[Arc]]] = {}
        self.stats = {"split_choices": 0, "orientation_choices": 0, "calls": 0}

    def solve(self, tree: TreeView, pending: Tuple[Tagged, ...]) -> Tuple[FrozenSet[int], FrozenSet[Arc]]:
        key = (tree.vertices, pending)
        if key not in self.memo:
            self.memo[key] = self._solve(tree, pending)
        return self.memo[key]

    def _solve(self, tree: TreeView, pending: Tuple[Tagged, ...]) -> Tuple[FrozenSet[int], FrozenSet[Arc]]:
        self.stats["calls"] += 1
        _, _, high = classify_vertices(tree)
        if not high:
            done, arcs = _solve_on_sequence(_path_order(tree), pending)
            return frozenset(done), frozenset(arcs)
        r = _pick_root(tree, high)
        chains = tuple(tuple(c) for c in branches_at(tree, r)[0])
        best: Optional[Tuple[FrozenSet[int], FrozenSet[Arc]]] = None
        for splits in product(*(range(1, len(c)) for c in chains)):
            self.stats["split_choices"] += 1
            choice = SplitChoice(r, chains, splits)
            partial = apply_split(tree, choice, pending)
            for toward in product((False, True), repeat=len(chains)):
                self.stats["orientation_choices"] += 1
                step = update_pairs(partial, choice, toward)
                done, arcs = self.solve(step.residual, tuple(sorted(step.pending)))
                total = step.satisfied | done
                if best is None or len(total) > len(best[0]):
                    best = (total, step.arcs | arcs)
        assert best is not None
        return best


def mto_leaves(tree: TreeView, pairs: PairSet) -> Solution:
    """Maximum number of pairs satisfiable by orienting an undirected tree."""
    if tree.arcs:
        raise PreconditionError("expected an undirected tree")
    pairs.validate(max(tree.vertices) + 1)
    loops = frozenset(j for j, (s, t) in enumerate(pairs) if s == t)
    pending = tuple(sorted((j, s, t) for j, (s, t) in enumerate(pairs) if s != t))
    solver = _LeafSolver()
    done, arcs = solver.solve(tree, pending)
    satisfied = done | loops
    leaves = len(classify_vertices(tree)[0])
    LOGGER.debug("mto: %d leaves, %d pairs, optimum %d, stats %s", leaves, len(pairs), len(satisfied), solver.stats)
    return Solution(len(satisfied), Orientation(arcs), {"satisfied": satisfied, "leaves": leaves, **solver.stats})
