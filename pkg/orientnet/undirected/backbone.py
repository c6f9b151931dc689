"""Backbone decomposition of a tree and the unit-wise orientation built on it.

The tree's edges are split into units: ``b`` edge-disjoint backbones covering every
branching vertex, plus the branches hanging off them. Each unit is oriented as a whole, so
a pair is satisfied exactly when every unit its path touches points its way. A path meets
at most ``b`` backbones and two branches, so a uniformly random unit orientation satisfies
each pair with probability at least ``1 / 2^(b+2)``; conditional expectations make that
deterministic.
"""
from __future__ import annotations
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from ..core.model import Arc, Edge, Orientation, PairSet, Solution, TreeView, canonical, steps
from ..core.trees import branches_at, classify_vertices
from ..exceptions import PreconditionError
from .mto import solve_undirected_path

LOGGER = logging.getLogger("orientnet.backbone")

BACKBONE, BRANCH = "backbone", "branch"


def _from_lower_end(seq: Sequence[int]) -> Tuple[int, ...]:
    seq = tuple(seq)
    return seq if seq[0] <= seq[-1] else seq[::-1]


@dataclass(frozen=True)
class BackboneTree:
    """Branching vertices of a tree, joined when their chains meet directly.

    ``paths`` maps each edge of the contracted tree to the tree path it stands for, read
    from the lower-id endpoint.
    """
    vertices: FrozenSet[int]
    paths: Dict[Edge, Tuple[int, ...]]

    def as_tree(self) -> Optional[TreeView]:
        if not self.vertices:
            return None
        return TreeView(self.vertices, tuple(self.paths))

    def expand(self, sequence: Sequence[int]) -> Tuple[int, ...]:
        """Tree path behind a vertex sequence of the contracted tree."""
        out = [sequence[0]]
        for a, b in steps(sequence):
            chunk = self.paths[canonical(a, b)]
            out += list(chunk[1:] if chunk[0] == a else chunk[::-1][1:])
        return tuple(out)


def build_backbone_tree(tree: TreeView) -> BackboneTree:
    """Contract the degree-2 chains between branching vertices; drop the leaf branches."""
    if tree.arcs:
        raise PreconditionError("expected an undirected tree")
    _, _, high = classify_vertices(tree)
    paths: Dict[Edge, Tuple[int, ...]] = {}
    for h in high:
        for chain in branches_at(tree, h)[1]:
            paths.setdefault(canonical(h, chain[-1]), _from_lower_end(chain))
    return BackboneTree(frozenset(high), paths)


def decompose_min_paths(tree: TreeView) -> List[Tuple[int, ...]]:
    """Split the edges of a tree into (odd-degree vertices) / 2 edge-disjoint paths.

    The lowest-id leaf of the remaining forest is joined to the lowest-id other leaf of its
    component and the path between them is removed, until no edge is left.
    """
    g = nx.Graph()
    g.add_nodes_from(tree.vertices)
    g.add_edges_from(tree.edges)
    odd = sum(1 for _, d in g.degree if d % 2)
    paths: List[Tuple[int, ...]] = []
    while g.number_of_edges():
        start = min(v for v, d in g.degree if d == 1)
        comp = nx.node_connected_component(g, start)
        end = min(v for v in comp if v != start and g.degree(v) == 1)
        path = nx.shortest_path(g, start, end)
        g.remove_edges_from(steps(path))
        paths.append(_from_lower_end(path))
    assert len(paths) == odd // 2
    return paths


@dataclass(frozen=True)
class Unit:
    """A backbone or branch, read from its lower-id endpoint; 'forward' follows that order."""
    kind: str
    vertices: Tuple[int, ...]

    def edges(self) -> List[Edge]:
        return [canonical(a, b) for a, b in steps(self.vertices)]

    def arcs(self, forward: bool) -> List[Arc]:
        return steps(self.vertices if forward else self.vertices[::-1])


@dataclass(frozen=True)
class BackboneDecomposition:
    tree: TreeView
    units: Tuple[Unit, ...]
    unit_of: Dict[Edge, int]

    @property
    def backbones(self) -> List[Tuple[int, ...]]:
        return [u.vertices for u in self.units if u.kind == BACKBONE]

    @property
    def branches(self) -> List[Tuple[int, ...]]:
        return [u.vertices for u in self.units if u.kind == BRANCH]

    @property
    def b(self) -> int:
        return len(self.backbones)

    def requirements(self, s: int, t: int) -> Dict[int, bool]:
        """Direction (forward or not) every unit on the ``s``-to-``t`` path must take."""
        needs: Dict[int, bool] = {}
        for a, c in steps(self.tree.path(s, t)):
            index = self.unit_of[canonical(a, c)]
            seq = self.units[index].vertices
            forward = seq.index(a) < seq.index(c)
            assert needs.setdefault(index, forward) == forward, "path re-enters a unit"
        touched = sum(1 for i in needs if self.units[i].kind == BRANCH)
        assert touched <= 2, f"pair ({s}, {t}) touches {touched} branch units"
        return needs

    def orientation(self, forward: Sequence[bool]) -> Orientation:
        arcs: List[Arc] = []
        for unit, f in zip(self.units, forward):
            arcs += unit.arcs(f)
        return Orientation(frozenset(arcs))


def build_decomposition(tree: TreeView) -> BackboneDecomposition:
    """Backbones lifted from a minimum path decomposition of the backbone tree, plus branches."""
    if tree.arcs:
        raise PreconditionError("expected an undirected tree")
    _, _, high = classify_vertices(tree)
    units: List[Unit] = []
    if not high:
        if len(tree.vertices) > 1:
            start = min(v for v in tree.vertices if tree.degree(v) == 1)
            order = tree.path(start, max(v for v in tree.vertices if tree.degree(v) == 1 and v != start))
            units.append(Unit(BRANCH, _from_lower_end(order)))
    else:
        btree = build_backbone_tree(tree)
        contracted = btree.as_tree()
        assert contracted is not None
        for seq in decompose_min_paths(contracted):
            units.append(Unit(BACKBONE, _from_lower_end(btree.expand(seq))))
        for h in high:
            for chain in branches_at(tree, h)[0]:
                units.append(Unit(BRANCH, _from_lower_end(chain)))
    unit_of: Dict[Edge, int] = {}
    for i, unit in enumerate(units):
        for e in unit.edges():
            assert e not in unit_of, f"edge {e} lies in two units"
            unit_of[e] = i
    assert len(unit_of) == len(tree.edges)
    decomp = BackboneDecomposition(tree, tuple(units), unit_of)
    LOGGER.debug("backbone decomposition: b=%d, %d branches", decomp.b, len(decomp.branches))
    return decomp


def orient_random(decomp: BackboneDecomposition, seed: int) -> Orientation:
    """Every unit goes forward or backward with probability 1/2, driven by ``seed``."""
    rng = np.random.Generator(np.random.Philox(seed))
    coins = rng.integers(0, 2, size=len(decomp.units))
    return decomp.orientation([c == 0 for c in coins])


def expected_satisfied(decomp: BackboneDecomposition, pairs: PairSet) -> Fraction:
    """Expected number of satisfied pairs under the random unit orientation."""
    total = sum((Fraction(1, 2 ** len(decomp.requirements(s, t))) for s, t in pairs), Fraction(0))
    assert total >= Fraction(len(pairs), 2 ** (decomp.b + 2))
    return total


def _count(decomp: BackboneDecomposition, needs: Sequence[Dict[int, bool]], forward: Sequence[bool]) -> int:
    return sum(1 for need in needs if all(forward[i] == f for i, f in need.items()))


def orient_derandomized(decomp: BackboneDecomposition, pairs: PairSet) -> Tuple[int, Orientation]:
    """Fix unit directions one by one, keeping the larger conditional expectation.

    Expectations are scaled by ``2^units`` so they stay integers; ties go forward.
    """
    needs = [decomp.requirements(s, t) for s, t in pairs]
    k = len(decomp.units)
    fixed: Dict[int, bool] = {}

    def scaled() -> int:
        total = 0
        for need in needs:
            if any(i in fixed and fixed[i] != f for i, f in need.items()):
                continue
            total += 1 << (k - sum(1 for i in need if i not in fixed))
        return total

    start = scaled()
    for i in range(k):
        fixed[i] = True
        ahead = scaled()
        fixed[i] = False
        back = scaled()
        fixed[i] = ahead >= back
        assert max(ahead, back) >= start
        start = max(ahead, back)
    forward = [fixed[i] for i in range(k)]
    count = _count(decomp, needs, forward)
    assert count << k >= scaled()
    return count, decomp.orientation(forward)


def solve_backbone(tree: TreeView, pairs: PairSet, seed: Optional[int] = None) -> Solution:
    """Approximate solve; paths are solved exactly, other trees unit-wise."""
    pairs.validate(max(tree.vertices) + 1)
    if tree.is_path():
        count, orientation = solve_undirected_path(tree, pairs)
        return Solution(count, orientation, {"b": 0, "mode": "exact-path"})
    decomp = build_decomposition(tree)
    expectation = expected_satisfied(decomp, pairs)
    if seed is None:
        count, orientation = orient_derandomized(decomp, pairs)
        mode = "derandomized"
    else:
        orientation = orient_random(decomp, seed)
        forward = [orientation.points(u.vertices[0], u.vertices[1]) for u in decomp.units]
        count = _count(decomp, [decomp.requirements(s, t) for s, t in pairs], forward)
        mode = "random"
    floor = Fraction(len(pairs), 2 ** (decomp.b + 2))
    if count < floor:
        LOGGER.warning("backbone count %d below p/2^(b+2) = %s (b=%d, mode %s)", count, floor, decomp.b, mode)
    return Solution(count, orientation, {
        "b": decomp.b, "units": len(decomp.units), "expected": expectation, "mode": mode})
