"""Tree utilities shared by the exact and approximation solvers."""
from __future__ import annotations
from typing import List, Tuple

from .model import TreeView


def tree_path(tree: TreeView, u: int, v: int) -> List[int]:
    """The unique simple path ``u..v``; ``tree_path(t, u, u) == [u]``."""
    return tree.path(u, v)


def classify_vertices(tree: TreeView) -> Tuple[List[int], List[int], List[int]]:
    """Split vertices into (leaves, degree-2, degree > 2), each sorted.

    A tree never has more branching vertices than leaves minus two.
    """
    leaves, middle, high = [], [], []
    for v in sorted(tree.vertices):
        d = tree.degree(v)
        if d <= 1:
            leaves.append(v)
        elif d == 2:
            middle.append(v)
        else:
            high.append(v)
    if len(leaves) >= 2:
        assert len(high) <= len(leaves) - 2, "branching vertices exceed leaves - 2"
    return leaves, middle, high


def walk_chain(tree: TreeView, start: int, first: int) -> List[int]:
    """Walk from ``start`` through ``first`` across degree-2 vertices.

    Returns ``[start, first, ..., end]`` where ``end`` is the first vertex whose degree
    is not two.
    """
    chain = [start, first]
    prev, cur = start, first
    while tree.degree(cur) == 2:
        a, b = tree.neighbors(cur)
        prev, cur = cur, (b if a == prev else a)
        chain.append(cur)
    return chain


def branches_at(tree: TreeView, r: int) -> Tuple[List[List[int]], List[List[int]]]:
    """Chains leaving ``r``, split into branches (ending at a leaf) and the rest.

    Both lists are ordered by the neighbour they leave ``r`` through.
    """
    to_leaves, to_branching = [], []
    for x in tree.neighbors(r):
        chain = walk_chain(tree, r, x)
        (to_leaves if tree.degree(chain[-1]) == 1 else to_branching).append(chain)
    return to_leaves, to_branching


def far_neighbors(tree: TreeView, v: int) -> List[int]:
    """Branching vertices reached from ``v`` when degree-2 vertices are ignored."""
    return [chain[-1] for chain in branches_at(tree, v)[1]]
