from __future__ import annotations
from abc import ABC, abstractmethod
from typing import Any

from ..core.model import MixedGraph, PairSet, Solution


class Solver(ABC):
    """Abstract interface for orientation solvers."""
    name: str
    exact: bool = True

    def applies(self, graph: MixedGraph) -> bool:
        """Whether ``graph`` meets this solver's structural precondition.

        Override when the check is cheaper than attempting a solve; the default tries
        nothing and says yes.
        """
        return True

    @abstractmethod
    def solve(self, graph: MixedGraph, pairs: PairSet, **options: Any) -> Solution:
        """Orient the undirected edges of ``graph``; return count and witness."""
