from . import core, mixed, undirected, solvers  # re-export packages
__all__ = ["core", "mixed", "undirected", "solvers"]
