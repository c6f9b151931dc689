from .registry import available_solvers, load_solver, register
from . import builtin  # ensure importable
__all__ = ["available_solvers", "load_solver", "register", "builtin"]
