from __future__ import annotations
from importlib.metadata import entry_points
from typing import List

from ..exceptions import ValidationError

GROUP = "orientnet.solvers"
_REGISTRY = {}


def register(name: str, cls):
    _REGISTRY[name] = cls


def _entry_points():
    try:
        return list(entry_points(group=GROUP))
    except TypeError:  # Python 3.9 returns a dict
        return list(entry_points().get(GROUP, []))


def load_solver(name: str):
    # Try entry points first
    for ep in _entry_points():
        if ep.name == name:
            solver_class = ep.load()
            return solver_class()

    # Fallback registry
    if name in _REGISTRY:
        return _REGISTRY[name]()

    raise ValidationError(f"Unknown solver: {name}")


def available_solvers() -> List[str]:
    return sorted({ep.name for ep in _entry_points()} | set(_REGISTRY))
