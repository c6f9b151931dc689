import pytest

from orientnet.core.model import MixedGraph
from orientnet.exceptions import PreconditionError, ValidationError
from orientnet.solvers import available_solvers, load_solver

from strategies import pairs_of

PATH = MixedGraph(4, ((0, 1), (1, 2)), ((3, 2),))
CYCLE = MixedGraph(4, ((0, 1), (1, 2), (2, 3), (0, 3)))
STAR = MixedGraph(4, ((0, 1), (0, 2), (0, 3)))


def test_builtin_solvers_are_listed():
    assert set(available_solvers()) >= {"path", "cycle", "tree", "tree-mixed", "mixed", "backbone", "oracle"}


def test_unknown_solver():
    with pytest.raises(ValidationError, match="Unknown solver"):
        load_solver("simplex")


def test_applicability():
    applies = {name: {label for label, g in (("path", PATH), ("cycle", CYCLE), ("star", STAR))
                      if load_solver(name).applies(g)}
               for name in available_solvers()}
    assert applies["path"] == {"path"}
    assert applies["cycle"] == {"cycle"}
    assert applies["tree"] == {"cycle", "star"}
    assert applies["tree-mixed"] == {"path", "star"}
    assert applies["backbone"] == {"star"}
    assert applies["oracle"] == {"path", "cycle", "star"}


def test_solvers_agree_on_a_star():
    pairs = pairs_of((1, 2), (3, 2), (2, 1))
    counts = {name: load_solver(name).solve(STAR, pairs).count
              for name in ("tree", "tree-mixed", "mixed", "oracle")}
    assert set(counts.values()) == {2}
    assert load_solver("backbone").exact is False


def test_backbone_needs_an_undirected_tree():
    with pytest.raises(PreconditionError):
        load_solver("backbone").solve(PATH, pairs_of((0, 1)))
