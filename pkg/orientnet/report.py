"""Solve reports in TSV and JSON."""
from __future__ import annotations
import json
import logging
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .core.model import Arc, Solution
from .core.semantics import satisfied_fixed_pairs, satisfied_pairs
from .core.storage import Instance, instance_digest
from .exceptions import VerificationError

LOGGER = logging.getLogger("orientnet.report")

COLUMNS = ("digest", "solver", "n", "edges", "arcs", "pairs", "leaves", "backbones",
           "count", "optimum", "ratio", "micros")


@dataclass(frozen=True)
class SolveReport:
    solver: str
    digest: str
    n: int
    edges: int
    arcs: int
    pairs: int
    leaves: int
    backbones: Optional[int]
    count: int
    satisfied: Tuple[int, ...]
    orientation: Tuple[Arc, ...]
    optimum: Optional[int] = None
    micros: int = 0
    labels: Dict[int, str] = field(default_factory=dict)

    @property
    def ratio(self) -> Optional[float]:
        if self.optimum is None:
            return None
        return 1.0 if self.optimum == 0 else self.count / self.optimum

    def row(self) -> List[str]:
        def cell(value: Any) -> str:
            if value is None:
                return "-"
            if isinstance(value, float):
                return f"{value:.4f}"
            return str(value)
        return [cell(getattr(self, c)) for c in COLUMNS]

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["ratio"] = self.ratio
        data["orientation"] = [list(a) for a in self.orientation]
        data["satisfied"] = list(self.satisfied)
        data["labels"] = {str(k): v for k, v in sorted(self.labels.items())}
        return data


def build_report(solver: str, instance: Instance, solution: Solution,
                 optimum: Optional[int] = None, micros: int = 0, fixed: bool = False) -> SolveReport:
    """Report for one solve; the orientation is re-checked against the reported count.

    With ``fixed`` a pair counts only when its fixed path is traversed.
    """
    graph = instance.graph
    if fixed:
        satisfied = satisfied_fixed_pairs(instance.fixed_instance(), solution.orientation)
    else:
        satisfied = satisfied_pairs(graph, solution.orientation, instance.pairs)
    if len(satisfied) != solution.count:
        raise VerificationError(
            f"{solver}: reported {solution.count} satisfied pairs, orientation satisfies {len(satisfied)}")
    skeleton = graph.skeleton()
    leaves = sum(1 for _, d in skeleton.degree if d == 1)
    return SolveReport(
        solver=solver,
        digest=instance_digest(instance),
        n=graph.n,
        edges=len(graph.edges),
        arcs=len(graph.arcs),
        pairs=len(instance.pairs),
        leaves=leaves,
        backbones=solution.details.get("b"),
        count=solution.count,
        satisfied=tuple(sorted(satisfied)),
        orientation=tuple(solution.orientation.sorted_arcs()),
        optimum=optimum,
        micros=micros,
        labels=dict(instance.labels),
    )


def render(reports: Sequence[SolveReport], fmt: str = "tsv", details: bool = True) -> str:
    """TSV (header, one row per report, optional comment lines) or a JSON list."""
    if fmt == "json":
        rows = [r.to_dict() for r in reports]
        if not details:
            for row in rows:
                for key in ("satisfied", "orientation", "labels"):
                    row.pop(key)
        return json.dumps(rows, indent=2, sort_keys=True) + "\n"
    lines = ["\t".join(COLUMNS)]
    for r in reports:
        lines.append("\t".join(r.row()))
        if details:
            lines.append("# satisfied " + " ".join(str(j) for j in r.satisfied))
            lines.append("# orient " + " ".join(f"{u}>{v}" for u, v in r.orientation))
            lines += [f"# label {v} {label}" for v, label in sorted(r.labels.items())]
    return "\n".join(lines) + "\n"
