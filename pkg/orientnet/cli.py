"""Command line entrypoint for orientnet.

Usage:
    orientnet <command> [--input FILE] [--output FILE] [--format tsv|json] [--seed S] [--threads N]

Examples:
    orientnet solve-path --input path.txt
    orientnet approx-backbone --derandomize --input tree.txt
    orientnet gen --shape tree --n 10 --pairs 5 --seed 7 --output tree.txt
    orientnet bench --shapes tree --sizes 8..12 --seeds 50
"""
from __future__ import annotations
import argparse
import json
import logging
import math
import sys
import time
from pathlib import Path
from typing import Callable, List, Optional, Tuple

from .config import config_paths, create_sample_config, get_config
from .core.model import MixedGraph, Solution, TreeView
from .core.storage import Instance, emit_instance, parse_instance, read_instance
from .exceptions import PreconditionError, ValidationError, VerificationError
from .gadgets import SHAPES, CliqueInstance, GeneratorConfig, clique_to_mugo, figure_instance, generate, \
    verify_reduction
from .oracle import brute_force_fixed, brute_force_orient
from .report import SolveReport, build_report, render
from .solvers import available_solvers, load_solver
from .undirected.conflict import build_conflict_graph_fixed, build_conflict_graph_tree, ramsey_bound, \
    ramsey_kernel, solve_mto_budget
from .utils import parallel_map, setup_logging

LOGGER = logging.getLogger("orientnet")

EXIT_OK, EXIT_VALIDATION, EXIT_PRECONDITION, EXIT_USAGE = 0, 1, 2, 64

SOLVE_COMMANDS = {
    "solve-path": "path",
    "solve-cycle": "cycle",
    "solve-tree": "tree",
    "solve-tree-mixed": "tree-mixed",
    "solve-mixed": "mixed",
}


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with 64 instead of argparse's 2, which is taken by precondition errors."""

    def error(self, message: str):  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read(ns: argparse.Namespace) -> Instance:
    if ns.input in (None, "-"):
        return parse_instance(sys.stdin.read())
    path = Path(ns.input)
    if not path.is_file():
        raise ValidationError(f"input file not found: {path}")
    return read_instance(path)


def _write(ns: argparse.Namespace, text: str) -> None:
    if ns.output:
        Path(ns.output).write_text(text, encoding="utf-8")
        LOGGER.info("Wrote %s", ns.output)
    else:
        sys.stdout.write(text)


def _format(ns: argparse.Namespace) -> str:
    return ns.format or get_config().report_format()


def _threads(ns: argparse.Namespace) -> int:
    return ns.threads or get_config().threads()


def _timed(ns: argparse.Namespace, fn: Callable[[], Solution]) -> Tuple[Solution, int]:
    start = time.perf_counter_ns()
    solution = fn()
    micros = (time.perf_counter_ns() - start) // 1000
    return solution, (micros if ns.timing else 0)


def _tree_of(graph: MixedGraph) -> TreeView:
    if graph.arcs:
        raise PreconditionError("expected an undirected tree; the instance has arcs")
    try:
        return TreeView.from_graph(graph)
    except ValidationError as exc:
        raise PreconditionError(f"expected an undirected tree: {exc}")


def _run_solver(ns: argparse.Namespace, name: str, instance: Instance, **options) -> SolveReport:
    solver = load_solver(name)
    LOGGER.info("Solving with %s (%d vertices, %d pairs)", name, instance.graph.n, len(instance.pairs))
    solution, micros = _timed(ns, lambda: solver.solve(instance.graph, instance.pairs, **options))
    return build_report(name, instance, solution, micros=micros)


def cmd_solve(ns: argparse.Namespace) -> int:
    report = _run_solver(ns, SOLVE_COMMANDS[ns.cmd], _read(ns), threads=_threads(ns))
    _write(ns, render([report], _format(ns)))
    return EXIT_OK


def cmd_backbone(ns: argparse.Namespace) -> int:
    if ns.derandomize and ns.seed is not None:
        raise ValidationError("--seed and --derandomize are mutually exclusive")
    report = _run_solver(ns, "backbone", _read(ns), seed=None if ns.derandomize else ns.seed)
    _write(ns, render([report], _format(ns)))
    return EXIT_OK


def cmd_oracle(ns: argparse.Namespace) -> int:
    instance = _read(ns)
    if instance.fixed_paths is not None:
        result, micros = _timed(ns, lambda: _fixed_solution(instance, _threads(ns)))
        report = build_report("oracle-fixed", instance, result, micros=micros, fixed=True)
    else:
        report = _run_solver(ns, "oracle", instance, threads=_threads(ns))
    _write(ns, render([report], _format(ns)))
    return EXIT_OK


def _fixed_solution(instance: Instance, threads: int) -> Solution:
    result = brute_force_fixed(instance.fixed_instance(), threads=threads)
    return Solution(result.best_count, result.witness, {"explored": result.explored})


def cmd_decide(ns: argparse.Namespace) -> int:
    instance = _read(ns)
    tree = _tree_of(instance.graph)
    decision = solve_mto_budget(tree, instance.pairs, ns.beta)
    if _format(ns) == "json":
        text = json.dumps({
            "beta": decision.beta, "bound": decision.bound, "kernel": decision.kernel_size,
            "feasible": decision.feasible, "independent": sorted(decision.independent_set),
            "orientation": [list(a) for a in decision.witness.sorted_arcs()] if decision.witness else None,
        }, indent=2, sort_keys=True) + "\n"
    else:
        lines = ["beta\tbound\tkernel\tfeasible",
                 f"{decision.beta}\t{decision.bound}\t{decision.kernel_size}\t{str(decision.feasible).lower()}",
                 "# independent " + " ".join(str(j) for j in sorted(decision.independent_set))]
        if decision.witness is not None:
            lines.append("# orient " + " ".join(f"{u}>{v}" for u, v in decision.witness.sorted_arcs()))
        text = "\n".join(lines) + "\n"
    _write(ns, text)
    return EXIT_OK


def cmd_kernelize(ns: argparse.Namespace) -> int:
    instance = _read(ns)
    if instance.fixed_paths is not None:
        cg = build_conflict_graph_fixed(instance.fixed_instance())
    else:
        cg = build_conflict_graph_tree(_tree_of(instance.graph), instance.pairs)
    kernel = ramsey_kernel(cg, ns.beta)
    if _format(ns) == "json":
        text = json.dumps({"beta": ns.beta, "bound": ramsey_bound(ns.beta), "vertices": list(kernel.vertices),
                           "edges": [list(e) for e in sorted(kernel.edges)]}, indent=2, sort_keys=True) + "\n"
    else:
        lines = ["beta\tbound\tvertices\tedges",
                 f"{ns.beta}\t{ramsey_bound(ns.beta)}\t{len(kernel)}\t{len(kernel.edges)}",
                 "# pairs " + " ".join(str(v) for v in kernel.vertices)]
        lines += [f"# conflict {u} {v}" for u, v in sorted(kernel.edges)]
        text = "\n".join(lines) + "\n"
    _write(ns, text)
    return EXIT_OK


def cmd_reduce_clique(ns: argparse.Namespace) -> int:
    if ns.figure:
        clique = figure_instance()
    else:
        graph = _read(ns).graph
        if graph.arcs:
            raise ValidationError("clique instances are undirected; remove the 'a' records")
        clique = CliqueInstance(graph.undirected())
    reduced = clique_to_mugo(clique)
    if ns.verify:
        if not verify_reduction(clique, threads=_threads(ns)):
            raise VerificationError("reduced instance optimum differs from the maximum clique size")
        LOGGER.info("Reduction verified on %d clique vertices", clique.graph.number_of_nodes())
    _write(ns, emit_instance(Instance(reduced.graph, reduced.pairs, reduced.fixed_paths)))
    return EXIT_OK


def cmd_verify(ns: argparse.Namespace) -> int:
    instance = _read(ns)
    graph, pairs = instance.graph, instance.pairs
    optimum = brute_force_orient(graph, pairs, threads=_threads(ns)).best_count
    reports: List[SolveReport] = []
    problems: List[str] = []
    for name in available_solvers():
        solver = load_solver(name)
        if name == "oracle" or not solver.applies(graph):
            continue
        solution, micros = _timed(ns, lambda: solver.solve(graph, pairs, seed=ns.seed, threads=_threads(ns)))
        report = build_report(name, instance, solution, optimum=optimum, micros=micros)
        reports.append(report)
        if solver.exact and report.count != optimum:
            problems.append(f"{name}: {report.count} != optimum {optimum}")
        if not solver.exact:
            floor = math.ceil(len(pairs) / 2 ** ((report.backbones or 0) + 2))
            if report.count > optimum or report.count < floor:
                problems.append(f"{name}: {report.count} outside [{floor}, {optimum}]")
    _write(ns, render(reports, _format(ns)))
    if problems:
        raise VerificationError("; ".join(problems))
    return EXIT_OK


def cmd_gen(ns: argparse.Namespace) -> int:
    config = GeneratorConfig(seed=ns.seed or 0, n=ns.n, p=ns.pairs, arcs=ns.arcs, shape=ns.shape,
                             max_leaves=ns.max_leaves, extra_edges=ns.extra_edges, extra_arcs=ns.extra_arcs)
    graph, pairs = generate(config)
    _write(ns, emit_instance(Instance(graph, pairs)))
    return EXIT_OK


def _sizes(text: str) -> List[int]:
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
            return list(range(lo, hi + 1))
        return [int(text)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}")


def _shapes(text: str) -> List[str]:
    shapes = [s.strip() for s in text.split(",") if s.strip()]
    unknown = [s for s in shapes if s not in SHAPES]
    if unknown or not shapes:
        raise argparse.ArgumentTypeError(f"unknown shape(s) {', '.join(unknown)}; choose from {', '.join(SHAPES)}")
    return shapes


def cmd_bench(ns: argparse.Namespace) -> int:
    configs = [GeneratorConfig(seed=seed, n=n, p=ns.pairs, arcs=ns.arcs, shape=shape, max_leaves=ns.max_leaves)
               for shape in ns.shapes for n in ns.sizes for seed in range(ns.seeds)]
    names = [name for name in available_solvers() if name != "oracle"]

    def run(config: GeneratorConfig) -> List[SolveReport]:
        graph, pairs = generate(config)
        instance = Instance(graph, pairs)
        optimum = None if ns.no_oracle else brute_force_orient(graph, pairs).best_count
        rows = []
        for name in names:
            solver = load_solver(name)
            if not solver.applies(graph):
                continue
            solution, micros = _timed(ns, lambda: solver.solve(graph, pairs, seed=ns.seed))
            rows.append(build_report(name, instance, solution, optimum=optimum, micros=micros))
        return rows

    LOGGER.info("Benchmarking %d instances", len(configs))
    reports = [r for rows in parallel_map(run, configs, _threads(ns)) for r in rows]
    _write(ns, render(reports, _format(ns), details=False))
    return EXIT_OK


def cmd_config(ns: argparse.Namespace) -> int:
    if ns.action == "init":
        if ns.location is None:
            sys.stdout.write(create_sample_config())
            return EXIT_OK
        home, local = config_paths()
        path = home if ns.location == "home" else local
        create_sample_config(path)
        print(f"Created config file at: {path}")
        return EXIT_OK
    config = get_config()
    for key, value in (("oracle.max_edges", config.oracle_max_edges()),
                       ("oracle.max_vertices", config.oracle_max_vertices()),
                       ("runtime.threads", config.threads()),
                       ("report.format", config.report_format())):
        print(f"{key} = {value}")
    return EXIT_OK


def _global_flags(p: argparse.ArgumentParser, suppress: bool) -> None:
    def default(value):
        return argparse.SUPPRESS if suppress else value
    p.add_argument("--input", "-i", default=default(None), help="Instance file (default: stdin)")
    p.add_argument("--output", "-o", default=default(None), help="Write the report here (default: stdout)")
    p.add_argument("--format", choices=["tsv", "json"], default=default(None), help="Report format")
    p.add_argument("--seed", type=int, default=default(None), help="Seed for randomized steps")
    p.add_argument("--threads", type=int, default=default(None), help="Worker threads for enumeration")
    p.add_argument("--timing", action="store_true", default=default(False),
                   help="Fill the micros column with wall time")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="orientnet", description="Maximum graph orientation solvers")
    _global_flags(p, suppress=False)
    common = _Parser(add_help=False)
    _global_flags(common, suppress=True)
    sub = p.add_subparsers(dest="cmd", required=True)

    for cmd, solver in SOLVE_COMMANDS.items():
        sp = sub.add_parser(cmd, parents=[common], help=f"Exact solve with the {solver} solver")
        sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("approx-backbone", parents=[common], help="Backbone approximation on a tree")
    sp.add_argument("--derandomize", action="store_true", help="Conditional expectations (default without --seed)")
    sp.set_defaults(func=cmd_backbone)

    for cmd, func, what in (("decide", cmd_decide, "Decide whether BETA pairs are satisfiable on a tree"),
                            ("kernelize", cmd_kernelize, "Reduce the conflict graph to the Ramsey kernel")):
        sp = sub.add_parser(cmd, parents=[common], help=what)
        sp.add_argument("--beta", type=int, required=True)
        sp.set_defaults(func=func)

    sp = sub.add_parser("oracle", parents=[common], help="Exhaustive optimum (fixed paths when given)")
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("reduce-clique", parents=[common], help="Clique instance to fixed-path instance")
    sp.add_argument("--verify", action="store_true", help="Check optimum == maximum clique by exhaustion")
    sp.add_argument("--figure", action="store_true", help="Use the built-in five-vertex example")
    sp.set_defaults(func=cmd_reduce_clique)

    sp = sub.add_parser("verify", parents=[common], help="Compare every applicable solver with the oracle")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("gen", parents=[common], help="Generate a random instance")
    sp.add_argument("--shape", choices=SHAPES, default="tree")
    sp.add_argument("--n", type=int, default=8)
    sp.add_argument("--pairs", type=int, default=4)
    sp.add_argument("--arcs", type=int, default=0)
    sp.add_argument("--max-leaves", type=int, default=None)
    sp.add_argument("--extra-edges", type=int, default=0)
    sp.add_argument("--extra-arcs", type=int, default=0)
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("bench", parents=[common], help="Run solvers over generated instances")
    sp.add_argument("--shapes", type=_shapes, default=["tree"], help="Comma-separated shapes")
    sp.add_argument("--sizes", type=_sizes, default=[8], help="N or A..B")
    sp.add_argument("--seeds", type=int, default=10)
    sp.add_argument("--pairs", type=int, default=4)
    sp.add_argument("--arcs", type=int, default=0)
    sp.add_argument("--max-leaves", type=int, default=None)
    sp.add_argument("--no-oracle", action="store_true", help="Skip the exhaustive optimum")
    sp.set_defaults(func=cmd_bench)

    cp = sub.add_parser("config", help="Manage configuration")
    cp.add_argument("action", choices=["init", "show"],
                    help="init: create sample config, show: display current config")
    cp.add_argument("--location", choices=["home", "local"],
                    help="Where to create config file (for init action)")
    cp.set_defaults(func=cmd_config)

    return p


def main(argv: Optional[List[str]] = None) -> int:
    setup_logging()
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        return ns.func(ns)
    except PreconditionError as exc:
        LOGGER.error("%s", exc)
        return EXIT_PRECONDITION
    except ValidationError as exc:
        LOGGER.error("%s", exc)
        return EXIT_VALIDATION


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
