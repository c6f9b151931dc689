"""Instance files: one record per line.

    n <count>                       vertex count (first record)
    v <id> <label>                  optional external label
    e <u> <v>                       undirected edge
    a <u> <v>                       arc u -> v
    p <s> <t>                       pair
    fp <s> <t> : <v0> ... <vm>      pair with a fixed path
    # ...                           comment
"""
from __future__ import annotations
import hashlib
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from ..exceptions import ParseError, ValidationError
from .model import FixedPathInstance, MixedGraph, PairSet


@dataclass(frozen=True)
class Instance:
    graph: MixedGraph
    pairs: PairSet
    fixed_paths: Optional[Tuple[Tuple[int, ...], ...]] = None
    labels: Dict[int, str] = field(default_factory=dict, compare=False)

    def fixed_instance(self) -> FixedPathInstance:
        if self.fixed_paths is None:
            raise ValidationError("instance has no fixed paths (use 'fp' records)")
        return FixedPathInstance(self.graph, self.fixed_paths)


def _ints(tokens: List[str], lineno: int) -> List[int]:
    try:
        values = [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", lineno)
    if any(v < 0 for v in values):
        raise ParseError("vertex ids must be non-negative", lineno)
    return values


def parse_instance(text: str) -> Instance:
    n: Optional[int] = None
    edges, arcs, pairs = [], [], []
    paths: List[Tuple[int, ...]] = []
    plain_pairs = 0
    labels: Dict[int, str] = {}
    seen: Dict[Tuple[int, int], int] = {}

    def vertex_check(values: List[int], lineno: int) -> None:
        if n is None:
            raise ParseError("'n' record must come first", lineno)
        for v in values:
            if v >= n:
                raise ParseError(f"vertex {v} outside 0..{n - 1}", lineno)

    def connection(u: int, v: int, lineno: int) -> None:
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate connection {key[0]}-{key[1]} (first on line {seen[key]})", lineno)
        seen[key] = lineno

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        tag, rest = tokens[0], tokens[1:]
        if tag == "n":
            if n is not None:
                raise ParseError("repeated 'n' record", lineno)
            if len(rest) != 1:
                raise ParseError("'n' takes one value", lineno)
            n = _ints(rest, lineno)[0]
        elif tag == "v":
            if len(rest) < 2:
                raise ParseError("'v' takes an id and a label", lineno)
            vid = _ints(rest[:1], lineno)[0]
            vertex_check([vid], lineno)
            labels[vid] = " ".join(rest[1:])
        elif tag in ("e", "a"):
            if len(rest) != 2:
                raise ParseError(f"'{tag}' takes two vertices", lineno)
            u, v = _ints(rest, lineno)
            vertex_check([u, v], lineno)
            connection(u, v, lineno)
            (edges if tag == "e" else arcs).append((u, v))
        elif tag == "p":
            if len(rest) != 2:
                raise ParseError("'p' takes two vertices", lineno)
            s, t = _ints(rest, lineno)
            vertex_check([s, t], lineno)
            pairs.append((s, t))
            plain_pairs += 1
        elif tag == "fp":
            if ":" not in rest:
                raise ParseError("'fp' needs ':' before the path", lineno)
            cut = rest.index(":")
            if cut != 2:
                raise ParseError("'fp' takes two vertices before ':'", lineno)
            s, t = _ints(rest[:2], lineno)
            path = tuple(_ints(rest[3:], lineno))
            vertex_check([s, t, *path], lineno)
            if not path or path[0] != s or path[-1] != t:
                raise ParseError("fixed path must run from s to t", lineno)
            pairs.append((s, t))
            paths.append(path)
        else:
            raise ParseError(f"unknown record {tag!r}", lineno)

    if n is None:
        raise ParseError("missing 'n' record")
    if paths and plain_pairs:
        raise ParseError("mixing 'p' and 'fp' records is not supported")
    graph = MixedGraph(n, tuple(edges), tuple(arcs))
    instance = Instance(graph, PairSet(tuple(pairs)).validate(n),
                        tuple(paths) if paths else None, labels)
    if paths:
        instance.fixed_instance()  # validates path edges
    return instance


def emit_instance(instance: Instance) -> str:
    """Canonical text: vertex count, labels, edges, arcs, then pairs in input order."""
    g = instance.graph
    lines = [f"n {g.n}"]
    lines += [f"v {v} {label}" for v, label in sorted(instance.labels.items())]
    lines += [f"e {u} {v}" for u, v in g.edges]
    lines += [f"a {u} {v}" for u, v in g.arcs]
    if instance.fixed_paths is not None:
        for path in instance.fixed_paths:
            lines.append(f"fp {path[0]} {path[-1]} : " + " ".join(str(v) for v in path))
    else:
        lines += [f"p {s} {t}" for s, t in instance.pairs]
    return "\n".join(lines) + "\n"


def instance_digest(instance: Instance) -> str:
    """Short SHA-256 of the canonical text."""
    h = hashlib.sha256(emit_instance(instance).encode("utf-8"))
    return h.hexdigest()[:12]


def read_instance(path: Path) -> Instance:
    return parse_instance(path.read_text(encoding="utf-8"))


def write_instance(instance: Instance, path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(emit_instance(instance), encoding="utf-8")
