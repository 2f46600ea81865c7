"""Degradation order of entanglement classes under noninvertible local maps.

The direct edges are tabulated, not inferred: reachability under LOCC is not
decidable from the invariants computed in this package.  Each tabulated
edge for the 2x2x2 and 3x2x2 formats ships with a concrete witness
operation (:data:`WITNESSES`) so the table can be checked by
re-classification.  Bipartite and four-qubit edges are rank forced and get
their witnesses from a small deterministic search (:func:`find_witness`).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .classify import (
    EntanglementClass,
    classes_for_format,
    classify,
    entanglement_class,
    pattern_class_name,
    representative,
)
from .linalg import Matrix
from .tensor import FormatError, LocalOperation, apply_local

__all__ = [
    "Edge",
    "ClassDag",
    "class_dag",
    "can_degrade",
    "degradation_targets",
    "order_diagram",
    "to_dot",
    "WITNESSES",
    "witness",
    "find_witness",
]


@dataclass(frozen=True)
class Edge:
    source: str
    target: str
    # True when the edge follows from "in a similar fashion" style reasoning
    # and rank arithmetic rather than from an explicit statement
    derived: bool = False


def _e(src, dsts, derived=False):
    return [Edge(src, d, derived) for d in dsts]


_BIS = ("B1", "B2", "B3")

_EDGES_222 = (
    _e("GHZ", _BIS) + _e("W", _BIS) + [Edge(b, "SEP") for b in _BIS]
)

_EDGES_322 = (
    _e("GEN322", ("GHZ", "W"))
    + _e("DEG322", ("GHZ", "W"))
    + _e("GHZ", _BIS, derived=True)
    + _e("W", _BIS, derived=True)
    + [Edge(b, "SEP", derived=True) for b in _BIS]
)


def _edges_bipartite(dims) -> list[Edge]:
    top = min(dims)
    return [Edge(f"S{j}", f"S{j - 1}") for j in range(top, 1, -1)]


def _split_once(pattern):
    """Patterns obtained by splitting exactly one block of ``pattern`` in two."""
    out = []
    for i, block in enumerate(pattern):
        for size in range(1, len(block) // 2 + 1):
            for part in itertools.combinations(block, size):
                rest = tuple(p for p in block if p not in part)
                if len(part) * 2 == len(block) and block[0] not in part:
                    continue
                new = pattern[:i] + pattern[i + 1:] + (tuple(part), rest)
                out.append(tuple(sorted(new)))
    return out


def _edges_4qubit() -> list[Edge]:
    parties = (1, 2, 3, 4)
    edges = []
    top_splits = _split_once((parties,))
    # a singular map on one qubit leaves that party as a singleton block, so
    # the 2+2 patterns sit below GEN4/DEG4 only in the orbit closure
    for top in ("GEN4", "DEG4"):
        for p in top_splits:
            if any(len(b) == 1 for b in p):
                edges.append(Edge(top, pattern_class_name(p), derived=True))
    seen = set()
    frontier = top_splits
    while frontier:
        nxt = []
        for p in frontier:
            if p in seen:
                continue
            seen.add(p)
            for q in _split_once(p):
                edges.append(Edge(pattern_class_name(p), pattern_class_name(q), derived=True))
                nxt.append(q)
        frontier = nxt
    return edges


@dataclass(frozen=True)
class ClassDag:
    dims: tuple[int, ...]
    nodes: tuple[str, ...]
    edges: tuple[Edge, ...]

    @property
    def closure(self) -> dict[str, frozenset[str]]:
        return _closure(self)

    def successors(self, name: str) -> frozenset[str]:
        try:
            return self.closure[name]
        except KeyError:
            raise KeyError(f"unknown class {name!r} for format {'x'.join(map(str, self.dims))}")


@lru_cache(maxsize=None)
def _closure(dag: ClassDag) -> dict[str, frozenset[str]]:
    direct = {n: set() for n in dag.nodes}
    for e in dag.edges:
        direct[e.source].add(e.target)
    reach: dict[str, frozenset[str]] = {}

    def visit(n, stack=()):
        if n in reach:
            return reach[n]
        if n in stack:
            raise ValueError(f"cycle through {n} in degradation order")
        acc = {n}
        for m in direct[n]:
            acc |= visit(m, stack + (n,))
        reach[n] = frozenset(acc)
        return reach[n]

    for n in dag.nodes:
        visit(n)
    return reach


@lru_cache(maxsize=None)
def class_dag(dims: tuple[int, ...]) -> ClassDag:
    dims = tuple(dims)
    nodes = tuple(c.name for c in classes_for_format(dims))
    if len(dims) == 2:
        edges = _edges_bipartite(dims)
    elif dims == (2, 2, 2):
        edges = _EDGES_222
    elif dims == (3, 2, 2):
        edges = _EDGES_322
    elif dims == (2, 2, 2, 2):
        edges = _edges_4qubit()
    else:
        raise FormatError(f"no degradation order for format {'x'.join(map(str, dims))}")
    dag = ClassDag(dims, nodes, tuple(edges))
    _closure(dag)  # rejects cycles eagerly
    return dag


def _same_format(a: EntanglementClass, b: EntanglementClass):
    if a.dims != b.dims:
        raise FormatError(f"cannot compare classes of formats {a.format} and {b.format}")


def can_degrade(source: EntanglementClass, target: EntanglementClass) -> bool:
    """``target`` is reachable from ``source`` (reflexively) by noninvertible local maps."""
    _same_format(source, target)
    return target.name in class_dag(source.dims).successors(source.name)


def degradation_targets(source: EntanglementClass) -> list[EntanglementClass]:
    names = class_dag(source.dims).successors(source.name)
    return [c for c in classes_for_format(source.dims) if c.name in names]


def order_diagram(dims: Sequence[int]) -> list[tuple[str, str]]:
    return [(e.source, e.target) for e in class_dag(tuple(dims)).edges]


def to_dot(dims: Sequence[int]) -> str:
    dag = class_dag(tuple(dims))
    lines = [f'digraph "{"x".join(map(str, dag.dims))}" {{', "  rankdir=TB;"]
    for c in classes_for_format(dag.dims):
        lines.append(f'  "{c.name}" [label="{c.name}\\ndim {c.dimension}"];')
    for e in dag.edges:
        style = " [style=dashed]" if e.derived else ""
        lines.append(f'  "{e.source}" -> "{e.target}"{style};')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _op(dims, party, rows) -> LocalOperation:
    return LocalOperation.on_party(dims, party, Matrix(rows))


_Q = (2, 2, 2)
_T = (3, 2, 2)
_MERGE2 = [[1, 1], [0, 0]]
_KEEP0 = [[1, 0], [0, 0]]
_KEEP0_3 = [[1, 0, 0], [0, 0, 0], [0, 0, 0]]

# (dims, source, target) -> noninvertible operation mapping representative(source) into target
WITNESSES: dict[tuple[tuple[int, ...], str, str], LocalOperation] = {
    **{(_Q, "GHZ", f"B{j}"): _op(_Q, j, _MERGE2) for j in (1, 2, 3)},
    **{(_Q, "W", f"B{j}"): _op(_Q, j, _KEEP0) for j in (1, 2, 3)},
    (_Q, "B1", "SEP"): _op(_Q, 2, _KEEP0),
    (_Q, "B2", "SEP"): _op(_Q, 1, _KEEP0),
    (_Q, "B3", "SEP"): _op(_Q, 1, _KEEP0),
    (_T, "GEN322", "GHZ"): _op(_T, 1, [[1, 0, 0], [0, 0, 1], [0, 0, 0]]),
    (_T, "GEN322", "W"): _op(_T, 1, [[1, 0, 0], [0, 1, 0], [0, 0, 0]]),
    (_T, "DEG322", "GHZ"): _op(_T, 1, [[1, 0, 0], [0, 0, 1], [0, 0, 0]]),
    (_T, "DEG322", "W"): _op(_T, 1, [[1, 0, 1], [0, 1, 0], [0, 0, 0]]),
    (_T, "GHZ", "B1"): _op(_T, 1, [[1, 1, 0], [0, 0, 0], [0, 0, 0]]),
    (_T, "GHZ", "B2"): _op(_T, 2, _MERGE2),
    (_T, "GHZ", "B3"): _op(_T, 3, _MERGE2),
    (_T, "W", "B1"): _op(_T, 1, _KEEP0_3),
    (_T, "W", "B2"): _op(_T, 2, _KEEP0),
    (_T, "W", "B3"): _op(_T, 3, _KEEP0),
    (_T, "B1", "SEP"): _op(_T, 2, _KEEP0),
    (_T, "B2", "SEP"): _op(_T, 1, _KEEP0_3),
    (_T, "B3", "SEP"): _op(_T, 1, _KEEP0_3),
}


def _candidate_matrices(d: int):
    """Rank-deficient maps tried by :func:`find_witness`, in a fixed order."""
    for keep in range(d - 1, 0, -1):
        yield [[1 if (i == j and i < keep) else 0 for j in range(d)] for i in range(d)]
    for coeffs in itertools.product((1, 2, -1), repeat=d - 1):
        first = [1, *coeffs]
        yield [first] + [[0] * d for _ in range(d - 1)]


def find_witness(source: EntanglementClass, target: EntanglementClass, max_parties: int = 2):
    """Search single- and two-party rank-deficient maps for a witness; ``None`` if none found."""
    _same_format(source, target)
    dims = source.dims
    rep = representative(source)
    n = len(dims)
    for k in range(1, max_parties + 1):
        for parties in itertools.combinations(range(1, n + 1), k):
            pools = [list(_candidate_matrices(dims[p - 1])) for p in parties]
            for choice in itertools.product(*pools):
                mats = [Matrix.identity(d) for d in dims]
                for p, m in zip(parties, choice):
                    mats[p - 1] = Matrix(m)
                op = LocalOperation(mats)
                out = apply_local(rep, op)
                if not out.is_zero() and classify(out) == target:
                    return op
    return None


def witness(source: EntanglementClass, target: EntanglementClass) -> LocalOperation | None:
    """Fixture witness if tabulated, else the result of :func:`find_witness`."""
    key = (source.dims, source.name, target.name)
    if key in WITNESSES:
        return WITNESSES[key]
    return find_witness(source, target)


def edge_classes(dims: Sequence[int], edge: Edge) -> tuple[EntanglementClass, EntanglementClass]:
    dims = tuple(dims)
    return entanglement_class(dims, edge.source), entanglement_class(dims, edge.target)
