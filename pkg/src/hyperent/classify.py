"""SLOCC class decision trees for the bipartite, 2x2x2, 3x2x2 and 2x2x2x2 formats.

Class names are stable strings used by the CLI and JSON output:

=============  ==========================================================
format         names
=============  ==========================================================
d1 x d2        ``S1`` .. ``S<min(d1, d2)>`` (local rank)
2x2x2          ``GHZ``, ``W``, ``B1``, ``B2``, ``B3``, ``SEP``
3x2x2          ``GEN322``, ``DEG322``, ``GHZ``, ``W``, ``B1``, ``B2``, ``B3``, ``SEP``
2x2x2x2        ``GEN4``, ``DEG4``, ``SEP`` and one ``B<blocks>`` name per
               partial product pattern, blocks joined by ``-``
               (``B1-234``, ``B12-34``, ``B1-2-34``, ...)
=============  ==========================================================

The 2x2x2x2 classes are coarse: ``GEN4`` is the open set ``Det != 0``,
which still contains a three-parameter family of inequivalent orbits, and
``DEG4`` collects every genuinely four-partite state with ``Det = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .hyperdet import det_2x2x2, det_2x2x2x2, det_3x2x2, generic_4qubit_state, hyperdet
from .linalg import Matrix, local_ranks, rank, row_space_basis
from .scalars import ONE, GaussianRational
from .singularity import separability_pattern
from .tensor import FormatError, Tensor, TensorFormat, ket

__all__ = [
    "EntanglementClass",
    "ClassReport",
    "UnsupportedFormat",
    "classify",
    "classify_report",
    "classify_2x2x2",
    "classify_3x2x2",
    "classify_2x2x2x2",
    "compress_qutrit",
    "representative",
    "class_dimension",
    "entanglement_class",
    "classes_for_format",
    "pattern_class_name",
    "GENERIC_4QUBIT_PARAMS",
]


class UnsupportedFormat(FormatError):
    """No classification tree exists for this format."""


# (alpha, beta, gamma, delta) of the GEN4 representative; all twelve
# factors of the closed-form Det are nonzero here
GENERIC_4QUBIT_PARAMS = (1, 2, 3, 5)


@dataclass(frozen=True)
class EntanglementClass:
    dims: tuple[int, ...]
    name: str
    dimension: int

    @property
    def format(self) -> TensorFormat:
        return TensorFormat(self.dims)

    @property
    def representative(self) -> Tensor:
        return representative(self)

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class ClassReport:
    """A classification together with the invariants that decided it."""

    entanglement_class: EntanglementClass
    local_ranks: tuple[int, ...]
    pattern: tuple[tuple[int, ...], ...]
    hyperdet: GaussianRational | None = None
    permutation: tuple[int, ...] = ()
    notes: tuple[str, ...] = field(default=())

    @property
    def name(self) -> str:
        return self.entanglement_class.name

    @property
    def dimension(self) -> int:
        return self.entanglement_class.dimension


def _ghz(n: int) -> Tensor:
    return ket("0" * n, "1" * n)


def _block_product(n: int, pattern: Sequence[Sequence[int]]) -> Tensor:
    """Product over ``pattern`` of a GHZ state on each block (|0> on singletons)."""
    out = None
    order: list[int] = []
    for block in pattern:
        piece = _ghz(len(block)) if len(block) > 1 else ket("0")
        order.extend(block)
        if out is None:
            out = piece
        else:
            data = [x * y for x in out.entries for y in piece.entries]
            out = Tensor(out.dims + piece.dims, data)
    # party at position k of `out` is order[k]; move it to slot order[k]-1
    perm = [order.index(p) for p in range(1, n + 1)]
    return out.permute(perm)


def pattern_class_name(pattern: Sequence[Sequence[int]]) -> str:
    if all(len(b) == 1 for b in pattern):
        return "SEP"
    return "B" + "-".join("".join(map(str, b)) for b in pattern)


def _set_partitions(items: list[int]):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def _pattern_dimension(pattern: Sequence[Sequence[int]]) -> int:
    return sum(2 ** len(b) - 1 for b in pattern)


@lru_cache(maxsize=None)
def _registry(dims: tuple[int, ...]) -> dict[str, tuple[int, Tensor]]:
    """``name -> (projective dimension, representative)`` for one format."""
    if len(dims) == 2:
        d1, d2 = dims
        out = {}
        for j in range(1, min(d1, d2) + 1):
            rep = Tensor.from_dict(dims, {(i, i): ONE for i in range(j)})
            out[f"S{j}"] = (j * (d1 + d2 - j) - 1, rep)
        return out
    if dims == (2, 2, 2):
        return {
            "GHZ": (7, ket("000", "111")),
            "W": (6, ket("001", "010", "100")),
            "B1": (4, ket("001", "010")),
            "B2": (4, ket("001", "100")),
            "B3": (4, ket("010", "100")),
            "SEP": (3, ket("000")),
        }
    if dims == (3, 2, 2):
        k = lambda *labels: ket(*labels, dims=dims)  # noqa: E731
        return {
            "GEN322": (11, k("000", "101", "110", "211")),
            "DEG322": (10, k("000", "101", "211")),
            "GHZ": (9, k("000", "111")),
            "W": (8, k("001", "010", "100")),
            "B2": (6, k("001", "100")),
            "B3": (6, k("010", "100")),
            "B1": (5, k("001", "010")),
            "SEP": (4, k("000")),
        }
    if dims == (2, 2, 2, 2):
        out = {
            "GEN4": (15, generic_4qubit_state(*GENERIC_4QUBIT_PARAMS)),
            "DEG4": (14, ket("0000", "1111")),
        }
        for part in _set_partitions([1, 2, 3, 4]):
            if len(part) == 1:
                continue
            pattern = tuple(sorted(tuple(sorted(b)) for b in part))
            out[pattern_class_name(pattern)] = (
                _pattern_dimension(pattern),
                _block_product(4, pattern),
            )
        return out
    raise UnsupportedFormat(f"no entanglement classes tabulated for format {'x'.join(map(str, dims))}")


def classes_for_format(dims: Sequence[int]) -> list[EntanglementClass]:
    """Every class of a format, in decreasing dimension (stable by name order)."""
    dims = tuple(dims)
    reg = _registry(dims)
    return sorted(
        (EntanglementClass(dims, name, d) for name, (d, _) in reg.items()),
        key=lambda c: -c.dimension,
    )


def entanglement_class(dims: Sequence[int], name: str) -> EntanglementClass:
    dims = tuple(dims)
    reg = _registry(dims)
    if name not in reg:
        raise KeyError(f"unknown class {name!r} for format {'x'.join(map(str, dims))}")
    return EntanglementClass(dims, name, reg[name][0])


def representative(cls: EntanglementClass) -> Tensor:
    reg = _registry(cls.dims)
    if cls.name not in reg:
        raise KeyError(f"unknown class {cls.name!r}")
    return reg[cls.name][1]


def class_dimension(cls: EntanglementClass) -> int:
    return entanglement_class(cls.dims, cls.name).dimension


def _nonzero(a: Tensor):
    if a.is_zero():
        raise ValueError("the zero tensor is not a state")


def classify_2x2x2(a: Tensor) -> EntanglementClass:
    if a.dims != (2, 2, 2):
        raise FormatError(f"classify_2x2x2 needs format 2x2x2, got {a.format}")
    _nonzero(a)
    r = local_ranks(a)
    ones = [j for j, rj in enumerate(r, 1) if rj == 1]
    if len(ones) == 3:
        name = "SEP"
    elif len(ones) == 1:
        name = f"B{ones[0]}"
    elif det_2x2x2(a).is_zero():
        name = "W"
    else:
        name = "GHZ"
    return entanglement_class((2, 2, 2), name)


def compress_qutrit(a: Tensor, basis: Sequence[Sequence] | None = None) -> Tensor:
    """Restrict the qutrit of a 3x2x2 state with qutrit rank 2 to a qubit.

    ``basis`` is two vectors spanning the row space of the 3x4 qutrit
    flattening; by default an echelon basis is used.  The result is the 2x2x2
    tensor whose slices are the basis vectors, which is related to ``a`` by
    a local map that is injective on the support of the qutrit.
    """
    m = a.flatten({1})
    if rank(m) != 2:
        raise ValueError("compress_qutrit needs a qutrit flattening of rank 2")
    rows = row_space_basis(m) if basis is None else [tuple(map(GaussianRational.coerce, b)) for b in basis]
    if len(rows) != 2 or rank(Matrix(rows)) != 2 or rank(Matrix(list(m.tolist()) + list(rows))) != 2:
        raise ValueError("basis must be two independent vectors spanning the qutrit row space")
    return Tensor((2, 2, 2), [v for row in rows for v in row])


def classify_3x2x2(a: Tensor, basis: Sequence[Sequence] | None = None) -> EntanglementClass:
    if a.dims != (3, 2, 2):
        raise FormatError(f"classify_3x2x2 needs format 3x2x2, got {a.format}")
    _nonzero(a)
    r = local_ranks(a)
    if 1 in r:
        pattern = separability_pattern(a)
        if len(pattern) == 3:
            name = "SEP"
        else:
            name = "B" + str(next(b[0] for b in pattern if len(b) == 1))
    elif r[0] == 3:
        name = "DEG322" if det_3x2x2(a).is_zero() else "GEN322"
    else:
        name = classify_2x2x2(compress_qutrit(a, basis)).name
    return entanglement_class((3, 2, 2), name)


def classify_2x2x2x2(a: Tensor) -> EntanglementClass:
    if a.dims != (2, 2, 2, 2):
        raise FormatError(f"classify_2x2x2x2 needs format 2x2x2x2, got {a.format}")
    _nonzero(a)
    pattern = separability_pattern(a)
    if len(pattern) > 1:
        name = pattern_class_name(pattern)
    elif det_2x2x2x2(a).is_zero():
        name = "DEG4"
    else:
        name = "GEN4"
    return entanglement_class((2, 2, 2, 2), name)


def _canonical(a: Tensor) -> tuple[Tensor, tuple[int, ...]]:
    perm = a.format.canonical_permutation()
    if perm == tuple(range(a.order)):
        return a, perm
    return a.permute(perm), perm


def classify(a: Tensor) -> EntanglementClass:
    """SLOCC class of ``a``; permuted 3x2x2 formats are reordered first."""
    return classify_report(a).entanglement_class


def classify_report(a: Tensor) -> ClassReport:
    _nonzero(a)
    if a.order == 2:
        cls = entanglement_class(a.dims, f"S{rank(a.flatten({1}))}")
        det = hyperdet(a).value if a.dims[0] == a.dims[1] == 2 else None
        return ClassReport(cls, local_ranks(a), separability_pattern(a), det)
    canon, perm = _canonical(a)
    notes: tuple[str, ...] = ()
    if canon.dims == (2, 2, 2):
        cls = classify_2x2x2(canon)
        det = det_2x2x2(canon)
    elif canon.dims == (3, 2, 2):
        cls = classify_3x2x2(canon)
        det = det_3x2x2(canon)
    elif canon.dims == (2, 2, 2, 2):
        det = det_2x2x2x2(canon)
        cls = classify_2x2x2x2(canon)
        if cls.name in ("GEN4", "DEG4"):
            notes = ("coarse class: SLOCC equivalence of two states inside it is not decided",)
    else:
        raise UnsupportedFormat(f"no classification for format {a.format}")
    return ClassReport(
        cls,
        local_ranks(canon),
        separability_pattern(canon),
        det,
        perm,
        notes,
    )
