"""Coefficient tensors of multipartite pure states and the local group action.

A state ``sum a_{i1..in} |i1> (x) ... (x) |in>`` is stored densely in
row-major order.  Parties are numbered from 1, as in the usual
``{1, ..., n}`` labelling of subsystems; coordinate indices start at 0.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .linalg import Matrix, determinant
from .scalars import ONE, ZERO, GaussianRational

__all__ = [
    "TensorFormat",
    "Tensor",
    "LocalOperation",
    "FormatError",
    "flatten",
    "apply_local",
    "pairing",
    "multilinear_eval",
    "gradient",
    "segre_product",
    "ket",
]

# a tuple of party vectors x = (x^(1), ..., x^(n))
PartyVectors = Sequence[Sequence[GaussianRational]]


class FormatError(ValueError):
    """Shapes or formats that do not fit together."""


@dataclass(frozen=True)
class TensorFormat:
    dims: tuple[int, ...]

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        object.__setattr__(self, "dims", dims)
        if not dims:
            raise FormatError("a format needs at least one party")
        if any(d < 2 for d in dims):
            raise FormatError(f"every party dimension must be >= 2, got {dims}")

    @property
    def n(self) -> int:
        return len(self.dims)

    @property
    def size(self) -> int:
        s = 1
        for d in self.dims:
            s *= d
        return s

    def _polygon(self) -> tuple[int, int]:
        ks = sorted((d - 1 for d in self.dims), reverse=True)
        return ks[0], sum(ks[1:])

    @property
    def hyperdet_exists(self) -> bool:
        """Polygon inequality ``k_max <= sum of the other k_j``."""
        top, rest = self._polygon()
        return top <= rest

    @property
    def is_boundary(self) -> bool:
        top, rest = self._polygon()
        return top == rest

    @property
    def is_interior(self) -> bool:
        top, rest = self._polygon()
        return top < rest

    def canonical_permutation(self) -> tuple[int, ...]:
        """Party order (0-based) that sorts dims descending, stable."""
        return tuple(sorted(range(self.n), key=lambda j: -self.dims[j]))

    def indices(self) -> Iterable[tuple[int, ...]]:
        return itertools.product(*(range(d) for d in self.dims))

    def __str__(self):
        return "x".join(str(d) for d in self.dims)


def _as_format(fmt) -> TensorFormat:
    return fmt if isinstance(fmt, TensorFormat) else TensorFormat(tuple(fmt))


class Tensor:
    """Dense coefficient array ``a_{i1..in}`` with a fixed :class:`TensorFormat`."""

    __slots__ = ("format", "entries", "_strides")

    def __init__(self, fmt, entries: Iterable):
        self.format = _as_format(fmt)
        self.entries = tuple(GaussianRational.coerce(v) for v in entries)
        if len(self.entries) != self.format.size:
            raise FormatError(
                f"format {self.format} needs {self.format.size} entries, got {len(self.entries)}"
            )
        strides = []
        s = 1
        for d in reversed(self.format.dims):
            strides.append(s)
            s *= d
        self._strides = tuple(reversed(strides))

    @classmethod
    def zeros(cls, fmt) -> "Tensor":
        fmt = _as_format(fmt)
        return cls(fmt, [ZERO] * fmt.size)

    @classmethod
    def from_dict(cls, fmt, coeffs: Mapping[Sequence[int], object]) -> "Tensor":
        """Sparse constructor: ``{(i1, ..., in): value}``; missing entries are 0."""
        fmt = _as_format(fmt)
        t = cls.zeros(fmt)
        data = list(t.entries)
        for idx, value in coeffs.items():
            data[t._offset(tuple(idx))] = GaussianRational.coerce(value)
        return cls(fmt, data)

    @property
    def dims(self) -> tuple[int, ...]:
        return self.format.dims

    @property
    def order(self) -> int:
        return self.format.n

    def _offset(self, idx: tuple[int, ...]) -> int:
        if len(idx) != self.order:
            raise IndexError(f"multi-index {idx} has wrong length for format {self.format}")
        off = 0
        for i, d, s in zip(idx, self.dims, self._strides):
            if not 0 <= i < d:
                raise IndexError(f"multi-index {idx} out of range for format {self.format}")
            off += i * s
        return off

    def __getitem__(self, idx) -> GaussianRational:
        return self.entries[self._offset(tuple(idx))]

    def items(self):
        return zip(self.format.indices(), self.entries)

    def nonzero_items(self):
        return ((i, v) for i, v in self.items() if not v.is_zero())

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.entries)

    def scale(self, s) -> "Tensor":
        s = GaussianRational.coerce(s)
        return Tensor(self.format, (s * v for v in self.entries))

    def __add__(self, other: "Tensor") -> "Tensor":
        if not isinstance(other, Tensor):
            return NotImplemented
        if other.format != self.format:
            raise FormatError(f"cannot add {self.format} and {other.format}")
        return Tensor(self.format, (a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Tensor") -> "Tensor":
        return self + other.scale(-1)

    def permute(self, perm: Sequence[int]) -> "Tensor":
        """New tensor whose party ``k`` is old party ``perm[k]`` (0-based)."""
        perm = tuple(perm)
        if sorted(perm) != list(range(self.order)):
            raise FormatError(f"{perm} is not a permutation of {self.order} parties")
        fmt = TensorFormat(tuple(self.dims[p] for p in perm))
        data = []
        for new_idx in fmt.indices():
            old = [0] * self.order
            for k, p in enumerate(perm):
                old[p] = new_idx[k]
            data.append(self[old])
        return Tensor(fmt, data)

    def flatten(self, parties) -> Matrix:
        return flatten(self, parties)

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.format == other.format and self.entries == other.entries

    def __hash__(self):
        return hash((self.format, self.entries))

    def __repr__(self):
        terms = " + ".join(
            f"({v})|{''.join(map(str, i))}>" for i, v in self.nonzero_items()
        ) or "0"
        return f"Tensor[{self.format}]({terms})"


def ket(*labels: str, dims: Sequence[int] | None = None, coeffs: Sequence | None = None) -> Tensor:
    """Sum of computational basis states, e.g. ``ket("000", "111")`` for GHZ.

    Digits index the coordinates of each party.  Without ``dims`` every party
    is a qubit.
    """
    if not labels:
        raise ValueError("ket needs at least one basis label")
    n = len(labels[0])
    dims = tuple(dims) if dims is not None else (2,) * n
    coeffs = coeffs if coeffs is not None else [ONE] * len(labels)
    acc: dict[tuple[int, ...], GaussianRational] = {}
    for lab, c in zip(labels, coeffs):
        idx = tuple(int(ch) for ch in lab)
        acc[idx] = acc.get(idx, ZERO) + GaussianRational.coerce(c)
    return Tensor.from_dict(dims, acc)


def _check_parties(a: Tensor, parties) -> tuple[int, ...]:
    js = tuple(sorted(set(parties)))
    if not js or len(js) == a.order:
        raise FormatError("flattening needs a nonempty proper subset of parties")
    if any(not 1 <= j <= a.order for j in js):
        raise FormatError(f"party labels must lie in 1..{a.order}, got {js}")
    return js


def flatten(a: Tensor, parties) -> Matrix:
    """Matricize across the cut ``J | complement``.

    Rows are multi-indices of the parties in ``J`` and columns those of the
    complement, both in lexicographic order with parties in their original
    order.
    """
    js = _check_parties(a, parties)
    rest = tuple(j for j in range(1, a.order + 1) if j not in js)
    row_idx = list(itertools.product(*(range(a.dims[j - 1]) for j in js)))
    col_idx = list(itertools.product(*(range(a.dims[j - 1]) for j in rest)))
    rows = []
    for r in row_idx:
        full = [0] * a.order
        for j, i in zip(js, r):
            full[j - 1] = i
        row = []
        for c in col_idx:
            for j, i in zip(rest, c):
                full[j - 1] = i
            row.append(a[full])
        rows.append(row)
    return Matrix(rows)


def _mode_product(a: Tensor, g: Matrix, party: int) -> Tensor:
    """Contract index ``party`` (1-based) of ``a`` with the columns of ``g``."""
    d = a.dims[party - 1]
    if g.cols != d:
        raise FormatError(f"matrix with {g.cols} columns cannot act on party {party} of dim {d}")
    out_dims = list(a.dims)
    out_dims[party - 1] = g.rows
    fmt = TensorFormat(tuple(out_dims))
    data = []
    for idx in fmt.indices():
        src = list(idx)
        s = ZERO
        for k in range(d):
            gk = g[idx[party - 1], k]
            if gk.is_zero():
                continue
            src[party - 1] = k
            s = s + gk * a[src]
        data.append(s)
    return Tensor(fmt, data)


class LocalOperation:
    """One square matrix per party; acts by ``a -> G^(1) (x) ... (x) G^(n) a``."""

    __slots__ = ("matrices",)

    def __init__(self, matrices: Iterable):
        self.matrices = tuple(m if isinstance(m, Matrix) else Matrix(m) for m in matrices)
        for j, m in enumerate(self.matrices, 1):
            if m.rows != m.cols:
                raise FormatError(f"factor for party {j} is not square: {m.shape}")

    @classmethod
    def identity(cls, fmt) -> "LocalOperation":
        return cls(Matrix.identity(d) for d in _as_format(fmt).dims)

    @classmethod
    def on_party(cls, fmt, party: int, matrix) -> "LocalOperation":
        """Identity everywhere except ``matrix`` on ``party`` (1-based)."""
        mats = [Matrix.identity(d) for d in _as_format(fmt).dims]
        mats[party - 1] = matrix if isinstance(matrix, Matrix) else Matrix(matrix)
        return cls(mats)

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(m.rows for m in self.matrices)

    def determinants(self) -> tuple[GaussianRational, ...]:
        return tuple(determinant(m) for m in self.matrices)

    def is_invertible(self) -> bool:
        return all(not d.is_zero() for d in self.determinants())

    def transpose(self) -> "LocalOperation":
        return LocalOperation(m.T for m in self.matrices)

    def __eq__(self, other):
        if not isinstance(other, LocalOperation):
            return NotImplemented
        return self.matrices == other.matrices

    def __repr__(self):
        return f"LocalOperation({list(self.matrices)!r})"


def apply_local(a: Tensor, g: LocalOperation) -> Tensor:
    if len(g.matrices) != a.order:
        raise FormatError(f"operation has {len(g.matrices)} factors, state has {a.order} parties")
    if g.dims != a.dims:
        raise FormatError(f"operation dims {g.dims} do not match format {a.format}")
    out = a
    for j, m in enumerate(g.matrices, 1):
        out = _mode_product(out, m, j)
    return out


def pairing(a: Tensor, b: Tensor) -> GaussianRational:
    """Bilinear ``F(A, B) = sum a_I b_I`` (no complex conjugation)."""
    if a.format != b.format:
        raise FormatError(f"pairing of {a.format} with {b.format}")
    return sum((x * y for x, y in zip(a.entries, b.entries)), ZERO)


def _check_vectors(a: Tensor, x: PartyVectors) -> list[tuple[GaussianRational, ...]]:
    if len(x) != a.order:
        raise FormatError(f"need {a.order} party vectors, got {len(x)}")
    out = []
    for j, (v, d) in enumerate(zip(x, a.dims), 1):
        if len(v) != d:
            raise FormatError(f"party {j} vector has length {len(v)}, expected {d}")
        out.append(tuple(GaussianRational.coerce(c) for c in v))
    return out


def multilinear_eval(a: Tensor, x: PartyVectors) -> GaussianRational:
    """``F(A, x) = sum a_I x^(1)_{i1} ... x^(n)_{in}``."""
    xs = _check_vectors(a, x)
    total = ZERO
    for idx, v in a.nonzero_items():
        term = v
        for vec, i in zip(xs, idx):
            term = term * vec[i]
            if term.is_zero():
                break
        total = total + term
    return total


def gradient(a: Tensor, x: PartyVectors) -> tuple[tuple[GaussianRational, ...], ...]:
    """Partial derivatives ``dF/dx^(j)_{ij}`` grouped per party.

    Component ``(j, ij)`` is ``A`` contracted with every ``x^(j')``,
    ``j' != j``, evaluated at index ``ij`` of slot ``j``.
    """
    xs = _check_vectors(a, x)
    grads = [[ZERO] * d for d in a.dims]
    for idx, v in a.nonzero_items():
        for j in range(a.order):
            term = v
            for jj, (vec, i) in enumerate(zip(xs, idx)):
                if jj != j:
                    term = term * vec[i]
            grads[j][idx[j]] = grads[j][idx[j]] + term
    return tuple(tuple(g) for g in grads)


def segre_product(vectors: PartyVectors) -> Tensor:
    """The product state ``x^(1) (x) ... (x) x^(n)``."""
    xs = [tuple(GaussianRational.coerce(c) for c in v) for v in vectors]
    if not xs:
        raise FormatError("segre_product needs at least one vector")
    for j, v in enumerate(xs, 1):
        if all(c.is_zero() for c in v):
            raise ValueError(f"party {j} vector is zero")
    fmt = TensorFormat(tuple(len(v) for v in xs))
    data = []
    for idx in fmt.indices():
        p = ONE
        for v, i in zip(xs, idx):
            p = p * v[i]
        data.append(p)
    return Tensor(fmt, data)
