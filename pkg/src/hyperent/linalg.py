"""Dense exact matrices over the Gaussian rationals.

Plain fraction Gaussian elimination; the largest matrix this package ever
builds is the 7x7 Sylvester matrix, so nothing cleverer is warranted.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Iterable, Sequence

from .scalars import ONE, ZERO, GaussianRational

if TYPE_CHECKING:
    from .tensor import Tensor

__all__ = [
    "Matrix",
    "rank",
    "determinant",
    "minor",
    "solve",
    "inverse",
    "row_space_basis",
    "local_ranks",
    "bipartite_class",
]


class Matrix:
    """Immutable ``rows x cols`` matrix of :class:`GaussianRational`."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Iterable[Iterable]):
        rows = tuple(tuple(GaussianRational.coerce(v) for v in row) for row in data)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix rows")
        self._data = rows
        self.rows = len(rows)
        self.cols = len(rows[0]) if rows else 0

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls([[ZERO] * cols for _ in range(rows)])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, key):
        i, j = key
        return self._data[i][j]

    def row(self, i: int) -> tuple:
        return self._data[i]

    def tolist(self) -> list[list[GaussianRational]]:
        return [list(r) for r in self._data]

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self._data)) if self.rows else Matrix([])

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        ocols = list(zip(*other._data))
        return Matrix(
            [[sum((a * b for a, b in zip(r, c)), ZERO) for c in ocols] for r in self._data]
        )

    def apply(self, vector: Sequence) -> tuple:
        if len(vector) != self.cols:
            raise ValueError("vector length does not match matrix columns")
        return tuple(sum((a * GaussianRational.coerce(v) for a, v in zip(r, vector)), ZERO)
                     for r in self._data)

    def scale(self, s) -> "Matrix":
        return Matrix([[s * a for a in r] for r in self._data])

    def is_zero(self) -> bool:
        return all(a.is_zero() for r in self._data for a in r)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._data == other._data

    def __hash__(self):
        return hash(self._data)

    def __repr__(self):
        body = "; ".join(" ".join(str(a) for a in r) for r in self._data)
        return f"Matrix([{body}])"


def _echelon(m: Matrix) -> tuple[list[list[GaussianRational]], int, list[int]]:
    """Row-reduce a copy of ``m``.

    Returns ``(rows, swaps, pivot_cols)``.  The pivot in each column is the
    first nonzero entry at or below the current row, so results are fully
    deterministic.
    """
    a = m.tolist()
    nrows, ncols = m.rows, m.cols
    swaps = 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if not a[i][c].is_zero()), None)
        if p is None:
            continue
        if p != r:
            a[r], a[p] = a[p], a[r]
            swaps += 1
        piv = a[r][c]
        for i in range(r + 1, nrows):
            if a[i][c].is_zero():
                continue
            f = a[i][c] / piv
            a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, swaps, pivots


def rank(m: Matrix) -> int:
    """Exact rank; 0 iff ``m`` is the zero matrix."""
    return len(_echelon(m)[2])


def determinant(m: Matrix) -> GaussianRational:
    if m.rows != m.cols:
        raise ValueError(f"determinant of non-square matrix {m.shape}")
    if m.rows == 0:
        return ONE
    a, swaps, pivots = _echelon(m)
    if len(pivots) < m.rows:
        return ZERO
    d = ONE
    for i in range(m.rows):
        d = d * a[i][i]
    return -d if swaps % 2 else d


def minor(m: Matrix, drop_rows: Iterable[int] = (), drop_cols: Iterable[int] = ()) -> GaussianRational:
    """Determinant of ``m`` with the listed (0-based) rows and columns removed."""
    drop_rows, drop_cols = set(drop_rows), set(drop_cols)
    if any(not 0 <= i < m.rows for i in drop_rows) or any(not 0 <= j < m.cols for j in drop_cols):
        raise IndexError("minor index out of range")
    keep_r = [i for i in range(m.rows) if i not in drop_rows]
    keep_c = [j for j in range(m.cols) if j not in drop_cols]
    if len(keep_r) != len(keep_c):
        raise ValueError(f"minor is not square: {len(keep_r)}x{len(keep_c)}")
    return determinant(Matrix([[m[i, j] for j in keep_c] for i in keep_r]))


def solve(m: Matrix, rhs: Sequence) -> list[GaussianRational]:
    """Solve the square nonsingular system ``m x = rhs`` exactly."""
    if m.rows != m.cols or len(rhs) != m.rows:
        raise ValueError("solve needs a square system with matching right-hand side")
    aug = Matrix([list(r) + [b] for r, b in zip(m.tolist(), rhs)])
    a, _, pivots = _echelon(aug)
    if pivots[: m.rows] != list(range(m.rows)):
        raise ZeroDivisionError("singular system")
    n = m.rows
    x = [ZERO] * n
    for i in reversed(range(n)):
        s = a[i][n] - sum((a[i][j] * x[j] for j in range(i + 1, n)), ZERO)
        x[i] = s / a[i][i]
    return x


def inverse(m: Matrix) -> Matrix:
    """Exact inverse; raises ``ZeroDivisionError`` when singular."""
    n = m.rows
    cols = [solve(m, [ONE if i == k else ZERO for i in range(n)]) for k in range(n)]
    return Matrix(cols).T


def row_space_basis(m: Matrix) -> list[tuple]:
    """Nonzero rows of an echelon form of ``m``; spans the row space."""
    a, _, pivots = _echelon(m)
    return [tuple(a[i]) for i in range(len(pivots))]


def local_ranks(a: "Tensor") -> tuple[int, ...]:
    """Rank of every single-party flattening, parties in order."""
    return tuple(rank(a.flatten({j})) for j in range(1, a.order + 1))


def bipartite_class(a: "Tensor") -> int:
    """Index ``j`` of the onion shell ``S_j - S_{j-1}`` containing a bipartite state."""
    if a.order != 2:
        raise ValueError(f"bipartite_class needs 2 parties, got {a.order}")
    return rank(a.flatten({1}))
