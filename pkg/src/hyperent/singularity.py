"""Critical points of ``F(A, x)`` and the linear-algebra tests for the
singular strata of the dual variety.

Only the tests that reduce to exact linear algebra are decided here:
tangency at a *given* point, the ``x°(J)``-section, the Hessian at a critical
point, the node conditions of the 2x2x2 and 3x2x2 formats, and the
separability pattern.  Orbit-closure membership for arbitrary states is not.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

from .linalg import Matrix, determinant, rank
from .scalars import ONE, ZERO, GaussianRational
from .tensor import FormatError, Tensor, gradient, multilinear_eval

__all__ = [
    "NotCriticalError",
    "is_critical_point",
    "xo_point",
    "xo_index",
    "xo_section_member",
    "hessian_matrix",
    "hessian_det",
    "node_membership_3qubit",
    "node1_membership_3x2x2",
    "separability_pattern",
    "format_pattern",
]


class NotCriticalError(ValueError):
    """The Hessian was requested at a point that is not critical."""


def _vectors(x) -> list[tuple[GaussianRational, ...]]:
    xs = [tuple(GaussianRational.coerce(c) for c in v) for v in x]
    for j, v in enumerate(xs, 1):
        if all(c.is_zero() for c in v):
            raise ValueError(f"party {j} vector of a critical-point candidate is zero")
    return xs


def is_critical_point(a: Tensor, x: Sequence[Sequence]) -> bool:
    """``F(A, x) = 0`` and every first partial vanishes at ``x``."""
    xs = _vectors(x)
    if not multilinear_eval(a, xs).is_zero():
        return False
    return all(g.is_zero() for slot in gradient(a, xs) for g in slot)


def _labels(a: Tensor, parties: Iterable[int]) -> frozenset[int]:
    js = frozenset(parties)
    if any(not 1 <= j <= a.order for j in js):
        raise FormatError(f"node label {sorted(js)} is not a subset of 1..{a.order}")
    return js


def xo_index(dims: Sequence[int], parties: Iterable[int]) -> tuple[int, ...]:
    """Position of the 1 in each party vector of ``x°(J)``: 0 on ``J``, ``k_j`` off it."""
    js = set(parties)
    return tuple(0 if j in js else d - 1 for j, d in enumerate(dims, 1))


def xo_point(dims: Sequence[int], parties: Iterable[int]) -> tuple[tuple[GaussianRational, ...], ...]:
    idx = xo_index(dims, parties)
    return tuple(tuple(ONE if i == p else ZERO for i in range(d)) for p, d in zip(idx, dims))


def xo_section_member(a: Tensor, parties: Iterable[int]) -> bool:
    """Every coefficient within Hamming distance 1 of the ``x°(J)`` index is zero."""
    center = xo_index(a.dims, _labels(a, parties))
    if not a[center].is_zero():
        return False
    for j, d in enumerate(a.dims):
        for i in range(d):
            if i == center[j]:
                continue
            idx = list(center)
            idx[j] = i
            if not a[idx].is_zero():
                return False
    return True


def _tangent_indices(xs, chart: bool) -> list[tuple[int, int]]:
    rows = []
    for j, v in enumerate(xs):
        if chart:
            pivot = next(i for i, c in enumerate(v) if not c.is_zero())
            rows.extend((j, i) for i in range(len(v)) if i != pivot)
        else:
            rows.extend((j, i) for i in range(1, len(v)))
    return rows


def hessian_matrix(a: Tensor, x: Sequence[Sequence], chart: bool = False) -> Matrix:
    """Second partials of ``F`` at a critical point ``x``.

    Rows and columns are the pairs ``(party, coordinate)`` in party order.
    By default the coordinates are ``1..k_j`` for every party, which are the
    tangent directions at ``x° = (e_0, ..., e_0)``.  With ``chart=True`` the
    coordinates are all but the first nonzero coordinate of each ``x^(j)``,
    i.e. the tangent directions of the affine chart through ``x`` itself;
    the two agree at ``x°``.

    Diagonal party blocks are identically zero because ``F`` is multilinear.
    """
    xs = _vectors(x)
    if len(xs) != a.order or any(len(v) != d for v, d in zip(xs, a.dims)):
        raise FormatError("point does not match the tensor format")
    if not is_critical_point(a, xs):
        raise NotCriticalError("hessian requested at a non-critical point")
    idx = _tangent_indices(xs, chart)
    entries = {}
    for (j, i), (jj, ii) in itertools.combinations_with_replacement(idx, 2):
        if j == jj:
            entries[(j, i), (jj, ii)] = ZERO
            continue
        s = ZERO
        for multi, v in a.nonzero_items():
            if multi[j] != i or multi[jj] != ii:
                continue
            term = v
            for p, (vec, k) in enumerate(zip(xs, multi)):
                if p != j and p != jj:
                    term = term * vec[k]
            s = s + term
        entries[(j, i), (jj, ii)] = s
        entries[(jj, ii), (j, i)] = s
    return Matrix([[entries[r, c] for c in idx] for r in idx])


def hessian_det(a: Tensor, x: Sequence[Sequence], chart: bool = False) -> GaussianRational:
    """Determinant of :func:`hessian_matrix`; zero signals a non-quadratic critical point."""
    return determinant(hessian_matrix(a, x, chart=chart))


def node_membership_3qubit(a: Tensor, party: int) -> bool:
    """``A`` lies in the node component for ``party``: its 2x4 flattening has rank <= 1."""
    if a.dims != (2, 2, 2):
        raise FormatError(f"node_membership_3qubit needs format 2x2x2, got {a.format}")
    if not 1 <= party <= 3:
        raise FormatError(f"party must be 1, 2 or 3, got {party}")
    return rank(a.flatten({party})) <= 1


def node1_membership_3x2x2(a: Tensor) -> bool:
    """Qutrit flattening of a 3x2x2 state is rank deficient (all four 3x3 minors vanish)."""
    if a.dims != (3, 2, 2):
        raise FormatError(f"node1_membership_3x2x2 needs format 3x2x2, got {a.format}")
    return rank(a.flatten({1})) <= 2


def separability_pattern(a: Tensor) -> tuple[tuple[int, ...], ...]:
    """Finest partition of the parties across which ``A`` is a product.

    Two parties share a block unless some rank-1 cut separates them.  Blocks
    are sorted tuples of 1-based party labels, ordered by their first party.
    """
    if a.is_zero():
        raise ValueError("separability pattern of the zero tensor")
    n = a.order
    parties = range(1, n + 1)
    cuts = []
    for size in range(1, n // 2 + 1):
        for s in itertools.combinations(parties, size):
            if size * 2 == n and 1 not in s:
                continue
            if rank(a.flatten(set(s))) == 1:
                cuts.append(frozenset(s))
    blocks: list[list[int]] = []
    for p in parties:
        for block in blocks:
            q = block[0]
            if all((p in c) == (q in c) for c in cuts):
                block.append(p)
                break
        else:
            blocks.append([p])
    return tuple(tuple(b) for b in blocks)


def format_pattern(pattern: Sequence[Sequence[int]]) -> str:
    """``((1,), (2, 3))`` -> ``"{1}{2,3}"``."""
    return "".join("{" + ",".join(map(str, b)) + "}" for b in pattern)
