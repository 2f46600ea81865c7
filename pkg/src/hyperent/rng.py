"""Seeded generation of random exact states and local operations.

The generator is SplitMix64, fixed here so that seeded samples are
bit-for-bit reproducible independently of Python's ``random`` module:

    state <- state + 0x9E3779B97F4A7C15            (mod 2^64)
    z <- (state ^ (state >> 30)) * 0xBF58476D1CE4E5B9
    z <- (z ^ (z >> 27)) * 0x94D049BB133111EB
    output z ^ (z >> 31)

An integer in ``[-b, b]`` is ``output mod (2b + 1) - b``.  A random tensor
draws the real part then the imaginary part of each entry in row-major
order.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .linalg import Matrix, determinant
from .scalars import GaussianRational
from .tensor import LocalOperation, Tensor, TensorFormat

__all__ = [
    "SplitMix64",
    "random_state",
    "random_matrix",
    "random_invertible_operation",
    "random_noninvertible_operation",
    "random_rational",
]

_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def integer(self, bound: int) -> int:
        """Integer in ``[-bound, bound]``."""
        return self.next() % (2 * bound + 1) - bound

    def gaussian(self, bound: int) -> GaussianRational:
        re = self.integer(bound)
        im = self.integer(bound)
        return GaussianRational(re, im)


def _gen(seed_or_gen) -> SplitMix64:
    return seed_or_gen if isinstance(seed_or_gen, SplitMix64) else SplitMix64(seed_or_gen)


def random_state(fmt, seed, bound: int = 3, real: bool = False) -> Tensor:
    """Random Gaussian-integer tensor; all-zero draws are discarded and redrawn."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    fmt = fmt if isinstance(fmt, TensorFormat) else TensorFormat(tuple(fmt))
    g = _gen(seed)
    while True:
        if real:
            entries = [GaussianRational(g.integer(bound)) for _ in range(fmt.size)]
        else:
            entries = [g.gaussian(bound) for _ in range(fmt.size)]
        t = Tensor(fmt, entries)
        if not t.is_zero():
            return t


def random_matrix(d: int, seed, bound: int = 3) -> Matrix:
    g = _gen(seed)
    return Matrix([[g.gaussian(bound) for _ in range(d)] for _ in range(d)])


def random_invertible_operation(dims: Sequence[int], seed, bound: int = 3) -> LocalOperation:
    g = _gen(seed)
    mats = []
    for d in dims:
        while True:
            m = random_matrix(d, g, bound)
            if not determinant(m).is_zero():
                mats.append(m)
                break
    return LocalOperation(mats)


def random_noninvertible_operation(dims: Sequence[int], seed, bound: int = 3) -> LocalOperation:
    """Invertible factors except on one party, whose factor has rank < d."""
    g = _gen(seed)
    op = random_invertible_operation(dims, g, bound)
    party = g.next() % len(dims)
    d = dims[party]
    # build a singular factor: last row is a combination of the others
    rows = [[g.gaussian(bound) for _ in range(d)] for _ in range(d - 1)]
    coeffs = [g.gaussian(bound) for _ in range(d - 1)]
    last = [sum((c * r[k] for c, r in zip(coeffs, rows)), GaussianRational(0)) for k in range(d)]
    mats = list(op.matrices)
    mats[party] = Matrix(rows + [last])
    return LocalOperation(mats)


def random_rational(seed, bound: int = 9) -> Fraction:
    g = _gen(seed)
    den = g.next() % bound + 1
    return Fraction(g.integer(bound), den)
