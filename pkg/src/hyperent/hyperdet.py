"""Hyperdeterminants of the small formats 2x2, 2x2x2, 3x2x2 and 2x2x2x2.

The 2x2x2 value is Cayley's explicit degree-4 polynomial, the 3x2x2 value is
the boundary-format expression ``m1*m4 - m2*m3`` in the maximal minors of the
qutrit flattening, and the 2x2x2x2 value is obtained by Schläfli's
induction: the discriminant of the binary form ``x -> Det(A_0 x0 + A_1 x1)``.

Normalization
-------------
The hyperdeterminant is only defined up to a nonzero constant.  The values
returned here are pinned as follows:

* ``det_2x2x2`` is Cayley's polynomial verbatim; the Schläfli lift of
  ``det_2x2`` reproduces it exactly with constant ``KAPPA_2X2X2 = 1``.
* ``det_2x2x2x2`` is the Schläfli lift of ``det_2x2x2`` divided by
  ``KAPPA_2X2X2X2``.  The constant was fixed once by evaluating the lift on
  the four-parameter family ``a(|0000>+|1111>) + b(|0011>+|1100>) +
  c(|0101>+|1010>) + d(|0110>+|1001>)`` at ``(a, b, c, d) = (1, 2, 3, 5)``
  and dividing by the closed-form product of :func:`generic_4qubit_product`;
  the quotient is 256.  (The tuple ``(1, 2, 3, 4)`` cannot be used: its
  factor ``a - b - c + d`` vanishes.)  With this constant the family's
  hyperdeterminant equals that product, with a plus sign, for
  every parameter choice (``tests/test_hyperdet.py`` checks 20 tuples).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable

from .linalg import Matrix, determinant, minor, solve
from .scalars import ONE, ZERO, GaussianRational, abs_squared
from .tensor import FormatError, Tensor, TensorFormat

__all__ = [
    "BinaryForm",
    "HyperdetResult",
    "HyperdetNotImplemented",
    "PolygonInequalityViolated",
    "DegenerateFormError",
    "DEGREES",
    "KAPPA_2X2X2",
    "KAPPA_2X2X2X2",
    "det_2x2",
    "det_2x2x2",
    "det_3x2x2",
    "qutrit_minors",
    "sylvester_matrix",
    "binary_discriminant",
    "pencil_form",
    "schlafli_lift",
    "det_2x2x2x2",
    "generic_4qubit_state",
    "generic_4qubit_product",
    "hyperdet",
    "concurrence_sq",
    "tangle_sq",
    "concurrence",
    "tangle",
]


class HyperdetNotImplemented(NotImplementedError):
    """The hyperdeterminant exists for this format but no engine is provided."""


class PolygonInequalityViolated(ValueError):
    """``k_max > sum of the other k_j``: the dual variety is not a hypersurface."""


class DegenerateFormError(ArithmeticError):
    """No unimodular substitution made the leading coefficient nonzero."""


# homogeneity degree of Det per format
DEGREES = {(2, 2): 2, (2, 2, 2): 4, (3, 2, 2): 6, (2, 2, 2, 2): 24}

KAPPA_2X2X2 = GaussianRational(1)
KAPPA_2X2X2X2 = GaussianRational(256)

# shears (x0, x1) -> (x0 + t x1, x1) tried in order when c_l vanishes
_SHEARS = (1, -1, 2, -2, 3, -3, 4, -4)


@dataclass(frozen=True)
class BinaryForm:
    """``sum_j c_j x0^(l-j) x1^j``."""

    coefficients: tuple[GaussianRational, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "coefficients", tuple(GaussianRational.coerce(c) for c in self.coefficients)
        )
        if len(self.coefficients) < 2:
            raise ValueError("a binary form needs degree >= 1")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coefficients)

    def __call__(self, x0, x1) -> GaussianRational:
        l = self.degree
        x0, x1 = GaussianRational.coerce(x0), GaussianRational.coerce(x1)
        return sum((c * x0 ** (l - j) * x1 ** j for j, c in enumerate(self.coefficients)), ZERO)

    def shear(self, t) -> "BinaryForm":
        """Substitute ``x0 -> x0 + t*x1`` (a unimodular change of variables)."""
        l = self.degree
        t = GaussianRational.coerce(t)
        out = [ZERO] * (l + 1)
        # c_j (x0 + t x1)^(l-j) x1^j = c_j sum_m C(l-j, m) t^m x0^(l-j-m) x1^(j+m)
        for j, c in enumerate(self.coefficients):
            if c.is_zero():
                continue
            for m in range(l - j + 1):
                out[j + m] = out[j + m] + c * comb(l - j, m) * t ** m
        return BinaryForm(tuple(out))


@dataclass(frozen=True)
class HyperdetResult:
    value: GaussianRational
    format: TensorFormat
    degree: int
    permutation: tuple[int, ...] = ()

    @property
    def is_zero(self) -> bool:
        return self.value.is_zero()


def _require(a: Tensor, dims: tuple[int, ...], name: str):
    if a.dims != dims:
        raise FormatError(f"{name} needs format {'x'.join(map(str, dims))}, got {a.format}")


def det_2x2(a: Tensor) -> GaussianRational:
    _require(a, (2, 2), "det_2x2")
    return a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]


def det_2x2x2(a: Tensor) -> GaussianRational:
    """Cayley's hyperdeterminant of a 2x2x2 array (12 monomials, degree 4)."""
    _require(a, (2, 2, 2), "det_2x2x2")
    a000, a001, a010, a011, a100, a101, a110, a111 = a.entries
    return (
        a000 * a000 * a111 * a111
        + a001 * a001 * a110 * a110
        + a010 * a010 * a101 * a101
        + a100 * a100 * a011 * a011
        - 2 * (
            a000 * a001 * a110 * a111
            + a000 * a010 * a101 * a111
            + a000 * a100 * a011 * a111
            + a001 * a010 * a101 * a110
            + a001 * a100 * a011 * a110
            + a010 * a100 * a011 * a101
        )
        + 4 * (a000 * a011 * a101 * a110 + a001 * a010 * a100 * a111)
    )


def qutrit_minors(a: Tensor) -> tuple[GaussianRational, ...]:
    """``(m1, m2, m3, m4)``: 3x3 minors of the 3x4 qutrit flattening, column j dropped."""
    _require(a, (3, 2, 2), "qutrit_minors")
    m = a.flatten({1})
    return tuple(minor(m, (), (j,)) for j in range(4))


def det_3x2x2(a: Tensor) -> GaussianRational:
    """Boundary-format hyperdeterminant ``m1*m4 - m2*m3`` (degree 6)."""
    m1, m2, m3, m4 = qutrit_minors(a)
    return m1 * m4 - m2 * m3


def sylvester_matrix(f: BinaryForm) -> Matrix:
    """``(2l-1)``-square Sylvester matrix of ``f`` and ``df/dx1``.

    ``l-1`` shifted rows of ``(c0, ..., cl)`` followed by ``l`` shifted rows
    of ``(1*c1, 2*c2, ..., l*cl)``.
    """
    l = f.degree
    c = f.coefficients
    size = 2 * l - 1
    deriv = [j * c[j] for j in range(1, l + 1)]
    rows = []
    for s in range(l - 1):
        rows.append([ZERO] * s + list(c) + [ZERO] * (size - s - l - 1))
    for s in range(l):
        rows.append([ZERO] * s + deriv + [ZERO] * (size - s - l))
    return Matrix(rows)


def _discriminant_nonzero_lead(f: BinaryForm) -> GaussianRational:
    l = f.degree
    sign = -1 if (l * (l - 1) // 2) % 2 else 1
    return sign * determinant(sylvester_matrix(f)) / f.coefficients[-1]


def binary_discriminant(f: BinaryForm) -> GaussianRational:
    """Discriminant of a binary form, normalized so ``c1^2 - 4 c0 c2`` for quadratics.

    Equals ``c_l^(2l-2) prod_{i<j} (r_i - r_j)^2`` over the roots ``r`` of
    ``f(1, t)`` when ``c_l != 0``; zero iff ``f`` has a repeated projective
    root.  A vanishing ``c_l`` is handled by unimodular shears, which leave
    the discriminant unchanged.
    """
    if f.degree < 2:
        raise ValueError("discriminant needs degree >= 2")
    if f.is_zero():
        raise ValueError("discriminant of the zero form")
    if not f.coefficients[-1].is_zero():
        return _discriminant_nonzero_lead(f)
    for t in _SHEARS:
        g = f.shear(t)
        if not g.coefficients[-1].is_zero():
            return _discriminant_nonzero_lead(g)
    raise DegenerateFormError(f"no shear in {_SHEARS} gives a nonzero leading coefficient")


def _pencil(a: Tensor, x0, x1) -> Tensor:
    """``A~(x)_{i1..} = a_{0,i1..} x0 + a_{1,i1..} x1`` (pencil along party 1)."""
    half = len(a.entries) // 2
    lo, hi = a.entries[:half], a.entries[half:]
    return Tensor(a.dims[1:], (u * x0 + v * x1 for u, v in zip(lo, hi)))


def pencil_form(
    a: Tensor,
    inner_det: Callable[[Tensor], GaussianRational],
    degree: int,
    parallel: bool = False,
) -> BinaryForm:
    """Coefficients of ``x -> inner_det(A~(x))`` by exact interpolation.

    ``inner_det`` is treated as an opaque evaluator, sampled at
    ``x = (1, t)`` for ``t = 0..degree`` and at ``(0, 1)``; the latter is a
    consistency check on the leading coefficient.
    """
    if a.dims[0] != 2 or a.order < 2:
        raise FormatError(f"Schläfli pencil needs a 2 x ... format, got {a.format}")
    nodes = list(range(degree + 1))
    points = [(ONE, GaussianRational(t)) for t in nodes] + [(ZERO, ONE)]

    def sample(p):
        return inner_det(_pencil(a, *p))

    if parallel:
        with ThreadPoolExecutor() as pool:
            values = list(pool.map(sample, points))
    else:
        values = [sample(p) for p in points]
    vander = Matrix([[GaussianRational(t) ** j for j in range(degree + 1)] for t in nodes])
    coeffs = solve(vander, values[:-1])
    if coeffs[-1] != values[-1]:
        raise ArithmeticError(
            f"inner determinant is not a binary form of degree {degree} in the pencil"
        )
    return BinaryForm(tuple(coeffs))


def schlafli_lift(
    a: Tensor,
    inner_det: Callable[[Tensor], GaussianRational],
    degree: int,
    parallel: bool = False,
) -> GaussianRational:
    """Discriminant of the pencil form ``Det(A_0 x0 + A_1 x1)`` (unnormalized)."""
    f = pencil_form(a, inner_det, degree, parallel=parallel)
    if f.is_zero():
        return ZERO
    try:
        return binary_discriminant(f)
    except DegenerateFormError:
        return ZERO


def det_2x2x2x2(a: Tensor, parallel: bool = False) -> GaussianRational:
    """Degree-24 hyperdeterminant of a four-qubit array via Schläfli's lift."""
    _require(a, (2, 2, 2, 2), "det_2x2x2x2")
    return schlafli_lift(a, det_2x2x2, 4, parallel=parallel) / KAPPA_2X2X2X2


def generic_4qubit_state(alpha, beta, gamma, delta) -> Tensor:
    """``a(|0000>+|1111>) + b(|0011>+|1100>) + c(|0101>+|1010>) + d(|0110>+|1001>)``."""
    coeffs = {}
    for value, labels in (
        (alpha, ("0000", "1111")),
        (beta, ("0011", "1100")),
        (gamma, ("0101", "1010")),
        (delta, ("0110", "1001")),
    ):
        for lab in labels:
            coeffs[tuple(int(ch) for ch in lab)] = value
    return Tensor.from_dict((2, 2, 2, 2), coeffs)


def generic_4qubit_product(alpha, beta, gamma, delta) -> GaussianRational:
    """Closed-form factorization of Det on :func:`generic_4qubit_state`."""
    a, b, c, d = (GaussianRational.coerce(v) for v in (alpha, beta, gamma, delta))
    factors = [
        a, b, c, d,
        a + b + c + d,
        a + b + c - d,
        a + b - c + d,
        a - b + c + d,
        -a + b + c + d,
        a + b - c - d,
        a - b + c - d,
        a - b - c + d,
    ]
    p = ONE
    for f in factors:
        p = p * f * f
    return p


_ENGINES: dict[tuple[int, ...], Callable[[Tensor], GaussianRational]] = {
    (2, 2): det_2x2,
    (2, 2, 2): det_2x2x2,
    (3, 2, 2): det_3x2x2,
    (2, 2, 2, 2): det_2x2x2x2,
}


def hyperdet(a: Tensor, parallel: bool = False) -> HyperdetResult:
    """Dispatch on format.

    Formats violating the polygon inequality raise
    :class:`PolygonInequalityViolated`; formats where Det exists but is not
    covered here raise :class:`HyperdetNotImplemented`.  Permuted formats
    such as 2x2x3 are reordered to descending dims first; the permutation
    used is reported.
    """
    fmt = a.format
    if not fmt.hyperdet_exists:
        ks = sorted((d - 1 for d in fmt.dims), reverse=True)
        raise PolygonInequalityViolated(
            f"no hyperdeterminant for format {fmt}: k_max={ks[0]} > {sum(ks[1:])}"
        )
    perm = fmt.canonical_permutation()
    canon = a.permute(perm) if perm != tuple(range(fmt.n)) else a
    engine = _ENGINES.get(canon.dims)
    if engine is None:
        raise HyperdetNotImplemented(f"no hyperdeterminant engine for format {fmt}")
    if canon.dims == (2, 2, 2, 2):
        value = det_2x2x2x2(canon, parallel=parallel)
    else:
        value = engine(canon)
    return HyperdetResult(value, fmt, DEGREES[canon.dims], perm)


def concurrence_sq(a: Tensor) -> Fraction:
    """``C^2 = 4 |det A|^2`` on the raw (unnormalized) coefficients."""
    return 4 * abs_squared(det_2x2(a))


def tangle_sq(a: Tensor) -> Fraction:
    """``tau^2 = 16 |Det A|^2`` on the raw (unnormalized) coefficients."""
    return 16 * abs_squared(det_2x2x2(a))


def concurrence(a: Tensor) -> float:
    """Floating-point ``C``; display only."""
    return float(concurrence_sq(a)) ** 0.5


def tangle(a: Tensor) -> float:
    """Floating-point ``tau``; display only."""
    return float(tangle_sq(a)) ** 0.5
