"""Exact Gaussian-rational scalars.

Every coefficient in this package is a complex number whose real and
imaginary parts are arbitrary-precision rationals.  Zero tests are exact,
which is what variety-membership questions (``Det A == 0``, rank drops)
require.  There is deliberately no conversion from ``float``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Integral, Rational as _RationalABC

__all__ = [
    "GaussianRational",
    "ScalarParseError",
    "parse_scalar",
    "format_scalar",
    "abs_squared",
    "ZERO",
    "ONE",
    "I",
]

Rational = Fraction


class ScalarParseError(ValueError):
    """Malformed scalar text.  ``position`` is the 0-based offending offset."""

    def __init__(self, text: str, position: int, reason: str):
        self.text = text
        self.position = position
        self.reason = reason
        super().__init__(f"{reason} at position {position} in {text!r}")


def _coerce_part(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (Integral, _RationalABC)) and not isinstance(value, bool):
        return Fraction(value)
    raise TypeError(f"exact rational expected, got {type(value).__name__}")


class GaussianRational:
    """Immutable complex number ``re + im*i`` with ``Fraction`` parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _coerce_part(re))
        object.__setattr__(self, "im", _coerce_part(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        return cls(value)

    # -- predicates -----------------------------------------------------
    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_real(self) -> bool:
        return self.im == 0

    # -- field operations -----------------------------------------------
    def __add__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by zero Gaussian rational")
        n = o.re * o.re + o.im * o.im
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / n,
            (self.im * o.re - self.re * o.im) / n,
        )

    def __rtruediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return (ONE / self) ** (-exponent)
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def inverse(self) -> "GaussianRational":
        return ONE / self

    # -- comparison / hashing -------------------------------------------
    def __eq__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def abs_squared(a) -> Fraction:
    """``|a|^2 = re^2 + im^2``, exact."""
    a = GaussianRational.coerce(a)
    return a.re * a.re + a.im * a.im


# R := [-]digits[/digits]; scalar := R | R+Ri | R-Ri
_RAT = r"-?\d+(?:/\d+)?"
_SCALAR_RE = re.compile(rf"^(?P<re>{_RAT})(?:(?P<sign>[-+])(?P<im>\d+(?:/\d+)?)i)?$")
_PREFIX_RE = re.compile(rf"^(?:{_RAT}(?:[-+](?:\d+(?:/\d+)?i?)?)?)?")


def _parse_rational(token: str, text: str, offset: int) -> Fraction:
    num, _, den = token.partition("/")
    if den and int(den) == 0:
        raise ScalarParseError(text, offset + token.index("/") + 1, "zero denominator")
    return Fraction(int(num), int(den) if den else 1)


def parse_scalar(text: str) -> GaussianRational:
    """Parse ``R``, ``R+Ri`` or ``R-Ri`` where ``R`` is ``[-]digits[/digits]``.

    >>> parse_scalar("-1/2+2/3i")
    GaussianRational('-1/2+2/3i')
    """
    if not isinstance(text, str) or not text:
        raise ScalarParseError(str(text), 0, "empty scalar")
    m = _SCALAR_RE.match(text)
    if m is None:
        pos = _PREFIX_RE.match(text).end()
        raise ScalarParseError(text, min(pos, len(text) - 1), "malformed scalar")
    re_part = _parse_rational(m.group("re"), text, m.start("re"))
    im_part = Fraction(0)
    if m.group("im") is not None:
        im_part = _parse_rational(m.group("im"), text, m.start("im"))
        if m.group("sign") == "-":
            im_part = -im_part
    return GaussianRational(re_part, im_part)


def _format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_scalar(a) -> str:
    """Canonical text form; always accepted by :func:`parse_scalar`."""
    a = GaussianRational.coerce(a)
    if a.im == 0:
        return _format_rational(a.re)
    im = _format_rational(abs(a.im))
    sign = "-" if a.im < 0 else "+"
    return f"{_format_rational(a.re)}{sign}{im}i"
