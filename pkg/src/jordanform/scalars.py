"""Exact scalars: rationals and Gaussian rationals, the field Q(i).

Every value is stored reduced with arbitrary-precision integer parts, so
all field operations are exact; nothing in this package ever rounds.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Optional, Union

from .errors import ParseError, ZeroDenominator

RationalLike = Union[int, Fraction]

_RATIONAL = r"-?\d+(?:/\d+)?"
_REAL_RE = re.compile(_RATIONAL)
_IMAG_RE = re.compile(rf"({_RATIONAL})i")
_PAIR_RE = re.compile(rf"({_RATIONAL})([+-])({_RATIONAL})i")


def _fraction(value: RationalLike) -> Fraction:
    if type(value) is Fraction:  # hot path: arithmetic results are Fractions
        return value
    if isinstance(value, float):
        raise TypeError("floating-point values are not exact; use int or Fraction")
    return Fraction(value)


class GaussianRational:
    """A complex scalar a + bi with exact rational real and imaginary parts.

    Values are immutable.  The comparison operators implement the
    lexicographic order on (re, im): Q(i) admits no field order, so this is
    purely a fixed output convention that makes sorted results
    byte-deterministic.
    """

    __slots__ = ("re", "im")

    def __init__(self, re: RationalLike = 0, im: RationalLike = 0):
        object.__setattr__(self, "re", _fraction(re))
        object.__setattr__(self, "im", _fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @staticmethod
    def _coerce(value) -> Optional["GaussianRational"]:
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return GaussianRational(value)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        norm = other.norm_sq()
        if norm == 0:
            raise ZeroDivisionError("division by zero scalar")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / norm,
            (self.im * other.re - self.re * other.im) / norm,
        )

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return (ONE / self) ** (-exponent)
        result = ONE
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def _key(self):
        return (self.re, self.im)

    def __lt__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._key() < other._key()

    def __le__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._key() <= other._key()

    def __gt__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._key() > other._key()

    def __ge__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._key() >= other._key()

    def __bool__(self):
        return not self.is_zero()

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm_sq(self) -> Fraction:
        """re**2 + im**2, an exact nonnegative rational."""
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"GaussianRational({format_scalar(self)!r})"


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def _parse_rational(token: str, original: str) -> Fraction:
    if "/" in token:
        numerator, denominator = token.split("/")
        if int(denominator) == 0:
            raise ZeroDenominator(f"zero denominator in scalar {original!r}")
        return Fraction(int(numerator), int(denominator))
    return Fraction(int(token))


def parse_scalar(text: str) -> GaussianRational:
    """Parse a scalar literal.

    Grammar (no whitespace): ``rational = ["-"] digits ["/" digits]``; a
    scalar is a rational, a rational followed by ``i``, or
    ``rational ("+"|"-") rational "i"``.  Examples: ``-3``, ``1/2``,
    ``1i``, ``1/2-3/4i``.
    """
    if not isinstance(text, str):
        raise ParseError(f"expected a scalar string, got {type(text).__name__}")
    match = _PAIR_RE.fullmatch(text)
    if match:
        real = _parse_rational(match.group(1), text)
        imag = _parse_rational(match.group(3), text)
        if match.group(2) == "-":
            imag = -imag
        return GaussianRational(real, imag)
    match = _IMAG_RE.fullmatch(text)
    if match:
        return GaussianRational(0, _parse_rational(match.group(1), text))
    if _REAL_RE.fullmatch(text):
        return GaussianRational(_parse_rational(text, text))
    hint = " (write 1i for the imaginary unit)" if text.strip("+-") == "i" else ""
    raise ParseError(f"malformed scalar {text!r}{hint}")


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_scalar(value: GaussianRational) -> str:
    """Canonical text form; ``parse_scalar(format_scalar(v)) == v``."""
    if value.im == 0:
        return format_rational(value.re)
    imag = format_rational(value.im) + "i"
    if value.re == 0:
        return imag
    if value.im > 0:
        return format_rational(value.re) + "+" + imag
    return format_rational(value.re) + "-" + format_rational(-value.im) + "i"


def rational_sqrt(value: Fraction) -> Optional[Fraction]:
    """Exact nonnegative square root of a nonnegative rational, or None."""
    if value < 0:
        return None
    num, den = value.numerator, value.denominator
    root_num, root_den = math.isqrt(num), math.isqrt(den)
    if root_num * root_num == num and root_den * root_den == den:
        return Fraction(root_num, root_den)
    return None


def gaussian_sqrt(value: GaussianRational) -> Optional[GaussianRational]:
    """Exact square root in Q(i), or None when no such root exists.

    Of the two roots +-w, the returned one satisfies re(w) > 0, or
    re(w) = 0 and im(w) >= 0.
    """
    a, b = value.re, value.im
    if b == 0:
        root = rational_sqrt(a if a >= 0 else -a)
        if root is None:
            return None
        if a >= 0:
            return GaussianRational(root, 0)
        return GaussianRational(0, root)
    norm_root = rational_sqrt(a * a + b * b)
    if norm_root is None:
        return None
    # w = x + yi with x**2 = (a + |z|)/2 and y = b/(2x); x > 0 since b != 0.
    x = rational_sqrt((a + norm_root) / 2)
    if x is None or x == 0:
        return None
    return GaussianRational(x, b / (2 * x))
