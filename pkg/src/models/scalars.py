"""
Exact complex scalars with rational real and imaginary parts.
"""

from fractions import Fraction
from numbers import Rational
from typing import Any, Union

from src.utils.exceptions import ParseError

RationalLike = Union[int, Fraction, str]
ScalarLike = Union["ComplexRational", int, Fraction]


class ComplexRational:
    """
    Element of Q(i) stored as a pair of Fractions.

    Fractions keep themselves reduced with a positive denominator, so
    equality and hashing are exact.
    """

    __slots__ = ("re", "im")

    re: Fraction
    im: Fraction

    def __init__(self, re: RationalLike = 0, im: RationalLike = 0) -> None:
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    @classmethod
    def _make(cls, re: Fraction, im: Fraction) -> "ComplexRational":
        obj = object.__new__(cls)
        object.__setattr__(obj, "re", re)
        object.__setattr__(obj, "im", im)
        return obj

    @classmethod
    def coerce(cls, value: ScalarLike) -> "ComplexRational":
        if isinstance(value, ComplexRational):
            return value
        if isinstance(value, (int, Fraction, Rational)):
            return cls._make(Fraction(value), _ZERO_Q)
        raise TypeError(f"Cannot use {type(value).__name__} as an exact scalar")

    @classmethod
    def from_float(cls, re: float, im: float = 0.0) -> "ComplexRational":
        """Exact binary value of the given floats."""
        return cls._make(Fraction(re), Fraction(im))

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError("ComplexRational is immutable")

    # Arithmetic

    def __add__(self, other: ScalarLike) -> "ComplexRational":
        o = ComplexRational.coerce(other)
        return ComplexRational._make(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: ScalarLike) -> "ComplexRational":
        o = ComplexRational.coerce(other)
        return ComplexRational._make(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: ScalarLike) -> "ComplexRational":
        return ComplexRational.coerce(other) - self

    def __mul__(self, other: ScalarLike) -> "ComplexRational":
        o = ComplexRational.coerce(other)
        if not self.im and not o.im:
            return ComplexRational._make(self.re * o.re, _ZERO_Q)
        return ComplexRational._make(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other: ScalarLike) -> "ComplexRational":
        return self * ComplexRational.coerce(other).inverse()

    def __rtruediv__(self, other: ScalarLike) -> "ComplexRational":
        return ComplexRational.coerce(other) * self.inverse()

    def __neg__(self) -> "ComplexRational":
        return ComplexRational._make(-self.re, -self.im)

    def inverse(self) -> "ComplexRational":
        norm = self.norm_squared()
        if not norm:
            raise ZeroDivisionError("ComplexRational division by zero")
        return ComplexRational._make(self.re / norm, -self.im / norm)

    def conjugate(self) -> "ComplexRational":
        return ComplexRational._make(self.re, -self.im)

    def norm_squared(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def __bool__(self) -> bool:
        return not self.is_zero()

    # Comparison

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ComplexRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self) -> str:
        if not self.im:
            return f"ComplexRational({self.re})"
        return f"ComplexRational({self.re}, {self.im})"

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        sign = "+" if self.im >= 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"

    # Serialization

    def to_json(self) -> list[int]:
        """[re_num, re_den, im_num, im_den]"""
        return [
            self.re.numerator,
            self.re.denominator,
            self.im.numerator,
            self.im.denominator,
        ]

    @classmethod
    def from_json(cls, payload: Any) -> "ComplexRational":
        if isinstance(payload, bool):
            raise ParseError(f"Not an exact scalar: {payload!r}")
        if isinstance(payload, int):
            return cls(payload)
        if not isinstance(payload, (list, tuple)) or len(payload) != 4:
            raise ParseError(
                f"Exact scalar must be [re_num, re_den, im_num, im_den], got {payload!r}"
            )
        if not all(isinstance(p, int) and not isinstance(p, bool) for p in payload):
            raise ParseError(f"Exact scalar parts must be integers: {payload!r}")
        re_num, re_den, im_num, im_den = payload
        if re_den == 0 or im_den == 0:
            raise ParseError(f"Zero denominator in {payload!r}")
        return cls._make(Fraction(re_num, re_den), Fraction(im_num, im_den))


_ZERO_Q = Fraction(0)
ZERO = ComplexRational(0)
ONE = ComplexRational(1)
