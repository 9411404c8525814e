"""Exact slope arithmetic and local Farey-graph structure.

A slope q/p is stored as the primitive integer vector (num, den) = (q, p)
with den >= 0.  The slope at infinity has the single representative (1, 0).
All arithmetic is on Python integers; nothing here touches floating point.

The clockwise order on the Farey circle agrees with the increasing order of
the real line, wrapping from +inf back to -inf through the single point
``INF``.  Orientation-preserving changes of basis (integer matrices of
determinant one) preserve that cyclic order, which is how the paths module
reduces arbitrary clockwise intervals to intervals starting at ``INF``.
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import floor, gcd
from typing import Union

from .errors import SlopeError

__all__ = [
    "Slope",
    "LatticeVector",
    "INF",
    "slope",
    "parse_slope",
    "NonReducedSlopeWarning",
    "product",
    "mediant",
    "ominus",
    "sign_of_product",
    "adjacent",
    "to_infinity_matrix",
    "apply_matrix",
    "invert_matrix",
]


@dataclass(frozen=True)
class LatticeVector:
    """An element of Z^2; ``x`` plays the numerator role, ``y`` the denominator."""

    x: int
    y: int

    def __add__(self, other: "LatticeVector") -> "LatticeVector":
        return LatticeVector(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "LatticeVector") -> "LatticeVector":
        return LatticeVector(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "LatticeVector":
        return LatticeVector(-self.x, -self.y)

    def scale(self, factor: int) -> "LatticeVector":
        return LatticeVector(factor * self.x, factor * self.y)

    def is_primitive(self) -> bool:
        return gcd(self.x, self.y) == 1

    def to_slope(self) -> "Slope":
        return slope(self.x, self.y)

    def to_json(self) -> list[int]:
        return [self.x, self.y]


@dataclass(frozen=True)
class Slope:
    num: int
    den: int

    def __post_init__(self):
        if not isinstance(self.num, int) or not isinstance(self.den, int):
            raise SlopeError("slope components must be integers", num=repr(self.num), den=repr(self.den))
        if self.den < 0:
            raise SlopeError("slope denominator must be nonnegative", num=self.num, den=self.den)
        if self.den == 0 and self.num != 1:
            raise SlopeError("infinity is represented only as (1, 0)", num=self.num, den=self.den)
        if gcd(self.num, self.den) != 1:
            raise SlopeError("slope is not in lowest terms", num=self.num, den=self.den)

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    @property
    def is_integer(self) -> bool:
        return self.den == 1

    @property
    def vector(self) -> LatticeVector:
        return LatticeVector(self.num, self.den)

    def as_fraction(self) -> Fraction:
        self._require_finite()
        return Fraction(self.num, self.den)

    def floor(self) -> int:
        self._require_finite()
        return floor(Fraction(self.num, self.den))

    def _require_finite(self):
        if self.is_infinite:
            raise SlopeError("operation needs a finite slope; use clockwise interval semantics for inf")

    def __lt__(self, other: "Slope") -> bool:
        self._require_finite()
        other._require_finite()
        return self.num * other.den < other.num * self.den

    def __le__(self, other: "Slope") -> bool:
        return self == other or self < other

    def __gt__(self, other: "Slope") -> bool:
        return other < self

    def __ge__(self, other: "Slope") -> bool:
        return self == other or other < self

    def __str__(self) -> str:
        if self.is_infinite:
            return "inf"
        if self.den == 1:
            return str(self.num)
        return f"{self.num}/{self.den}"

    def __repr__(self) -> str:
        return f"Slope({self})"


INF = Slope(1, 0)

Vectorish = Union[Slope, LatticeVector]


def slope(num: int, den: int = 1) -> Slope:
    """Build a slope from any nonzero integer vector, normalizing sign and gcd."""
    if num == 0 and den == 0:
        raise SlopeError("(0, 0) is not a slope")
    if den == 0:
        return INF
    g = gcd(num, den)
    num, den = num // g, den // g
    if den < 0:
        num, den = -num, -den
    return Slope(num, den)


class NonReducedSlopeWarning(UserWarning):
    pass


_SLOPE_RE = re.compile(r"^\s*([+-]?)(\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_slope(text: str, normalize: bool = False) -> Slope:
    """Parse ``"q/p"``, ``"n"`` or ``"inf"``.

    Non-reduced input such as ``"4/2"`` is rejected unless ``normalize`` is
    set, in which case it is reduced and a ``NonReducedSlopeWarning`` is
    emitted so the caller can surface the rewrite.
    """
    if not isinstance(text, str):
        raise SlopeError("slope must be given as a string", value=repr(text))
    stripped = text.strip()
    if stripped.lower() in ("inf", "infinity", "∞", "+inf", "-inf"):
        return INF
    match = _SLOPE_RE.match(stripped)
    if not match:
        raise SlopeError(f"cannot parse slope {text!r}", value=text)
    sign, num_text, den_text = match.groups()
    num = int(num_text) * (-1 if sign == "-" else 1)
    den = int(den_text) if den_text is not None else 1
    if num == 0 and den == 0:
        raise SlopeError("0/0 is not a slope", value=text)
    if den == 0:
        if abs(num) != 1 and not normalize:
            raise SlopeError(f"slope {text!r} is not reduced; did you mean inf", value=text, normalized="inf")
        return INF
    reduced = slope(num, den)
    if (reduced.num, reduced.den) != (num, den):
        if not normalize:
            raise SlopeError(
                f"slope {text!r} is not reduced; did you mean {reduced}",
                value=text,
                normalized=str(reduced),
            )
        warnings.warn(f"slope {text!r} normalized to {reduced}", NonReducedSlopeWarning, stacklevel=2)
    return reduced


def _coords(v: Vectorish) -> tuple[int, int]:
    if isinstance(v, Slope):
        return v.num, v.den
    return v.x, v.y


def product(a: Vectorish, b: Vectorish) -> int:
    """The determinant a.num*b.den - a.den*b.num (signed intersection number)."""
    ax, ay = _coords(a)
    bx, by = _coords(b)
    return ax * by - ay * bx


def adjacent(a: Slope, b: Slope) -> bool:
    return abs(product(a, b)) == 1


def mediant(a: Slope, b: Slope) -> Slope:
    if not adjacent(a, b):
        raise SlopeError(f"{a} and {b} do not share a Farey edge", a=str(a), b=str(b), product=product(a, b))
    return slope(a.num + b.num, a.den + b.den)


def ominus(a: Vectorish, b: Vectorish) -> LatticeVector:
    ax, ay = _coords(a)
    bx, by = _coords(b)
    return LatticeVector(ax - bx, ay - by)


def sign_of_product(a: Slope, b: Slope) -> int:
    """Return 1 when product(a, b) >= 0 and -1 otherwise; finite slopes only."""
    if a.is_infinite or b.is_infinite:
        raise SlopeError("sign_of_product needs finite slopes", a=str(a), b=str(b))
    return 1 if product(a, b) >= 0 else -1


# 2x2 integer matrices as ((a, b), (c, d)) acting on column vectors (num, den).
Matrix = tuple[tuple[int, int], tuple[int, int]]


def to_infinity_matrix(s: Slope) -> Matrix:
    """A determinant-one integer matrix sending the vector of ``s`` to (1, 0)."""
    a, b = s.num, s.den
    # extended Euclid: x*a + y*b == 1
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    assert old_r == 1
    return ((old_x, old_y), (-b, a))


def apply_matrix(m: Matrix, v: Vectorish) -> LatticeVector:
    x, y = _coords(v)
    return LatticeVector(m[0][0] * x + m[0][1] * y, m[1][0] * x + m[1][1] * y)


def invert_matrix(m: Matrix) -> Matrix:
    (a, b), (c, d) = m
    if a * d - b * c != 1:
        raise ValueError("only determinant-one matrices are supported")
    return ((d, -b), (-c, a))
