"""Exact slopes on a torus, the SL(2,Z) action on them, negative continued
fractions and the solid-torus tight count.

Vector convention (fixed everywhere in this package): the slope p/q is the
column vector (q, p).  The first basis vector (1, 0) is the meridian of a
solid torus (or the section curve -d(pt x Sigma) on the pants side) and the
second (0, 1) is the longitude (or the regular fibre).  A boundary slope 1/n
is therefore the vector (n, 1), and a matrix M sends p/q to p'/q' where
(q', p') = M (q, p).

This is the only convention under which the gluing matrices

    [[3, -1], [1, 0]],  [[6m+1, 6], [m, 1]],  [[6m+2n-5, 2], [-3m-n+2, -1]]

send 1/n to n/(3n-1), (mn+1)/((6m+1)n+6) and ((-3m-n+2)n-1)/((6m+2n-5)n+2)
respectively; with the transposed convention (p, q) none of the three
formulas come out.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


class InvalidSlope(ValueError):
    """Raised for the degenerate pair (0, 0) or an unparsable slope literal."""


class DomainError(ValueError):
    """Raised when an operation is called outside the range it is defined on."""


@dataclass(frozen=True)
class Slope:
    """An extended rational p/q in canonical form.

    Canonical means gcd(|p|, |q|) = 1 and q >= 0, with infinity stored as 1/0.
    Build instances through :func:`canonical` (or :meth:`Slope.of`); the
    constructor rejects non-canonical pairs so that ``==`` is structural.
    """

    num: int
    den: int

    def __post_init__(self):
        if (self.num, self.den) == (0, 0):
            raise InvalidSlope("0/0 is not a slope")
        if self.den < 0 or math.gcd(self.num, self.den) != 1:
            raise InvalidSlope(f"({self.num}, {self.den}) is not canonical; use canonical()")
        if self.den == 0 and self.num != 1:
            raise InvalidSlope("infinity is stored as 1/0")

    @classmethod
    def of(cls, num: int, den: int = 1) -> Slope:
        return canonical(num, den)

    @classmethod
    def from_fraction(cls, x: Fraction | int) -> Slope:
        x = Fraction(x)
        return cls(x.numerator, x.denominator)

    @classmethod
    def parse(cls, text: str) -> Slope:
        """Parse ``"p/q"``, ``"p"`` or ``"inf"``."""
        text = text.strip()
        if text.lower() in ("inf", "infinity", "oo", "1/0"):
            return INFINITY
        try:
            if "/" in text:
                p, q = text.split("/")
                return canonical(int(p), int(q))
            return canonical(int(text), 1)
        except ValueError as exc:
            if isinstance(exc, InvalidSlope):
                raise
            raise InvalidSlope(f"cannot parse slope {text!r}") from exc

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    @property
    def is_integer(self) -> bool:
        return self.den == 1

    def vector(self) -> tuple[int, int]:
        """The column vector (q, p) representing this slope."""
        return (self.den, self.num)

    def as_fraction(self) -> Fraction:
        if self.is_infinite:
            raise DomainError("infinite slope has no rational value")
        return Fraction(self.num, self.den)

    def __neg__(self) -> Slope:
        return reverse_orientation(self)

    def __lt__(self, other: Slope) -> bool:
        return self.as_fraction() < other.as_fraction()

    def __le__(self, other: Slope) -> bool:
        return self.as_fraction() <= other.as_fraction()

    def __str__(self) -> str:
        return "inf" if self.is_infinite else f"{self.num}/{self.den}"

    def __repr__(self) -> str:
        return f"Slope({self})"


INFINITY = Slope(1, 0)


def canonical(raw_num: int, raw_den: int) -> Slope:
    """Canonical representative of the projective pair (raw_num, raw_den)."""
    if raw_num == 0 and raw_den == 0:
        raise InvalidSlope("0/0 is not a slope")
    if raw_den == 0:
        return INFINITY
    g = math.gcd(raw_num, raw_den)
    p, q = raw_num // g, raw_den // g
    if q < 0:
        p, q = -p, -q
    return Slope(p, q)


def reverse_orientation(s: Slope) -> Slope:
    """Slope of the same curve seen from the oppositely oriented torus: p/q -> -p/q."""
    if s.is_infinite:
        return s
    return Slope(-s.num, s.den)


@dataclass(frozen=True)
class Mat2:
    """Integer 2x2 matrix [[a, b], [c, d]] of determinant +1."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.det != 1:
            raise DomainError(f"determinant of {self.rows()} is {self.det}, expected 1")

    @classmethod
    def parse(cls, text: str) -> Mat2:
        """Parse ``"a,b,c,d"`` (row-major)."""
        try:
            a, b, c, d = (int(x) for x in text.split(","))
        except ValueError as exc:
            raise DomainError(f"expected four comma-separated integers, got {text!r}") from exc
        return cls(a, b, c, d)

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.a, self.b), (self.c, self.d))

    def apply(self, v: Sequence[int]) -> tuple[int, int]:
        x, y = v
        return (self.a * x + self.b * y, self.c * x + self.d * y)

    def __matmul__(self, other: Mat2) -> Mat2:
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __str__(self) -> str:
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"


IDENTITY = Mat2(1, 0, 0, 1)


def invert(M: Mat2) -> Mat2:
    return Mat2(M.d, -M.b, -M.c, M.a)


def act(M: Mat2, s: Slope) -> Slope:
    """Image of the slope s under M, using the (q, p) vector convention."""
    q, p = M.apply(s.vector())
    return canonical(p, q)


def numerator_over(s: Slope, t: int) -> int:
    """The integer p with s = p/t.

    Edge rounding is only ever applied to slopes written over a common
    denominator; this recovers that numerator and fails loudly otherwise.
    """
    if t == 0:
        raise DomainError("denominator must be nonzero")
    if s.is_infinite:
        raise DomainError(f"infinite slope cannot be written over {t}")
    p, r = divmod(s.num * t, s.den)
    if r:
        raise DomainError(f"{s} cannot be written with denominator {t}")
    return p


# -- negative continued fractions ------------------------------------------


def neg_cf(s: Slope) -> list[int]:
    """Digits [a0, ..., ak] with s = a0 - 1/(a1 - 1/(... - 1/ak)).

    Defined for finite s <= -1.  Every digit is <= -2 except for s = -1,
    which expands to [-1].
    """
    if s.is_infinite or s.as_fraction() > -1:
        raise DomainError(f"negative continued fraction needs a finite slope <= -1, got {s}")
    x = s.as_fraction()
    digits = []
    while True:
        a = math.floor(x)
        digits.append(a)
        if x == a:
            return digits
        x = -1 / (x - a)


def cf_eval(digits: Sequence[int]) -> Slope:
    if not digits:
        raise DomainError("empty continued fraction")
    x = Fraction(digits[-1])
    for a in reversed(digits[:-1]):
        if x == 0:
            raise DomainError(f"continued fraction {list(digits)} hits a zero tail")
        x = a - 1 / x
    return Slope.from_fraction(x)


def honda_count(s: Slope) -> int:
    """Number of tight contact structures on a solid torus with boundary
    slope s (two dividing curves, meridian slope 0), for finite s <= -1.

    With s = [r0, ..., rk] this is |(r0 + 1)(r1 + 1)...(r_{k-1} + 1) rk|.
    """
    digits = neg_cf(s)
    count = digits[-1]
    for r in digits[:-1]:
        count *= r + 1
    return abs(count)


def fiber_twisting(s: Slope) -> int:
    """Twisting of the regular fibre (0, 1) against a convex torus whose two
    dividing curves have slope s in the (section, fibre) basis: -|q|."""
    return -abs(s.den)
