"""Seifert invariants M(e0; r1, ..., rk): normalization, equivalence, the
leg/surgery-coefficient dictionary, meridian slam-dunks and fibred
decompositions.

Legs are numbered from 1, matching the fibre names F1, F2, F3.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .slopes import DomainError, Mat2


class UnsupportedError(ValueError):
    pass


@dataclass(frozen=True)
class SeifertInvariants:
    e0: int
    ratios: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "ratios", tuple(Fraction(r) for r in self.ratios))

    @classmethod
    def parse(cls, text: str) -> SeifertInvariants:
        """Parse ``"M(e0; p1/q1, p2/q2, ...)"``; the ``M`` is optional."""
        m = re.fullmatch(r"\s*M?\s*\(\s*([+-]?\d+)\s*(?:;(.*))?\)\s*", text)
        if m is None:
            raise DomainError(f"cannot parse Seifert invariants {text!r}")
        body = (m.group(2) or "").strip()
        try:
            ratios = tuple(Fraction(r.strip()) for r in body.split(",")) if body else ()
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"bad ratio in {text!r}") from exc
        return cls(int(m.group(1)), ratios)

    def to_dict(self) -> dict:
        return {
            "e0": self.e0,
            "ratios": [{"p": r.numerator, "q": r.denominator} for r in self.ratios],
        }

    @classmethod
    def from_dict(cls, data: dict) -> SeifertInvariants:
        return cls(data["e0"], tuple(Fraction(r["p"], r["q"]) for r in data["ratios"]))

    def __str__(self) -> str:
        if not self.ratios:
            return f"M({self.e0};)"
        legs = ", ".join(f"{r.numerator}/{r.denominator}" for r in self.ratios)
        return f"M({self.e0}; {legs})"


def normalize(inv: SeifertInvariants) -> SeifertInvariants:
    """Move every ratio into (0, 1), absorbing floors into e0 and dropping
    integer legs.  Leg order is kept."""
    e0 = inv.e0
    ratios = []
    for r in inv.ratios:
        fl = math.floor(r)
        e0 += fl
        if r != fl:
            ratios.append(r - fl)
    return SeifertInvariants(e0, tuple(ratios))


def is_equivalent(x: SeifertInvariants, y: SeifertInvariants) -> bool:
    nx, ny = normalize(x), normalize(y)
    return nx.e0 == ny.e0 and sorted(nx.ratios) == sorted(ny.ratios)


def euler_number(inv: SeifertInvariants) -> Fraction:
    return inv.e0 + sum(inv.ratios, Fraction(0))


def leg_coefficient(r: Fraction) -> Fraction:
    """Surgery coefficient of the unknot carrying the leg r: c = -1/r."""
    r = Fraction(r)
    if r == 0:
        raise DomainError("a zero ratio has no surgery coefficient")
    return -1 / r


def coefficient_to_ratio(c: Fraction) -> Fraction:
    c = Fraction(c)
    if c == 0:
        raise DomainError("coefficient 0 does not correspond to a leg")
    return -1 / c


def meridian_surgery(
    inv: SeifertInvariants, leg: int, f: Optional[int], normalized: bool = True
) -> SeifertInvariants:
    """Surgery with integer framing f on a meridian of the leg's unknot.

    The slam-dunk turns the leg coefficient c into c - 1/f, with f measured
    against the longitude of V glued to the section curve.  ``f=None``
    means no surgery.  The result is normalized unless ``normalized=False``,
    in which case only the surgered ratio changes.
    """
    if f is None:
        return inv
    if not 1 <= leg <= len(inv.ratios):
        raise DomainError(f"leg {leg} out of range for {inv}")
    if f == 0:
        raise DomainError("framing 0 changes the topological type; rejected")
    c = leg_coefficient(inv.ratios[leg - 1]) - Fraction(1, f)
    ratios = list(inv.ratios)
    ratios[leg - 1] = coefficient_to_ratio(c)
    out = SeifertInvariants(inv.e0, tuple(ratios))
    return normalize(out) if normalized else out


@dataclass(frozen=True)
class FiberedDecomposition:
    """Pants x S^1 with three solid tori glued by ``attaching[i]``:
    d V_i -> -d(Sigma x S^1), meridian (1, 0) to column one."""

    attaching: tuple[Mat2, Mat2, Mat2]

    def __post_init__(self):
        if len(self.attaching) != 3:
            raise UnsupportedError("a fibred decomposition needs exactly three solid tori")

    def __getitem__(self, leg: int) -> Mat2:
        return self.attaching[leg - 1]

    def ratios(self) -> tuple[Fraction, ...]:
        """Seifert ratios read off the meridian columns (alpha, -beta)."""
        return tuple(Fraction(-A.c, A.a) for A in self.attaching)


def complete_meridian(alpha: int, beta: int) -> Mat2:
    """Attaching matrix [[alpha, x], [-beta, y]] for the leg beta/alpha.

    Among the determinant-one completions, take the one with the smallest
    |x|, preferring x >= 0 on a tie.
    """
    if alpha <= 0 or math.gcd(alpha, beta) != 1:
        raise DomainError(f"leg {beta}/{alpha} must be reduced with positive denominator")
    c = -beta
    if alpha == 1:
        x = 0
    else:
        x0 = (-pow(c, -1, alpha)) % alpha
        x = min((x0, x0 - alpha), key=lambda v: (abs(v), v < 0))
    y, rem = divmod(1 + c * x, alpha)
    assert rem == 0
    return Mat2(alpha, x, c, y)


def seifert_to_decomposition(inv: SeifertInvariants) -> FiberedDecomposition:
    if len(inv.ratios) != 3:
        raise UnsupportedError(f"need exactly three legs, got {len(inv.ratios)}")
    return FiberedDecomposition(
        tuple(complete_meridian(r.denominator, r.numerator) for r in inv.ratios)
    )


def surgery_matrix(A: Mat2, f: int) -> Mat2:
    """Attaching matrix of the new solid torus after f-framed surgery on the
    core of a solid torus glued by A (f measured against A's longitude).

    The new meridian is -(f*mu + lambda) and the new longitude is the old
    meridian mu, i.e. A @ [[-f, 1], [-1, 0]].
    """
    return A @ Mat2(-f, 1, -1, 0)


def same_meridians(x: FiberedDecomposition, y: FiberedDecomposition) -> bool:
    """True when the two decompositions differ only in the choice of
    longitudes, i.e. each pair of matrices shares its first column up to sign."""
    return all(
        (A.a, A.c) in ((B.a, B.c), (-B.a, -B.c)) for A, B in zip(x.attaching, y.attaching)
    )

