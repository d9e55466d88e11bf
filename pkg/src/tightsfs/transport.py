"""Slope bookkeeping for the convex-surface upper bound: moving slopes
through attaching maps, the common-twist family, edge rounding, and the
transport of the rounded slope to the boundary of the third solid torus.
"""

from __future__ import annotations

from dataclasses import dataclass

from .seifert import FiberedDecomposition, surgery_matrix
from .slopes import DomainError, Mat2, Slope, act, canonical, invert, reverse_orientation


def outside_slope(A: Mat2, inside: Slope) -> Slope:
    """Slope on -d(M - V) of a curve given on d V."""
    return act(A, inside)


def inside_slope(A: Mat2, outside: Slope) -> Slope:
    return act(invert(A), outside)


# -- the manifolds ----------------------------------------------------------


def brieskorn_decomposition(m: int) -> FiberedDecomposition:
    """-Sigma(2, 3, 6m+1) = M(0; 1/2, -1/3, -m/(6m+1)) with its standard gluings."""
    return FiberedDecomposition((
        Mat2(2, 1, -1, 0),
        Mat2(3, -1, 1, 0),
        Mat2(6 * m + 1, 6, m, 1),
    ))


def surgered_decomposition(m: int, leg: int, f: int) -> FiberedDecomposition:
    """Decomposition after f-framed surgery on the singular fibre ``leg`` of
    -Sigma(2, 3, 6m+1).  The untouched fibres keep their order and the
    surgered one becomes the third solid torus."""
    base = brieskorn_decomposition(m)
    kept = [base[i] for i in (1, 2, 3) if i != leg]
    return FiberedDecomposition((kept[0], kept[1], surgery_matrix(base[leg], f)))


def family_matrix_A3(m: int, n: int) -> Mat2:
    """Third gluing of M_m^n (surgery on F1 with framing -3m+2-n)."""
    return Mat2(6 * m + 2 * n - 5, 2, -3 * m - n + 2, -1)


# -- common twisting --------------------------------------------------------


@dataclass(frozen=True)
class CommonTwist:
    m: int
    k: int
    n1: int
    n2: int
    t: int


def solve_common_twist(m: int, k: int) -> CommonTwist:
    """Twisting numbers n1, n2 on V1, V2 at which 3 n1 - 1 = (6m+1) n2 + 6 = t."""
    if m < 1 or k < 0:
        raise DomainError(f"need m >= 1 and k >= 0, got m={m}, k={k}")
    n1 = -(6 * m + 1) * k - (2 * m - 2)
    n2 = -3 * k - 1
    t = -3 * (6 * m + 1) * k - (6 * m - 5)
    if not (3 * n1 - 1 == (6 * m + 1) * n2 + 6 == t):
        raise AssertionError(f"common twist inconsistent at m={m}, k={k}")
    return CommonTwist(m, k, n1, n2, t)


def edge_round(p1: int, p2: int, t: int) -> Slope:
    """Slope after cutting along the vertical annulus between two boundary
    tori of slopes p1/t and p2/t and rounding edges: (p1 + p2 - 1)/t."""
    if t == 0:
        raise DomainError("edge rounding needs a nonzero common denominator")
    return canonical(p1 + p2 - 1, t)


def rounded_to_inside(A3: Mat2, s_round: Slope) -> Slope:
    # The rounded boundary is oriented opposite to -d(M - V3).
    return inside_slope(A3, reverse_orientation(s_round))


def rounded_to_V3(m: int, n: int, s_round: Slope) -> Slope:
    return rounded_to_inside(family_matrix_A3(m, n), s_round)
