"""Counting tight contact structures on the two surgery families M_m^n.

Both families start from -Sigma(2, 3, 6m+1), whose m(m+1)/2 tight
structures sit in a triangle: row a holds a structures whose regular fibre
has maximal twisting -6(m-a)-1.  Surgery on the singular fibre F1 (leg 1/2)
or F2 (leg -1/3) with a fixed smooth framing gives the family.

* The lower bound counts Legendrian realizations row by row.
* The upper bound runs the convex-surface slope schedule through the
  attaching maps and multiplies solid-torus counts.
* The closed forms are the sums of either.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .seifert import SeifertInvariants, is_equivalent, meridian_surgery
from .slopes import (
    INFINITY,
    DomainError,
    Mat2,
    Slope,
    act,
    canonical,
    fiber_twisting,
    honda_count,
    numerator_over,
    reverse_orientation,
)
from .transport import (
    brieskorn_decomposition,
    edge_round,
    inside_slope,
    outside_slope,
    rounded_to_inside,
    solve_common_twist,
    surgered_decomposition,
)


class ConsistencyError(RuntimeError):
    """Two routes to the same number disagreed."""


class Fiber(enum.Enum):
    F1 = 1
    F2 = 2

    @property
    def leg(self) -> int:
        return self.value


@dataclass(frozen=True)
class FamilyParams:
    m: int
    n: int
    fiber: Fiber = Fiber.F1

    def __post_init__(self):
        if isinstance(self.fiber, str):
            object.__setattr__(self, "fiber", Fiber[self.fiber])
        if self.m < 1 or self.n < 1:
            raise DomainError(f"need m >= 1 and n >= 1, got m={self.m}, n={self.n}")

    @property
    def n_limit(self) -> int:
        """Exclusive upper bound on n under which the count is proved."""
        return 18 * self.m + 4 if self.fiber is Fiber.F1 else 12 * self.m + 3

    @property
    def in_range(self) -> bool:
        return self.n < self.n_limit

    def to_dict(self) -> dict:
        return {"m": self.m, "n": self.n, "fiber": self.fiber.name}


def brieskorn(m: int) -> SeifertInvariants:
    return SeifertInvariants(0, (Fraction(1, 2), Fraction(-1, 3), Fraction(-m, 6 * m + 1)))


def regular_twist(m: int, a: int) -> int:
    """Maximal twisting of the regular fibre for structures in row a."""
    return -6 * (m - a) - 1


def twisting_from_outside(A: Mat2, tw: int) -> int:
    """The n with A (n, 1) = (tw, *): twisting on V that shows up as
    regular-fibre twisting tw outside."""
    n, rem = divmod(tw - A.b, A.a)
    if rem:
        raise ConsistencyError(f"twisting {tw} is not realized through {A}")
    return n


def fiber_twist(params: FamilyParams, a: int) -> int:
    A = brieskorn_decomposition(params.m)[params.fiber.leg]
    return twisting_from_outside(A, regular_twist(params.m, a))


def smooth_framing(params: FamilyParams) -> int:
    """Torus framing of the surgery: the top row sees contact (-n) surgery."""
    return fiber_twist(params, 1) - params.n


# -- lower bound ------------------------------------------------------------


@dataclass(frozen=True)
class TriangleRow:
    a: int
    structures: int
    reg_twist: int
    fiber_twist: int
    contact_coeff: int
    choices: int

    def labels(self) -> list[str]:
        return [f"xi_{self.a}^{j}" for j in range(1, self.structures + 1)]

    def to_dict(self) -> dict:
        return {
            "a": self.a,
            "structures": self.structures,
            "reg_twist": self.reg_twist,
            "fiber_twist": self.fiber_twist,
            "contact_coeff": self.contact_coeff,
            "choices": self.choices,
        }


def triangle(params: FamilyParams) -> list[TriangleRow]:
    f = smooth_framing(params)
    rows = []
    for a in range(1, params.m + 1):
        ftw = fiber_twist(params, a)
        coeff = f - ftw
        if coeff > -1:
            raise ConsistencyError(f"row {a}: contact coefficient {coeff} is not negative")
        rows.append(TriangleRow(a, a, regular_twist(params.m, a), ftw, coeff, -coeff))
    return rows


def lower_bound(params: FamilyParams) -> int:
    return sum(row.structures * row.choices for row in triangle(params))


# -- upper bound ------------------------------------------------------------


def bypass_schedule(m: int, l: int) -> Slope:
    """Slope on -d(M - V2) after l bypasses have been pushed into V2.

    Starts at (m-1)/(6m-5) (V2 at twisting -1) and walks one Farey edge per
    step: ((m-l)-1)/(6(m-l)-5).
    """
    u = m - l
    return canonical(u - 1, 6 * u - 5)


@dataclass(frozen=True)
class UpperRow:
    l: int
    tw: int
    n1: int
    slope_V3: Slope
    slope_V2: Slope
    count: int
    s_round: Slope = field(default=INFINITY, compare=False)

    def to_dict(self) -> dict:
        return {
            "l": self.l,
            "tw": self.tw,
            "n1": self.n1,
            "slope_V3": str(self.slope_V3),
            "slope_V2": str(self.slope_V2),
            "count": self.count,
        }


def upper_rows(params: FamilyParams) -> list[UpperRow]:
    m = params.m
    B1, B2, B3 = surgered_decomposition(m, params.fiber.leg, smooth_framing(params)).attaching
    rows = []
    for l in range(m):
        tw = -6 * (m - l) + 5
        n1 = twisting_from_outside(B1, tw)
        s1 = outside_slope(B1, canonical(1, n1))
        s2 = bypass_schedule(m, l)
        s_round = edge_round(numerator_over(s1, tw), numerator_over(s2, tw), tw)
        slope_V3 = rounded_to_inside(B3, s_round)
        slope_V2 = inside_slope(B2, s2)
        count = honda_count(slope_V3) * honda_count(slope_V2)
        rows.append(UpperRow(l, tw, n1, slope_V3, slope_V2, count, s_round))
    return rows


def upper_bound(params: FamilyParams) -> tuple[list[UpperRow], int]:
    rows = upper_rows(params)
    return rows, sum(r.count for r in rows)


def closed_form(params: FamilyParams) -> int:
    m, n = params.m, params.n
    if params.fiber is Fiber.F1:
        num, den = (2 * m + n - 2) * (m + 1) * m, 2
    else:
        num, den = (4 * m - 4 + 3 * n) * (m + 1) * m, 6
    q, r = divmod(num, den)
    if r:
        raise ConsistencyError(f"closed form {num}/{den} is not an integer")
    return q


@dataclass(frozen=True)
class CountReport:
    params: FamilyParams
    rows_lower: list[TriangleRow]
    rows_upper: list[UpperRow]
    lower_total: int
    upper_total: int
    closed_form: int

    @property
    def agrees(self) -> bool:
        return self.lower_total == self.upper_total == self.closed_form

    @property
    def hypothesis_violated(self) -> bool:
        return not self.params.in_range

    def to_dict(self) -> dict:
        return {
            "params": self.params.to_dict(),
            "rows_lower": [r.to_dict() for r in self.rows_lower],
            "rows_upper": [r.to_dict() for r in self.rows_upper],
            "lower_total": self.lower_total,
            "upper_total": self.upper_total,
            "closed_form": self.closed_form,
            "agrees": self.agrees,
            "hypothesis_violated": self.hypothesis_violated,
        }


def count_report(params: FamilyParams) -> CountReport:
    lower = triangle(params)
    upper, upper_total = upper_bound(params)
    return CountReport(
        params,
        lower,
        upper,
        sum(r.structures * r.choices for r in lower),
        upper_total,
        closed_form(params),
    )


# -- maximal twisting -------------------------------------------------------


@dataclass(frozen=True)
class TwistVerdict:
    k: int
    t: int
    n1: int
    n2: int
    s_round: Slope
    slope_V3: Slope
    witness: Slope | None
    witness_twist: int | None
    verdict: str
    reason: str

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "t": self.t,
            "n1": self.n1,
            "n2": self.n2,
            "s_round": str(self.s_round),
            "slope_V3": str(self.slope_V3),
            "witness": None if self.witness is None else str(self.witness),
            "witness_twist": self.witness_twist,
            "verdict": self.verdict,
            "reason": self.reason,
        }


def max_twist_verdict(m: int, n: int, k: int) -> TwistVerdict:
    """Check whether twisting t from the k-th common-twist solution can be
    maximal on M_m^n (fibre F1)."""
    ct = solve_common_twist(m, k)
    A1, A2, A3 = surgered_decomposition(m, 1, smooth_framing(FamilyParams(m, n))).attaching
    s1 = outside_slope(A1, canonical(1, ct.n1))
    s2 = outside_slope(A2, canonical(1, ct.n2))
    s_round = edge_round(numerator_over(s1, ct.t), numerator_over(s2, ct.t), ct.t)
    slope_V3 = rounded_to_inside(A3, s_round)
    base = dict(k=k, t=ct.t, n1=ct.n1, n2=ct.n2, s_round=s_round, slope_V3=slope_V3)

    if k == 0:
        return TwistVerdict(
            **base, witness=None, witness_twist=None,
            verdict="admissible", reason=f"tw = {ct.t}",
        )
    if slope_V3.is_infinite:
        # V3's longitude is a Legendrian curve parallel to dividing curves.
        witness = reverse_orientation(s_round)
        if witness != act(A3, INFINITY):
            raise ConsistencyError("rounded slope and A3(inf) disagree")
        reason = f"slope inf on dV3, {witness} on -d(M-V3)"
    elif slope_V3 < Slope(-1, 1):
        # A torus of slope -1 sits between dV3 and a thin neighbourhood of F3.
        witness = outside_slope(A3, Slope(-1, 1))
        reason = f"slope {slope_V3} < -1 on dV3; the -1 torus is {witness} outside"
    else:
        return TwistVerdict(
            **base, witness=None, witness_twist=None,
            verdict="inconclusive", reason=f"slope {slope_V3} on dV3 gives no -1 torus",
        )
    wt = fiber_twisting(witness)
    if wt > ct.t:
        return TwistVerdict(
            **base, witness=witness, witness_twist=wt,
            verdict="contradiction", reason=f"{reason}; twisting >= {wt} > {ct.t}",
        )
    return TwistVerdict(
        **base, witness=witness, witness_twist=wt,
        verdict="inconclusive", reason=f"{reason}; twisting {wt} <= {ct.t}",
    )


def max_twist_report(m: int, n: int, k_max: int) -> list[TwistVerdict]:
    if m < 1 or n < 1 or k_max < 0:
        raise DomainError(f"need m, n >= 1 and k_max >= 0, got {m}, {n}, {k_max}")
    return [max_twist_verdict(m, n, k) for k in range(k_max + 1)]


# -- target manifolds -------------------------------------------------------


def stated_invariants(params: FamilyParams) -> SeifertInvariants:
    m, n = params.m, params.n
    third = Fraction(5 * m + 1, 6 * m + 1)
    if params.fiber is Fiber.F1:
        return SeifertInvariants(-2, (Fraction(3 * m + n - 2, 6 * m + 2 * n - 5), Fraction(2, 3), third))
    return SeifertInvariants(
        -2, (Fraction(1, 2), Fraction(4 * (m - 1) + 2 * n + 1, 6 * (m - 1) + 3 * n + 1), third)
    )


def target_manifold(params: FamilyParams) -> tuple[SeifertInvariants, SeifertInvariants, bool]:
    surgered = meridian_surgery(
        brieskorn(params.m), params.fiber.leg, smooth_framing(params), normalized=False
    )
    stated = stated_invariants(params)
    return surgered, stated, is_equivalent(surgered, stated)


def check_report(report: CountReport) -> None:
    if not report.agrees:
        raise ConsistencyError(
            f"{report.params}: lower={report.lower_total} upper={report.upper_total} "
            f"closed={report.closed_form}"
        )

