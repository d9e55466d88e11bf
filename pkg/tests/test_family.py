from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from tightsfs.family import (
    ConsistencyError,
    FamilyParams,
    Fiber,
    bypass_schedule,
    closed_form,
    count_report,
    lower_bound,
    max_twist_report,
    max_twist_verdict,
    smooth_framing,
    target_manifold,
    triangle,
    upper_bound,
)
from tightsfs.seifert import SeifertInvariants
from tightsfs.slopes import INFINITY, DomainError, Slope

F1, F2 = Fiber.F1, Fiber.F2


def row_sum(m, n, step):
    """sum_{a=1}^m (n + step (a-1)) a, by direct summation."""
    return sum((n + step * (a - 1)) * a for a in range(1, m + 1))


def sample_ns(m, fiber):
    limit = 18 * m + 4 if fiber is F1 else 12 * m + 3
    return sorted({1, 2, limit // 2, limit - 1})


# -- params ------------------------------------------------------------------


def test_params_range():
    assert FamilyParams(1, 21, F1).in_range
    assert not FamilyParams(1, 22, F1).in_range
    assert FamilyParams(1, 14, F2).in_range
    assert not FamilyParams(1, 15, F2).in_range
    assert FamilyParams(2, 3, "F2").fiber is F2
    with pytest.raises(DomainError):
        FamilyParams(0, 1)
    with pytest.raises(DomainError):
        FamilyParams(1, 0)


# -- triangle / lower bound -------------------------------------------------


def test_triangle_examples():
    row = triangle(FamilyParams(2, 1, F1))[1]
    assert (row.a, row.reg_twist, row.fiber_twist, row.contact_coeff, row.choices) == (2, -1, -1, -4, 4)
    row = triangle(FamilyParams(1, 1, F1))[0]
    assert (row.reg_twist, row.fiber_twist, row.contact_coeff, row.choices) == (-1, -1, -1, 1)
    row = triangle(FamilyParams(1, 1, F2))[0]
    assert (row.reg_twist, row.fiber_twist, row.contact_coeff, row.choices) == (-1, 0, -1, 1)


def test_triangle_matches_lower_table():
    for m in range(1, 12):
        for n in (1, 4, 9):
            for row in triangle(FamilyParams(m, n, F1)):
                a = row.a
                assert row.structures == a
                assert row.reg_twist == -6 * (m - a) - 1
                assert row.fiber_twist == -3 * m + 3 * a - 1
                assert row.contact_coeff == -3 * a + 3 - n
                assert row.choices == 3 * a - 3 + n
            for row in triangle(FamilyParams(m, n, F2)):
                a = row.a
                assert row.fiber_twist == -2 * (m - a)
                assert row.contact_coeff == -n - 2 * a + 2


def test_triangle_row_independence():
    for m in range(1, 10):
        for n in range(1, 10):
            for fib in Fiber:
                p = FamilyParams(m, n, fib)
                f = smooth_framing(p)
                for row in triangle(p):
                    assert row.choices >= 1
                    assert row.contact_coeff + row.fiber_twist == f


def test_labels():
    assert triangle(FamilyParams(3, 1))[2].labels() == ["xi_3^1", "xi_3^2", "xi_3^3"]


@pytest.mark.parametrize("m, n, fib, f", [(1, 1, F1, -2), (1, 1, F2, -1), (4, 3, F1, -13), (4, 3, F2, -9)])
def test_smooth_framing(m, n, fib, f):
    assert smooth_framing(FamilyParams(m, n, fib)) == f


def test_smooth_framing_formulas():
    for m in range(1, 20):
        for n in range(1, 20):
            assert smooth_framing(FamilyParams(m, n, F1)) == -3 * m + 2 - n
            assert smooth_framing(FamilyParams(m, n, F2)) == -2 * m - n + 2


@pytest.mark.parametrize("m, n, fib, total", [(1, 1, F1, 1), (2, 1, F1, 9), (1, 1, F2, 1), (3, 2, F2, 28)])
def test_lower_bound_examples(m, n, fib, total):
    assert lower_bound(FamilyParams(m, n, fib)) == total


# -- upper bound -------------------------------------------------------------


def test_upper_bound_m1():
    rows, total = upper_bound(FamilyParams(1, 1, F1))
    assert total == 1
    (r,) = rows
    assert (r.tw, r.n1, r.slope_V3, r.slope_V2, r.count) == (-1, 0, Slope(-1, 1), Slope(-1, 1), 1)
    assert upper_bound(FamilyParams(1, 5, F1))[1] == 5


def test_upper_bound_m2():
    rows, total = upper_bound(FamilyParams(2, 1, F1))
    assert [r.slope_V3 for r in rows] == [Slope(-1, 1), Slope(-4, 1)]
    assert [r.slope_V2 for r in rows] == [Slope(-1, 1), Slope(-2, 1)]
    assert [r.count for r in rows] == [1, 8]
    assert total == 9


def test_upper_table_pattern():
    for m in range(1, 12):
        for n in (1, 3, 7, 20):
            for row in upper_bound(FamilyParams(m, n, F1))[0]:
                l = row.l
                assert (row.tw, row.n1) == (-6 * (m - l) + 5, -2 * m + 2 + 2 * l)
                assert row.slope_V3 == Slope(-n - 3 * l, 1)
                assert row.slope_V2 == Slope(-(l + 1), 1)
                assert row.count == (n + 3 * l) * (l + 1)
            for row in upper_bound(FamilyParams(m, n, F2))[0]:
                l = row.l
                assert (row.tw, row.n1) == (-6 * (m - l) + 5, -3 * (m - l) + 2)
                assert row.slope_V3 == Slope(-n - 2 * l, 1)
                assert row.slope_V2 == Slope(-(l + 1), 1)


def test_bypass_schedule_walks_farey_edges():
    for m in range(2, 30):
        for l in range(m - 1):
            s, t = bypass_schedule(m, l), bypass_schedule(m, l + 1)
            assert abs(s.num * t.den - s.den * t.num) == 1
            assert t < s


# -- closed forms ------------------------------------------------------------


@pytest.mark.parametrize("m, n, fib, value", [(2, 1, F1, 9), (1, 1, F2, 1), (3, 2, F2, 28)])
def test_closed_form_examples(m, n, fib, value):
    assert closed_form(FamilyParams(m, n, fib)) == value


@given(st.integers(1, 300), st.integers(1, 300))
def test_closed_form_equals_sum(m, n):
    assert closed_form(FamilyParams(m, n, F1)) == row_sum(m, n, 3)
    assert closed_form(FamilyParams(m, n, F2)) == row_sum(m, n, 2)


@given(st.integers(1, 200), st.integers(1, 200), st.sampled_from(list(Fiber)))
def test_closed_form_monotone(m, n, fib):
    c = closed_form(FamilyParams(m, n, fib))
    assert closed_form(FamilyParams(m, n + 1, fib)) > c
    assert closed_form(FamilyParams(m + 1, n, fib)) > c


def test_three_routes_agree():
    for m in range(1, 9):
        for fib in Fiber:
            for n in sample_ns(m, fib):
                report = count_report(FamilyParams(m, n, fib))
                assert report.agrees, report
                assert report.lower_total == row_sum(m, n, 3 if fib is F1 else 2)
                assert not report.hypothesis_violated


def test_out_of_range_is_flagged_but_computed():
    report = count_report(FamilyParams(1, 30, F1))
    assert report.hypothesis_violated
    assert report.agrees


def test_report_dict():
    d = count_report(FamilyParams(2, 1, F1)).to_dict()
    assert d["params"] == {"m": 2, "n": 1, "fiber": "F1"}
    assert (d["lower_total"], d["upper_total"], d["closed_form"], d["agrees"]) == (9, 9, 9, True)
    assert d["rows_upper"][1]["slope_V3"] == "-4/1"


# -- maximal twisting --------------------------------------------------------


def test_max_twist_examples():
    v0 = max_twist_verdict(1, 1, 0)
    assert v0.verdict == "admissible" and v0.t == -1
    v1 = max_twist_verdict(1, 1, 1)
    assert v1.verdict == "contradiction"
    assert (v1.slope_V3, v1.witness, v1.t) == (INFINITY, Slope(-1, 2), -22)
    v2 = max_twist_verdict(1, 1, 2)
    assert v2.verdict == "contradiction"
    assert v2.slope_V3 == Slope(-23, 1)
    assert v2.witness == Slope(-1, 1)
    assert v2.t == -43


def test_max_twist_k1_witness():
    for m in range(1, 11):
        for n in (1, 5, 40):
            v = max_twist_verdict(m, n, 1)
            assert v.t == -24 * m + 2
            assert v.slope_V3 == INFINITY
            assert v.witness == Slope(-1, 2)
            assert v.verdict == "contradiction"


def test_max_twist_witness_formula():
    for m in range(1, 9):
        for n in range(1, 30):
            v = max_twist_verdict(m, n, 2)
            assert v.witness.as_fraction() == F(3 * m + n - 3, -6 * m - 2 * n + 7)
            assert v.t <= -42 * m - 1


def test_max_twist_sweep():
    for m in range(1, 9):
        for n in range(1, 18 * m + 4):
            report = max_twist_report(m, n, 6)
            assert report[0].verdict == "admissible"
            assert report[0].t == -6 * m + 5
            assert all(v.verdict == "contradiction" for v in report[1:]), (m, n)


def test_max_twist_fails_past_hypothesis():
    for m in range(1, 9):
        for n in (18 * m + 4, 18 * m + 10):
            report = max_twist_report(m, n, 6)
            assert any(v.verdict == "inconclusive" for v in report[2:])
            assert report[2].verdict == "inconclusive"


# -- targets -----------------------------------------------------------------


def test_target_examples():
    surgered, stated, eq = target_manifold(FamilyParams(1, 1, F1))
    assert surgered == SeifertInvariants(0, (F(2, 3), F(-1, 3), F(-1, 7)))
    assert stated == SeifertInvariants(-2, (F(2, 3), F(2, 3), F(6, 7)))
    assert eq
    surgered, stated, eq = target_manifold(FamilyParams(1, 1, F2))
    assert stated == SeifertInvariants(-2, (F(1, 2), F(3, 4), F(6, 7)))
    assert eq


def test_target_sweep():
    for m in range(1, 21):
        for n in range(1, 21):
            for fib in Fiber:
                surgered, _, eq = target_manifold(FamilyParams(m, n, fib))
                assert eq
                if fib is F1:
                    assert surgered.ratios[0] == F(3 * m + n - 2, 6 * m + 2 * n - 5)


def test_surgered_decomposition_matches_target():
    from tightsfs.seifert import is_equivalent
    from tightsfs.transport import surgered_decomposition

    for m in range(1, 15):
        for n in range(1, 15):
            for fib in Fiber:
                p = FamilyParams(m, n, fib)
                d = surgered_decomposition(m, fib.leg, smooth_framing(p))
                assert is_equivalent(SeifertInvariants(0, d.ratios()), target_manifold(p)[1])


def test_consistency_error_is_runtime_error():
    assert issubclass(ConsistencyError, RuntimeError)
