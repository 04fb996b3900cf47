"""Decision procedures, bounds and the class spectrum."""

from __future__ import annotations

from fractions import Fraction

import pytest

from conftest import rootless_power_free_suite
from padicpowers import (
    DegreeTooSmall,
    IntPoly,
    NotSquareFree,
    PreconditionNotPowerFree,
    PreconditionRootInField,
    PreconditionRootInRing,
    ScanBudgetExceeded,
    ZeroPolynomial,
    class_spectrum,
    decide_CK,
    decide_CZ,
    enumerate_classes,
    krasner_upper_bound,
    necessary_conditions,
    oracle_decide,
    reciprocal,
    witness_bounds,
)


def P(field, *coeffs):
    return IntPoly(field, coeffs)


# --- decide_CZ fixtures


def test_cz_one_plus_8x(Q2):
    report = decide_CZ(P(Q2, 1, 8), Q2)
    assert report.verdict
    assert report.class_tested == "C_ZK"
    assert (report.M, report.final_m, report.witness_count) == (3, 0, 8)
    assert report.m_history == (0,)
    assert report.counterexample is None
    assert report.bounds.kras_upper is None
    assert report.bounds.max_ord_bound == 0
    assert report.bounds.cardA_log_p == 3
    assert report.bounds.pejkovic_log_p is None


def test_cz_constant_counterexample(Q3):
    report = decide_CZ(P(Q3, 3), Q3)
    assert not report.verdict
    point, cls = report.counterexample
    assert point == Q3.element(0)
    assert cls.label() == "3"
    assert (report.final_m, report.witness_count) == (1, 27)


def test_cz_quartic(Q2):
    report = decide_CZ(P(Q2, 36, 0, 16, 0, 16), Q2)
    assert report.verdict
    assert (report.final_m, report.witness_count) == (2, 32)
    assert report.m_history == (0, 2)


def test_cz_budget(Q2):
    with pytest.raises(ScanBudgetExceeded):
        decide_CZ(P(Q2, 1, 8), Q2, budget=7)


def test_cz_preconditions(Q2):
    with pytest.raises(PreconditionNotPowerFree):
        decide_CZ(P(Q2, 0, 0, 1), Q2)
    with pytest.raises(PreconditionRootInRing):
        decide_CZ(P(Q2, 0, -1, 1), Q2)
    with pytest.raises(ZeroPolynomial):
        decide_CZ(IntPoly(Q2, ()), Q2)


def test_cz_strategies_agree(Q2, Q3):
    for field, coeffs in ((Q2, (1, 8)), (Q2, (36, 0, 16, 0, 16)), (Q3, (1, 0, 0, 27))):
        fast = decide_CZ(IntPoly(field, coeffs), field, strategy="frontier")
        slow = decide_CZ(IntPoly(field, coeffs), field, strategy="rescan")
        assert (fast.verdict, fast.final_m, fast.witness_count) == (
            slow.verdict,
            slow.final_m,
            slow.witness_count,
        )


def test_cz_threads_identical(Q2):
    single = decide_CZ(P(Q2, 36, 0, 16, 0, 16), Q2, threads=1)
    parallel = decide_CZ(P(Q2, 36, 0, 16, 0, 16), Q2, threads=4)
    assert single == parallel


# --- decide_CK fixtures


def test_ck_motivating_quartic(Q2):
    report = decide_CK(P(Q2, 9, 0, 4, 0, 4), Q2)
    assert report.verdict
    assert report.class_tested == "C_K"
    assert (report.final_m, report.witness_count) == (4, 160)
    assert report.m_history == (0, 2, 4)


def test_ck_rejects_via_reciprocal(Q2):
    report = decide_CK(P(Q2, 1, 8), Q2)
    assert not report.verdict
    point, cls = report.counterexample
    assert point == Q2.element(2)
    assert cls.label() == "10"


def test_ck_perfect_square(Q2):
    assert decide_CK(P(Q2, 0, 0, 1), Q2).verdict


def test_ck_zero_polynomial(Q2):
    report = decide_CK(IntPoly(Q2, ()), Q2)
    assert report.verdict
    assert (report.final_m, report.witness_count, report.m_history) == (0, 0, ())
    assert report.bounds is None


def test_ck_root_in_field(Q2):
    report = decide_CK(P(Q2, -17, 0, 1), Q2)
    assert not report.verdict
    point, cls = report.counterexample
    assert cls.label() != "1"
    assert report.witness_count == 0


def test_ck_true_implies_necessary_conditions(Q2, Q3):
    fixtures = [
        (Q2, P(Q2, 9, 0, 4, 0, 4)),
        (Q3, P(Q3, 10, 0, 0, 9, 0, 0, 27, 0, 0, 27)),
    ]
    for field, F in fixtures:
        assert decide_CK(F, field).verdict
        assert necessary_conditions(F, field).all_hold


def test_ck_closed_under_products(Q2):
    F = P(Q2, 9, 0, 4, 0, 4)
    G = P(Q2, 89, 144, 100, 32, 4)  # F(x+2)
    assert decide_CK(F, Q2).verdict
    assert decide_CK(G, Q2).verdict
    assert decide_CK(F * G, Q2).verdict


def test_ck_reciprocal_symmetry_fixtures(Q2):
    for coeffs in ((9, 0, 4, 0, 4), (1, 8), (5, 0, 1)):
        F = IntPoly(Q2, coeffs)
        assert decide_CK(F, Q2).verdict == decide_CK(reciprocal(F), Q2).verdict


# --- bounds


def test_krasner_fixtures(Q2):
    assert krasner_upper_bound(P(Q2, -17, 0, 1), Q2) == 1
    assert krasner_upper_bound(P(Q2, -3, 0, 1), Q2) == 1
    assert krasner_upper_bound(P(Q2, 1, 1, 1), Q2) == 0
    assert krasner_upper_bound(P(Q2, 9, 0, 4, 0, 4), Q2) == 14
    with pytest.raises(NotSquareFree):
        krasner_upper_bound(P(Q2, 0, 0, 1), Q2)
    with pytest.raises(DegreeTooSmall):
        krasner_upper_bound(P(Q2, 1, 2), Q2)


def test_witness_bounds_quadratic(Q2):
    bounds = witness_bounds(P(Q2, -3, 0, 1), Q2)
    assert bounds.kras_upper == 1
    assert bounds.max_ord_bound == 2
    assert bounds.cardA_log_p == 4
    assert bounds.pejkovic_log_p == pytest.approx(4.0)


def test_witness_bounds_quartic(Q2):
    bounds = witness_bounds(P(Q2, 9, 0, 4, 0, 4), Q2)
    assert bounds.kras_upper == 14
    assert bounds.max_ord_bound == 58
    assert bounds.cardA_log_p == 60
    assert bounds.pejkovic_log_p == pytest.approx(4.0 + 48 / 729)


def test_witness_bounds_requires_rootless(Q2):
    with pytest.raises(PreconditionRootInField):
        witness_bounds(P(Q2, -17, 0, 1), Q2)


def test_scan_bounds_hold_on_fixtures(Q2, Q3):
    for field, coeffs in ((Q2, (1, 8)), (Q2, (36, 0, 16, 0, 16)), (Q3, (3,))):
        report = decide_CZ(IntPoly(field, coeffs), field)
        assert report.final_m <= report.bounds.max_ord_bound
        assert len(report.m_history) <= report.bounds.max_ord_bound + 1
        logp = Fraction(field.f) * (report.final_m + report.M)
        assert logp <= report.bounds.cardA_log_p


# --- differential against the oracle


def test_cz_matches_oracle_on_random_suite(Q2, Q3):
    suite = rootless_power_free_suite([Q2, Q3], 30, seed=97)
    for field, F in suite:
        report = decide_CZ(F, field)
        depth = report.final_m + report.M + 2
        assert report.verdict == oracle_decide(F, field, depth), str(F)


def test_ck_reciprocal_symmetry_on_random_suite(Q2, Q3):
    suite = rootless_power_free_suite([Q2, Q3], 25, seed=101)
    for field, F in suite:
        if not F.constant:
            continue
        assert decide_CK(F, field).verdict == decide_CK(reciprocal(F), field).verdict


def test_cz_strategies_agree_on_random_suite(Q2):
    suite = rootless_power_free_suite([Q2], 15, seed=103, max_degree=3, height=6)
    for field, F in suite:
        fast = decide_CZ(F, field, strategy="frontier")
        slow = decide_CZ(F, field, strategy="rescan")
        assert (fast.verdict, fast.final_m, fast.witness_count) == (
            slow.verdict,
            slow.final_m,
            slow.witness_count,
        )


# --- class spectrum


def test_spectrum_paper_example(Q3):
    classes, attains_zero = class_spectrum(P(Q3, 40, 0, 0, 54, 0, 0, 54, 0, 0, 27), Q3)
    assert {cls.label() for cls in classes} == {"1", "4"}
    assert not attains_zero


def test_spectrum_of_member_is_trivial(Q2):
    classes, attains_zero = class_spectrum(P(Q2, 9, 0, 4, 0, 4), Q2)
    assert {cls.label() for cls in classes} == {"1"}
    assert not attains_zero


def test_spectrum_constant(Q3):
    classes, attains_zero = class_spectrum(P(Q3, 2), Q3)
    assert {cls.label() for cls in classes} == {"2"}
    assert not attains_zero


def test_spectrum_perfect_power(Q2):
    classes, attains_zero = class_spectrum(P(Q2, 0, 0, 1), Q2)
    assert {cls.label() for cls in classes} == {"1"}
    assert attains_zero


def test_spectrum_requires_rootless_reduction(Q2):
    with pytest.raises(PreconditionRootInField):
        class_spectrum(P(Q2, -17, 0, 1), Q2)


def test_spectrum_full_when_degree_coprime(Q2):
    # x^3 - 2 is rootless and 2 does not divide its degree, so x -> x^3
    # permutes the classes and the values sweep the whole fan
    classes, attains_zero = class_spectrum(P(Q2, -2, 0, 0, 1), Q2)
    assert classes == set(enumerate_classes(Q2))
    assert not attains_zero
