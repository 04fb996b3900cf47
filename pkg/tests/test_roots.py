"""Root search in the valuation ring and in the field."""

from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from padicpowers import (
    IntPoly,
    NotSquareFree,
    has_root_in_field,
    is_pth_power,
    ord,
    root_multiplicity_report,
    roots_in_valuation_ring,
)


def P(field, *coeffs):
    return IntPoly(field, coeffs)


def test_square_root_of_17_exists(Q2):
    report = roots_in_valuation_ring(P(Q2, -17, 0, 1), Q2)
    assert report.exists
    assert report.search_depth_used == 5
    summary = [(str(r.truncation), r.precision) for r in report.roots]
    assert summary == [("9", 5), ("7", 4)]
    assert all(r.certified_by_hensel for r in report.roots)


def test_square_root_of_3_does_not_exist(Q2):
    report = roots_in_valuation_ring(P(Q2, -3, 0, 1), Q2)
    assert not report.exists
    assert report.roots == ()
    assert report.search_depth_used == 2


def test_linear_root(Q3):
    report = roots_in_valuation_ring(P(Q3, -5, 1), Q3)
    assert [(str(r.truncation), r.precision) for r in report.roots] == [("2", 1)]


def test_exact_roots_have_infinite_precision(Q2):
    report = roots_in_valuation_ring(P(Q2, 0, -1, 1), Q2)  # x^2 - x
    assert [(str(r.truncation), r.precision) for r in report.roots] == [
        ("0", math.inf),
        ("1", math.inf),
    ]


def test_eisenstein_roots(E2):
    # x^2 - 2 = (x - t)(x + t) over the ramified quadratic
    report = roots_in_valuation_ring(IntPoly(E2, (-2, 0, 1)), E2)
    assert report.exists
    assert [(str(r.truncation), r.precision) for r in report.roots] == [
        ("t", math.inf),
        ("31*t", 11),
    ]


def test_rejects_repeated_roots(Q2):
    with pytest.raises(NotSquareFree):
        roots_in_valuation_ring(P(Q2, 0, 0, 1), Q2)
    with pytest.raises(NotSquareFree):
        roots_in_valuation_ring(IntPoly(Q2, ()), Q2)


def test_constants_have_no_roots(Q2):
    report = roots_in_valuation_ring(P(Q2, 7), Q2)
    assert not report.exists
    assert report.search_depth_used == 0


def test_has_root_in_field_fixtures(Q2):
    assert has_root_in_field(P(Q2, -17, 0, 1), Q2)
    assert not has_root_in_field(P(Q2, 9, 0, 4, 0, 4), Q2)
    # root 1/2 lies outside the ring but inside the field
    assert has_root_in_field(P(Q2, -1, 2), Q2)
    assert has_root_in_field(P(Q2, 0, 0, -3, 0, 1), Q2)  # x^2 (x^2 - 3)
    assert not has_root_in_field(P(Q2, -3, 0, 1), Q2)


def test_root_multiplicity_report(Q2):
    assert root_multiplicity_report(P(Q2, 0, 0, 1), Q2, 2) == "compliant"
    assert root_multiplicity_report(P(Q2, 0, 0, 0, 1), Q2, 2) == "violates"
    assert root_multiplicity_report(P(Q2, 0, 0, -3, 0, 1), Q2, 2) == "compliant"
    sq = P(Q2, -1, 2) * P(Q2, -1, 2)
    assert root_multiplicity_report(sq, Q2, 2) == "compliant"
    assert root_multiplicity_report(sq * P(Q2, -1, 2), Q2, 2) == "violates"


@given(c=st.integers(min_value=-300, max_value=300).filter(bool))
@settings(max_examples=120, deadline=None)
def test_field_square_roots_match_power_test(Q2, c):
    # x^2 - c has a field root exactly when c is a square in the ring sense
    assert has_root_in_field(P(Q2, -c, 0, 1), Q2) == is_pth_power(Q2.element(c), Q2)


@given(c=st.integers(min_value=-200, max_value=200).filter(bool))
@settings(max_examples=80, deadline=None)
def test_field_cube_roots_match_power_test(Q3, c):
    assert has_root_in_field(P(Q3, -c, 0, 0, 1), Q3) == is_pth_power(Q3.element(c), Q3)


@given(
    coeffs=st.lists(st.integers(min_value=-8, max_value=8), min_size=2, max_size=4)
)
@settings(max_examples=100, deadline=None)
def test_reported_roots_satisfy_hensel(Q2, coeffs):
    G = IntPoly(Q2, coeffs)
    if not G or G.degree == 0:
        return
    try:
        report = roots_in_valuation_ring(G, Q2)
    except NotSquareFree:
        return
    for root in report.roots:
        value = G(root.truncation)
        slope = G.derivative()(root.truncation)
        assert ord(value) > 2 * ord(slope)
        assert root.certified_by_hensel
