"""Canonical families, stability radius and integer approximation."""

from __future__ import annotations

import random

import pytest

from padicpowers import (
    DegreeTooSmall,
    IntPoly,
    KTooLargeForMemory,
    MTooSmall,
    PreconditionNotMember,
    PreconditionRootInField,
    UnsupportedField,
    approximate_on_integers,
    decide_CK,
    decide_CZ,
    is_perfect_pth_power_poly,
    make_ck_not_power,
    make_cz_not_ck,
    resultant,
    stability_radius,
    threshold_k0,
)


def P(field, *coeffs):
    return IntPoly(field, coeffs)


def test_make_cz_not_ck_shapes(Q2, Q3, E2):
    assert make_cz_not_ck(Q2) == P(Q2, 1, 8)
    assert make_cz_not_ck(Q3) == P(Q3, 1, 81)
    t = E2.generator()
    assert make_cz_not_ck(E2) == IntPoly(E2, (E2.one(), t**5))


def test_make_cz_not_ck_separates(Q2, Q3, E2):
    for field in (Q2, Q3, E2):
        F = make_cz_not_ck(field)
        assert decide_CZ(F, field).verdict
        assert not decide_CK(F, field).verdict


def test_make_ck_not_power_shapes(Q2, Q3):
    assert make_ck_not_power(Q2, 3) == P(Q2, 9, 0, 4, 0, 4)
    assert make_ck_not_power(Q3, 2) == P(Q3, 10, 0, 0, 9, 0, 0, 27, 0, 0, 27)
    with pytest.raises(MTooSmall):
        make_ck_not_power(Q2, 2)
    with pytest.raises(MTooSmall):
        make_ck_not_power(Q3, 1)


def test_make_ck_not_power_is_member_not_power(Q2, Q3):
    for field, m in ((Q2, 3), (Q2, 4), (Q3, 2)):
        F = make_ck_not_power(field, m)
        assert decide_CK(F, field).verdict
        assert resultant(F, F.derivative())
        assert is_perfect_pth_power_poly(F, field.p) is None


def test_stability_radius_fixture(Q2):
    F = P(Q2, 9, 0, 4, 0, 4)
    M = stability_radius(F, Q2)
    assert M == 60
    G = F + P(Q2, 0, 2 ** (M + 1))
    assert decide_CK(G, Q2).verdict


def test_stability_radius_random_perturbations(Q2):
    F = P(Q2, 9, 0, 4, 0, 4)
    M = stability_radius(F, Q2)
    rng = random.Random(7)
    for _ in range(8):
        shift = 2 ** (M + 1)
        delta = [shift * rng.randint(-3, 3) for _ in range(F.degree + 1)]
        G = F + IntPoly(Q2, delta)
        assert decide_CK(G, Q2).verdict


def test_stability_radius_preconditions(Q2):
    with pytest.raises(DegreeTooSmall):
        stability_radius(P(Q2, 1, 8), Q2)
    with pytest.raises(PreconditionRootInField):
        stability_radius(P(Q2, -17, 0, 1), Q2)
    with pytest.raises(PreconditionNotMember):
        stability_radius(P(Q2, 5, 0, 1), Q2)


def test_approximate_fixtures(Q2, Q3):
    cases = [
        (Q2, P(Q2, 9, 0, 4, 0, 4), 3),
        (Q3, P(Q3, 1, 27), 3),
        (Q2, P(Q2, 1, 8), 2),
    ]
    for field, F, n in cases:
        G = approximate_on_integers(F, field, n)
        p = field.p
        modulus = p ** (n + threshold_k0(field))
        for a in range(modulus):
            diff = F(a).coords[0] - G(a).coords[0] ** p
            assert diff % p**n == 0, (str(F), a)


def test_approximate_square_free_member(Q2):
    # values of (1+2x^2)^2 + 32 x^4 are squares near squares
    F = P(Q2, 1, 0, 4, 0, 36)
    if decide_CZ(F, Q2).verdict:
        G = approximate_on_integers(F, Q2, 2)
        for a in range(16):
            assert (F(a).coords[0] - G(a).coords[0] ** 2) % 4 == 0


def test_approximate_preconditions(Q2, E2):
    with pytest.raises(PreconditionNotMember):
        approximate_on_integers(P(Q2, 1, 2), Q2, 2)
    with pytest.raises(PreconditionNotMember):
        approximate_on_integers(P(Q2, 0, 1), Q2, 2)
    with pytest.raises(UnsupportedField):
        approximate_on_integers(IntPoly(E2, (1,)), E2, 2)
    with pytest.raises(ValueError):
        approximate_on_integers(P(Q2, 1), Q2, 0)
    with pytest.raises(KTooLargeForMemory):
        approximate_on_integers(P(Q2, 1), Q2, 13)


def test_member_with_root_is_not_stable(Q2):
    # x^2 is a member, yet a perturbation of ord <= ep/(p-1) breaks it;
    # no analogue of the radius guarantee exists once a root is present
    F = P(Q2, 0, 0, 1)
    assert decide_CK(F, Q2).verdict
    assert not decide_CK(F + P(Q2, 2), Q2).verdict
