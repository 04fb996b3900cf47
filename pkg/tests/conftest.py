"""Shared field fixtures and the seeded random polynomial suite."""

from __future__ import annotations

import random

import pytest

from padicpowers import (
    BASE,
    EISENSTEIN,
    UNRAMIFIED,
    IntPoly,
    is_power_free,
    make_field,
    roots_in_valuation_ring,
    squarefree_decompose,
)

SUITE_SEED = 20260814


@pytest.fixture(scope="session")
def Q2():
    return make_field(2, BASE)


@pytest.fixture(scope="session")
def Q3():
    return make_field(3, BASE)


@pytest.fixture(scope="session")
def Q5():
    return make_field(5, BASE)


@pytest.fixture(scope="session")
def E2():
    # totally ramified: x^2 - 2, the field Q_2(sqrt 2)
    return make_field(2, EISENSTEIN, (-2, 0, 1))


@pytest.fixture(scope="session")
def U2():
    # unramified quadratic: x^2 + x + 1
    return make_field(2, UNRAMIFIED, (1, 1, 1))


def rootless_power_free_suite(fields, count, *, max_degree=4, height=10, seed=SUITE_SEED):
    """Deterministic sample of power-free polynomials without ring roots.

    Rejection sampling: draw integer coefficients in [-height, height] and
    keep F only when it is power-free and no square-free factor has a root
    in the valuation ring (the preconditions of the scan deciders).
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        field = fields[rng.randrange(len(fields))]
        degree = rng.randint(1, max_degree)
        coeffs = [rng.randint(-height, height) for _ in range(degree + 1)]
        if not any(coeffs):
            continue
        F = IntPoly(field, coeffs)
        if F.degree == 0 or not is_power_free(F, field.p):
            continue
        if any(
            roots_in_valuation_ring(G, field).exists
            for G, _ in squarefree_decompose(F).factors
        ):
            continue
        out.append((field, F))
    return out
