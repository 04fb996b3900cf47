"""Membership of polynomial value sets in the p-th powers, decided exactly.

decide_CZ settles whether every value of F on the valuation ring is a p-th
power; decide_CK settles the same question over the whole field by combining
the direct scan with the scan of the reciprocal polynomial.  class_spectrum
generalizes the scan to report every power class the polynomial attains.
All three run a certified finite scan: a residue class is pinned once the
value's ord is at least its level minus the congruence threshold M, and the
scan refines exactly the classes that are not yet pinned.

Quantitative bounds (the Krasner-constant upper bound, the witness-set
cardinality exponent and the height-based exponent for integer inputs) are
computed from resultants and attached to every scan report.
"""

from __future__ import annotations

import math
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import (
    DegreeTooSmall,
    NotSquareFree,
    PreconditionNotPowerFree,
    PreconditionRootInField,
    PreconditionRootInRing,
    ScanBudgetExceeded,
    ZeroPolynomial,
)
from .localfield import BASE, LocalField, OKElem, iter_residues
from .polyring import (
    IntPoly,
    SquareFreeDecomposition,
    reciprocal,
    reduce_power_free,
    resultant,
    squarefree_decompose,
)
from .powerclasses import (
    PowerClassId,
    class_of,
    enumerate_classes,
    is_pth_power,
    threshold_k0,
)
from .roots import has_root_in_field, roots_in_valuation_ring

__all__ = [
    "BoundsReport",
    "DEFAULT_BUDGET",
    "DecisionReport",
    "class_spectrum",
    "decide_CZ",
    "decide_CK",
    "krasner_upper_bound",
    "witness_bounds",
]

DEFAULT_BUDGET = 10_000_000

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class BoundsReport:
    """Quantitative certificates attached to a decision.

    kras_upper bounds the Krasner constant from the discriminant; it is None
    when no square-free part of degree >= 2 exists.  max_ord_bound bounds
    ord F(a) over the valuation ring.  cardA_log_p bounds log_p of the
    witness-set size.  pejkovic_log_p is the height-based exponent, populated
    only for rational-integer inputs over the base field.
    """

    kras_upper: Optional[Rational]
    max_ord_bound: Rational
    cardA_log_p: Rational
    pejkovic_log_p: Optional[float]


@dataclass(frozen=True)
class DecisionReport:
    """Full certificate of a membership scan.

    For verdict False the counterexample names a witness point and the
    nontrivial power class of the value there.  When decide_CK fails on the
    reciprocal side, the witness point belongs to the reciprocal scan: the
    class is that of reciprocal(F_*) at the point, which certifies
    non-membership of F just as directly.
    """

    verdict: bool
    class_tested: str
    M: int
    final_m: int
    witness_count: int
    counterexample: Optional[tuple[OKElem, PowerClassId]]
    m_history: tuple[int, ...]
    bounds: Optional[BoundsReport]


def _check_field(F: IntPoly, field: LocalField) -> None:
    if F.field != field:
        raise ValueError("polynomial belongs to a different field")


# ---------------------------------------------------------------------------
# bound formulas


def krasner_upper_bound(F: IntPoly, field: LocalField) -> Fraction:
    """Upper bound for the largest ord of a difference of two roots of F.

    Uses ord of the discriminant.  When the content ord is carried entirely
    by the leading coefficient the roots are integral and half the
    discriminant ord (normalized by lc) already works; otherwise the roots
    are mapped through eta = lc * xi, whose minimal polynomial is monic with
    integral roots, and the bound is pulled back.
    """
    _check_field(F, field)
    if F.is_zero:
        raise NotSquareFree("the zero polynomial is divisible by every square")
    if F.degree < 2:
        raise DegreeTooSmall("the bound needs at least two roots")
    res = resultant(F, F.derivative())
    if not res:
        raise NotSquareFree("polynomial has a repeated factor")
    d = F.degree
    lc_ord = F.lc.ord()
    disc_ord = res.ord() - lc_ord
    if lc_ord <= min(c.ord() for c in F.coeffs):
        return Fraction(disc_ord - (2 * d - 2) * lc_ord, 2)
    return Fraction(disc_ord + (d - 1) * (d - 2) * lc_ord, 2) - lc_ord


def _radical(dec: SquareFreeDecomposition, field: LocalField) -> IntPoly:
    rad = IntPoly(field, (1,))
    for G, _ in dec.factors:
        rad = rad * G
    return rad


def witness_bounds(F: IntPoly, field: LocalField) -> BoundsReport:
    """Bound package for a polynomial with no roots anywhere in the field.

    max_ord_bound = d * kras_upper + ord(lc); cardA_log_p is the witness
    exponent efp/(p-1) + f*d*kras_upper + f*ord(lc).  Linear polynomials
    always have a field root, so they always raise.
    """
    _check_field(F, field)
    if has_root_in_field(F, field):
        raise PreconditionRootInField("polynomial has a root in the field")
    p, e, f = field.p, field.e, field.f
    d = F.degree
    lc_ord = F.lc.ord()
    if F.degree == 0:
        max_ord = Fraction(lc_ord)
        kras: Optional[Fraction] = None
    else:
        rad = _radical(squarefree_decompose(F), field)
        kras = krasner_upper_bound(rad, field)
        max_ord = d * kras + lc_ord
    card = Fraction(e * f * p, p - 1) + f * (max_ord - lc_ord) + f * lc_ord
    pejkovic: Optional[float] = None
    if field.kind == BASE and d >= 1:
        height = F.height
        pejkovic = (
            p / (p - 1)
            + 1.5 * d * d * (math.log(d) / math.log(p)) * height ** (1 - d)
            + lc_ord
        )
    return BoundsReport(
        kras_upper=kras,
        max_ord_bound=max_ord,
        cardA_log_p=card,
        pejkovic_log_p=pejkovic,
    )


def _scan_bounds(
    dec: SquareFreeDecomposition, F: IntPoly, field: LocalField, M: int
) -> BoundsReport:
    """Bound package valid under the weaker scan precondition (no roots in
    the valuation ring only).  Per-factor: a rootless linear factor attains
    its maximal ord at 0; a factor of degree >= 2 contributes through its
    own Krasner bound, clamped at 0 to absorb non-integral roots.  The
    factor contributions combine through the decomposition identity, whose
    leading coefficients cancel against c^p exactly.  cardA_log_p is the
    log-size of the deepest witness system the scan can reach.
    """
    bound = Fraction(F.lc.ord())
    for G, mult in dec.factors:
        if G.degree == 1:
            contribution = Fraction(G.constant.ord())
        else:
            kras = krasner_upper_bound(G, field)
            contribution = G.lc.ord() + G.degree * max(kras, Fraction(0))
        bound += mult * contribution
    bound -= field.p * field.element(dec.c).ord()
    rad = _radical(dec, field)
    kras_upper = krasner_upper_bound(rad, field) if rad.degree >= 2 else None
    card = Fraction(field.f * (math.floor(bound) + M))
    return BoundsReport(
        kras_upper=kras_upper,
        max_ord_bound=bound,
        cardA_log_p=card,
        pejkovic_log_p=None,
    )


# ---------------------------------------------------------------------------
# the certified scan


def _budget_guard(field: LocalField, m: int, M: int, budget: int) -> None:
    if field.p ** (field.f * (m + M)) > budget:
        raise ScanBudgetExceeded(
            f"witness system of size p^{field.f * (m + M)} exceeds the budget {budget}",
            m=m,
            M=M,
        )


def _evaluate_wave(
    F: IntPoly, points: list[OKElem], threads: int, executor: Optional[ThreadPoolExecutor]
) -> list[OKElem]:
    if executor is None or len(points) < 2 * threads:
        return [F(a) for a in points]
    return list(executor.map(F, points))


def _scan_frontier(
    F: IntPoly,
    field: LocalField,
    M: int,
    budget: int,
    threads: int,
    collect: bool,
):
    """Core scan.  Returns (final_m, m_history, counterexample, classes).

    Every tested point a carries the level L of the residue class it
    represents; the class is pinned once ord F(a) <= L - M, otherwise it is
    refined to level ord F(a) + M and the new subclass representatives join
    the queue.  Waves are evaluated in deterministic order (optionally in
    parallel) and folded sequentially, so reports are identical for any
    thread count.
    """
    _budget_guard(field, 0, M, budget)
    p = field.p
    m = 0
    history = [0]
    classes: Optional[set[PowerClassId]] = set() if collect else None
    pi = field.uniformizer()
    pi_pows: dict[int, OKElem] = {M: pi**M}
    queue: deque[tuple[OKElem, int]] = deque((a, M) for a in iter_residues(field, M))
    executor = ThreadPoolExecutor(max_workers=threads) if threads > 1 else None
    try:
        while queue:
            wave = list(queue)
            queue.clear()
            values = _evaluate_wave(F, [a for a, _ in wave], threads, executor)
            for (a, level), value in zip(wave, values):
                if not value:
                    raise AssertionError("scan hit a zero value despite rootless input")
                if collect:
                    classes.add(class_of(value, field))
                elif not is_pth_power(value, field):
                    return m, tuple(history), (a, class_of(value, field)), classes
                v = value.ord()
                if v > m:
                    m = v
                    _budget_guard(field, m, M, budget)
                    history.append(m)
                if v > level - M:
                    target = v + M
                    shift = pi_pows.get(level)
                    if shift is None:
                        shift = pi**level
                        pi_pows[level] = shift
                    for r in iter_residues(field, target - level):
                        if r:
                            queue.append((a + shift * r, target))
    finally:
        if executor is not None:
            executor.shutdown(wait=False)
    return m, tuple(history), None, classes


def _scan_rescan(F: IntPoly, field: LocalField, M: int, budget: int, collect: bool):
    """Literal full-rescan variant kept for differential testing: on every
    m increase the whole representative system at the new level is swept
    again, with already-settled points skipped through a memo (residue
    systems are nested level to level)."""
    _budget_guard(field, 0, M, budget)
    m = 0
    history = [0]
    classes: Optional[set[PowerClassId]] = set() if collect else None
    memo: dict[tuple[int, ...], int] = {}
    while True:
        restart = False
        for a in iter_residues(field, m + M):
            v = memo.get(a.coords)
            if v is None:
                value = F(a)
                if not value:
                    raise AssertionError("scan hit a zero value despite rootless input")
                if collect:
                    classes.add(class_of(value, field))
                elif not is_pth_power(value, field):
                    return m, tuple(history), (a, class_of(value, field)), classes
                v = value.ord()
                memo[a.coords] = v
            if v > m:
                m = v
                _budget_guard(field, m, M, budget)
                history.append(m)
                restart = True
                break
        if not restart:
            return m, tuple(history), None, classes


def _scan(
    F: IntPoly,
    field: LocalField,
    M: int,
    budget: int,
    threads: int,
    collect: bool,
    strategy: str,
):
    if strategy == "frontier":
        return _scan_frontier(F, field, M, budget, threads, collect)
    if strategy == "rescan":
        return _scan_rescan(F, field, M, budget, collect)
    raise ValueError(f"unknown scan strategy {strategy!r}")


# ---------------------------------------------------------------------------
# decision procedures


def _nonvanishing_point(F: IntPoly, field: LocalField) -> OKElem:
    n = 0
    while True:
        a = field.element(n)
        if F(a):
            return a
        n += 1


def _constant_report(
    reduced: OKElem,
    field: LocalField,
    class_tested: str,
    M: int,
    probe_poly: IntPoly,
) -> DecisionReport:
    """Resolve a scan whose reduced polynomial is a nonzero constant.  The
    counterexample, when needed, is probed on probe_poly (the caller's
    original polynomial) at the first integer point where it does not
    vanish; the value class there equals the constant's class."""
    verdict = is_pth_power(reduced, field)
    v = reduced.ord()
    counterexample = None
    if not verdict:
        a = _nonvanishing_point(probe_poly, field)
        counterexample = (a, class_of(probe_poly(a), field))
    bounds = BoundsReport(
        kras_upper=None,
        max_ord_bound=Fraction(v),
        cardA_log_p=Fraction(field.f * (v + M)),
        pejkovic_log_p=None,
    )
    return DecisionReport(
        verdict=verdict,
        class_tested=class_tested,
        M=M,
        final_m=v,
        witness_count=field.p ** (field.f * (v + M)),
        counterexample=counterexample,
        m_history=(v,),
        bounds=bounds,
    )


def decide_CZ(
    F: IntPoly,
    field: LocalField,
    *,
    budget: int = DEFAULT_BUDGET,
    strategy: str = "frontier",
    threads: int = 1,
) -> DecisionReport:
    """Does F map the whole valuation ring into the p-th powers?

    Precondition: F nonzero, p-th-power-free, and without roots in the
    valuation ring.  The scan starts from the representatives modulo the
    M-th ideal power and refines any class whose value ord exceeds its
    pinning level, so the final representative system has size
    p^(f*(final_m + M)) = witness_count.
    """
    _check_field(F, field)
    if F.is_zero:
        raise ZeroPolynomial("membership is not defined for the zero polynomial")
    dec = squarefree_decompose(F)
    if any(mult >= field.p for _, mult in dec.factors):
        raise PreconditionNotPowerFree(
            "apply reduce_power_free first: a factor has multiplicity >= p"
        )
    for G, _ in dec.factors:
        if roots_in_valuation_ring(G, field).exists:
            raise PreconditionRootInRing("polynomial has a root in the valuation ring")
    M = threshold_k0(field)
    if F.degree == 0:
        return _constant_report(F.constant, field, "C_ZK", M, F)
    bounds = _scan_bounds(dec, F, field, M)
    final_m, history, counterexample, _ = _scan(
        F, field, M, budget, threads, collect=False, strategy=strategy
    )
    return DecisionReport(
        verdict=counterexample is None,
        class_tested="C_ZK",
        M=M,
        final_m=final_m,
        witness_count=field.p ** (field.f * (final_m + M)),
        counterexample=counterexample,
        m_history=history,
        bounds=bounds,
    )


def _probe_near_root(
    P: IntPoly, a0: OKElem, field: LocalField
) -> tuple[OKElem, PowerClassId]:
    """A witness with non-power value, searched first along perturbations of
    a located root (where ord P cycles through the residues of p), then by
    an exhaustive level sweep that provably terminates."""
    pi = field.uniformizer()
    shift = pi
    for _ in range(48):
        for u in iter_residues(field, 1):
            if not u:
                continue
            x = a0 + shift * u
            value = P(x)
            if value and not is_pth_power(value, field):
                return x, class_of(value, field)
        shift = shift * pi
    level = 1
    while True:
        for x in iter_residues(field, level):
            value = P(x)
            if value and not is_pth_power(value, field):
                return x, class_of(value, field)
        level += 1


def _root_counterexample(
    F: IntPoly, reduced: IntPoly, field: LocalField
) -> tuple[OKElem, PowerClassId]:
    for G, _ in squarefree_decompose(reduced).factors:
        report = roots_in_valuation_ring(G, field)
        if report.exists:
            return _probe_near_root(F, report.roots[0].truncation, field)
        rev = reciprocal(G)
        if rev.degree >= 1:
            report = roots_in_valuation_ring(rev, field)
            if report.exists:
                return _probe_near_root(
                    reciprocal(reduced), report.roots[0].truncation, field
                )
    raise AssertionError("root reported in the field but not located")


def decide_CK(
    F: IntPoly,
    field: LocalField,
    *,
    budget: int = DEFAULT_BUDGET,
    strategy: str = "frontier",
    threads: int = 1,
) -> DecisionReport:
    """Does F map the whole field into the p-th powers?

    Pipeline: strip p-th-power factors; a root of the reduced polynomial
    anywhere in the field refutes membership (witnessed near the root);
    otherwise membership holds iff both the reduced polynomial and its
    reciprocal pass the valuation-ring scan.  The zero polynomial is a
    member (0 is a p-th power).
    """
    _check_field(F, field)
    M = threshold_k0(field)
    if F.is_zero:
        return DecisionReport(
            verdict=True,
            class_tested="C_K",
            M=M,
            final_m=0,
            witness_count=0,
            counterexample=None,
            m_history=(),
            bounds=None,
        )
    reduced = reduce_power_free(F, field.p)
    if reduced.degree == 0:
        return _constant_report(reduced.constant, field, "C_K", M, F)
    if has_root_in_field(reduced, field):
        counterexample = _root_counterexample(F, reduced, field)
        return DecisionReport(
            verdict=False,
            class_tested="C_K",
            M=M,
            final_m=0,
            witness_count=0,
            counterexample=counterexample,
            m_history=(),
            bounds=None,
        )
    direct = decide_CZ(reduced, field, budget=budget, strategy=strategy, threads=threads)
    if not direct.verdict:
        return DecisionReport(
            verdict=False,
            class_tested="C_K",
            M=M,
            final_m=direct.final_m,
            witness_count=direct.witness_count,
            counterexample=direct.counterexample,
            m_history=direct.m_history,
            bounds=direct.bounds,
        )
    rev = decide_CZ(
        reciprocal(reduced), field, budget=budget, strategy=strategy, threads=threads
    )
    return DecisionReport(
        verdict=rev.verdict,
        class_tested="C_K",
        M=M,
        final_m=max(direct.final_m, rev.final_m),
        witness_count=direct.witness_count + rev.witness_count,
        counterexample=rev.counterexample,
        m_history=tuple(sorted(set(direct.m_history) | set(rev.m_history))),
        bounds=direct.bounds,
    )


def class_spectrum(
    F: IntPoly,
    field: LocalField,
    *,
    budget: int = DEFAULT_BUDGET,
    strategy: str = "frontier",
    threads: int = 1,
) -> tuple[set[PowerClassId], bool]:
    """The exact set of power classes attained by F on the whole field,
    plus whether the value 0 is attained (by a p-th-power factor's root;
    the reduced polynomial itself must be rootless).

    When p does not divide the reduced degree, every class is attained:
    far from the origin the value class is class(lc) twisted by arbitrary
    unit classes and uniformizer exponents coprime to p.  Otherwise the
    collected classes of the reduced polynomial and of its reciprocal on
    the valuation ring are exactly the classes attained on the field,
    because x outside the ring contributes class(rev F_*(1/x)) there.
    """
    _check_field(F, field)
    if F.is_zero:
        raise ZeroPolynomial("the spectrum of the zero polynomial is not defined")
    reduced = reduce_power_free(F, field.p)
    attains_zero = has_root_in_field(F, field)
    if reduced.degree == 0:
        return {class_of(reduced.constant, field)}, attains_zero
    if has_root_in_field(reduced, field):
        raise PreconditionRootInField(
            "the power-free part has a root in the field; the scan cannot pin classes near it"
        )
    M = threshold_k0(field)
    if reduced.degree % field.p != 0:
        return set(enumerate_classes(field)), attains_zero
    _, _, _, direct = _scan(
        reduced, field, M, budget, threads, collect=True, strategy=strategy
    )
    _, _, _, mirrored = _scan(
        reciprocal(reduced), field, M, budget, threads, collect=True, strategy=strategy
    )
    return direct | mirrored, attains_zero
