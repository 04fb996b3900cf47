"""Multiplicative p-th power classes of a local field.

The unit classes are detected at a finite precision threshold: once two
elements agree well past ord(p) * p / (p - 1), their ratio is a p-th power,
so every question about the quotient group reduces to exact arithmetic on a
finite residue system.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import ArtinCountViolation, ZeroArgument
from .localfield import LocalField, OKElem, residues

__all__ = [
    "PowerClassId",
    "class_of",
    "enumerate_classes",
    "is_pth_power",
    "same_class",
    "threshold_k0",
]


def threshold_k0(field: LocalField) -> int:
    """Smallest k with 1 + m^k contained in the p-th powers, plus margin.

    Equals floor(e * p / (p - 1)) + 1; congruence modulo the k0-th ideal
    power therefore pins down the power class of a unit.
    """
    return field.e * field.p // (field.p - 1) + 1


@lru_cache(maxsize=64)
def _unit_table(field: LocalField) -> tuple[tuple[OKElem, OKElem], ...]:
    """Pairs (c, c^p) for every unit c in the threshold residue system."""
    k0 = threshold_k0(field)
    p = field.p
    return tuple((c, c**p) for c in residues(field, k0) if c.is_unit())


def is_pth_power(x: OKElem, field: LocalField) -> bool:
    """Exact membership of x in the p-th powers of the field.

    Zero counts as a power.  For x = pi^v * u the test requires p | v and a
    unit c with c^p congruent to u at the threshold precision; the search is
    phrased as ord(x - pi^v * c^p) >= v + k0 so no division is ever needed.
    """
    if x.field != field:
        raise ValueError("element belongs to a different field")
    v = x.ord()
    if v is math.inf:
        return True
    if v % field.p != 0:
        return False
    k0 = threshold_k0(field)
    shift = field.uniformizer() ** v
    target = v + k0
    for _, cp in _unit_table(field):
        if (x - shift * cp).ord() >= target:
            return True
    return False


def same_class(x: OKElem, y: OKElem, field: LocalField) -> bool:
    """Whether x and y lie in the same coset modulo p-th powers.

    Both arguments must be nonzero; zero belongs to no coset.
    """
    if not x or not y:
        raise ZeroArgument("power classes are defined for nonzero elements only")
    return is_pth_power(x * y ** (field.p - 1), field)


@dataclass(frozen=True)
class PowerClassId:
    """Canonical identifier of one coset: rep = pi^j * unit_rep.

    unit_index is the position of unit_rep in the deterministic ordering of
    unit class representatives, so (j, unit_index) sorts classes canonically.
    """

    j: int
    unit_index: int
    unit_rep: OKElem
    rep: OKElem

    @property
    def sort_key(self) -> tuple[int, int]:
        return (self.j, self.unit_index)

    def label(self) -> str:
        return str(self.rep)


@lru_cache(maxsize=64)
def _unit_class_reps(field: LocalField) -> tuple[OKElem, ...]:
    """First-match partition of threshold units into power classes.

    The element 1 is seeded first so the trivial class is always
    represented by 1, whatever the raw enumeration order.
    """
    one = field.one()
    reps: list[OKElem] = [one]
    for c, _ in _unit_table(field):
        if c == one:
            continue
        if not any(same_class(c, r, field) for r in reps):
            reps.append(c)
    return tuple(reps)


@lru_cache(maxsize=64)
def enumerate_classes(field: LocalField) -> tuple[PowerClassId, ...]:
    """All power classes as pi^j * u, with j major and units in rep order.

    The count must be p^(e*f + 1) or p^(e*f + 2) (the latter exactly when
    the field contains the p-th roots of unity); anything else signals a
    broken classification and raises ArtinCountViolation.
    """
    p = field.p
    unit_reps = _unit_class_reps(field)
    pi = field.uniformizer()
    out: list[PowerClassId] = []
    for j in range(p):
        shift = pi**j
        for idx, u in enumerate(unit_reps):
            out.append(PowerClassId(j=j, unit_index=idx, unit_rep=u, rep=shift * u))
    n = field.e * field.f
    expected = (p ** (n + 1), p ** (n + 2))
    if len(out) not in expected:
        raise ArtinCountViolation(
            f"found {len(out)} classes, expected one of {expected}",
            count=len(out),
            expected=expected,
        )
    return tuple(out)


def class_of(x: OKElem, field: LocalField) -> PowerClassId:
    """The canonical class containing the nonzero element x."""
    if not x:
        raise ZeroArgument("zero has no power class")
    classes = enumerate_classes(field)
    j = x.ord() % field.p
    for cls in classes:
        if cls.j == j and same_class(x, cls.rep, field):
            return cls
    raise ArtinCountViolation(
        "no class matched; the classification is inconsistent"
    )  # pragma: no cover - would indicate an internal bug
