"""Exact arithmetic in three concrete local-field models.

Supported models: the base field Q_p, an unramified extension generated by a
root of a monic polynomial that is irreducible mod p, and a totally ramified
extension generated by a root of an Eisenstein polynomial.  Ring-of-integers
elements are unbounded-integer coordinate vectors in the power basis of the
generator, so all arithmetic is exact and reductions are always explicit.
"""

from __future__ import annotations

import math
from functools import lru_cache
from itertools import product
from typing import Iterator, Sequence, Union

from .errors import (
    KTooLargeForMemory,
    MixedTowerUnsupported,
    NotEisenstein,
    NotIrreducibleModP,
    NotPrime,
    UnsupportedField,
)

__all__ = [
    "BASE",
    "EISENSTEIN",
    "LocalField",
    "OKElem",
    "RESIDUE_CAP",
    "UNRAMIFIED",
    "congruent",
    "iter_residues",
    "make_field",
    "ord",
    "reduce_mod",
    "residues",
]

BASE = "base"
UNRAMIFIED = "unramified"
EISENSTEIN = "eisenstein"

RESIDUE_CAP = 1_000_000  # guard against runaway residue enumerations

ElementLike = Union[int, Sequence[int], "OKElem"]

_builtin_ord = ord  # the module exports its own `ord`


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    k = 5
    while k * k <= n:
        if n % k == 0 or n % (k + 2) == 0:
            return False
        k += 6
    return True


def _vp(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


# ---------------------------------------------------------------------------
# tiny GF(p)[x] toolkit, only used to validate unramified defining polynomials


def _gf_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _gf_mulmod(a: list[int], b: list[int], g: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    # reduce modulo the monic polynomial g
    n = len(g) - 1
    for i in range(len(out) - 1, n - 1, -1):
        c = out[i]
        if c:
            out[i] = 0
            for j in range(n):
                out[i - n + j] = (out[i - n + j] - c * g[j]) % p
    return _gf_trim(out[:n])


def _gf_powmod(a: list[int], e: int, g: list[int], p: int) -> list[int]:
    result = [1]
    base = a[:]
    while e:
        if e & 1:
            result = _gf_mulmod(result, base, g, p)
        base = _gf_mulmod(base, base, g, p)
        e >>= 1
    return result


def _gf_sub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(n):
        ai = a[i] if i < len(a) else 0
        bi = b[i] if i < len(b) else 0
        out[i] = (ai - bi) % p
    return _gf_trim(out)


def _gf_mod(a: list[int], b: list[int], p: int) -> list[int]:
    a = _gf_trim(a[:])
    inv = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        q = (a[-1] * inv) % p
        shift = len(a) - len(b)
        for j, bj in enumerate(b):
            a[shift + j] = (a[shift + j] - q * bj) % p
        a = _gf_trim(a)
    return a


def _gf_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _gf_trim(a[:]), _gf_trim(b[:])
    while b:
        a, b = b, _gf_mod(a, b, p)
    return a


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _irreducible_mod_p(coeffs: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic integer polynomial reduced mod p."""
    g = [c % p for c in coeffs]
    n = len(g) - 1
    x = [0, 1]
    # Rabin: x^(p^n) == x mod (g, p), and gcd(x^(p^(n/q)) - x, g) = 1 for q | n
    acc = x[:]
    for _ in range(n):
        acc = _gf_powmod(acc, p, g, p)
    if _gf_sub(acc, x, p):
        return False
    for q in _prime_factors(n):
        acc = x[:]
        for _ in range(n // q):
            acc = _gf_powmod(acc, p, g, p)
        d = _gf_gcd(_gf_sub(acc, x, p), g[:], p)
        if len(d) != 1:
            return False
    return True


# ---------------------------------------------------------------------------


class LocalField:
    """Descriptor of one of the three supported local-field models.

    Instances are immutable and hashable; build them through make_field so
    the kind-specific invariants are checked.
    """

    __slots__ = ("p", "kind", "defining", "e", "f", "degree", "_hash")

    def __init__(self, p: int, kind: str, defining: tuple[int, ...]):
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "defining", defining)
        n = len(defining) - 1 if defining else 1
        object.__setattr__(self, "degree", n)
        object.__setattr__(self, "e", n if kind == EISENSTEIN else 1)
        object.__setattr__(self, "f", n if kind == UNRAMIFIED else 1)
        object.__setattr__(self, "_hash", hash((p, kind, defining)))

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("LocalField is immutable")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LocalField)
            and self.p == other.p
            and self.kind == other.kind
            and self.defining == other.defining
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        if self.kind == BASE:
            return f"LocalField(p={self.p}, base)"
        return f"LocalField(p={self.p}, {self.kind}, defining={list(self.defining)})"

    # -- element constructors ------------------------------------------------

    def element(self, value: ElementLike) -> "OKElem":
        if isinstance(value, OKElem):
            if value.field != self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, int):
            coords = (value,) + (0,) * (self.degree - 1)
            return OKElem(self, coords)
        vec = list(value)
        if len(vec) > self.degree:
            vec = self._reduce_vec(vec)
        vec += [0] * (self.degree - len(vec))
        return OKElem(self, tuple(vec))

    def zero(self) -> "OKElem":
        return self.element(0)

    def one(self) -> "OKElem":
        return self.element(1)

    def generator(self) -> "OKElem":
        if self.kind == BASE:
            raise UnsupportedField("the base field has no generator element")
        return self.element((0, 1))

    def uniformizer(self) -> "OKElem":
        if self.kind == EISENSTEIN:
            return self.generator()
        return self.element(self.p)

    # -- internal vector reduction modulo the monic defining polynomial ------

    def _reduce_vec(self, vec: list[int]) -> list[int]:
        n = self.degree
        g = self.defining
        for i in range(len(vec) - 1, n - 1, -1):
            c = vec[i]
            if c:
                vec[i] = 0
                for j in range(n):
                    vec[i - n + j] -= c * g[j]
        return vec[:n]

    # -- valuation ------------------------------------------------------------

    def ord(self, x: "OKElem") -> Union[int, float]:
        coords = x.coords
        if self.kind == BASE:
            c = coords[0]
            return math.inf if c == 0 else _vp(c, self.p)
        if self.kind == UNRAMIFIED:
            vals = [_vp(c, self.p) for c in coords if c]
            return min(vals) if vals else math.inf
        vals = [self.e * _vp(c, self.p) + i for i, c in enumerate(coords) if c]
        return min(vals) if vals else math.inf


class OKElem:
    """Exact element of the valuation-ring model of a LocalField.

    Arithmetic reduces modulo the defining polynomial; integers coerce on
    the fly, so `x + 1` and `3 * x` work as expected.
    """

    __slots__ = ("field", "coords")

    def __init__(self, field: LocalField, coords: tuple[int, ...]):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("OKElem is immutable")

    def _coerce(self, other: ElementLike) -> "OKElem":
        if isinstance(other, OKElem):
            if other.field != self.field:
                raise ValueError("mixed-field arithmetic")
            return other
        if isinstance(other, int):
            return self.field.element(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return OKElem(self.field, tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self):
        return OKElem(self.field, tuple(-a for a in self.coords))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return OKElem(self.field, tuple(a - b for a, b in zip(self.coords, o.coords)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self.coords, o.coords
        n = self.field.degree
        if n == 1:
            return OKElem(self.field, (a[0] * b[0],))
        conv = [0] * (2 * n - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    conv[i + j] += ai * bj
        return OKElem(self.field, tuple(self.field._reduce_vec(conv)))

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only nonnegative integer exponents")
        result = self.field.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self.field.element(other)
        return (
            isinstance(other, OKElem)
            and self.field == other.field
            and self.coords == other.coords
        )

    def __hash__(self) -> int:
        return hash((self.field, self.coords))

    def __bool__(self) -> bool:
        return any(self.coords)

    def ord(self) -> Union[int, float]:
        return self.field.ord(self)

    def is_unit(self) -> bool:
        return self.ord() == 0

    def __repr__(self) -> str:
        return f"OKElem({list(self.coords)})"

    def __str__(self) -> str:
        if self.field.kind == BASE:
            return str(self.coords[0])
        parts = []
        for i, c in enumerate(self.coords):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                t = "t" if i == 1 else f"t^{i}"
                if c == 1:
                    parts.append(t)
                elif c == -1:
                    parts.append(f"-{t}")
                else:
                    parts.append(f"{c}*{t}")
        if not parts:
            return "0"
        out = parts[0]
        for part in parts[1:]:
            out += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
        return out


# ---------------------------------------------------------------------------


def make_field(p: int, kind: str, defining_poly: Sequence[int] | None = None) -> LocalField:
    """Construct and validate a LocalField.

    defining_poly is given low degree first and must be monic; it is required
    for the two extension kinds and rejected for the base field.
    """
    if not isinstance(p, int) or not _is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if kind == BASE:
        if defining_poly is not None:
            raise UnsupportedField("the base field takes no defining polynomial")
        return LocalField(p, BASE, ())
    if kind not in (UNRAMIFIED, EISENSTEIN):
        raise MixedTowerUnsupported(
            f"unsupported field kind {kind!r}: only base, unramified and "
            "eisenstein models exist; mixed towers are rejected"
        )
    if defining_poly is None:
        raise UnsupportedField(f"kind {kind!r} requires a defining polynomial")
    coeffs = tuple(int(c) for c in defining_poly)
    while coeffs and coeffs[-1] == 0:
        coeffs = coeffs[:-1]
    n = len(coeffs) - 1
    if n < 2 or coeffs[-1] != 1:
        if kind == EISENSTEIN:
            raise NotEisenstein("defining polynomial must be monic of degree >= 2")
        raise NotIrreducibleModP("defining polynomial must be monic of degree >= 2")
    if kind == EISENSTEIN:
        if coeffs[0] % p != 0 or (coeffs[0] // p) % p == 0:
            raise NotEisenstein("constant term must have p-adic valuation exactly 1")
        if any(c % p for c in coeffs[1:-1]):
            raise NotEisenstein("all non-leading coefficients must be divisible by p")
        return LocalField(p, EISENSTEIN, coeffs)
    if not _irreducible_mod_p(coeffs, p):
        raise NotIrreducibleModP(f"defining polynomial is reducible modulo {p}")
    return LocalField(p, UNRAMIFIED, coeffs)


def ord(x: OKElem, field: LocalField | None = None) -> Union[int, float]:
    """Normalized valuation: ord(uniformizer) = 1, ord(0) = +infinity."""
    if field is not None and x.field != field:
        raise ValueError("element belongs to a different field")
    return x.ord()


def _check_residue_count(field: LocalField, k: int, cap: int | None) -> int:
    if k < 1:
        raise ValueError("k must be >= 1")
    count = field.p ** (field.f * k)
    limit = RESIDUE_CAP if cap is None else cap
    if count > limit:
        raise KTooLargeForMemory(
            f"residue system of size {field.p}^{field.f * k} exceeds the cap {limit}",
            count=count,
            cap=limit,
        )
    return count


def iter_residues(field: LocalField, k: int, cap: int | None = None) -> Iterator[OKElem]:
    """Yield the p^(f*k) residue representatives modulo the k-th ideal power.

    The ordering is deterministic (lexicographic in the digit vectors) and is
    relied upon for canonical class representatives and counterexamples.
    """
    _check_residue_count(field, k, cap)
    p = field.p
    if field.kind == BASE:
        for a in range(p**k):
            yield field.element(a)
        return
    if field.kind == UNRAMIFIED:
        for digits in product(range(p**k), repeat=field.f):
            yield field.element(digits)
        return
    gen = field.generator()
    pows = [field.one()]
    for _ in range(k - 1):
        pows.append(pows[-1] * gen)
    for digits in product(range(p), repeat=k):
        acc = field.zero()
        for i, c in enumerate(digits):
            if c:
                acc = acc + pows[i] * c
        yield acc


@lru_cache(maxsize=256)
def _residues_cached(field: LocalField, k: int) -> tuple[OKElem, ...]:
    return tuple(iter_residues(field, k))


def residues(field: LocalField, k: int, cap: int | None = None) -> tuple[OKElem, ...]:
    """Materialized residue system; see iter_residues for the ordering."""
    _check_residue_count(field, k, cap)
    return _residues_cached(field, k)


def reduce_mod(x: OKElem, field: LocalField, k: int) -> OKElem:
    """Canonical representative of x modulo the k-th power of the maximal ideal.

    The result is the unique element of residues(field, k) congruent to x.
    """
    if x.field != field:
        raise ValueError("element belongs to a different field")
    if k < 1:
        raise ValueError("k must be >= 1")
    p = field.p
    if field.kind == BASE:
        return field.element(x.coords[0] % p**k)
    if field.kind == UNRAMIFIED:
        m = p**k
        return field.element(tuple(c % m for c in x.coords))
    # totally ramified: peel digits, testing each candidate in {0, ..., p-1}
    gen = field.generator()
    partial = field.zero()
    power = field.one()
    for i in range(k):
        for digit in range(p):
            candidate = partial + power * digit
            if (x - candidate).ord() >= i + 1:
                partial = candidate
                break
        else:  # pragma: no cover - would indicate broken field arithmetic
            raise AssertionError("no digit matched during reduction")
        power = power * gen
    return partial


def congruent(x: OKElem, y: OKElem, k: int) -> bool:
    """True when x and y agree modulo the k-th power of the maximal ideal."""
    return (x - y).ord() >= k
