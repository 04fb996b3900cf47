"""Exact integer-coefficient polynomials over a local field model.

Provides the polynomial plumbing the decision procedures sit on: reciprocal
polynomials, Yun square-free decomposition with denominator clearing chosen
so the cleared product differs from the input by an exact integer p-th power,
p-th-power-free reduction, perfect-power detection and resultants.  All
computations are exact; the fraction-field layer is private and every result
that claims integrality is verified before it is returned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import ZeroPolynomial
from .localfield import BASE, EISENSTEIN, LocalField, OKElem, iter_residues
from .powerclasses import is_pth_power, threshold_k0

__all__ = [
    "IntPoly",
    "NecessaryConditions",
    "SquareFreeDecomposition",
    "is_perfect_pth_power_poly",
    "is_power_free",
    "necessary_conditions",
    "reciprocal",
    "reduce_power_free",
    "resultant",
    "squarefree_decompose",
]

CoeffLike = Union[int, OKElem]


class IntPoly:
    """Polynomial with valuation-ring coefficients, stored low degree first.

    The zero polynomial is the empty coefficient tuple and has no degree.
    Instances are immutable and hashable.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: LocalField, coeffs: Iterable[CoeffLike] = ()):
        vec = [field.element(c) for c in coeffs]
        while vec and not vec[-1]:
            vec.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(vec))

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("IntPoly is immutable")

    # -- basic queries --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ZeroPolynomial("the zero polynomial has no degree")
        return len(self.coeffs) - 1

    @property
    def lc(self) -> OKElem:
        if not self.coeffs:
            raise ZeroPolynomial("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def constant(self) -> OKElem:
        return self.coeffs[0] if self.coeffs else self.field.zero()

    @property
    def height(self) -> int:
        """Largest absolute value of any integer coordinate."""
        return max((abs(n) for c in self.coeffs for n in c.coords), default=0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IntPoly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    # -- arithmetic ------------------------------------------------------------

    def _coerce(self, other) -> "IntPoly":
        if isinstance(other, IntPoly):
            if other.field != self.field:
                raise ValueError("mixed-field polynomial arithmetic")
            return other
        if isinstance(other, (int, OKElem)):
            return IntPoly(self.field, (other,))
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return IntPoly(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(self.field, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return IntPoly(self.field)
        out = [self.field.zero()] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] = out[i + j] + ai * bj
        return IntPoly(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only nonnegative integer exponents")
        result = IntPoly(self.field, (1,))
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x: CoeffLike) -> OKElem:
        x = self.field.element(x)
        acc = self.field.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPoly":
        return IntPoly(self.field, tuple(c * i for i, c in enumerate(self.coeffs) if i))

    # -- display ----------------------------------------------------------------

    def __repr__(self) -> str:
        return f"IntPoly({[list(c.coords) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            cs = str(c)
            negate = False
            if cs.startswith("-") and " " not in cs:
                cs, negate = cs[1:], True
            if " " in cs:
                cs = f"({cs})"
            if i == 0:
                term = cs
            else:
                xs = "x" if i == 1 else f"x^{i}"
                term = xs if cs == "1" else f"{cs}{xs}"
            if not parts:
                parts.append(f"-{term}" if negate else term)
            else:
                parts.append(f"- {term}" if negate else f"+ {term}")
        return " ".join(parts) if parts else "0"


def reciprocal(F: IntPoly) -> IntPoly:
    """Reverse the coefficient vector: x^deg(F) * F(1/x).

    Trailing zero coefficients of the input become nothing, so factors of x
    silently drop; the reciprocal of a polynomial with nonzero constant term
    has the same degree and reciprocal is an involution there.
    """
    if F.is_zero:
        raise ZeroPolynomial("the zero polynomial has no reciprocal")
    return IntPoly(F.field, tuple(reversed(F.coeffs)))


# ---------------------------------------------------------------------------
# private fraction-field layer


def _fp_trim(a: list[Fraction]) -> list[Fraction]:
    while a and not a[-1]:
        a.pop()
    return a


def _fp_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = a[:]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    inv = 1 / b[-1]
    while len(a) >= len(b):
        coef = a[-1] * inv
        shift = len(a) - len(b)
        q[shift] = coef
        for j, bj in enumerate(b):
            a[shift + j] -= coef * bj
        a = _fp_trim(a)
        if not a:
            break
    return q, a


def _fp_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _fp_trim(out)


def _fp_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = list(a) + [Fraction(0)] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return _fp_trim(out)


class _KElem:
    """Fraction coordinate vector in the power basis; field-of-fractions math."""

    __slots__ = ("field", "coords")

    def __init__(self, field: LocalField, coords: Sequence[Fraction]):
        self.field = field
        self.coords = tuple(Fraction(c) for c in coords)

    @classmethod
    def from_ok(cls, x: OKElem) -> "_KElem":
        return cls(x.field, tuple(Fraction(c) for c in x.coords))

    def __bool__(self) -> bool:
        return any(self.coords)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, _KElem)
            and self.field == other.field
            and self.coords == other.coords
        )

    def __hash__(self) -> int:
        return hash((self.field, self.coords))

    def __add__(self, other: "_KElem") -> "_KElem":
        return _KElem(self.field, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "_KElem") -> "_KElem":
        return _KElem(self.field, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "_KElem":
        return _KElem(self.field, tuple(-a for a in self.coords))

    def __mul__(self, other: "_KElem") -> "_KElem":
        n = self.field.degree
        if n == 1:
            return _KElem(self.field, (self.coords[0] * other.coords[0],))
        conv = [Fraction(0)] * (2 * n - 1)
        for i, ai in enumerate(self.coords):
            if ai:
                for j, bj in enumerate(other.coords):
                    conv[i + j] += ai * bj
        g = self.field.defining
        for i in range(len(conv) - 1, n - 1, -1):
            c = conv[i]
            if c:
                conv[i] = Fraction(0)
                for j in range(n):
                    conv[i - n + j] -= c * g[j]
        return _KElem(self.field, tuple(conv[:n]))

    def scale(self, k: Union[int, Fraction]) -> "_KElem":
        k = Fraction(k)
        return _KElem(self.field, tuple(a * k for a in self.coords))

    def inverse(self) -> "_KElem":
        if not self:
            raise ZeroDivisionError("inverse of zero")
        n = self.field.degree
        if n == 1:
            return _KElem(self.field, (1 / self.coords[0],))
        # extended Euclid in Q[t] against the (irreducible) defining polynomial,
        # tracking only the cofactor of self: s_k * self == r_k (mod defining)
        g = [Fraction(c) for c in self.field.defining]
        r0, r1 = g, _fp_trim(list(self.coords))
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _fp_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _fp_sub(s0, _fp_mul(q, s1))
            if not r1:
                raise ZeroDivisionError("element shares a factor with the defining polynomial")
        unit = r1[0]
        inv_vec = [c / unit for c in s1]
        inv_vec += [Fraction(0)] * (n - len(inv_vec))
        return _KElem(self.field, tuple(inv_vec[:n]))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def to_ok(self) -> OKElem:
        if not self.is_integral():
            raise ValueError("element is not integral")
        return OKElem(self.field, tuple(int(c) for c in self.coords))


def _kzero(field: LocalField) -> _KElem:
    return _KElem(field, (Fraction(0),) * field.degree)


# polynomials over the fraction field: plain tuples of _KElem, low degree first


def _kp_trim(a: list[_KElem]) -> tuple[_KElem, ...]:
    while a and not a[-1]:
        a.pop()
    return tuple(a)


def _kp_from_int(F: IntPoly) -> tuple[_KElem, ...]:
    return tuple(_KElem.from_ok(c) for c in F.coeffs)


def _kp_degree(a: tuple[_KElem, ...]) -> int:
    return len(a) - 1


def _kp_add(a, b):
    if not a:
        return _kp_trim(list(b))
    if not b:
        return _kp_trim(list(a))
    field = a[0].field
    out = list(a) + [_kzero(field)] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return _kp_trim(out)


def _kp_sub(a, b):
    return _kp_add(a, tuple(-c for c in b))


def _kp_mul(a, b):
    if not a or not b:
        return ()
    field = a[0].field
    out = [_kzero(field)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
    return _kp_trim(out)


def _kp_scale(a, k: _KElem):
    return _kp_trim([c * k for c in a])


def _kp_derivative(a):
    if len(a) <= 1:
        return ()
    return _kp_trim([a[i].scale(i) for i in range(1, len(a))])


def _kp_divmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    field = b[0].field
    inv = b[-1].inverse()
    rem = list(a)
    quot = [_kzero(field)] * max(len(a) - len(b) + 1, 0)
    while True:
        while rem and not rem[-1]:
            rem.pop()
        if len(rem) < len(b):
            break
        coef = rem[-1] * inv
        shift = len(rem) - len(b)
        quot[shift] = coef
        for j, bj in enumerate(b):
            rem[shift + j] = rem[shift + j] - coef * bj
    return _kp_trim(quot), _kp_trim(rem)


def _kp_exact_div(a, b):
    q, r = _kp_divmod(a, b)
    if r:
        raise ArithmeticError("division was expected to be exact")
    return q


def _kp_monic(a):
    if not a:
        return a
    return _kp_scale(a, a[-1].inverse())


def _kp_gcd(a, b):
    a, b = tuple(a), tuple(b)
    while b:
        _, r = _kp_divmod(a, b)
        a, b = b, r
    return _kp_monic(a)


def _yun(a: tuple[_KElem, ...]) -> list[tuple[tuple[_KElem, ...], int]]:
    """Square-free decomposition of a monic polynomial in characteristic 0."""
    d = _kp_derivative(a)
    u = _kp_gcd(a, d)
    v = _kp_exact_div(a, u)
    w = _kp_exact_div(d, u)
    out = []
    i = 1
    while _kp_degree(v) >= 1:
        step = _kp_sub(w, _kp_derivative(v))
        h = _kp_gcd(v, step)
        v = _kp_exact_div(v, h)
        w = _kp_exact_div(step, h)
        if _kp_degree(h) >= 1:
            out.append((h, i))
        i += 1
    return out


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SquareFreeDecomposition:
    """c^p * F = lc * prod factor_i ^ mult_i, all sides exactly integral.

    Factors have valuation-ring coefficients, are square-free and pairwise
    coprime; c is a positive rational integer chosen by the denominator
    clearing rule so that the identity balances with an exact integer p-th
    power.  The identity is re-verified on construction.
    """

    lc: OKElem
    factors: tuple[tuple[IntPoly, int], ...]
    c: int


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic for n < 3.3 * 10^24 with these witnesses
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    if n % 2 == 0:
        return 2
    for c in range(1, 50):
        x = y = 2
        d = 1
        f = lambda v: (v * v + c) % n
        while d == 1:
            x = f(x)
            y = f(f(y))
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise AssertionError(f"rho failed on {n}")  # pragma: no cover


_FACTOR_CAP = 1 << 64


def _factor_int(n: int) -> tuple[dict[int, int], int]:
    """Factor n into primes plus a rough cofactor left whole.

    Cofactors at or above _FACTOR_CAP are not worth a rho run; callers must
    treat the rough part conservatively.
    """
    out: dict[int, int] = {}
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
        while n % q == 0:
            out[q] = out.get(q, 0) + 1
            n //= q
    rough = 1
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if m >= _FACTOR_CAP:
            rough *= m
            continue
        if _is_probable_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return out, rough


def _clearing_exponents(s: int, mult: int, p: int) -> tuple[int, int]:
    """Return (t, c_exponent_contribution) clearing denominator s at mult."""
    if mult % p == 0:
        # beta = alpha at every prime, so t = s and c_exp = s^(mult/p)
        return s, s ** (mult // p)
    t = 1
    c_exp = 1
    factors, rough = _factor_int(s)
    for q, alpha in factors.items():
        beta = p * ((alpha + p - 1) // p)
        t *= q**beta
        c_exp *= q ** (mult * beta // p)
    if rough > 1:
        # unfactored part: beta = p per prime exponent unit still clears, it
        # is just not minimal; the decomposition identity stays exact
        t *= rough**p
        c_exp *= rough**mult
    return t, c_exp


def squarefree_decompose(F: IntPoly) -> SquareFreeDecomposition:
    """Yun decomposition over the fraction field plus denominator clearing.

    Raises ZeroPolynomial on the zero input.  Constants decompose with an
    empty factor list.
    """
    if F.is_zero:
        raise ZeroPolynomial("cannot decompose the zero polynomial")
    field = F.field
    p = field.p
    lc = F.lc
    if F.degree == 0:
        return SquareFreeDecomposition(lc=lc, factors=(), c=1)
    monic = _kp_scale(_kp_from_int(F), _KElem.from_ok(lc).inverse())
    raw = _yun(monic)
    factors: list[tuple[IntPoly, int]] = []
    c = 1
    for h, mult in raw:
        s = 1
        for coeff in h:
            for coord in coeff.coords:
                s = s * coord.denominator // math.gcd(s, coord.denominator)
        t, c_exp = _clearing_exponents(s, mult, p)
        c *= c_exp
        cleared = [coeff.scale(t) for coeff in h]
        ints = []
        for coeff in cleared:
            if not coeff.is_integral():  # pragma: no cover - clearing rule guarantees
                raise AssertionError("denominator clearing failed")
            ints.append(coeff.to_ok())
        factors.append((IntPoly(field, ints), mult))
    result = SquareFreeDecomposition(lc=lc, factors=tuple(factors), c=c)
    # always-on verification of the defining identity
    lhs = F * (field.element(c) ** p)
    rhs = IntPoly(field, (lc,))
    for G, mult in result.factors:
        rhs = rhs * G**mult
    if lhs != rhs:  # pragma: no cover - would indicate an internal bug
        raise AssertionError("square-free decomposition identity failed")
    return result


def reduce_power_free(F: IntPoly, p: int) -> IntPoly:
    """Strip every p-th power factor: multiplicities are reduced mod p.

    The result F_* satisfies: F and F_* take values in the same power class
    at every point where neither vanishes.
    """
    if p != F.field.p:
        raise ValueError("p must be the residue characteristic of the field")
    dec = squarefree_decompose(F)
    out = IntPoly(F.field, (dec.lc,))
    for G, mult in dec.factors:
        if mult % p:
            out = out * G ** (mult % p)
    return out


def is_power_free(F: IntPoly, p: int) -> bool:
    """True when no factor of F has multiplicity p or higher."""
    if p != F.field.p:
        raise ValueError("p must be the residue characteristic of the field")
    return all(mult < p for _, mult in squarefree_decompose(F).factors)


@dataclass(frozen=True)
class NecessaryConditions:
    """Cheap screens that every member polynomial must pass."""

    deg_ok: bool
    lc_ord_ok: bool
    const_is_power: bool
    lc_is_power: bool

    @property
    def all_hold(self) -> bool:
        return self.deg_ok and self.lc_ord_ok and self.const_is_power and self.lc_is_power

    def as_dict(self) -> dict[str, bool]:
        return {
            "deg_ok": self.deg_ok,
            "lc_ord_ok": self.lc_ord_ok,
            "const_is_power": self.const_is_power,
            "lc_is_power": self.lc_is_power,
        }


def necessary_conditions(F: IntPoly, field: LocalField) -> NecessaryConditions:
    if F.field != field:
        raise ValueError("polynomial belongs to a different field")
    if F.is_zero:
        raise ZeroPolynomial("conditions are not defined for the zero polynomial")
    p = field.p
    return NecessaryConditions(
        deg_ok=F.degree % p == 0,
        lc_ord_ok=F.lc.ord() % p == 0,
        const_is_power=is_pth_power(F.constant, field),
        lc_is_power=is_pth_power(F.lc, field),
    )


# ---------------------------------------------------------------------------
# exact p-th roots of ring elements and of polynomials


def _int_nth_root(n: int, k: int) -> int | None:
    """Exact nonnegative k-th root of n >= 0, or None."""
    if n < 0:
        return None
    if n in (0, 1):
        return n
    r = 1 << (n.bit_length() + k - 1) // k
    while True:
        nr = ((k - 1) * r + n // r ** (k - 1)) // k
        if nr >= r:
            break
        r = nr
    return r if r**k == n else None


def _pth_root_elem(x: OKElem, field: LocalField) -> OKElem | None:
    """Exact w with w^p = x, searched inside the coordinate ring, else None.

    Base field: integer root extraction.  Extensions: a small breadth-first
    refinement of the residue tree of X^p - x followed by a balanced
    coordinate lift and exact verification, doubling the depth a few times.
    The search is sound (never returns a wrong root); on pathological inputs
    outside the coordinate ring it simply reports None.
    """
    p = field.p
    if not x:
        return field.zero()
    if field.kind == BASE:
        n = x.coords[0]
        if n < 0:
            if p % 2 == 0:
                return None
            r = _int_nth_root(-n, p)
            return field.element(-r) if r is not None else None
        r = _int_nth_root(n, p)
        return field.element(r) if r is not None else None

    v = x.ord()
    if v % p != 0:
        return None
    depth = max(2 * threshold_k0(field) + v, 8)
    for _ in range(4):
        candidates = _power_root_truncations(x, field, depth)
        for a in candidates:
            w = _balanced_lift(a, field, depth)
            if w**p == x:
                if p % 2 == 0:
                    for coord in w.coords:
                        if coord:
                            if coord < 0:
                                w = -w
                            break
                return w
        if not candidates:
            return None
        depth *= 2
        if depth > 512:
            break
    return None


def _power_root_truncations(x: OKElem, field: LocalField, depth: int) -> list[OKElem]:
    p = field.p
    frontier = [a for a in iter_residues(field, 1) if ((a**p) - x).ord() >= 1]
    pi = field.uniformizer()
    level = 1
    shift = pi
    while level < depth and frontier:
        nxt = []
        for a in frontier:
            for r in iter_residues(field, 1):
                b = a + shift * r
                if ((b**p) - x).ord() >= level + 1:
                    nxt.append(b)
        frontier = nxt
        shift = shift * pi
        level += 1
        if len(frontier) > 4096:  # kernel of the power map is tiny; cap hard
            break
    return frontier


def _balanced_lift(a: OKElem, field: LocalField, depth: int) -> OKElem:
    """Representative of a mod the depth-th ideal power with small coordinates."""
    p = field.p
    out = []
    for j, coord in enumerate(a.coords):
        if field.kind == EISENSTEIN:
            m = p ** max((depth - j + field.e - 1) // field.e, 0)
        else:
            m = p**depth
        if m <= 1:
            out.append(coord)
            continue
        r = coord % m
        if 2 * r > m:
            r -= m
        out.append(r)
    return OKElem(field, tuple(out))


def is_perfect_pth_power_poly(F: IntPoly, p: int) -> IntPoly | None:
    """Exact polynomial p-th root over the fraction field, or None.

    When F = G^p the returned G has valuation-ring coefficients and
    satisfies G^p == F exactly (so G is recovered up to a p-th root of
    unity, i.e. up to sign when p is even).  The final identity is always
    verified, making false positives impossible.
    """
    if p != F.field.p:
        raise ValueError("p must be the residue characteristic of the field")
    if F.is_zero:
        raise ZeroPolynomial("the zero polynomial is excluded")
    field = F.field
    dec = squarefree_decompose(F)
    if any(mult % p for _, mult in dec.factors):
        return None
    w = _pth_root_elem(dec.lc, field)
    if w is None:
        return None
    W = IntPoly(field, (1,))
    for G, mult in dec.factors:
        W = W * G ** (mult // p)
    G = W * w
    if dec.c != 1:
        scaled = []
        for coeff in G.coeffs:
            if any(n % dec.c for n in coeff.coords):
                return None
            scaled.append(OKElem(field, tuple(n // dec.c for n in coeff.coords)))
        G = IntPoly(field, scaled)
    if G**p != F:
        return None
    return G


# ---------------------------------------------------------------------------
# resultants via Bareiss elimination on the Sylvester matrix


def _exact_div_elem(a: OKElem, b: OKElem) -> OKElem:
    if a.field.degree == 1:
        # Bareiss divisions are exact, so integer floor division is enough
        return OKElem(a.field, (a.coords[0] // b.coords[0],))
    q = _KElem.from_ok(a) * _KElem.from_ok(b).inverse()
    if not q.is_integral():  # pragma: no cover - Bareiss guarantees exactness
        raise AssertionError("inexact division inside Bareiss elimination")
    return q.to_ok()


def _prem(A: list[int], B: list[int]) -> list[int]:
    """Pseudo-remainder lc(B)^(deg A - deg B + 1) * A mod B, low to high."""
    dB = len(B) - 1
    c = B[-1]
    R = list(A)
    for k in range(len(A) - 1 - dB, -1, -1):
        top = R[dB + k]
        R = [c * x for x in R]
        if top:
            for i in range(dB + 1):
                R[i + k] -= top * B[i]
    del R[dB:]
    while R and R[-1] == 0:
        R.pop()
    return R


def _int_resultant(A: list[int], B: list[int]) -> int:
    """Resultant of integer polynomials via the subresultant PRS.

    Rescaling a remainder by lam multiplies the tracked resultant by
    lam^deg, so all normalizations fold into one exact final quotient.
    """
    sign = 1
    if len(A) < len(B):
        A, B = B, A
        if (len(A) - 1) * (len(B) - 1) % 2:
            sign = -sign
    if len(B) == 1:
        return sign * B[0] ** (len(A) - 1)
    num, den = 1, 1
    g, h = 1, 1
    while len(B) - 1 > 0:
        dA, dB = len(A) - 1, len(B) - 1
        d = dA - dB
        c = B[-1]
        R = _prem(A, B)
        if not R:
            return 0
        dR = len(R) - 1
        if dA * dB % 2:
            sign = -sign
        e = dA - dR - (d + 1) * dB
        if e >= 0:
            num *= c**e
        else:
            den *= c**-e
        lam = g * h**d
        if lam != 1:
            R = [x // lam for x in R]
            num *= lam**dB
        A, B = B, R
        g = c
        if d == 1:
            h = g
        elif d > 1:
            h = g**d // h ** (d - 1)
    total = sign * num * B[0] ** (len(A) - 1)
    q, r = divmod(total, den)
    if r:  # pragma: no cover - subresultant divisions are exact
        raise AssertionError("inexact division inside subresultant PRS")
    return q


def resultant(F: IntPoly, G: IntPoly) -> OKElem:
    """Resultant of two nonzero polynomials, computed fraction-free.

    Conventions: Res(F, c) = c^deg(F) for constant c, and the resultant of
    two constants is 1.
    """
    if F.is_zero or G.is_zero:
        raise ZeroPolynomial("resultants require nonzero polynomials")
    field = F.field
    if G.field != field:
        raise ValueError("mixed-field resultant")
    dF, dG = F.degree, G.degree
    n = dF + dG
    if n == 0:
        return field.one()
    if field.degree == 1:
        value = _int_resultant(
            [c.coords[0] for c in F.coeffs], [c.coords[0] for c in G.coeffs]
        )
        return field.element(value)
    fc = list(reversed(F.coeffs))  # high degree first
    gc = list(reversed(G.coeffs))
    rows: list[list[OKElem]] = []
    for i in range(dG):
        row = [field.zero()] * n
        for j, c in enumerate(fc):
            row[i + j] = c
        rows.append(row)
    for i in range(dF):
        row = [field.zero()] * n
        for j, c in enumerate(gc):
            row[i + j] = c
        rows.append(row)
    sign = 1
    prev = field.one()
    for k in range(n - 1):
        if not rows[k][k]:
            pivot_row = next((i for i in range(k + 1, n) if rows[i][k]), None)
            if pivot_row is None:
                return field.zero()
            rows[k], rows[pivot_row] = rows[pivot_row], rows[k]
            sign = -sign
        pivot = rows[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = rows[i][j] * pivot - rows[i][k] * rows[k][j]
                rows[i][j] = _exact_div_elem(num, prev)
            rows[i][k] = field.zero()
        prev = pivot
    det = rows[n - 1][n - 1]
    return det if sign == 1 else -det
