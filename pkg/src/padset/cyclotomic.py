"""Exact arithmetic in the cyclotomic fields Q(zeta_{p^k}).

Character values and inner products live here, so "equals zero" is decided
exactly.  A value is stored against the basis 1, zeta, ..., zeta^(d-1) of
Q(zeta_{p^k}) over Q, where d = (p-1)*p^(k-1) is the degree of the p^k-th
cyclotomic polynomial

    Phi_{p^k}(x) = sum_{i=0}^{p-1} x^(i*p^(k-1)).

Only the nonzero coordinates are kept (terms are sparse in practice: roots of
unity and short character sums).  The level k is always minimal: whenever the
canonical coordinates are supported on exponents divisible by p, the value is
demoted to Q(zeta_{p^(k-1)}), down to plain rationals at k = 0.  Canonical
form is therefore unique and equality is structural.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from typing import Union

from .errors import InputError
from .padic import PAdicRational, PrimeContext

__all__ = ["CyclotomicNumber", "root_of_unity", "character"]

Scalar = Union[int, Fraction]
_ZERO = Fraction(0)


def _canonical(p: int, k: int, raw: dict[int, Fraction]) -> tuple[int, tuple[tuple[int, Fraction], ...]]:
    """Reduce exponent->coefficient data to (minimal level, sorted terms)."""
    pk = p**k
    folded: dict[int, Fraction] = {}
    for e, c in raw.items():
        if not c:
            continue
        e %= pk
        folded[e] = folded.get(e, _ZERO) + c
    if k >= 1:
        step = p ** (k - 1)
        deg = (p - 1) * step
        # zeta^deg = -(1 + zeta^step + ... + zeta^((p-2)*step)); one pass
        # suffices because every folded exponent is below deg + step.
        for e in sorted(e for e in folded if e >= deg):
            c = folded.pop(e)
            if not c:
                continue
            r = e - deg
            for i in range(p - 1):
                t = i * step + r
                folded[t] = folded.get(t, _ZERO) - c
    terms = {e: c for e, c in folded.items() if c}
    while k > 0 and all(e % p == 0 for e in terms):
        terms = {e // p: c for e, c in terms.items()}
        k -= 1
    return k, tuple(sorted(terms.items()))


class CyclotomicNumber:
    """An exact element of Q(zeta_{p^k}) in canonical minimal-level form."""

    __slots__ = ("_p", "_k", "_terms")

    def __init__(self, p: int, order_exp: int, coeffs: dict[int, Fraction] | None = None):
        PrimeContext.of(p)
        if order_exp < 0:
            raise InputError("order exponent must be nonnegative")
        self._p = p
        self._k, self._terms = _canonical(p, order_exp, coeffs or {})

    # -- constructors --------------------------------------------------------

    @classmethod
    def from_rational(cls, p: int, value: Scalar) -> "CyclotomicNumber":
        return cls(p, 0, {0: Fraction(value)})

    @classmethod
    def zero(cls, p: int) -> "CyclotomicNumber":
        return cls.from_rational(p, 0)

    @classmethod
    def one(cls, p: int) -> "CyclotomicNumber":
        return cls.from_rational(p, 1)

    # -- structure -----------------------------------------------------------

    @property
    def p(self) -> int:
        return self._p

    @property
    def order_exp(self) -> int:
        return self._k

    @property
    def terms(self) -> tuple[tuple[int, Fraction], ...]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def rational(self) -> Fraction | None:
        """The value as a Fraction when it lies in Q, else None."""
        if self._k != 0:
            return None
        return self._terms[0][1] if self._terms else _ZERO

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CyclotomicNumber):
            return (
                self._p == other._p
                and self._k == other._k
                and self._terms == other._terms
            )
        if isinstance(other, (int, Fraction)):
            return self._k == 0 and self.rational() == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._p, self._k, self._terms))

    def __repr__(self) -> str:
        return f"CyclotomicNumber({str(self)!r}, p={self._p})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        order = self._p**self._k
        parts = []
        for e, c in self._terms:
            if e == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(f"zeta{order}^{e}" if e > 1 else f"zeta{order}")
            else:
                root = f"zeta{order}^{e}" if e > 1 else f"zeta{order}"
                parts.append(f"({c})*{root}")
        return " + ".join(parts)

    # -- ring operations -------------------------------------------------------

    def _coerce(self, other: "CyclotomicNumber | Scalar") -> "CyclotomicNumber":
        if isinstance(other, CyclotomicNumber):
            if other._p != self._p:
                raise InputError("mixed primes in cyclotomic arithmetic")
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.from_rational(self._p, other)
        raise InputError(f"cannot coerce {other!r} into Q(zeta)")

    def _items_at(self, k: int) -> dict[int, Fraction]:
        lift = self._p ** (k - self._k)
        return {e * lift: c for e, c in self._terms}

    def __add__(self, other: "CyclotomicNumber | Scalar") -> "CyclotomicNumber":
        other = self._coerce(other)
        k = max(self._k, other._k)
        acc = self._items_at(k)
        for e, c in other._items_at(k).items():
            acc[e] = acc.get(e, _ZERO) + c
        return CyclotomicNumber(self._p, k, acc)

    __radd__ = __add__

    def __neg__(self) -> "CyclotomicNumber":
        return CyclotomicNumber(self._p, self._k, {e: -c for e, c in self._terms})

    def __sub__(self, other: "CyclotomicNumber | Scalar") -> "CyclotomicNumber":
        return self + (-self._coerce(other))

    def __rsub__(self, other: "CyclotomicNumber | Scalar") -> "CyclotomicNumber":
        return self._coerce(other) + (-self)

    def __mul__(self, other: "CyclotomicNumber | Scalar") -> "CyclotomicNumber":
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return CyclotomicNumber(self._p, self._k, {e: c * f for e, c in self._terms})
        other = self._coerce(other)
        k = max(self._k, other._k)
        pk = self._p**k
        a = self._items_at(k)
        b = other._items_at(k)
        acc: dict[int, Fraction] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = (ea + eb) % pk
                acc[e] = acc.get(e, _ZERO) + ca * cb
        return CyclotomicNumber(self._p, k, acc)

    __rmul__ = __mul__

    def conjugate(self) -> "CyclotomicNumber":
        """Complex conjugation: zeta^c -> zeta^(-c)."""
        pk = self._p**self._k
        return CyclotomicNumber(
            self._p, self._k, {(pk - e) % pk: c for e, c in self._terms}
        )

    def inverse(self) -> "CyclotomicNumber":
        """Field inverse via the extended Euclidean algorithm modulo Phi."""
        if not self._terms:
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        if self._k == 0:
            return CyclotomicNumber.from_rational(self._p, 1 / self._terms[0][1])
        p, k = self._p, self._k
        step = p ** (k - 1)
        deg = (p - 1) * step
        a = [_ZERO] * deg
        for e, c in self._terms:
            a[e] = c
        phi = [_ZERO] * (deg + 1)
        for i in range(p):
            phi[i * step] = Fraction(1)
        g, u = _poly_half_xgcd(a, phi)
        # Phi is irreducible over Q, so the gcd is a nonzero constant.
        scale = 1 / g[0]
        return CyclotomicNumber(p, k, {e: c * scale for e, c in enumerate(u)})

    def __truediv__(self, other: "CyclotomicNumber | Scalar") -> "CyclotomicNumber":
        return self * self._coerce(other).inverse()

    # -- reporting ---------------------------------------------------------------

    def to_complex(self) -> complex:
        """Double-precision evaluation sum coeffs * exp(2*pi*i*e/p^k)."""
        order = self._p**self._k
        return sum(
            (float(c) * cmath.exp(2j * cmath.pi * e / order) for e, c in self._terms),
            complex(0),
        )

    def to_json_obj(self) -> dict:
        order = self._p**self._k
        dense = [_ZERO] * order
        for e, c in self._terms:
            dense[e] = c
        return {
            "order_exp": self._k,
            "coeffs": [_frac_str(c) for c in dense],
        }

    @classmethod
    def from_json_obj(cls, p: int, obj: dict) -> "CyclotomicNumber":
        try:
            k = int(obj["order_exp"])
            coeffs = {i: Fraction(s) for i, s in enumerate(obj["coeffs"])}
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad cyclotomic object: {obj!r}") from exc
        return cls(p, k, coeffs)


def _frac_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _poly_trim(a: list[Fraction]) -> list[Fraction]:
    n = len(a)
    while n and not a[n - 1]:
        n -= 1
    return a[:n]


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = a[:]
    q = [_ZERO] * max(0, len(a) - len(b) + 1)
    inv = 1 / b[-1]
    for i in range(len(a) - len(b), -1, -1):
        f = a[i + len(b) - 1] * inv
        if f:
            q[i] = f
            for j, bc in enumerate(b):
                a[i + j] -= f * bc
    return q, _poly_trim(a)


def _poly_half_xgcd(a: list[Fraction], m: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    """(g, u) with u*a = g (mod m) and g = gcd(a, m)."""
    r0, r1 = _poly_trim(a), m[:]
    u0: list[Fraction] = [Fraction(1)]
    u1: list[Fraction] = []
    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        u2 = _poly_sub(u0, _poly_mul(q, u1))
        u0, u1 = u1, u2
    return r0, u0


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return _poly_trim(out)


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = list(a) + [_ZERO] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return _poly_trim(out)


def root_of_unity(context: PrimeContext | int, k: int, c: int) -> CyclotomicNumber:
    """zeta_{p^k}^c; root_of_unity(ctx, 0, 0) is 1."""
    ctx = PrimeContext.of(context)
    if k < 0:
        raise InputError("root order exponent must be nonnegative")
    return CyclotomicNumber(ctx.p, k, {c % ctx.p**k if k else 0: Fraction(1)})


def character(x: PAdicRational) -> CyclotomicNumber:
    """chi_p(x) = exp(2*pi*i*{x}_p) as an exact root of unity."""
    k, c = x.character_exponent()
    return root_of_unity(x.context, k, c)
