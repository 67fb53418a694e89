"""Exact arithmetic of rational numbers viewed inside the p-adic field Q_p.

Everything in this package is an exact rational carrying a prime context:
the prime fixes the valuation, the norm and the fractional-part
decomposition.  Irrational p-adic numbers are deliberately outside the
representable domain; every center, translation and modulation used by the
set and function layers is rational, so no rounding ever enters an exact
path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import InputError

__all__ = [
    "PrimeContext",
    "PAdicRational",
    "enumerate_translations",
]

RationalLike = Union[int, str, Fraction, "PAdicRational"]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    if n % 3 == 0:
        return n == 3
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


_CONTEXT_CACHE: dict[int, "PrimeContext"] = {}


@dataclass(frozen=True)
class PrimeContext:
    """The prime p that turns plain rationals into p-adic quantities."""

    p: int

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or not _is_prime(self.p):
            raise InputError(f"p must be a prime integer, got {self.p!r}")

    @classmethod
    def of(cls, p: "PrimeContext | int") -> "PrimeContext":
        if isinstance(p, PrimeContext):
            return p
        ctx = _CONTEXT_CACHE.get(p)
        if ctx is None:
            ctx = cls(p)
            _CONTEXT_CACHE[p] = ctx
        return ctx

    def rational(self, value: RationalLike) -> "PAdicRational":
        return PAdicRational(value, self)

    def __repr__(self) -> str:
        return f"PrimeContext({self.p})"


class PAdicRational:
    """A reduced rational together with its prime context.

    The valuation is precomputed at construction: v = v_p(num) - v_p(den),
    None for zero.  Instances are immutable and hashable.
    """

    __slots__ = ("_frac", "_context", "_val")

    def __init__(self, value: RationalLike, context: PrimeContext | int):
        ctx = PrimeContext.of(context)
        if isinstance(value, PAdicRational):
            if value._context != ctx:
                raise InputError("mixed prime contexts")
            frac = value._frac
        else:
            try:
                frac = Fraction(value)
            except (ValueError, ZeroDivisionError, TypeError) as exc:
                raise InputError(f"not a rational number: {value!r}") from exc
        self._frac = frac
        self._context = ctx
        self._val = self._valuation(frac, ctx.p)

    @staticmethod
    def _valuation(frac: Fraction, p: int) -> int | None:
        if frac == 0:
            return None
        v = 0
        num = frac.numerator
        while num % p == 0:
            num //= p
            v += 1
        if v:
            return v
        den = frac.denominator
        while den % p == 0:
            den //= p
            v -= 1
        return v

    # -- structure ---------------------------------------------------------

    @property
    def context(self) -> PrimeContext:
        return self._context

    @property
    def p(self) -> int:
        return self._context.p

    @property
    def fraction(self) -> Fraction:
        return self._frac

    @property
    def num(self) -> int:
        return self._frac.numerator

    @property
    def den(self) -> int:
        return self._frac.denominator

    def __bool__(self) -> bool:
        return self._frac != 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PAdicRational):
            return self._context == other._context and self._frac == other._frac
        if isinstance(other, (int, Fraction)):
            return self._frac == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._context.p, self._frac))

    def __repr__(self) -> str:
        return f"PAdicRational({str(self)!r}, p={self.p})"

    def __str__(self) -> str:
        if self._frac.denominator == 1:
            return str(self._frac.numerator)
        return f"{self._frac.numerator}/{self._frac.denominator}"

    @classmethod
    def parse(cls, text: str, context: PrimeContext | int) -> "PAdicRational":
        return cls(text.strip(), context)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other: RationalLike) -> Fraction:
        if isinstance(other, PAdicRational):
            if other._context != self._context:
                raise InputError("mixed prime contexts")
            return other._frac
        return Fraction(other)

    def __add__(self, other: RationalLike) -> "PAdicRational":
        return PAdicRational(self._frac + self._coerce(other), self._context)

    __radd__ = __add__

    def __sub__(self, other: RationalLike) -> "PAdicRational":
        return PAdicRational(self._frac - self._coerce(other), self._context)

    def __rsub__(self, other: RationalLike) -> "PAdicRational":
        return PAdicRational(self._coerce(other) - self._frac, self._context)

    def __mul__(self, other: RationalLike) -> "PAdicRational":
        return PAdicRational(self._frac * self._coerce(other), self._context)

    __rmul__ = __mul__

    def __neg__(self) -> "PAdicRational":
        return PAdicRational(-self._frac, self._context)

    def scale(self, j: int) -> "PAdicRational":
        """Multiply by p**j."""
        return PAdicRational(self._frac * Fraction(self.p) ** j, self._context)

    # -- p-adic structure ----------------------------------------------------

    def valuation(self) -> int | None:
        """v_p(x); None for x = 0."""
        return self._val

    def norm(self) -> Fraction:
        """|x|_p as an exact rational: 0 for x = 0, else p**(-v_p(x))."""
        if self._val is None:
            return Fraction(0)
        return Fraction(self.p) ** (-self._val)

    def norm_exponent(self) -> int | None:
        """e with |x|_p = p**e; None for x = 0."""
        if self._val is None:
            return None
        return -self._val

    def fractional_part(self) -> "PAdicRational":
        """{x}_p: the unique c / p**k in [0, 1) with x - c/p**k in Z_p.

        k = max(0, -v_p(x)); c is num * den'^{-1} mod p**k where den' is the
        prime-to-p part of the denominator.  Zero exactly when |x|_p <= 1.
        """
        v = self._val
        if v is None or v >= 0:
            return PAdicRational(0, self._context)
        k = -v
        pk = self.p ** k
        den_unit = self._frac.denominator // pk
        c = (self._frac.numerator * pow(den_unit, -1, pk)) % pk
        return PAdicRational(Fraction(c, pk), self._context)

    def character_exponent(self) -> tuple[int, int]:
        """(k, c) with chi_p(x) = exp(2*pi*i*c/p**k), {x}_p = c/p**k reduced.

        (0, 0) exactly when x is a p-adic integer.
        """
        frac = self.fractional_part()
        if not frac:
            return (0, 0)
        k = -frac.valuation()  # type: ignore[operator]
        return (k, frac.num)


def enumerate_translations(
    context: PrimeContext | int, kind: str, bound: int
) -> list[PAdicRational]:
    """Ordered translation sets used throughout the wavelet layer.

    kind "ip":  all a in I_p with |a|_p <= p**bound, i.e. the p**bound
                fractions j/p**bound reduced to fractional form, bound >= 0.
    kind "jpm": J_{p,m} for m = bound >= 1, the fractions c/p**m whose
                leading digit is nonzero (c coprime to p); exactly
                (p-1)*p**(m-1) elements.

    Output is sorted by (denominator exponent, numerator).
    """
    ctx = PrimeContext.of(context)
    p = ctx.p
    if kind == "ip":
        if bound < 0:
            raise InputError("ip enumeration needs bound >= 0")
        fracs = [Fraction(j, p**bound) for j in range(p**bound)]
    elif kind == "jpm":
        if bound < 1:
            raise InputError("J_{p,m} needs m >= 1")
        fracs = [Fraction(c, p**bound) for c in range(1, p**bound) if c % p]
    else:
        raise InputError(f"unknown translation kind: {kind!r}")
    fracs.sort(key=lambda f: (f.denominator, f.numerator))
    return [PAdicRational(f, ctx) for f in fracs]
