"""Certified interval arithmetic over MPFR with directed rounding.

An Enclosure is a pair lo <= hi guaranteed to bracket the exact real value:
every transcendental step rounds lo toward -inf and hi toward +inf, while
integer and rational inputs enter exactly.  Comparisons against exact
rationals go through as_integer_ratio, so a verdict never depends on a
rounding accident.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import gmpy2
from gmpy2 import mpfr, mpq, mpz

DEFAULT_PRECISION = 256

_EXACT = (int, Fraction, type(mpz(0)), type(mpq(0)))


def _contexts(precision: int):
    if precision < 2:
        raise ValueError(f"precision must be at least 2 bits, got {precision}")
    return (gmpy2.context(precision=precision, round=gmpy2.RoundDown),
            gmpy2.context(precision=precision, round=gmpy2.RoundUp))


def _to_exact(value):
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, int):
        return mpz(value)
    if isinstance(value, _EXACT):
        return value
    raise TypeError(f"expected an exact integer or rational, got {type(value).__name__}")


@dataclass(frozen=True)
class Enclosure:
    lo: object
    hi: object

    def __post_init__(self):
        if not (gmpy2.is_finite(self.lo) and gmpy2.is_finite(self.hi)):
            raise ValueError("enclosure endpoints must be finite")
        if self.lo > self.hi:
            raise ValueError(f"inverted enclosure [{self.lo}, {self.hi}]")

    @staticmethod
    def exact(value, precision: int = DEFAULT_PRECISION) -> "Enclosure":
        """Tightest enclosure of an integer or rational.

        Adding an mpfr zero forces rounding into mpfr endpoints; on two
        exact operands the context would hand back an exact type instead.
        """
        v = _to_exact(value)
        down, up = _contexts(precision)
        zero = mpfr(0)
        return Enclosure(down.add(v, zero), up.add(v, zero))

    @staticmethod
    def from_decimal(text: str, precision: int = DEFAULT_PRECISION) -> "Enclosure":
        """Enclosure of a decimal literal, parsed exactly (never via float)."""
        return Enclosure.exact(Fraction(text), precision)

    def width(self):
        _, up = _contexts(max(self.lo.precision, self.hi.precision))
        return up.sub(self.hi, self.lo)

    # --- exact comparisons -------------------------------------------------

    def lo_fraction(self) -> Fraction:
        return Fraction(*self.lo.as_integer_ratio())

    def hi_fraction(self) -> Fraction:
        return Fraction(*self.hi.as_integer_ratio())

    def contains(self, value) -> bool:
        v = Fraction(value) if not isinstance(value, Fraction) else value
        return self.lo_fraction() <= v <= self.hi_fraction()

    def certainly_ge(self, other: "Enclosure") -> bool:
        """True only if every point of self is >= every point of other."""
        return self.lo >= other.hi

    def certainly_le(self, other: "Enclosure") -> bool:
        return self.hi <= other.lo

    def certainly_gt(self, other: "Enclosure") -> bool:
        return self.lo > other.hi

    def certainly_lt(self, other: "Enclosure") -> bool:
        return self.hi < other.lo

    def is_subset_of(self, other: "Enclosure") -> bool:
        return other.lo <= self.lo and self.hi <= other.hi

    # --- rendering ---------------------------------------------------------

    def decimal_bounds(self, digits: int) -> tuple[str, str]:
        """Decimal strings rounded outward, so the printed interval is still
        an enclosure."""
        return (_decimal(self.lo_fraction(), digits, toward_floor=True),
                _decimal(self.hi_fraction(), digits, toward_floor=False))

    def __str__(self):
        lo, hi = self.decimal_bounds(21)
        return f"[{lo}, {hi}]"


def _decimal(x: Fraction, digits: int, *, toward_floor: bool) -> str:
    if digits < 1:
        raise ValueError("digits must be positive")
    sign = "-" if x < 0 else ""
    scaled = abs(x) * 10**digits
    n = scaled.numerator // scaled.denominator
    if (x >= 0) != toward_floor and scaled.denominator != 1 and scaled.numerator % scaled.denominator:
        n += 1
    whole, frac = divmod(n, 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


# --- arithmetic -------------------------------------------------------------

def log2_of(value, precision: int = DEFAULT_PRECISION) -> Enclosure:
    """Enclosure of log2 of a positive integer or rational."""
    v = _to_exact(value)
    if v <= 0:
        raise ValueError(f"log2 requires a positive argument, got {v}")
    down, up = _contexts(precision)
    return Enclosure(down.log2(v), up.log2(v))


def sqrt_of(value, precision: int = DEFAULT_PRECISION) -> Enclosure:
    v = _to_exact(value)
    if v < 0:
        raise ValueError(f"sqrt requires a nonnegative argument, got {v}")
    down, up = _contexts(precision)
    return Enclosure(down.sqrt(v), up.sqrt(v))


def _prec(*encs: Enclosure) -> int:
    return max(e.lo.precision for e in encs)


def add(a: Enclosure, b: Enclosure) -> Enclosure:
    down, up = _contexts(_prec(a, b))
    return Enclosure(down.add(a.lo, b.lo), up.add(a.hi, b.hi))


def sub(a: Enclosure, b: Enclosure) -> Enclosure:
    down, up = _contexts(_prec(a, b))
    return Enclosure(down.sub(a.lo, b.hi), up.sub(a.hi, b.lo))


def mul(a: Enclosure, b: Enclosure) -> Enclosure:
    """Product of nonnegative enclosures; the only case the package needs."""
    if a.lo < 0 or b.lo < 0:
        raise ValueError("mul is implemented for nonnegative enclosures only")
    down, up = _contexts(_prec(a, b))
    return Enclosure(down.mul(a.lo, b.lo), up.mul(a.hi, b.hi))


def scale(a: Enclosure, factor) -> Enclosure:
    """Multiply by an exact nonnegative integer or rational."""
    f = _to_exact(factor)
    if f < 0:
        raise ValueError("scale factor must be nonnegative")
    down, up = _contexts(_prec(a))
    return Enclosure(down.mul(a.lo, f), up.mul(a.hi, f))


def div_exact(a: Enclosure, divisor) -> Enclosure:
    """Divide by an exact positive integer or rational."""
    d = _to_exact(divisor)
    if d <= 0:
        raise ValueError("divisor must be positive")
    down, up = _contexts(_prec(a))
    return Enclosure(down.div(a.lo, d), up.div(a.hi, d))


def exp2_of(a: Enclosure) -> Enclosure:
    down, up = _contexts(_prec(a))
    return Enclosure(down.exp2(a.lo), up.exp2(a.hi))


def exp2_exact(value, precision: int = DEFAULT_PRECISION) -> Enclosure:
    """Enclosure of 2**x for an exact rational exponent."""
    v = _to_exact(value)
    down, up = _contexts(precision)
    return Enclosure(down.exp2(v), up.exp2(v))


def hull(*encs: Enclosure) -> Enclosure:
    if not encs:
        raise ValueError("hull needs at least one enclosure")
    return Enclosure(min(e.lo for e in encs), max(e.hi for e in encs))


def min_of(*encs: Enclosure) -> Enclosure:
    # min(lo_i) <= min(hi_i) holds because the enclosure attaining min(hi_i)
    # has its own lo below that.
    if not encs:
        raise ValueError("min_of needs at least one enclosure")
    return Enclosure(min(e.lo for e in encs), min(e.hi for e in encs))
