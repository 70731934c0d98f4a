"""Exact arithmetic for thresholds of the form a + b*sqrt(u).

Membership predicates in this package (Hamming balls of radius p*sqrt(n),
weight cutoffs n/2 - p*sqrt(n), norm cutoffs n - q*sqrt(n) - 1, ...) compare a
rational quantity against a quadratic surd.  Floating point is never used for
those comparisons: every test reduces to integer/Fraction arithmetic on
squares, so set membership is exact and platform independent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational


def _as_fraction(x) -> Fraction:
    if isinstance(x, Rational):
        return Fraction(x)
    if isinstance(x, float):
        # Interpret a float through its shortest decimal repr, so 0.1 means 1/10.
        return Fraction(str(x))
    raise TypeError(f"expected a rational value, got {type(x).__name__}")


@dataclass(frozen=True)
class Surd:
    """The real number a + b*sqrt(under), with a, b rational and under >= 0."""

    a: Fraction
    b: Fraction
    under: int

    def __post_init__(self):
        object.__setattr__(self, "a", _as_fraction(self.a))
        object.__setattr__(self, "b", _as_fraction(self.b))
        if self.under < 0:
            raise ValueError("under must be a nonnegative integer")

    @staticmethod
    def rational(x) -> "Surd":
        return Surd(_as_fraction(x), Fraction(0), 0)

    @staticmethod
    def sqrt(coeff, under: int, shift=0) -> "Surd":
        """shift + coeff*sqrt(under)."""
        return Surd(_as_fraction(shift), _as_fraction(coeff), under)

    def is_rational(self) -> bool:
        if self.b == 0 or self.under == 0:
            return True
        r = math.isqrt(self.under)
        return r * r == self.under

    def exact_rational(self) -> Fraction:
        """Value as a Fraction; raises if irrational."""
        if self.b == 0 or self.under == 0:
            return self.a
        r = math.isqrt(self.under)
        if r * r != self.under:
            raise ValueError("value is irrational")
        return self.a + self.b * r

    def cmp(self, x) -> int:
        """Sign of (self - x) for rational x: -1, 0, or +1. Exact."""
        t = _as_fraction(x) - self.a          # compare b*sqrt(u) against t
        b, u = self.b, self.under
        if b == 0 or u == 0:
            return (t < 0) - (t > 0)
        r = math.isqrt(u)
        if r * r == u:                         # sqrt(u) is an integer
            v = b * r - t
            return (v > 0) - (v < 0)
        # sqrt(u) irrational: b*sqrt(u) = t is impossible unless both are 0.
        if b > 0:
            if t <= 0:
                return 1
            return 1 if b * b * u > t * t else -1
        if t >= 0:
            return -1
        # both sides negative: b*sqrt(u) > t  <=>  |b|*sqrt(u) < |t|
        return 1 if b * b * u < t * t else -1

    def __ge__(self, x) -> bool:
        return self.cmp(x) >= 0

    def __gt__(self, x) -> bool:
        return self.cmp(x) > 0

    def __le__(self, x) -> bool:
        return self.cmp(x) <= 0

    def __lt__(self, x) -> bool:
        return self.cmp(x) < 0

    def scaled(self, k) -> "Surd":
        k = _as_fraction(k)
        return Surd(self.a * k, self.b * k, self.under)

    def shifted(self, d) -> "Surd":
        return Surd(self.a + _as_fraction(d), self.b, self.under)

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.under)

    def __str__(self) -> str:
        if self.b == 0 or self.under == 0:
            return str(self.a)
        return f"{self.a} + {self.b}*sqrt({self.under})"


def min_int_ge(value: Surd, lo: int, hi: int) -> int:
    """Smallest integer N in [lo, hi] with N >= value; returns hi+1 if none.

    Used to turn an exact surd threshold into an integer cutoff so that bulk
    comparisons can run vectorized on integer arrays.
    """
    if value.cmp(hi) > 0:
        return hi + 1
    if value.cmp(lo) <= 0:
        return lo
    # invariant: value > lo_, value <= hi_
    lo_, hi_ = lo, hi
    while hi_ - lo_ > 1:
        mid = (lo_ + hi_) // 2
        if value.cmp(mid) <= 0:
            hi_ = mid
        else:
            lo_ = mid
    return hi_


def max_int_le(value: Surd, lo: int, hi: int) -> int:
    """Largest integer N in [lo, hi] with N <= value; returns lo-1 if none."""
    if value.cmp(lo) < 0:
        return lo - 1
    if value.cmp(hi) >= 0:
        return hi
    lo_, hi_ = lo, hi
    while hi_ - lo_ > 1:
        mid = (lo_ + hi_) // 2
        if value.cmp(mid) >= 0:
            lo_ = mid
        else:
            hi_ = mid
    return lo_
