"""Small integer number-theory helpers (trial division scale)."""

from __future__ import annotations

import math


def is_prime(n: int) -> bool:
    """Deterministic primality by trial division; adequate for n up to ~10**14."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    limit = math.isqrt(n)
    while d <= limit:
        if n % d == 0:
            return False
        d += 2
    return True


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than n."""
    c = n + 1
    if c <= 2:
        return 2
    if c % 2 == 0:
        c += 1
    while not is_prime(c):
        c += 2
    return c


def check_distinct_primes(factors: list[int] | tuple[int, ...]) -> None:
    """Raise ValueError unless all factors are distinct primes."""
    seen = set()
    for f in factors:
        if not is_prime(f):
            raise ValueError(f"factor {f} is not prime")
        if f in seen:
            raise ValueError(f"repeated prime factor {f}")
        seen.add(f)


def mod_inverse(a: int, m: int) -> int:
    """Inverse of a modulo m; raises ValueError if gcd(a, m) != 1."""
    g = math.gcd(a % m, m)
    if g != 1:
        raise ValueError(f"{a} is not invertible modulo {m} (gcd={g})")
    return pow(a % m, -1, m)
