"""Exact integer/rational helpers and prime generation.

Rationals are :class:`fractions.Fraction`, which is always reduced with a
positive denominator, so equal values have identical representations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

import numpy as np

BigRat = Fraction

# Above this bound primes_up_to switches to a segmented sieve.
SEGMENT_THRESHOLD = 10**7
_SEGMENT_SIZE = 2**22


@dataclass(frozen=True)
class PrimeRange:
    bound: int
    primes: tuple[int, ...]

    def __len__(self):
        return len(self.primes)

    def __iter__(self):
        return iter(self.primes)

    def __contains__(self, p):
        return p in self._members

    @cached_property
    def _members(self):
        return frozenset(self.primes)


def as_rat(x) -> Fraction:
    """Coerce an int, Fraction or ``"a/b"`` string to an exact rational."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass an int, Fraction or string")
    return Fraction(x)


def _simple_sieve(limit: int) -> np.ndarray:
    if limit < 2:
        return np.array([], dtype=np.int64)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p :: p] = False
    return np.flatnonzero(is_prime).astype(np.int64)


def _segmented_sieve(limit: int) -> np.ndarray:
    base = _simple_sieve(math.isqrt(limit))
    chunks = [base]
    low = math.isqrt(limit) + 1
    while low <= limit:
        high = min(low + _SEGMENT_SIZE, limit + 1)
        mask = np.ones(high - low, dtype=bool)
        for p in base:
            p = int(p)
            if p * p >= high:
                break
            start = max(p * p, -(-low // p) * p)
            mask[start - low :: p] = False
        chunks.append(np.flatnonzero(mask).astype(np.int64) + low)
        low = high
    return np.concatenate(chunks)


@lru_cache(maxsize=16)
def primes_up_to(bound: int) -> PrimeRange:
    """All primes ``<= bound`` in ascending order.

    >>> primes_up_to(10).primes
    (2, 3, 5, 7)
    """
    if bound < 1:
        raise ValueError(f"bound must be positive, got {bound}")
    if bound > SEGMENT_THRESHOLD:
        arr = _segmented_sieve(bound)
    else:
        arr = _simple_sieve(bound)
    return PrimeRange(bound, tuple(int(p) for p in arr))


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality for ``n < 3.18e23`` (fixed Miller-Rabin bases)."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factor_int(n: int) -> dict[int, int]:
    """Prime factorization of ``|n|`` by trial division; ``{}`` for 0 and +-1."""
    n = abs(n)
    out: dict[int, int] = {}
    if n < 2:
        return out
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_divisors(*values) -> set[int]:
    """Primes dividing the numerator or denominator of any nonzero value."""
    out: set[int] = set()
    for v in values:
        v = as_rat(v)
        if v == 0:
            continue
        out.update(factor_int(v.numerator))
        out.update(factor_int(v.denominator))
    return out


def divisors(n: int) -> list[int]:
    """Positive divisors of ``|n|`` in ascending order (``n`` nonzero)."""
    if n == 0:
        raise ValueError("0 has infinitely many divisors")
    divs = [1]
    for p, e in factor_int(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def squarefree_part(n: int) -> tuple[int, int]:
    """Split a nonzero integer as ``n = s * k**2`` with ``s`` squarefree, ``k > 0``."""
    if n == 0:
        raise ValueError("0 has no squarefree part")
    s, k = (1 if n > 0 else -1), 1
    for p, e in factor_int(n).items():
        s *= p ** (e % 2)
        k *= p ** (e // 2)
    return s, k
