"""Polynomials over prime fields, complete factorization and factorization patterns.

Internally polynomials are ascending lists of residues; ``[]`` is zero.  The
public :class:`ModPoly` wraps such a list together with its prime.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable

from .errors import DegenerateInputError, InadmissiblePrimeError
from .numkernel import is_prime
from .polyq import NEG_INF, RatPoly

MAX_PRIME = 2**62


@dataclass(frozen=True, init=False)
class ModPoly:
    p: int
    coeffs: tuple[int, ...]

    def __init__(self, p: int, coeffs: Iterable[int]):
        if p >= MAX_PRIME:
            raise ValueError(f"prime {p} exceeds the supported bound 2**62")
        cs = [c % p for c in coeffs]
        _trim(cs)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __mul__(self, other: "ModPoly") -> "ModPoly":
        return ModPoly(self.p, _mul(list(self.coeffs), list(other.coeffs), self.p))

    def __pow__(self, e: int) -> "ModPoly":
        out = [1]
        for _ in range(e):
            out = _mul(out, list(self.coeffs), self.p)
        return ModPoly(self.p, out)

    def __call__(self, x: int) -> int:
        v = 0
        for c in reversed(self.coeffs):
            v = (v * x + c) % self.p
        return v

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return "+".join(terms)


@dataclass(frozen=True, init=False)
class FactorizationPattern:
    """Canonical multiset of ``(exponent, degree)`` pairs, stored sorted."""

    pairs: tuple[tuple[int, int], ...]

    def __init__(self, pairs: Iterable[tuple[int, int]] = ()):
        object.__setattr__(self, "pairs", tuple(sorted((int(a), int(d)) for a, d in pairs)))

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)

    def __bool__(self):
        return bool(self.pairs)

    @property
    def weighted_degree(self) -> int:
        return sum(a * d for a, d in self.pairs)

    def union(self, other: "FactorizationPattern") -> "FactorizationPattern":
        return FactorizationPattern(self.pairs + other.pairs)

    def repeated(self, times: int) -> "FactorizationPattern":
        """Multiset union of ``times`` copies."""
        return FactorizationPattern(self.pairs * times)

    def linear_weight(self) -> int:
        """Sum of exponents over degree-1 entries (number of roots with multiplicity)."""
        return sum(a for a, d in self.pairs if d == 1)

    def to_list(self) -> list[list[int]]:
        return [[a, d] for a, d in self.pairs]

    def __repr__(self):
        return f"FactorizationPattern({list(self.pairs)})"


@dataclass(frozen=True)
class ModFactorization:
    unit: int
    factors: tuple[tuple[ModPoly, int], ...]

    @property
    def p(self):
        return self.factors[0][0].p if self.factors else None

    def expand(self, p: int) -> ModPoly:
        out = [self.unit % p] if self.unit % p else []
        for g, e in self.factors:
            for _ in range(e):
                out = _mul(out, list(g.coeffs), p)
        return ModPoly(p, out)

    def pattern(self) -> FactorizationPattern:
        return FactorizationPattern((e, g.degree) for g, e in self.factors)


# ---------------------------------------------------------------------------
# list arithmetic over F_p


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _add(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return _trim(out)


def _sub(a, b, p):
    out = list(a) + [0] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _trim(out)


def _mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([c % p for c in out])


def _divmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], r
    inv = pow(b[-1], -1, p)
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c = r[k + db] * inv % p
        q[k] = c
        if c:
            for j in range(db + 1):
                r[k + j] = (r[k + j] - c * b[j]) % p
    return _trim(q), _trim(r[:db])


def _rem(a, b, p):
    """Remainder modulo a monic ``b``."""
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return r
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k] % p
        if c:
            s = k - db
            for j in range(db):
                r[s + j] -= c * b[j]
    return _trim([c % p for c in r[:db]])


def _monic(a, p):
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _gcd(a, b, p):
    """Monic gcd (``[]`` only if both are zero)."""
    while b:
        a, b = b, _divmod(a, b, p)[1]
    return _monic(a, p) if a else []


def _mulmod(a, b, m, p):
    return _rem(_mul(a, b, p), m, p)


def _powmod(a, e: int, m, p):
    """``a**e mod m`` for monic ``m``."""
    out = [1]
    base = _rem(a, m, p)
    while e:
        if e & 1:
            out = _mulmod(out, base, m, p)
        e >>= 1
        if e:
            base = _mulmod(base, base, m, p)
    return _rem(out, m, p)


def _deriv(a, p):
    return _trim([i * a[i] % p for i in range(1, len(a))])


def _pth_root(a, p):
    # a(X) = b(X**p); coefficients of F_p are their own p-th roots
    return [a[i] for i in range(0, len(a), p)]


def _is_one(a):
    return len(a) == 1 and a[0] == 1


def _squarefree(f, p) -> list[tuple[list[int], int]]:
    """Squarefree factorization of a monic ``f`` over F_p."""
    out = []
    c = _gcd(f, _deriv(f, p), p)
    w = _divmod(f, c, p)[0]
    i = 1
    while not _is_one(w):
        y = _gcd(w, c, p)
        z = _divmod(w, y, p)[0]
        if not _is_one(z):
            out.append((z, i))
        i += 1
        w = y
        c = _divmod(c, y, p)[0]
    if not _is_one(c):
        for g, e in _squarefree(_pth_root(c, p), p):
            out.append((g, e * p))
    return out


def _frobenius_rows(f, p):
    """Rows ``X**(p*j) mod f`` for ``j < deg f``."""
    n = len(f) - 1
    xp = _powmod([0, 1], p, f, p)
    rows = [[1]]
    for _ in range(1, n):
        rows.append(_mulmod(rows[-1], xp, f, p))
    return rows


def _apply_frobenius(h, rows, p):
    n = len(rows)
    acc = [0] * n
    for k, c in enumerate(h):
        if c:
            for j, r in enumerate(rows[k]):
                acc[j] += c * r
    return _trim([v % p for v in acc])


def _ddf(f, p) -> list[tuple[list[int], int]]:
    """Distinct-degree factorization of a monic squarefree ``f``.

    Returns ``(g, d)`` where ``g`` is the product of all degree-``d`` irreducible
    factors of ``f``.
    """
    out = []
    if len(f) - 1 == 1:
        return [(f, 1)]
    rows = _frobenius_rows(f, p)
    h = [0, 1]
    rest = f
    d = 0
    while len(rest) - 1 >= 2 * (d + 1):
        d += 1
        h = _apply_frobenius(h, rows, p)
        g = _gcd(rest, _sub(h, [0, 1], p), p)
        if not _is_one(g):
            out.append((g, d))
            rest = _divmod(rest, g, p)[0]
    if len(rest) > 1:
        out.append((rest, len(rest) - 1))
    return out


def _edf(g, d, p, rng: random.Random) -> list[list[int]]:
    """Split a monic product of degree-``d`` irreducibles into its factors."""
    n = len(g) - 1
    if n == d:
        return [g]
    while True:
        a = _trim([rng.randrange(p) for _ in range(n)])
        if len(a) < 2:
            continue
        if p == 2:
            t, s = list(a), list(a)
            for _ in range(d - 1):
                t = _mulmod(t, t, g, p)
                s = _add(s, t, p)
            cand = _gcd(g, s, p)
        else:
            b = _powmod(a, (p**d - 1) // 2, g, p)
            cand = _gcd(g, _sub(b, [1], p), p)
        if 1 < len(cand) < len(g):
            other = _divmod(g, cand, p)[0]
            return _edf(cand, d, p, rng) + _edf(other, d, p, rng)


# ---------------------------------------------------------------------------
# public API


def check_prime(p: int) -> None:
    if p >= MAX_PRIME:
        raise ValueError(f"prime {p} exceeds the supported bound 2**62")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def reduce_mod_p(f: RatPoly, p: int) -> ModPoly:
    """Coefficientwise reduction of ``f`` modulo ``p``, inverting denominators."""
    check_prime(p)
    out = []
    for c in f.coeffs:
        if c.denominator % p == 0:
            raise InadmissiblePrimeError(p, f)
        out.append(c.numerator * pow(c.denominator, -1, p) % p)
    return ModPoly(p, out)


def factor_mod_p(g: ModPoly, seed: int = 0) -> ModFactorization:
    """Complete factorization into monic irreducibles with exponents.

    Factors are sorted by degree then coefficients, so the result does not
    depend on ``seed``; the seed only drives the equal-degree splitting.
    """
    if g.is_zero():
        raise DegenerateInputError("cannot factor the zero polynomial")
    p = g.p
    coeffs = list(g.coeffs)
    unit = coeffs[-1]
    if len(coeffs) == 1:
        return ModFactorization(unit, ())
    rng = random.Random(seed)
    found = []
    for part, e in _squarefree(_monic(coeffs, p), p):
        for prod, d in _ddf(part, p):
            for h in _edf(prod, d, p, rng):
                found.append((ModPoly(p, h), e))
    found.sort(key=lambda fe: (len(fe[0].coeffs), fe[0].coeffs, fe[1]))
    return ModFactorization(unit, tuple(found))


def pattern_of(g: ModPoly) -> FactorizationPattern:
    """Factorization pattern of a reduced polynomial (empty if constant or zero)."""
    p = g.p
    if len(g.coeffs) <= 1:
        return FactorizationPattern()
    pairs = []
    for part, e in _squarefree(_monic(list(g.coeffs), p), p):
        for prod, d in _ddf(part, p):
            pairs.extend([(e, d)] * ((len(prod) - 1) // d))
    return FactorizationPattern(pairs)


def factorization_pattern(f: RatPoly, p: int, seed: int = 0) -> FactorizationPattern:
    """Multiset of ``(exponent, degree)`` over the irreducible factors of ``f mod p``.

    Degrees come from distinct-degree factorization, which is deterministic, so
    ``seed`` has no effect; it is accepted for interface symmetry with
    :func:`factor_mod_p`.
    """
    return pattern_of(reduce_mod_p(f, p))


def splits_completely(f: RatPoly, p: int) -> bool:
    g = reduce_mod_p(f, p)
    if g.degree != f.degree:
        return False
    return all(d == 1 for _, d in pattern_of(g))


def has_root_mod_p(f: RatPoly, p: int) -> bool:
    """True iff the pattern of ``f mod p`` has a degree-1 entry.

    A reduction that vanishes identically has the empty pattern and so counts
    as having no root.
    """
    return any(d == 1 for _, d in pattern_of(reduce_mod_p(f, p)))


def resultant_mod_p(f: ModPoly, g: ModPoly) -> int:
    """Resultant over F_p (same sign convention as :func:`polyzeta.resdisc.resultant`)."""
    p = f.p
    a, b = list(f.coeffs), list(g.coeffs)
    if not a or not b:
        return 0
    acc = 1
    while True:
        n, m = len(a) - 1, len(b) - 1
        if m == 0:
            return acc * pow(b[0], n, p) % p
        if n == 0:
            return acc * pow(a[0], m, p) % p
        # Res(a, b) = (-1)^(nm) Res(b, a) and Res(b, a) = lc(b)^(n - deg r) Res(b, r)
        r = _divmod(a, b, p)[1]
        if not r:
            return 0
        if (n * m) % 2:
            acc = -acc
        acc = acc * pow(b[-1], n - (len(r) - 1), p) % p
        a, b = b, r


def roots_brute_force(g: ModPoly) -> list[int]:
    """All roots by exhaustive evaluation; only sensible for small ``p``."""
    return [x for x in range(g.p) if g(x) == 0]


def _inverse_mod(a, m, p):
    """Inverse of ``a`` modulo the polynomial ``m`` over F_p (they must be coprime)."""
    r0, r1 = list(m), _divmod(a, m, p)[1]
    s0, s1 = [], [1]
    while r1:
        q, r = _divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _sub(s0, _mul(q, s1, p), p)
    if len(r0) != 1:
        raise ValueError("polynomials are not coprime")
    inv = pow(r0[0], -1, p)
    return _divmod([c * inv % p for c in s0], m, p)[1]
