"""Brute-force factorization over Q by Kronecker's interpolation method.

This is the ground truth the statistical estimators are checked against, so it
deliberately uses nothing from the modular code path: rational roots are
removed first, then for each degree ``d <= n/2`` every integer polynomial that
interpolates divisors of ``f`` at ``d + 1`` sample points is tried by exact
division.  A factor of least degree is irreducible, so exhausting the
candidate set certifies irreducibility of what remains.
"""

from __future__ import annotations

import itertools
from math import gcd, lcm

from . import _zpoly as zp
from .errors import DegenerateInputError, DegreeCapError
from .numkernel import divisors
from .polyq import QFactorization, RatPoly, squarefree_decomposition

DEFAULT_DEGREE_CAP = 8


def _sample_points(n_pool: int):
    yield 0
    for k in range(1, n_pool):
        yield k
        yield -k


def _rational_roots(poly: list[int]) -> tuple[list[list[int]], list[int]]:
    """Split off all linear factors ``b*X - a`` of a primitive squarefree poly."""
    found = []
    rest = list(poly)
    if rest[0] == 0:
        found.append([0, 1])
        rest = rest[1:]
    changed = True
    while changed and zp.deg(rest) >= 1:
        changed = False
        for b in divisors(rest[-1]):
            for a in divisors(rest[0]):
                for sa in (a, -a):
                    if gcd(sa, b) != 1:
                        continue
                    q = zp.exact_div(rest, [-sa, b])
                    if q is not None:
                        found.append([-sa, b])
                        rest = q
                        changed = True
                        break
                if changed:
                    break
            if changed:
                break
    return found, rest


def _lagrange_basis(xs: list[int]):
    """Integer numerators ``N_i`` and common denominator ``D`` with ``L_i = N_i / D``."""
    basis = []
    for i, xi in enumerate(xs):
        num = [1]
        den = 1
        for j, xj in enumerate(xs):
            if j != i:
                num = zp.mul(num, [-xj, 1])
                den *= xi - xj
        basis.append((num, den))
    common = lcm(*(abs(d) for _, d in basis))
    return [[c * (common // d) for c in num] for num, d in basis], common


def _find_factor(poly: list[int], d: int) -> list[int] | None:
    """A primitive factor of degree exactly ``d``, or None if there is none."""
    lc, n = poly[-1], zp.deg(poly)
    pool = []
    for x in _sample_points(2 * n + 6):
        v = zp.evaluate(poly, x)
        if v:
            pool.append((x, v))
    # fewest divisors first: keeps the candidate product small
    ranked = sorted(pool, key=lambda xv: (len(divisors(xv[1])), abs(xv[0])))
    chosen = ranked[: d + 1]
    checks = ranked[d + 1 :]
    xs = [x for x, _ in chosen]
    nums, common = _lagrange_basis(xs)
    choices = []
    for k, (_, v) in enumerate(chosen):
        ds = divisors(v)
        # h and -h are equivalent: fix the sign at the first point
        choices.append(ds if k == 0 else ds + [-t for t in ds])
    for vals in itertools.product(*choices):
        acc = [0] * (d + 1)
        for v, num in zip(vals, nums):
            for k, c in enumerate(num):
                acc[k] += v * c
        if acc[d] == 0 or any(c % common for c in acc):
            continue
        h = [c // common for c in acc]
        if lc % h[-1] or poly[0] % h[0]:
            continue
        if any(zp.evaluate(poly, x) % zp.evaluate(h, x) for x, _ in checks if zp.evaluate(h, x)):
            continue
        if zp.exact_div(poly, h) is not None:
            return zp.primitive(h)
    return None


def _factor_squarefree(poly: list[int]) -> list[list[int]]:
    """Irreducible primitive factors of a primitive squarefree integer polynomial."""
    linear, rest = _rational_roots(poly)
    out = [zp.primitive(h) for h in linear]
    d = 2
    while zp.deg(rest) >= 2 * d:
        h = _find_factor(rest, d)
        if h is None:
            d += 1
            continue
        out.append(h)
        rest = zp.exact_div(rest, h)
    if zp.deg(rest) >= 1:
        out.append(zp.primitive(rest))
    return out


def _sort_key(g: RatPoly):
    return (g.degree, tuple(reversed(g.coeffs)))


def factor_over_q(f: RatPoly, degree_cap: int = DEFAULT_DEGREE_CAP) -> QFactorization:
    """Complete factorization ``f = q * prod(F_j**beta_j)`` into monic irreducibles.

    The result is re-expanded and compared with ``f`` before returning.
    """
    if f.is_zero():
        raise DegenerateInputError("cannot factor the zero polynomial")
    if f.degree > degree_cap:
        raise DegreeCapError(
            f"degree {f.degree} exceeds degree_cap={degree_cap}; "
            "pass a larger degree_cap (cost grows quickly with degree)"
        )
    factors = []
    for g, mult in squarefree_decomposition(f):
        _, prim = g.to_primitive()
        for h in _factor_squarefree(prim):
            factors.append((RatPoly(h).monic(), mult))
    factors.sort(key=lambda fe: (_sort_key(fe[0]), fe[1]))
    result = QFactorization(f.lc, tuple(factors))
    if result.expand() != f:
        raise AssertionError(f"re-expansion mismatch while factoring {f}")
    return result
