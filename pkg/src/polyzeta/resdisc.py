"""Resultants and discriminants over Z and Q.

Convention: ``Res(f, g) = lc(f)**deg(g) * prod(g(r) for r in roots(f))``, which
is the determinant of the Sylvester matrix with the rows of ``f`` on top.
For a constant ``g = c`` this gives ``c**deg(f)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from . import _zpoly as zp
from .errors import DegenerateInputError
from .polyq import RatPoly


@dataclass(frozen=True)
class ResultantValue:
    value: Fraction
    # True when g was the zero polynomial and 0 was returned by convention.
    degenerate: bool = False

    def __eq__(self, other):
        if isinstance(other, ResultantValue):
            return self.value == other.value and self.degenerate == other.degenerate
        return self.value == other

    def __hash__(self):
        return hash(self.value)

    def __int__(self):
        return int(self.value)


def _res_int(a: list[int], b: list[int]) -> int:
    """Subresultant PRS resultant of nonzero integer polynomials, deg a >= 1."""
    da, db = zp.deg(a), zp.deg(b)
    if db == 0:
        return b[0] ** da
    s = 1
    if da < db:
        a, b = b, a
        da, db = db, da
        if da % 2 and db % 2:
            s = -1
    ca, cb = zp.content(a), zp.content(b)
    a = [c // ca for c in a]
    b = [c // cb for c in b]
    t = ca**db * cb**da
    g = h = 1
    while True:
        delta = zp.deg(a) - zp.deg(b)
        if zp.deg(a) % 2 and zp.deg(b) % 2:
            s = -s
        r = zp.prem(a, b)
        a = b
        if not r:
            return 0
        div = g * h**delta
        b = [c // div for c in r]
        g = a[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = g**delta // h ** (delta - 1)
        if zp.deg(b) == 0:
            da = zp.deg(a)
            return s * t * (b[0] ** da // h ** (da - 1))


def resultant(f: RatPoly, g: RatPoly) -> ResultantValue:
    """Exact resultant of rational polynomials (see module docstring for sign)."""
    if f.is_zero() or g.is_zero():
        if max(f.degree, g.degree) >= 1:
            return ResultantValue(Fraction(0), degenerate=True)
        raise DegenerateInputError("resultant needs a nonconstant argument")
    if f.degree == 0 and g.degree == 0:
        return ResultantValue(Fraction(1))
    if f.degree == 0:
        return ResultantValue(f.lc ** g.degree)
    # Res(u*P, v*Q) = u**deg Q * v**deg P * Res(P, Q)
    u, pf = f.to_primitive()
    v, pg = g.to_primitive()
    r = _res_int(pf, pg)
    return ResultantValue(u ** g.degree * v ** f.degree * r)


def discriminant(f: RatPoly) -> Fraction:
    """``(-1)**(n(n-1)/2) * Res(f, f') / lc(f)`` with ``n = deg f``."""
    if f.is_zero() or f.degree < 1:
        raise DegenerateInputError("discriminant needs degree >= 1")
    n = f.degree
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(f, f.derivative()).value / f.lc


# ---------------------------------------------------------------------------
# Test oracle: Sylvester determinant by Bareiss fraction-free elimination


def sylvester_matrix(f: RatPoly, g: RatPoly) -> list[list[Fraction]]:
    n, m = f.degree, g.degree
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    size = n + m
    rows = []
    for i in range(m):
        rows.append([Fraction(0)] * i + fc + [Fraction(0)] * (size - n - 1 - i))
    for i in range(n):
        rows.append([Fraction(0)] * i + gc + [Fraction(0)] * (size - m - 1 - i))
    return rows


def bareiss_det(mat: list[list[int]]) -> int:
    """Determinant of an integer matrix by fraction-free elimination."""
    a = [list(r) for r in mat]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def sylvester_resultant(f: RatPoly, g: RatPoly) -> Fraction:
    """Resultant as the Sylvester determinant; slow, used only to cross-check."""
    if f.degree < 1 or g.is_zero():
        raise DegenerateInputError("oracle requires deg f >= 1 and g nonzero")
    if g.degree == 0:
        return g.lc ** f.degree
    rows = sylvester_matrix(f, g)
    scale = 1
    int_rows = []
    for r in rows:
        d = lcm(*(c.denominator for c in r))
        scale *= d
        int_rows.append([int(c * d) for c in r])
    return Fraction(bareiss_det(int_rows), scale)
