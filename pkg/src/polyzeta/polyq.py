"""Exact univariate polynomials over the rationals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Union

from . import _zpoly as zp
from .errors import DegenerateInputError, ParseError
from .numkernel import as_rat, primes_up_to

NEG_INF = float("-inf")

Number = Union[int, Fraction, str]


@dataclass(frozen=True, init=False)
class RatPoly:
    """Polynomial with ascending rational coefficients (``coeffs[i]`` multiplies X**i).

    Trailing zeros are stripped on construction, so the zero polynomial has an
    empty coefficient tuple and degree ``-inf``.
    """

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [as_rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def constant(cls, c: Number) -> "RatPoly":
        return cls([c])

    @classmethod
    def x(cls) -> "RatPoly":
        return cls([0, 1])

    @classmethod
    def from_roots(cls, *roots: Number) -> "RatPoly":
        out = cls([1])
        for r in roots:
            out = out * cls([-as_rat(r), 1])
        return out

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def is_monic(self) -> bool:
        return self.lc == 1

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"RatPoly({to_text(self)!r})"

    def __str__(self):
        return to_text(self)

    # ring operations

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return RatPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return RatPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if not self.coeffs or not other.coeffs:
            return RatPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RatPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        out, base = RatPoly([1]), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __divmod__(self, other):
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        dq = len(r) - len(other.coeffs)
        if dq < 0:
            return RatPoly(), self
        q = [Fraction(0)] * (dq + 1)
        inv = 1 / other.lc
        for k in range(dq, -1, -1):
            c = r[k + len(other.coeffs) - 1] * inv
            q[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    r[k + j] -= c * b
        return RatPoly(q), RatPoly(r[: len(other.coeffs) - 1])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "RatPoly":
        q, r = divmod(self, other)
        if r:
            raise ValueError(f"{other} does not divide {self}")
        return q

    def __call__(self, x):
        v = 0
        for c in reversed(self.coeffs):
            v = v * x + c
        return v

    def derivative(self) -> "RatPoly":
        return RatPoly(i * self.coeffs[i] for i in range(1, len(self.coeffs)))

    def monic(self) -> "RatPoly":
        if self.is_zero():
            raise DegenerateInputError("the zero polynomial has no monic associate")
        return self * (1 / self.lc)

    def compose(self, inner: "RatPoly") -> "RatPoly":
        out = RatPoly()
        for c in reversed(self.coeffs):
            out = out * inner + RatPoly([c])
        return out

    def denominator_lcm(self) -> int:
        return lcm(*(c.denominator for c in self.coeffs)) if self.coeffs else 1

    def to_primitive(self) -> tuple[Fraction, list[int]]:
        """Return ``(u, P)`` with ``self == u * P``, ``P`` primitive in Z[X] with positive lc."""
        if self.is_zero():
            return Fraction(0), []
        d = self.denominator_lcm()
        ints = [int(c * d) for c in self.coeffs]
        prim = zp.primitive(ints)
        return self.lc / prim[-1], prim

    @classmethod
    def from_ints(cls, ints: Iterable[int]) -> "RatPoly":
        return cls(ints)


def _coerce(x) -> RatPoly:
    if isinstance(x, RatPoly):
        return x
    return RatPoly([x])


@dataclass(frozen=True)
class QFactorization:
    """``unit * prod(F**beta)`` with distinct monic irreducible ``F`` over Q."""

    unit: Fraction
    factors: tuple[tuple[RatPoly, int], ...]

    def expand(self) -> RatPoly:
        out = RatPoly([self.unit])
        for g, e in self.factors:
            out = out * g**e
        return out

    @property
    def factor_count(self) -> int:
        """Number of irreducible factors counted with multiplicity."""
        return sum(e for _, e in self.factors)

    def is_irreducible(self) -> bool:
        return self.factor_count == 1


# ---------------------------------------------------------------------------
# Text form


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg):
        raise ParseError(msg, self.text, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def uint(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected an unsigned integer")
        return int(self.text[start : self.pos])

    def var_power(self) -> int:
        # assumes the current char is the variable
        self.pos += 1
        if self.peek() == "^":
            self.pos += 1
            return self.uint()
        return 1

    def term(self) -> tuple[Fraction, int]:
        ch = self.peek()
        if ch in ("x", "X"):
            return Fraction(1), self.var_power()
        if not ch.isdigit():
            self.error("expected a coefficient or 'x'")
        num = self.uint()
        coeff = Fraction(num)
        if self.peek() == "/":
            self.pos += 1
            where = self.pos
            den = self.uint()
            if den == 0:
                self.pos = where
                self.error("zero denominator")
            coeff = Fraction(num, den)
        ch = self.peek()
        if ch == "*":
            self.pos += 1
            if self.peek() not in ("x", "X"):
                self.error("expected 'x' after '*'")
            return coeff, self.var_power()
        if ch in ("x", "X"):
            return coeff, self.var_power()
        return coeff, 0

    def parse(self) -> RatPoly:
        acc: dict[int, Fraction] = {}
        sign = 1
        if self.peek() in "+-" and self.peek():
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
        while True:
            c, e = self.term()
            acc[e] = acc.get(e, Fraction(0)) + sign * c
            ch = self.peek()
            if not ch:
                break
            if ch not in "+-":
                self.error(f"unexpected character {ch!r}")
            sign = -1 if ch == "-" else 1
            self.pos += 1
        top = max(acc)
        return RatPoly(acc.get(i, 0) for i in range(top + 1))


def parse_poly(text: str) -> RatPoly:
    """Parse ``text`` such as ``"x^3+6*x^2+9*x+1"`` or ``"1/2*x^2-3"``.

    A single leading sign is accepted in addition to the term grammar so that
    the canonical printer's output (e.g. ``"-x+1"``) always re-parses.
    """
    if not text.strip():
        raise ParseError("empty polynomial", text, 0)
    return _Parser(text).parse()


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def to_text(f: RatPoly) -> str:
    """Canonical text: descending powers, explicit ``*``, reduced fractions."""
    if f.is_zero():
        return "0"
    parts = []
    for i in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if i == 0:
            body = _fmt_coeff(a)
        else:
            mono = "x" if i == 1 else f"x^{i}"
            body = mono if a == 1 else f"{_fmt_coeff(a)}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += sign + body
    return out


# ---------------------------------------------------------------------------
# Algebra


def affine_substitute(f: RatPoly, a: Number, b: Number, c: Number) -> RatPoly:
    """Return ``a * f(b*X + c)`` expanded exactly."""
    a, b, c = as_rat(a), as_rat(b), as_rat(c)
    if a == 0 or b == 0:
        raise DegenerateInputError("a and b must be nonzero")
    return f.compose(RatPoly([c, b])) * a


def gcd_q(f: RatPoly, g: RatPoly) -> RatPoly:
    """Monic gcd in Q[X]."""
    if f.is_zero() and g.is_zero():
        raise DegenerateInputError("gcd of two zero polynomials is undefined")
    if g.is_zero():
        return f.monic()
    if f.is_zero():
        return g.monic()
    _, pf = f.to_primitive()
    _, pg = g.to_primitive()
    return RatPoly(zp.primitive_gcd(pf, pg)).monic()


def squarefree_decomposition(f: RatPoly) -> list[tuple[RatPoly, int]]:
    """Yun's algorithm: ``f = lc(f) * prod(g_i**i)`` with squarefree, coprime, monic ``g_i``.

    Only nonconstant parts are listed, in increasing multiplicity.
    """
    if f.is_zero():
        raise DegenerateInputError("squarefree decomposition of zero")
    if f.is_constant():
        return []
    f = f.monic()
    df = f.derivative()
    a = gcd_q(f, df)
    b = f.exact_div(a)
    c = df.exact_div(a)
    d = c - b.derivative()
    out = []
    i = 1
    while not b.is_constant():
        a = gcd_q(b, d)
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        if not a.is_constant():
            out.append((a, i))
        i += 1
    return out


def radical(f: RatPoly) -> RatPoly:
    """Monic product of the distinct irreducible factors of ``f``."""
    out = RatPoly([1])
    for g, _ in squarefree_decomposition(f):
        out = out * g
    return out


def admissible_primes(f: RatPoly, bound: int) -> list[int]:
    """Primes ``p <= bound`` dividing no coefficient denominator of ``f``."""
    d = f.denominator_lcm()
    return [p for p in primes_up_to(bound).primes if d % p]
