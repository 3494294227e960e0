"""Euler factors built from factorization patterns, truncated global zeta
products, zeta-class scans, pole-order estimators, Hensel lifting and
arithmetic-zeta Euler factors.
"""

from __future__ import annotations

import cmath
import math
from collections import OrderedDict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import modp
from ._parallel import chunked, ordered_map
from .errors import DegenerateInputError, InadmissiblePrimeError
from .modp import FactorizationPattern, ModPoly
from .numkernel import primes_up_to
from .polyq import RatPoly, admissible_primes

DEFAULT_GRID = (1.5, 1.4, 1.3, 1.25, 1.2)
DEFAULT_ESTIMATOR_BOUND = 10**5


@dataclass(frozen=True)
class EulerFactorSpec:
    prime: int
    pattern: FactorizationPattern

    def log_value(self, s: complex) -> complex:
        logp = math.log(self.prime)
        total = 0j
        for alpha, d in self.pattern:
            total += -alpha * cmath.log(1 - cmath.exp(-d * s * logp))
        return total

    def __call__(self, s: complex) -> complex:
        return euler_factor_eval(self, s)


def euler_factor_eval(spec: EulerFactorSpec, s: complex) -> complex:
    """``prod((1 - p**(-d*s))**(-alpha))`` over the pattern entries."""
    s = complex(s)
    if s.real <= 0:
        raise ValueError("Euler factors are evaluated only for Re(s) > 0")
    return cmath.exp(spec.log_value(s))


# ---------------------------------------------------------------------------
# pattern tables over prime ranges

_TABLE_CACHE: "OrderedDict[tuple, tuple]" = OrderedDict()
_TABLE_CACHE_SIZE = 32


def _patterns_block(f: RatPoly, primes: Sequence[int]):
    return [(p, modp.factorization_pattern(f, p)) for p in primes]


def pattern_table(
    f: RatPoly, bound: int, jobs: int = 1
) -> tuple[tuple[int, FactorizationPattern], ...]:
    """``(p, pattern)`` for every admissible prime ``p <= bound``, ascending."""
    key = (f, bound)
    hit = _TABLE_CACHE.get(key)
    if hit is not None:
        _TABLE_CACHE.move_to_end(key)
        return hit
    primes = admissible_primes(f, bound)
    blocks = chunked(primes, 4 * jobs) if jobs > 1 else [primes]
    rows = []
    for part in ordered_map(_patterns_block, [(f, b) for b in blocks], jobs):
        rows.extend(part)
    table = tuple(rows)
    _TABLE_CACHE[key] = table
    if len(_TABLE_CACHE) > _TABLE_CACHE_SIZE:
        _TABLE_CACHE.popitem(last=False)
    return table


def _fsum_complex(terms: Iterable[complex]) -> complex:
    terms = list(terms)
    return complex(math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms))


def riemann_log_truncated(sigma: float, bound: int) -> float:
    """``log`` of the Riemann Euler product over primes ``<= bound`` at real ``sigma``."""
    return math.fsum(-math.log1p(-(p**-sigma)) for p in primes_up_to(bound).primes)


@dataclass(frozen=True)
class ZetaValue:
    s: complex
    value: complex
    log_value: complex
    # Riemann majorant prod_{p<=B} (1 - p^-Re s)^(-deg f)
    majorant: float
    # False when 0 < Re(s) <= 1, where the full product diverges
    convergent: bool


@dataclass(frozen=True)
class TruncatedZeta:
    poly: RatPoly
    bound: int
    excluded: frozenset
    factors: tuple[EulerFactorSpec, ...]

    @classmethod
    def build(cls, f: RatPoly, bound: int, excluded: Iterable[int] = (), jobs: int = 1):
        excluded = frozenset(int(p) for p in excluded)
        factors = tuple(
            EulerFactorSpec(p, pat)
            for p, pat in pattern_table(f, bound, jobs)
            if p not in excluded
        )
        return cls(f, bound, excluded, factors)

    def log_eval(self, s: complex) -> complex:
        s = complex(s)
        if s.real <= 0:
            raise ValueError("truncated zeta requires Re(s) > 0")
        return _fsum_complex(fac.log_value(s) for fac in self.factors)

    def evaluate(self, s: complex) -> ZetaValue:
        s = complex(s)
        lv = self.log_eval(s)
        deg = max(self.poly.degree, 0)
        major = math.exp(deg * riemann_log_truncated(s.real, self.bound))
        return ZetaValue(s, cmath.exp(lv), lv, major, s.real > 1)


def zeta_truncated(
    f: RatPoly, bound: int, s: complex, excluded: Iterable[int] = (), jobs: int = 1
) -> ZetaValue:
    """Finite Euler product of ``f`` over admissible primes ``<= bound`` not in ``excluded``."""
    return TruncatedZeta.build(f, bound, excluded, jobs).evaluate(s)


def cauchy_gap(f: RatPoly, bound: int, s: float = 2.0, jobs: int = 1) -> float:
    """``|zeta_f^{<=2B}(s) - zeta_f^{<=B}(s)|``."""
    lo = zeta_truncated(f, bound, s, jobs=jobs).value
    hi = zeta_truncated(f, 2 * bound, s, jobs=jobs).value
    return abs(hi - lo)


def literal_tail_bound(f: RatPoly, bound: int) -> float:
    """``deg f * sum(2 p**-2 for B < p <= 2B)``.

    Only valid when ``zeta_f(2)`` is small compared with ``2 deg f`` divided by the
    mean number of roots mod p; :func:`rigorous_tail_bound` holds for every ``f``.
    """
    return max(f.degree, 0) * math.fsum(
        2.0 * p**-2 for p in primes_up_to(2 * bound).primes if p > bound
    )


def rigorous_tail_bound(f: RatPoly, bound: int, s: float = 2.0, jobs: int = 1) -> float:
    """``zeta_f^{<=B}(s) * (exp(deg f * sum_{B<p<=2B} -log(1 - p^-s)) - 1)`` for real ``s > 1``."""
    base = zeta_truncated(f, bound, s, jobs=jobs).value.real
    tail = math.fsum(
        -math.log1p(-(p**-s)) for p in primes_up_to(2 * bound).primes if p > bound
    )
    return base * math.expm1(max(f.degree, 0) * tail)


# ---------------------------------------------------------------------------
# estimators


@dataclass(frozen=True)
class PoleEstimate:
    estimate: float
    method: str
    bound: int
    stats: dict = field(default_factory=dict)
    residual: float = 0.0


def factor_count_mean(f: RatPoly, bound: int = DEFAULT_ESTIMATOR_BOUND, jobs: int = 1) -> PoleEstimate:
    """Mean over admissible ``p <= bound`` of the number of roots of ``f mod p`` with multiplicity.

    The average converges to the number of irreducible factors of ``f`` over Q
    counted with multiplicity.  Accumulation is exact; only the final division
    is rounded.
    """
    if f.is_zero() or f.is_constant():
        raise DegenerateInputError("factor count needs a nonconstant polynomial")
    table = pattern_table(f, bound, jobs)
    if not table:
        raise DegenerateInputError(f"no admissible primes <= {bound}")
    total = sum(pat.linear_weight() for _, pat in table)
    exact = Fraction(total, len(table))
    return PoleEstimate(
        float(exact),
        "chebotarev-mean",
        bound,
        {"primes": len(table), "root_sum": total, "exact_mean": f"{exact.numerator}/{exact.denominator}"},
    )


def _least_squares(xs, ys):
    n = len(xs)
    mx = math.fsum(xs) / n
    my = math.fsum(ys) / n
    sxx = math.fsum((x - mx) ** 2 for x in xs)
    sxy = math.fsum((x - mx) * (y - my) for x, y in zip(xs, ys))
    slope = sxy / sxx
    icpt = my - slope * mx
    rms = math.sqrt(math.fsum((y - icpt - slope * x) ** 2 for x, y in zip(xs, ys)) / n)
    return slope, icpt, rms


def pole_order_estimate(
    f: RatPoly,
    bound: int = DEFAULT_ESTIMATOR_BOUND,
    grid: Sequence[float] = DEFAULT_GRID,
    excluded: Iterable[int] = (),
    jobs: int = 1,
) -> PoleEstimate:
    """Slope of ``log zeta_f^{<=B}(s)`` against ``-log(s - 1)`` over a real grid ``s > 1``."""
    if f.is_zero() or f.is_constant():
        raise DegenerateInputError("pole order needs a nonconstant polynomial")
    grid = [float(s) for s in grid]
    if len(set(grid)) < 3:
        raise DegenerateInputError("grid needs at least 3 distinct points")
    if min(grid) <= 1:
        raise DegenerateInputError("grid points must exceed 1")
    tz = TruncatedZeta.build(f, bound, excluded, jobs)
    xs = [-math.log(s - 1) for s in grid]
    ys = [tz.log_eval(s).real for s in grid]
    slope, icpt, rms = _least_squares(xs, ys)
    return PoleEstimate(
        slope,
        "log-regression",
        bound,
        {"grid": grid, "log_zeta": ys, "intercept": icpt},
        rms,
    )


def class_equiv_scan(f: RatPoly, g: RatPoly, bound: int, jobs: int = 1) -> list[int]:
    """Primes ``<= bound`` where ``f`` and ``g`` have different patterns or admissibility."""
    if f.is_zero() or g.is_zero():
        raise DegenerateInputError("class scan needs nonzero polynomials")
    tf = dict(pattern_table(f, bound, jobs))
    tg = dict(pattern_table(g, bound, jobs))
    out = set(tf).symmetric_difference(tg)
    out.update(p for p in tf.keys() & tg.keys() if tf[p] != tg[p])
    return sorted(out)


# ---------------------------------------------------------------------------
# Hensel lifting and arithmetic zeta


@dataclass(frozen=True)
class HenselLift:
    p: int
    modulus: int
    # monic lifted factors, ascending coefficients reduced into [0, modulus)
    factors: tuple[tuple[int, ...], ...]

    @property
    def degrees(self) -> list[int]:
        return [len(c) - 1 for c in self.factors]

    def product(self) -> tuple[int, ...]:
        out = [1]
        for c in self.factors:
            nxt = [0] * (len(out) + len(c) - 1)
            for i, a in enumerate(out):
                for j, b in enumerate(c):
                    nxt[i + j] += a * b
            out = [v % self.modulus for v in nxt]
        return tuple(out)


def _as_residues(fac, p) -> list[int]:
    if isinstance(fac, ModPoly):
        return list(fac.coeffs)
    if isinstance(fac, RatPoly):
        return list(modp.reduce_mod_p(fac, p).coeffs)
    return [int(c) % p for c in fac]


def hensel_lift_step(f: RatPoly, p: int, factors: Sequence) -> HenselLift:
    """Lift a coprime monic factorization of ``f mod p`` to one modulo ``p**2``.

    ``factors`` may be :class:`ModPoly`, :class:`RatPoly` or ascending residue lists.
    The lifted factors are monic, reduce to the inputs mod ``p`` and multiply to
    ``f / lc(f)`` modulo ``p**2``.
    """
    if f.denominator_lcm() % p == 0:
        raise InadmissiblePrimeError(p, f)
    if not f.is_integral():
        raise ValueError("Hensel lifting expects an integer polynomial")
    if f.degree < 1:
        raise DegenerateInputError("nothing to lift for a constant polynomial")
    ints = [int(c) for c in f.coeffs]
    if ints[-1] % p == 0:
        raise ValueError(f"p = {p} divides the leading coefficient")
    fbar = modp._monic([c % p for c in ints], p)
    if len(modp._gcd(fbar, modp._deriv(fbar, p), p)) > 1:
        raise ValueError(f"reduction mod {p} is not squarefree (ramified case)")
    gs = [_as_residues(g, p) for g in factors]
    if any(not g or g[-1] != 1 for g in gs):
        raise ValueError("factors must be monic modulo p")
    prod = [1]
    for g in gs:
        prod = modp._mul(prod, g, p)
    if prod != fbar:
        raise ValueError("factors do not multiply to f / lc(f) modulo p")

    q = p * p
    inv_lc = pow(ints[-1], -1, q)
    target = [c * inv_lc % q for c in ints]
    full = [1]
    for g in gs:
        full = modp._mul(full, g, q)
    err = [((t - (full[i] if i < len(full) else 0)) % q) // p for i, t in enumerate(target)]
    err = modp._trim(err)
    lifted = []
    for i, g in enumerate(gs):
        others = [1]
        for j, h in enumerate(gs):
            if j != i:
                others = modp._mul(others, h, p)
        delta = modp._mulmod(err, modp._inverse_mod(others, g, p), g, p) if err else []
        new = [(c + p * (delta[k] if k < len(delta) else 0)) % q for k, c in enumerate(g)]
        lifted.append(tuple(new))
    return HenselLift(p, q, tuple(lifted))


def arithmetic_zeta_factor(f: RatPoly, p: int) -> EulerFactorSpec:
    """Euler factor at ``p`` of the arithmetic zeta function of Z[X]/(f).

    One entry ``(1, d)`` per distinct irreducible factor of ``f mod p``, i.e.
    per closed point over ``p``.
    """
    if not (f.is_integral() and f.is_monic()):
        raise ValueError("arithmetic zeta factor expects a monic integer polynomial")
    pat = modp.factorization_pattern(f, p)
    return EulerFactorSpec(p, FactorizationPattern((1, d) for _, d in pat))
