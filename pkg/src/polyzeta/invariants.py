"""Local-invariant computations and prime scans built on factorization patterns."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import NamedTuple, Optional

from . import _zpoly as zp
from . import modp
from .errors import DegenerateInputError
from .numkernel import factor_int, primes_up_to, squarefree_part
from .polyq import RatPoly, admissible_primes, squarefree_decomposition
from .zeta import (
    DEFAULT_ESTIMATOR_BOUND,
    factor_count_mean,
    pattern_table,
    pole_order_estimate,
)


def schur_scan(f: RatPoly, bound: int, jobs: int = 1) -> list[int]:
    """Admissible primes ``p <= bound`` at which ``f mod p`` has a root."""
    if f.is_zero():
        raise DegenerateInputError("Schur scan of the zero polynomial")
    return [p for p, pat in pattern_table(f, bound, jobs) if any(d == 1 for _, d in pat)]


def splitting_set(f: RatPoly, bound: int, jobs: int = 1) -> list[int]:
    """Admissible primes ``p <= bound`` modulo which ``f`` splits completely."""
    if f.is_zero():
        raise DegenerateInputError("splitting set of the zero polynomial")
    if f.is_constant():
        return [p for p in admissible_primes(f, bound) if modp.splits_completely(f, p)]
    n = f.degree
    return [
        p
        for p, pat in pattern_table(f, bound, jobs)
        if pat.weighted_degree == n and all(d == 1 for _, d in pat)
    ]


def splitting_symdiff(f: RatPoly, g: RatPoly, bound: int, jobs: int = 1) -> list[int]:
    return sorted(set(splitting_set(f, bound, jobs)) ^ set(splitting_set(g, bound, jobs)))


# ---------------------------------------------------------------------------
# Sturm sequences


def _positive_scale(a: list[int]) -> list[int]:
    g = zp.content(a)
    return [c // g for c in a] if g > 1 else a


def sturm_sequence(g: RatPoly) -> list[list[int]]:
    """Sturm chain of ``g`` as integer polynomials, each rescaled by a positive constant."""
    _, s0 = g.to_primitive()
    seq = [s0]
    s1 = _positive_scale(zp.derivative(s0))
    if not s1:
        return seq
    seq.append(s1)
    while zp.deg(seq[-1]) > 0:
        a, b = seq[-2], seq[-1]
        r = zp.prem(a, b)
        # prem multiplies by lc(b)**k; undo its sign so only a positive factor remains
        k = zp.deg(a) - zp.deg(b) + 1
        if b[-1] < 0 and k % 2:
            r = [-c for c in r]
        if not r:
            break
        seq.append(_positive_scale([-c for c in r]))
    return seq


def _sign_changes(signs) -> int:
    signs = [s for s in signs if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_distinct_real_roots(g: RatPoly) -> int:
    """Number of distinct real roots, from sign changes of the Sturm chain at +-infinity."""
    if g.is_zero():
        raise DegenerateInputError("the zero polynomial has infinitely many roots")
    if g.is_constant():
        return 0
    seq = sturm_sequence(g)
    at_pos = [1 if s[-1] > 0 else -1 for s in seq]
    at_neg = [(1 if s[-1] > 0 else -1) * (-1) ** zp.deg(s) for s in seq]
    return _sign_changes(at_neg) - _sign_changes(at_pos)


def real_complex_zero_counts(f: RatPoly) -> tuple[int, int]:
    """``(r1, r2)``: real zeros and pairs of conjugate complex zeros, with multiplicity."""
    if f.is_zero():
        raise DegenerateInputError("zero counts of the zero polynomial")
    r1 = sum(mult * count_distinct_real_roots(g) for g, mult in squarefree_decomposition(f))
    r2, odd = divmod(f.degree - r1, 2)
    assert odd == 0
    return r1, r2


# ---------------------------------------------------------------------------
# quadratics, cyclotomics, irreducibility scans


class QuadraticNormalForm(NamedTuple):
    D: int
    a: Fraction
    b: Fraction


def _is_rational_square(q: Fraction) -> bool:
    if q < 0:
        return False
    n, d = q.numerator, q.denominator
    return _isqrt_exact(n) and _isqrt_exact(d)


def _isqrt_exact(n: int) -> bool:
    return isqrt(n) ** 2 == n


def quadratic_normal_form(f: RatPoly) -> QuadraticNormalForm:
    """Squarefree ``D`` and ``(a, b)`` with ``b**-2 * f(b*X + a) == X**2 - D``.

    ``b`` is chosen positive.
    """
    if f.degree != 2 or not f.is_monic():
        raise DegenerateInputError("expected a monic quadratic")
    c0, c1 = f[0], f[1]
    a = -c1 / 2
    delta = c1 * c1 / 4 - c0  # f(X + a) = X^2 - delta
    if _is_rational_square(delta):
        raise DegenerateInputError(f"{f} is reducible over Q")
    D, k = squarefree_part(delta.numerator * delta.denominator)
    return QuadraticNormalForm(D, a, Fraction(k, delta.denominator))


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> RatPoly:
    """The n-th cyclotomic polynomial, by dividing X**n - 1 by Phi_d for proper divisors d."""
    if n < 1:
        raise ValueError("n must be positive")
    out = RatPoly([-1] + [0] * (n - 1) + [1])
    for d in range(1, n):
        if n % d == 0:
            out = out.exact_div(cyclotomic(d))
    return out


def golomb_predict(n: int) -> bool:
    """True iff ``(Z/nZ)^*`` is cyclic: n in {2, 4, q**m, 2*q**m} with q an odd prime."""
    if n < 2:
        raise ValueError("golomb_predict needs n >= 2")
    if n in (2, 4):
        return True
    m = n // 2 if n % 2 == 0 else n
    if m % 2 == 0:
        return False
    return len(factor_int(m)) == 1


def irreducible_mod_scan(f: RatPoly, bound: int) -> Optional[int]:
    """Smallest admissible ``p <= bound`` with ``f mod p`` irreducible of full degree.

    ``None`` only means no witness was found up to ``bound``.
    """
    if f.is_zero() or f.is_constant():
        raise DegenerateInputError("irreducibility scan needs a nonconstant polynomial")
    n = f.degree
    target = modp.FactorizationPattern([(1, n)])
    den = f.denominator_lcm()
    for p in primes_up_to(bound).primes:
        if den % p == 0:
            continue
        g = modp.reduce_mod_p(f, p)
        if g.degree == n and modp.pattern_of(g) == target:
            return p
    return None


# ---------------------------------------------------------------------------
# aggregate report


@dataclass(frozen=True)
class InvariantReport:
    poly: RatPoly
    bound: int
    factor_count_mean: float
    pole_estimate: float
    r1: int
    r2: int
    schur_count: int
    splits_count: int
    # pi(bound), the number of primes up to the bound
    prime_count: int
    irreducible_witness: Optional[int]

    @property
    def schur_density(self) -> float:
        return self.schur_count / self.prime_count if self.prime_count else 0.0


def invariant_report(f: RatPoly, bound: int = DEFAULT_ESTIMATOR_BOUND, jobs: int = 1) -> InvariantReport:
    if f.is_zero() or f.is_constant():
        raise DegenerateInputError("invariant report needs a nonconstant polynomial")
    r1, r2 = real_complex_zero_counts(f)
    return InvariantReport(
        poly=f,
        bound=bound,
        factor_count_mean=factor_count_mean(f, bound, jobs).estimate,
        pole_estimate=pole_order_estimate(f, bound, jobs=jobs).estimate,
        r1=r1,
        r2=r2,
        schur_count=len(schur_scan(f, bound, jobs)),
        splits_count=len(splitting_set(f, bound, jobs)),
        prime_count=len(primes_up_to(bound)),
        irreducible_witness=irreducible_mod_scan(f, bound),
    )
