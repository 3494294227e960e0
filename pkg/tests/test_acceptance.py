"""Acceptance gate: fifteen end-to-end criteria at their stated tolerances.

Run alone with ``pytest tests/test_acceptance.py -v``; a PASS/FAIL line per
criterion is printed in the terminal summary.
"""

import json
import math
import random
import subprocess
import sys
import time
from fractions import Fraction as F

import numpy as np
import pytest

from conftest import CORPUS, random_int_poly
from polyzeta import (
    FactorizationPattern,
    RatPoly,
    affine_substitute,
    arithmetic_zeta_factor,
    class_equiv_scan,
    cyclotomic,
    discriminant,
    factor_count_mean,
    factor_mod_p,
    factor_over_q,
    factorization_pattern,
    golomb_predict,
    hensel_lift_step,
    irreducible_mod_scan,
    parse_poly,
    pole_order_estimate,
    primes_up_to,
    quadratic_normal_form,
    radical,
    real_complex_zero_counts,
    reduce_mod_p,
    resultant,
    resultant_mod_p,
    schur_scan,
    splitting_symdiff,
    zeta_truncated,
)
from polyzeta.numkernel import prime_divisors
from polyzeta.zeta import cauchy_gap, literal_tail_bound, rigorous_tail_bound

CUBIC_F = "x^3+6*x^2+9*x+1"
CUBIC_G = "x^3+18*x^2+81*x+27"


@pytest.fixture
def verdict(record_property):
    """Record a one-line summary, print it, then assert."""

    def _verdict(ok, detail):
        record_property("detail", detail)
        print(("PASS " if ok else "FAIL ") + detail)
        assert ok, detail

    return _verdict


def _nonzero_disc_poly(rng, lo, hi, coeff, monic=False):
    while True:
        f = random_int_poly(rng, lo, hi, coeff=coeff, monic=monic)
        if discriminant(f) != 0:
            return f


def test_criterion_01_cubic_pair_golden(verdict):
    t0 = time.perf_counter()
    f, g = parse_poly(CUBIC_F), parse_poly(CUBIC_G)
    checks = {
        "disc(f)=81": discriminant(f) == 81,
        "disc(g)=59049": discriminant(g) == 59049,
        "scan(10^4)=[]": class_equiv_scan(f, g, 10**4) == [],
        "pattern@3": factorization_pattern(f, 3) == factorization_pattern(g, 3) == FactorizationPattern([(3, 1)]),
        "oracle irreducible": factor_over_q(f).is_irreducible() and factor_over_q(g).is_irreducible(),
    }
    elapsed = time.perf_counter() - t0
    ok = all(checks.values()) and elapsed < 10
    bad = [k for k, v in checks.items() if not v]
    verdict(ok, f"golden cubic pair, failed={bad}, {elapsed:.1f}s (< 10s)")


def test_criterion_02_resultant_algebra(verdict):
    t0 = time.perf_counter()
    rng = random.Random(2002)
    pool = list(primes_up_to(10**4).primes)
    pairs = bad_product = bad_reduction = reductions = 0
    while pairs < 1000:
        f = random_int_poly(rng, 1, 5)
        g = random_int_poly(rng, 1, 5)
        pairs += 1
        r = resultant(f, g).value
        if discriminant(f * g) != discriminant(f) * discriminant(g) * r * r:
            bad_product += 1
        good = [p for p in rng.sample(pool, 40) if f.lc % p and g.lc % p][:5]
        assert len(good) == 5
        for p in good:
            reductions += 1
            if r % p != resultant_mod_p(reduce_mod_p(f, p), reduce_mod_p(g, p)):
                bad_reduction += 1
    elapsed = time.perf_counter() - t0
    ok = bad_product == 0 and bad_reduction == 0 and elapsed < 60
    verdict(
        ok,
        f"{pairs} pairs, product identity failures={bad_product}, "
        f"{reductions} reductions with failures={bad_reduction}, {elapsed:.1f}s (< 60s)",
    )


def test_criterion_03_pattern_bookkeeping(verdict):
    t0 = time.perf_counter()
    rng = random.Random(3003)
    primes = primes_up_to(1000).primes
    checked = deg_fail = exp_fail = 0
    for _ in range(100):
        f = random_int_poly(rng, 0, 6)
        disc = discriminant(f) if f.degree >= 1 else None
        for p in primes:
            if f.lc % p == 0:
                continue
            pat = factorization_pattern(f, p)
            checked += 1
            if pat.weighted_degree != f.degree:
                deg_fail += 1
            if disc is not None and disc % p and any(a != 1 for a, _ in pat):
                exp_fail += 1
    elapsed = time.perf_counter() - t0
    ok = deg_fail == 0 and exp_fail == 0 and elapsed < 60
    verdict(ok, f"{checked} (f, p) pairs, degree failures={deg_fail}, exponent failures={exp_fail}, {elapsed:.1f}s (< 60s)")


def _euler_entries(pat):
    """Entries (1, d) repeated alpha times: the Euler-factor content of a pattern."""
    return sorted(d for a, d in pat for _ in range(a))


def test_criterion_04_power_product_patterns(verdict):
    # f mod p = F1bar^beta * F2bar, so each entry (a, d) of F1 becomes (beta*a, d);
    # beta plain copies of F1's pattern agree with that once exponents are expanded
    rng = random.Random(4004)
    primes = primes_up_to(1000).primes
    products = checked = pattern_fail = euler_fail = 0
    while products < 50:
        F1 = _nonzero_disc_poly(rng, 1, 3, 12)
        F2 = _nonzero_disc_poly(rng, 1, 3, 12)
        if resultant(F1, F2).value == 0:
            continue
        beta = rng.randint(1, 3)
        f = F1**beta * F2
        products += 1
        bad = int(F1.lc * F2.lc * discriminant(F1) * discriminant(F2) * resultant(F1, F2).value)
        for p in primes:
            if bad % p == 0:
                continue
            checked += 1
            p1, p2 = factorization_pattern(F1, p), factorization_pattern(F2, p)
            pf = factorization_pattern(f, p)
            scaled = FactorizationPattern((beta * a, d) for a, d in p1).union(p2)
            if pf != scaled:
                pattern_fail += 1
            if _euler_entries(pf) != _euler_entries(p1.repeated(beta).union(p2)):
                euler_fail += 1
    ok = pattern_fail == 0 and euler_fail == 0
    verdict(
        ok,
        f"{products} products, {checked} good primes, exponent-scaled pattern mismatches={pattern_fail}, "
        f"beta-copies union mismatches after exponent expansion={euler_fail}",
    )


def _corpus_truth():
    truth = {}
    for text, claimed in CORPUS:
        truth[text] = factor_over_q(parse_poly(text)).factor_count
        assert truth[text] == claimed
    return truth


def test_criterion_05_estimator_accuracy(verdict):
    t0 = time.perf_counter()
    truth = _corpus_truth()
    ok, worst_mean, worst_slope = True, 0.0, 0.0
    for text, m in truth.items():
        f = parse_poly(text)
        mean = factor_count_mean(f, 10**5).estimate
        slope = pole_order_estimate(f, 10**5).estimate
        ok &= abs(mean - m) < 0.1 and abs(slope - m) < 0.4 and round(slope) == m
        worst_mean = max(worst_mean, abs(mean - m))
        worst_slope = max(worst_slope, abs(slope - m))
        print(f"{text}: m={m} mean={mean:.4f} slope={slope:.3f}")
    elapsed = time.perf_counter() - t0
    ok &= elapsed < 300
    verdict(
        ok,
        f"corpus of {len(truth)} at B=10^5, worst |mean-m|={worst_mean:.4f} (< 0.1), "
        f"worst |slope-m|={worst_slope:.3f} (< 0.4), {elapsed:.0f}s (< 300s)",
    )


def test_criterion_06_irreducibility_classification(verdict):
    agree = 0
    for text, _ in CORPUS:
        f = parse_poly(text)
        predicted_irreducible = round(factor_count_mean(f, 10**5).estimate) == 1
        agree += predicted_irreducible == factor_over_q(f).is_irreducible()
    verdict(agree == len(CORPUS), f"{agree}/{len(CORPUS)} corpus members classified as the oracle does")


def test_criterion_07_golomb_cyclotomic(verdict):
    t0 = time.perf_counter()
    mismatches = [
        n for n in range(2, 31)
        if (irreducible_mod_scan(cyclotomic(n), 10**4) is not None) != golomb_predict(n)
    ]
    x4_witness = irreducible_mod_scan(parse_poly("x^4+1"), 10**4)
    elapsed = time.perf_counter() - t0
    ok = not mismatches and x4_witness is None and elapsed < 120
    verdict(ok, f"n in 2..30 mismatches={mismatches}, x^4+1 witness={x4_witness}, {elapsed:.1f}s (< 120s)")


def test_criterion_08_schur(verdict):
    listed = [2, 5, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97]
    exact = schur_scan(parse_poly("x^2+1"), 100) == listed
    counts = {t: len(schur_scan(parse_poly(t), 10**4)) for t, _ in CORPUS}
    constants = [len(schur_scan(RatPoly([c]), 10**4)) for c in (5, F(-3, 7), 1)]
    ok = exact and min(counts.values()) > 100 and constants == [0, 0, 0]
    verdict(ok, f"x^2+1 list exact={exact}, min corpus count at 10^4={min(counts.values())}, constants={constants}")


def test_criterion_09_quadratic_local_global(verdict):
    rng = random.Random(9009)
    done = identity_fail = 0
    stray = []
    while done < 20:
        c1 = F(rng.randint(-30, 30), rng.choice([1, 1, 2, 3, 5]))
        c0 = F(rng.randint(-30, 30), rng.choice([1, 1, 2, 7]))
        f = RatPoly([c0, c1, 1])
        if not factor_over_q(f).is_irreducible():
            continue
        done += 1
        D, a, b = quadratic_normal_form(f)
        g = RatPoly([-D, 0, 1])
        if affine_substitute(f, 1 / (b * b), b, a) != g:
            identity_fail += 1
        allowed = prime_divisors(2, b.numerator, b.denominator, a.denominator, *(c.denominator for c in f.coeffs))
        extra = set(class_equiv_scan(f, g, 1000)) - allowed
        if extra:
            stray.append((str(f), sorted(extra)))
    verdict(identity_fail == 0 and not stray, f"{done} quadratics, identity failures={identity_fail}, unexplained primes={stray}")


def test_criterion_10_splitting_sets(verdict):
    same = splitting_symdiff(parse_poly("x^2-2"), parse_poly("x^2-8"), 1000)
    diff = splitting_symdiff(parse_poly("x^2-2"), parse_poly("x^2-3"), 1000)
    primes = primes_up_to(1000).primes

    def splits(n, p):
        return any((x * x - n) % p == 0 for x in range(p))

    expected = [p for p in primes if splits(2, p) != splits(3, p)]
    density = len(diff) / len(primes)
    ok = same == [] and diff == expected and density >= 0.2
    verdict(ok, f"(x^2-2, x^2-8) symdiff={same}, (x^2-2, x^2-3) membership exact={diff == expected}, density={density:.3f} (>= 0.2)")


def test_criterion_11_zeta_numerics(verdict):
    x = RatPoly.x()
    err = abs(zeta_truncated(x, 10**4, 2).value - math.pi**2 / 6)
    rng = random.Random(1111)
    sample = [complex(rng.uniform(1.1, 3), rng.uniform(-40, 40)) for _ in range(20)]
    worst = 0.0
    for text, _ in [("x", 1)] + CORPUS:
        f = parse_poly(text)
        for s in sample:
            v = zeta_truncated(f, 10**4, s)
            worst = max(worst, abs(v.value) / v.majorant)
    # ratio of exactly 1 is attainable only at real s; allow float rounding
    majorant_ok = worst <= 1 + 1e-12
    tail = {B: (cauchy_gap(x, B), literal_tail_bound(x, B)) for B in (10**3, 10**4)}
    tail_ok = all(gap <= bound for gap, bound in tail.values())
    corpus_tail_ok = all(
        cauchy_gap(parse_poly(t), B) <= rigorous_tail_bound(parse_poly(t), B) * (1 + 1e-12)
        for t, _ in CORPUS for B in (10**3, 10**4)
    )
    ok = err < 1e-4 and majorant_ok and tail_ok and corpus_tail_ok
    verdict(
        ok,
        f"|zeta_X(2)-pi^2/6|={err:.2e} (< 1e-4), max |zeta|/majorant={worst:.6f} on 20 s, "
        f"tail gap/bound for X at 10^3,10^4="
        f"{', '.join(f'{g / b:.3f}' for g, b in tail.values())}, corpus tail (with product factor) ok={corpus_tail_ok}",
    )


def test_criterion_12_hensel(verdict):
    rng = random.Random(1212)
    polys = lifts = failures = 0
    pool = [p for p in primes_up_to(200).primes]
    while polys < 50:
        f = _nonzero_disc_poly(rng, 1, 6, 15, monic=True)
        disc = discriminant(f)
        good = [p for p in pool if disc % p][:40]
        polys += 1
        for p in rng.sample(good, 5):
            fac = factor_mod_p(reduce_mod_p(f, p), seed=p)
            lift = hensel_lift_step(f, p, [g for g, _ in fac.factors])
            lifts += 1
            target = tuple(int(c) % (p * p) for c in f.coeffs)
            pattern_degrees = sorted(d for _, d in factorization_pattern(f, p))
            reduces = all(tuple(c % p for c in new) == old.coeffs for new, (old, _) in zip(lift.factors, fac.factors))
            if lift.product() != target or sorted(lift.degrees) != pattern_degrees or not reduces:
                failures += 1
    verdict(failures == 0, f"{polys} polynomials, {lifts} lifts, failures={failures}")


def test_criterion_13_arithmetic_zeta(verdict):
    rng = random.Random(1313)
    primes = primes_up_to(1000).primes
    checked = failures = 0
    for k in range(50):
        f = random_int_poly(rng, 1, 3, coeff=9, monic=True)
        if k % 2:
            f = f ** rng.randint(2, 3) * random_int_poly(rng, 1, 2, coeff=9, monic=True)
        rad = radical(f)
        assert rad.is_integral() and rad.is_monic()
        disc = discriminant(rad)
        for p in primes:
            if disc % p == 0:
                continue
            checked += 1
            if arithmetic_zeta_factor(f, p).pattern != factorization_pattern(rad, p):
                failures += 1
    verdict(failures == 0, f"50 monic polynomials, {checked} unramified primes, mismatches={failures}")


def _numeric_zero_counts(f):
    """Real zeros and complex pairs with multiplicity, from floating roots of each squarefree part."""
    from polyzeta import squarefree_decomposition

    r1 = r2 = 0
    for g, mult in squarefree_decomposition(f):
        roots = np.roots([float(c) for c in reversed(g.coeffs)])
        real = sum(1 for z in roots if abs(z.imag) < 1e-9)
        r1 += mult * real
        r2 += mult * (len(roots) - real) // 2
    return r1, r2


def test_criterion_14_sturm(verdict):
    cases = [parse_poly(t) for t, _ in CORPUS] + [parse_poly("x^4+2*x^2+1"), parse_poly("x^4+3*x^2")]
    mismatches = [str(f) for f in cases if real_complex_zero_counts(f) != _numeric_zero_counts(f)]
    special = (
        real_complex_zero_counts(parse_poly("x^4+2*x^2+1")) == (0, 2)
        and real_complex_zero_counts(parse_poly("x^4+3*x^2")) == (2, 1)
    )
    rng = random.Random(1414)
    invariance_fail = 0
    for _ in range(50):
        f = cases[rng.randrange(len(cases))] if rng.random() < 0.5 else random_int_poly(rng, 1, 6, coeff=9)
        a = F(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 5))
        b = F(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 5))
        c = F(rng.randint(-9, 9), rng.randint(1, 5))
        if real_complex_zero_counts(f) != real_complex_zero_counts(affine_substitute(f, a, b, c)):
            invariance_fail += 1
    ok = not mismatches and special and invariance_fail == 0
    verdict(ok, f"corpus mismatches={mismatches}, multiplicity cases ok={special}, substitution failures={invariance_fail}/50")


CLI_RUNS = [
    ["pattern", CUBIC_F, "--prime", "3"],
    ["patterns", "x^4+1", "--bound", "3000"],
    ["zeta", "x^2+1", "--bound", "20000", "--s", "2", "--s", "1.2,14"],
    ["pole", "x^4-x^2-2", "--bound", "20000"],
    ["equiv", CUBIC_F, CUBIC_G, "--bound", "10000"],
    ["schur", "x^3-2", "--bound", "10000"],
    ["splitting", "x^2-2", "--bound", "10000"],
    ["symdiff", "x^2-2", "x^2-3", "--bound", "10000"],
    ["zeros", "x^4+2*x^3+4*x^2+6*x+3"],
    ["normal-form", "x^2+x+1"],
    ["cyclotomic", "30"],
    ["golomb", "18"],
    ["scan-irreducible", "x^4+1", "--bound", "3000"],
    ["factor", "x^8+x^6+x^4"],
    ["hensel", "x^5-x-1", "--prime", "101"],
    ["arith-zeta", "x^4-2*x^2+1", "--prime", "7"],
    ["invariants", "x^3-2", "--bound", "20000"],
]


def _cli(argv):
    proc = subprocess.run([sys.executable, "-m", "polyzeta", *argv], capture_output=True, check=False)
    return proc.returncode, proc.stdout


def test_criterion_15_cli_determinism(verdict):
    differing = []
    for argv in CLI_RUNS:
        outs = set()
        for fmt in ("json", "csv"):
            base = argv + ["--seed", "5", "--format", fmt]
            results = [_cli(base + ["--jobs", "1"]), _cli(base + ["--jobs", "1"]), _cli(base + ["--jobs", "3"])]
            assert all(code == 0 for code, _ in results), argv
            if len({out for _, out in results}) != 1:
                differing.append((argv[0], fmt))
            outs.add(results[0][1])
        json.loads(next(o for o in outs if o.lstrip().startswith(b"{")))
    verdict(not differing, f"{len(CLI_RUNS)} subcommands x 2 formats x (2 runs at --jobs 1, 1 at --jobs 3), differing={differing}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v", "-s"]))
