import random

import pytest
from hypothesis import strategies as st

from polyzeta import RatPoly, parse_poly

# (text, irreducible factor count with multiplicity)
CORPUS = [
    ("x", 1),
    ("x^2+1", 1),
    ("x^3-2", 1),
    ("x^3+6*x^2+9*x+1", 1),
    ("x^4-x^2-2", 2),  # (x^2+1)(x^2-2)
    ("x^4+2*x^3+4*x^2+6*x+3", 3),  # (x+1)^2 (x^2+3)
]

SMALL_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]


@pytest.fixture(scope="session")
def corpus():
    return [(parse_poly(t), n) for t, n in CORPUS]


def random_int_poly(rng: random.Random, lo: int, hi: int, coeff: int = 20, monic: bool = False) -> RatPoly:
    d = rng.randint(lo, hi)
    cs = [rng.randint(-coeff, coeff) for _ in range(d)]
    if monic:
        top = 1
    else:
        top = 0
        while top == 0:
            top = rng.randint(-coeff, coeff)
    return RatPoly(cs + [top])


def trial_division_primes(n: int) -> list[int]:
    out = []
    for k in range(2, n + 1):
        if all(k % q for q in out if q * q <= k):
            out.append(k)
    return out


small_ints = st.integers(-20, 20)
nonzero_ints = small_ints.filter(bool)
rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
nonzero_rationals = rationals.filter(bool)


@st.composite
def int_polys(draw, min_degree=0, max_degree=5, monic=False):
    d = draw(st.integers(min_degree, max_degree))
    cs = draw(st.lists(small_ints, min_size=d, max_size=d))
    top = 1 if monic else draw(nonzero_ints)
    return RatPoly(cs + [top])


@st.composite
def rat_polys(draw, min_degree=0, max_degree=5):
    d = draw(st.integers(min_degree, max_degree))
    cs = draw(st.lists(rationals, min_size=d, max_size=d))
    return RatPoly(cs + [draw(nonzero_rationals)])


# ---------------------------------------------------------------------------
# acceptance summary: one PASS/FAIL line per criterion

_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.failed):
        detail = dict(report.user_properties).get("detail", "")
        _ACCEPTANCE[report.nodeid] = (report.outcome.upper(), detail)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid in sorted(_ACCEPTANCE):
        outcome, detail = _ACCEPTANCE[nodeid]
        label = "PASS" if outcome == "PASSED" else "FAIL"
        name = nodeid.split("::")[-1][len("test_criterion_"):]
        terminalreporter.write_line(f"[{label}] {name}: {detail}")
