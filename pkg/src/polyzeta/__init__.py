"""Factorization patterns of rational polynomials modulo primes and the global
zeta products built from them."""

from .errors import (
    DegenerateInputError,
    DegreeCapError,
    InadmissiblePrimeError,
    ParseError,
    PolyZetaError,
)
from .invariants import (
    InvariantReport,
    cyclotomic,
    golomb_predict,
    invariant_report,
    irreducible_mod_scan,
    quadratic_normal_form,
    real_complex_zero_counts,
    schur_scan,
    splitting_set,
    splitting_symdiff,
)
from .modp import (
    FactorizationPattern,
    ModFactorization,
    ModPoly,
    factor_mod_p,
    factorization_pattern,
    has_root_mod_p,
    reduce_mod_p,
    resultant_mod_p,
    splits_completely,
)
from .numkernel import BigRat, PrimeRange, primes_up_to
from .polyq import (
    QFactorization,
    RatPoly,
    admissible_primes,
    affine_substitute,
    gcd_q,
    parse_poly,
    radical,
    squarefree_decomposition,
    to_text,
)
from .qoracle import factor_over_q
from .resdisc import ResultantValue, discriminant, resultant
from .zeta import (
    EulerFactorSpec,
    PoleEstimate,
    TruncatedZeta,
    arithmetic_zeta_factor,
    class_equiv_scan,
    euler_factor_eval,
    factor_count_mean,
    hensel_lift_step,
    pole_order_estimate,
    zeta_truncated,
)

__version__ = "0.1.0"
