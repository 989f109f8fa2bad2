"""seqlab: a laboratory for realizability of integer sequences.

Exact arithmetic end to end: orbit counts and the Dold congruence, local
p-part analysis, Bernoulli/Euler number engines, regular-prime
classification, congruence oracles, and algebraic realization on finite
groups and p-torsion modules.
"""

import sys as _sys

# The lab routinely prints and parses integers with tens of thousands of
# digits (e.g. Fibonacci along squares); lift CPython's conversion guard once,
# never lowering a limit someone already raised (0 means unlimited).
if hasattr(_sys, "set_int_max_str_digits"):
    _cur = _sys.get_int_max_str_digits()
    if _cur != 0 and _cur < 300_000:
        _sys.set_int_max_str_digits(300_000)

from .arith import (
    PAdicPart,
    divisors,
    euler_phi,
    factorize,
    is_prime,
    mobius,
    p_adic,
    p_part,
    primes_in_range,
)
from .bfile import BFile, fetch_oeis, normalize_a_number, parse_bfile, to_sequence
from .classical import (
    BernoulliTable,
    DerivedBernoulli,
    EulerTable,
    b_product_formula,
    bernoulli_upto,
    clausen_denominator,
    derived_bernoulli,
    euler_upto,
    lehmer_pierce,
    sequence_e,
    tangent_numbers,
    zigzag_numbers,
)
from .congruences import (
    CongruenceCheck,
    euler_additive_check,
    good_primitive_root,
    kummer_check,
    lemma_five_check,
    multiplicative_order,
    staying_alive_check,
    wagstaff_A,
    wagstaff_identity_check,
    young_check,
)
from .algebraic import (
    BUNDLED_GROUPS,
    ConstructionParams,
    Endomorphism,
    FiniteGroup,
    bundled_group,
    construct_matrix,
    ell_algebraically_realizable,
    ell_sequence,
    enumerate_endomorphisms,
    field_generator,
    find_realizing_endomorphism,
    fix_counts,
    parse_cayley,
    torsion_fix_counts,
)
from .errors import (
    BFileError,
    DegeneratePolynomialError,
    DepthError,
    FetchHTTPError,
    FetchNetworkError,
    FixtureMissingError,
    SeqLabError,
    ZeroEntryError,
)
from .experiment import (
    OBSERVATION_CATALOG,
    ExperimentSpec,
    catalog_spec,
    load_sequence,
    not_realizable_primes,
    realizable_star_primes,
    render_report,
    run_experiment,
)
from .matrices import IntMatrix, companion_matrix
from .primes import (
    BERNOULLI,
    EULER,
    BernoulliStatus,
    EulerStatus,
    EulerStrength,
    NumeratorLocalStatus,
    PrimeClassification,
    classify_bernoulli,
    classify_euler,
    numerator_local_status,
    scan_primes,
    weak_euler_profile_check,
)
from .realizability import (
    MagicalReport,
    OrbitCounts,
    RealizabilityReport,
    Sequence1,
    Verdict,
    arias_criterion,
    check_realizable,
    local_report,
    magical_report,
    orbit_counts,
    p_part_sequence,
    pointwise_product,
    shift,
)

__version__ = "0.1.0"
