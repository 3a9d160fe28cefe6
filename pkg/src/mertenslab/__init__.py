"""mertenslab: exact-arithmetic workbench for Mertens-sum identities.

The package measures, with big-integer rationals and zero tolerance,
a family of claims tying Mobius sums over interval grids to counts of
rough integers in primorial-shifted windows.  Every fast path has a
brute-force oracle next to it, and every claim check returns a record
instead of asserting, so scans can map out exactly where each claim
holds.
"""

__version__ = "0.1.0"

from .errors import CapacityError
from .intervals import (
    IntervalSet,
    OpenInterval,
    Rational,
    count_integers,
    floor_rational,
    half_odd,
    integers_in,
    is_half_odd,
    last_integer_below,
    parse_half_odd,
    rational,
    require_half_odd,
    residual,
)
from .moebius import (
    MobiusTable,
    factorize,
    floor_log,
    is_prime,
    largest_prime_factor,
    mertens,
    mertens_coprime,
    mertens_interval,
    mertens_multiples,
    mobius_of,
    primes_below,
    smallest_prime_factor,
)
from .rough import (
    Primorial,
    RoughCount,
    SquarefreeFamily,
    is_rough,
    lemma1_predicted_set,
    max_primorial_threshold,
    primorial_excluding,
    rough_count_oracle,
    rough_count_sieve,
    squarefree_family,
    squarefree_multiples_of,
)
from .strategy import (
    Interpretation,
    RowDiagram,
    StrategyReport,
    StrategyScanRow,
    build_row_diagram,
    correction_magnitude,
    default_pair_selector,
    exponent_scan,
    gap_sum,
    row_sum,
    series_sum,
    strategy_decomposition,
    within_sqrt,
)
from .verify import (
    CLAIMS,
    IntervalGrid,
    Lemma3Case,
    VerificationRecord,
    build_bk,
    check_bk_bridge,
    check_corollary1,
    check_lemma1,
    check_lemma2,
    check_lemma3,
    check_theorem,
    check_theorem_s_side,
    classify_lemma3,
    kn_residuals,
    sweep_lemma3,
    theorem_double_sum,
)

__all__ = [
    "CapacityError",
    "CLAIMS",
    "IntervalGrid",
    "IntervalSet",
    "Interpretation",
    "Lemma3Case",
    "MobiusTable",
    "OpenInterval",
    "Primorial",
    "Rational",
    "RoughCount",
    "RowDiagram",
    "SquarefreeFamily",
    "StrategyReport",
    "StrategyScanRow",
    "VerificationRecord",
    "build_bk",
    "build_row_diagram",
    "check_bk_bridge",
    "check_corollary1",
    "check_lemma1",
    "check_lemma2",
    "check_lemma3",
    "check_theorem",
    "check_theorem_s_side",
    "classify_lemma3",
    "correction_magnitude",
    "count_integers",
    "default_pair_selector",
    "exponent_scan",
    "factorize",
    "floor_log",
    "floor_rational",
    "gap_sum",
    "half_odd",
    "integers_in",
    "is_half_odd",
    "is_prime",
    "is_rough",
    "kn_residuals",
    "largest_prime_factor",
    "last_integer_below",
    "lemma1_predicted_set",
    "max_primorial_threshold",
    "mertens",
    "mertens_coprime",
    "mertens_interval",
    "mertens_multiples",
    "mobius_of",
    "parse_half_odd",
    "primes_below",
    "primorial_excluding",
    "rational",
    "require_half_odd",
    "residual",
    "rough_count_oracle",
    "rough_count_sieve",
    "row_sum",
    "series_sum",
    "smallest_prime_factor",
    "squarefree_family",
    "squarefree_multiples_of",
    "strategy_decomposition",
    "sweep_lemma3",
    "theorem_double_sum",
    "within_sqrt",
]
