"""sigmarec: divisor-sum functions, partition numbers, and exact
q-series identity verification via figurate-number recurrences.

Everything is exact integer arithmetic.  The hot kernels (divisor
sieve, recurrence tables, series convolution) have a compiled Cython
lane with a pure-Python fallback selected at import; see
:mod:`sigmarec._backend`.
"""

from sigmarec._backend import COMPILED
from sigmarec.divisor_sums import (
    DivisorClass,
    DivisorSumKind,
    DivisorTable,
    class_divisor_sum,
    divisor_sum,
    divisor_table,
)
from sigmarec.figurate import (
    FigurateKind,
    figurate_below,
    hexagonal,
    hexagonal_sign,
    is_triangular,
    pentagonal,
    triangular,
    triangular_indicator,
)
from sigmarec.identities import (
    IdentityName,
    VerificationReport,
    check_all,
    check_identity,
    identity_sides,
    partition_counts_dp,
)
from sigmarec.power_series import (
    NamedSeries,
    TruncatedSeries,
    build_named_series,
    first_mismatch,
    lambert_series,
    q_log_derivative,
    series,
    series_derivative,
    series_from_terms,
    series_inverse,
    series_mul,
    sparse_product,
)
from sigmarec.recurrences import (
    BalancePair,
    RecurrenceKind,
    RecurrenceTable,
    balance_hexagonal,
    balance_triangular,
    bar_recurrence_table,
    partition_table,
    sigma_recurrence_table,
    tilde_recurrence_table,
)

__version__ = "0.1.0"

__all__ = [
    "COMPILED",
    "__version__",
    # figurate
    "FigurateKind",
    "pentagonal",
    "triangular",
    "hexagonal",
    "is_triangular",
    "triangular_indicator",
    "hexagonal_sign",
    "figurate_below",
    # divisor sums
    "DivisorSumKind",
    "DivisorClass",
    "DivisorTable",
    "divisor_sum",
    "class_divisor_sum",
    "divisor_table",
    # power series
    "TruncatedSeries",
    "NamedSeries",
    "series",
    "series_from_terms",
    "series_mul",
    "series_inverse",
    "series_derivative",
    "q_log_derivative",
    "sparse_product",
    "build_named_series",
    "lambert_series",
    "first_mismatch",
    # recurrences
    "RecurrenceKind",
    "RecurrenceTable",
    "BalancePair",
    "partition_table",
    "sigma_recurrence_table",
    "tilde_recurrence_table",
    "bar_recurrence_table",
    "balance_triangular",
    "balance_hexagonal",
    # identities
    "IdentityName",
    "VerificationReport",
    "check_identity",
    "check_all",
    "identity_sides",
    "partition_counts_dp",
]
