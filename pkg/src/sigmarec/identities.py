"""Finite-order certification of the series identities and recurrences.

Thirteen named checks, each comparing two independently built sides to
a caller-chosen truncation order:

* three product-vs-theta expansions (Euler's pentagonal product, the
  triangular-number product, the 0,1,3-mod-4 product);
* four logarithmic-derivative checks equating q*f'/f of a product with
  the matching divisor-sum series from the trial-division/sieve oracle;
* four recurrence-vs-oracle table comparisons (partitions against a
  dynamic-programming counter, the three divisor-sum recurrences
  against sieve tables);
* two balanced-sum sweeps over every qualifying n up to the order.

The two sides of a check never share the code that could trivialize
the comparison: product sides are pure series machinery, oracle sides
are divisor/partition counting, recurrence sides touch no series code.
A failed comparison is a report carrying the smallest disagreeing
exponent, not an exception.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from enum import Enum

from sigmarec.divisor_sums import DivisorSumKind, divisor_table
from sigmarec.figurate import hexagonal_sign, is_triangular
from sigmarec.power_series import (
    NamedSeries,
    build_named_series,
    q_log_derivative,
)
from sigmarec.recurrences import (
    balance_hexagonal,
    balance_triangular,
    bar_recurrence_table,
    partition_table,
    sigma_recurrence_table,
    tilde_recurrence_table,
)


class IdentityName(Enum):
    PENTAGONAL_THEOREM = "pentagonal-theorem"
    GAUSS_TRIANGULAR = "gauss-triangular"
    JACOBI_HEXAGONAL = "jacobi-hexagonal"
    LAMBERT_EVEN = "lambert-even"
    LAMBERT_ODD = "lambert-odd"
    LAMBERT_TILDE = "lambert-tilde"
    LAMBERT_BAR = "lambert-bar"
    RECURRENCE_SIGMA = "recurrence-sigma"
    RECURRENCE_TILDE = "recurrence-tilde"
    RECURRENCE_BAR = "recurrence-bar"
    RECURRENCE_PARTITION = "recurrence-partition"
    COROLLARY_TRIANGULAR = "corollary-triangular"
    COROLLARY_HEXAGONAL = "corollary-hexagonal"

    @property
    def cli_name(self) -> str:
        return self.value


#: Accepted shorthand on the command line.
IDENTITY_ALIASES: dict[str, IdentityName] = {
    "pentagonal": IdentityName.PENTAGONAL_THEOREM,
}


def identity_from_name(name: str) -> IdentityName:
    """Resolve a CLI identity name or alias; raises KeyError if unknown."""
    for tag in IdentityName:
        if tag.value == name:
            return tag
    return IDENTITY_ALIASES[name]


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one identity check at one truncation order.

    ``first_mismatch`` is (exponent, lhs, rhs) for the smallest
    disagreeing exponent, or None exactly when ``passed``.  ``elapsed``
    is wall time in seconds, informational only.
    """

    identity: IdentityName
    order: int
    passed: bool
    first_mismatch: tuple[int, int, int] | None
    elapsed: float


def partition_counts_dp(max_n: int) -> list[int]:
    """p(0..max_n) by the bounded-parts dynamic program.

    counts[i] after processing part sizes 1..k is the number of
    partitions of i into parts <= k.  Independent of the pentagonal
    recurrence and of all series code; used as the oracle side of the
    partition check.
    """
    if max_n < 0:
        raise ValueError(f"max_n must be >= 0, got {max_n}")
    counts = [0] * (max_n + 1)
    counts[0] = 1
    for part in range(1, max_n + 1):
        for i in range(part, max_n + 1):
            counts[i] += counts[i - part]
    return counts


def _divisor_series_side(order: int, kind: DivisorSumKind, sign: int) -> list[int]:
    """[0, sign*s(1), ..., sign*s(order)] from the sieve oracle."""
    if order == 0:
        return [0]
    row = divisor_table(order, kind).values
    return [0] + [sign * v for v in row[1:]]


def _log_derivative_side(order: int, name: NamedSeries) -> list[int]:
    return list(q_log_derivative(build_named_series(name, order)).coeffs)


def _series_sides(order: int, lhs_name: NamedSeries, rhs_name: NamedSeries):
    lhs = list(build_named_series(lhs_name, order).coeffs)
    rhs = list(build_named_series(rhs_name, order).coeffs)
    return list(range(order + 1)), lhs, rhs


# The four log-derivative checks: product, oracle kind, oracle sign.
_LAMBERT_CHECKS: dict[IdentityName, tuple[NamedSeries, DivisorSumKind, int]] = {
    IdentityName.LAMBERT_EVEN: (
        NamedSeries.EVEN_FACTOR_PRODUCT,
        DivisorSumKind.SIGMA_EVEN,
        -1,
    ),
    IdentityName.LAMBERT_ODD: (
        NamedSeries.ODD_FACTOR_INVERSE,
        DivisorSumKind.SIGMA_ODD,
        1,
    ),
    IdentityName.LAMBERT_TILDE: (
        NamedSeries.TRIANGULAR_PRODUCT,
        DivisorSumKind.SIGMA_TILDE,
        1,
    ),
    # The product here has only (1 - q^j) factors, so its log derivative
    # is a negated divisor-sum series, same as the even case.
    IdentityName.LAMBERT_BAR: (
        NamedSeries.HEXAGONAL_PRODUCT,
        DivisorSumKind.SIGMA_BAR,
        -1,
    ),
}


def identity_sides(
    name: IdentityName, order: int
) -> tuple[list[int], list[int], list[int]]:
    """Build both sides of an identity: (exponents, lhs, rhs).

    For series checks the exponents are 0..order; for recurrence checks
    they are the table indices; for the balanced-sum corollaries they
    are the qualifying n <= order (order bounds the range of n, not a
    series order).  The parallel lhs/rhs lists are what
    :func:`check_identity` compares.
    """
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")

    if name is IdentityName.PENTAGONAL_THEOREM:
        return _series_sides(
            order, NamedSeries.EULER_PRODUCT, NamedSeries.PENTAGONAL_THETA
        )
    if name is IdentityName.GAUSS_TRIANGULAR:
        return _series_sides(
            order, NamedSeries.TRIANGULAR_PRODUCT, NamedSeries.TRIANGULAR_THETA
        )
    if name is IdentityName.JACOBI_HEXAGONAL:
        return _series_sides(
            order, NamedSeries.HEXAGONAL_PRODUCT, NamedSeries.HEXAGONAL_THETA
        )

    if name in _LAMBERT_CHECKS:
        product, kind, sign = _LAMBERT_CHECKS[name]
        lhs = _log_derivative_side(order, product)
        rhs = _divisor_series_side(order, kind, sign)
        return list(range(order + 1)), lhs, rhs

    if name is IdentityName.RECURRENCE_SIGMA:
        if order == 0:
            return [], [], []
        lhs = list(sigma_recurrence_table(order).values[1:])
        rhs = list(divisor_table(order, DivisorSumKind.SIGMA).values[1:])
        return list(range(1, order + 1)), lhs, rhs
    if name is IdentityName.RECURRENCE_TILDE:
        if order == 0:
            return [], [], []
        lhs = list(tilde_recurrence_table(order).values[1:])
        rhs = list(divisor_table(order, DivisorSumKind.SIGMA_TILDE).values[1:])
        return list(range(1, order + 1)), lhs, rhs
    if name is IdentityName.RECURRENCE_BAR:
        if order == 0:
            return [], [], []
        lhs = list(bar_recurrence_table(order).values[1:])
        rhs = list(divisor_table(order, DivisorSumKind.SIGMA_BAR).values[1:])
        return list(range(1, order + 1)), lhs, rhs
    if name is IdentityName.RECURRENCE_PARTITION:
        lhs = list(partition_table(order).values)
        rhs = partition_counts_dp(order)
        return list(range(order + 1)), lhs, rhs

    if name is IdentityName.COROLLARY_TRIANGULAR:
        exponents, lhs, rhs = [], [], []
        if order >= 1:
            even = divisor_table(order, DivisorSumKind.SIGMA_EVEN)
            odd = divisor_table(order, DivisorSumKind.SIGMA_ODD)
            for n in range(1, order + 1):
                if is_triangular(n):
                    continue
                pair = balance_triangular(n, even_table=even, odd_table=odd)
                exponents.append(n)
                lhs.append(pair.left)
                rhs.append(pair.right)
        return exponents, lhs, rhs
    if name is IdentityName.COROLLARY_HEXAGONAL:
        exponents, lhs, rhs = [], [], []
        if order >= 1:
            bar = divisor_table(order, DivisorSumKind.SIGMA_BAR)
            for n in range(1, order + 1):
                if hexagonal_sign(n) != 0:
                    continue
                pair = balance_hexagonal(n, bar_table=bar)
                exponents.append(n)
                lhs.append(pair.left)
                rhs.append(pair.right)
        return exponents, lhs, rhs

    raise ValueError(f"unknown identity: {name!r}")


def compare_sides(
    exponents: list[int], lhs: list[int], rhs: list[int]
) -> tuple[int, int, int] | None:
    """First disagreement between parallel side lists, labeled by exponent."""
    for e, a, b in zip(exponents, lhs, rhs):
        if a != b:
            return e, a, b
    return None


def check_identity(name: IdentityName, order: int) -> VerificationReport:
    """Certify one identity to the given order; failure is a report."""
    start = time.perf_counter()
    mismatch = compare_sides(*identity_sides(name, order))
    elapsed = time.perf_counter() - start
    return VerificationReport(
        identity=name,
        order=order,
        passed=mismatch is None,
        first_mismatch=mismatch,
        elapsed=elapsed,
    )


def check_all(order: int) -> list[VerificationReport]:
    """One report per identity, in declaration order, all at one order."""
    return [check_identity(name, order) for name in IdentityName]
