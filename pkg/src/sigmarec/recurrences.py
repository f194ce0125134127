"""Recurrence engines over figurate supports, plus the balanced sums.

Each engine computes its whole table bottom-up from the recurrence
alone, with no divisor enumeration anywhere:

* partition numbers p(n) over the pentagonal support with signs
  (-1)**(m+1), p(0) = 1;
* the sum of divisors over the same pentagonal support, where an exact
  figurate hit contributes n itself in place of the undefined value at
  zero;
* the odd-minus-even divisor sum over the triangular support t_k
  (k >= 1), all signs -1, plus n when n is itself triangular;
* the 0,1,3-mod-4 divisor sum over the hexagonal support m(2m-1)
  (m != 0) with signs (-1)**(m+1), minus n times the signed hexagonal
  characteristic of n.

The balanced-sum witnesses of the two corollaries are evaluated here
as well, against the trial-division oracle by default.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from sigmarec import _backend
from sigmarec.divisor_sums import (
    DivisorSumKind,
    DivisorTable,
    divisor_sum,
)
from sigmarec.figurate import FigurateKind, figurate_below


class RecurrenceKind(Enum):
    PARTITION_PENTAGONAL = "partition"
    SIGMA_PENTAGONAL = "sigma"
    TILDE_TRIANGULAR = "tilde"
    BAR_HEXAGONAL = "bar"


#: Divisor-sum kind each recurrence reproduces (partitions have none).
RECURRENCE_TARGET: dict[RecurrenceKind, DivisorSumKind] = {
    RecurrenceKind.SIGMA_PENTAGONAL: DivisorSumKind.SIGMA,
    RecurrenceKind.TILDE_TRIANGULAR: DivisorSumKind.SIGMA_TILDE,
    RecurrenceKind.BAR_HEXAGONAL: DivisorSumKind.SIGMA_BAR,
}

RECURRENCE_FOR_KIND: dict[DivisorSumKind, RecurrenceKind] = {
    v: k for k, v in RECURRENCE_TARGET.items()
}


@dataclass(frozen=True)
class RecurrenceTable:
    """Values computed left-to-right; entry n depends only on entries < n.

    ``values`` has length max_n + 1.  For the partition kind the index
    range is 0..max_n with values[0] = p(0) = 1; for the divisor-sum
    kinds index 0 is an unused zero sentinel and the data lives at
    1..max_n.
    """

    kind: RecurrenceKind
    max_n: int
    values: tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        lo = 0 if self.kind is RecurrenceKind.PARTITION_PENTAGONAL else 1
        if not lo <= n <= self.max_n:
            raise IndexError(f"n must be in {lo}..{self.max_n}, got {n}")
        return self.values[n]

    @property
    def row(self) -> list[int]:
        """Values for n = 1..max_n (partition tables also carry [0])."""
        return list(self.values[1:])


def _signed_support(kind: FigurateKind, max_n: int) -> tuple[list[int], list[int]]:
    """Nonzero-index support values <= max_n with signs (-1)**(index+1)."""
    offsets, signs = [], []
    for index, value in figurate_below(kind, max_n):
        if index == 0:
            continue
        offsets.append(value)
        signs.append(1 if index % 2 else -1)
    return offsets, signs


def recurrence_parameters(
    kind: RecurrenceKind, max_n: int
) -> tuple[list[int], list[int], int]:
    """(offsets, signs, hit_factor) driving the table kernel for a kind.

    ``hit_factor`` scales the boundary contribution sign * n taken when
    the recurrence lands exactly on a support value.
    """
    if kind in (RecurrenceKind.PARTITION_PENTAGONAL, RecurrenceKind.SIGMA_PENTAGONAL):
        offsets, signs = _signed_support(FigurateKind.PENTAGONAL, max_n)
        return offsets, signs, 1
    if kind is RecurrenceKind.TILDE_TRIANGULAR:
        offsets = [v for k, v in figurate_below(FigurateKind.TRIANGULAR, max_n) if k >= 1]
        return offsets, [-1] * len(offsets), -1
    if kind is RecurrenceKind.BAR_HEXAGONAL:
        offsets, signs = _signed_support(FigurateKind.HEXAGONAL, max_n)
        return offsets, signs, 1
    raise ValueError(f"unknown recurrence kind: {kind!r}")


def partition_table(max_n: int) -> RecurrenceTable:
    """p(0..max_n) with p(0) = 1, by the signed pentagonal recurrence."""
    if max_n < 0:
        raise ValueError(f"max_n must be >= 0, got {max_n}")
    offsets, signs, _ = recurrence_parameters(
        RecurrenceKind.PARTITION_PENTAGONAL, max_n
    )
    values = _backend.kernels.partition_series(max_n, offsets, signs)
    return RecurrenceTable(
        kind=RecurrenceKind.PARTITION_PENTAGONAL, max_n=max_n, values=tuple(values)
    )


def _figurate_table(kind: RecurrenceKind, max_n: int) -> RecurrenceTable:
    if max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {max_n}")
    offsets, signs, hit_factor = recurrence_parameters(kind, max_n)
    kern = _backend.bounded_kernels(max_n)
    values = kern.figurate_recurrence(max_n, offsets, signs, hit_factor)
    return RecurrenceTable(kind=kind, max_n=max_n, values=tuple(values))


def sigma_recurrence_table(max_n: int) -> RecurrenceTable:
    """Sum of divisors for 1..max_n purely by the pentagonal recurrence.

    Term for support value e with sign s contributes s * value(n - e)
    when n > e, s * n when n == e, nothing when n < e.
    """
    return _figurate_table(RecurrenceKind.SIGMA_PENTAGONAL, max_n)


def tilde_recurrence_table(max_n: int) -> RecurrenceTable:
    """Odd-minus-even divisor sum for 1..max_n by the triangular recurrence:
    value(n) = -sum_{k>=1, t_k<=n} value(n - t_k), plus n when n is triangular.
    """
    return _figurate_table(RecurrenceKind.TILDE_TRIANGULAR, max_n)


def bar_recurrence_table(max_n: int) -> RecurrenceTable:
    """0,1,3-mod-4 divisor sum for 1..max_n by the hexagonal recurrence:
    value(n) = sum_{m != 0} (-1)**(m+1) value(n - m(2m-1)) - n * sign(n),
    where sign is the signed hexagonal characteristic.
    """
    return _figurate_table(RecurrenceKind.BAR_HEXAGONAL, max_n)


def recurrence_table(kind: RecurrenceKind, max_n: int) -> RecurrenceTable:
    """Table for any recurrence kind (dispatch helper for CLI/benchmarks)."""
    if kind is RecurrenceKind.PARTITION_PENTAGONAL:
        return partition_table(max_n)
    return _figurate_table(kind, max_n)


@dataclass(frozen=True)
class BalancePair:
    """(left sum, right sum) witness for one balanced-sum identity instance."""

    n: int
    left: int
    right: int

    @property
    def balanced(self) -> bool:
        return self.left == self.right


def _lookup(n: int, kind: DivisorSumKind, table: DivisorTable | None) -> int:
    if n <= 0:
        return 0
    if table is not None:
        return table[n]
    return divisor_sum(n, kind)


def balance_triangular(
    n: int,
    *,
    even_table: DivisorTable | None = None,
    odd_table: DivisorTable | None = None,
) -> BalancePair:
    """Sums of even- and odd-divisor sums over n - t_k, k >= 0, t_k <= n.

    When n is not triangular the two sums are equal; for triangular n
    no relation is claimed.  Values come from the trial-division oracle
    unless precomputed tables are supplied (the bulk sweeps pass sieve
    tables, which are themselves verified against trial division).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    left = right = 0
    for _, t in figurate_below(FigurateKind.TRIANGULAR, n):
        left += _lookup(n - t, DivisorSumKind.SIGMA_EVEN, even_table)
        right += _lookup(n - t, DivisorSumKind.SIGMA_ODD, odd_table)
    return BalancePair(n=n, left=left, right=right)


def balance_hexagonal(
    n: int, *, bar_table: DivisorTable | None = None
) -> BalancePair:
    """0,1,3-mod-4 divisor sums over n - h_m, split by index parity.

    Left sums over even indices m (0, +-2, ...), right over odd indices
    (+-1, +-3, ...), both over all integers m with h_m <= n.  When n is
    not hexagonal the two sums are equal.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    left = right = 0
    for m, h in figurate_below(FigurateKind.HEXAGONAL, n):
        value = _lookup(n - h, DivisorSumKind.SIGMA_BAR, bar_table)
        if m % 2 == 0:
            left += value
        else:
            right += value
    return BalancePair(n=n, left=left, right=right)


__all__ = [
    "RecurrenceKind",
    "RecurrenceTable",
    "BalancePair",
    "RECURRENCE_TARGET",
    "RECURRENCE_FOR_KIND",
    "recurrence_parameters",
    "partition_table",
    "sigma_recurrence_table",
    "tilde_recurrence_table",
    "bar_recurrence_table",
    "recurrence_table",
    "balance_triangular",
    "balance_hexagonal",
]
