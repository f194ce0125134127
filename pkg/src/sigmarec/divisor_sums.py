"""Divisor-sum functions: per-value trial division and bulk sieve tables.

Five kinds are supported: the classical sum of divisors (OEIS A000203),
the sums of even and of odd divisors (A146076, A000593), their signed
difference odd-minus-even (A002129), and the sum of divisors congruent
to 0, 1, or 3 mod 4.  Trial division is the oracle; the sieve is the
bulk engine, and the two are checked against each other entrywise in
the test suite.

Convention: every kind returns 0 for n <= 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from sigmarec import _backend


class DivisorSumKind(Enum):
    SIGMA = "sigma"
    SIGMA_EVEN = "sigma-even"
    SIGMA_ODD = "sigma-odd"
    SIGMA_TILDE = "tilde"
    SIGMA_BAR = "bar"

    @property
    def cli_name(self) -> str:
        return self.value


@dataclass(frozen=True)
class DivisorClass:
    """Residue-class selector: divisors d with d % modulus in residues."""

    modulus: int
    residues: frozenset[int]

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        if not self.residues:
            raise ValueError("residues must be nonempty")
        if any(r < 0 or r >= self.modulus for r in self.residues):
            raise ValueError(
                f"residues must lie in [0, {self.modulus}), got {set(self.residues)}"
            )

    def contains(self, d: int) -> bool:
        return d % self.modulus in self.residues


ALL_DIVISORS = DivisorClass(1, frozenset({0}))
EVEN_DIVISORS = DivisorClass(2, frozenset({0}))
ODD_DIVISORS = DivisorClass(2, frozenset({1}))
MOD4_013_DIVISORS = DivisorClass(4, frozenset({0, 1, 3}))

# SIGMA_TILDE is the signed combination odd-minus-even, not a single class.
CLASS_FOR_KIND: dict[DivisorSumKind, DivisorClass] = {
    DivisorSumKind.SIGMA: ALL_DIVISORS,
    DivisorSumKind.SIGMA_EVEN: EVEN_DIVISORS,
    DivisorSumKind.SIGMA_ODD: ODD_DIVISORS,
    DivisorSumKind.SIGMA_BAR: MOD4_013_DIVISORS,
}


def class_divisor_sum(n: int, divisor_class: DivisorClass) -> int:
    """Sum of the divisors of n lying in the class; 0 for n <= 0.

    Trial division over divisor pairs (d, n // d), O(sqrt n).
    """
    if n <= 0:
        return 0
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            if divisor_class.contains(d):
                total += d
            e = n // d
            if e != d and divisor_class.contains(e):
                total += e
        d += 1
    return total


def divisor_sum(n: int, kind: DivisorSumKind = DivisorSumKind.SIGMA) -> int:
    """Divisor sum of the given kind by trial division; 0 for n <= 0."""
    if n <= 0:
        return 0
    if kind is DivisorSumKind.SIGMA_TILDE:
        return class_divisor_sum(n, ODD_DIVISORS) - class_divisor_sum(n, EVEN_DIVISORS)
    return class_divisor_sum(n, CLASS_FOR_KIND[kind])


# Sieve weights: contribution of a divisor d is weights[d % modulus] * d.
_SIEVE_WEIGHTS: dict[DivisorSumKind, tuple[int, list[int]]] = {
    DivisorSumKind.SIGMA: (1, [1]),
    DivisorSumKind.SIGMA_EVEN: (2, [1, 0]),
    DivisorSumKind.SIGMA_ODD: (2, [0, 1]),
    DivisorSumKind.SIGMA_TILDE: (2, [-1, 1]),
    DivisorSumKind.SIGMA_BAR: (4, [1, 1, 0, 1]),
}


def sieve_parameters(kind: DivisorSumKind) -> tuple[int, list[int]]:
    """(modulus, weights) pair that drives the sieve kernel for a kind."""
    modulus, weights = _SIEVE_WEIGHTS[kind]
    return modulus, list(weights)


@dataclass(frozen=True)
class DivisorTable:
    """Bulk table of one divisor-sum kind for n = 1..max_n.

    ``values`` has length max_n + 1 with a zero sentinel at index 0, so
    ``values[n]`` is the sum for n directly.  Immutable and freely
    shareable once built.
    """

    kind: DivisorSumKind
    max_n: int
    values: tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.max_n:
            raise IndexError(f"n must be in 1..{self.max_n}, got {n}")
        return self.values[n]

    @property
    def row(self) -> list[int]:
        """The values for n = 1..max_n as a plain list."""
        return list(self.values[1:])


def divisor_table(max_n: int, kind: DivisorSumKind) -> DivisorTable:
    """Sieve-built table of divisor_sum(n, kind) for n = 1..max_n.

    For each d, the selected (signed) contribution of d is added to all
    multiples of d: O(max_n log max_n) additions total.
    """
    if max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {max_n}")
    modulus, weights = sieve_parameters(kind)
    kern = _backend.bounded_kernels(max_n)
    values = kern.divisor_sieve(max_n, modulus, weights)
    return DivisorTable(kind=kind, max_n=max_n, values=tuple(values))
