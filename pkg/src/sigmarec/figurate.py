"""Pentagonal, triangular, and hexagonal numbers.

Generators, exact membership tests, and the (signed) characteristic
functions that drive the divisor-sum recurrences.  Index conventions:
triangular numbers k(k+1)/2 are indexed by k >= 0 (OEIS A000217);
pentagonal m(3m-1)/2 and hexagonal m(2m-1) numbers take any integer
index m, the negative indices giving the second branch of each family
(A000326/A005449 and A000384/A014105).

Everything here is a pure function of its arguments; all membership
tests use exact integer square roots, never floating point.
"""

from __future__ import annotations

from enum import Enum
from math import isqrt
from typing import Iterator


class FigurateKind(Enum):
    PENTAGONAL = "pentagonal"
    TRIANGULAR = "triangular"
    HEXAGONAL = "hexagonal"


def pentagonal(m: int) -> int:
    """m(3m-1)/2 for any integer m; nonnegative on all of Z."""
    return m * (3 * m - 1) // 2


def triangular(k: int) -> int:
    """k(k+1)/2, defined for k >= 0 only; strictly increasing in k."""
    if k < 0:
        raise ValueError(f"triangular index must be nonnegative, got {k}")
    return k * (k + 1) // 2


def hexagonal(m: int) -> int:
    """m(2m-1) for any integer m.

    As a set {hexagonal(m) : m in Z} coincides with the triangular
    numbers: hexagonal(m) = triangular(2m-1) and hexagonal(-m) =
    triangular(2m) for m > 0.
    """
    return m * (2 * m - 1)


def is_triangular(n: int) -> bool:
    """Exact membership test: n = k(k+1)/2 iff 8n+1 is a perfect square.

    O(1) per query via integer square root.  Negative n is never
    triangular.
    """
    if n < 0:
        return False
    d = 8 * n + 1
    r = isqrt(d)
    return r * r == d


def triangular_indicator(n: int) -> int:
    """1 if n is a triangular number, else 0."""
    return 1 if is_triangular(n) else 0


def hexagonal_sign(n: int) -> int:
    """(-1)**m if n = m(2m-1) for an integer m, else 0.

    The index m is unique: n = m(2m-1) means 8n+1 = (4m-1)**2, and
    since the root r of 8n+1 is odd, exactly one of 4m-1 = r and
    4m-1 = -r has an integer solution.  For n = 0 the index is m = 0
    and the sign is +1.
    """
    if n < 0:
        return 0
    d = 8 * n + 1
    r = isqrt(d)
    if r * r != d:
        return 0
    if (r + 1) % 4 == 0:
        m = (r + 1) // 4
    else:
        m = (1 - r) // 4
    return -1 if m % 2 else 1


def _indexed_values(kind: FigurateKind) -> Iterator[tuple[int, int]]:
    """Yield (index, value) pairs in strictly increasing value order.

    For the two-branch families the indices interleave as
    0, 1, -1, 2, -2, ..., which is exactly increasing-value order.
    """
    if kind is FigurateKind.TRIANGULAR:
        k = 0
        while True:
            yield k, k * (k + 1) // 2
            k += 1
    else:
        value_at = pentagonal if kind is FigurateKind.PENTAGONAL else hexagonal
        yield 0, 0
        m = 1
        while True:
            yield m, value_at(m)
            yield -m, value_at(-m)
            m += 1


def figurate_below(kind: FigurateKind, bound: int) -> list[tuple[int, int]]:
    """All (index, value) pairs of the family with value <= bound.

    Sorted by value; complete for the family.  Used as the support
    enumeration for the recurrence engines.
    """
    if bound < 0:
        raise ValueError(f"bound must be nonnegative, got {bound}")
    out = []
    for idx, val in _indexed_values(kind):
        if val > bound:
            break
        out.append((idx, val))
    return out
