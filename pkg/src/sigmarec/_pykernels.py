"""Pure-Python implementations of the hot kernels.

This module is the fallback lane behind :mod:`sigmarec._kernels` (the
compiled Cython extension).  Both expose identical signatures and
identical results; kernel selection happens once in
:mod:`sigmarec._backend`.  All arithmetic is exact: Python integers
throughout, no width limits.
"""

from __future__ import annotations

COMPILED = False


def divisor_sieve(max_n: int, modulus: int, weights: list[int]) -> list[int]:
    """Harmonic divisor sieve.

    Returns ``vals`` of length max_n+1 (index 0 unused, always 0) with
    vals[n] = sum over divisors d of n of weights[d % modulus] * d.
    O(max_n log max_n) additions.
    """
    if max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {max_n}")
    if modulus < 1 or len(weights) != modulus:
        raise ValueError("weights must have exactly one entry per residue")
    vals = [0] * (max_n + 1)
    for d in range(1, max_n + 1):
        wd = weights[d % modulus] * d
        if wd == 0:
            continue
        for m in range(d, max_n + 1, d):
            vals[m] += wd
    return vals


def figurate_recurrence(
    max_n: int, offsets: list[int], signs: list[int], hit_factor: int
) -> list[int]:
    """Bottom-up table for the figurate-support recurrences.

    vals[n] = sum over support positions j with offsets[j] <= n of
        signs[j] * vals[n - offsets[j]]     if offsets[j] <  n
        hit_factor * signs[j] * n           if offsets[j] == n
    with vals[0] = 0 (index 0 is a sentinel, never read as data because
    an exact hit takes the boundary branch instead).

    ``offsets`` must be strictly increasing and start >= 1.
    """
    if max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {max_n}")
    vals = [0] * (max_n + 1)
    nsupp = len(offsets)
    for n in range(1, max_n + 1):
        acc = 0
        j = 0
        while j < nsupp:
            off = offsets[j]
            if off > n:
                break
            if off == n:
                acc += hit_factor * signs[j] * n
            else:
                acc += signs[j] * vals[n - off]
            j += 1
        vals[n] = acc
    return vals


def partition_series(max_n: int, offsets: list[int], signs: list[int]) -> list[int]:
    """Partition counts p(0..max_n) by the signed-offset recurrence.

    vals[0] = 1; vals[n] = sum of signs[j] * vals[n - offsets[j]] over
    offsets[j] <= n.  Exact big integers (p(n) outgrows 64 bits near
    n = 400).
    """
    if max_n < 0:
        raise ValueError(f"max_n must be >= 0, got {max_n}")
    vals = [0] * (max_n + 1)
    vals[0] = 1
    nsupp = len(offsets)
    for n in range(1, max_n + 1):
        acc = 0
        j = 0
        while j < nsupp:
            off = offsets[j]
            if off > n:
                break
            if signs[j] > 0:
                acc += vals[n - off]
            else:
                acc -= vals[n - off]
            j += 1
        vals[n] = acc
    return vals


def convolve_series(a: list[int], b: list[int], order: int) -> list[int]:
    """Cauchy product of coefficient lists, truncated to ``order``."""
    la, lb = len(a), len(b)
    out = [0] * (order + 1)
    for i in range(min(la, order + 1)):
        ai = a[i]
        if not ai:
            continue
        hi = min(order - i, lb - 1)
        for j in range(hi + 1):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out


def invert_series(a: list[int]) -> list[int]:
    """Multiplicative inverse of a coefficient list with a[0] in {1, -1}.

    Forward recurrence b[n] = -a[0] * sum_{k=1..n} a[k] b[n-k],
    b[0] = a[0]; exact over the integers because a[0] is a unit.
    """
    a0 = a[0]
    if a0 not in (1, -1):
        raise ValueError(f"constant term must be +1 or -1, got {a0}")
    n1 = len(a)
    b = [0] * n1
    b[0] = a0
    for n in range(1, n1):
        s = 0
        for k in range(1, n + 1):
            ak = a[k]
            if ak:
                s += ak * b[n - k]
        b[n] = -a0 * s
    return b


def binomial_factor(coeffs: list[int], exponent: int, sign: int) -> None:
    """Multiply a coefficient list in place by (1 + sign * q**exponent).

    One shifted addition pass, highest exponent first so each source
    coefficient is read before it is overwritten.
    """
    if exponent < 1:
        raise ValueError(f"exponent must be >= 1, got {exponent}")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    if sign > 0:
        for n in range(len(coeffs) - 1, exponent - 1, -1):
            coeffs[n] += coeffs[n - exponent]
    else:
        for n in range(len(coeffs) - 1, exponent - 1, -1):
            coeffs[n] -= coeffs[n - exponent]
