"""Exact truncated power series over the integers.

A :class:`TruncatedSeries` holds the coefficients of a formal power
series in q up to a fixed order (the highest retained exponent,
inclusive).  All arithmetic is exact and performed modulo q**(order+1);
operations on mixed orders truncate to the smaller one, never promote.
Coefficients are Python integers, so partition-sized values are fine.

Besides the generic ring operations this module builds the named
products and theta-type sums that the identity checker compares:
Euler's product, its even/odd split, the triangular-number product
(Gauss) and the 0,1,3-mod-4 product (a Jacobi triple product
specialization), plus Lambert series for arbitrary divisor classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from sigmarec import _backend
from sigmarec.divisor_sums import DivisorClass
from sigmarec.figurate import FigurateKind, figurate_below


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients c[0..order] of a series sum(c[n] * q**n), exact integers."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) == 0:
            raise ValueError("a truncated series has at least its constant term")

    @property
    def order(self) -> int:
        """Highest retained exponent (inclusive)."""
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> int:
        if not 0 <= n <= self.order:
            raise IndexError(f"exponent must be in 0..{self.order}, got {n}")
        return self.coeffs[n]

    def truncate(self, order: int) -> "TruncatedSeries":
        if order < 0:
            raise ValueError(f"order must be nonnegative, got {order}")
        if order >= self.order:
            return self
        return TruncatedSeries(self.coeffs[: order + 1])

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_mul(self, other)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        order = min(self.order, other.order)
        return TruncatedSeries(
            tuple(self.coeffs[n] + other.coeffs[n] for n in range(order + 1))
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        order = min(self.order, other.order)
        return TruncatedSeries(
            tuple(self.coeffs[n] - other.coeffs[n] for n in range(order + 1))
        )

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(-c for c in self.coeffs))

    def __repr__(self) -> str:
        shown = []
        for n, c in enumerate(self.coeffs):
            if c:
                shown.append(f"{c:+d}*q^{n}" if n else f"{c:+d}")
            if len(shown) == 6:
                shown.append("...")
                break
        body = " ".join(shown) if shown else "0"
        return f"TruncatedSeries({body}, order={self.order})"


def series(coeffs: Iterable[int]) -> TruncatedSeries:
    """Build a series from its coefficient sequence c[0], c[1], ..."""
    return TruncatedSeries(tuple(coeffs))


def constant_series(value: int, order: int) -> TruncatedSeries:
    return TruncatedSeries((value,) + (0,) * order)


def series_from_terms(terms: dict[int, int], order: int) -> TruncatedSeries:
    """Series with the given exponent -> coefficient terms, rest zero."""
    coeffs = [0] * (order + 1)
    for exponent, coefficient in terms.items():
        if 0 <= exponent <= order:
            coeffs[exponent] += coefficient
    return TruncatedSeries(tuple(coeffs))


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated to min(a.order, b.order)."""
    order = min(a.order, b.order)
    out = _backend.kernels.convolve_series(list(a.coeffs), list(b.coeffs), order)
    return TruncatedSeries(tuple(out))


def series_inverse(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse to a.order; requires a[0] in {+1, -1}.

    Any other constant term is a non-unit over the integers and is
    rejected.
    """
    out = _backend.kernels.invert_series(list(a.coeffs))
    return TruncatedSeries(tuple(out))


def series_derivative(a: TruncatedSeries) -> TruncatedSeries:
    """Formal derivative; order drops by one (a constant maps to [0])."""
    if a.order == 0:
        return TruncatedSeries((0,))
    return TruncatedSeries(
        tuple((n + 1) * a.coeffs[n + 1] for n in range(a.order))
    )


def q_log_derivative(f: TruncatedSeries) -> TruncatedSeries:
    """q * f'(q) / f(q) truncated to f.order; requires f[0] = 1.

    This is the operator that turns an infinite product into a
    divisor-sum series: applied to a product of (1 - q**j) factors it
    yields -sum_j j*q**j / (1 - q**j), a Lambert series.  The constant
    term of the result is always 0.
    """
    if f.coeffs[0] != 1:
        raise ValueError(f"constant term must be 1, got {f.coeffs[0]}")
    if f.order == 0:
        return TruncatedSeries((0,))
    ratio = series_mul(series_derivative(f), series_inverse(f).truncate(f.order - 1))
    return TruncatedSeries((0,) + ratio.coeffs)


def sparse_product(
    factors: Iterable[tuple[int, int]], order: int
) -> TruncatedSeries:
    """Expand prod (1 + sign * q**exponent) truncated to ``order``.

    Each factor costs one shifted addition pass over the coefficient
    array, O(order) per factor, instead of a full Cauchy product.
    Factors with exponent > order are inert but still validated.
    """
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    coeffs = [1] + [0] * order
    kernels = _backend.kernels
    for exponent, sign in factors:
        kernels.binomial_factor(coeffs, exponent, sign)
    return TruncatedSeries(tuple(coeffs))


class NamedSeries(Enum):
    """The specific products and theta-type sums used by the identities."""

    EULER_PRODUCT = "euler-product"  # prod (1 - q^i)
    EVEN_FACTOR_PRODUCT = "even-factor-product"  # prod (1 - q^{2i})
    ODD_FACTOR_INVERSE = "odd-factor-inverse"  # prod 1/(1 - q^{2i-1})
    TRIANGULAR_PRODUCT = "triangular-product"  # the two lines above, multiplied
    HEXAGONAL_PRODUCT = "hexagonal-product"  # prod over i of (1-q^{4i-3})(1-q^{4i-1})(1-q^{4i})
    TRIANGULAR_THETA = "triangular-theta"  # sum q^{k(k+1)/2}
    HEXAGONAL_THETA = "hexagonal-theta"  # sum (-1)^m q^{m(2m-1)}, m over Z
    PENTAGONAL_THETA = "pentagonal-theta"  # sum (-1)^m q^{m(3m-1)/2}, m over Z


def _signed_theta(kind: FigurateKind, order: int) -> TruncatedSeries:
    terms = {value: (-1 if index % 2 else 1) for index, value in figurate_below(kind, order)}
    return series_from_terms(terms, order)


def build_named_series(name: NamedSeries, order: int) -> TruncatedSeries:
    """Construct one of the named series to the given order."""
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    if name is NamedSeries.EULER_PRODUCT:
        return sparse_product(((i, -1) for i in range(1, order + 1)), order)
    if name is NamedSeries.EVEN_FACTOR_PRODUCT:
        return sparse_product(((i, -1) for i in range(2, order + 1, 2)), order)
    if name is NamedSeries.ODD_FACTOR_INVERSE:
        odd = sparse_product(((i, -1) for i in range(1, order + 1, 2)), order)
        return series_inverse(odd)
    if name is NamedSeries.TRIANGULAR_PRODUCT:
        return series_mul(
            build_named_series(NamedSeries.EVEN_FACTOR_PRODUCT, order),
            build_named_series(NamedSeries.ODD_FACTOR_INVERSE, order),
        )
    if name is NamedSeries.HEXAGONAL_PRODUCT:
        factors = ((i, -1) for i in range(1, order + 1) if i % 4 in (0, 1, 3))
        return sparse_product(factors, order)
    if name is NamedSeries.TRIANGULAR_THETA:
        terms = {value: 1 for _, value in figurate_below(FigurateKind.TRIANGULAR, order)}
        return series_from_terms(terms, order)
    if name is NamedSeries.HEXAGONAL_THETA:
        return _signed_theta(FigurateKind.HEXAGONAL, order)
    if name is NamedSeries.PENTAGONAL_THETA:
        return _signed_theta(FigurateKind.PENTAGONAL, order)
    raise ValueError(f"unknown named series: {name!r}")


def lambert_series(divisor_class: DivisorClass, order: int) -> TruncatedSeries:
    """sum_{n>=1} s(n) q^n where s(n) sums the divisors of n in the class.

    Built by the Lambert re-indexing: for each d in the class, d is
    added at every multiple of d, i.e. sum_d d * q^d / (1 - q^d)
    expanded termwise.
    """
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    coeffs = [0] * (order + 1)
    for d in range(1, order + 1):
        if divisor_class.contains(d):
            for multiple in range(d, order + 1, d):
                coeffs[multiple] += d
    return TruncatedSeries(tuple(coeffs))


def first_mismatch(
    a: Sequence[int], b: Sequence[int], *, through: int | None = None
) -> tuple[int, int, int] | None:
    """Smallest index where two coefficient sequences disagree.

    Compares indices 0..through (default: the shorter length - 1).
    Returns (index, a_value, b_value), or None when they agree.
    """
    limit = min(len(a), len(b)) - 1
    if through is not None:
        limit = min(limit, through)
    for n in range(limit + 1):
        if a[n] != b[n]:
            return n, a[n], b[n]
    return None
