import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sigmarec.divisor_sums import (
    EVEN_DIVISORS,
    MOD4_013_DIVISORS,
    ODD_DIVISORS,
    DivisorClass,
)
from sigmarec.power_series import (
    NamedSeries,
    TruncatedSeries,
    build_named_series,
    constant_series,
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

# ---------------------------------------------------------------- oracles


def long_division_inverse(divisor, order):
    """Schoolbook long division of 1 by a polynomial with unit constant."""
    assert divisor[0] in (1, -1)
    remainder = [1] + [0] * order
    quotient = [0] * (order + 1)
    for n in range(order + 1):
        c = remainder[n] * divisor[0]
        quotient[n] = c
        if c:
            for j, d in enumerate(divisor):
                if n + j <= order:
                    remainder[n + j] -= c * d
    return quotient


def dp_partition_counts(max_n):
    counts = [1] + [0] * max_n
    for part in range(1, max_n + 1):
        for i in range(part, max_n + 1):
            counts[i] += counts[i - part]
    return counts


def schoolbook_mul(a, b, order):
    out = [0] * (order + 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            if i + j <= order:
                out[i + j] += ai * bj
    return out


# ---------------------------------------------------------- strategies

coeffs_st = st.lists(st.integers(min_value=-9, max_value=9),
                     min_size=1, max_size=24)
series_st = coeffs_st.map(lambda c: TruncatedSeries(tuple(c)))

unit_head = st.sampled_from([1, -1])


def unit_series_st(min_order=0, max_order=24):
    tail = st.lists(st.integers(min_value=-9, max_value=9),
                    min_size=min_order, max_size=max_order)
    return st.tuples(unit_head, tail).map(
        lambda t: TruncatedSeries((t[0], *t[1])))


def monic_series_st(max_order=24):
    tail = st.lists(st.integers(min_value=-9, max_value=9),
                    min_size=0, max_size=max_order)
    return tail.map(lambda t: TruncatedSeries((1, *t)))


# ------------------------------------------------------------ TruncatedSeries


def test_series_basics():
    s = series([1, 0, -2])
    assert s.order == 2
    assert s[0] == 1 and s[2] == -2
    with pytest.raises(IndexError):
        s[3]
    with pytest.raises(IndexError):
        s[-1]
    assert s.truncate(1).coeffs == (1, 0)
    assert s.truncate(5) is s
    with pytest.raises(ValueError):
        TruncatedSeries(())


def test_series_addition_truncates_to_smaller_order():
    a = series([1, 2, 3, 4])
    b = series([1, 1])
    assert (a + b).coeffs == (2, 3)
    assert (a - b).coeffs == (0, 1)
    assert (-a).coeffs == (-1, -2, -3, -4)


# ---------------------------------------------------------------- series_mul


def test_mul_geometric_telescopes():
    one_minus_q = series([1, -1, 0, 0, 0, 0])
    geometric = series([1, 1, 1, 1, 1, 1])
    assert series_mul(one_minus_q, geometric).coeffs == (1, 0, 0, 0, 0, 0)


def test_mul_factor_split_reproduces_triangular_theta():
    t0 = build_named_series(NamedSeries.EVEN_FACTOR_PRODUCT, 10)
    t1 = build_named_series(NamedSeries.ODD_FACTOR_INVERSE, 10)
    theta = build_named_series(NamedSeries.TRIANGULAR_THETA, 10)
    assert series_mul(t0, t1).coeffs == theta.coeffs


def test_mul_by_zero_annihilates():
    a = series([3, 1, 4, 1, 5])
    z = constant_series(0, 4)
    assert series_mul(a, z).coeffs == (0, 0, 0, 0, 0)


@given(series_st, series_st)
@settings(max_examples=200)
def test_mul_commutative(a, b):
    assert series_mul(a, b).coeffs == series_mul(b, a).coeffs


@given(series_st, series_st, series_st)
@settings(max_examples=200)
def test_mul_associative(a, b, c):
    left = series_mul(series_mul(a, b), c)
    right = series_mul(a, series_mul(b, c))
    assert left.coeffs == right.coeffs


@given(series_st)
@settings(max_examples=200)
def test_mul_identity(a):
    one = constant_series(1, a.order)
    assert series_mul(a, one).coeffs == a.coeffs


@given(series_st, series_st)
@settings(max_examples=200)
def test_mul_matches_schoolbook(a, b):
    order = min(a.order, b.order)
    assert list(series_mul(a, b).coeffs) == schoolbook_mul(
        a.coeffs, b.coeffs, order)


# ------------------------------------------------------------ series_inverse


def test_inverse_of_one_minus_q():
    assert series_inverse(series([1, -1, 0, 0, 0])).coeffs == (1, 1, 1, 1, 1)


def test_inverse_of_one_minus_q_cubed():
    divisor = [1, 0, 0, -1, 0, 0, 0, 0]
    expected = long_division_inverse(divisor, 7)
    assert expected == [1, 0, 0, 1, 0, 0, 1, 0]
    assert list(series_inverse(series(divisor)).coeffs) == expected


def test_inverse_of_euler_product_counts_partitions():
    euler = build_named_series(NamedSeries.EULER_PRODUCT, 20)
    inv = series_inverse(euler)
    assert list(inv.coeffs) == dp_partition_counts(20)
    assert inv[0] == 1


def test_inverse_rejects_non_unit_constant():
    with pytest.raises(ValueError):
        series_inverse(series([2, 1]))
    with pytest.raises(ValueError):
        series_inverse(series([0, 1]))


def test_inverse_with_negative_unit():
    a = series([-1, 1, 2])
    b = series_inverse(a)
    assert series_mul(a, b).coeffs == (1, 0, 0)


@given(unit_series_st(min_order=64, max_order=64))
@settings(max_examples=200)
def test_inverse_times_original_is_one_at_order_64(a):
    product = series_mul(a, series_inverse(a))
    assert product.coeffs == (1,) + (0,) * 64


# --------------------------------------------------------- series_derivative


def test_derivative_examples():
    assert series_derivative(series([1, 1, 1])).coeffs == (1, 2)
    assert series_derivative(series([7])).coeffs == (0,)
    theta = build_named_series(NamedSeries.TRIANGULAR_THETA, 10)
    assert series_derivative(theta)[0] == 1


@given(series_st, series_st)
@settings(max_examples=200)
def test_derivative_leibniz_rule(a, b):
    through = min(a.order, b.order) - 1
    if through < 0:
        return  # order-0 product: its derivative retains no coefficients
    lhs = series_derivative(series_mul(a, b))
    rhs = series_mul(series_derivative(a), b) + series_mul(
        a, series_derivative(b))
    assert first_mismatch(lhs.coeffs, rhs.coeffs, through=through) is None


# --------------------------------------------------------- q_log_derivative


def test_q_log_derivative_of_even_factor_product():
    t0 = build_named_series(NamedSeries.EVEN_FACTOR_PRODUCT, 10)
    assert q_log_derivative(t0).coeffs == (0, 0, -2, 0, -6, 0, -8, 0, -14, 0, -12)


def test_q_log_derivative_of_odd_factor_inverse():
    t1 = build_named_series(NamedSeries.ODD_FACTOR_INVERSE, 10)
    assert q_log_derivative(t1).coeffs == (0, 1, 1, 4, 1, 6, 4, 8, 1, 13, 6)


def test_q_log_derivative_of_constant_is_zero():
    assert q_log_derivative(constant_series(1, 6)).coeffs == (0,) * 7
    assert q_log_derivative(constant_series(1, 0)).coeffs == (0,)


def test_q_log_derivative_rejects_nonunit_constant():
    with pytest.raises(ValueError):
        q_log_derivative(series([-1, 1]))
    with pytest.raises(ValueError):
        q_log_derivative(series([0, 1]))


@given(monic_series_st(), monic_series_st())
@settings(max_examples=200)
def test_q_log_derivative_additive_over_products(f, g):
    lhs = q_log_derivative(series_mul(f, g))
    rhs = q_log_derivative(f) + q_log_derivative(g)
    assert first_mismatch(lhs.coeffs, rhs.coeffs) is None


# ------------------------------------------------------------ sparse_product


def test_sparse_product_euler_factors():
    got = sparse_product(((i, -1) for i in range(1, 13)), 12)
    assert got.coeffs == (1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1)


def test_sparse_product_empty():
    assert sparse_product((), 3).coeffs == (1, 0, 0, 0)


def test_sparse_product_single_factor():
    assert sparse_product([(2, -1)], 5).coeffs == (1, 0, -1, 0, 0, 0)


def test_sparse_product_rejects_bad_factors():
    with pytest.raises(ValueError):
        sparse_product([(0, 1)], 4)
    with pytest.raises(ValueError):
        sparse_product([(1, 2)], 4)
    with pytest.raises(ValueError):
        sparse_product([(1, 1)], -1)


@given(st.lists(st.tuples(st.integers(min_value=1, max_value=12),
                          st.sampled_from([1, -1])), max_size=8))
@settings(max_examples=200)
def test_sparse_product_matches_explicit_multiplication(factors):
    order = 16
    expected = constant_series(1, order)
    for exponent, sign in factors:
        factor = series_from_terms({0: 1, exponent: sign}, order)
        expected = series_mul(expected, factor)
    assert sparse_product(factors, order).coeffs == expected.coeffs


# -------------------------------------------------------- named constructors


def test_triangular_theta_support():
    got = build_named_series(NamedSeries.TRIANGULAR_THETA, 10)
    assert got.coeffs == (1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1)


def test_hexagonal_product_expansion():
    got = build_named_series(NamedSeries.HEXAGONAL_PRODUCT, 10)
    assert got.coeffs == (1, -1, 0, -1, 0, 0, 1, 0, 0, 0, 1)


def test_triangular_product_constant_term():
    assert build_named_series(NamedSeries.TRIANGULAR_PRODUCT, 0).coeffs == (1,)


def test_pentagonal_theta_signs():
    got = build_named_series(NamedSeries.PENTAGONAL_THETA, 26)
    nonzero = {n: c for n, c in enumerate(got.coeffs) if c}
    assert nonzero == {0: 1, 1: -1, 2: -1, 5: 1, 7: 1, 12: -1, 15: -1,
                       22: 1, 26: 1}


def test_hexagonal_theta_signs():
    got = build_named_series(NamedSeries.HEXAGONAL_THETA, 10)
    assert got.coeffs == (1, -1, 0, -1, 0, 0, 1, 0, 0, 0, 1)


# ------------------------------------------------------------ lambert_series


def test_lambert_series_even_class():
    got = lambert_series(EVEN_DIVISORS, 10)
    assert got.coeffs == (0, 0, 2, 0, 6, 0, 8, 0, 14, 0, 12)


def test_lambert_series_bar_class():
    got = lambert_series(MOD4_013_DIVISORS, 10)
    assert got.coeffs == (0, 1, 1, 4, 5, 6, 4, 8, 13, 13, 6)


def test_lambert_series_order_zero():
    assert lambert_series(ODD_DIVISORS, 0).coeffs == (0,)


def test_lambert_series_matches_restricted_trial_division():
    order = 2000
    classes = [
        DivisorClass(1, frozenset({0})),
        EVEN_DIVISORS,
        ODD_DIVISORS,
        MOD4_013_DIVISORS,
    ]
    built = {cls: lambert_series(cls, order) for cls in classes}
    for n in range(1, order + 1):
        sums = {cls: 0 for cls in classes}
        d = 1
        while d * d <= n:
            if n % d == 0:
                for e in {d, n // d}:
                    for cls in classes:
                        if cls.contains(e):
                            sums[cls] += e
            d += 1
        for cls in classes:
            assert built[cls][n] == sums[cls]


# -------------------------------------------------------------- first_mismatch


def test_first_mismatch():
    assert first_mismatch([1, 2, 3], [1, 2, 3]) is None
    assert first_mismatch([1, 2, 3], [1, 5, 3]) == (1, 2, 5)
    assert first_mismatch([1, 2], [1, 2, 9]) is None
    assert first_mismatch([1, 2, 3], [1, 2, 9], through=1) is None
