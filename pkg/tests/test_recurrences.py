import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sigmarec.divisor_sums import DivisorSumKind, divisor_sum, divisor_table
from sigmarec.figurate import is_triangular, triangular
from sigmarec.recurrences import (
    BalancePair,
    RecurrenceKind,
    balance_hexagonal,
    balance_triangular,
    bar_recurrence_table,
    partition_table,
    recurrence_parameters,
    recurrence_table,
    sigma_recurrence_table,
    tilde_recurrence_table,
)

# ---------------------------------------------------------------- oracles


def enumerate_partitions(n, max_part=None):
    """Yield every partition of n as a nonincreasing tuple."""
    if n == 0:
        yield ()
        return
    if max_part is None or max_part > n:
        max_part = n
    for first in range(max_part, 0, -1):
        for rest in enumerate_partitions(n - first, first):
            yield (first,) + rest


def dp_partition_counts(max_n):
    counts = [1] + [0] * max_n
    for part in range(1, max_n + 1):
        for i in range(part, max_n + 1):
            counts[i] += counts[i - part]
    return counts


# ---------------------------------------------------------------- partitions


def test_partition_small_values_against_enumeration():
    table = partition_table(12)
    for n in range(13):
        assert table[n] == sum(1 for _ in enumerate_partitions(n))
    assert table[5] == 7


def test_partition_base_case():
    assert partition_table(0).values == (1,)
    assert partition_table(1).values == (1, 1)


def test_partition_p20():
    assert dp_partition_counts(20)[20] == 627
    assert partition_table(20)[20] == 627


def test_partition_matches_dp_oracle_to_300():
    assert list(partition_table(300).values) == dp_partition_counts(300)


def test_partition_rejects_negative():
    with pytest.raises(ValueError):
        partition_table(-1)


# ----------------------------------------------------------- sigma recurrence


def test_sigma_recurrence_worked_examples():
    table = sigma_recurrence_table(10)
    # sigma(7) = sigma(6) + sigma(5) - sigma(2) - [boundary 7]
    assert table[6] + table[5] - table[2] - 7 == 8
    assert table[7] == 8
    # sigma(8) = sigma(7) + sigma(6) - sigma(3) - sigma(1)
    assert table[7] + table[6] - table[3] - table[1] == 15
    assert table[8] == 15
    assert table[1] == 1


def test_sigma_recurrence_rejects_zero():
    with pytest.raises(ValueError):
        sigma_recurrence_table(0)


# ----------------------------------------------------------- tilde recurrence


def test_tilde_recurrence_worked_examples():
    table = tilde_recurrence_table(10)
    # 9 is not triangular: pure sign-flipped sum over 9 - {1, 3, 6}
    assert -(table[8] + table[6] + table[3]) == 13
    assert table[9] == 13
    # 10 is triangular: the boundary adds 10
    assert -(table[9] + table[7] + table[4]) + 10 == -6
    assert table[10] == -6
    assert table[1] == 1


# ------------------------------------------------------------- bar recurrence


def test_bar_recurrence_worked_examples():
    table = bar_recurrence_table(10)
    # 10 = h(-2): sum over 10 - {1, 3, 6} with signs +, +, -, boundary -10
    assert table[9] + table[7] - table[4] - 10 == 6
    assert table[10] == 6
    assert table[1] == 1
    assert table[2] == 1
    # oracle for n=2: divisors {1, 2}, only 1 is 0/1/3 mod 4
    assert divisor_sum(2, DivisorSumKind.SIGMA_BAR) == 1


# -------------------------------------------------------- recurrence = oracle


@pytest.mark.parametrize("build,kind", [
    (sigma_recurrence_table, DivisorSumKind.SIGMA),
    (tilde_recurrence_table, DivisorSumKind.SIGMA_TILDE),
    (bar_recurrence_table, DivisorSumKind.SIGMA_BAR),
])
def test_recurrence_equals_sieve_to_3000(build, kind):
    max_n = 3000
    assert build(max_n).values[1:] == divisor_table(max_n, kind).values[1:]


def test_recurrence_table_dispatch():
    assert recurrence_table(RecurrenceKind.PARTITION_PENTAGONAL, 6).values == \
        (1, 1, 2, 3, 5, 7, 11)
    assert recurrence_table(RecurrenceKind.SIGMA_PENTAGONAL, 6).row == \
        [1, 3, 4, 7, 6, 12]


def test_recurrence_parameters_supports():
    offsets, signs, hit = recurrence_parameters(
        RecurrenceKind.SIGMA_PENTAGONAL, 15)
    assert offsets == [1, 2, 5, 7, 12, 15]
    assert signs == [1, 1, -1, -1, 1, 1]
    assert hit == 1
    offsets, signs, hit = recurrence_parameters(
        RecurrenceKind.TILDE_TRIANGULAR, 10)
    assert offsets == [1, 3, 6, 10]
    assert signs == [-1, -1, -1, -1]
    assert hit == -1
    offsets, signs, hit = recurrence_parameters(
        RecurrenceKind.BAR_HEXAGONAL, 15)
    assert offsets == [1, 3, 6, 10, 15]
    assert signs == [1, 1, -1, -1, 1]
    assert hit == 1


def test_table_indexing_bounds():
    table = sigma_recurrence_table(5)
    with pytest.raises(IndexError):
        table[0]
    with pytest.raises(IndexError):
        table[6]
    parts = partition_table(5)
    assert parts[0] == 1


# ------------------------------------------------------------- balanced sums


def test_balance_triangular_worked_example():
    pair = balance_triangular(11)
    assert pair == BalancePair(n=11, left=26, right=26)
    assert pair.balanced


def test_balance_triangular_small():
    # oracle for n=2 (2 is not triangular): divisors of 1 and 2 directly
    assert balance_triangular(2) == BalancePair(n=2, left=2, right=2)


def test_balance_triangular_unconstrained_at_triangular_n():
    pair = balance_triangular(10)
    assert not pair.balanced  # 10 is triangular; no relation claimed


def test_balance_hexagonal_worked_example():
    pair = balance_hexagonal(11)
    assert pair == BalancePair(n=11, left=19, right=19)
    # left = bar(11) + bar(5) + bar(1), right = bar(10) + bar(8)
    bar = divisor_table(11, DivisorSumKind.SIGMA_BAR)
    assert pair.left == bar[11] + bar[5] + bar[1] == 12 + 6 + 1
    assert pair.right == bar[10] + bar[8] == 6 + 13


def test_balance_hexagonal_small():
    # even-index support <= 2 is {h_0 = 0}, odd-index is {h_1 = 1}
    assert balance_hexagonal(2) == BalancePair(n=2, left=1, right=1)


def test_balance_hexagonal_unconstrained_at_hexagonal_n():
    assert not balance_hexagonal(10).balanced


def test_balance_rejects_nonpositive():
    with pytest.raises(ValueError):
        balance_triangular(0)
    with pytest.raises(ValueError):
        balance_hexagonal(0)


def test_balance_with_tables_matches_trial_division():
    max_n = 400
    even = divisor_table(max_n, DivisorSumKind.SIGMA_EVEN)
    odd = divisor_table(max_n, DivisorSumKind.SIGMA_ODD)
    bar = divisor_table(max_n, DivisorSumKind.SIGMA_BAR)
    for n in range(1, max_n + 1):
        assert balance_triangular(n, even_table=even, odd_table=odd) == \
            balance_triangular(n)
        assert balance_hexagonal(n, bar_table=bar) == balance_hexagonal(n)


def test_tilde_formulation_equivalent_to_balance():
    # For n outside the triangular numbers the recurrence collapses to
    # "the tilde sums over n - t_k (k >= 0) vanish", which is the same
    # statement as the even/odd balance; check both computations agree.
    max_n = 10**4
    tilde = divisor_table(max_n, DivisorSumKind.SIGMA_TILDE)
    even = divisor_table(max_n, DivisorSumKind.SIGMA_EVEN)
    odd = divisor_table(max_n, DivisorSumKind.SIGMA_ODD)
    for n in range(1, max_n + 1):
        tilde_total = 0
        k = 0
        while triangular(k) <= n:
            m = n - triangular(k)
            if m >= 1:
                tilde_total += tilde[m]
            k += 1
        pair = balance_triangular(n, even_table=even, odd_table=odd)
        assert tilde_total == pair.right - pair.left
        if not is_triangular(n):
            assert tilde_total == 0
            assert pair.balanced


@given(st.integers(min_value=1, max_value=2000))
@settings(max_examples=200)
def test_balance_holds_off_support(n):
    if not is_triangular(n):
        assert balance_triangular(n).balanced
        # the triangular and hexagonal numbers coincide as sets
        assert balance_hexagonal(n).balanced
