from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mertenslab import (
    CapacityError,
    MobiusTable,
    OpenInterval,
    floor_log,
    half_odd,
    largest_prime_factor,
    mertens,
    mertens_coprime,
    mertens_interval,
    mertens_multiples,
    mobius_of,
    primes_below,
    smallest_prime_factor,
)
from .oracles import (
    naive_factor_exponents,
    naive_mertens,
    naive_mertens_interval,
    naive_mu,
    naive_primes_below,
)

F = Fraction


def test_primes_below_examples():
    assert primes_below(F("10.5")) == [2, 3, 5, 7]
    assert primes_below(2) == []
    assert primes_below(F("30.5")) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert len(primes_below(F("30.5"))) == 10


def test_primes_below_matches_naive():
    for two_x in range(5, 201, 7):
        x = F(two_x, 2)
        assert primes_below(x) == naive_primes_below(x)
    assert primes_below(97) == naive_primes_below(F(97))  # integer endpoint is exclusive


def test_mobius_table_first_decade():
    t = MobiusTable.upto(10)
    assert [t.mu(n) for n in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]
    assert [t.spf(n) for n in range(2, 11)] == [2, 3, 2, 5, 2, 7, 2, 3, 2]
    assert t.mu(4) == 0
    assert t.mu(1) == 1 and t.spf(1) == 0


@pytest.mark.parametrize("segment", [1, 2, 7, 64])
def test_segmentation_does_not_change_results(segment):
    base = MobiusTable.sieve(1, 300)
    seg = MobiusTable.sieve(1, 300, segment_size=segment)
    assert seg.mu_values() == base.mu_values()
    assert seg.spf_values() == base.spf_values()


@settings(max_examples=40, deadline=None)
@given(lo=st.integers(min_value=1, max_value=5000), width=st.integers(min_value=0, max_value=120))
def test_windowed_sieve_matches_naive_factorization(lo, width):
    t = MobiusTable.sieve(lo, lo + width, segment_size=64)
    for n in range(lo, lo + width + 1):
        assert t.mu(n) == naive_mu(n)
        if n >= 2:
            assert t.spf(n) == min(p for p, _ in naive_factor_exponents(n))


def test_mertens_examples(table_10k):
    assert mertens(F(1)) == 1
    assert mertens(F("10.5"), table_10k) == -1
    assert mertens(F("100.5"), table_10k) == naive_mertens(100) == 1


def test_mertens_interval_examples(table_10k):
    assert mertens_interval(OpenInterval(F(0), F("10.5")), table_10k) == -1
    assert mertens_interval(OpenInterval(F("3.5"), F("3.6")), table_10k) == 0
    assert mertens_interval(OpenInterval(F("2.5"), F("6.5")), table_10k) == -1


def test_mertens_coprime_examples(table_10k):
    assert mertens_coprime(OpenInterval(F(0), F("10.5")), 7, table_10k) == 0
    assert mertens_coprime(OpenInterval(F("6.5"), F("7.5")), 7, table_10k) == 0
    # enumerated independently: integers 1..23 skipping multiples of 5
    direct = naive_mertens_interval(F(0), F("23.5"), skip_multiples_of=5)
    assert direct == -3
    assert mertens_coprime(OpenInterval(F(0), F("23.5")), 5, table_10k) == direct


def test_mertens_multiples_examples(table_10k):
    iv = OpenInterval(F(0), F("10.5"))
    assert mertens_multiples(iv, 7, table=table_10k) == -1
    assert mertens_multiples(iv, 7, largest_factor_below=F("10.5"), table=table_10k) == -1
    assert mertens_multiples(iv, 11, table=table_10k) == 0  # no multiples below 10.5


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11])
@pytest.mark.parametrize("two_x", [21, 35, 61])
def test_divisibility_partition(two_x, p, table_10k):
    iv = OpenInterval(F(0), F(two_x, 2))
    both = mertens_coprime(iv, p, table_10k) + mertens_multiples(iv, p, table=table_10k)
    assert both == mertens_interval(iv, table_10k)


@pytest.mark.parametrize("p", [2, 3, 5, 7, 13])
@pytest.mark.parametrize("two_x", [21, 47, 201])
def test_sign_relation_minus_holds(two_x, p, table_10k):
    # mu(p*b) = -mu(b) for p not dividing b forces the minus sign here
    x = F(two_x, 2)
    lhs = mertens(x, table_10k)
    rhs = mertens_coprime(OpenInterval(F(0), x), p, table_10k) - mertens_coprime(
        OpenInterval(F(0), x / p), p, table_10k
    )
    assert lhs == rhs


def test_sign_relation_plus_variant_is_false(table_10k):
    # the additive variant fails already at x = 10.5, p = 7: 0 + 1 != -1
    x = F("10.5")
    a = mertens_coprime(OpenInterval(F(0), x), 7, table_10k)
    b = mertens_coprime(OpenInterval(F(0), x / 7), 7, table_10k)
    assert (a, b) == (0, 1)
    assert a + b != mertens(x, table_10k)
    assert a - b == mertens(x, table_10k)


@pytest.mark.parametrize("p,n,i", [(7, 1, 3), (7, 2, 6), (5, 1, 2), (3, 2, 1), (11, 1, 10)])
def test_multiples_rescale_to_coprime_sums(p, n, i, table_10k):
    # sum over multiples of p in (x/n, x/(n - i/p)) equals minus the
    # p-coprime sum over the p-fold shrunk interval (x/(np), x/(np - i))
    x = F("47.5")
    outer = OpenInterval(x / n, x / (n - F(i, p)))
    inner = OpenInterval(x / (n * p), x / (n * p - i))
    lhs = mertens_multiples(outer, p, table=table_10k)
    rhs = -mertens_coprime(inner, p, table_10k)
    assert lhs == rhs


def test_coprime_open_interval_endpoints(table_10k):
    # integer endpoints are excluded on both sides
    assert mertens_coprime(OpenInterval(F(7), F(8)), 3, table_10k) == 0
    assert mertens_coprime(OpenInterval(F(6), F(8)), 3, table_10k) == -1  # just mu(7)


def test_floor_log_examples():
    assert floor_log(7, F("10.5")) == 1
    assert floor_log(2, F("10.5")) == 3
    assert floor_log(3, F("10.5")) == 2
    assert floor_log(3, F("5.5")) == 1
    assert floor_log(5, F("4.5")) == 0
    with pytest.raises(ValueError):
        floor_log(1, F("10.5"))
    with pytest.raises(ValueError):
        floor_log(2, F(1, 2))


def test_factor_helpers():
    assert largest_prime_factor(30) == 5
    assert largest_prime_factor(7) == 7
    assert largest_prime_factor(78) == 13
    assert smallest_prime_factor(78) == 2
    for bad in (0, 1):
        with pytest.raises(ValueError):
            largest_prime_factor(bad)
    assert mobius_of(1) == 1
    assert mobius_of(4) == 0
    assert mobius_of(30) == -1


def test_sieve_caps_and_window_errors():
    with pytest.raises(CapacityError):
        MobiusTable.sieve(1, 1000, cap=100)
    t = MobiusTable.sieve(10, 20)
    with pytest.raises(CapacityError):
        t.mu(9)
    with pytest.raises(ValueError):
        t.mertens_upto(15)  # prefix sums need lo == 1
    with pytest.raises(ValueError):
        MobiusTable.sieve(5, 3)
    with pytest.raises(CapacityError):
        mertens(F("10.5"), MobiusTable.upto(5))


def test_mertens_requires_positive_argument():
    with pytest.raises(ValueError):
        mertens(F(0))


def test_half_odd_grid_agrees_with_naive(table_10k):
    for n in range(1, 60):
        x = half_odd(n)
        assert mertens(x, table_10k) == naive_mertens(n)
