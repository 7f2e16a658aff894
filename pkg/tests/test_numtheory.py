"""Fibonacci/Lucas sequences, divisor enumeration, and the divisor window."""

import random

import pytest

from fibideal.numtheory import (
    DivisorProfile,
    divisor_in_window,
    divisor_profile,
    divisors,
    fib,
    fib_pair,
    lucas,
    sigma,
    window_bounds_check,
)

FIB = [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144]
LUCAS = [2, 1, 3, 4, 7, 11, 18, 29, 47, 76, 123, 199, 322]


def test_fib_small():
    assert [fib(n) for n in range(len(FIB))] == FIB


def test_fib_pair_is_consistent():
    for n in range(200):
        pair = fib_pair(n)
        assert pair.n == n
        assert pair.fn == fib(n)
        assert pair.fn1 == fib(n + 1)


def test_fib_against_iterative_oracle():
    a, b = 0, 1
    for n in range(1000):
        assert fib(n) == a
        a, b = b, a + b


def test_fib_cassini():
    """f(n-1)*f(n+1) - f(n)^2 alternates between +1 and -1."""
    for n in range(1, 500):
        assert fib(n - 1) * fib(n + 1) - fib(n) ** 2 == (-1) ** n


def test_fib_is_fast_for_large_index():
    value = fib(3000)
    assert len(str(value)) == 627
    assert value % fib(1500) == 0  # f_m | f_{mk}


def test_lucas_small():
    assert [lucas(n) for n in range(len(LUCAS))] == LUCAS


def test_lucas_from_fib():
    assert lucas(0) == 2
    for n in range(1, 200):
        assert lucas(n) == fib(n - 1) + fib(n + 1)


def test_sequences_reject_negative_indices():
    with pytest.raises(ValueError):
        fib(-1)
    with pytest.raises(ValueError):
        lucas(-3)


def test_divisors_examples():
    assert divisors(1) == [1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(49) == [1, 7, 49]
    assert divisors(97) == [1, 97]
    with pytest.raises(ValueError):
        divisors(0)


def test_divisors_random_against_filter():
    rng = random.Random(1234)
    for _ in range(50):
        n = rng.randint(1, 3000)
        assert divisors(n) == [d for d in range(1, n + 1) if n % d == 0]


def test_sigma_examples():
    assert sigma(1) == 1
    assert sigma(6) == 12
    assert sigma(12) == 28
    assert sigma(100) == 217


def test_window_examples():
    # n=6, k=0: the window is (sqrt(6/... ) roughly (1.73, 3.46].
    assert not divisor_in_window(6, 0, 1)
    assert divisor_in_window(6, 0, 2)
    assert divisor_in_window(6, 0, 3)
    assert not divisor_in_window(6, 0, 6)
    # Perfect-square boundary: for n=4, k=1 the interval is (2, 3], open
    # at the integer endpoint 2, so d=2 must be excluded.
    assert not divisor_in_window(4, 1, 2)
    assert divisor_in_window(4, 0, 2)


def test_window_matches_high_precision_bounds():
    for n in range(1, 121):
        for d in divisors(n):
            for k in range(n):
                assert divisor_in_window(n, k, d) == \
                    window_bounds_check(n, k, d), (n, k, d)


def test_profile_examples():
    assert divisor_profile(1).a == (1,)
    assert divisor_profile(2).a == (1, 1)
    assert divisor_profile(3).a == (0, 1, 1)
    assert divisor_profile(4).a == (1, 1, 1, 1)
    assert divisor_profile(5).a == (0, 0, 1, 1, 1)
    assert divisor_profile(6).a == (2, 1, 1, 1, 1, 1)
    assert divisor_profile(12).a == (2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1)
    with pytest.raises(ValueError):
        divisor_profile(0)


def test_profile_matches_direct_window_count():
    for n in range(1, 301):
        profile = divisor_profile(n)
        assert profile.n == n
        assert len(profile.a) == n
        direct = [sum(1 for d in divisors(n) if divisor_in_window(n, k, d))
                  for k in range(n)]
        assert list(profile.a) == direct


def test_profile_sigma_sum():
    assert DivisorProfile(2, (1, 1)).sigma_sum() == 3
    for n in range(1, 501):
        assert divisor_profile(n).sigma_sum() == sigma(n)


def test_profile_leading_entry_is_one():
    # The last window (k = n-1) contains the divisor n and nothing else.
    for n in range(1, 2001):
        assert divisor_profile(n).a[n - 1] == 1
