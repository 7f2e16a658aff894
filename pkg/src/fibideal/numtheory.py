"""Fibonacci and Lucas numbers, divisor sums, and the short-interval
divisor profile a(n, k) computed with exact integer inequalities.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate
from math import isqrt
from typing import NamedTuple


class FibPair(NamedTuple):
    n: int
    fn: int
    fn1: int


def fib_pair(n: int) -> FibPair:
    """(f_n, f_{n+1}) by fast doubling, with f_0 = 0, f_1 = 1."""
    if n < 0:
        raise ValueError("fib_pair requires n >= 0")
    a, b = 0, 1
    for shift in range(n.bit_length() - 1, -1, -1):
        # (a, b) = (f_k, f_{k+1}) -> (f_2k, f_{2k+1})
        c = a * (2 * b - a)
        d = a * a + b * b
        if (n >> shift) & 1:
            a, b = d, c + d
        else:
            a, b = c, d
    return FibPair(n, a, b)


def fib(n: int) -> int:
    return fib_pair(n).fn


def lucas(n: int) -> int:
    """Lucas numbers l_0 = 2, l_1 = 1, l_n = l_{n-1} + l_{n-2}.

    Iterative on purpose: fib() uses fast doubling, so identities between
    the two sequences are checked across genuinely different code paths.
    """
    if n < 0:
        raise ValueError("lucas requires n >= 0")
    a, b = 2, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending, by trial division."""
    if n < 1:
        raise ValueError("divisors requires n >= 1")
    small = []
    large = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def sigma(n: int) -> int:
    """Sum of the positive divisors of n."""
    return sum(divisors(n))


def divisor_in_window(n: int, k: int, d: int) -> bool:
    """Whether d lies in ((k + sqrt(k^2 + 2n))/2, k + sqrt(k^2 + 2n)].

    Stated as the equivalent pair of exact integer inequalities
    2d(d - k) > n and d(d - 2k) <= 2n, valid for all k >= 0, d >= 1,
    n >= 1 including the perfect-square boundary cases.
    """
    return 2 * d * (d - k) > n and d * (d - 2 * k) <= 2 * n


@dataclass(frozen=True)
class DivisorProfile:
    """Counts a(n, k) of divisors of n in the window above, k = 0..n-1."""

    n: int
    a: tuple[int, ...]

    def sigma_sum(self) -> int:
        """a(n,0) + 2 * sum_{k>=1} a(n,k); equals sigma(n)."""
        return self.a[0] + 2 * sum(self.a[1:])


def divisor_profile(n: int) -> DivisorProfile:
    """Profile of all a(n, k) for k in [0, n-1].

    Each divisor d passes divisor_in_window(n, k, d) exactly for k in one
    contiguous range, so the profile is accumulated per divisor:
      2d(d - k) > n   <=>  k <= (2d^2 - n - 1) // (2d)
      d(d - 2k) <= 2n <=>  k >= ceil((d^2 - 2n) / (2d))
    The upper end never exceeds n - 1 for d | n.
    """
    if n < 1:
        raise ValueError("divisor_profile requires n >= 1")
    diff = [0] * (n + 1)
    for d in divisors(n):
        k_hi = (2 * d * d - n - 1) // (2 * d)
        if k_hi < 0:
            continue
        k_lo = -((2 * n - d * d) // (2 * d))
        if k_lo < 0:
            k_lo = 0
        diff[k_lo] += 1
        diff[k_hi + 1] -= 1
    return DivisorProfile(n, tuple(accumulate(diff[:n])))


def window_bounds_check(n: int, k: int, d: int, precision: int = 50) -> bool:
    """High-precision oracle for the irrational-interval membership test.

    Evaluates (k + sqrt(k^2 + 2n))/2 < d <= k + sqrt(k^2 + 2n) with Decimal
    arithmetic, falling back to exact integer comparisons when k^2 + 2n is
    a perfect square.  Independent of divisor_in_window; exists so the
    integer inequalities can be validated against the stated bounds.
    """
    from decimal import Decimal, localcontext

    m = k * k + 2 * n
    s = isqrt(m)
    if s * s == m:
        return 2 * d - k > s and d - k <= s
    with localcontext() as ctx:
        ctx.prec = precision
        root = Decimal(m).sqrt()
        return 2 * d - k > root and d - k <= root
