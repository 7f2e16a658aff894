"""Ideal-count polynomials for the two-variable Laurent ring, the lambda
sequence by three independent methods, and exact checks of the identities
tying them together.

The polynomial for codimension n is defined here by its divisor-profile
expansion; every other property (self-reciprocity, the sigma limit, the
lattice-point specializations, the golden-ratio evaluation) is verified
against that definition rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .numtheory import divisor_profile, fib, lucas, sigma
from .rings import ALPHA, IMAG, LaurentPoly, Q, Q_INV, alpha_pow
from .series import lambda_product_series, symbolic_cn_product_series


class ConsistencyError(RuntimeError):
    """An identity that must hold exactly in exact arithmetic failed."""


@dataclass(frozen=True)
class IdentityCheck:
    """Outcome of one exact identity check, with both sides as witnesses."""

    identity: str
    n: int
    ok: bool
    left: str
    right: str

    def to_dict(self) -> dict:
        return {"identity": self.identity, "n": self.n, "ok": self.ok,
                "left": self.left, "right": self.right}


@dataclass(frozen=True)
class CnPolynomial:
    """Ideal-count polynomial of codimension n: ordinary, degree 2n."""

    n: int
    poly: LaurentPoly


@dataclass(frozen=True)
class LambdaResult:
    n: int
    value: int
    method: str


def cn_poly(n: int) -> CnPolynomial:
    """Expand q^n * (q + 1/q - 2) * (a(n,0) + sum_k a(n,k) (q^k + q^-k))."""
    if n < 1:
        raise ValueError("cn_poly requires n >= 1")
    a = divisor_profile(n).a
    window: dict[int, int] = {0: a[0]}
    for k in range(1, n):
        if a[k]:
            window[k] = a[k]
            window[-k] = a[k]
    double_root = Q + Q_INV - 2
    return CnPolynomial(n, (double_root * LaurentPoly(window)).shift(n))


def lambda_divisor(n: int) -> LambdaResult:
    """lambda_n = a(n,0) + sum_{k=1}^{n-1} a(n,k) * l_{2k}."""
    a = divisor_profile(n).a
    value = a[0] + sum(a[k] * lucas(2 * k) for k in range(1, n) if a[k])
    return LambdaResult(n, value, "divisor")


def lambda_product(max_n: int) -> list[LambdaResult]:
    """lambda_1 .. lambda_max_n read off the truncated infinite product."""
    series = lambda_product_series(max_n)
    return [LambdaResult(n, series.coefficient(n), "product")
            for n in range(1, max_n + 1)]


def lambda_eval(n: int) -> LambdaResult:
    """lambda_n as the codimension-n polynomial evaluated at alpha, divided
    by alpha^n.

    The quotient is a rational integer whenever C_n(alpha) = lambda_n *
    alpha^n holds, so a nonzero phi-component is not a user error: it
    raises ConsistencyError.
    """
    value = cn_poly(n).poly.eval_at(ALPHA) * alpha_pow(-n)
    if value.b != 0:
        raise ConsistencyError(
            f"evaluation at alpha for n={n} is {value}, not a rational integer")
    return LambdaResult(n, value.a, "eval")


def theorem_sides(n: int) -> tuple:
    """Both sides of the main identity, as exact Z[phi] values:
    C_n(alpha) and lambda_n * (f_{2n} * alpha - f_{2n-2})."""
    left = cn_poly(n).poly.eval_at(ALPHA)
    right = lambda_divisor(n).value * (fib(2 * n) * ALPHA - fib(2 * n - 2))
    return left, right


def verify_theorem(n: int) -> IdentityCheck:
    left, right = theorem_sides(n)
    return IdentityCheck("theorem", n, left == right, str(left), str(right))


def lattice_count(n: int, b: int) -> int:
    """#{(x, y) in Z^2 : x^2 + b*y^2 = n} by exhaustive enumeration.

    Deliberately brute force; this is the oracle the polynomial
    specializations are checked against.
    """
    if n < 1:
        raise ValueError("lattice_count requires n >= 1")
    if b not in (1, 2):
        raise ValueError("lattice_count supports b in {1, 2}")
    x_max = isqrt(n)
    y_max = isqrt(n // b)
    return sum(1
               for x in range(-x_max, x_max + 1)
               for y in range(-y_max, y_max + 1)
               if x * x + b * y * y == n)


_DOUBLE_ROOT_AT_ONE = (Q - 1) * (Q - 1)


def verify_lattice(n: int) -> list[IdentityCheck]:
    """Lattice-point specializations of the codimension-n polynomial:
    the value at -1 counts x^2 + y^2 = n, and the Gaussian norm of the
    value at i equals the squared count of x^2 + 2y^2 = n (squaring both
    sides keeps the comparison in exact integers)."""
    poly = cn_poly(n).poly
    at_minus_one = poly.eval_at(-1)
    count1 = lattice_count(n, 1)
    gauss_norm = poly.eval_at(IMAG).norm()
    count2_sq = lattice_count(n, 2) ** 2
    return [
        IdentityCheck("lattice_minus_one", n, at_minus_one == count1,
                      str(at_minus_one), str(count1)),
        IdentityCheck("lattice_gauss_norm", n, gauss_norm == count2_sq,
                      str(gauss_norm), str(count2_sq)),
    ]


def verify_sigma(n: int) -> list[IdentityCheck]:
    """The sigma(n) limit, checked two independent ways: the divisor
    profile must sum to sigma(n), and the exact quotient of the polynomial
    by (q - 1)^2 must evaluate to sigma(n) at q = 1."""
    s = sigma(n)
    profile_sum = divisor_profile(n).sigma_sum()
    checks = [IdentityCheck("sigma_profile", n, profile_sum == s,
                            str(profile_sum), str(s))]
    quot, rem = cn_poly(n).poly.divmod_by(_DOUBLE_ROOT_AT_ONE)
    if rem:
        checks.append(IdentityCheck("sigma_division", n, False,
                                    f"nonzero remainder {rem}", str(s)))
    else:
        at_one = quot.eval_at(1)
        checks.append(IdentityCheck("sigma_division", n, at_one == s,
                                    str(at_one), str(s)))
    return checks


def verify_specializations(n: int) -> list[IdentityCheck]:
    """All number-theoretic specializations for one n: the two lattice
    checks followed by the two sigma checks."""
    return verify_lattice(n) + verify_sigma(n)


def verify_shape(n: int) -> list[IdentityCheck]:
    """Structural facts about the codimension-n polynomial: degree 2n and
    self-reciprocal, a double root at q = 1, nonnegative lambda_n, and
    leading window count 1."""
    a = divisor_profile(n).a
    poly = cn_poly(n).poly
    degree = poly.max_exponent() if poly else 0
    palindrome = degree == 2 * n and poly.is_self_reciprocal(2 * n)
    at_one = poly.eval_at(1)
    slope_at_one = poly.derivative().eval_at(1)
    lam = lambda_divisor(n).value
    return [
        IdentityCheck("shape_self_reciprocal", n, palindrome,
                      f"degree {degree}, palindrome {palindrome}",
                      f"degree {2 * n}, palindrome True"),
        IdentityCheck("shape_double_root", n,
                      at_one == 0 and slope_at_one == 0,
                      f"value {at_one}, derivative {slope_at_one}",
                      "value 0, derivative 0"),
        IdentityCheck("shape_lambda_nonneg", n, lam >= 0, str(lam), ">= 0"),
        IdentityCheck("shape_leading_count", n, a[n - 1] == 1,
                      str(a[n - 1]), "1"),
    ]


def verify_gf_identity(max_n: int) -> list[IdentityCheck]:
    """Coefficient-by-coefficient check, with q symbolic, that the product
    series equals 1 + sum_n C_n(q) / q^n."""
    series = symbolic_cn_product_series(max_n)
    one = LaurentPoly.const(1)
    c0 = series.coefficient(0)
    checks = [IdentityCheck("gf", 0, c0 == one, str(c0), str(one))]
    for n in range(1, max_n + 1):
        got = series.coefficient(n)
        expected = cn_poly(n).poly.shift(-n)
        checks.append(IdentityCheck("gf", n, got == expected,
                                    str(got), str(expected)))
    return checks
