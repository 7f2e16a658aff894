"""Truncated formal power series in t over a pluggable coefficient ring,
plus the specific product constructions this package verifies.

A series of order N is computed mod t^(N+1).  Infinite products are cut at
m = N: the m-th factor contributes nothing below t^(N+1) beyond its constant
term, so the truncation is exact, not an approximation.
"""

from __future__ import annotations

from typing import Any, Iterable

from .rings import LAURENT, Q, Ring, ZZ, invert_element


class TruncSeries:
    """Immutable truncated power series; coeffs[k] is the t^k coefficient."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: Ring, coeffs: Iterable[Any]) -> None:
        cs = tuple(coeffs)
        if not cs:
            raise ValueError("a series needs at least the constant term")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError("TruncSeries is immutable")

    @classmethod
    def constant(cls, ring: Ring, value: Any, order: int) -> TruncSeries:
        return cls(ring, [value] + [ring.zero] * order)

    @classmethod
    def one(cls, ring: Ring, order: int) -> TruncSeries:
        return cls.constant(ring, ring.one, order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> Any:
        return self.coeffs[k]

    def __repr__(self) -> str:
        return f"TruncSeries({self.ring.name}, {list(self.coeffs)!r})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self) -> int:
        return hash((TruncSeries, self.coeffs))

    def _common_order(self, other: TruncSeries) -> int:
        return min(self.order, other.order)

    def __add__(self, other: TruncSeries) -> TruncSeries:
        n = self._common_order(other)
        return TruncSeries(self.ring,
                           [a + b for a, b in zip(self.coeffs[:n + 1], other.coeffs)])

    def __sub__(self, other: TruncSeries) -> TruncSeries:
        n = self._common_order(other)
        return TruncSeries(self.ring,
                           [a - b for a, b in zip(self.coeffs[:n + 1], other.coeffs)])

    def __neg__(self) -> TruncSeries:
        return TruncSeries(self.ring, [-c for c in self.coeffs])

    def __mul__(self, other: TruncSeries) -> TruncSeries:
        n = self._common_order(other)
        zero = self.ring.zero
        out = [zero] * (n + 1)
        for i, a in enumerate(self.coeffs[:n + 1]):
            if not a:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return TruncSeries(self.ring, out)

    def inverse(self) -> TruncSeries:
        """Multiplicative inverse mod t^(order+1).

        Requires a unit constant term; raises NotInvertibleError otherwise.
        """
        inv0 = invert_element(self.coeffs[0])
        zero = self.ring.zero
        out = [inv0] + [zero] * self.order
        for j in range(1, self.order + 1):
            s = zero
            for k in range(1, j + 1):
                a = self.coeffs[k]
                if a and out[j - k]:
                    s = s + a * out[j - k]
            if s:
                out[j] = -(inv0 * s)
        return TruncSeries(self.ring, out)

    def substitute_power(self, m: int) -> TruncSeries:
        """t -> t^m, truncated at this series' own order."""
        if m < 1:
            raise ValueError("substitute_power requires m >= 1")
        if m == 1:
            return self
        zero = self.ring.zero
        out = [zero] * (self.order + 1)
        for i, c in enumerate(self.coeffs):
            if i * m > self.order:
                break
            out[i * m] = c
        return TruncSeries(self.ring, out)


def f_series(order: int) -> TruncSeries:
    """Generating function of the even-indexed Fibonacci numbers,
    t / (1 - 3t + t^2), truncated: coefficients 0, f_2, f_4, f_6, ...
    """
    if order < 0:
        raise ValueError("f_series requires order >= 0")
    cs = [0] * (order + 1)
    if order >= 1:
        cs[1] = 1
    for k in range(2, order + 1):
        cs[k] = 3 * cs[k - 1] - cs[k - 2]
    return TruncSeries(ZZ, cs)


def lambda_product_series(order: int) -> TruncSeries:
    """prod_{m=1}^{order} (1 + F(t^m)) mod t^(order+1); the t^n coefficient
    is the nonnegative integer lambda_n."""
    if order < 1:
        raise ValueError("lambda_product_series requires order >= 1")
    one = TruncSeries.one(ZZ, order)
    f = f_series(order)
    acc = one
    for m in range(1, order + 1):
        acc = acc * (one + f.substitute_power(m))
    return acc


def cn_product_series(order: int, ring: Ring, qval: Any) -> TruncSeries:
    """prod_{m=1}^{order} (1 - t^m)^2 / (1 - (q + 1/q) t^m + t^(2m)),
    evaluated at q = qval, truncated at the given order.

    The t^n coefficient equals the ideal-count polynomial for codimension n
    divided by q^n, specialized at qval.  qval must be a unit of the ring.
    Each factor is the m-th power substitution of a single base factor in u:
    (1 - u)^2 * inverse(1 - s*u + u^2) with s = qval + 1/qval.
    """
    if order < 1:
        raise ValueError("cn_product_series requires order >= 1")
    s = qval + invert_element(qval)
    zero, one = ring.zero, ring.one

    def poly(*lead: Any) -> TruncSeries:
        cs = list(lead[:order + 1]) + [zero] * (order + 1 - len(lead))
        return TruncSeries(ring, cs)

    numer = poly(one, -(one + one), one)          # (1 - u)^2
    denom = poly(one, -s, one)                    # 1 - s*u + u^2
    base = numer * denom.inverse()
    acc = TruncSeries.one(ring, order)
    for m in range(1, order + 1):
        acc = acc * base.substitute_power(m)
    return acc


def symbolic_cn_product_series(order: int) -> TruncSeries:
    """cn_product_series over Z[q, 1/q] with q left symbolic."""
    return cn_product_series(order, LAURENT, Q)
