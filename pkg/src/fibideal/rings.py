"""Exact value-semantic arithmetic for the coefficient rings.

Plain ``int`` serves as the arbitrary-precision integer ring.  On top of it
this module provides Z[phi] (phi^2 = phi + 1), the Gaussian integers Z[i],
and Laurent polynomials in one indeterminate q with integer coefficients.
All values are immutable; all operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Union


class NotInvertibleError(ArithmeticError):
    """The element has no multiplicative inverse in its ring."""


class QuadInt:
    """Element a + b*phi of Z[phi], reduced by phi^2 = phi + 1.

    The unit alpha = 1 + phi represents (3 + sqrt(5))/2 exactly; no
    floating-point image of phi exists anywhere in this package.
    """

    __slots__ = ("a", "b")

    def __init__(self, a: int, b: int) -> None:
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError("QuadInt is immutable")

    def __repr__(self) -> str:
        return f"QuadInt({self.a}, {self.b})"

    def __str__(self) -> str:
        return f"{self.a}{self.b:+}*phi"

    def __hash__(self) -> int:
        return hash((QuadInt, self.a, self.b))

    def __bool__(self) -> bool:
        return bool(self.a or self.b)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.a == other and self.b == 0
        if isinstance(other, QuadInt):
            return self.a == other.a and self.b == other.b
        return NotImplemented

    def __add__(self, other: Union[int, QuadInt]) -> QuadInt:
        if isinstance(other, int):
            return QuadInt(self.a + other, self.b)
        if isinstance(other, QuadInt):
            return QuadInt(self.a + other.a, self.b + other.b)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other: Union[int, QuadInt]) -> QuadInt:
        return self + (-other)

    def __rsub__(self, other: Union[int, QuadInt]) -> QuadInt:
        return (-self) + other

    def __neg__(self) -> QuadInt:
        return QuadInt(-self.a, -self.b)

    def __mul__(self, other: Union[int, QuadInt]) -> QuadInt:
        if isinstance(other, int):
            return QuadInt(self.a * other, self.b * other)
        if isinstance(other, QuadInt):
            # (a + b*phi)(c + d*phi) = ac + bd + (ad + bc + bd)*phi
            bd = self.b * other.b
            return QuadInt(self.a * other.a + bd,
                           self.a * other.b + self.b * other.a + bd)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int) -> QuadInt:
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadInt(1, 0)
        base = self
        while n > 0:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> QuadInt:
        """Image under phi -> 1 - phi."""
        return QuadInt(self.a + self.b, -self.b)

    def norm(self) -> int:
        """N(a + b*phi) = a^2 + ab - b^2; multiplicative."""
        return self.a * self.a + self.a * self.b - self.b * self.b

    def inverse(self) -> QuadInt:
        n = self.norm()
        if n == 1:
            return self.conjugate()
        if n == -1:
            return -self.conjugate()
        raise NotInvertibleError(f"{self!r} has norm {n}, not a unit of Z[phi]")


PHI = QuadInt(0, 1)
ALPHA = QuadInt(1, 1)
ALPHA_INV = QuadInt(2, -1)


def alpha_pow(n: int) -> QuadInt:
    """Exact alpha^n for any integer n (alpha is a unit, so n may be negative)."""
    return ALPHA ** n


class GaussInt:
    """Gaussian integer re + im*i with i^2 = -1."""

    __slots__ = ("re", "im")

    def __init__(self, re: int, im: int) -> None:
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError("GaussInt is immutable")

    def __repr__(self) -> str:
        return f"GaussInt({self.re}, {self.im})"

    def __str__(self) -> str:
        return f"{self.re}{self.im:+}*i"

    def __hash__(self) -> int:
        return hash((GaussInt, self.re, self.im))

    def __bool__(self) -> bool:
        return bool(self.re or self.im)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.re == other and self.im == 0
        if isinstance(other, GaussInt):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __add__(self, other: Union[int, GaussInt]) -> GaussInt:
        if isinstance(other, int):
            return GaussInt(self.re + other, self.im)
        if isinstance(other, GaussInt):
            return GaussInt(self.re + other.re, self.im + other.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other: Union[int, GaussInt]) -> GaussInt:
        return self + (-other)

    def __rsub__(self, other: Union[int, GaussInt]) -> GaussInt:
        return (-self) + other

    def __neg__(self) -> GaussInt:
        return GaussInt(-self.re, -self.im)

    def __mul__(self, other: Union[int, GaussInt]) -> GaussInt:
        if isinstance(other, int):
            return GaussInt(self.re * other, self.im * other)
        if isinstance(other, GaussInt):
            return GaussInt(self.re * other.re - self.im * other.im,
                            self.re * other.im + self.im * other.re)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int) -> GaussInt:
        if n < 0:
            return self.inverse() ** (-n)
        result = GaussInt(1, 0)
        base = self
        while n > 0:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> GaussInt:
        return GaussInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> GaussInt:
        if self.norm() == 1:
            return self.conjugate()
        raise NotInvertibleError(f"{self!r} is not a unit of Z[i]")


IMAG = GaussInt(0, 1)


class LaurentPoly:
    """Laurent polynomial in q: a finite map exponent -> nonzero integer.

    Canonical form never stores a zero coefficient, so equality is plain
    map equality.  Negative exponents are allowed everywhere except where
    an operation states otherwise.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: dict[int, int] | None = None) -> None:
        clean = {e: c for e, c in (coeffs or {}).items() if c != 0}
        object.__setattr__(self, "_coeffs", clean)

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def term(cls, c: int, e: int) -> LaurentPoly:
        return cls({e: c})

    def coefficient(self, e: int) -> int:
        return self._coeffs.get(e, 0)

    def support(self) -> list[int]:
        """Exponents with nonzero coefficient, ascending."""
        return sorted(self._coeffs)

    def items(self) -> list[tuple[int, int]]:
        """(exponent, coefficient) pairs, ascending by exponent."""
        return sorted(self._coeffs.items())

    def min_exponent(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no support")
        return min(self._coeffs)

    def max_exponent(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no support")
        return max(self._coeffs)

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(self.items())!r})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for e, c in sorted(self._coeffs.items(), reverse=True):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __hash__(self) -> int:
        return hash((LaurentPoly, tuple(sorted(self._coeffs.items()))))

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self._coeffs == ({0: other} if other else {})
        if isinstance(other, LaurentPoly):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __add__(self, other: Union[int, LaurentPoly]) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly(out)

    __radd__ = __add__

    def __sub__(self, other: Union[int, LaurentPoly]) -> LaurentPoly:
        return self + (-other)

    def __rsub__(self, other: Union[int, LaurentPoly]) -> LaurentPoly:
        return (-self) + other

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __mul__(self, other: Union[int, LaurentPoly]) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._coeffs.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self._coeffs or not other._coeffs:
            return LaurentPoly()
        out: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            return self.inverse() ** (-n)
        result = LaurentPoly.const(1)
        base = self
        while n > 0:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by q^k."""
        return LaurentPoly({e + k: c for e, c in self._coeffs.items()})

    def inverse(self) -> LaurentPoly:
        """Inverse of a unit, i.e. of a single term with coefficient +-1."""
        if len(self._coeffs) == 1:
            ((e, c),) = self._coeffs.items()
            if c in (1, -1):
                return LaurentPoly({-e: c})
        raise NotInvertibleError(f"{self!r} is not a unit of Z[q, 1/q]")

    def derivative(self) -> LaurentPoly:
        return LaurentPoly({e - 1: e * c for e, c in self._coeffs.items() if e != 0})

    def eval_at(self, x: Any) -> Any:
        """Evaluate at a ring element; a ring homomorphism.

        Raises NotInvertibleError when the polynomial has negative exponents
        and x is not a unit, since such a specialization is undefined.
        """
        ring = ring_of(x)
        if not self._coeffs:
            return ring.zero
        exps = sorted(self._coeffs, reverse=True)
        acc = self._coeffs[exps[0]] * ring.one
        for prev, e in zip(exps, exps[1:]):
            acc = acc * elem_pow(x, prev - e) + self._coeffs[e]
        return acc * elem_pow(x, exps[-1])

    def is_self_reciprocal(self, degree: int) -> bool:
        """True iff coefficient(k) == coefficient(degree - k) for all k.

        Requires an ordinary polynomial (no negative exponents).
        """
        if self._coeffs and self.min_exponent() < 0:
            raise ValueError("self-reciprocity is defined for ordinary polynomials")
        if self._coeffs and self.max_exponent() > degree:
            return False
        return all(self.coefficient(k) == self.coefficient(degree - k)
                   for k in range(degree + 1))

    def divmod_by(self, divisor: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
        """Long division of ordinary polynomials over Z.

        Every quotient step must divide exactly by the leading coefficient
        of the divisor (always true for a monic divisor); otherwise raises
        ValueError.
        """
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        for p in (self, divisor):
            if p and p.min_exponent() < 0:
                raise ValueError("divmod_by is defined for ordinary polynomials")
        lead_e = divisor.max_exponent()
        lead_c = divisor.coefficient(lead_e)
        rem = dict(self._coeffs)
        quot: dict[int, int] = {}
        while rem and max(rem) >= lead_e:
            e = max(rem)
            c, r = divmod(rem[e], lead_c)
            if r:
                raise ValueError(f"coefficient {rem[e]} not divisible by {lead_c}")
            quot[e - lead_e] = c
            for de, dc in divisor._coeffs.items():
                ee = e - lead_e + de
                s = rem.get(ee, 0) - c * dc
                if s:
                    rem[ee] = s
                else:
                    rem.pop(ee, None)
        return LaurentPoly(quot), LaurentPoly(rem)


Q = LaurentPoly.term(1, 1)
Q_INV = LaurentPoly.term(1, -1)


@dataclass(frozen=True)
class Ring:
    """Descriptor for a commutative coefficient ring.

    Elements carry their own +, -, * and ==; the descriptor contributes the
    constants and unit inversion that cannot be duck-typed.
    """

    name: str
    zero: Any
    one: Any

    def invert(self, x: Any) -> Any:
        return invert_element(x)


ZZ = Ring("Z", 0, 1)
ZPHI = Ring("Z[phi]", QuadInt(0, 0), QuadInt(1, 0))
ZI = Ring("Z[i]", GaussInt(0, 0), GaussInt(1, 0))
LAURENT = Ring("Z[q,1/q]", LaurentPoly(), LaurentPoly.const(1))


def ring_of(x: Any) -> Ring:
    """The Ring descriptor an element belongs to."""
    if isinstance(x, int):
        return ZZ
    if isinstance(x, QuadInt):
        return ZPHI
    if isinstance(x, GaussInt):
        return ZI
    if isinstance(x, LaurentPoly):
        return LAURENT
    raise TypeError(f"no known coefficient ring for {type(x).__name__}")


def invert_element(x: Any) -> Any:
    """Multiplicative inverse of a unit; NotInvertibleError otherwise."""
    if isinstance(x, int):
        if x in (1, -1):
            return x
        raise NotInvertibleError(f"{x} is not a unit of Z")
    return x.inverse()


def elem_pow(x: Any, n: int) -> Any:
    """x**n in x's ring; negative n goes through invert_element."""
    if n < 0:
        return invert_element(x) ** (-n)
    return x ** n
