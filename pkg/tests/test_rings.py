"""Exactness and algebra of the three coefficient rings."""

import random

import pytest

from fibideal.rings import (
    ALPHA,
    ALPHA_INV,
    IMAG,
    LAURENT,
    PHI,
    Q,
    Q_INV,
    ZI,
    ZPHI,
    ZZ,
    GaussInt,
    LaurentPoly,
    NotInvertibleError,
    QuadInt,
    alpha_pow,
    elem_pow,
    invert_element,
    ring_of,
)


def test_quad_mul_examples():
    assert PHI * PHI == QuadInt(1, 1)
    assert ALPHA * ALPHA == QuadInt(2, 3)
    assert ALPHA_INV * ALPHA == QuadInt(1, 0)
    assert QuadInt(2, 3) * QuadInt(5, -3) == QuadInt(1, 0)


def test_quad_int_promotion():
    assert 2 + PHI == QuadInt(2, 1)
    assert PHI - 1 == QuadInt(-1, 1)
    assert 1 - PHI == QuadInt(1, -1)
    assert 3 * PHI == QuadInt(0, 3)
    assert QuadInt(5, 0) == 5
    assert QuadInt(5, 1) != 5


def test_quad_norm_examples():
    assert ALPHA.norm() == 1
    assert ALPHA_INV.norm() == 1
    assert QuadInt(3, 2).norm() == 11
    assert QuadInt(2, 0).norm() == 4
    assert PHI.norm() == -1


def test_quad_conjugate():
    # phi and 1 - phi are the two roots of x^2 - x - 1.
    assert PHI.conjugate() == 1 - PHI
    assert ALPHA.conjugate() * ALPHA == ALPHA.norm()


def test_quad_inverse():
    assert ALPHA.inverse() == ALPHA_INV
    assert PHI.inverse() == PHI - 1
    with pytest.raises(NotInvertibleError):
        QuadInt(2, 0).inverse()
    with pytest.raises(NotInvertibleError):
        QuadInt(0, 0).inverse()


def test_alpha_pow_examples():
    assert alpha_pow(0) == 1
    assert alpha_pow(1) == QuadInt(1, 1)
    assert alpha_pow(2) == QuadInt(2, 3)
    assert alpha_pow(3) == QuadInt(5, 8)
    assert alpha_pow(-1) == QuadInt(2, -1)
    assert alpha_pow(-2) == QuadInt(5, -3)


def test_alpha_is_a_unit_of_infinite_order():
    for n in range(-20, 21):
        x = alpha_pow(n)
        assert x.norm() == 1
        assert x * alpha_pow(-n) == 1
    assert ALPHA + ALPHA_INV == 3


def test_quad_big_magnitudes_stay_exact():
    x = alpha_pow(1500)
    assert len(str(x.b)) > 600
    assert x * alpha_pow(-1500) == 1
    assert x.norm() == 1


def test_quad_immutable_and_hashable():
    x = QuadInt(1, 2)
    with pytest.raises(AttributeError):
        x.a = 7
    assert len({QuadInt(1, 2), QuadInt(1, 2), QuadInt(2, 1)}) == 2


def test_quad_ring_axioms_random():
    rng = random.Random(20260814)
    for _ in range(300):
        x = QuadInt(rng.randint(-999, 999), rng.randint(-999, 999))
        y = QuadInt(rng.randint(-999, 999), rng.randint(-999, 999))
        z = QuadInt(rng.randint(-999, 999), rng.randint(-999, 999))
        assert x + y == y + x
        assert x * y == y * x
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert (x + y) - y == x
        assert (x * y).norm() == x.norm() * y.norm()
        assert (x * y).conjugate() == x.conjugate() * y.conjugate()


def test_gauss_basics():
    assert IMAG * IMAG == GaussInt(-1, 0)
    assert IMAG * IMAG == -1
    assert GaussInt(1, 2) * GaussInt(1, -2) == 5
    assert GaussInt(3, -4).norm() == 25
    assert GaussInt(2, 1).conjugate() == GaussInt(2, -1)


def test_gauss_units():
    for unit in (GaussInt(1, 0), GaussInt(-1, 0), IMAG, -IMAG):
        assert unit * unit.inverse() == 1
    with pytest.raises(NotInvertibleError):
        GaussInt(1, 1).inverse()


def test_gauss_norm_multiplicative_random():
    rng = random.Random(7)
    for _ in range(500):
        x = GaussInt(rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6))
        y = GaussInt(rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6))
        assert (x * y).norm() == x.norm() * y.norm()


def _random_laurent(rng, max_abs_exp=6, max_coeff=9):
    terms = rng.randint(0, 5)
    p = LaurentPoly()
    for _ in range(terms):
        c = rng.randint(-max_coeff, max_coeff)
        p = p + LaurentPoly.term(c, rng.randint(-max_abs_exp, max_abs_exp))
    return p


def test_laurent_construction_and_str():
    c2 = Q ** 4 - Q ** 3 - Q + 1
    assert str(c2) == "q^4 - q^3 - q + 1"
    assert str(Q + Q_INV - 2) == "q - 2 + q^-1"
    assert str(LaurentPoly()) == "0"
    assert str(2 * Q) == "2*q"
    assert (Q - Q) == LaurentPoly() == 0


def test_laurent_zero_coefficients_are_dropped():
    p = (Q + 1) * (Q - 1)
    assert p.support() == [0, 2]
    assert p.coefficient(1) == 0
    assert p == Q ** 2 - 1


def test_laurent_shift_and_inverse():
    assert Q.shift(-2) == Q_INV
    assert Q.inverse() == Q_INV
    assert (-Q_INV).inverse() == -Q
    with pytest.raises(NotInvertibleError):
        (Q + 1).inverse()
    with pytest.raises(NotInvertibleError):
        (2 * Q).inverse()


def test_laurent_derivative():
    p = Q ** 3 + 4 * Q - 7 + 2 * Q_INV
    assert p.derivative() == 3 * Q ** 2 + 4 - 2 * Q_INV ** 2


def test_laurent_eval_examples():
    p = Q + Q_INV - 2
    assert p.eval_at(ALPHA) == QuadInt(1, 0)
    assert p.eval_at(-1) == -4
    assert (Q ** 2 + 1).eval_at(IMAG) == GaussInt(0, 0)
    with pytest.raises(NotInvertibleError):
        p.eval_at(2)  # q^-1 has no meaning at a non-unit integer


def test_laurent_eval_is_a_homomorphism():
    rng = random.Random(99)
    points = [ALPHA, alpha_pow(-3), IMAG, GaussInt(-1, 0), -1, 1]
    for _ in range(60):
        p = _random_laurent(rng)
        r = _random_laurent(rng)
        x = rng.choice(points)
        assert (p + r).eval_at(x) == p.eval_at(x) + r.eval_at(x)
        assert (p * r).eval_at(x) == p.eval_at(x) * r.eval_at(x)


def test_laurent_eval_at_non_unit_is_fine_without_negative_exponents():
    p = 3 * Q ** 2 - Q + 5
    assert p.eval_at(10) == 295
    assert p.eval_at(0) == 5


def test_laurent_self_reciprocal():
    assert (Q ** 4 - Q ** 3 - Q + 1).is_self_reciprocal(4)
    assert (Q ** 2 + Q).is_self_reciprocal(3)
    assert not (Q ** 2 + Q).is_self_reciprocal(2)
    assert not (2 * Q + 1).is_self_reciprocal(1)
    assert LaurentPoly().is_self_reciprocal(0)
    with pytest.raises(ValueError):
        (Q + Q_INV).is_self_reciprocal(2)


def test_laurent_divmod_exact():
    double_root = (Q - 1) * (Q - 1)
    p = double_root * (Q ** 2 + 5 * Q + 5)
    quot, rem = p.divmod_by(double_root)
    assert quot == Q ** 2 + 5 * Q + 5
    assert rem == 0


def test_laurent_divmod_remainder_and_errors():
    quot, rem = (Q ** 2 + 1).divmod_by(Q - 1)
    assert quot * (Q - 1) + rem == Q ** 2 + 1
    assert rem == 2
    with pytest.raises(ZeroDivisionError):
        Q.divmod_by(LaurentPoly())
    with pytest.raises(ValueError):
        Q_INV.divmod_by(Q - 1)
    with pytest.raises(ValueError):
        # 2q + 1 is not monic and q^2 is not a multiple of 2.
        (Q ** 2).divmod_by(2 * Q + 1)


def _random_ordinary(rng, degree, max_coeff=9):
    p = LaurentPoly()
    for e in range(degree + 1):
        p = p + LaurentPoly.term(rng.randint(-max_coeff, max_coeff), e)
    return p


def test_laurent_divmod_random_roundtrip():
    rng = random.Random(5)
    for _ in range(100):
        deg = rng.randint(1, 4)
        divisor = Q ** deg + _random_ordinary(rng, deg - 1)
        p = _random_ordinary(rng, rng.randint(0, 5)) * divisor \
            + _random_ordinary(rng, deg - 1)
        quot, rem = p.divmod_by(divisor)
        assert quot * divisor + rem == p
        assert not rem or rem.max_exponent() < divisor.max_exponent()


def test_laurent_ring_axioms_random():
    rng = random.Random(31)
    one = LaurentPoly.const(1)
    for _ in range(150):
        p = _random_laurent(rng)
        r = _random_laurent(rng)
        s = _random_laurent(rng)
        assert p * r == r * p
        assert (p * r) * s == p * (r * s)
        assert p * (r + s) == p * r + p * s
        assert (p + r) - r == p
        assert p * one == p


def test_ring_descriptors():
    assert ring_of(3) is ZZ
    assert ring_of(PHI) is ZPHI
    assert ring_of(IMAG) is ZI
    assert ring_of(Q) is LAURENT
    with pytest.raises(TypeError):
        ring_of(1.5)
    assert ZPHI.one == QuadInt(1, 0)
    assert LAURENT.invert(Q) == Q_INV


def test_invert_element_and_elem_pow():
    assert invert_element(1) == 1
    assert invert_element(-1) == -1
    with pytest.raises(NotInvertibleError):
        invert_element(2)
    assert elem_pow(ALPHA, -2) == alpha_pow(-2)
    assert elem_pow(-1, -3) == -1
    assert elem_pow(Q, -5) == Q_INV ** 5
    with pytest.raises(NotInvertibleError):
        elem_pow(3, -1)
