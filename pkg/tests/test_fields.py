import random

import pytest
from fractions import Fraction

from solvpoly import GF, QQ


def test_rational_canonical_storage():
    assert QQ.coerce(Fraction(6, 4)) == Fraction(3, 2)
    assert QQ.coerce(Fraction(8, 4)) == 2
    assert isinstance(QQ.coerce(Fraction(8, 4)), int)
    assert QQ.ratio(-4, -6) == Fraction(2, 3)
    v = QQ.ratio(3, -6)
    assert v == Fraction(-1, 2) and v.denominator > 0


def test_rational_field_axioms_sampled():
    rng = random.Random(7)
    for _ in range(500):
        a = QQ.ratio(rng.randint(-50, 50), rng.randint(1, 20))
        b = QQ.ratio(rng.randint(-50, 50), rng.randint(1, 20))
        assert QQ.add(a, QQ.neg(a)) == QQ.zero
        assert QQ.sub(a, b) == QQ.add(a, QQ.neg(b))
        if not QQ.is_zero(a):
            assert QQ.mul(a, QQ.inv(a)) == QQ.one
        assert QQ.mul(a, QQ.add(b, QQ.one)) == QQ.add(QQ.mul(a, b), a)


def test_prime_field_basics():
    F = GF(7)
    assert F.coerce(-1) == 6
    assert F.add(5, 4) == 2
    assert F.mul(3, 5) == 1
    assert F.inv(3) == 5
    assert F.ratio(1, 2) == 4  # 2 * 4 == 1 mod 7
    assert F.coerce(Fraction(1, 2)) == 4


def test_prime_field_axioms_exhaustive_small():
    F = GF(11)
    for a in range(11):
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1
        for b in range(11):
            assert 0 <= F.add(a, b) < 11
            assert 0 <= F.mul(a, b) < 11


def test_non_prime_modulus_rejected():
    with pytest.raises(ValueError):
        GF(6)
    with pytest.raises(ValueError):
        GF(1)


def test_inverse_of_zero_rejected():
    with pytest.raises(ZeroDivisionError):
        QQ.inv(0)
    with pytest.raises(ZeroDivisionError):
        GF(5).inv(0)


def test_field_equality_and_format():
    assert GF(5) == GF(5)
    assert GF(5) != GF(7)
    assert QQ == QQ and QQ != GF(5)
    assert QQ.format(Fraction(3, 2)) == "3/2"
    assert GF(7).format(12) == "5"
