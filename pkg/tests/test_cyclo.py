import random
from fractions import Fraction

import pytest

from cuspeps.cyclo import CycloNumber, cyclotomic_polynomial, root_of_unity


def test_basic_roots():
    assert root_of_unity(1, 0) == 1
    assert root_of_unity(4, 1) * root_of_unity(4, 1) == -1
    assert (root_of_unity(3, 0) + root_of_unity(3, 1) + root_of_unity(3, 2)).is_zero()


def test_order_zero_rejected():
    with pytest.raises(ValueError):
        root_of_unity(0, 1)


def test_arith_examples():
    a = root_of_unity(8, 3)
    assert a + 0 == a
    assert root_of_unity(8, 1) * root_of_unity(8, 7) == 1
    g = root_of_unity(3, 1) - root_of_unity(3, 2)
    assert g * g == -3


def test_conjugation():
    assert root_of_unity(1, 0).conjugate() == 1
    assert root_of_unity(3, 1).conjugate() == root_of_unity(3, 2)
    g = root_of_unity(3, 1) - root_of_unity(3, 2)
    assert g.conjugate() == -g


def test_embed_values():
    assert abs(root_of_unity(1, 0).embed() - 1.0) < 1e-12
    assert abs(root_of_unity(4, 1).embed() - 1j) < 1e-12
    g = root_of_unity(3, 1) - root_of_unity(3, 2)
    assert abs(g.embed() - 1j * 3**0.5) < 1e-12


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def _random_value(rng):
    m = rng.choice((1, 3, 4, 6, 8, 12))
    acc = CycloNumber.rational(0)
    for _ in range(rng.randrange(4)):
        acc = acc + root_of_unity(m, rng.randrange(m)).scale(
            Fraction(rng.randrange(-5, 6), rng.randrange(1, 4))
        )
    return acc


def test_ring_axioms_sampled():
    rng = random.Random(11)
    for _ in range(200):
        a, b, c = (_random_value(rng) for _ in range(3))
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)
        assert (a * b).conjugate() == a.conjugate() * b.conjugate()


def test_zero_iff_embed_small():
    rng = random.Random(5)
    for _ in range(1000):
        a = _random_value(rng)
        assert a.is_zero() == (abs(a.embed()) < 1e-9)


def test_promotion_roundtrip():
    rng = random.Random(3)
    for _ in range(100):
        a = _random_value(rng)
        assert a.promote(a.m * rng.choice((2, 3, 4))) == a


def test_serialization_roundtrip():
    rng = random.Random(7)
    for _ in range(50):
        a = _random_value(rng)
        assert CycloNumber.from_dict(a.to_dict()) == a


def test_rational_extraction():
    assert (root_of_unity(4, 1) ** 2).rational_value() == -1
    with pytest.raises(ValueError):
        root_of_unity(4, 1).rational_value()
