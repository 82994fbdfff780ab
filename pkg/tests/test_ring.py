import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lamplighter.errors import NotInvertibleError, ParseError, RingMismatchError
from lamplighter.ring import Ring, Z, Zmod, add, inv, is_unit, mul, neg, parse_ring, sub


def test_examples_arithmetic():
    assert mul(Zmod(5)(2), Zmod(5)(3)) == Zmod(5)(1)
    assert add(Z(2), Z(-2)) == Z(0)
    assert mul(Zmod(4)(3), Zmod(4)(3)) == Zmod(4)(1)
    assert sub(Zmod(7)(1), Zmod(7)(3)).value == 5
    assert neg(Zmod(3)(1)).value == 2


def test_inverse_examples():
    assert inv(Zmod(5)(2)) == Zmod(5)(3)
    assert inv(Z(-1)) == Z(-1)
    with pytest.raises(NotInvertibleError) as e:
        inv(Zmod(4)(2))
    assert e.value.value == 2
    with pytest.raises(NotInvertibleError):
        inv(Z(2))


def test_is_unit_examples():
    assert is_unit(Z(1))
    assert not is_unit(Zmod(6)(3))
    assert is_unit(Zmod(7)(5))


def test_zero_ring():
    R = Zmod(1)
    assert R.enumerate_ints(5) == [0]
    assert R(17).value == 0
    assert is_unit(R(0))
    assert R(0).inv() == R(0)


def test_enumerate():
    assert Zmod(3).enumerate_ints(9) == [0, 1, 2]
    assert Z.enumerate_ints(1) == [-1, 0, 1]


def test_mixed_rings_rejected():
    with pytest.raises(RingMismatchError):
        Zmod(3)(1) + Zmod(5)(1)
    with pytest.raises(RingMismatchError):
        Zmod(3)(Zmod(5)(1))


def test_big_integers_do_not_overflow():
    big = Z(2) * Z(3 ** 80)
    assert big.value == 2 * 3 ** 80


@given(st.integers(1, 60), st.integers(-1000, 1000))
def test_units_modular(m, v):
    R = Zmod(m)
    a = R(v)
    assert 0 <= a.value < m
    assert a.is_unit() == (math.gcd(a.value, m) == 1)
    if a.is_unit():
        assert a * a.inv() == R.one()
        assert a.inv().inv() == a
    else:
        with pytest.raises(NotInvertibleError):
            a.inv()


@given(st.integers(-50, 50))
def test_units_integers(v):
    assert Z(v).is_unit() == (v in (1, -1))


@pytest.mark.parametrize("text,ring", [("Z", Z), ("Z/5", Zmod(5)), (" Z/12 ", Zmod(12)), ("Z/1", Zmod(1))])
def test_parse_ring(text, ring):
    assert parse_ring(text) == ring
    assert str(ring) == text.strip()


@pytest.mark.parametrize("text,pos", [("Q", 0), ("Z/", 2), ("Z/x", 2), ("Zq", 1), ("Z/0", 2)])
def test_parse_ring_errors(text, pos):
    with pytest.raises(ParseError) as e:
        parse_ring(text)
    assert e.value.pos == pos


def test_bad_modulus():
    with pytest.raises(ValueError):
        Ring(0)
