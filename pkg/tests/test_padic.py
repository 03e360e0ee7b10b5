from fractions import Fraction

import pytest

from carlitz.errors import CarlitzDomainError, NotIntegerError
from carlitz.padic import PadicInteger, as_padic


def test_nonnegative_integers_roundtrip():
    for q in (2, 3, 4, 9):
        for n in range(200):
            y = PadicInteger.from_int(n, q)
            assert y.tail == 0
            assert y.to_int() == n


def test_negative_integers_have_tail_q_minus_1():
    y = PadicInteger.from_int(-3, 2)
    assert y.head == (1, 0) and y.tail == 1
    assert y.to_int() == -3
    for q in (2, 3, 5):
        for n in range(-64, 0):
            y = PadicInteger.from_int(n, q)
            assert y.tail == q - 1
            assert y.to_int() == n


def test_canonical_form_unique():
    # same integer through different constructors compares equal
    a = PadicInteger(2, head=(1, 0, 1, 1, 1), tail=1)   # head repeats tail
    b = PadicInteger.from_int(-3, 2)
    assert a == b
    c = PadicInteger(3, head=(2, 0, 0), tail=0)
    assert c == PadicInteger.from_int(2, 3)
    assert hash(a) == hash(b)


def test_digit_access_and_sum():
    y = PadicInteger.from_int(11, 2)  # 1101
    assert y.digits(6) == [1, 1, 0, 1, 0, 0]
    assert y.digit_sum() == 3
    with pytest.raises(CarlitzDomainError):
        PadicInteger.from_int(-1, 2).digit_sum()


def test_arithmetic_through_fraction_values():
    for q in (2, 3):
        for a in range(-20, 21, 3):
            for b in range(-20, 21, 7):
                x, y = PadicInteger.from_int(a, q), PadicInteger.from_int(b, q)
                assert (x + y).to_int() == a + b
                assert (-x).to_int() == -a
                assert (x - y).to_int() == a - b


def test_non_integer_stream():
    # tail 1 in base 3 is the 3-adic value -1/2
    y = PadicInteger(3, head=(), tail=1)
    assert y.to_fraction() == Fraction(-1, 2)
    assert not y.is_integer()
    with pytest.raises(NotIntegerError):
        y.to_int()
    # negation is eventually constant again: 1/2 = 2 + 1*3/(1-3)
    z = -y
    assert z.to_fraction() == Fraction(1, 2)
    assert (y + z).is_zero()


def test_base_p_digits():
    # q = 4 digits expand to pairs of base-2 digits
    y = PadicInteger.from_int(11, 4)  # digits 3, 2 base 4
    assert y.p_digits(4, 2) == [1, 1, 0, 1]


def test_from_fraction_rejects_bad_denominator():
    with pytest.raises(CarlitzDomainError):
        PadicInteger.from_fraction(Fraction(1, 2), 2)  # 1/2 not in Z_2


def test_as_padic_coercion():
    y = as_padic(5, 2)
    assert isinstance(y, PadicInteger) and y.to_int() == 5
    with pytest.raises(CarlitzDomainError):
        as_padic(PadicInteger.from_int(1, 2), 3)
