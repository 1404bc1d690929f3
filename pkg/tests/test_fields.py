"""Scalar arithmetic: exactness, parsing, and field-mixing rejection."""

from fractions import Fraction

import pytest

from hopfcross.fields import Field, FieldMismatchError, Fp

QQ = Field.rationals()
F5 = Field.prime(5)


def test_rational_arithmetic_is_exact():
    assert QQ.coerce("1/3") + QQ.coerce("1/6") == Fraction(1, 2)


def test_prime_field_inverse():
    x = Fp(2, 5)
    assert x * (F5.one() / x) == F5.one()
    assert Fp(3, 7) / Fp(2, 7) == Fp(5, 7)


def test_prime_field_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        Fp(1, 5) / Fp(0, 5)


def test_mixing_distinct_primes_rejected():
    with pytest.raises(FieldMismatchError):
        Fp(1, 3) + Fp(1, 5)


def test_mixing_rational_and_prime_rejected():
    with pytest.raises(FieldMismatchError):
        Fp(1, 3) + Fraction(1, 2)


def test_int_lifts_into_prime_field():
    assert Fp(2, 5) + 4 == Fp(1, 5)
    assert 2 * Fp(3, 5) == Fp(1, 5)
    assert 1 - Fp(3, 5) == Fp(3, 5)


@pytest.mark.parametrize("s", ["0", "7", "-3", "1/2", "-22/7"])
def test_rational_parse_format_round_trip(s):
    assert QQ.format(QQ.parse(s)) == s


def test_rational_format_reduces():
    assert QQ.format(Fraction(2, 4)) == "1/2"
    assert QQ.format(Fraction(-4, 2)) == "-2"


def test_prime_parse_variants():
    # plain residue, explicit modulus tag, invertible fraction form
    assert F5.parse("7") == Fp(2, 5)
    assert F5.parse("2 mod 5") == Fp(2, 5)
    assert F5.parse("1/2") == Fp(3, 5)


def test_prime_parse_rejects_wrong_modulus():
    with pytest.raises(ValueError):
        F5.parse("1 mod 7")


def test_prime_parse_rejects_zero_denominator():
    with pytest.raises(ValueError):
        F5.parse("1/5")


def test_rational_parse_rejects_mod_syntax():
    with pytest.raises(ValueError):
        QQ.parse("2 mod 5")


def test_prime_format():
    assert F5.format(Fp(8, 5)) == "3 mod 5"


def test_from_name_round_trip():
    for f in (QQ, F5, Field.prime(2)):
        assert Field.from_name(f.name) == f


def test_from_name_rejects_garbage():
    with pytest.raises(ValueError):
        Field.from_name("real")
    with pytest.raises(ValueError):
        Field.from_name("prime:x")


def test_prime_constructor_requires_prime():
    with pytest.raises(ValueError):
        Field.prime(4)


def test_characteristic():
    assert QQ.characteristic == 0
    assert F5.characteristic == 5


def test_coerce_rejects_float():
    with pytest.raises(FieldMismatchError):
        QQ.coerce(0.5)
    with pytest.raises(FieldMismatchError):
        F5.coerce(0.5)
