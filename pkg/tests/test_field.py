"""Tests for exact field arithmetic"""

from fractions import Fraction

import pytest

from idealforge.algebra import FieldKind, FieldSpec, Scalar, is_prime
from idealforge.exceptions import FieldMismatch, InvalidField, NotInvertible


class TestFieldSpec:
    """Test field construction and parsing"""

    def test_parse_tags(self):
        """Test Q and Fp tags parse to the right fields"""
        assert FieldSpec.parse("Q") == FieldSpec.rationals()
        assert FieldSpec.parse("F7") == FieldSpec.prime(7)
        assert FieldSpec.parse(" F2 ").tag == "F2"
        assert FieldSpec.parse("Q").kind is FieldKind.RATIONALS

    @pytest.mark.parametrize("tag", ["F4", "F1", "F", "GF7", "q", "F-3", ""])
    def test_parse_rejects_bad_tags(self, tag):
        """Test unknown tags and composite moduli are refused"""
        with pytest.raises(InvalidField):
            FieldSpec.parse(tag)

    def test_prime_check(self):
        """Test trial-division primality"""
        assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
        assert is_prime(2_147_483_647)

    def test_modulus_must_be_below_two_to_the_31(self):
        """Test moduli at or above 2^31 are refused"""
        with pytest.raises(InvalidField):
            FieldSpec.prime(2_147_483_659)

    def test_rationals_take_no_modulus(self):
        """Test Q with a modulus is invalid"""
        with pytest.raises(InvalidField):
            FieldSpec(FieldKind.RATIONALS, 5)

    def test_is_a_value_error(self):
        """Test input errors can be caught as ValueError"""
        with pytest.raises(ValueError):
            FieldSpec.prime(9)


class TestElements:
    """Test canonical element construction"""

    def test_prime_field_reduces(self):
        """Test integers reduce to the least nonnegative residue"""
        f5 = FieldSpec.prime(5)
        assert f5.element(-1) == 4
        assert f5.element(12) == 2
        assert f5.vector([5, 6, -6]) == (0, 1, 4)

    def test_prime_field_reads_fractions(self):
        """Test a/b over F_p means a times the inverse of b"""
        f7 = FieldSpec.prime(7)
        assert f7.element("1/2") == 4
        assert f7.element(Fraction(3, 4)) == 6

    def test_denominator_divisible_by_p(self):
        """Test fractions with a denominator divisible by p are refused"""
        with pytest.raises(NotInvertible):
            FieldSpec.prime(3).element("1/3")

    def test_rationals_keep_fractions(self):
        """Test Q elements are reduced Fractions"""
        q = FieldSpec.rationals()
        assert q.element("-6/8") == Fraction(-3, 4)
        assert q.element(2) == Fraction(2)
        assert isinstance(q.element(2), Fraction)

    @pytest.mark.parametrize("value", ["abc", "1/0", 1.5, True, None])
    def test_unreadable_values(self, value):
        """Test values that are not exact numbers are refused"""
        with pytest.raises(InvalidField):
            FieldSpec.rationals().element(value)

    def test_format_drops_unit_denominators(self):
        """Test formatting of integral rationals"""
        q = FieldSpec.rationals()
        assert q.format(Fraction(3)) == "3"
        assert q.format(Fraction(-1, 2)) == "-1/2"

    def test_enumerate_prime_field(self):
        """Test F_p elements are listed in increasing order"""
        assert list(FieldSpec.prime(3).elements()) == [0, 1, 2]
        with pytest.raises(InvalidField):
            FieldSpec.rationals().elements()


class TestArithmetic:
    """Test field operations"""

    def test_inverse_in_prime_field(self):
        """Test every nonzero element of F_7 has an inverse"""
        f7 = FieldSpec.prime(7)
        for a in range(1, 7):
            assert f7.mul(a, f7.inv(a)) == 1

    def test_zero_has_no_inverse(self):
        """Test inverting zero raises NotInvertible"""
        with pytest.raises(NotInvertible):
            FieldSpec.prime(5).inv(0)
        with pytest.raises(ZeroDivisionError):
            FieldSpec.rationals().inv(Fraction(0))

    def test_power_and_dot(self):
        """Test powers and dot products"""
        f5 = FieldSpec.prime(5)
        assert f5.power(2, 4) == 1
        assert f5.dot((1, 2, 3), (4, 4, 4)) == 4
        assert FieldSpec.rationals().power(Fraction(1, 2), 3) == Fraction(1, 8)


class TestScalar:
    """Test the Scalar wrapper"""

    def test_operators(self):
        """Test +, -, *, / and negation with int coercion"""
        f5 = FieldSpec.prime(5)
        a = f5.scalar(3)
        assert (a + 4).value == 2
        assert (1 - a).value == 3
        assert (a * a).value == 4
        assert (a / 2).value == 4
        assert (-a).value == 2
        assert a.inverse().value == 2
        assert str(a) == "3"

    def test_mixing_fields_fails(self):
        """Test scalars over different fields do not combine"""
        with pytest.raises(FieldMismatch):
            _ = FieldSpec.prime(5).scalar(1) + FieldSpec.prime(7).scalar(1)

    def test_truthiness(self):
        """Test zero is falsy"""
        q = FieldSpec.rationals()
        assert not Scalar(q, Fraction(0))
        assert q.scalar("1/3")
