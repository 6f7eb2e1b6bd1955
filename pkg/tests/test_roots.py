"""Tests for root finding"""

from fractions import Fraction

import pytest

from idealforge.algebra import FieldSpec, Polynomial, find_roots
from idealforge.config import SCAN_BOUND_ENV
from idealforge.exceptions import FieldTooLarge, InvalidArgument, ZeroPolynomial

Q = FieldSpec.rationals()


class TestFindRoots:
    """Test exhaustive and rational root search"""

    def test_x2_plus_1_over_f5(self):
        """Test x^2+1 over F5 has roots {2, 3} and splits"""
        roots = find_roots(Polynomial(FieldSpec.prime(5), (1, 0, 1)))
        assert roots.roots == (2, 3)
        assert roots.complete
        assert len(roots) == 2

    def test_irreducible_over_f2(self):
        """Test x^2+x+1 over F2 has no roots"""
        roots = find_roots(Polynomial(FieldSpec.prime(2), (1, 1, 1)))
        assert roots.roots == ()
        assert not roots.complete

    def test_rational_roots(self):
        """Test x^2-1 over Q has roots {-1, 1}"""
        roots = find_roots(Polynomial(Q, (-1, 0, 1)))
        assert roots.roots == (Fraction(-1), Fraction(1))
        assert roots.complete

    def test_non_integral_rational_roots(self):
        """Test roots of 2x^2 - 3x + 1 = (2x-1)(x-1) include 1/2"""
        roots = find_roots(Polynomial(Q, (1, -3, 2)))
        assert roots.roots == (Fraction(1, 2), Fraction(1))

    def test_zero_root_over_q(self):
        """Test x is found as a root when x divides p"""
        roots = find_roots(Polynomial(Q, (0, -1, 0, 1)))
        assert roots.roots == (Fraction(-1), Fraction(0), Fraction(1))

    def test_repeated_root_is_incomplete(self):
        """Test (x-1)^2 reports one distinct root and does not split into distinct factors"""
        roots = find_roots(Polynomial(Q, (1, -2, 1)))
        assert roots.roots == (Fraction(1),)
        assert not roots.complete

    def test_zero_polynomial(self):
        """Test the zero polynomial is refused"""
        with pytest.raises(ZeroPolynomial):
            find_roots(Polynomial.zero(Q))

    def test_scan_bound(self):
        """Test moduli above the explicit scan bound are refused"""
        with pytest.raises(FieldTooLarge):
            find_roots(Polynomial(FieldSpec.prime(101), (1, 0, 1)), scan_bound=100)

    def test_scan_bound_from_environment(self, monkeypatch):
        """Test IDEALFORGE_SCAN_BOUND overrides the default bound"""
        monkeypatch.setenv(SCAN_BOUND_ENV, "10")
        with pytest.raises(FieldTooLarge):
            find_roots(Polynomial(FieldSpec.prime(11), (1, 1)))
        assert find_roots(Polynomial(FieldSpec.prime(7), (1, 1))).roots == (6,)

    def test_bad_environment_value(self, monkeypatch):
        """Test an unparsable IDEALFORGE_SCAN_BOUND is an input error"""
        monkeypatch.setenv(SCAN_BOUND_ENV, "lots")
        with pytest.raises(InvalidArgument):
            find_roots(Polynomial(FieldSpec.prime(7), (1, 1)))

    def test_to_dict(self):
        """Test the serialized form uses strings"""
        data = find_roots(Polynomial(Q, (-1, 0, 1))).to_dict()
        assert data == {
            "field": "Q",
            "poly": ["-1", "0", "1"],
            "roots": ["-1", "1"],
            "complete": True,
        }
