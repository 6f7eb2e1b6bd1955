"""Tests for random instance generators"""

import random
from fractions import Fraction

import pytest

from idealforge.algebra import FieldSpec, find_roots, poly_gcd, poly_squarefree
from idealforge.exceptions import ExhaustedRetries, InvalidArgument
from idealforge.oracle import (
    random_element,
    random_modulus,
    random_related_pair,
    random_split_poly,
    random_squarefree_multiple,
    random_squarefree_poly,
    random_vector,
    rejection_sample,
)

F2 = FieldSpec.prime(2)
F7 = FieldSpec.prime(7)
Q = FieldSpec.rationals()


class TestRejectionSample:
    """Test bounded rejection sampling"""

    def test_returns_first_accepted(self):
        """Test the first accepted candidate is returned"""
        values = iter(range(10))
        assert rejection_sample(lambda: next(values), lambda v: v >= 3, 10) == 3

    def test_exhausted(self):
        """Test the retry bound raises ExhaustedRetries"""
        calls = []

        def draw():
            calls.append(1)
            return 0

        with pytest.raises(ExhaustedRetries):
            rejection_sample(draw, lambda v: False, max_retries=5, what="nothing")
        assert len(calls) == 5

    def test_is_a_runtime_error(self):
        """Test exhaustion can be caught as RuntimeError"""
        with pytest.raises(RuntimeError):
            rejection_sample(lambda: 0, lambda v: False, max_retries=1)


class TestElements:
    """Test element and vector draws"""

    def test_prime_field_range(self):
        """Test F7 elements lie in [0, 7)"""
        rng = random.Random(1)
        assert all(0 <= random_element(F7, rng) < 7 for _ in range(100))

    def test_rational_range(self):
        """Test rationals have |numerator| <= R and denominator 1 or 2"""
        rng = random.Random(1)
        for _ in range(100):
            v = random_element(Q, rng, rational_range=2)
            assert isinstance(v, Fraction)
            assert abs(v) <= 2
            assert v.denominator in (1, 2)

    def test_vector_is_deterministic(self):
        """Test the same seed gives the same vector"""
        assert random_vector(F7, 5, random.Random(3)) == random_vector(F7, 5, random.Random(3))


class TestModuli:
    """Test modulus generators"""

    @pytest.mark.parametrize("field", [F2, F7, Q])
    def test_squarefree_postconditions(self, field):
        """Test monic, squarefree and nonzero constant term"""
        rng = random.Random(7)
        for degree in range(1, 5):
            p = random_squarefree_poly(field, degree, rng)
            assert p.degree == degree
            assert p.is_monic
            assert p.values[0] != 0
            assert poly_squarefree(p)

    def test_degree_zero(self):
        """Test degree 0 is refused"""
        with pytest.raises(InvalidArgument):
            random_squarefree_poly(F7, 0, random.Random(0))
        with pytest.raises(InvalidArgument):
            random_modulus(F7, 0, random.Random(0))

    def test_modulus_constant_term(self):
        """Test plain moduli keep a nonzero constant term"""
        rng = random.Random(5)
        for _ in range(20):
            p = random_modulus(F2, 3, rng)
            assert p.is_monic and p.values[0] == 1

    def test_squarefree_multiple(self):
        """Test the base divides the result"""
        rng = random.Random(2)
        base = random_squarefree_poly(F7, 2, rng)
        p = random_squarefree_multiple(base, 4, rng)
        assert p.degree == 4
        assert (p % base).is_zero
        assert poly_squarefree(p)

    def test_squarefree_multiple_too_small(self):
        """Test the target degree must fit the base"""
        base = random_squarefree_poly(F7, 3, random.Random(0))
        with pytest.raises(InvalidArgument):
            random_squarefree_multiple(base, 2, random.Random(0))


class TestSplitPolynomials:
    """Test moduli with distinct roots in the field"""

    def test_splits_completely(self):
        """Test the drawn polynomial has exactly its degree in distinct roots"""
        rng = random.Random(4)
        for degree in range(1, 7):
            roots = find_roots(random_split_poly(F7, degree, rng))
            assert roots.complete
            assert len(roots) == degree
            assert 0 not in roots.roots

    def test_shared_roots(self):
        """Test shared roots are included"""
        p = random_split_poly(F7, 3, random.Random(0), shared=[2])
        assert p.evaluate(2) == 0

    def test_rationals(self):
        """Test split polynomials over Q have integer roots"""
        roots = find_roots(random_split_poly(Q, 5, random.Random(6)))
        assert roots.complete
        assert all(r.denominator == 1 for r in roots.roots)

    def test_too_many_roots(self):
        """Test F2 has a single nonzero element"""
        with pytest.raises(InvalidArgument):
            random_split_poly(F2, 2, random.Random(0))


class TestRelatedPair:
    """Test modulus pairs with a common factor"""

    @pytest.mark.parametrize("shared", [0, 1, 2])
    def test_common_factor_degree(self, shared):
        """Test the gcd has at least the requested degree"""
        rng = random.Random(shared)
        phi1, phi2 = random_related_pair(F7, 3, 2, shared, rng)
        assert (phi1.degree, phi2.degree) == (3, 2)
        assert poly_gcd(phi1, phi2).degree >= shared
        assert poly_squarefree(phi1) and poly_squarefree(phi2)

    def test_bad_shared_degree(self):
        """Test the shared degree must fit both moduli"""
        with pytest.raises(InvalidArgument):
            random_related_pair(F7, 3, 2, 3, random.Random(0))

    def test_unrealizable_binary_shape(self, monkeypatch):
        """Test an F2 shape with no squarefree pair fails without spending the retry budget"""

        def no_rejection_sampling(*args, **kwargs):
            raise AssertionError("small shapes are enumerated")

        monkeypatch.setattr("idealforge.oracle.generators.rejection_sample", no_rejection_sampling)
        # x + 1 is the only common factor and leaves no coprime linear cofactor
        with pytest.raises(ExhaustedRetries):
            random_related_pair(F2, 2, 3, 1, random.Random(0), max_retries=10_000)

    @pytest.mark.parametrize("shape", [(3, 2, 2), (5, 4, 3), (5, 5, 2), (4, 1, 1)])
    @pytest.mark.parametrize("seed", range(10))
    def test_realizable_binary_shape(self, shape, seed):
        """Test F2 shapes with few usable common factors are always realized"""
        n1, n2, shared = shape
        phi1, phi2 = random_related_pair(F2, n1, n2, shared, random.Random(seed))
        assert poly_gcd(phi1, phi2).degree >= shared

    @pytest.mark.parametrize("seed", range(20))
    def test_binary_shapes(self, seed):
        """Test every realizable F2 shape up to degree 5 is found"""
        rng = random.Random(seed)
        for n1 in range(1, 6):
            for n2 in range(1, 6):
                for shared in range(min(n1, n2) + 1):
                    try:
                        phi1, phi2 = random_related_pair(F2, n1, n2, shared, rng)
                    except ExhaustedRetries:
                        assert shared > 0
                        continue
                    assert (phi1.degree, phi2.degree) == (n1, n2)
                    assert poly_gcd(phi1, phi2).degree >= shared
                    assert poly_squarefree(phi1) and poly_squarefree(phi2)
                    assert phi1.values[0] != 0 and phi2.values[0] != 0
