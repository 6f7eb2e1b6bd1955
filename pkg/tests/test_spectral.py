"""Tests for spectral identities and kernel vectors"""

import pytest

from idealforge.algebra import DenseMatrix, FieldSpec, Polynomial, find_roots, mat_rank
from idealforge.exceptions import IncompleteRoots, InvalidArgument
from idealforge.ideal import (
    build_double_ideal,
    build_rotation,
    kernel_family,
    kernel_vectors_square,
    power_vector,
    vandermonde,
    verify_double_eigen_identity,
    verify_double_vandermonde_identity,
    verify_eigenvectors,
    verify_row_eigen_identity,
    verify_vandermonde_identity,
)

F2 = FieldSpec.prime(2)
F5 = FieldSpec.prime(5)
F7 = FieldSpec.prime(7)
Q = FieldSpec.rationals()


def split(field, *values):
    phi = Polynomial(field, values)
    return build_rotation(phi), find_roots(phi)


class TestVandermonde:
    """Test power vectors and Vandermonde matrices"""

    def test_power_vector(self):
        """Test (1, w, w^2, ...) over F5"""
        assert power_vector(F5, 2, 4) == (1, 2, 4, 3)

    def test_shape(self):
        """Test entry (i, j) is roots[j]^i"""
        V = vandermonde(Q, [1, -1, 2], 3)
        assert V.to_rows() == [[1, 1, 1], [1, -1, 2], [1, 1, 4]]


class TestSingleIdentities:
    """Test eigenvector and Vandermonde identities of H*(f)"""

    def test_eigenvectors(self):
        """Test H^T has eigenvectors (1, w, ..., w^{n-1})"""
        H, roots = split(F7, 6, 0, 0, 1)  # x^3 - 1 has roots 1, 2, 4
        assert verify_eigenvectors(H, roots)

    def test_vandermonde_over_q(self):
        """Test phi = x^2 - 1, f = (1,1), m = 3"""
        H, roots = split(Q, -1, 0, 1)
        assert verify_vandermonde_identity(H, (1, 1), 3, roots)
        assert verify_row_eigen_identity(H, (1, 1), 3, roots)

    def test_zero_generator(self):
        """Test f = 0 makes both sides zero"""
        H, roots = split(Q, -1, 0, 1)
        assert verify_vandermonde_identity(H, (0, 0), 4, roots)

    @pytest.mark.parametrize("f", [(1, 0), (0, 1), (3, 4), (2, 2)])
    def test_vandermonde_over_f5(self, f):
        """Test phi = x^2 + 1 over F5 for several generators"""
        H, roots = split(F5, 1, 0, 1)
        assert verify_vandermonde_identity(H, f, 2, roots)

    def test_incomplete_roots(self):
        """Test a modulus that does not split is refused"""
        H, roots = split(F2, 1, 1, 1)
        with pytest.raises(IncompleteRoots):
            verify_vandermonde_identity(H, (1, 0), 2, roots)

    def test_roots_of_another_polynomial(self):
        """Test a root set for a different phi is refused"""
        H, _ = split(Q, -1, 0, 1)
        _, other = split(Q, -4, 0, 1)
        with pytest.raises(InvalidArgument):
            verify_eigenvectors(H, other)


class TestDoubleIdentities:
    """Test the block identities of the double ideal matrix"""

    def test_block_and_per_root_forms(self):
        """Test both forms over F7 with a shared root"""
        H1, roots1 = split(F7, 6, 0, 1)  # x^2 - 1
        H2, roots2 = split(F7, 2, 4, 1)  # (x - 1)(x - 2)
        for m in (1, 3, 4, 6):
            assert verify_double_vandermonde_identity(H1, H2, (2, 3), (1, 5), m, roots1, roots2)
            assert verify_double_eigen_identity(H1, H2, (2, 3), (1, 5), m, roots1, roots2)


class TestKernelVectors:
    """Test kernel vectors of the transposed square double ideal matrix"""

    def test_first_family(self):
        """Test x^2-1 and x^2-4 over F7 with f1 = x - 1 gives (1, 1, 0, 0)"""
        H1, roots1 = split(F7, 6, 0, 1)
        H2, roots2 = split(F7, 3, 0, 1)
        assert roots1.roots == (1, 6)
        assert roots2.roots == (2, 5)
        family = kernel_family(H1, H2, (6, 1), (1, 0), roots1, roots2)
        assert [(kv.family, kv.root, kv.vector) for kv in family] == [
            ("first", 1, (1, 1, 0, 0))
        ]

    def test_trivial_kernel(self):
        """Test coprime moduli and unit generators have no kernel vectors"""
        H1, roots1 = split(F7, 6, 0, 1)
        H2, roots2 = split(F7, 3, 0, 1)
        assert kernel_vectors_square(H1, H2, (1, 0), (1, 0), roots1, roots2) == []

    def test_common_family(self):
        """Test x^2-1 and x^2-3x+2 over Q give (-1, -1, 1, 1) from the root 1"""
        H1, roots1 = split(Q, -1, 0, 1)
        H2, roots2 = split(Q, 2, -3, 1)
        family = kernel_family(H1, H2, (1, 0), (1, 0), roots1, roots2)
        assert [kv.family for kv in family] == ["common"]
        assert family[0].root == 1
        assert family[0].vector == (-1, -1, 1, 1)

    def test_vectors_span_the_kernel(self):
        """Test the emitted vectors are independent and count the kernel dimension"""
        H1, roots1 = split(F7, 6, 0, 1)  # roots 1, 6
        H2, roots2 = split(F7, 2, 4, 1)  # roots 1, 2
        f1, f2 = (1, 1), (5, 1)  # f1(6) = 0, f2(2) = 0
        vectors = kernel_vectors_square(H1, H2, f1, f2, roots1, roots2)
        D = build_double_ideal(H1, H2, f1, f2, 4)
        assert len(vectors) == 4 - mat_rank(D)
        assert mat_rank(DenseMatrix.from_rows(F7, vectors)) == len(vectors)

    def test_incomplete_roots(self):
        """Test kernel vectors need both moduli split"""
        H1, roots1 = split(F2, 1, 1, 1)
        H2, roots2 = split(F2, 1, 1)
        with pytest.raises(IncompleteRoots):
            kernel_vectors_square(H1, H2, (1, 0), (1,), roots1, roots2)
