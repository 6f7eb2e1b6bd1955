"""Rotation, generalized ideal and double ideal matrices."""

from .reports import (
    DoubleRankReport,
    RankReport,
    consecutive_windows_independent,
    full_rank_criterion,
    rank_report_double,
    rank_report_single,
    require_squarefree,
)
from .rotation import (
    RotationMatrix,
    build_double_ideal,
    build_ideal_matrix,
    build_rotation,
    circulant_phi,
    generator_polynomial,
    phi_from_column,
    r_circulant_phi,
    shift_generator,
)
from .spectral import (
    KernelVector,
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

__all__ = [
    "DoubleRankReport",
    "KernelVector",
    "RankReport",
    "RotationMatrix",
    "build_double_ideal",
    "build_ideal_matrix",
    "build_rotation",
    "circulant_phi",
    "consecutive_windows_independent",
    "full_rank_criterion",
    "generator_polynomial",
    "kernel_family",
    "kernel_vectors_square",
    "phi_from_column",
    "power_vector",
    "r_circulant_phi",
    "rank_report_double",
    "rank_report_single",
    "require_squarefree",
    "shift_generator",
    "vandermonde",
    "verify_double_eigen_identity",
    "verify_double_vandermonde_identity",
    "verify_eigenvectors",
    "verify_row_eigen_identity",
    "verify_vandermonde_identity",
]
