"""phi-quasi-cyclic codes and their residue rings."""

from .quasi_cyclic import (
    Codeword,
    QuasiCyclicCode,
    build_code,
    code_span_reference,
    encode,
    enumerate_codewords,
    generator_matrix_full,
    generator_matrix_minimal,
    is_shift_closed,
    isomorphism_check,
    kernel_check,
    minimum_distance,
    shift_closure_check,
)
from .residue import ResidueRing

__all__ = [
    "Codeword",
    "QuasiCyclicCode",
    "ResidueRing",
    "build_code",
    "code_span_reference",
    "encode",
    "enumerate_codewords",
    "generator_matrix_full",
    "generator_matrix_minimal",
    "is_shift_closed",
    "isomorphism_check",
    "kernel_check",
    "minimum_distance",
    "shift_closure_check",
]
