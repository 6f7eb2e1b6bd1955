"""Rank predictions for ideal matrices, checked against elimination.

The single prediction is r = min(m, n - deg gcd(f, phi)). For the double
matrix, with phi3 = gcd(phi1, phi2),

    d = deg gcd(f1, phi1) + deg gcd(f2, phi2) + (deg phi3 - deg gcd(f1 f2, phi3))

and r = min(m, n1 + n2 - d). Both predictors read only gcd degrees; the
observed rank always comes from Gaussian elimination.
"""

from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Any

from ..algebra import (
    DenseMatrix,
    Polynomial,
    Value,
    columns_independent,
    mat_rank,
    poly_gcd,
    poly_squarefree,
)
from ..exceptions import NotSquarefree
from ..log_handler import get_structured_logger
from .rotation import RotationMatrix, build_double_ideal, build_ideal_matrix, generator_polynomial

logger = get_structured_logger(__name__, component="reports")

Generator = Sequence[Value] | Polynomial


def require_squarefree(*rotations: RotationMatrix) -> None:
    for H in rotations:
        if not poly_squarefree(H.phi):
            raise NotSquarefree(f"phi = {H.phi} has a repeated root")


def consecutive_windows_independent(matrix: DenseMatrix, r: int) -> bool:
    """True iff every block of r consecutive columns is independent."""
    return all(columns_independent(matrix, s, r) for s in range(matrix.cols - r + 1))


def _degree(p: Polynomial) -> int:
    return len(p.values) - 1


@dataclass
class RankReport:
    """Predicted and observed rank of an n x m generalized ideal matrix."""

    phi: Polynomial
    f: Polynomial
    m: int
    d_poly: Polynomial
    d: int
    r_predicted: int
    r_observed: int
    leading_columns_independent: bool
    windows_independent: bool
    matrix: DenseMatrix = field(repr=False, compare=False)

    @property
    def agrees(self) -> bool:
        return self.r_predicted == self.r_observed

    @property
    def consistent(self) -> bool:
        """Prediction matches and both independence properties hold."""
        return self.agrees and self.leading_columns_independent and self.windows_independent

    def to_dict(self) -> dict[str, Any]:
        return {
            "phi": self.phi.to_strings(),
            "f": self.f.to_strings(),
            "m": self.m,
            "d_poly": self.d_poly.to_strings(),
            "d": self.d,
            "r_predicted": self.r_predicted,
            "r_observed": self.r_observed,
            "agrees": self.agrees,
            "leading_columns_independent": self.leading_columns_independent,
            "windows_independent": self.windows_independent,
        }


@dataclass
class DoubleRankReport:
    """Predicted and observed rank of an (n1+n2) x m double ideal matrix."""

    phi1: Polynomial
    phi2: Polynomial
    f1: Polynomial
    f2: Polynomial
    m: int
    phi3: Polynomial
    n3: int
    e1: int
    e2: int
    e: int
    d_poly: Polynomial
    d: int
    r_predicted: int
    r_observed: int
    leading_columns_independent: bool
    windows_independent: bool
    matrix: DenseMatrix = field(repr=False, compare=False)

    @property
    def agrees(self) -> bool:
        return self.r_predicted == self.r_observed and _degree(self.d_poly) == self.d

    @property
    def consistent(self) -> bool:
        return self.agrees and self.leading_columns_independent and self.windows_independent

    def to_dict(self) -> dict[str, Any]:
        return {
            "phi1": self.phi1.to_strings(),
            "phi2": self.phi2.to_strings(),
            "f1": self.f1.to_strings(),
            "f2": self.f2.to_strings(),
            "m": self.m,
            "phi3": self.phi3.to_strings(),
            "n3": self.n3,
            "e1": self.e1,
            "e2": self.e2,
            "e": self.e,
            "d_poly": self.d_poly.to_strings(),
            "d": self.d,
            "r_predicted": self.r_predicted,
            "r_observed": self.r_observed,
            "agrees": self.agrees,
            "leading_columns_independent": self.leading_columns_independent,
            "windows_independent": self.windows_independent,
        }


def rank_report_single(H: RotationMatrix, f: Generator, m: int) -> RankReport:
    """Predict the rank of H*(f)_{n x m} from gcd(f, phi) and check it.

    Raises:
        NotSquarefree: phi has a repeated root
        DimensionMismatch: bad generator length or m < 1
    """
    require_squarefree(H)
    fpoly = generator_polynomial(H, f)
    matrix = build_ideal_matrix(H, fpoly, m)

    d_poly = poly_gcd(fpoly, H.phi)
    d = _degree(d_poly)
    r_predicted = min(m, H.n - d)
    r_observed = mat_rank(matrix)

    report = RankReport(
        phi=H.phi,
        f=fpoly,
        m=m,
        d_poly=d_poly,
        d=d,
        r_predicted=r_predicted,
        r_observed=r_observed,
        leading_columns_independent=columns_independent(matrix, 0, r_observed),
        windows_independent=consecutive_windows_independent(matrix, r_observed),
        matrix=matrix,
    )
    if not report.consistent:
        logger.warning("Rank prediction disagrees with elimination", **report.to_dict())
    return report


def rank_report_double(
    H1: RotationMatrix, H2: RotationMatrix, f1: Generator, f2: Generator, m: int
) -> DoubleRankReport:
    """Predict the rank of the double ideal matrix and check it.

    Raises:
        NotSquarefree: phi1 or phi2 has a repeated root
        FieldMismatch: rotations over different fields
    """
    require_squarefree(H1, H2)
    p1 = generator_polynomial(H1, f1)
    p2 = generator_polynomial(H2, f2)
    matrix = build_double_ideal(H1, H2, p1, p2, m)

    phi3 = poly_gcd(H1.phi, H2.phi)
    g1 = poly_gcd(p1, H1.phi)
    g2 = poly_gcd(p2, H2.phi)
    g12 = poly_gcd(p1 * p2, phi3)
    e1, e2 = _degree(g1), _degree(g2)
    e = _degree(phi3) - _degree(g12)
    d = e1 + e2 + e
    d_poly = (g1 * g2 * phi3).exact_div(g12)

    r_predicted = min(m, H1.n + H2.n - d)
    r_observed = mat_rank(matrix)

    report = DoubleRankReport(
        phi1=H1.phi,
        phi2=H2.phi,
        f1=p1,
        f2=p2,
        m=m,
        phi3=phi3,
        n3=_degree(phi3),
        e1=e1,
        e2=e2,
        e=e,
        d_poly=d_poly,
        d=d,
        r_predicted=r_predicted,
        r_observed=r_observed,
        leading_columns_independent=columns_independent(matrix, 0, r_observed),
        windows_independent=consecutive_windows_independent(matrix, r_observed),
        matrix=matrix,
    )
    if not report.consistent:
        logger.warning("Double rank prediction disagrees with elimination", **report.to_dict())
    return report


def full_rank_criterion(
    H1: RotationMatrix, H2: RotationMatrix, f1: Generator, f2: Generator
) -> bool:
    """True iff the square double ideal matrix (m = n1 + n2) is invertible.

    Equivalent to gcd(f1, phi1) = gcd(f2, phi2) = gcd(phi1, phi2) = 1.
    """
    require_squarefree(H1, H2)
    p1 = generator_polynomial(H1, f1)
    p2 = generator_polynomial(H2, f2)
    return (
        _degree(poly_gcd(p1, H1.phi)) == 0
        and _degree(poly_gcd(p2, H2.phi)) == 0
        and _degree(poly_gcd(H1.phi, H2.phi)) == 0
    )
