"""Built-in verification campaigns.

Each campaign pairs a closed-form prediction with a computation that does
not use it: gcd-degree rank formulas against two eliminators, kernel
families against rank-nullity, Vandermonde factorizations against direct
products, and code dimensions against brute-force spans.
"""

import random
from collections.abc import Iterable
from typing import Any

from ...algebra import FieldSpec, Polynomial, find_roots, mat_rank
from ...codes import (
    QuasiCyclicCode,
    build_code,
    code_span_reference,
    generator_matrix_full,
    generator_matrix_minimal,
    isomorphism_check,
    kernel_check,
    shift_closure_check,
)
from ...exceptions import ExhaustedRetries, NotSquarefree, SpanDeficit
from ...ideal import (
    build_double_ideal,
    build_rotation,
    full_rank_criterion,
    kernel_vectors_square,
    rank_report_double,
    rank_report_single,
    verify_double_eigen_identity,
    verify_double_vandermonde_identity,
    verify_eigenvectors,
    verify_row_eigen_identity,
    verify_vandermonde_identity,
)
from ...log_handler import get_structured_logger
from ..generators import (
    random_modulus,
    random_related_pair,
    random_split_poly,
    random_squarefree_poly,
    random_vector,
)
from ..rank import brute_code_dimension, oracle_rank
from ..summary import InstanceSpec, TrialOutcome
from .base import Campaign, CampaignMetadata, poly_in, poly_out, vector_out

logger = get_structured_logger(__name__, component="campaigns")

# Messages of at most this many elements are checked exhaustively for kernel membership
KERNEL_SCAN_LIMIT = 1024
KERNEL_SAMPLES = 64
# Code instances keep q^(k + l - m) at or below this
CODE_ENUMERATION_LIMIT = 1024
CODE_SHAPE_ATTEMPTS = 16


def _draw_pair(
    spec: InstanceSpec, rng: random.Random, n1: int, n2: int
) -> tuple[Polynomial, Polynomial]:
    """Two moduli; half the time they share a factor of random degree."""
    field = spec.field
    if not spec.squarefree_only:
        return (
            random_modulus(field, n1, rng, spec.max_retries, spec.rational_range),
            random_modulus(field, n2, rng, spec.max_retries, spec.rational_range),
        )
    shared = rng.randint(1, min(n1, n2)) if rng.random() < 0.5 else 0
    pair = _related_pair(spec, rng, n1, n2, range(shared, -1, -1))
    if pair is None:
        raise ExhaustedRetries(f"no squarefree moduli of degrees ({n1}, {n2}) over {field}")
    return pair


def _related_pair(
    spec: InstanceSpec, rng: random.Random, n1: int, n2: int, shared_degrees: Iterable[int]
) -> tuple[Polynomial, Polynomial] | None:
    """First realizable shape among ``shared_degrees``; None when the field has none."""
    for shared in shared_degrees:
        try:
            return random_related_pair(
                spec.field, n1, n2, shared, rng, spec.max_retries, spec.rational_range
            )
        except ExhaustedRetries:
            logger.debug("Falling back from shared degree", n1=n1, n2=n2, shared=shared)
    return None


def _draw_modulus(spec: InstanceSpec, rng: random.Random, n: int) -> Polynomial:
    if spec.squarefree_only:
        return random_squarefree_poly(spec.field, n, rng, spec.max_retries, spec.rational_range)
    return random_modulus(spec.field, n, rng, spec.max_retries, spec.rational_range)


def _split_degree_cap(field: FieldSpec, n_max: int) -> int:
    return n_max if field.modulus is None else min(n_max, field.modulus - 1)


def _refused(error: NotSquarefree) -> TrialOutcome:
    return TrialOutcome(True, "NotSquarefree", str(error), regime="not_squarefree")


class RankCampaign(Campaign):
    """min(m, n - deg gcd(f, phi)) against elimination, plus window independence."""

    def get_metadata(self) -> CampaignMetadata:
        return CampaignMetadata(
            target_id="rank",
            name="Generalized ideal matrix rank",
            description="Rank from deg gcd(f, phi) vs. two eliminators and window independence",
            aliases=("thm2.5",),
        )

    def draw(self, spec: InstanceSpec, rng: random.Random) -> dict[str, Any]:
        n = rng.randint(1, spec.n1_max)
        phi = _draw_modulus(spec, rng, n)
        return {
            "phi": poly_out(phi),
            "f": vector_out(spec.field, random_vector(spec.field, n, rng, spec.rational_range)),
            "m": rng.randint(1, spec.m_max),
        }

    def check(self, field: FieldSpec, instance: dict[str, Any]) -> TrialOutcome:
        H = build_rotation(poly_in(field, instance["phi"]))
        f = field.vector(instance["f"])
        try:
            report = rank_report_single(H, f, instance["m"])
        except NotSquarefree as e:
            return _refused(e)
        second = oracle_rank(report.matrix)
        return TrialOutcome(
            agreed=report.consistent and second == report.r_observed,
            predicted=report.r_predicted,
            observed={
                "rank": report.r_observed,
                "oracle_rank": second,
                "leading_columns_independent": report.leading_columns_independent,
                "windows_independent": report.windows_independent,
            },
            regime="full_column_rank" if report.r_predicted == instance["m"] else "deficient",
        )


class DoubleRankCampaign(Campaign):
    """min(m, n1 + n2 - d) with d = e1 + e2 + e against elimination."""

    def get_metadata(self) -> CampaignMetadata:
        return CampaignMetadata(
            target_id="double-rank",
            name="Double ideal matrix rank",
            description="Rank from e1 + e2 + e vs. elimination and window independence",
            aliases=("thm2.11",),
        )

    def draw(self, spec: InstanceSpec, rng: random.Random) -> dict[str, Any]:
        n1, n2 = rng.randint(1, spec.n1_max), rng.randint(1, spec.n2_max)
        phi1, phi2 = _draw_pair(spec, rng, n1, n2)
        return {
            "phi1": poly_out(phi1),
            "phi2": poly_out(phi2),
            "f1": vector_out(spec.field, random_vector(spec.field, n1, rng, spec.rational_range)),
            "f2": vector_out(spec.field, random_vector(spec.field, n2, rng, spec.rational_range)),
            "m": rng.randint(1, spec.m_max),
        }

    def check(self, field: FieldSpec, instance: dict[str, Any]) -> TrialOutcome:
        H1 = build_rotation(poly_in(field, instance["phi1"]))
        H2 = build_rotation(poly_in(field, instance["phi2"]))
        try:
            report = rank_report_double(
                H1, H2, field.vector(instance["f1"]), field.vector(instance["f2"]), instance["m"]
            )
        except NotSquarefree as e:
            return _refused(e)
        second = oracle_rank(report.matrix)
        return TrialOutcome(
            agreed=report.consistent and second == report.r_observed,
            predicted={"r": report.r_predicted, "d": report.d},
            observed={
                "rank": report.r_observed,
                "oracle_rank": second,
                "d_poly_degree": len(report.d_poly.values) - 1,
                "leading_columns_independent": report.leading_columns_independent,
                "windows_independent": report.windows_independent,
            },
            regime="coprime" if report.n3 == 0 else "shared_factor",
        )


class FullRankCampaign(Campaign):
    """gcd criterion for invertibility of the square double ideal matrix, both directions."""

    def get_metadata(self) -> CampaignMetadata:
        return CampaignMetadata(
            target_id="full-rank",
            name="Square double ideal matrix invertibility",
            description="gcd(f1, phi1) = gcd(f2, phi2) = gcd(phi1, phi2) = 1 iff full rank",
            aliases=("cor2.15",),
        )

    def draw(self, spec: InstanceSpec, rng: random.Random) -> dict[str, Any]:
        instance = DoubleRankCampaign().draw(spec, rng)
        del instance["m"]
        return instance

    def check(self, field: FieldSpec, instance: dict[str, Any]) -> TrialOutcome:
        H1 = build_rotation(poly_in(field, instance["phi1"]))
        H2 = build_rotation(poly_in(field, instance["phi2"]))
        f1, f2 = field.vector(instance["f1"]), field.vector(instance["f2"])
        try:
            criterion = full_rank_criterion(H1, H2, f1, f2)
        except NotSquarefree as e:
            return _refused(e)
        size = H1.n + H2.n
        rank = mat_rank(build_double_ideal(H1, H2, f1, f2, size))
        return TrialOutcome(
            agreed=criterion == (rank == size),
            predicted=criterion,
            observed={"rank": rank, "size": size},
            regime="square_full_rank" if criterion else "square_singular",
        )


class KernelCampaign(Campaign):
    """Kernel families of the square double ideal matrix against rank-nullity."""

    def get_metadata(self) -> CampaignMetadata:
        return CampaignMetadata(
            target_id="kernel",
            name="Square double ideal matrix kernel",
            description="Emitted kernel vectors annihilate D^T and count n1 + n2 - rank",
            split=True,
            aliases=("cor2.14",),
        )

    def draw(self, spec: InstanceSpec, rng: random.Random) -> dict[str, Any]:
        field = spec.field
        cap1 = _split_degree_cap(field, spec.n1_max)
        cap2 = _split_degree_cap(field, spec.n2_max)
        n1, n2 = rng.randint(1, cap1), rng.randint(1, cap2)
        phi1 = random_split_poly(field, n1, rng, spec.rational_range)
        roots1 = find_roots(phi1).roots
        shared = rng.sample(list(roots1), rng.randint(0, min(n1, n2)))
        phi2 = random_split_poly(field, n2, rng, spec.rational_range, shared=shared)
        generators = []
        for phi, n in ((phi1, n1), (phi2, n2)):
            if rng.random() < 0.5:
                # Vanish on some roots so the first two kernel families are populated
                roots = find_roots(phi).roots
                g = Polynomial.from_roots(field, rng.sample(list(roots), rng.randint(0, n - 1)))
                generators.append(vector_out(field, g.to_vector(n)))
            else:
                values = random_vector(field, n, rng, spec.rational_range)
                generators.append(vector_out(field, values))
        return {
            "phi1": poly_out(phi1),
            "phi2": poly_out(phi2),
            "f1": generators[0],
            "f2": generators[1],
        }

    def check(self, field: FieldSpec, instance: dict[str, Any]) -> TrialOutcome:
        phi1, phi2 = poly_in(field, instance["phi1"]), poly_in(field, instance["phi2"])
        H1, H2 = build_rotation(phi1), build_rotation(phi2)
        f1, f2 = field.vector(instance["f1"]), field.vector(instance["f2"])
        size = H1.n + H2.n
        vectors = kernel_vectors_square(H1, H2, f1, f2, find_roots(phi1), find_roots(phi2))
        report = rank_report_double(H1, H2, f1, f2, size)
        return TrialOutcome(
            agreed=len(vectors) == report.d and len(vectors) + report.r_observed == size,
            predicted=report.d,
            observed={"kernel_vectors": len(vectors), "rank": report.r_observed, "size": size},
            regime="trivial_kernel" if not vectors else "nontrivial_kernel",
        )


class VandermondeCampaign(Campaign):
    """Eigenvector and Vandermonde factorization identities over split moduli."""

    def get_metadata(self) -> CampaignMetadata:
        return CampaignMetadata(
            target_id="vandermonde",
            name="Vandermonde factorization",
            description="H^T eigenvectors and [H*(f)]^T V = V diag(f(w)), single and double",
            split=True,
            aliases=("lemma2.4",),
        )

    def draw(self, spec: InstanceSpec, rng: random.Random) -> dict[str, Any]:
        field = spec.field
        n1 = rng.randint(1, _split_degree_cap(field, spec.n1_max))
        n2 = rng.randint(1, _split_degree_cap(field, spec.n2_max))
        phi1 = random_split_poly(field, n1, rng, spec.rational_range)
        phi2 = random_split_poly(field, n2, rng, spec.rational_range)
        return {
            "phi1": poly_out(phi1),
            "phi2": poly_out(phi2),
            "f1": vector_out(field, random_vector(field, n1, rng, spec.rational_range)),
            "f2": vector_out(field, random_vector(field, n2, rng, spec.rational_range)),
            "m": rng.randint(1, spec.m_max),
        }

    def check(self, field: FieldSpec, instance: dict[str, Any]) -> TrialOutcome:
        phi1, phi2 = poly_in(field, instance["phi1"]), poly_in(field, instance["phi2"])
        H1, H2 = build_rotation(phi1), build_rotation(phi2)
        roots1, roots2 = find_roots(phi1), find_roots(phi2)
        f1, f2 = field.vector(instance["f1"]), field.vector(instance["f2"])
        m = instance["m"]
        checks = {
            "eigenvectors": verify_eigenvectors(H1, roots1) and verify_eigenvectors(H2, roots2),
            "row_eigen": verify_row_eigen_identity(H1, f1, m, roots1),
            "vandermonde": verify_vandermonde_identity(H1, f1, m, roots1)
            and verify_vandermonde_identity(H2, f2, m, roots2),
            "double_vandermonde": verify_double_vandermonde_identity(
                H1, H2, f1, f2, m, roots1, roots2
            ),
            "double_eigen": verify_double_eigen_identity(H1, H2, f1, f2, m, roots1, roots2),
        }
        return TrialOutcome(
            agreed=all(checks.values()),
            predicted=True,
            observed=checks,
            regime="square" if m == H1.n else "rectangular",
        )


def _enumerable_dim(field: FieldSpec, message_dim_max: int) -> int:
    """Largest message dimension whose message space stays within CODE_ENUMERATION_LIMIT."""
    assert field.modulus is not None
    dim = 1
    while dim < message_dim_max and field.modulus ** (dim + 1) <= CODE_ENUMERATION_LIMIT:
        dim += 1
    return dim


def _draw_code_moduli(
    spec: InstanceSpec, rng: random.Random, cap: int
) -> tuple[Polynomial, Polynomial]:
    """Squarefree moduli with k + l - deg gcd <= cap, redrawing shapes the field cannot realize."""
    for _ in range(CODE_SHAPE_ATTEMPTS):
        k = rng.randint(1, min(spec.n1_max, cap))
        l = rng.randint(1, min(spec.n2_max, cap))  # noqa: E741
        # A common factor of degree >= floor keeps k + l - m <= cap
        floor = max(0, k + l - cap)
        if floor:
            shared = rng.randint(floor, min(k, l))
        else:
            shared = rng.randint(1, min(k, l)) if rng.random() < 0.5 else 0
        fallbacks = [s for s in range(min(k, l), floor - 1, -1) if s != shared]
        pair = _related_pair(spec, rng, k, l, [shared, *fallbacks])
        if pair is not None:
            return pair
    # phi1 = phi2 exists in every degree
    phi = _draw_modulus(spec, rng, rng.randint(1, min(spec.n1_max, spec.n2_max, cap)))
    return phi, phi


def _draw_code_instance(spec: InstanceSpec, rng: random.Random) -> dict[str, Any]:
    """Moduli, then generators, with k + l - m kept enumerable."""
    field = spec.field
    cap = _enumerable_dim(field, spec.message_dim_max)
    if spec.squarefree_only:
        phi1, phi2 = _draw_code_moduli(spec, rng, cap)
        k, l = len(phi1.values) - 1, len(phi2.values) - 1  # noqa: E741
    else:
        k = rng.randint(1, max(1, min(spec.n1_max, cap - 1)))
        l = rng.randint(1, max(1, min(spec.n2_max, cap - k)))  # noqa: E741
        phi1 = random_modulus(field, k, rng, spec.max_retries)
        if k + l > cap:
            l, phi2 = k, phi1  # noqa: E741
        else:
            phi2 = random_modulus(field, l, rng, spec.max_retries)
    return {
        "phi1": poly_out(phi1),
        "phi2": poly_out(phi2),
        "a": vector_out(field, random_vector(field, k, rng)),
        "b": vector_out(field, random_vector(field, l, rng)),
    }


def _code_from(field: FieldSpec, instance: dict[str, Any]) -> QuasiCyclicCode:
    return build_code(
        field,
        poly_in(field, instance["phi1"]),
        poly_in(field, instance["phi2"]),
        poly_in(field, instance["a"]),
        poly_in(field, instance["b"]),
    )


class CodeDimensionCampaign(Campaign):
    """deg h against the brute-force span, plus kernel, isomorphism and shift closure."""

    def get_metadata(self) -> CampaignMetadata:
        return CampaignMetadata(
            target_id="code-dimension",
            name="Quasi-cyclic code dimension",
            description="dim = deg h = k + l - d vs. brute-force span; ker = <h>; <g> iso code",
            prime_only=True,
            aliases=("thm3.2",),
        )

    def draw(self, spec: InstanceSpec, rng: random.Random) -> dict[str, Any]:
        instance = _draw_code_instance(spec, rng)
        instance["kernel_seed"] = rng.getrandbits(32)
        return instance

    def check(self, field: FieldSpec, instance: dict[str, Any]) -> TrialOutcome:
        try:
            code = _code_from(field, instance)
        except NotSquarefree as e:
            return _refused(e)
        assert field.modulus is not None
        brute = brute_code_dimension(code)

        ring = code.message_ring
        exhaustive = ring.size() <= KERNEL_SCAN_LIMIT
        if exhaustive:
            messages = list(ring.elements())
        else:
            rng = random.Random(instance["kernel_seed"])
            messages = [
                Polynomial(field, random_vector(field, code.message_dim, rng))
                for _ in range(KERNEL_SAMPLES)
            ] + [code.h_bar, Polynomial.zero(field)]
        kernel_hits = sum(1 for f in messages if kernel_check(code, ring.reduce(f)))
        # Over every message the kernel <h> has q^(k+l-m-dim) elements
        kernel_ok = (
            kernel_hits == field.modulus ** (code.message_dim - code.dim) if exhaustive else True
        )

        checks = {
            "degree_identity": code.degree_identity_holds,
            "isomorphism": isomorphism_check(code),
            "shift_closed": shift_closure_check(code),
            "kernel_size": kernel_ok,
        }
        return TrialOutcome(
            agreed=brute == code.dim and all(checks.values()),
            predicted={"dim": code.dim, "k_plus_l_minus_d": code.k + code.l - code.d_cor},
            observed=checks | {"brute_dimension": brute, "kernel_hits": kernel_hits},
            regime="zero_code" if code.dim == 0 else "nonzero_code",
        )


class GeneratorRowsCampaign(Campaign):
    """Block generator matrix layout and the consecutive-row generating property."""

    def get_metadata(self) -> CampaignMetadata:
        return CampaignMetadata(
            target_id="generator-rows",
            name="Generator matrix windows",
            description="Block rows equal encode(x^s); every r-row window spans the code",
            prime_only=True,
            aliases=("cor3.2",),
        )

    def draw(self, spec: InstanceSpec, rng: random.Random) -> dict[str, Any]:
        return _draw_code_instance(spec, rng)

    def check(self, field: FieldSpec, instance: dict[str, Any]) -> TrialOutcome:
        try:
            code = _code_from(field, instance)
        except NotSquarefree as e:
            return _refused(e)
        full = generator_matrix_full(code)
        full_rank = mat_rank(full)
        predicted = {"r": code.r, "dim": code.dim, "rows_available": code.rows_available}

        if code.span_deficit:
            try:
                generator_matrix_minimal(code, 0)
            except SpanDeficit:
                detected = True
            else:
                detected = False
            return TrialOutcome(
                agreed=detected and full_rank == code.r,
                predicted=predicted,
                observed={"rank": full_rank, "span_deficit_raised": detected},
                regime="span_deficit",
            )

        reference = code_span_reference(code)
        windows = code.rows_available - code.r + 1
        for start in range(windows):
            generator_matrix_minimal(code, start, reference=reference)
        return TrialOutcome(
            agreed=full_rank == code.r,
            predicted=predicted,
            observed={"rank": full_rank, "windows_checked": windows},
            regime="zero_code" if code.dim == 0 else "spanning",
        )


BUILTIN_CAMPAIGNS: tuple[type[Campaign], ...] = (
    RankCampaign,
    DoubleRankCampaign,
    FullRankCampaign,
    KernelCampaign,
    VandermondeCampaign,
    CodeDimensionCampaign,
    GeneratorRowsCampaign,
)
