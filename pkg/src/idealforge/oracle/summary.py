"""Campaign inputs and results."""

from collections import Counter
from dataclasses import dataclass, field
from typing import Any

from ..algebra import FieldSpec
from ..exceptions import InvalidArgument


@dataclass(frozen=True)
class InstanceSpec:
    """Parameters of a random instance stream.

    Attributes:
        seed: Campaign seed; identical seeds reproduce identical streams
        field: Working field
        n1_max: Max degree of phi (phi1 for double instances, k for codes)
        n2_max: Max degree of phi2 (l for codes)
        m_max: Max column count of ideal matrices
        squarefree_only: When false, moduli may have repeated roots and the
            campaign checks they are refused
        message_dim_max: Cap on k + l - m for code campaigns
        rational_range: Coefficient range [-R, R] over Q
        max_retries: Rejection-sampling bound
    """

    seed: int
    field: FieldSpec
    n1_max: int = 6
    n2_max: int = 5
    m_max: int = 10
    squarefree_only: bool = True
    message_dim_max: int = 8
    rational_range: int = 3
    max_retries: int = 10_000

    def __post_init__(self) -> None:
        bounded = ("n1_max", "n2_max", "m_max", "message_dim_max", "rational_range", "max_retries")
        for name in bounded:
            if getattr(self, name) < 1:
                raise InvalidArgument(f"{name} must be >= 1, got {getattr(self, name)}")

    def to_dict(self) -> dict[str, Any]:
        return {
            "seed": self.seed,
            "field": self.field.tag,
            "n1_max": self.n1_max,
            "n2_max": self.n2_max,
            "m_max": self.m_max,
            "squarefree_only": self.squarefree_only,
            "message_dim_max": self.message_dim_max,
            "rational_range": self.rational_range,
        }


@dataclass
class TrialOutcome:
    """Result of checking one instance."""

    agreed: bool
    predicted: Any
    observed: Any
    regime: str | None = None


@dataclass
class VerificationSummary:
    """Merged result of a campaign; agreements + len(failures) = trials."""

    target: str
    field: str
    seed: int
    trials: int = 0
    agreements: int = 0
    failures: list[dict[str, Any]] = field(default_factory=list)
    regimes: dict[str, int] = field(default_factory=dict)
    elapsed_ms: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, index: int, trial_seed: int, instance: Any, outcome: TrialOutcome) -> None:
        self.trials += 1
        if outcome.regime:
            self.regimes[outcome.regime] = self.regimes.get(outcome.regime, 0) + 1
        if outcome.agreed:
            self.agreements += 1
        else:
            self.failures.append(
                {
                    "index": index,
                    "seed": trial_seed,
                    "instance": instance,
                    "predicted": outcome.predicted,
                    "observed": outcome.observed,
                }
            )

    def record_error(self, index: int, trial_seed: int, instance: Any, error: Exception) -> None:
        self.trials += 1
        self.failures.append(
            {
                "index": index,
                "seed": trial_seed,
                "instance": instance,
                "predicted": None,
                "observed": None,
                "error": f"{type(error).__name__}: {error}",
            }
        )

    def merge(self, other: "VerificationSummary") -> "VerificationSummary":
        """
        Combine two shards of the same campaign (order-independent).

        Shards run concurrently, so elapsed_ms is the longer of the two, not
        their sum. The sharded runner overwrites it with the measured wall time.
        """
        if (self.target, self.field, self.seed) != (other.target, other.field, other.seed):
            raise InvalidArgument("only shards of the same campaign can be merged")
        return VerificationSummary(
            target=self.target,
            field=self.field,
            seed=self.seed,
            trials=self.trials + other.trials,
            agreements=self.agreements + other.agreements,
            failures=sorted(self.failures + other.failures, key=lambda f: f["index"]),
            regimes=dict(Counter(self.regimes) + Counter(other.regimes)),
            elapsed_ms=max(self.elapsed_ms, other.elapsed_ms),
        )

    def to_dict(self, include_elapsed: bool = True) -> dict[str, Any]:
        data: dict[str, Any] = {
            "target": self.target,
            "field": self.field,
            "seed": self.seed,
            "trials": self.trials,
            "agreements": self.agreements,
            "failures": self.failures,
            "regimes": dict(sorted(self.regimes.items())),
        }
        if include_elapsed:
            data["elapsed_ms"] = round(self.elapsed_ms, 3)
        return data
