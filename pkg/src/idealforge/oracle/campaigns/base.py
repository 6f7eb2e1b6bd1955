"""
Base interface for verification campaigns.

A campaign draws random instances and checks one closed-form prediction
against an independent computation. Drawing and checking are separate steps
so that a failing instance can be serialized, and replayed, on its own.
"""

import random
from abc import ABC, abstractmethod
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

from ...algebra import FieldSpec, Polynomial, Value, poly_from_values
from ..summary import InstanceSpec, TrialOutcome


@dataclass
class CampaignMetadata:
    """
    Metadata describing a campaign.

    Attributes:
        target_id: Name used on the command line (e.g. "rank")
        name: Human-readable name
        description: What the campaign checks
        prime_only: Refuses the rationals
        split: Needs moduli that split into distinct linear factors, so the
            field must be small enough to scan for roots
        aliases: Other names accepted for the target (e.g. "thm2.5")
    """

    target_id: str
    name: str
    description: str
    prime_only: bool = False
    split: bool = False
    aliases: tuple[str, ...] = ()


class Campaign(ABC):
    """Abstract base class for all campaigns."""

    @abstractmethod
    def get_metadata(self) -> CampaignMetadata:
        """Static description of the campaign."""

    @abstractmethod
    def draw(self, spec: InstanceSpec, rng: random.Random) -> dict[str, Any]:
        """
        Draw one instance.

        Returns:
            JSON-safe description of the instance (coefficients as strings)
        """

    @abstractmethod
    def check(self, field: FieldSpec, instance: dict[str, Any]) -> TrialOutcome:
        """
        Run predictor and oracle on one instance.

        Exceptions escaping this method are recorded as failures by the runner.
        """


def poly_out(p: Polynomial) -> list[str]:
    return p.to_strings()


def vector_out(field: FieldSpec, values: Sequence[Value]) -> list[str]:
    return [field.format(v) for v in values]


def poly_in(field: FieldSpec, values: Sequence[str]) -> Polynomial:
    return poly_from_values(field, values)
