"""Mock campaign for testing"""

import random
from typing import Any

from idealforge.algebra import FieldSpec
from idealforge.oracle.campaigns import Campaign, CampaignMetadata
from idealforge.oracle.summary import InstanceSpec, TrialOutcome


class MockCampaign(Campaign):
    """
    Mock campaign for testing.

    Draws a single random integer per trial and can be configured to disagree
    or raise on chosen trials.
    """

    def __init__(
        self,
        target_id: str = "mock",
        name: str = "Mock Campaign",
        disagree_when: int | None = None,
        fail_on_check: bool = False,
        prime_only: bool = False,
        split: bool = False,
        aliases: tuple[str, ...] = (),
    ):
        """
        Initialize mock campaign.

        Args:
            target_id: Target identifier
            name: Human-readable name
            disagree_when: Report disagreement when the drawn value is divisible by this
            fail_on_check: Raise from check()
            prime_only: Refuse the rationals
            split: Mark the campaign as scanning the field for roots
            aliases: Other names for the target
        """
        self._target_id = target_id
        self._name = name
        self._disagree_when = disagree_when
        self._fail_on_check = fail_on_check
        self._prime_only = prime_only
        self._split = split
        self._aliases = aliases
        self.check_count = 0

    def get_metadata(self) -> CampaignMetadata:
        """Return mock metadata"""
        return CampaignMetadata(
            target_id=self._target_id,
            name=self._name,
            description=f"Mock campaign for testing ({self._target_id})",
            prime_only=self._prime_only,
            split=self._split,
            aliases=self._aliases,
        )

    def draw(self, spec: InstanceSpec, rng: random.Random) -> dict[str, Any]:
        """Draw one integer in [0, 100)"""
        return {"value": rng.randrange(100)}

    def check(self, field: FieldSpec, instance: dict[str, Any]) -> TrialOutcome:
        """Agree unless configured otherwise"""
        self.check_count += 1
        if self._fail_on_check:
            raise RuntimeError("Mock check failure")
        value = instance["value"]
        agreed = self._disagree_when is None or value % self._disagree_when != 0
        return TrialOutcome(
            agreed=agreed,
            predicted=value,
            observed=value if agreed else -1,
            regime="even" if value % 2 == 0 else "odd",
        )
