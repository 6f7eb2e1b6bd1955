"""
Run context for dependency injection.

Holds the loaded configuration and the campaign registry so the CLI and
tests hand one object around instead of reading globals.

Usage:
    context = ForgeContext.create(load_config())
    spec = context.instance_spec(FieldSpec.prime(5), seed=42)
    summary = context.run_campaign("rank", spec, trials=100)
"""

import asyncio
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .algebra import FieldSpec
from .config import Config, load_config, resolve_workers
from .log_handler import get_structured_logger
from .oracle import (
    CampaignRegistry,
    InstanceSpec,
    VerificationSummary,
    create_default_registry,
    run_campaign,
    run_campaign_async,
)

logger = get_structured_logger(__name__, component="context")


@dataclass
class ForgeContext:
    """
    Shared dependencies of one idealforge invocation.

    Attributes:
        config: Configuration loaded from YAML (with environment overrides)
        registry: Campaigns available to ``verify``
        config_path: Where the configuration came from, if anywhere
    """

    config: Config
    registry: CampaignRegistry = field(default_factory=create_default_registry)
    config_path: Path | None = None

    @classmethod
    def create(
        cls, config: Config | None = None, config_path: Path | None = None
    ) -> "ForgeContext":
        """Build a context, loading the configuration when none is given."""
        if config is None:
            config = load_config(str(config_path) if config_path else None)
        context = cls(config=config, config_path=config_path)
        logger.debug(
            "Created ForgeContext",
            campaigns=len(context.registry),
            scan_bound=config.roots.scan_bound,
            enumeration_bound=config.enumeration.bound,
        )
        return context

    @property
    def scan_bound(self) -> int:
        return self.config.roots.scan_bound

    @property
    def enumeration_bound(self) -> int:
        return self.config.enumeration.bound

    def instance_spec(self, field: FieldSpec, **overrides: Any) -> InstanceSpec:
        """InstanceSpec with campaign defaults from the configuration.

        Keyword arguments set to None keep the configured default.
        """
        campaign = self.config.campaign
        values: dict[str, Any] = {
            "seed": campaign.seed,
            "message_dim_max": campaign.message_dim_max,
            "rational_range": campaign.rational_range,
            "max_retries": campaign.max_retries,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return InstanceSpec(field=field, **values)

    def run_campaign(
        self,
        target: str,
        spec: InstanceSpec,
        trials: int | None = None,
        workers: int | None = None,
    ) -> VerificationSummary:
        """Run a campaign, sharded across threads when more than one worker is configured."""
        trials = self.config.campaign.trials if trials is None else trials
        count = resolve_workers(self.config.campaign.workers if workers is None else workers)
        if count == 1:
            return run_campaign(target, spec, trials, registry=self.registry)
        return asyncio.run(
            run_campaign_async(target, spec, trials, workers=count, registry=self.registry)
        )

    def __repr__(self) -> str:
        return (
            f"ForgeContext(campaigns={self.registry.target_ids()}, "
            f"config_path={self.config_path})"
        )
