"""
Campaign runner.

Every trial draws from its own RNG, seeded from (campaign seed, target, index),
so a trial is reproducible on its own and sharding the index range across
workers cannot change the merged summary.
"""

import asyncio
import hashlib
import random
import time
from collections.abc import Iterable
from typing import Any

from ..config import get_scan_bound
from ..exceptions import InvalidArgument
from ..log_handler import get_structured_logger
from .campaigns import Campaign, CampaignRegistry, create_default_registry
from .summary import InstanceSpec, TrialOutcome, VerificationSummary

logger = get_structured_logger(__name__, component="runner")


def derive_trial_seed(seed: int, target: str, index: int) -> int:
    """64-bit seed of one trial."""
    digest = hashlib.blake2b(f"{seed}:{target}:{index}".encode(), digest_size=8).digest()
    return int.from_bytes(digest, "big")


def _resolve(what: "str | Campaign", registry: CampaignRegistry | None) -> Campaign:
    if isinstance(what, Campaign):
        return what
    if registry is None:
        registry = create_default_registry()
    return registry.require(what)


def _check_compatible(campaign: Campaign, spec: InstanceSpec) -> None:
    metadata = campaign.get_metadata()
    if metadata.prime_only and not spec.field.is_prime_field:
        raise InvalidArgument(
            f"campaign '{metadata.target_id}' needs a prime field, got {spec.field}"
        )
    modulus = spec.field.modulus
    if metadata.split and modulus is not None and modulus > (bound := get_scan_bound()):
        raise InvalidArgument(
            f"campaign '{metadata.target_id}' scans {spec.field} for roots, "
            f"which exceeds the scan bound {bound}"
        )


def _run_indices(
    campaign: Campaign, spec: InstanceSpec, indices: Iterable[int]
) -> VerificationSummary:
    """Run the given trial indices and return their partial summary."""
    target = campaign.get_metadata().target_id
    summary = VerificationSummary(target=target, field=spec.field.tag, seed=spec.seed)
    started = time.perf_counter()

    for index in indices:
        trial_seed = derive_trial_seed(spec.seed, target, index)
        instance: Any = None
        try:
            instance = campaign.draw(spec, random.Random(trial_seed))
            outcome = campaign.check(spec.field, instance)
        except Exception as e:
            logger.warning(
                "Trial raised",
                target=target,
                index=index,
                seed=trial_seed,
                error=f"{type(e).__name__}: {e}",
            )
            summary.record_error(index, trial_seed, instance, e)
            continue

        summary.record(index, trial_seed, instance, outcome)
        if not outcome.agreed:
            logger.warning(
                "Prediction disagreed",
                target=target,
                index=index,
                seed=trial_seed,
                predicted=outcome.predicted,
                observed=outcome.observed,
            )

    summary.elapsed_ms = (time.perf_counter() - started) * 1000
    return summary


def run_campaign(
    what: "str | Campaign",
    spec: InstanceSpec,
    trials: int,
    registry: CampaignRegistry | None = None,
) -> VerificationSummary:
    """
    Run ``trials`` random instances of a campaign in the calling thread.

    Args:
        what: Target id or a Campaign instance
        spec: Instance stream parameters
        trials: Number of trials (>= 1)
        registry: Where to look up target ids (default: built-in campaigns)

    Raises:
        InvalidArgument: trials < 1, unknown target, or a prime-only target over Q
    """
    if trials < 1:
        raise InvalidArgument(f"trials must be >= 1, got {trials}")
    campaign = _resolve(what, registry)
    _check_compatible(campaign, spec)

    target = campaign.get_metadata().target_id
    logger.info("Campaign started", target=target, field=spec.field.tag, trials=trials)
    summary = _run_indices(campaign, spec, range(trials))
    logger.info(
        "Campaign finished",
        target=target,
        agreements=summary.agreements,
        failures=len(summary.failures),
        elapsed_ms=round(summary.elapsed_ms, 1),
    )
    return summary


def _shards(trials: int, workers: int) -> list[range]:
    """Contiguous, near-equal index ranges covering 0..trials-1."""
    workers = max(1, min(workers, trials))
    size, extra = divmod(trials, workers)
    shards: list[range] = []
    start = 0
    for w in range(workers):
        stop = start + size + (1 if w < extra else 0)
        shards.append(range(start, stop))
        start = stop
    return shards


async def run_campaign_async(
    what: "str | Campaign",
    spec: InstanceSpec,
    trials: int,
    workers: int = 1,
    registry: CampaignRegistry | None = None,
) -> VerificationSummary:
    """
    Shard a campaign across worker threads and merge the partial summaries.

    The merged summary equals ``run_campaign`` with the same arguments except
    for ``elapsed_ms``.
    """
    if trials < 1:
        raise InvalidArgument(f"trials must be >= 1, got {trials}")
    if workers < 1:
        raise InvalidArgument(f"workers must be >= 1, got {workers}")
    campaign = _resolve(what, registry)
    _check_compatible(campaign, spec)

    target = campaign.get_metadata().target_id
    shards = _shards(trials, workers)
    semaphore = asyncio.Semaphore(workers)
    started = time.perf_counter()
    logger.info(
        "Campaign started",
        target=target,
        field=spec.field.tag,
        trials=trials,
        workers=len(shards),
    )

    async def run_shard(indices: range) -> VerificationSummary:
        async with semaphore:
            return await asyncio.to_thread(_run_indices, campaign, spec, indices)

    parts = await asyncio.gather(*[run_shard(s) for s in shards])
    summary = parts[0]
    for part in parts[1:]:
        summary = summary.merge(part)
    summary.elapsed_ms = (time.perf_counter() - started) * 1000

    logger.info(
        "Campaign finished",
        target=target,
        agreements=summary.agreements,
        failures=len(summary.failures),
        elapsed_ms=round(summary.elapsed_ms, 1),
    )
    return summary


def replay_trial(
    what: "str | Campaign",
    spec: InstanceSpec,
    index: int,
    registry: CampaignRegistry | None = None,
) -> tuple[dict[str, Any], TrialOutcome]:
    """Redraw and recheck a single trial; exceptions propagate."""
    campaign = _resolve(what, registry)
    _check_compatible(campaign, spec)
    target = campaign.get_metadata().target_id
    instance = campaign.draw(spec, random.Random(derive_trial_seed(spec.seed, target, index)))
    return instance, campaign.check(spec.field, instance)
