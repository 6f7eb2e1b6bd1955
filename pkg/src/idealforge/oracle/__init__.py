"""Random instance generators, independent oracles and verification campaigns."""

from .campaigns import Campaign, CampaignMetadata, CampaignRegistry, create_default_registry
from .generators import (
    random_element,
    random_modulus,
    random_monic_poly,
    random_related_pair,
    random_split_poly,
    random_squarefree_multiple,
    random_squarefree_poly,
    random_vector,
    rejection_sample,
)
from .rank import brute_code_dimension, oracle_rank
from .runner import derive_trial_seed, replay_trial, run_campaign, run_campaign_async
from .summary import InstanceSpec, TrialOutcome, VerificationSummary

__all__ = [
    "Campaign",
    "CampaignMetadata",
    "CampaignRegistry",
    "create_default_registry",
    "InstanceSpec",
    "TrialOutcome",
    "VerificationSummary",
    "rejection_sample",
    "random_element",
    "random_vector",
    "random_monic_poly",
    "random_squarefree_poly",
    "random_modulus",
    "random_squarefree_multiple",
    "random_split_poly",
    "random_related_pair",
    "oracle_rank",
    "brute_code_dimension",
    "derive_trial_seed",
    "run_campaign",
    "run_campaign_async",
    "replay_trial",
]
