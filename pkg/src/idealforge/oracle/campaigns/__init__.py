"""
Verification campaigns.

Each campaign implements the Campaign interface: it draws a random instance
and checks a closed-form prediction against an independent computation.
"""

from .base import Campaign, CampaignMetadata
from .registry import CampaignRegistry, create_default_registry
from .targets import (
    BUILTIN_CAMPAIGNS,
    CodeDimensionCampaign,
    DoubleRankCampaign,
    FullRankCampaign,
    GeneratorRowsCampaign,
    KernelCampaign,
    RankCampaign,
    VandermondeCampaign,
)

__all__ = [
    "Campaign",
    "CampaignMetadata",
    "CampaignRegistry",
    "create_default_registry",
    "BUILTIN_CAMPAIGNS",
    "RankCampaign",
    "DoubleRankCampaign",
    "FullRankCampaign",
    "KernelCampaign",
    "VandermondeCampaign",
    "CodeDimensionCampaign",
    "GeneratorRowsCampaign",
]
