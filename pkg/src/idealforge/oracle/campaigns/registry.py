"""Campaign registry"""

from ...exceptions import InvalidArgument
from ...log_handler import get_structured_logger
from .base import Campaign

logger = get_structured_logger(__name__, component="registry")


def _alias_key(name: str) -> str:
    # "Thm2_5" and "thm2.5" name the same target
    return name.strip().lower().replace("_", ".")


class CampaignRegistry:
    """
    Registry of verification campaigns, keyed by target id.

    Aliases resolve to the target id, so summaries and trial seeds only ever
    see the canonical name.
    """

    def __init__(self) -> None:
        self._campaigns: dict[str, Campaign] = {}
        self._aliases: dict[str, str] = {}

    def register(self, campaign: Campaign) -> None:
        """
        Register a campaign.

        Raises:
            InvalidArgument: If the target id or one of its aliases is already taken
        """
        metadata = campaign.get_metadata()
        target_id = metadata.target_id

        if target_id in self._campaigns or _alias_key(target_id) in self._aliases:
            raise InvalidArgument(f"Campaign '{target_id}' is already registered")
        for alias in metadata.aliases:
            owner = self._aliases.get(_alias_key(alias)) or (
                alias if alias in self._campaigns else None
            )
            if owner is not None:
                raise InvalidArgument(f"Alias '{alias}' of '{target_id}' is taken by '{owner}'")

        self._campaigns[target_id] = campaign
        for alias in metadata.aliases:
            self._aliases[_alias_key(alias)] = target_id
        logger.debug(
            "Registered campaign",
            name=metadata.name,
            target_id=target_id,
            aliases=list(metadata.aliases),
        )

    def resolve(self, name: str) -> str:
        """Target id for a target id or alias; unknown names are returned unchanged."""
        if name in self._campaigns:
            return name
        return self._aliases.get(_alias_key(name), name)

    def unregister(self, target_id: str) -> None:
        target_id = self.resolve(target_id)
        if target_id in self._campaigns:
            del self._campaigns[target_id]
            self._aliases = {a: t for a, t in self._aliases.items() if t != target_id}
            logger.debug("Unregistered campaign", target_id=target_id)
        else:
            logger.warning("Attempted to unregister unknown campaign", target_id=target_id)

    def get(self, target_id: str) -> Campaign | None:
        return self._campaigns.get(self.resolve(target_id))

    def require(self, target_id: str) -> Campaign:
        """
        Get a campaign by target id or alias.

        Raises:
            InvalidArgument: If no such campaign exists
        """
        campaign = self.get(target_id)
        if campaign is None:
            known = ", ".join(self._describe(t) for t in sorted(self._campaigns))
            raise InvalidArgument(f"unknown target '{target_id}' (known: {known})")
        return campaign

    def _describe(self, target_id: str) -> str:
        aliases = self._campaigns[target_id].get_metadata().aliases
        return f"{target_id} ({', '.join(aliases)})" if aliases else target_id

    def get_all(self) -> list[Campaign]:
        return list(self._campaigns.values())

    def target_ids(self) -> list[str]:
        return list(self._campaigns)

    def __len__(self) -> int:
        return len(self._campaigns)

    def __contains__(self, target_id: str) -> bool:
        return self.resolve(target_id) in self._campaigns


def create_default_registry() -> CampaignRegistry:
    """Registry holding every built-in campaign."""
    from .targets import BUILTIN_CAMPAIGNS

    registry = CampaignRegistry()
    for campaign_cls in BUILTIN_CAMPAIGNS:
        registry.register(campaign_cls())
    return registry
