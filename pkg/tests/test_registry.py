"""Tests for the campaign registry"""

import pytest

from idealforge.exceptions import InvalidArgument
from idealforge.oracle.campaigns import BUILTIN_CAMPAIGNS, CampaignRegistry, create_default_registry
from tests.mock_campaign import MockCampaign


class TestCampaignRegistry:
    """Test registration and lookup"""

    def test_register_and_get(self):
        """Test a registered campaign is found by its target id"""
        registry = CampaignRegistry()
        campaign = MockCampaign(target_id="one")
        registry.register(campaign)

        assert registry.get("one") is campaign
        assert registry.require("one") is campaign
        assert "one" in registry
        assert len(registry) == 1

    def test_duplicate_registration(self):
        """Test registering the same target id twice fails"""
        registry = CampaignRegistry()
        registry.register(MockCampaign(target_id="dup"))
        with pytest.raises(InvalidArgument, match="already registered"):
            registry.register(MockCampaign(target_id="dup"))

    def test_unknown_target(self):
        """Test require lists the known targets"""
        registry = CampaignRegistry()
        registry.register(MockCampaign(target_id="known"))
        assert registry.get("nope") is None
        with pytest.raises(InvalidArgument, match="known"):
            registry.require("nope")

    def test_unregister(self):
        """Test unregistering removes the campaign and ignores unknown ids"""
        registry = CampaignRegistry()
        registry.register(MockCampaign(target_id="gone"))
        registry.unregister("gone")
        registry.unregister("never-there")
        assert len(registry) == 0

    def test_empty_registry_is_falsy_but_usable(self):
        """Test an empty registry still answers lookups"""
        registry = CampaignRegistry()
        assert not registry
        assert registry.get_all() == []


class TestDefaultRegistry:
    """Test the built-in campaign set"""

    def test_builtin_targets(self):
        """Test every built-in target is registered in order"""
        registry = create_default_registry()
        assert registry.target_ids() == [
            "rank",
            "double-rank",
            "full-rank",
            "kernel",
            "vandermonde",
            "code-dimension",
            "generator-rows",
        ]
        assert len(registry) == len(BUILTIN_CAMPAIGNS)

    def test_metadata_flags(self):
        """Test split and prime-only targets are marked"""
        registry = create_default_registry()
        assert registry.require("kernel").get_metadata().split
        assert registry.require("vandermonde").get_metadata().split
        assert registry.require("code-dimension").get_metadata().prime_only
        assert registry.require("generator-rows").get_metadata().prime_only
        assert not registry.require("rank").get_metadata().prime_only

    @pytest.mark.parametrize(
        "alias,target",
        [
            ("thm2.5", "rank"),
            ("thm2.11", "double-rank"),
            ("cor2.15", "full-rank"),
            ("cor2.14", "kernel"),
            ("lemma2.4", "vandermonde"),
            ("thm3.2", "code-dimension"),
            ("cor3.2", "generator-rows"),
        ],
    )
    def test_numbered_aliases(self, alias, target):
        """Test numbered target names resolve to the built-in campaigns"""
        registry = create_default_registry()
        assert registry.resolve(alias) == target
        assert registry.require(alias) is registry.require(target)
        assert alias in registry


class TestAliases:
    """Test alternative target names"""

    def test_alias_spellings(self):
        """Test case and underscore spellings resolve to the same target"""
        registry = CampaignRegistry()
        campaign = MockCampaign(target_id="mock", aliases=("m1.2",))
        registry.register(campaign)

        assert registry.require("m1.2") is campaign
        assert registry.require("M1_2") is campaign
        assert registry.resolve("unknown") == "unknown"

    def test_alias_collision(self):
        """Test an alias cannot shadow another target or alias"""
        registry = CampaignRegistry()
        registry.register(MockCampaign(target_id="first", aliases=("a1",)))
        with pytest.raises(InvalidArgument, match="taken"):
            registry.register(MockCampaign(target_id="second", aliases=("a1",)))
        with pytest.raises(InvalidArgument, match="taken"):
            registry.register(MockCampaign(target_id="third", aliases=("first",)))
        with pytest.raises(InvalidArgument, match="already registered"):
            registry.register(MockCampaign(target_id="a1"))

    def test_unregister_by_alias(self):
        """Test unregistering through an alias drops the target and its aliases"""
        registry = CampaignRegistry()
        registry.register(MockCampaign(target_id="mock", aliases=("m1",)))
        registry.unregister("m1")
        assert "mock" not in registry
        assert "m1" not in registry

    def test_unknown_lists_aliases(self):
        """Test the error message shows aliases next to target ids"""
        with pytest.raises(InvalidArgument, match=r"rank \(thm2\.5\)"):
            create_default_registry().require("nope")
