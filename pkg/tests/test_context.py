"""Tests for ForgeContext module."""

import pytest

from idealforge.algebra import FieldSpec
from idealforge.config import CampaignConfig, Config
from idealforge.context import ForgeContext
from idealforge.exceptions import InvalidArgument
from tests.mock_campaign import MockCampaign

F5 = FieldSpec.prime(5)


class TestForgeContextCreation:
    """Test ForgeContext creation and configuration."""

    def test_create_with_defaults(self):
        """Test factory method keeps the given config and registers built-ins."""
        config = Config()
        context = ForgeContext.create(config)

        assert context.config is config
        assert "rank" in context.registry
        assert len(context.registry) == 7
        assert context.config_path is None

    def test_create_loads_config(self, tmp_path, monkeypatch):
        """Test factory method reads a config file when no config is given."""
        monkeypatch.delenv("IDEALFORGE_SCAN_BOUND", raising=False)
        path = tmp_path / "idealforge.yaml"
        path.write_text("roots:\n  scan_bound: 123\nenumeration:\n  bound: 64\n")
        context = ForgeContext.create(config_path=path)

        assert context.scan_bound == 123
        assert context.enumeration_bound == 64
        assert context.config_path == path

    def test_registry_is_per_context(self):
        """Test registering on one context leaves others untouched."""
        a = ForgeContext.create(Config())
        b = ForgeContext.create(Config())
        a.registry.register(MockCampaign())

        assert "mock" in a.registry
        assert "mock" not in b.registry

    def test_repr(self):
        """Test repr lists the campaigns."""
        assert "rank" in repr(ForgeContext.create(Config()))


class TestInstanceSpec:
    """Test instance specs built from configuration."""

    def test_config_defaults(self):
        """Test campaign settings flow into the spec."""
        config = Config(campaign=CampaignConfig(seed=9, rational_range=2, message_dim_max=5))
        spec = ForgeContext.create(config).instance_spec(F5)

        assert spec.seed == 9
        assert spec.rational_range == 2
        assert spec.message_dim_max == 5
        assert spec.field == F5

    def test_none_overrides_are_ignored(self):
        """Test None keeps the configured value while other overrides apply."""
        context = ForgeContext.create(Config(campaign=CampaignConfig(seed=9)))
        spec = context.instance_spec(F5, seed=None, n1_max=2, squarefree_only=False)

        assert spec.seed == 9
        assert spec.n1_max == 2
        assert spec.squarefree_only is False

    def test_invalid_override(self):
        """Test bounds are still validated."""
        with pytest.raises(InvalidArgument):
            ForgeContext.create(Config()).instance_spec(F5, m_max=0)


class TestRunCampaign:
    """Test campaign execution through the context."""

    def test_sequential(self):
        """Test a single worker runs in the calling thread."""
        context = ForgeContext.create(Config(campaign=CampaignConfig(trials=12)))
        campaign = MockCampaign()
        context.registry.register(campaign)

        summary = context.run_campaign("mock", context.instance_spec(F5))

        assert summary.trials == 12
        assert campaign.check_count == 12

    def test_sharded_matches_sequential(self):
        """Test several workers give the same summary."""
        context = ForgeContext.create(Config())
        spec = context.instance_spec(F5, n1_max=3, m_max=4)

        one = context.run_campaign("rank", spec, trials=10, workers=1)
        many = context.run_campaign("rank", spec, trials=10, workers=3)

        assert one.to_dict(include_elapsed=False) == many.to_dict(include_elapsed=False)

    def test_unknown_target(self):
        """Test unknown targets are input errors."""
        context = ForgeContext.create(Config())
        with pytest.raises(InvalidArgument):
            context.run_campaign("nope", context.instance_spec(F5), trials=1)
