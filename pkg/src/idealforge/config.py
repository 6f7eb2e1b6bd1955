"""Configuration loading and validation"""

import os
from dataclasses import dataclass, field
from pathlib import Path

import psutil  # type: ignore[import-untyped]
import yaml

from .exceptions import InvalidArgument
from .log_handler import get_structured_logger

logger = get_structured_logger(__name__, component="config")

# Default config search paths (in order)
CONFIG_PATHS = [
    Path("idealforge.yaml"),
    Path.home() / ".config" / "idealforge" / "config.yaml",
    Path("/etc/idealforge/config.yaml"),
]

SCAN_BOUND_ENV = "IDEALFORGE_SCAN_BOUND"
DEFAULT_SCAN_BOUND = 10**6
DEFAULT_ENUMERATION_BOUND = 2**20


@dataclass
class RootsConfig:
    scan_bound: int = DEFAULT_SCAN_BOUND  # Largest modulus scanned exhaustively


@dataclass
class EnumerationConfig:
    bound: int = DEFAULT_ENUMERATION_BOUND  # Max messages enumerated per code


@dataclass
class CampaignConfig:
    """Defaults for randomized verification campaigns"""

    trials: int = 200
    seed: int = 0
    workers: int = 1  # 0 = one per physical core
    max_retries: int = 10_000  # Rejection-sampling bound
    rational_range: int = 3  # Coefficients over Q are drawn from [-R, R]
    message_dim_max: int = 8  # Cap on k + l - m for code campaigns


@dataclass
class LoggingConfig:
    level: str = "WARNING"
    file: str = ""
    format: str = "text"  # text or json


@dataclass
class OutputConfig:
    format: str = "pretty"  # pretty or json


@dataclass
class Config:
    roots: RootsConfig = field(default_factory=RootsConfig)
    enumeration: EnumerationConfig = field(default_factory=EnumerationConfig)
    campaign: CampaignConfig = field(default_factory=CampaignConfig)
    logging: LoggingConfig = field(default_factory=LoggingConfig)
    output: OutputConfig = field(default_factory=OutputConfig)


def find_config_file() -> Path | None:
    """Find config file in standard locations"""
    for path in CONFIG_PATHS:
        if path.exists():
            return path
    return None


def _env_scan_bound() -> int | None:
    raw = os.environ.get(SCAN_BOUND_ENV)
    if raw is None or raw.strip() == "":
        return None
    try:
        value = int(raw)
    except ValueError as e:
        raise InvalidArgument(f"{SCAN_BOUND_ENV} must be an integer, got {raw!r}") from e
    if value < 2:
        raise InvalidArgument(f"{SCAN_BOUND_ENV} must be at least 2, got {value}")
    return value


def get_scan_bound() -> int:
    """Root-scan bound from the environment, or the built-in default."""
    env_value = _env_scan_bound()
    return DEFAULT_SCAN_BOUND if env_value is None else env_value


def apply_env_overrides(config: Config) -> Config:
    """Apply environment overrides on top of file/default values"""
    env_value = _env_scan_bound()
    if env_value is not None:
        logger.debug("Scan bound overridden from environment", scan_bound=env_value)
        config.roots.scan_bound = env_value
    return config


def resolve_workers(workers: int) -> int:
    """Map the configured worker count to a concrete one (0 = physical cores)"""
    if workers < 0:
        raise InvalidArgument(f"workers must be >= 0, got {workers}")
    if workers == 0:
        return psutil.cpu_count(logical=False) or 1
    return workers


def load_config(config_path: str | None = None) -> Config:
    """Load configuration from YAML file"""
    path = Path(config_path) if config_path else find_config_file()

    if path is None or not path.exists():
        logger.info("No config file found, using defaults")
        return apply_env_overrides(Config())

    logger.info("Loading config", path=str(path))

    with open(path) as f:
        data = yaml.safe_load(f) or {}

    config = Config(
        roots=RootsConfig(**data.get("roots", {})),
        enumeration=EnumerationConfig(**data.get("enumeration", {})),
        campaign=CampaignConfig(**data.get("campaign", {})),
        logging=LoggingConfig(**data.get("logging", {})),
        output=OutputConfig(**data.get("output", {})),
    )
    return apply_env_overrides(config)
