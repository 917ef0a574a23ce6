"""Configuration management for search caps."""

import os
from dataclasses import dataclass

from .errors import ConfigError

CAPS_ENV = "CANRING_CAPS"

# caps-string key -> Config field
_CAP_KEYS = {
    "words": "max_words",
    "dmax": "max_degree",
    "box": "box_cap",
    "steps": "rewrite_steps",
}


@dataclass
class Config:
    """Caps on the exhaustive searches."""

    max_words: int = 200_000
    max_degree: int = 64
    box_cap: int = 200_000
    rewrite_steps: int = 10_000

    def __post_init__(self) -> None:
        """Reject non-positive caps."""
        for key, field_name in _CAP_KEYS.items():
            value = getattr(self, field_name)
            if not isinstance(value, int) or value <= 0:
                raise ConfigError(f"Invalid cap {key}={value!r}: must be a positive integer")

    def to_caps(self) -> str:
        """Render the caps in CANRING_CAPS syntax."""
        return ",".join(f"{key}={getattr(self, name)}" for key, name in _CAP_KEYS.items())


def parse_caps(text: str) -> dict[str, int]:
    """Parse a ``words=<n>,dmax=<n>`` string into Config keyword arguments.

    Args:
        text: Comma separated key=value pairs; empty pieces are ignored

    Returns:
        Mapping from Config field name to value
    """
    overrides: dict[str, int] = {}
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        key, sep, raw = piece.partition("=")
        key = key.strip()
        if not sep or key not in _CAP_KEYS:
            raise ConfigError(
                f"Invalid caps entry {piece!r}. Must be one of: "
                + ", ".join(f"{k}=<n>" for k in _CAP_KEYS)
            )
        try:
            value = int(raw.strip())
        except ValueError as exc:
            raise ConfigError(f"Invalid caps value in {piece!r}: not an integer") from exc
        overrides[_CAP_KEYS[key]] = value
    return overrides


def create_config(caps: str | None = None) -> Config:
    """Create config from CLI arg, env var, or defaults.

    Priority:
    1. CLI argument (caps parameter)
    2. CANRING_CAPS environment variable
    3. Defaults (words=200000, dmax=64)

    Args:
        caps: Caps string in CANRING_CAPS syntax
    """
    if not caps:
        caps = os.environ.get(CAPS_ENV, "")
    return Config(**parse_caps(caps))


# Global config instance
_config: Config | None = None


def get_config() -> Config:
    """Get the global configuration instance."""
    global _config
    if _config is None:
        _config = create_config()
    return _config


def set_config(cfg: Config) -> None:
    """Set the global configuration instance."""
    global _config
    _config = cfg
