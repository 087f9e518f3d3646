"""Configuration module."""

import os


class ToolkitConfig:
    """Toolkit configuration."""

    DEBUG: bool = False
    ORACLE_TRIALS: int = 50
    ORACLE_SEED: int = 0
    SEARCH_BOUND: int = 2

    @classmethod
    def load(cls) -> None:
        """Load configuration from environment variables."""
        cls.DEBUG = os.getenv('HOMALT_DEBUG', 'false').lower() == 'true'
        cls.ORACLE_TRIALS = _int_env('HOMALT_ORACLE_TRIALS', 50)
        cls.ORACLE_SEED = _int_env('HOMALT_ORACLE_SEED', 0)
        cls.SEARCH_BOUND = _int_env('HOMALT_SEARCH_BOUND', 2)

    @classmethod
    def validate(cls) -> bool:
        """Validate configuration."""
        return cls.ORACLE_TRIALS > 0 and cls.SEARCH_BOUND > 0


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name, '')
    try:
        return int(raw) if raw else default
    except ValueError:
        return default


# Load configuration on import
ToolkitConfig.load()
