"""
Application settings and configuration management.
"""

import os
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables from .env file if it exists
env_path = Path(__file__).parent.parent.parent / '.env'
if env_path.exists():
    load_dotenv(env_path)


class Settings:
    """Application settings loaded from environment variables."""

    # Oracle enumeration: raw search space (bound+1)^e allowed before BoundTooLarge
    ORACLE_CAP: int = int(os.getenv('TRACKLAB_ORACLE_CAP', '20000000'))

    # Logging
    LOG_ENABLED: bool = os.getenv('TRACKLAB_LOG_ENABLED', 'false').lower() == 'true'
    LOG_DIR: str = os.getenv('TRACKLAB_LOG_DIR', 'logs')

    # Corpus runner
    CORPUS_JOBS: int = int(os.getenv('TRACKLAB_CORPUS_JOBS', '1'))

    # Builder safety cap; 0 means 2v - 3
    MAX_EXTENSIONS: int = int(os.getenv('TRACKLAB_MAX_EXTENSIONS', '0'))

    @classmethod
    def oracle_cap(cls) -> int:
        """Re-read the oracle cap so tests and the CLI can override it at runtime."""
        return int(os.getenv('TRACKLAB_ORACLE_CAP', str(cls.ORACLE_CAP)))

    @classmethod
    def get_oracle_config(cls) -> dict:
        """Get oracle configuration as a dictionary."""
        return {
            'cap': cls.oracle_cap(),
        }

    @classmethod
    def get_logging_config(cls) -> dict:
        """Get logging configuration as a dictionary."""
        return {
            'enabled': cls.LOG_ENABLED,
            'log_dir': cls.LOG_DIR,
        }


# Global settings instance
settings = Settings()
