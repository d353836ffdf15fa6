"""
Configuration Management System
Class based profiles for the irregularity toolkit.
Profiles are selected explicitly (``--profile``); no environment variables are read.
"""
import logging


class ConfigurationError(Exception):
    """Configuration error exception"""
    pass


class BaseConfig:
    """Base configuration class"""

    # Runtime checks
    DEBUG = False
    TESTING = False
    ENV = 'default'

    # Logging
    LOG_LEVEL = 'WARNING'
    LOG_DIR = None

    # Enumeration caps
    TREE_ORDER_CAP = 18
    SWEEP_ORDER_CAP = 8
    SWEEP_CHUNK_BITS = 20

    # Verification
    ISOMORPHISM_CHECK_MAX_ORDER = 12
    WORK_SLACK = 4
    DEFAULT_SEED = 20190105

    # Execution and output
    DEFAULT_WORKERS = 1
    DEFAULT_OUTPUT = 'json'

    @classmethod
    def validate_config(cls):
        """Validate configuration items"""
        errors = []

        if not 1 <= cls.TREE_ORDER_CAP <= 30:
            errors.append("TREE_ORDER_CAP must lie in 1..30")
        if not 1 <= cls.SWEEP_ORDER_CAP <= 8:
            errors.append("SWEEP_ORDER_CAP must lie in 1..8 (one machine word of edge bits)")
        if not 8 <= cls.SWEEP_CHUNK_BITS <= 24:
            errors.append("SWEEP_CHUNK_BITS must lie in 8..24")
        if cls.WORK_SLACK < 0:
            errors.append("WORK_SLACK must be non-negative")
        if cls.DEFAULT_WORKERS < 1:
            errors.append("DEFAULT_WORKERS must be at least 1")
        if cls.DEFAULT_OUTPUT not in ('json', 'csv', 'table'):
            errors.append("DEFAULT_OUTPUT must be one of json, csv, table")

        if errors:
            raise ConfigurationError(
                "Configuration errors:\n" + "\n".join(f"  - {e}" for e in errors)
            )


class DefaultConfig(BaseConfig):
    """Default profile used by the command line"""
    ENV = 'default'


class DebugConfig(BaseConfig):
    """Debug profile: recomputes A* after every tracked update"""
    DEBUG = True
    ENV = 'debug'
    LOG_LEVEL = 'DEBUG'

    @classmethod
    def validate_config(cls):
        """Debug configuration validation"""
        super().validate_config()
        logging.getLogger(__name__).debug(
            "Debug profile active: incremental updates are cross-checked by full recomputation"
        )


class TestingConfig(BaseConfig):
    """Testing profile"""
    TESTING = True
    DEBUG = True
    ENV = 'testing'
    LOG_LEVEL = 'ERROR'
    SWEEP_CHUNK_BITS = 12


# Configuration dictionary
config = {
    'default': DefaultConfig,
    'debug': DebugConfig,
    'testing': TestingConfig,
}


def get_config(config_name):
    """Get configuration class"""
    return config.get(config_name or 'default', config['default'])
