"""
Configuration package
"""
from .base import get_config, BaseConfig, DefaultConfig, DebugConfig, TestingConfig, ConfigurationError

__all__ = [
    'get_config', 'BaseConfig', 'DefaultConfig', 'DebugConfig', 'TestingConfig',
    'ConfigurationError',
]
