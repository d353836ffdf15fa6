"""
Modified Albertson Index Toolkit
Application factory: configuration, logging and service wiring
"""
import logging
from dataclasses import dataclass
from typing import Any, Callable, Optional

from config.base import get_config

__version__ = '1.0.0'


@dataclass
class Application:
    """Configured services shared by the command-line front end"""

    config: type
    logger: logging.Logger
    enumeration: Any
    verification_factory: Callable[..., Any]


def create_app(config_name: Optional[str] = None, log_level: Optional[str] = None) -> Application:
    """Application Factory Function"""
    config = get_config(config_name)

    # Validate configuration
    if hasattr(config, 'validate_config'):
        config.validate_config()

    from irregularity.utils.error_handler import LoggerConfig
    LoggerConfig.setup_logging(config, log_level)

    from irregularity.services.enumeration import EnumerationService
    from irregularity.services.verification import VerificationService

    logger = logging.getLogger('irregularity')
    app = Application(
        config=config,
        logger=logger,
        enumeration=EnumerationService(config),
        verification_factory=lambda **kwargs: VerificationService(config, **kwargs),
    )
    logger.debug(f"Application initialised with profile {config.ENV}")
    return app
