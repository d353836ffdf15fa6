"""
Error Handling and Logging System Module
Provides the exception hierarchy, exit-code mapping and logging setup
"""
import logging
import logging.handlers
import sys
from pathlib import Path
from typing import Optional

import click


class LoggerConfig:
    """Logger configuration"""

    # Log level mapping
    LOG_LEVELS = {
        'DEBUG': logging.DEBUG,
        'INFO': logging.INFO,
        'WARNING': logging.WARNING,
        'ERROR': logging.ERROR,
        'CRITICAL': logging.CRITICAL
    }

    @staticmethod
    def setup_logging(config, level_name: Optional[str] = None) -> None:
        """Set up process logging; reports own stdout, so handlers write to stderr"""
        log_level = (level_name or getattr(config, 'LOG_LEVEL', 'WARNING')).upper()
        level = LoggerConfig.LOG_LEVELS.get(log_level, logging.WARNING)

        root_logger = logging.getLogger()
        root_logger.setLevel(level)

        # Clear existing handlers
        for handler in root_logger.handlers[:]:
            root_logger.removeHandler(handler)

        formatter = logging.Formatter(
            fmt='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
            datefmt='%Y-%m-%d %H:%M:%S'
        )

        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(level)
        console_handler.setFormatter(formatter)
        root_logger.addHandler(console_handler)

        log_dir = getattr(config, 'LOG_DIR', None)
        if log_dir:
            log_dir = Path(log_dir)
            log_dir.mkdir(parents=True, exist_ok=True)

            app_handler = logging.handlers.RotatingFileHandler(
                log_dir / 'irregularity.log',
                maxBytes=10*1024*1024,  # 10MB
                backupCount=5,
                encoding='utf-8'
            )
            app_handler.setLevel(level)
            app_handler.setFormatter(formatter)
            root_logger.addHandler(app_handler)

            error_handler = logging.handlers.RotatingFileHandler(
                log_dir / 'error.log',
                maxBytes=10*1024*1024,  # 10MB
                backupCount=5,
                encoding='utf-8'
            )
            error_handler.setLevel(logging.ERROR)
            error_handler.setFormatter(formatter)
            root_logger.addHandler(error_handler)

        logging.getLogger(__name__).debug("Logging system initialized")


class ApplicationError(Exception):
    """Custom application error base class"""

    def __init__(self, message: str, error_code: str = None, exit_code: int = 1):
        super().__init__(message)
        self.message = message
        self.error_code = error_code
        self.exit_code = exit_code


class ValidationError(ApplicationError):
    """Input error: malformed ids, sizes or parameters"""

    def __init__(self, message: str, field: str = None):
        super().__init__(message, 'VALIDATION_ERROR', 1)
        self.field = field


class PreconditionError(ApplicationError):
    """A documented operation precondition does not hold"""

    def __init__(self, message: str, error_code: str = None):
        super().__init__(message, error_code or 'PRECONDITION_ERROR', 1)


class UnsupportedValueError(PreconditionError):
    """Requested value lies outside the constructive domain"""

    def __init__(self, message: str):
        super().__init__(message, 'UNSUPPORTED_VALUE')


class InvariantViolation(ApplicationError):
    """An identity that must always hold was observed to fail"""

    def __init__(self, message: str, error_code: str = None):
        super().__init__(message, error_code or 'INVARIANT_VIOLATION', 1)


class GraphFormatError(ApplicationError):
    """graph6 or edge-list text could not be decoded"""

    def __init__(self, message: str, position: Optional[int] = None):
        super().__init__(message, 'FORMAT_ERROR', 2)
        self.position = position


class InputOutputError(ApplicationError):
    """File could not be read or written"""

    def __init__(self, message: str):
        super().__init__(message, 'IO_ERROR', 2)


class ErrorHandler:
    """Maps application errors to exit codes and user-facing messages"""

    def __init__(self, logger: Optional[logging.Logger] = None):
        self.logger = logger or logging.getLogger(__name__)

    def exit_code_for(self, error: BaseException) -> int:
        """Exit status for an exception raised by a command"""
        if isinstance(error, ApplicationError):
            return error.exit_code
        if isinstance(error, OSError):
            return 2
        return 1

    def handle(self, error: BaseException) -> int:
        """Report the error on stderr and return the exit status"""
        code = self.exit_code_for(error)

        if isinstance(error, InvariantViolation):
            self.logger.error(f"Invariant violation: {error.message}")
        elif isinstance(error, ApplicationError):
            self.logger.info(f"{error.error_code}: {error.message}")
        else:
            self.logger.error(f"Unexpected error: {error}")

        message = error.message if isinstance(error, ApplicationError) else str(error)
        if not message:
            message = type(error).__name__
        click.echo(f"error: {message}", err=True)
        return code
