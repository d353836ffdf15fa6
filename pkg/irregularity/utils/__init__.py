"""
Utilities Module
"""
from .error_handler import (
    ApplicationError,
    ErrorHandler,
    GraphFormatError,
    InputOutputError,
    InvariantViolation,
    LoggerConfig,
    PreconditionError,
    UnsupportedValueError,
    ValidationError,
)
from .decorators import handle_command_errors, log_function_call

__all__ = [
    'ApplicationError', 'ErrorHandler', 'GraphFormatError', 'InputOutputError',
    'InvariantViolation', 'LoggerConfig', 'PreconditionError', 'UnsupportedValueError',
    'ValidationError',
    'handle_command_errors', 'log_function_call',
]
