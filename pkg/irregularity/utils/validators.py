"""
Input Validation Utilities
"""
from typing import Any, List

from irregularity.utils.error_handler import ValidationError


def validate_non_negative_integer(value: Any, field: str) -> int:
    """
    Validate a non-negative integer.

    Args:
        value: Candidate value
        field: Parameter name used in the error message

    Returns:
        The value as int
    """
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError(f"{field} must be an integer, got {value!r}", field)
    if value < 0:
        raise ValidationError(f"{field} must be non-negative, got {value}", field)
    return value


def validate_positive_integer(value: Any, field: str) -> int:
    """Validate a positive integer."""
    value = validate_non_negative_integer(value, field)
    if value == 0:
        raise ValidationError(f"{field} must be positive", field)
    return value


def validate_vertex(order: int, u: Any, field: str = 'vertex') -> int:
    """
    Validate a vertex id against a graph order.

    Args:
        order: Vertex count n
        u: Candidate id
        field: Parameter name used in the error message

    Returns:
        The id as int
    """
    if isinstance(u, bool) or not isinstance(u, int):
        raise ValidationError(f"{field} must be an integer vertex id, got {u!r}", field)
    if not 0 <= u < order:
        raise ValidationError(f"{field} {u} is out of range 0..{order - 1}", field)
    return u


def validate_even_target(value: Any, field: str = 'target') -> int:
    """Validate an even non-negative A* target."""
    value = validate_non_negative_integer(value, field)
    if value % 2:
        raise ValidationError(f"{field} must be even, got {value} (A* is always even)", field)
    return value


def validate_workers(value: Any) -> int:
    """Validate a parallelism degree."""
    return validate_positive_integer(value, 'workers')


class ValidationResult:
    """Validation result container"""

    def __init__(self):
        self.is_valid = True
        self.errors = []

    def add_error(self, field: str, message: str):
        """Add an error"""
        self.is_valid = False
        self.errors.append(f"{field}: {message}")

    def get_errors(self) -> List[str]:
        """Get the list of errors"""
        return self.errors
