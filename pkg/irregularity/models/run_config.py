"""
Run Configuration Model
Parameters of one command-line invocation
"""
from dataclasses import dataclass, field
from typing import Dict, Optional

from irregularity.utils.error_handler import ValidationError
from irregularity.utils.validators import ValidationResult

INPUT_FORMATS = ('g6', 'edgelist')
OUTPUT_FORMATS = ('json', 'csv', 'table')


@dataclass
class RunConfig:
    """Subcommand, graph source, formats and numeric parameters"""

    subcommand: str
    graph6: Optional[str] = None
    input_path: Optional[str] = None
    input_format: str = 'g6'
    output_format: str = 'json'
    workers: int = 1
    params: Dict[str, int] = field(default_factory=dict)
    needs_graph: bool = False

    def validate(self) -> ValidationResult:
        result = ValidationResult()

        if self.needs_graph:
            sources = sum(source is not None for source in (self.graph6, self.input_path))
            if sources != 1:
                result.add_error('input', 'exactly one of --graph6 or --input is required')
        if self.input_format not in INPUT_FORMATS:
            result.add_error('format', f"must be one of {', '.join(INPUT_FORMATS)}")
        if self.graph6 is not None and self.input_format != 'g6':
            result.add_error('format', '--graph6 input is always graph6')
        if self.output_format not in OUTPUT_FORMATS:
            result.add_error('output', f"must be one of {', '.join(OUTPUT_FORMATS)}")
        if self.workers < 1:
            result.add_error('workers', 'must be at least 1')

        return result

    def ensure_valid(self) -> 'RunConfig':
        result = self.validate()
        if not result.is_valid:
            raise ValidationError('; '.join(result.get_errors()), 'run_config')
        return self
