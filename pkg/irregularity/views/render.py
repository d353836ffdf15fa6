"""
Report Renderers
JSON (single document, stable key order), CSV and aligned table output
"""
import csv
import io
import json
from typing import Any, Dict, List, Sequence, Union

Payload = Union[Dict[str, Any], Sequence[Dict[str, Any]]]


def _cell(value: Any) -> str:
    if isinstance(value, (list, dict)):
        return json.dumps(value, separators=(',', ':'))
    if value is None:
        return ''
    return str(value)


def _rows(payload: Payload) -> List[Dict[str, Any]]:
    return [payload] if isinstance(payload, dict) else list(payload)


def render_json(payload: Payload) -> str:
    return json.dumps(payload, indent=2)


def render_csv(payload: Payload) -> str:
    rows = _rows(payload)
    if not rows:
        return ''
    header = list(rows[0])
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(row.get(key)) for key in header])
    return buffer.getvalue().rstrip('\n')


def render_table(payload: Payload) -> str:
    rows = _rows(payload)
    if isinstance(payload, dict):
        width = max((len(key) for key in payload), default=0)
        return '\n'.join(f"{key.ljust(width)}  {_cell(value)}" for key, value in payload.items())
    if not rows:
        return ''
    header = list(rows[0])
    cells = [[_cell(row.get(key)) for key in header] for row in rows]
    widths = [max(len(key), *(len(line[k]) for line in cells)) for k, key in enumerate(header)]
    lines = ['  '.join(key.ljust(widths[k]) for k, key in enumerate(header))]
    lines.append('  '.join('-' * width for width in widths))
    lines.extend('  '.join(line[k].ljust(widths[k]) for k in range(len(header))) for line in cells)
    return '\n'.join(lines)


RENDERERS = {
    'json': render_json,
    'csv': render_csv,
    'table': render_table,
}


def render(payload: Payload, output_format: str = 'json') -> str:
    return RENDERERS[output_format](payload)
