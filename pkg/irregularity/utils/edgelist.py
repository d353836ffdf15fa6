"""
Edge-List Codec
First significant line "n m", then m lines "u v" (0-based); blank lines and
lines starting with '#' are ignored.
"""
from typing import List, Tuple

from irregularity.models.graph import Graph, build_graph
from irregularity.utils.error_handler import GraphFormatError
from irregularity.utils.graph6 import MAX_ORDER


def _significant_lines(text: str) -> List[Tuple[int, str]]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        lines.append((number, line))
    return lines


def _int_pair(number: int, line: str) -> Tuple[int, int]:
    fields = line.split()
    if len(fields) != 2:
        raise GraphFormatError(f"line {number}: expected two integers, got {line!r}")
    try:
        return int(fields[0]), int(fields[1])
    except ValueError:
        raise GraphFormatError(f"line {number}: expected two integers, got {line!r}")


def parse_edge_list(text: str) -> Graph:
    """Decode the edge-list text format."""
    lines = _significant_lines(text)
    if not lines:
        raise GraphFormatError("edge list is empty; expected header line 'n m'")

    header_number, header = lines[0]
    n, m = _int_pair(header_number, header)
    if n < 0 or m < 0:
        raise GraphFormatError(f"line {header_number}: n and m must be non-negative")
    if n >= MAX_ORDER:
        raise GraphFormatError(
            f"line {header_number}: orders of {MAX_ORDER} or more are not supported, got {n}"
        )

    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(f"edge list declares {m} edges but contains {len(body)}")

    edges = []
    for number, line in body:
        u, v = _int_pair(number, line)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {number}: vertex id out of range 0..{n - 1}")
        if u == v:
            raise GraphFormatError(f"line {number}: self-loop at vertex {u}")
        edges.append((u, v))
    return build_graph(n, edges)


def emit_edge_list(g: Graph) -> str:
    """Encode a graph in the edge-list text format (trailing newline included)."""
    lines = [f"{g.order} {g.size}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return '\n'.join(lines) + '\n'
