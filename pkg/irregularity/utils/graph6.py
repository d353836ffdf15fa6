"""
graph6 Codec
Upper-triangle adjacency bits in column order (0,1),(0,2),(1,2),(0,3)...,
six bits per printable byte offset by 63, zero padded.
"""
from typing import List

from irregularity.models.graph import Graph
from irregularity.utils.error_handler import GraphFormatError, ValidationError

HEADER = '>>graph6<<'
OFFSET = 63
SHORT_ORDER_LIMIT = 63
MAX_ORDER = 258048


def _encode_order(n: int) -> str:
    if n < SHORT_ORDER_LIMIT:
        return chr(n + OFFSET)
    if n < MAX_ORDER:
        return chr(126) + ''.join(chr(((n >> shift) & 0x3F) + OFFSET) for shift in (12, 6, 0))
    raise ValidationError(f"graph6 output supports n < {MAX_ORDER}, got {n}", 'order')


def emit_graph6(g: Graph) -> str:
    """Encode a graph as a graph6 line (without header or newline)"""
    n = g.order
    chunks: List[str] = [_encode_order(n)]

    value = 0
    filled = 0
    for j in range(1, n):
        for i in range(j):
            value = (value << 1) | (1 if g.has_edge(i, j) else 0)
            filled += 1
            if filled == 6:
                chunks.append(chr(value + OFFSET))
                value = 0
                filled = 0
    if filled:
        chunks.append(chr((value << (6 - filled)) + OFFSET))
    return ''.join(chunks)


def strip_graph6_header(text: str) -> str:
    """Remove an optional '>>graph6<<' header and surrounding whitespace."""
    line = text.strip()
    if line.startswith(HEADER):
        line = line[len(HEADER):].strip()
    return line


def parse_graph6(text: str) -> Graph:
    """
    Decode one graph6 line.

    Args:
        text: graph6 string, optionally preceded by the '>>graph6<<' header

    Returns:
        Graph with the encoded vertex order

    Raises:
        GraphFormatError: byte outside 63..126, truncated or over-long data,
            non-zero padding bits
    """
    line = strip_graph6_header(text)
    if not line:
        raise GraphFormatError("empty graph6 string")

    data = []
    for position, char in enumerate(line):
        code = ord(char)
        if not OFFSET <= code <= 126:
            raise GraphFormatError(
                f"graph6 byte {code} at position {position} is outside 63..126", position
            )
        data.append(code - OFFSET)

    if data[0] == 63:
        if len(data) < 4:
            raise GraphFormatError("graph6 extended order field is truncated")
        if data[1] == 63:
            raise GraphFormatError(f"graph6 orders of {MAX_ORDER} or more are not supported")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]

    bit_count = n * (n - 1) // 2
    expected = (bit_count + 5) // 6
    if len(body) < expected:
        raise GraphFormatError(
            f"graph6 data truncated: {len(body)} of {expected} edge bytes for n={n}"
        )
    if len(body) > expected:
        raise GraphFormatError(
            f"graph6 data too long: {len(body)} edge bytes where {expected} expected for n={n}"
        )

    padding = expected * 6 - bit_count
    if padding and body[-1] & ((1 << padding) - 1):
        raise GraphFormatError("graph6 padding bits must be zero")

    graph = Graph(n)
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                graph.add_edge(i, j)
            k += 1
    return graph
