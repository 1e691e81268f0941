"""Bit-exact graph6 encoding and decoding.

graph6 packs the upper adjacency triangle of a simple graph into
printable ASCII. The vertex count comes first: a single byte n+63 for
n <= 62, or '~' followed by three bytes carrying n as a big-endian
18-bit value in 6-bit groups, each offset by 63. The triangle follows,
column by column -- x(0,1), x(0,2), x(1,2), x(0,3), ... -- zero-padded
to a multiple of six bits, each 6-bit group again offset by 63. Every
byte of a valid encoding therefore lies in 63..126.

The parser is strict: stray bytes, missing data, trailing data, and
nonzero padding bits are all rejected, with the byte offset of the
problem attached to the error.
"""

from __future__ import annotations

from .graphs import Graph

_MAX_N = 258047  # largest n the 3-byte header form may carry


class Graph6Error(ValueError):
    """Malformed graph6 input; offset is the byte position at fault."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


def _data_values(text: str, start: int) -> list[int]:
    values = []
    for pos in range(start, len(text)):
        b = ord(text[pos])
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b!r} outside graph6 range 63..126", pos)
        values.append(b - 63)
    return values


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line into a Graph (labels are not carried)."""
    if text.endswith("\n"):
        text = text[:-1]
    if not text:
        raise Graph6Error("empty input", 0)
    first = ord(text[0])
    if not 63 <= first <= 126:
        raise Graph6Error(f"byte {first!r} outside graph6 range 63..126", 0)
    if first != 126:
        n = first - 63
        start = 1
    else:
        if len(text) >= 2 and ord(text[1]) == 126:
            raise Graph6Error("header for n >= 2^18 is not supported", 1)
        if len(text) < 4:
            raise Graph6Error("truncated size header", len(text))
        parts = _data_values(text[1:4], 1)
        n = parts[0] << 12 | parts[1] << 6 | parts[2]
        start = 4
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    values = _data_values(text, start)
    if len(values) < nbytes:
        raise Graph6Error(
            f"truncated bit stream: need {nbytes} data bytes, got {len(values)}",
            len(text),
        )
    if len(values) > nbytes:
        raise Graph6Error("unexpected trailing data", start + nbytes)

    rows = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            bit = values[pos // 6] >> (5 - pos % 6) & 1
            if bit:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos += 1
    # every bit past the triangle must be zero padding
    for p in range(nbits, nbytes * 6):
        if values[p // 6] >> (5 - p % 6) & 1:
            raise Graph6Error("nonzero padding bits", start + p // 6)
    return Graph(n, tuple(rows))


def to_graph6(g: Graph) -> str:
    """Encode a graph under its own vertex order; inverse of parse_graph6."""
    n = g.n
    if n > _MAX_N:
        raise ValueError(f"graph too large for graph6 here: n={n} > {_MAX_N}")
    if n <= 62:
        header = chr(n + 63)
    else:
        header = "~" + "".join(
            chr((n >> shift & 0x3F) + 63) for shift in (12, 6, 0)
        )
    out = []
    acc = 0
    filled = 0
    for j in range(1, n):
        for i in range(j):
            acc = acc << 1 | (g.rows[i] >> j & 1)
            filled += 1
            if filled == 6:
                out.append(chr(acc + 63))
                acc = 0
                filled = 0
    if filled:
        out.append(chr((acc << (6 - filled)) + 63))
    return header + "".join(out)
