"""graph6 codec: the compact printable-ASCII format for small simple graphs.

The order is one byte (value + 63, for orders below 63).  The upper triangle
of the adjacency matrix follows in column order -- (0,1), (0,2), (1,2),
(0,3), ... -- packed big-endian into 6-bit groups, each group + 63.
"""

from __future__ import annotations

from .graphs import MAX_VERTICES, Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input; ``position`` is the offending character index."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


def encode(g: Graph) -> str:
    out = [chr(63 + g.p)]
    acc = 0
    nbits = 0
    for j in range(1, g.p):
        col = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | ((col >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise Graph6Error("empty graph6 string")
    n = ord(s[0]) - 63
    if not 1 <= n <= 62:
        raise Graph6Error(f"unsupported order byte {s[0]!r}", 0)
    if n > MAX_VERTICES:
        raise Graph6Error(f"order {n} exceeds the supported maximum {MAX_VERTICES}", 0)
    nbits = n * (n - 1) // 2
    expect = 1 + (nbits + 5) // 6
    if len(s) != expect:
        raise Graph6Error(
            f"expected {expect} characters for order {n}, got {len(s)}",
            min(len(s), expect),
        )
    rows = [0] * n
    bit = 0
    for k, ch in enumerate(s[1:], start=1):
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise Graph6Error(f"character {ch!r} outside graph6 range", k)
        for shift in range(5, -1, -1):
            if bit >= nbits:
                if (val >> shift) & 1:
                    raise Graph6Error("nonzero padding bits", k)
                continue
            if (val >> shift) & 1:
                i, j = _pair(bit)
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit += 1
    return Graph(n, tuple(rows))


def _pair(bit_index: int) -> tuple[int, int]:
    """Map a bit position in the column-order upper triangle to its (i, j)."""
    j = 1
    while bit_index >= j:
        bit_index -= j
        j += 1
    return bit_index, j
