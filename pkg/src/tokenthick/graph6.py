"""graph6 encoding (short form for order <= 62, long forms above)."""

from __future__ import annotations

from .graph import Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    def __init__(self, msg: str, offset: int):
        super().__init__(f"{msg} (byte offset {offset})")
        self.offset = offset


def _encode_order(n: int) -> list[int]:
    if n < 0:
        raise ValueError("negative order")
    if n <= 62:
        return [n + 63]
    if n <= 258047:
        return [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    if n <= 68719476735:
        return [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    raise ValueError(f"order {n} too large for graph6")


def write_graph6(g: Graph, header: bool = False) -> str:
    out = _encode_order(g.order)
    n = g.order
    nbits = n * (n - 1) // 2
    bits = bytearray(nbits + (-nbits) % 6)
    # bit index of pair (i, j), i < j, in column-major upper triangle order
    for i, j in g.edges:
        bits[j * (j - 1) // 2 + i] = 1
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(val + 63)
    text = bytes(out).decode("ascii")
    return HEADER + text if header else text


def parse_graph6(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    start = 0
    if text.startswith(HEADER):
        start = len(HEADER)
    data = text.rstrip("\r\n")
    pos = start
    if pos >= len(data):
        raise Graph6Error("empty graph6 string", pos)

    def byte(i: int) -> int:
        if i >= len(data):
            raise Graph6Error("truncated order header", i)
        c = ord(data[i])
        if not 63 <= c <= 126:
            raise Graph6Error(f"invalid character {data[i]!r}", i)
        return c - 63

    first = byte(pos)
    if first < 63:
        n = first
        pos += 1
    elif pos + 1 < len(data) and ord(data[pos + 1]) == 126:
        n = 0
        for i in range(pos + 2, pos + 8):
            n = (n << 6) | byte(i)
        pos += 8
    else:
        n = 0
        for i in range(pos + 1, pos + 4):
            n = (n << 6) | byte(i)
        pos += 4

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < nbytes:
        raise Graph6Error(f"truncated bit vector: need {nbytes} bytes, have {len(body)}", pos + len(body))
    if len(body) > nbytes:
        raise Graph6Error("trailing data after bit vector", pos + nbytes)

    edges = []
    k = 0
    i, j = 0, 1
    for off in range(nbytes):
        val = byte(pos + off)
        for shift in range(5, -1, -1):
            if k >= nbits:
                if (val >> shift) & 1:
                    raise Graph6Error("non-zero padding bits", pos + off)
                continue
            if (val >> shift) & 1:
                edges.append((i, j))
            k += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(n, edges)
