"""graph6 encoding (upper triangle, column-major, 6 bits per byte offset by 63)."""

from __future__ import annotations

from typing import Iterator, TextIO

from .graphs import MAX_ORDER, Graph, GraphError, build_graph

HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise GraphError(f"graph6 cannot encode order {n} in this implementation")


def _decode_n(data: bytes) -> tuple[int, int]:
    if not data:
        raise GraphError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) < 4 or data[1] == 126:
        raise GraphError("unsupported or truncated graph6 order header")
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    return n, 4


def to_graph6(g: Graph) -> str:
    bits = [1 if g.adj[j] >> i & 1 else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    chunks = (bits[k:k + 6] for k in range(0, len(bits), 6))
    body = "".join(chr(63 + int("".join(map(str, c)), 2)) for c in chunks)
    return _encode_n(g.n) + body


def from_graph6(text: str, max_order: int = MAX_ORDER) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError:
        raise GraphError(f"non-ASCII character in graph6 line {text!r}") from None
    if any(b < 63 or b > 126 for b in data):
        raise GraphError(f"graph6 byte out of range in {text!r}")
    n, pos = _decode_n(data)
    if n > max_order:
        raise GraphError(f"order {n} exceeds the limit {max_order}")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != nbytes:
        raise GraphError(f"graph6 body has {len(body)} bytes, expected {nbytes} for n={n}")
    value = 0
    for b in body:
        value = (value << 6) | (b - 63)
    pad = 6 * nbytes - nbits
    if value & ((1 << pad) - 1):
        raise GraphError("nonzero graph6 padding bits")
    value >>= pad
    edges = []
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if value >> k & 1:
                edges.append((i, j))
            k -= 1
    return build_graph(n, edges, max_order=max_order)


def read_graph6(stream: TextIO) -> Iterator[tuple[int, str]]:
    """Yield ``(line_number, line)`` for each nonblank line of a graph6 stream."""
    for lineno, line in enumerate(stream, 1):
        line = line.strip()
        if line and line != HEADER:
            yield lineno, line
