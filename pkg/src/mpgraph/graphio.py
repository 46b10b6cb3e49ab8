"""graph6 codec for McKay-format graph lists, plus DOT / edge-list exporters.

graph6 encodes a simple undirected graph as printable ASCII: a size prefix
N(n) followed by the upper triangle of the adjacency matrix read in
column-major order, packed into 6-bit groups, each offset by 63. Only plain
graph6 is supported (no sparse6/digraph6). Parsing and writing round-trip
byte-exactly.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Tuple

from .errors import ParseError
from .graphs import Graph, WeightedGraph
from .ratmath import format_rational

HEADER = ">>graph6<<"
_MAX_N = 68719476735  # 2^36 - 1


def _decode_size(data: bytes):
    """Return (n, index of first payload byte)."""
    if not data:
        raise ParseError("empty graph6 line")
    b0 = data[0]
    if b0 != 126:
        return b0 - 63, 1
    if len(data) < 2:
        raise ParseError("truncated size prefix", offset=len(data))
    if data[1] != 126:
        if len(data) < 4:
            raise ParseError("truncated size prefix", offset=len(data))
        n = 0
        for k in range(1, 4):
            n = (n << 6) | (data[k] - 63)
        return n, 4
    if len(data) < 8:
        raise ParseError("truncated size prefix", offset=len(data))
    n = 0
    for k in range(2, 8):
        n = (n << 6) | (data[k] - 63)
    return n, 8


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line (a leading ">>graph6<<" header is tolerated)."""
    if line.startswith(HEADER):
        line = line[len(HEADER):]
    line = line.rstrip("\r\n")
    data = line.encode("ascii", errors="replace")
    for off, b in enumerate(data):
        if b < 63 or b > 126:
            raise ParseError(f"byte {b} out of graph6 range", offset=off)
    n, start = _decode_size(data)
    if n < 0 or n > _MAX_N:
        raise ParseError(f"vertex count {n} out of range")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    payload = data[start:]
    if len(payload) < nbytes:
        raise ParseError(
            f"truncated bitstream: need {nbytes} bytes, got {len(payload)}",
            offset=len(data),
        )
    if len(payload) > nbytes:
        raise ParseError(f"{len(payload) - nbytes} trailing bytes", offset=start + nbytes)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = payload[k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def write_graph6(g: Graph) -> str:
    """Canonical graph6 encoding (no header, zero padding bits)."""
    n = g.n
    if n > _MAX_N:
        raise ParseError(f"vertex count {n} too large for graph6")
    if n <= 62:
        prefix = [63 + n]
    elif n <= 258047:
        prefix = [126] + [63 + ((n >> s) & 63) for s in (12, 6, 0)]
    else:
        prefix = [126, 126] + [63 + ((n >> s) & 63) for s in (30, 24, 18, 12, 6, 0)]
    nbits = n * (n - 1) // 2
    bits = bytearray((nbits + 5) // 6)
    adj = g.edges
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (i, j) in adj:
                bits[k // 6] |= 1 << (5 - k % 6)
            k += 1
    return bytes(prefix).decode("ascii") + bytes(63 + b for b in bits).decode("ascii")


def iter_graph6(lines: Iterable[str]) -> Iterator[Tuple[int, Graph]]:
    """Yield (1-based line number, graph) from a stream of graph6 lines.

    Tolerates an optional ">>graph6<<" header; blank lines are skipped.
    ParseError is re-raised with the offending line number attached.
    """
    for lineno, raw in enumerate(lines, start=1):
        text = raw.strip()
        if lineno == 1 and text.startswith(HEADER):
            text = text[len(HEADER):].strip()
        if not text:
            continue
        try:
            yield lineno, parse_graph6(text)
        except ParseError as exc:
            exc.line = lineno
            raise


def export_edgelist(g: WeightedGraph) -> str:
    """One "u v p/q" line per weighted edge, sorted by (u, v); loops as "u u p/q"."""
    lines = [f"{u} {v} {format_rational(w)}" for (u, v), w in sorted(g.weights.items())]
    return "\n".join(lines) + ("\n" if lines else "")


def export_dot(g: WeightedGraph, name: str = "H") -> str:
    """Graphviz rendering with weight labels; deterministic output."""
    out = [f"graph {name} {{"]
    for v in range(g.n):
        out.append(f"  {v};")
    for (u, v), w in sorted(g.weights.items()):
        out.append(f'  {u} -- {v} [label="{format_rational(w)}"];')
    out.append("}")
    return "\n".join(out) + "\n"
