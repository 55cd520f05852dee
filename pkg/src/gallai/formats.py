"""graph6 and edge-list codecs.

graph6 here is restricted to the single size byte form (n <= 62).  Upper
triangle bits are taken column by column, ``x(0,1), x(0,2), x(1,2), x(0,3), ...``,
packed big-endian into 6-bit groups and offset by 63.
"""

from __future__ import annotations

from typing import Iterator

from .errors import MalformedRecord, UnsupportedSize
from .graph import Graph

GRAPH6_MAX_N = 62
_HEADER = ">>graph6<<"


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise MalformedRecord("empty graph6 record")
    codes = [ord(c) - 63 for c in s]
    for c, ch in zip(codes, s):
        if not 0 <= c <= 63:
            raise MalformedRecord(f"byte {ch!r} outside the graph6 range 63..126")
    n = codes[0]
    if n > GRAPH6_MAX_N:
        # 126 introduces the multi-byte size forms
        raise UnsupportedSize(f"graph6 order {'>= 63' if n == 63 else n} not supported (max {GRAPH6_MAX_N})")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    data = codes[1:]
    if len(data) != need:
        raise MalformedRecord(f"expected {need} data bytes for n={n}, got {len(data)}")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if data[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    # Padding bits must be zero for the record to be canonical.
    if nbits % 6 and data[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise MalformedRecord("non-zero padding bits")
    return Graph(n, adj)


def to_graph6(g: Graph) -> str:
    n = g.n
    if n > GRAPH6_MAX_N:
        raise UnsupportedSize(f"graph6 order {n} not supported (max {GRAPH6_MAX_N})")
    adj = g.adj
    out = [chr(n + 63)]
    acc = 0
    width = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | (adj[i] >> j & 1)
            width += 1
            if width == 6:
                out.append(chr(acc + 63))
                acc = width = 0
    if width:
        out.append(chr((acc << (6 - width)) + 63))
    return "".join(out)


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"`` (0-indexed)."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise MalformedRecord("empty edge list")
    header = lines[0]
    try:
        if len(header) != 2:
            raise ValueError
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise MalformedRecord(f"bad header line {' '.join(header)!r}") from None
    if n < 0 or m < 0:
        raise MalformedRecord("negative counts in header")
    body = lines[1:]
    if len(body) != m:
        raise MalformedRecord(f"header announces {m} edges, found {len(body)}")
    edges = []
    for row in body:
        if len(row) != 2:
            raise MalformedRecord(f"bad edge line {' '.join(row)!r}")
        try:
            edges.append((int(row[0]), int(row[1])))
        except ValueError:
            raise MalformedRecord(f"bad edge line {' '.join(row)!r}") from None
    return Graph.from_edges(n, edges, strict=True)


def to_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def iter_graph6_lines(text: str) -> Iterator[tuple[str, Graph]]:
    """Batch reader: one record per line, blank lines and ``#`` comments skipped."""
    for line in text.splitlines():
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        yield s, parse_graph6(s)

