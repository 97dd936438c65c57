"""graph6 / edge-list / DOT serialization.

graph6 follows the standard McKay encoding (short form below 63 vertices,
'~'-prefixed long form above).  The edge-list format is one ``i-j`` pair
per line in sorted order, preceded by an ``# order <n>`` comment so graphs
with isolated vertices round-trip exactly.
"""

from __future__ import annotations

from .core import Graph

GRAPH6_HEADER = ">>graph6<<"


class FormatError(ValueError):
    """Raised on malformed serialized graphs or certificates."""


def _g6_order_bytes(n: int) -> list[int]:
    if n <= 62:
        return [n + 63]
    if n <= 258047:
        return [126, (n >> 12) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    raise FormatError(f"order {n} too large for graph6")


def to_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 string (no trailing newline)."""
    out = _g6_order_bytes(g.n)
    buf = 0
    nbits = 0
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            buf = buf << 1 | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(buf + 63)
                buf = nbits = 0
    if nbits:
        out.append((buf << (6 - nbits)) + 63)
    return bytes(out).decode("ascii")


def from_graph6(text: str) -> Graph:
    """Decode a graph6 string (optionally with the ``>>graph6<<`` header)."""
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise FormatError("empty graph6 string")
    data = s.encode("ascii", errors="replace")
    if any(b < 63 or b > 126 for b in data):
        bad = next(i for i, b in enumerate(data) if b < 63 or b > 126)
        raise FormatError(f"invalid graph6 character at position {bad}")
    if data[0] == 126:
        if len(data) < 4:
            raise FormatError("truncated graph6 order")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise FormatError(f"graph6 body has {len(body)} characters, expected {need}")
    rows = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if (body[idx // 6] - 63) >> (5 - idx % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            idx += 1
    return Graph.from_adjacency(rows)


def to_edge_list(g: Graph) -> str:
    """One sorted ``i-j`` line per edge, after an ``# order <n>`` comment."""
    lines = [f"# order {g.n}"]
    lines += [f"{u}-{v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_edge_token(token: str) -> tuple[int, int]:
    """Parse a single ``i-j`` edge token."""
    u, sep, v = token.partition("-")
    if not sep:
        raise FormatError(f"malformed edge token {token!r} (expected i-j)")
    try:
        a, b = int(u), int(v)
    except ValueError:
        raise FormatError(f"malformed edge token {token!r} (expected i-j)") from None
    if a < 0 or b < 0:
        raise FormatError(f"negative vertex label in edge token {token!r}")
    return (a, b) if a < b else (b, a)


def from_edge_list(text: str) -> Graph:
    """Parse an edge list; order comes from ``# order`` or the labels seen."""
    order = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            fields = line[1:].split()
            if len(fields) == 2 and fields[0] == "order":
                try:
                    order = int(fields[1])
                except ValueError:
                    raise FormatError(f"line {lineno}: bad order comment {line!r}") from None
            continue
        try:
            edges.append(parse_edge_token(line))
        except FormatError as exc:
            raise FormatError(f"line {lineno}: {exc}") from None
    n = max((v for e in edges for v in e), default=-1) + 1
    if order is not None:
        if order < n:
            raise FormatError(f"declared order {order} smaller than largest label {n - 1}")
        n = order
    return Graph.from_edges(n, edges)


def to_dot(g: Graph) -> str:
    """Render ``g`` as Graphviz DOT with vertex labels 0..n-1."""
    lines = ["graph G {"]
    lines += [f"  {v};" for v in range(g.n)]
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"
