"""Edge-list and graph6 reading and writing."""

from __future__ import annotations

from .graph import Graph, GraphError

GRAPH6_HEADER = ">>graph6<<"


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def parse_edgelist(text: str) -> Graph:
    """``u v`` per line, ``#`` comments.

    A ``# vertices: a b c`` comment fixes the vertex order and can declare
    isolated vertices; otherwise vertices are numbered by first appearance.
    """
    names: list[str] = []
    index: dict[str, int] = {}
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()

    def vid(name: str) -> int:
        if name not in index:
            index[name] = len(names)
            names.append(name)
        return index[name]

    for lineno, raw in enumerate(text.splitlines(), 1):
        stripped = raw.strip()
        if stripped.startswith("#"):
            body = stripped[1:].strip()
            if body.startswith("vertices:"):
                for name in body[len("vertices:") :].split():
                    if name in index:
                        raise ParseError(f"vertex {name!r} declared twice", lineno)
                    vid(name)
            continue
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"malformed line {line!r} (expected 'u v')", lineno)
        a, b = parts
        if a == b:
            raise ParseError(f"self-loop at {a!r}", lineno)
        u, v = vid(a), vid(b)
        e = (min(u, v), max(u, v))
        if e in seen:
            raise ParseError(f"duplicate edge {a}-{b}", lineno)
        seen.add(e)
        edges.append(e)
    return Graph.build(len(names), edges, names)


def _graph6_size(data: bytes) -> tuple[int, int]:
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 4 and data[1] != 126:
        return (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63), 4
    if len(data) >= 8:
        n = 0
        for ch in data[2:8]:
            n = n << 6 | (ch - 63)
        return n, 8
    raise ValueError("truncated size field")


def parse_graph6(line: str, lineno: int | None = None) -> Graph:
    s = line.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER) :]
    data = s.encode("ascii", errors="replace")
    if not data or any(ch < 63 or ch > 126 for ch in data):
        raise ParseError(f"invalid graph6 string {s!r}", lineno)
    try:
        n, offset = _graph6_size(data)
    except ValueError as exc:
        raise ParseError(f"invalid graph6 string {s!r}: {exc}", lineno) from None
    nbits = n * (n - 1) // 2
    body = data[offset:]
    if len(body) != (nbits + 5) // 6:
        raise ParseError(f"graph6 string {s!r} has the wrong length for {n} vertices", lineno)
    bits = []
    for ch in body:
        v = ch - 63
        bits.extend((v >> k) & 1 for k in range(5, -1, -1))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.build(n, edges)


def to_graph6(g: Graph) -> str:
    n = g.order
    index = {v: i for i, v in enumerate(g.vertices)}
    es = {(min(index[u], index[v]), max(index[u], index[v])) for u, v in g.edges}
    if n < 63:
        out = [n + 63]
    elif n < 258048:
        out = [126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    else:
        out = [126, 126] + [(n >> s & 63) + 63 for s in range(30, -1, -6)]
    bits = [int((i, j) in es) for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    for i in range(0, len(bits), 6):
        v = 0
        for b in bits[i : i + 6]:
            v = v << 1 | b
        out.append(v + 63)
    return bytes(out).decode("ascii")


def to_edgelist(g: Graph) -> str:
    lines = ["# vertices: " + " ".join(g.label(v) for v in g.vertices)]
    lines += [f"{g.label(u)} {g.label(v)}" for u, v in g.sorted_edges]
    return "\n".join(lines) + "\n"


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip() if not raw.startswith(GRAPH6_HEADER) else raw.strip()
        if line:
            out.append((lineno, line))
    return out


def detect_format(text: str) -> str:
    """graph6 when every content line is a single token, else edge list."""
    lines = _content_lines(text)
    if lines and all(len(line.split()) == 1 for _, line in lines):
        return "graph6"
    return "edgelist"


def parse_graphs(text: str, fmt: str = "auto") -> list[Graph]:
    """All graphs in ``text``: one per line for graph6, one per document for edge lists."""
    if fmt == "auto":
        fmt = detect_format(text)
    if fmt == "edgelist":
        return [parse_edgelist(text)]
    if fmt == "graph6":
        return [parse_graph6(line, lineno) for lineno, line in _content_lines(text)]
    raise ParseError(f"unknown input format {fmt!r}")


def parse_graph(text: str, fmt: str = "auto") -> Graph:
    graphs = parse_graphs(text, fmt)
    if len(graphs) != 1:
        raise ParseError(f"expected one graph, found {len(graphs)}")
    return graphs[0]
