"""Readers and writers for graph6 (short form), DIMACS .col and plain edge lists."""

from __future__ import annotations

from .graph import Graph


class GraphParseError(ValueError):
    """Malformed graph input; ``offset`` is a byte offset, ``line`` a 1-based line number."""

    def __init__(self, message: str, *, offset: int | None = None, line: int | None = None):
        where = f" at byte {offset}" if offset is not None else f" on line {line}" if line is not None else ""
        super().__init__(message + where)
        self.offset = offset
        self.line = line


class BadCharacterError(GraphParseError):
    pass


class TruncatedError(GraphParseError):
    pass


class LongFormError(GraphParseError):
    pass


class HeaderError(GraphParseError):
    pass


class VertexRangeError(GraphParseError):
    pass


class SelfLoopError(GraphParseError):
    pass


def _lines(text: str) -> list[str]:
    return text.replace("\r\n", "\n").replace("\r", "\n").split("\n")


def parse_graph6(text: str) -> Graph:
    """Decode one short-form graph6 line (n < 63)."""
    data = text.strip("\r\n")
    if data.startswith(">>graph6<<"):
        data = data[len(">>graph6<<"):]
    if not data:
        raise TruncatedError("empty graph6 string", offset=0)
    for i, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise BadCharacterError(f"invalid graph6 character {ch!r}", offset=i)
    n = ord(data[0]) - 63
    if n == 63:
        raise LongFormError("long-form graph6 (n >= 63) is not supported", offset=0)
    if n == 0:
        raise GraphParseError("graph6 encodes a graph with no vertices", offset=0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[1:]
    if len(body) < need:
        raise TruncatedError(f"expected {need} data bytes, found {len(body)}", offset=len(data))
    if len(body) > need:
        raise GraphParseError("trailing characters after graph6 data", offset=1 + need)
    edges = []
    bit = 0
    for j in range(1, n):
        for i in range(j):
            group = ord(body[bit // 6]) - 63
            if group >> (5 - bit % 6) & 1:
                edges.append((i, j))
            bit += 1
    return Graph(n, frozenset(edges))


def emit_graph6(g: Graph) -> str:
    if g.n >= 63:
        raise ValueError(f"graph6 long form is unsupported (n={g.n})")
    bits = [1 if (i, j) in g.edges else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(63 + g.n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        out.append(chr(63 + val))
    return "".join(out)


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphParseError(f"malformed integer {tok!r}", line=lineno) from None


def _edge(u: int, v: int, n: int, lineno: int) -> tuple[int, int]:
    if not (0 <= u < n and 0 <= v < n):
        raise VertexRangeError(f"vertex out of range for n={n}", line=lineno)
    if u == v:
        raise SelfLoopError(f"self-loop at vertex {u}", line=lineno)
    return (u, v)


def parse_dimacs(text: str) -> Graph:
    """DIMACS .col: ``c`` comments, one ``p edge N M`` line, ``e u v`` with 1-based vertices."""
    n = None
    edges = []
    for lineno, raw in enumerate(_lines(text), start=1):
        tok = raw.split()
        if not tok or tok[0] == "c":
            continue
        if tok[0] == "p":
            if n is not None:
                raise HeaderError("duplicate p-line", line=lineno)
            if len(tok) != 4 or tok[1] not in ("edge", "col"):
                raise HeaderError("expected 'p edge N M'", line=lineno)
            n = _int(tok[2], lineno)
            _int(tok[3], lineno)
            if n < 1:
                raise HeaderError("vertex count must be positive", line=lineno)
        elif tok[0] == "e":
            if n is None:
                raise HeaderError("edge line before p-line", line=lineno)
            if len(tok) != 3:
                raise GraphParseError("expected 'e u v'", line=lineno)
            edges.append(_edge(_int(tok[1], lineno) - 1, _int(tok[2], lineno) - 1, n, lineno))
        else:
            raise GraphParseError(f"unknown line type {tok[0]!r}", line=lineno)
    if n is None:
        raise HeaderError("missing p-line", line=1)
    return Graph(n, frozenset(edges))


def parse_edge_list(text: str) -> Graph:
    """First line ``n``, then one 0-based ``u v`` pair per line."""
    lines = _lines(text)
    n = None
    edges = []
    for lineno, raw in enumerate(lines, start=1):
        tok = raw.split()
        if not tok:
            continue
        if n is None:
            if len(tok) != 1:
                raise GraphParseError("first line must be the vertex count", line=lineno)
            n = _int(tok[0], lineno)
            if n < 1:
                raise GraphParseError("vertex count must be positive", line=lineno)
            continue
        if len(tok) != 2:
            raise GraphParseError("expected 'u v'", line=lineno)
        edges.append(_edge(_int(tok[0], lineno), _int(tok[1], lineno), n, lineno))
    if n is None:
        raise GraphParseError("missing vertex count", line=1)
    return Graph(n, frozenset(edges))


def emit_edge_list(g: Graph) -> str:
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.sorted_edges()]) + "\n"


def emit_dimacs(g: Graph) -> str:
    rows = [f"p edge {g.n} {g.m}"] + [f"e {u + 1} {v + 1}" for u, v in g.sorted_edges()]
    return "\n".join(rows) + "\n"


def detect_format(text: str) -> str:
    """'dimacs', 'edgelist' or 'graph6' by the first meaningful line."""
    for raw in _lines(text):
        tok = raw.split()
        if not tok:
            continue
        if tok[0] in ("c", "p"):
            return "dimacs"
        if len(tok) == 1 and tok[0].isdigit():
            return "edgelist"
        return "graph6"
    return "graph6"


PARSERS = {"graph6": parse_graph6, "dimacs": parse_dimacs, "edgelist": parse_edge_list}


def parse_graph(text: str, fmt: str = "auto") -> Graph:
    if fmt == "auto":
        fmt = detect_format(text)
    if fmt == "graph6":
        first = next((ln for ln in _lines(text) if ln.strip()), "")
        return parse_graph6(first.strip())
    return PARSERS[fmt](text)
