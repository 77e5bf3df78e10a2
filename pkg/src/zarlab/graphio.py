"""Edge-list and graph6 readers/writers.

Edge-list format::

    # comments allowed anywhere
    vertices 3
    0 1
    1 2

graph6 follows the nauty format description bit for bit, including the
zero padding of the final 6-bit group; non-zero padding or a wrong data
length is rejected.
"""

from __future__ import annotations

import io
import os

from .errors import DomainError, GraphFormatError
from .graph import Graph

HEADER = ">>graph6<<"


def _text(source) -> str:
    if isinstance(source, (bytes, bytearray)):
        return source.decode("ascii")
    if isinstance(source, str):
        return source
    if isinstance(source, (io.IOBase,)) or hasattr(source, "read"):
        return _text(source.read())
    raise TypeError(f"cannot read a graph from {type(source).__name__}")


# -- edge list ---------------------------------------------------------------

def parse_edgelist(text: str) -> Graph:
    n = None
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "vertices":
                raise GraphFormatError(f"expected 'vertices N' header, got {raw.strip()!r}", lineno)
            try:
                n = int(fields[1])
            except ValueError:
                raise GraphFormatError(f"vertex count {fields[1]!r} is not an integer", lineno) from None
            if n < 0:
                raise GraphFormatError(f"negative vertex count {n}", lineno)
            continue
        if len(fields) != 2:
            raise GraphFormatError(f"expected 'u v', got {raw.strip()!r}", lineno)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphFormatError(f"non-integer vertex in {raw.strip()!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex index out of range 0..{n - 1} in {raw.strip()!r}", lineno)
        if u == v:
            raise GraphFormatError(f"loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {key[0]} {key[1]}", lineno)
        seen.add(key)
        edges.append(key)
    if n is None:
        raise GraphFormatError("missing 'vertices N' header")
    return Graph(n, edges)


def write_edgelist(G: Graph) -> str:
    lines = [f"vertices {G.n}"]
    lines += [f"{u} {v}" for u, v in G.edges()]
    return "\n".join(lines) + "\n"


# -- graph6 ------------------------------------------------------------------

def _encode_n(n):
    if n < 0:
        raise DomainError(f"negative vertex count {n}")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n < 1 << 36:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise DomainError(f"graph6 cannot encode n = {n}")


def _decode_n(data):
    vals = [ord(c) - 63 for c in data[:8]]
    if any(not 0 <= v <= 63 for v in vals):
        raise GraphFormatError("graph6 characters must lie in '?'..'~'")
    if not vals:
        raise GraphFormatError("empty graph6 string")
    if vals[0] < 63:
        return vals[0], 1
    if len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise GraphFormatError("truncated graph6 size field")
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        if n <= 258047:
            raise GraphFormatError(f"non-canonical 8-byte size field for n = {n}")
        return n, 8
    if len(vals) < 4:
        raise GraphFormatError("truncated graph6 size field")
    n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
    if n <= 62:
        raise GraphFormatError(f"non-canonical 4-byte size field for n = {n}")
    return n, 4


def write_graph6(G: Graph) -> str:
    n = G.n
    nbits = n * (n - 1) // 2
    bits = bytearray(nbits + (-nbits) % 6)
    # bit index of pair (i, j), i < j, is j*(j-1)/2 + i
    for u, v in G.edges():
        bits[v * (v - 1) // 2 + u] = 1
    out = [_encode_n(n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_graph6_line(line: str) -> Graph:
    line = line.strip()
    if line.startswith(HEADER):
        line = line[len(HEADER):]
    n, off = _decode_n(line)
    data = line[off:]
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) != need:
        raise GraphFormatError(f"graph6 data for n = {n} needs {need} characters, got {len(data)}")
    edges = []
    vals = []
    for c in data:
        v = ord(c) - 63
        if not 0 <= v <= 63:
            raise GraphFormatError(f"invalid graph6 character {c!r}")
        vals.append(v)
    bit = 0
    for j in range(1, n):
        for i in range(j):
            if (vals[bit // 6] >> (5 - bit % 6)) & 1:
                edges.append((i, j))
            bit += 1
    if need and vals[-1] & ((1 << (need * 6 - nbits)) - 1):
        raise GraphFormatError("non-zero padding bits in graph6 data")
    return Graph(n, edges)


def parse_graph6(text: str) -> Graph:
    lines = [(i, ln) for i, ln in enumerate(text.splitlines(), 1) if ln.strip()]
    if len(lines) != 1:
        raise GraphFormatError(f"expected exactly one graph6 line, found {len(lines)}")
    lineno, line = lines[0]
    try:
        return parse_graph6_line(line)
    except GraphFormatError as exc:
        raise GraphFormatError(str(exc), lineno) from None


def iter_graph6(text: str):
    """Yield every graph in a multi-line graph6 collection."""
    for lineno, line in enumerate(text.splitlines(), 1):
        if line.strip():
            try:
                yield parse_graph6_line(line)
            except GraphFormatError as exc:
                raise GraphFormatError(str(exc), lineno) from None


# -- dispatch ----------------------------------------------------------------

FORMATS = ("edgelist", "graph6", "auto")


def sniff_format(text: str) -> str:
    for line in text.splitlines():
        content = line.split("#", 1)[0].strip()
        if content:
            return "edgelist" if content.startswith("vertices") else "graph6"
    return "edgelist"


def parse_graph(source, format: str = "auto") -> Graph:
    """Read a graph from a str, bytes or file object."""
    text = _text(source)
    if format == "auto":
        format = sniff_format(text)
    if format == "edgelist":
        return parse_edgelist(text)
    if format == "graph6":
        return parse_graph6(text)
    raise DomainError(f"unknown graph format {format!r}; choose from {', '.join(FORMATS)}")


def write_graph(G: Graph, format: str = "edgelist") -> str:
    if format == "edgelist":
        return write_edgelist(G)
    if format == "graph6":
        return write_graph6(G) + "\n"
    raise DomainError(f"unknown graph format {format!r}")


def read_graph(path, format: str = "auto") -> Graph:
    with open(os.fspath(path), "rb") as fh:
        return parse_graph(fh.read(), format)


# -- 0/1 matrices (solver witnesses) -----------------------------------------

def write_matrix(rows: list[str], comment: str = "") -> str:
    """``matrix M N`` header then one 0/1 string per row."""
    m, n = len(rows), len(rows[0]) if rows else 0
    head = [f"# {comment}"] if comment else []
    return "\n".join(head + [f"matrix {m} {n}"] + list(rows)) + "\n"


def parse_matrix(text: str) -> list[str]:
    rows, shape = [], None
    for lineno, raw in enumerate(_text(text).splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if shape is None:
            fields = line.split()
            if len(fields) != 3 or fields[0] != "matrix":
                raise GraphFormatError(f"expected 'matrix M N' header, got {raw.strip()!r}", lineno)
            try:
                shape = int(fields[1]), int(fields[2])
            except ValueError:
                raise GraphFormatError("matrix dimensions must be integers", lineno) from None
            continue
        if len(line) != shape[1] or set(line) - {"0", "1"}:
            raise GraphFormatError(f"row must be {shape[1]} characters of 0/1", lineno)
        rows.append(line)
    if shape is None:
        raise GraphFormatError("missing 'matrix M N' header")
    if len(rows) != shape[0]:
        raise GraphFormatError(f"expected {shape[0]} rows, got {len(rows)}")
    return rows
