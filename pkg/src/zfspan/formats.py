"""graph6 / digraph6 codecs and a plain edge-list text format.

graph6 packs the upper triangle column by column (x(0,1), x(0,2), x(1,2),
x(0,3), ...), digraph6 packs the full n x n matrix row by row; both emit six
bits per printable byte offset by 63.
"""
from __future__ import annotations

from collections.abc import Iterable

from .graphs import MAX_ORDER, Digraph, Graph


class GraphFormatError(ValueError):
    """Base class for decode failures."""


class HeaderError(GraphFormatError):
    pass


class TruncatedError(GraphFormatError):
    pass


class OrderTooLargeError(GraphFormatError):
    pass


class LoopError(GraphFormatError):
    pass


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))


def _decode_order(data: str) -> tuple[int, str]:
    if not data:
        raise HeaderError("empty record")
    for ch in data:
        if not 63 <= ord(ch) <= 126:
            raise HeaderError(f"byte {ch!r} outside printable range 63..126")
    if data[0] != "~":
        return ord(data[0]) - 63, data[1:]
    if len(data) > 1 and data[1] == "~":
        raise OrderTooLargeError("8-byte order header exceeds vertex capacity")
    if len(data) < 4:
        raise HeaderError("truncated 4-byte order header")
    n = 0
    for ch in data[1:4]:
        n = (n << 6) | (ord(ch) - 63)
    return n, data[4:]


def _check_capacity(n: int) -> None:
    if n > MAX_ORDER:
        raise OrderTooLargeError(f"order {n} exceeds capacity {MAX_ORDER}")
    if n < 1:
        raise HeaderError("order 0 graphs are not supported")


def _pack(bits: Iterable[int]) -> str:
    bits = list(bits)
    bits += [0] * (-len(bits) % 6)
    chars = []
    for i in range(0, len(bits), 6):
        value = 0
        for b in bits[i:i + 6]:
            value = (value << 1) | b
        chars.append(chr(value + 63))
    return "".join(chars)


def _unpack(body: str, nbits: int) -> list[int]:
    need = -(-nbits // 6)
    if len(body) < need:
        raise TruncatedError(f"body has {len(body)} bytes, expected {need}")
    if len(body) > need:
        raise HeaderError(f"body has {len(body) - need} trailing bytes")
    bits = []
    for ch in body:
        value = ord(ch) - 63
        bits.extend((value >> shift) & 1 for shift in range(5, -1, -1))
    return bits[:nbits]


def to_graph6(g: Graph) -> str:
    bits = (int(g.has_edge(i, j)) for j in range(1, g.n) for i in range(j))
    return _encode_order(g.n) + _pack(bits)


def parse_graph6(text: str) -> Graph:
    data = text.strip()
    if data.startswith(">>graph6<<"):
        data = data[len(">>graph6<<"):]
    if data.startswith("&") or data.startswith(":"):
        raise HeaderError("not a graph6 record")
    n, body = _decode_order(data)
    _check_capacity(n)
    bits = _unpack(body, n * (n - 1) // 2)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def to_digraph6(d: Digraph) -> str:
    bits = (int(d.has_arc(i, j)) for i in range(d.n) for j in range(d.n))
    return "&" + _encode_order(d.n) + _pack(bits)


def parse_digraph6(text: str) -> Digraph:
    data = text.strip()
    if data.startswith(">>digraph6<<"):
        data = data[len(">>digraph6<<"):]
    if not data.startswith("&"):
        raise HeaderError("digraph6 record must start with '&'")
    n, body = _decode_order(data[1:])
    _check_capacity(n)
    bits = _unpack(body, n * n)
    arcs = []
    for i in range(n):
        for j in range(n):
            if bits[i * n + j]:
                if i == j:
                    raise LoopError(f"loop bit set at vertex {i}")
                arcs.append((i, j))
    return Digraph.from_arcs(n, arcs)


def to_edge_list(g: Graph | Digraph) -> str:
    pairs = g.edges() if isinstance(g, Graph) else g.arcs()
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in pairs]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str, directed: bool = False) -> Graph | Digraph:
    """Parse ``n <count>`` followed by one ``u v`` pair per line (0-indexed).

    Blank lines and ``#`` comments are ignored.
    """
    n = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "n" or not fields[1].isdigit():
                raise HeaderError(f"line {lineno}: expected header 'n <count>'")
            n = int(fields[1])
            _check_capacity(n)
            continue
        if len(fields) != 2 or not all(f.isdigit() for f in fields):
            raise GraphFormatError(f"line {lineno}: expected 'u v'")
        u, v = int(fields[0]), int(fields[1])
        if u >= n or v >= n:
            raise GraphFormatError(f"line {lineno}: vertex out of range for n={n}")
        if u == v:
            raise LoopError(f"line {lineno}: loop at vertex {u}")
        pairs.append((u, v))
    if n is None:
        raise HeaderError("missing 'n <count>' header")
    if directed:
        return Digraph.from_arcs(n, pairs)
    return Graph.from_edges(n, pairs)


def parse_any(text: str) -> Graph | Digraph:
    """Decode a graph6 or digraph6 record, choosing by the leading byte."""
    data = text.strip()
    if data.startswith("&") or data.startswith(">>digraph6<<"):
        return parse_digraph6(data)
    return parse_graph6(data)
