"""Exhaustive labeled enumerators with index-addressable members.

Every universe is indexed ``0..size-1`` so callers can split it into
contiguous ranges and process them independently.
"""
from __future__ import annotations

import heapq
from collections.abc import Iterator

from .graphs import Digraph, Graph
from .kernel import digraph_pairs, graph_pairs

LIMITS = {"graphs": 7, "digraphs": 5, "trees": 8}


class RangeError(ValueError):
    """Requested order is outside the supported enumeration range."""


def _check(kind: str, n: int) -> None:
    if kind not in LIMITS:
        raise ValueError(f"unknown kind {kind!r}")
    if not 1 <= n <= LIMITS[kind]:
        raise RangeError(f"{kind} enumeration supports 1 <= n <= {LIMITS[kind]}, got {n}")


def universe_size(kind: str, n: int) -> int:
    _check(kind, n)
    if kind == "graphs":
        return 2 ** (n * (n - 1) // 2)
    if kind == "digraphs":
        return 2 ** (n * (n - 1))
    return n ** (n - 2) if n >= 2 else 1


def labeled_graph(n: int, index: int) -> Graph:
    pairs = graph_pairs(n)
    return Graph.from_edges(n, [p for k, p in enumerate(pairs) if index >> k & 1])


def labeled_digraph(n: int, index: int) -> Digraph:
    pairs = digraph_pairs(n)
    return Digraph.from_arcs(n, [p for k, p in enumerate(pairs) if index >> k & 1])


def prufer_sequence(n: int, index: int) -> list[int]:
    """The ``index``-th length n-2 sequence over ``range(n)`` (base-n digits)."""
    seq = []
    for _ in range(n - 2):
        index, digit = divmod(index, n)
        seq.append(digit)
    return seq[::-1]


def prufer_decode(seq: list[int], n: int) -> Graph:
    if len(seq) != max(n - 2, 0):
        raise ValueError("Prufer sequence must have length n-2")
    if n == 1:
        return Graph(1, (0,))
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph.from_edges(n, edges)


def labeled_tree(n: int, index: int) -> Graph:
    return prufer_decode(prufer_sequence(n, index), n)


_BUILDERS = {"graphs": labeled_graph, "digraphs": labeled_digraph, "trees": labeled_tree}


def enumerate_labeled(kind: str, n: int, start: int = 0,
                      stop: int | None = None) -> Iterator[Graph | Digraph]:
    """Yield the labeled objects with index in ``[start, stop)``."""
    size = universe_size(kind, n)
    stop = size if stop is None else min(stop, size)
    build = _BUILDERS[kind]
    for index in range(start, stop):
        yield build(n, index)


def split_range(size: int, parts: int) -> list[tuple[int, int]]:
    """Partition ``range(size)`` into at most ``parts`` contiguous chunks."""
    parts = max(1, min(parts, size)) if size else 1
    step, extra = divmod(size, parts)
    chunks = []
    lo = 0
    for i in range(parts):
        hi = lo + step + (1 if i < extra else 0)
        chunks.append((lo, hi))
        lo = hi
    return chunks
