"""Graph and digraph containers backed by per-vertex neighbor bitsets.

Vertex sets are plain ``int`` bitmasks: bit ``v`` set means vertex ``v`` is a
member.  Capacity is 64 vertices so every set fits a machine word.
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property

MAX_ORDER = 64


class CapacityError(ValueError):
    """Raised when an order exceeds what an operation supports."""


def vset(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def full_set(n: int) -> int:
    return (1 << n) - 1


def _check_order(n: int) -> None:
    if not 1 <= n <= MAX_ORDER:
        raise CapacityError(f"order {n} outside supported range 1..{MAX_ORDER}")


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph; ``adj[v]`` is the neighbor bitset of ``v``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_order(self.n)
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match order")
        full = full_set(self.n)
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbor index >= n")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in members(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        _check_order(n)
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def nbrs(self) -> tuple[int, ...]:
        return self.adj

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in members(self.adj[v]) if u < v]

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Subgraph induced on ``vertices``, relabelled in ascending order."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        return Graph.from_edges(len(keep), edges)

    def remove_vertex(self, v: int) -> Graph:
        return self.induced(u for u in range(self.n) if u != v)

    def complement(self) -> Graph:
        full = full_set(self.n)
        return Graph(self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj)))

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for start in range(self.n):
            if seen >> start & 1:
                continue
            comp = frontier = 1 << start
            while frontier:
                nxt = 0
                for v in members(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(members(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) == 1


@dataclass(frozen=True)
class Digraph:
    """Directed simple graph; ``out[v]`` is the out-neighbor bitset of ``v``.

    Antiparallel arc pairs are allowed, loops are not.
    """

    n: int
    out: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_order(self.n)
        if len(self.out) != self.n:
            raise ValueError("out-neighbor list length does not match order")
        full = full_set(self.n)
        for v, row in enumerate(self.out):
            if row & ~full:
                raise ValueError(f"vertex {v} has an out-neighbor index >= n")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
        _check_order(n)
        out = [0] * n
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            out[u] |= 1 << v
        return cls(n, tuple(out))

    @property
    def nbrs(self) -> tuple[int, ...]:
        return self.out

    @cached_property
    def inn(self) -> tuple[int, ...]:
        rows = [0] * self.n
        for u, row in enumerate(self.out):
            for v in members(row):
                rows[v] |= 1 << u
        return tuple(rows)

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in members(self.out[u])]

    @property
    def num_arcs(self) -> int:
        return sum(row.bit_count() for row in self.out)

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out[u] >> v & 1)

    def reverse(self) -> Digraph:
        return Digraph(self.n, self.inn)

    def induced(self, vertices: Iterable[int]) -> Digraph:
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        arcs = [(index[u], index[v]) for u, v in self.arcs() if u in index and v in index]
        return Digraph.from_arcs(len(keep), arcs)

    def remove_arcs(self, arcs: Iterable[tuple[int, int]]) -> Digraph:
        out = list(self.out)
        for u, v in arcs:
            if not out[u] >> v & 1:
                raise ValueError(f"arc ({u}, {v}) not present")
            out[u] &= ~(1 << v)
        return Digraph(self.n, tuple(out))


def iter_subsets_of_size(n: int, k: int) -> Iterator[int]:
    """All ``k``-subsets of ``range(n)`` as bitmasks in increasing integer order."""
    if k < 0 or k > n:
        return
    if k == 0:
        yield 0
        return
    s = (1 << k) - 1
    limit = 1 << n
    while s < limit:
        yield s
        # Gosper's hack
        low = s & -s
        ripple = s + low
        s = (((ripple ^ s) >> 2) // low) | ripple
