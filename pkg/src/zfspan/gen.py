"""Seeded generators for structured families, with independent validators.

Each ``sample_*`` function returns the graph together with the layout it was
built from; the matching validator re-checks the defining conditions on the
graph and layout alone.
"""
from __future__ import annotations

import random
from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache

from .graphs import Graph


def _rng(seed: int | random.Random | None) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_graph(n: int, p: float, seed: int | random.Random | None = None) -> Graph:
    rng = _rng(seed)
    return Graph.from_edges(n, [(u, v) for v in range(n) for u in range(v) if rng.random() < p])


def random_connected_graph(n: int, p: float, seed: int | random.Random | None = None) -> Graph:
    """Rejection-sample G(n, p) until connected."""
    rng = _rng(seed)
    while True:
        g = random_graph(n, p, rng)
        if g.is_connected():
            return g


# -- two parallel paths -------------------------------------------------------

@dataclass(frozen=True)
class ParallelDrawing:
    """Paths v_0..v_{k-1} (vertices 0..k-1) and w_0..w_{j-1} (vertices k..k+j-1).

    ``cross`` holds index pairs ``(i, l)`` for edges ``v_i w_l``.
    """

    k: int
    j: int
    cross: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return self.k + self.j

    @property
    def graph(self) -> Graph:
        edges = [(i, i + 1) for i in range(self.k - 1)]
        edges += [(self.k + l, self.k + l + 1) for l in range(self.j - 1)]
        edges += [(i, self.k + l) for i, l in self.cross]
        return Graph.from_edges(self.n, edges)

    @property
    def layers(self) -> tuple[list[int], list[int]]:
        return list(range(self.k)), list(range(self.k, self.n))


def crossing(cross: Sequence[tuple[int, int]]) -> bool:
    return any(i < a and l > b for i, l in cross for a, b in cross)


@lru_cache(maxsize=None)
def _chain_weights(k: int, j: int) -> dict[tuple[int, int], int]:
    """Number of non-crossing edge sets whose last edge (in product order) is ``(i, l)``."""
    weights: dict[tuple[int, int], int] = {}
    for i in range(k):
        for l in range(j):
            weights[(i, l)] = 1 + sum(weights[(a, b)] for a in range(i + 1) for b in range(l + 1)
                                      if (a, b) != (i, l))
    return weights


def count_noncrossing(k: int, j: int) -> int:
    return 1 + sum(_chain_weights(k, j).values())


def sample_noncrossing(k: int, j: int, rng: random.Random) -> tuple[tuple[int, int], ...]:
    """Uniform sample among all non-crossing between-layer edge sets."""
    weights = _chain_weights(k, j)
    chosen = []
    options = list(weights)
    while True:
        pick = rng.randrange(1 + sum(weights[o] for o in options))
        if pick == 0:
            break
        pick -= 1
        for o in options:
            if pick < weights[o]:
                chosen.append(o)
                break
            pick -= weights[o]
        top = chosen[-1]
        options = [(a, b) for a, b in options if a <= top[0] and b <= top[1] and (a, b) != top]
    return tuple(sorted(chosen))


def iter_noncrossing(k: int, j: int):
    """Every non-crossing between-layer edge set, each exactly once."""
    cells = sorted(_chain_weights(k, j))

    def extend(chain: list[tuple[int, int]], start: int):
        yield tuple(chain)
        for idx in range(start, len(cells)):
            a, b = cells[idx]
            if chain and b < chain[-1][1]:
                continue
            if chain and a < chain[-1][0]:
                continue
            chain.append((a, b))
            yield from extend(chain, idx + 1)
            chain.pop()

    yield from extend([], 0)


def is_path_graph(g: Graph) -> bool:
    return g.num_edges == g.n - 1 and max(g.degrees()) <= 2 and g.is_connected()


def validate_parallel_drawing(g: Graph, k: int) -> bool:
    """Vertices 0..k-1 and k..n-1 induce index-ordered paths, the edges between
    them do not cross, and ``g`` is not itself a path."""
    n = g.n
    if not 1 <= k < n:
        return False
    for layer in (range(k), range(k, n)):
        for a in layer:
            for b in layer:
                if a < b and g.has_edge(a, b) != (b == a + 1):
                    return False
    cross = [(a, b - k) for a, b in g.edges() if a < k <= b]
    return not crossing(cross) and not is_path_graph(g)


def sample_two_parallel_paths(k: int, j: int, seed: int | random.Random | None = None,
                              attempts: int = 1000) -> ParallelDrawing:
    if k < 1 or j < 1:
        raise ValueError("both paths need at least one vertex")
    rng = _rng(seed)
    for _ in range(attempts):
        drawing = ParallelDrawing(k, j, sample_noncrossing(k, j, rng))
        if not is_path_graph(drawing.graph):
            break
    else:
        raise ValueError(f"no non-path drawing found for k={k}, j={j}")
    assert validate_parallel_drawing(drawing.graph, k)
    return drawing


# -- two-set perfectly orderable ------------------------------------------------

@dataclass(frozen=True)
class TwoSetOrder:
    """u_i is vertex i-1 and w_i is vertex m+i-1."""

    m: int
    graph: Graph


def validate_two_set_order(g: Graph, m: int) -> bool:
    if g.n != 2 * m:
        return False
    for i in range(m):
        allowed = sum(1 << (m + j) for j in range(i + 1))
        if g.adj[i] & ~allowed or not g.has_edge(i, m + i):
            return False
    return True


def sample_two_set_perfectly_orderable(m: int, density: float,
                                       seed: int | random.Random | None = None) -> TwoSetOrder:
    """Random u_i w_j edges (j < i) and W-internal edges, each with probability ``density``."""
    if m < 1:
        raise ValueError("m must be positive")
    if not 0 <= density <= 1:
        raise ValueError("density must lie in [0, 1]")
    rng = _rng(seed)
    edges = [(i, m + i) for i in range(m)]
    edges += [(i, m + j) for i in range(m) for j in range(i) if rng.random() < density]
    edges += [(m + a, m + b) for b in range(m) for a in range(b) if rng.random() < density]
    g = Graph.from_edges(2 * m, edges)
    assert validate_two_set_order(g, m)
    return TwoSetOrder(m, g)


# -- bouquets and dipoles -------------------------------------------------------

def odd_cycles_bouquet(lengths: Sequence[int]) -> Graph:
    """Odd cycles of the given lengths sharing vertex 0."""
    if not lengths or any(L < 3 or L % 2 == 0 for L in lengths):
        raise ValueError("cycle lengths must be odd and at least 3")
    edges = []
    nxt = 1
    for L in lengths:
        cyc = [0] + list(range(nxt, nxt + L - 1))
        nxt += L - 1
        edges += [(cyc[i], cyc[(i + 1) % L]) for i in range(L)]
    return Graph.from_edges(nxt, edges)


def validate_odd_cycles_bouquet(g: Graph, lengths: Sequence[int]) -> bool:
    """Vertex 0 lies on every cycle; removing it leaves paths whose ends touch 0."""
    if g.degree(0) != 2 * len(lengths):
        return False
    rest = g.remove_vertex(0)
    comps = sorted(len(c) for c in rest.components())
    if comps != sorted(L - 1 for L in lengths):
        return False
    for comp in rest.components():
        verts = [v + 1 for v in comp]
        inner = [sum(1 for u in verts if g.has_edge(u, v)) for v in verts]
        ends = [v for v, d in zip(verts, inner) if d == 1]
        if sorted(inner) != [1, 1] + [2] * (len(verts) - 2):
            return False
        if sorted(v for v in verts if g.has_edge(0, v)) != sorted(ends):
            return False
    return all(g.degree(v) == 2 for v in range(1, g.n))


@dataclass(frozen=True)
class DipoleLayout:
    """Bouquet vertices ``u`` and ``v`` joined by a chain of path segments.

    ``segments[s]`` lists the vertex orders of the parallel paths of segment
    ``s``: one entry for a single segment, several for a multiple segment.
    """

    graph: Graph
    u: int
    v: int
    u_cycles: tuple[int, ...]
    v_cycles: tuple[int, ...]
    segments: tuple[tuple[int, ...], ...]
    junctions: tuple[int, ...]


def doubly_extended_bouquet_dipole(u_cycles: Sequence[int], v_cycles: Sequence[int],
                                   segments: Sequence[Sequence[int]]) -> DipoleLayout:
    """Build a doubly extended bouquet-dipole.

    Reading of the alternation clause: segments alternate between single and
    multiple, the first and last segments are single, and every path order is
    even and at least 2.
    """
    if not u_cycles or not v_cycles:
        raise ValueError("both bouquet vertices need at least one cycle")
    if any(L < 3 or L % 2 == 0 for L in list(u_cycles) + list(v_cycles)):
        raise ValueError("bouquet cycles must be odd with length >= 3")
    if not segments or len(segments[0]) != 1 or len(segments[-1]) != 1:
        raise ValueError("the chain must start and end with a single segment")
    for a, b in zip(segments, segments[1:]):
        if (len(a) > 1) == (len(b) > 1):
            raise ValueError("segments must alternate between single and multiple")
    for seg in segments:
        if any(order < 2 or order % 2 for order in seg):
            raise ValueError("segment paths must have even order >= 2")
        if sorted(seg).count(2) > 1:
            raise ValueError("at most one path of order 2 per segment (simple graph)")
    edges: list[tuple[int, int]] = []
    count = 0

    def new() -> int:
        nonlocal count
        count += 1
        return count - 1

    def petals(center: int, lengths: Sequence[int]) -> None:
        for L in lengths:
            cyc = [center] + [new() for _ in range(L - 1)]
            edges.extend((cyc[i], cyc[(i + 1) % L]) for i in range(L))

    u = new()
    petals(u, u_cycles)
    junctions = [u]
    for seg in segments:
        start = junctions[-1]
        inner = [[new() for _ in range(order - 2)] for order in seg]
        end = new()
        for chain in inner:
            walk = [start] + chain + [end]
            edges.extend(zip(walk, walk[1:]))
        junctions.append(end)
    v = junctions[-1]
    petals(v, v_cycles)
    layout = DipoleLayout(Graph.from_edges(count, edges), u, v, tuple(u_cycles),
                          tuple(v_cycles), tuple(tuple(s) for s in segments), tuple(junctions))
    assert validate_dipole(layout)
    return layout


def validate_dipole(layout: DipoleLayout) -> bool:
    """Degree and adjacency bookkeeping implied by the layout."""
    g = layout.graph
    jset = set(layout.junctions)
    expected_n = 1 + sum(L - 1 for L in layout.u_cycles + layout.v_cycles)
    expected_n += sum(sum(o - 2 for o in seg) + 1 for seg in layout.segments)
    if g.n != expected_n:
        return False
    for x in range(g.n):
        if x not in jset and g.degree(x) != 2:
            return False
    segs = layout.segments
    for idx, x in enumerate(layout.junctions):
        deg = 0
        if idx > 0:
            deg += len(segs[idx - 1])
        if idx < len(segs):
            deg += len(segs[idx])
        if x == layout.u:
            deg += 2 * len(layout.u_cycles)
        if x == layout.v:
            deg += 2 * len(layout.v_cycles)
        if g.degree(x) != deg:
            return False
    expected_m = sum(layout.u_cycles) + sum(layout.v_cycles)
    expected_m += sum(o - 1 for seg in segs for o in seg)
    return g.is_connected() and g.num_edges == expected_m


def sample_dipole(rng: random.Random, max_order: int = 20) -> DipoleLayout:
    """Random dipole within ``max_order`` vertices."""
    while True:
        u_cycles = [rng.choice((3, 5)) for _ in range(rng.randint(1, 2))]
        v_cycles = [rng.choice((3, 5)) for _ in range(rng.randint(1, 2))]
        nseg = rng.choice((1, 3))
        segments = []
        for s in range(nseg):
            if s % 2 == 0:
                segments.append((rng.choice((2, 4)),))
            else:
                count = rng.randint(2, 3)
                orders = [4] * count
                if rng.random() < 0.5:
                    orders[0] = 2
                segments.append(tuple(orders))
        try:
            layout = doubly_extended_bouquet_dipole(u_cycles, v_cycles, segments)
        except ValueError:
            continue
        if layout.graph.n <= max_order:
            return layout


def example_dipole() -> DipoleLayout:
    """Bouquet-dipole on 30 vertices: cycles 5,3,3 at u, a 7-cycle at v."""
    return doubly_extended_bouquet_dipole([5, 3, 3], [7], [(4,), (4, 6, 4), (4,)])


def example_two_set_graph() -> TwoSetOrder:
    """The 8-vertex two-set perfectly orderable example (u_i = i-1, w_i = 3+i)."""
    extra = [(1, 4), (2, 4), (3, 6), (3, 5), (5, 6), (4, 5), (4, 6), (7, 6), (7, 5)]
    g = Graph.from_edges(8, [(i, 4 + i) for i in range(4)] + extra)
    assert validate_two_set_order(g, 4)
    return TwoSetOrder(4, g)


def gen_structured(name: str, params: Sequence, seed: int | None = None) -> Graph:
    """Graph-only front end used by the CLI family grammar."""
    if name == "two_parallel_paths":
        k, j = params
        return sample_two_parallel_paths(k, j, seed).graph
    if name == "two_set_perfectly_orderable":
        m, density = params
        return sample_two_set_perfectly_orderable(m, density, seed).graph
    if name == "odd_cycles_bouquet":
        return odd_cycles_bouquet(params)
    if name == "doubly_extended_bouquet_dipole":
        u_cycles, v_cycles, segments = params
        return doubly_extended_bouquet_dipole(u_cycles, v_cycles, segments).graph
    raise ValueError(f"unknown structured family {name!r}")
