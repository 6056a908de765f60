"""Constructors for named graph and digraph families.

Numbering conventions: in ``union``, ``join`` and ``directed_join`` the first
operand's vertices come first; in ``cartesian_product`` the pair ``(u, v)`` is
vertex ``u * H.n + v``; ``star(m)`` puts the ``m`` leaves first and the center
last, matching ``complete_multipartite(m, 1)``.
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence

from .graphs import MAX_ORDER, CapacityError, Digraph, Graph, full_set


def _order(n: int) -> int:
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    if n > MAX_ORDER:
        raise CapacityError(f"order {n} exceeds capacity {MAX_ORDER}")
    return n


def path(n: int) -> Graph:
    return Graph.from_edges(_order(n), [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(_order(n), [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    full = full_set(_order(n))
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def empty_graph(n: int) -> Graph:
    return Graph(_order(n), (0,) * n)


def complete_multipartite(*parts: int) -> Graph:
    if not parts:
        raise ValueError("empty partite list")
    if any(p < 1 for p in parts):
        raise ValueError("partite sets must be nonempty")
    n = _order(sum(parts))
    label = []
    for i, size in enumerate(parts):
        label += [i] * size
    edges = [(u, v) for v in range(n) for u in range(v) if label[u] != label[v]]
    return Graph.from_edges(n, edges)


def star(m: int) -> Graph:
    return complete_multipartite(m, 1)


def union(g: Graph, h: Graph) -> Graph:
    n = _order(g.n + h.n)
    return Graph(n, g.adj + tuple(row << g.n for row in h.adj))


def join(g: Graph, h: Graph) -> Graph:
    n = _order(g.n + h.n)
    left, right = full_set(g.n), full_set(h.n) << g.n
    return Graph(n, tuple(row | right for row in g.adj) + tuple((row << g.n) | left for row in h.adj))


def cartesian_product(g: Graph, h: Graph) -> Graph:
    n = _order(g.n * h.n)
    edges = []
    for u in range(g.n):
        for a, b in h.edges():
            edges.append((u * h.n + a, u * h.n + b))
    for a, b in g.edges():
        for v in range(h.n):
            edges.append((a * h.n + v, b * h.n + v))
    return Graph.from_edges(n, edges)


def complete_minus_matching(n: int, size: int) -> Graph:
    """K_n with the matching {0 1, 2 3, ...} of the given size removed."""
    if not 0 <= size <= n // 2:
        raise ValueError(f"matching size {size} impossible in K_{n}")
    adj = list(complete(n).adj)
    for i in range(size):
        u, v = 2 * i, 2 * i + 1
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
    return Graph(n, tuple(adj))


def path_plus_isolated(n: int) -> Graph:
    """P_{n-1} together with one isolated vertex (the last index)."""
    if n < 2:
        raise ValueError("needs n >= 2")
    return union(path(n - 1), empty_graph(1))


def end_spider(n: int) -> Graph:
    """A path on n-2 vertices with two pendant vertices on its last vertex."""
    if n < 4:
        raise ValueError("needs n >= 4")
    edges = [(i, i + 1) for i in range(n - 3)] + [(n - 3, n - 2), (n - 3, n - 1)]
    return Graph.from_edges(n, edges)


# -- digraphs ---------------------------------------------------------------

def empty_digraph(n: int) -> Digraph:
    return Digraph(_order(n), (0,) * n)


def directed_cycle(n: int) -> Digraph:
    if n < 2:
        raise ValueError("a directed cycle needs at least 2 vertices")
    return Digraph.from_arcs(_order(n), [(i, (i + 1) % n) for i in range(n)])


def directed_path(n: int) -> Digraph:
    return Digraph.from_arcs(_order(n), [(i, i + 1) for i in range(n - 1)])


def complete_digraph(n: int) -> Digraph:
    full = full_set(_order(n))
    return Digraph(n, tuple(full & ~(1 << v) for v in range(n)))


def regular_tournament5() -> Digraph:
    return Digraph.from_arcs(5, [(i, (i + s) % 5) for i in range(5) for s in (1, 2)])


def directed_join(a: Digraph, b: Digraph) -> Digraph:
    """Disjoint union plus every arc from a vertex of ``a`` to a vertex of ``b``."""
    n = _order(a.n + b.n)
    right = full_set(b.n) << a.n
    return Digraph(n, tuple(row | right for row in a.out) + tuple(row << a.n for row in b.out))


def _cycle_arcs(cycles: Sequence[Sequence[int]], n: int) -> list[tuple[int, int]]:
    seen: set[int] = set()
    arcs = []
    for cyc in cycles:
        if len(cyc) < 3:
            raise ValueError(f"cycle {list(cyc)} shorter than 3")
        for v in cyc:
            if not 0 <= v < n:
                raise ValueError(f"cycle vertex {v} out of range")
            if v in seen:
                raise ValueError(f"cycles are not vertex-disjoint at {v}")
            seen.add(v)
        arcs += [(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))]
    return arcs


def complete_minus_disjoint_cycles(n: int, cycles: Sequence[Sequence[int]]) -> Digraph:
    """Complete digraph on ``n`` vertices minus the arcs of vertex-disjoint cycles."""
    return complete_digraph(n).remove_arcs(_cycle_arcs(cycles, n))


def hessenberg_path(n: int, back_arcs: Iterable[tuple[int, int]] = ()) -> Digraph:
    """Path 0->1->...->n-1 plus arcs ``(i, j)`` with ``j < i``."""
    arcs = [(i, i + 1) for i in range(n - 1)]
    for i, j in back_arcs:
        if j > i + 1 or i == j:
            raise ValueError(f"arc ({i}, {j}) is not a back arc")
        if j < i:
            arcs.append((i, j))
    return Digraph.from_arcs(_order(n), arcs)


def _forward_crossing(cross: Sequence[tuple[int, int]], r: int) -> tuple | None:
    ups = [(u, v - r) for u, v in cross if u < r <= v]
    downs = [(v - r, u) for v, u in cross if v >= r > u]
    for k, j in ups:
        for i, l in downs:
            if i < j and k < l:
                return (k, j + r), (i + r, l)
    return None


def two_parallel_hessenberg(
    r: int,
    s: int,
    cross_arcs: Iterable[tuple[int, int]] = (),
    back_arcs: Iterable[tuple[int, int]] = (),
) -> Digraph:
    """Hessenberg paths u_1..u_r (vertices 0..r-1) and v_1..v_s (r..r+s-1).

    ``cross_arcs`` join the two paths and must contain no forward-crossing
    pair (u_k, v_j), (v_i, u_l) with i < j and k < l.  ``back_arcs`` are
    added inside either path and must point backwards.
    """
    if r < 1 or s < 1:
        raise ValueError("both paths must be nonempty")
    n = _order(r + s)
    arcs = [(i, i + 1) for i in range(r - 1)] + [(r + i, r + i + 1) for i in range(s - 1)]
    for i, j in back_arcs:
        same_side = (i < r) == (j < r)
        if not same_side or j >= i:
            raise ValueError(f"arc ({i}, {j}) is not a back arc inside one path")
        arcs.append((i, j))
    cross = list(cross_arcs)
    for u, v in cross:
        if (u < r) == (v < r):
            raise ValueError(f"arc ({u}, {v}) does not cross between the paths")
    bad = _forward_crossing(cross, r)
    if bad:
        raise ValueError(f"forward crossing arcs {bad}")
    return Digraph.from_arcs(n, arcs + cross)


def figure2_digraph() -> Digraph:
    """Hessenberg path v1..v5 (vertices 0..4) with back arcs v4v2, v5v4, v4v1."""
    return hessenberg_path(5, [(3, 1), (4, 3), (3, 0)])


GRAPH_FAMILIES = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "empty": empty_graph,
    "star": star,
    "kmp": complete_multipartite,
    "kminusm": complete_minus_matching,
    "pk1": path_plus_isolated,
    "spider": end_spider,
}

DIGRAPH_FAMILIES = {
    "dcycle": directed_cycle,
    "dpath": directed_path,
    "dcomplete": complete_digraph,
    "dempty": empty_digraph,
    "tournament5": regular_tournament5,
    "fig2": figure2_digraph,
}


def family(name: str, params: Sequence[int] = ()) -> Graph:
    try:
        ctor = GRAPH_FAMILIES[name]
    except KeyError:
        raise ValueError(f"unknown graph family {name!r}") from None
    return ctor(*params)


def dfamily(name: str, params: Sequence[int] = ()) -> Digraph:
    try:
        ctor = DIGRAPH_FAMILIES[name]
    except KeyError:
        raise ValueError(f"unknown digraph family {name!r}") from None
    return ctor(*params)


def parse_family_spec(spec: str) -> Graph | Digraph:
    """Build a graph from the mini-grammar ``name:p1,p2,...``.

    Graph terms may be chained left to right with ``+`` (union), ``^`` (join)
    and ``#`` (Cartesian product), e.g. ``path:4+empty:1``.
    """
    ops = {"+": union, "^": join, "#": cartesian_product}
    tokens: list[str] = []
    term = ""
    for ch in spec.replace(" ", ""):
        if ch in ops:
            tokens += [term, ch]
            term = ""
        else:
            term += ch
    tokens.append(term)

    def build(text: str) -> Graph | Digraph:
        name, _, args = text.partition(":")
        params = [int(a) for a in args.split(",")] if args else []
        if name in DIGRAPH_FAMILIES:
            return dfamily(name, params)
        return family(name, params)

    result = build(tokens[0])
    for op, text in zip(tokens[1::2], tokens[2::2]):
        rhs = build(text)
        if isinstance(result, Digraph) or isinstance(rhs, Digraph):
            if op != "^":
                raise ValueError(f"operator {op!r} is not defined for digraphs")
            result = directed_join(result, rhs)
        else:
            result = ops[op](result, rhs)
    return result
