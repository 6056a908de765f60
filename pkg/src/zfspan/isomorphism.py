"""Brute-force isomorphism for small graphs and digraphs (n <= 8)."""
from __future__ import annotations

from .graphs import CapacityError, Digraph, Graph

MAX_ISO_ORDER = 8


def _signature(g: Graph | Digraph) -> list[tuple[int, ...]]:
    if isinstance(g, Graph):
        return [(row.bit_count(),) for row in g.adj]
    return [(g.out[v].bit_count(), g.inn[v].bit_count()) for v in range(g.n)]


def find_isomorphism(a: Graph | Digraph, b: Graph | Digraph) -> list[int] | None:
    """A vertex map ``phi`` with ``u -> v`` in ``a`` iff ``phi[u] -> phi[v]`` in ``b``."""
    if type(a) is not type(b):
        raise TypeError("cannot compare a graph with a digraph")
    if a.n != b.n:
        return None
    if a.n > MAX_ISO_ORDER:
        raise CapacityError(f"isomorphism search limited to n <= {MAX_ISO_ORDER}")
    sig_a, sig_b = _signature(a), _signature(b)
    if sorted(sig_a) != sorted(sig_b):
        return None
    n = a.n
    # Most constrained vertices first keeps the search shallow.
    order = sorted(range(n), key=lambda v: (sum(1 for s in sig_b if s == sig_a[v]), -sum(sig_a[v])))
    rows_a, rows_b = a.nbrs, b.nbrs
    cols_a = a.inn if isinstance(a, Digraph) else a.adj
    cols_b = b.inn if isinstance(b, Digraph) else b.adj
    phi = [-1] * n
    used = 0

    def extend(depth: int) -> bool:
        nonlocal used
        if depth == n:
            return True
        u = order[depth]
        for v in range(n):
            if used >> v & 1 or sig_b[v] != sig_a[u]:
                continue
            ok = True
            for d in range(depth):
                w = order[d]
                x = phi[w]
                if (rows_a[u] >> w & 1) != (rows_b[v] >> x & 1) or \
                        (cols_a[u] >> w & 1) != (cols_b[v] >> x & 1):
                    ok = False
                    break
            if not ok:
                continue
            phi[u] = v
            used |= 1 << v
            if extend(depth + 1):
                return True
            used &= ~(1 << v)
            phi[u] = -1
        return False

    return list(phi) if extend(0) else None


def are_isomorphic(a: Graph | Digraph, b: Graph | Digraph) -> bool:
    return find_isomorphism(a, b) is not None


def permute(g: Graph | Digraph, phi: list[int]) -> Graph | Digraph:
    """Relabel vertex ``u`` as ``phi[u]``."""
    if isinstance(g, Graph):
        return Graph.from_edges(g.n, [(phi[u], phi[v]) for u, v in g.edges()])
    return Digraph.from_arcs(g.n, [(phi[u], phi[v]) for u, v in g.arcs()])
