"""Structural predicates for the span characterizations and a span predictor.

Where a characterization reduces structure to an invariant (two parallel
paths are exactly the graphs with Z = 2, Hessenberg paths exactly the
digraphs with Z(D) = 1) the predicate is evaluated through that invariant.
"""
from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from functools import lru_cache

from .families import empty_graph, path, union
from .forcing import Rule, close
from .graphs import Digraph, Graph, full_set, members
from .invariants import zero_forcing_number
from .isomorphism import are_isomorphic

ZeroForcing = Callable[[Rule, Graph | Digraph], int]

THEOREMS = (
    "span0_standard",
    "span_high_standard",
    "skew_span0",
    "skew_high",
    "digraph_high",
    "digraph_span0",
)


def default_zf(rule: Rule, g: Graph | Digraph) -> int:
    return zero_forcing_number(rule, g)[0]


# -- undirected predicates ----------------------------------------------------

def is_complete(g: Graph) -> bool:
    full = full_set(g.n)
    return all(row == full & ~(1 << v) for v, row in enumerate(g.adj))


def is_empty(g: Graph | Digraph) -> bool:
    return not any(g.nbrs)


def isolated_vertices(g: Graph) -> list[int]:
    return [v for v, row in enumerate(g.adj) if not row]


def has_isolated_vertex(g: Graph) -> bool:
    return not all(g.adj)


def order2_modules(g: Graph) -> list[tuple[int, int]]:
    """Pairs ``u < v`` with ``N(u) - {v} == N(v) - {u}``."""
    adj = g.adj
    return [(u, v) for v in range(g.n) for u in range(v)
            if adj[u] & ~(1 << v) == adj[v] & ~(1 << u)]


def has_order2_module(g: Graph) -> bool:
    adj = g.adj
    for v in range(1, g.n):
        for u in range(v):
            if adj[u] & ~(1 << v) == adj[v] & ~(1 << u):
                return True
    return False


def is_path_graph(g: Graph) -> bool:
    return g.num_edges == g.n - 1 and max(g.degrees()) <= 2 and g.is_connected()


def is_two_parallel_paths(g: Graph, zf: ZeroForcing = default_zf) -> bool:
    return zf(Rule.STANDARD, g) == 2


def is_2spo(g: Graph) -> bool:
    """Two-set perfectly orderable, i.e. the empty set skew-forces ``g``."""
    return close(Rule.SKEW, g, 0) == full_set(g.n)


def _path_component_ends(g: Graph, comp: list[int], center: int) -> bool:
    """``comp`` induces a path whose two ends (and no other vertex) touch ``center``."""
    mask = 0
    for v in comp:
        mask |= 1 << v
    inner_deg = [(g.adj[v] & mask).bit_count() for v in comp]
    if sum(inner_deg) != 2 * (len(comp) - 1) or max(inner_deg) > 2:
        return False
    ends = [v for v, d in zip(comp, inner_deg) if d <= 1]
    touching = [v for v in comp if g.adj[v] >> center & 1]
    return len(comp) >= 2 and sorted(ends) == sorted(touching)


def _bouquet_petals(g: Graph, center: int, allowed: int) -> list[list[int]] | None:
    """Vertex lists of the odd cycles through ``center`` inside ``allowed``."""
    sub = allowed & ~(1 << center)
    petals = []
    seen = 0
    for start in members(sub):
        if seen >> start & 1:
            continue
        comp = frontier = 1 << start
        while frontier:
            nxt = 0
            for v in members(frontier):
                nxt |= g.adj[v] & sub
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        verts = members(comp)
        if any((g.adj[v] & allowed).bit_count() != 2 for v in verts):
            return None
        if len(verts) % 2 or not _path_component_ends(g, verts, center):
            return None
        petals.append(verts)
    return petals


def is_odd_cycles_bouquet(g: Graph) -> bool:
    """One or more odd cycles sharing exactly one vertex (a single odd cycle counts)."""
    if not g.is_connected() or g.n < 3:
        return False
    full = full_set(g.n)
    for c in range(g.n):
        if g.degree(c) < 2 or g.degree(c) % 2:
            continue
        petals = _bouquet_petals(g, c, full)
        if petals:
            return True
    return False


def _dipole_chain(g: Graph, u: int, v: int, core: int) -> bool:
    """Check that ``core`` (containing u, v) is an alternating chain of segments.

    Junctions are the vertices of degree >= 3 inside ``core`` plus u and v;
    every other vertex of ``core`` has degree 2.  Consecutive junctions are
    joined by internally disjoint paths of even order, one path (single
    segment) or several (multiple segment), and segment kinds alternate
    starting and ending with a single segment.
    """
    deg = {x: (g.adj[x] & core).bit_count() for x in members(core)}
    junctions = {x for x, d in deg.items() if d >= 3} | {u, v}
    if any(d != 2 for x, d in deg.items() if x not in junctions):
        return False
    # Walk every thread leaving a junction to the next junction.
    threads: dict[tuple[int, int], list[int]] = {}
    for a in junctions:
        for first in members(g.adj[a] & core):
            prev, cur, length = a, first, 1
            while cur not in junctions:
                step = g.adj[cur] & core & ~(1 << prev)
                prev, cur = cur, step.bit_length() - 1
                length += 1
            if cur == a:
                return False
            key = (min(a, cur), max(a, cur))
            threads.setdefault(key, []).append(length)
    # each thread was seen from both ends
    segments = {k: sorted(ls)[::2] for k, ls in threads.items()}
    if any(length % 2 == 0 for ls in segments.values() for length in ls):
        return False  # orders must be even, i.e. odd edge counts
    # Junction graph must be a simple chain from u to v.
    nbr: dict[int, list[int]] = {x: [] for x in junctions}
    for a, b in segments:
        nbr[a].append(b)
        nbr[b].append(a)
    if len(nbr[u]) != 1 or len(nbr[v]) != 1:
        return False
    chain = [u]
    prev = None
    while chain[-1] != v:
        cur = chain[-1]
        nxt = [x for x in nbr[cur] if x != prev]
        if len(nxt) != 1 or (cur != u and len(nbr[cur]) != 2):
            return False
        prev = cur
        chain.append(nxt[0])
    if len(chain) != len(junctions):
        return False
    kinds = [len(segments[(min(a, b), max(a, b))]) > 1 for a, b in zip(chain, chain[1:])]
    if kinds[0] or kinds[-1]:
        return False
    return all(k1 != k2 for k1, k2 in zip(kinds, kinds[1:]))


def is_doubly_extended_bouquet_dipole(g: Graph) -> bool:
    """Best-effort recognizer matching :func:`gen.doubly_extended_bouquet_dipole`.

    Reading used: bouquet vertices u and v each carry >= 1 odd cycle whose
    other vertices have degree 2, and the rest of the graph is a chain of
    even-order path segments from u to v that alternates single and multiple
    segments, beginning and ending with a single segment.
    """
    if not g.is_connected() or g.n < 6:
        return False
    full = full_set(g.n)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.degree(u) < 3 or g.degree(v) < 3:
                continue
            if _try_dipole(g, u, v, full):
                return True
    return False


def _cycle_vertices_at(g: Graph, center: int, avoid: int) -> int | None:
    """Vertices of the maximal set of odd cycles hanging at ``center``.

    Petal vertices are reached from ``center`` through degree-2 vertices and
    return to ``center`` without touching ``avoid``.
    """
    petal_mask = 0
    for first in members(g.adj[center]):
        if petal_mask >> first & 1:
            continue
        walk = [first]
        prev, cur = center, first
        while cur != center:
            if g.degree(cur) != 2 or cur == avoid:
                walk = []
                break
            step = g.adj[cur] & ~(1 << prev)
            prev, cur = cur, step.bit_length() - 1
            if cur != center:
                walk.append(cur)
            if len(walk) > g.n:
                walk = []
                break
        if walk:
            if len(walk) % 2:
                return None  # an even cycle at the bouquet vertex
            for x in walk:
                petal_mask |= 1 << x
    return petal_mask


def _try_dipole(g: Graph, u: int, v: int, full: int) -> bool:
    pu = _cycle_vertices_at(g, u, v)
    pv = _cycle_vertices_at(g, v, u)
    if not pu or not pv or pu & pv:
        return False
    core = full & ~pu & ~pv
    if (g.adj[u] & core).bit_count() != 1 or (g.adj[v] & core).bit_count() != 1:
        return False
    return _dipole_chain(g, u, v, core)


# -- digraph predicates -------------------------------------------------------

@dataclass(frozen=True)
class DigraphConditions:
    has_source: bool
    inpair: bool


def has_source(d: Digraph) -> bool:
    return not all(d.inn)


def inpairs(d: Digraph) -> list[tuple[int, int]]:
    inn = d.inn
    return [(u, v) for v in range(d.n) for u in range(v)
            if inn[u] & ~(1 << v) == inn[v] & ~(1 << u)]


def digraph_conditions(d: Digraph) -> DigraphConditions:
    return DigraphConditions(has_source(d), bool(inpairs(d)))


def is_directed_cycle(d: Digraph) -> bool:
    if d.n < 2 or d.num_arcs != d.n:
        return False
    if any(row.bit_count() != 1 for row in d.out) or any(row.bit_count() != 1 for row in d.inn):
        return False
    v, steps = 0, 0
    while True:
        v = d.out[v].bit_length() - 1
        steps += 1
        if v == 0:
            return steps == d.n


def is_regular_tournament5(d: Digraph) -> bool:
    if d.n != 5:
        return False
    for v in range(5):
        if d.out[v] & d.inn[v] or (d.out[v] | d.inn[v]) != 31 & ~(1 << v):
            return False
        if d.out[v].bit_count() != 2:
            return False
    return True


def _missing_arcs(d: Digraph) -> tuple[list[int], list[int]]:
    """Out/in bitsets of the complement of ``d`` inside the complete digraph."""
    full = full_set(d.n)
    mout = [full & ~(1 << v) & ~d.out[v] for v in range(d.n)]
    min_ = [full & ~(1 << v) & ~d.inn[v] for v in range(d.n)]
    return mout, min_


def _is_cycle_cover(mout: list[int], min_: list[int], cover: int) -> bool:
    """Arcs at ``cover`` form vertex-disjoint directed cycles of length >= 3 spanning it."""
    for x in members(cover):
        if mout[x].bit_count() != 1 or min_[x].bit_count() != 1:
            return False
        if mout[x] & ~cover or min_[x] & ~cover:
            return False
        y = mout[x].bit_length() - 1
        if mout[y] >> x & 1:
            return False  # a 2-cycle
    return True


def complement_cycle_pattern(d: Digraph) -> str | None:
    """Which of the complete-minus-cycles patterns ('3a', '3b', '3c') ``d`` follows."""
    n = d.n
    full = full_set(n)
    mout, min_ = _missing_arcs(d)
    if n >= 3 and _is_cycle_cover(mout, min_, full):
        return "3a"
    if n < 4:
        return None
    for v in range(n):
        rest = full & ~(1 << v)
        if not mout[v] and not min_[v] and _is_cycle_cover(mout, min_, rest):
            return "3b"
        if mout[v].bit_count() == 1 and not min_[v]:
            u = mout[v].bit_length() - 1
            trimmed_in = list(min_)
            trimmed_in[u] &= ~(1 << v)
            trimmed_out = list(mout)
            trimmed_out[v] = 0
            if _is_cycle_cover(trimmed_out, trimmed_in, rest):
                return "3c"
    return None


def is_sink_join_minus_cycles(d: Digraph) -> bool:
    """K_{n-1} ->v {v} with a spanning cycle cover of K_{n-1} removed (n >= 4)."""
    if d.n < 4:
        return False
    full = full_set(d.n)
    for v in range(d.n):
        rest = full & ~(1 << v)
        if d.out[v] or d.inn[v] != rest:
            continue
        sub = d.induced(members(rest))
        mout, min_ = _missing_arcs(sub)
        if _is_cycle_cover(mout, min_, full_set(sub.n)):
            return True
    return False


def is_complete_join_independent(d: Digraph) -> bool:
    """K_j ->v (independent set of size l) with j >= 2, l >= 0."""
    sinks = 0
    for v in range(d.n):
        if not d.out[v]:
            sinks |= 1 << v
    core = full_set(d.n) & ~sinks
    if core.bit_count() < 2:
        return False
    return all(d.out[x] == (core & ~(1 << x)) | sinks for x in members(core))


def digraph_span0_family(d: Digraph) -> str | None:
    if is_directed_cycle(d):
        return "directed_cycle"
    if is_regular_tournament5(d):
        return "tournament5"
    pattern = complement_cycle_pattern(d)
    if pattern:
        return pattern
    if is_sink_join_minus_cycles(d):
        return "sink_join_minus_cycles"
    if is_complete_join_independent(d):
        return "complete_join_independent"
    if is_empty(d):
        return "empty"
    return None


def skew_span0_family(g: Graph) -> str | None:
    if is_complete(g):
        return "complete"
    if is_empty(g):
        return "empty"
    if is_2spo(g):
        return "two_set_perfectly_orderable"
    if is_odd_cycles_bouquet(g):
        return "odd_cycles_bouquet"
    if is_doubly_extended_bouquet_dipole(g):
        return "doubly_extended_bouquet_dipole"
    return None


@lru_cache(maxsize=None)
def _path_plus_k1(n: int) -> Graph:
    return union(path(n - 1), empty_graph(1))


@lru_cache(maxsize=None)
def _path(n: int) -> Graph:
    return path(n)


def predict_span(theorem: str, g: Graph | Digraph, zf: ZeroForcing = default_zf) -> int | None:
    """Span forced by the theorem's families, or ``None`` if no family matches.

    ``zf`` computes zero forcing numbers for the invariant-level predicates;
    sweeps pass a compiled one.
    """
    n = g.n
    if theorem == "span0_standard":
        return 0 if is_complete(g) or is_empty(g) else None
    if theorem == "span_high_standard":
        if n == 1:
            return 0
        isolated = isolated_vertices(g)
        if n == 3 and are_isomorphic(g, _path(3)):
            return n - 2
        if isolated and are_isomorphic(g, _path_plus_k1(n)):
            return n - 2
        if isolated and is_two_parallel_paths(g.remove_vertex(isolated[0]), zf):
            return n - 3
        if not isolated and has_order2_module(g) and is_two_parallel_paths(g, zf):
            return n - 3
        if n in (4, 5) and are_isomorphic(g, _path(n)):
            return n - 3
        return None
    if theorem == "skew_high":
        isolated = isolated_vertices(g)
        if isolated and (n == 1 or is_2spo(g.remove_vertex(isolated[0]))):
            return n - 1
        return None
    if theorem == "skew_span0":
        return 0 if skew_span0_family(g) else None
    if theorem == "digraph_high":
        source = has_source(g)
        z = None
        if source or inpairs(g):
            z = zf(Rule.DIRECTED, g)
        if source and z == 1:
            return n - 1
        if (source and z == 2) or (not source and z == 1 and inpairs(g)):
            return n - 2
        return None
    if theorem == "digraph_span0":
        return 0 if digraph_span0_family(g) else None
    raise ValueError(f"unknown theorem {theorem!r}")


# -- two parallel paths with a module of order 2 ------------------------------

def _nb(g: Graph, x: int) -> set[int]:
    return set(members(g.adj[x]))


def parallel_module_items(g: Graph, layer_a: list[int], layer_b: list[int]) -> list[str]:
    """Items of the order-2-module list that a standard drawing matches.

    ``layer_a`` and ``layer_b`` are the two paths in drawing order.  Either
    path may play either role and either may be read backwards.
    """
    found = []
    cross = {(a, b) for a in layer_a for b in layer_b if g.has_edge(a, b)}
    for p, q in ((layer_a, layer_b), (layer_b, layer_a)):
        qset = set(q)
        if sorted((len(p), len(q))) in ([1, 1], [1, 2]) and not cross and len(p) == 1:
            found.append("1")
        if len(p) == 1 and len(q) >= 3:
            nx = _nb(g, p[0])
            for i in range(len(q) - 2):
                u, v, w = q[i:i + 3]
                if nx in ({u, w}, {u, v, w}):
                    found.append("2a")
            for end, nxt in ((q[0], q[1]), (q[-1], q[-2])):
                if nx in ({nxt}, {end, nxt}):
                    found.append("2b")
        if len(p) == 2:
            u, v = p
            if _nb(g, u) & qset == _nb(g, v) & qset:
                found.append("3")
        if len(p) == 3:
            u, v, w = p
            nu, nw = _nb(g, u), _nb(g, w)
            if nu == nw and (nu == {v} or (len(nu) == 2 and v in nu and (nu - {v}) <= qset)):
                found.append("4")
        if len(p) >= 2 and len(q) >= 2:
            for pv in (p, p[::-1]):
                for qw in (q, q[::-1]):
                    vk, vk1, w1, w2 = pv[-1], pv[-2], qw[0], qw[1]
                    base = {(vk1, w1), (vk, w2)}
                    options = (base, base | {(vk1, w2)}, base | {(vk, w1)})
                    edges = {(a, b) if a in pv else (b, a) for a, b in cross}
                    if any(edges == opt for opt in options):
                        found.append("5")
    return sorted(set(found))
