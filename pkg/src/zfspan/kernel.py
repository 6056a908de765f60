"""Compiled forcing tables for exhaustive sweeps.

For a fixed graph the kernel decides, for every subset S at once, whether S
forces: subsets are visited in decreasing integer order and S inherits the
verdict of S | {w} for the first legal force S -> w (lowest forcer index).
Closure is order independent, so one step decides.  Cost is O(n 2^n) per
graph instead of one closure per subset.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

from .forcing import Rule, neighborhoods
from .graphs import CapacityError, Digraph, Graph

MAX_TABLE_ORDER = 24


@njit(cache=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def _fill_table(nbrs, n, skew, table):
    full = (1 << n) - 1
    table[full] = 1
    for s in range(full - 1, -1, -1):
        white = full & ~s
        cand = full if skew else s
        verdict = 0
        v = 0
        while cand:
            if cand & 1:
                w = nbrs[v] & white
                if w != 0 and (w & (w - 1)) == 0:
                    verdict = table[s | w]
                    break
            cand >>= 1
            v += 1
        table[s] = verdict


@njit(cache=True)
def _summarize(table, n, counts):
    """Fill ``counts`` and return (z, z_witness, f, f_witness); f = -1 if absent."""
    for i in range(n + 1):
        counts[i] = 0
    z = n + 1
    zw = -1
    f = -1
    fw = -1
    for s in range(1 << n):
        k = _popcount(s)
        if table[s]:
            counts[k] += 1
            if k < z:
                z = k
                zw = s
        elif k > f:
            f = k
            fw = s
    return z, zw, f, fw


@njit(cache=True)
def _batch(adjs, n, skew, zs, zws, fs, fws, counts):
    table = np.zeros(1 << n, np.uint8)
    for b in range(adjs.shape[0]):
        _fill_table(adjs[b], n, skew, table)
        z, zw, f, fw = _summarize(table, n, counts[b])
        zs[b] = z
        zws[b] = zw
        fs[b] = f
        fws[b] = fw


@njit(cache=True)
def _graph_adj(index, n, pu, pv, adj):
    for v in range(n):
        adj[v] = 0
    k = 0
    while index:
        if index & 1:
            adj[pu[k]] |= 1 << pv[k]
            adj[pv[k]] |= 1 << pu[k]
        index >>= 1
        k += 1


@njit(cache=True)
def _digraph_adj(index, n, pu, pv, adj):
    for v in range(n):
        adj[v] = 0
    k = 0
    while index:
        if index & 1:
            adj[pu[k]] |= 1 << pv[k]
        index >>= 1
        k += 1


@njit(cache=True)
def _sweep(lo, hi, n, directed, skew, pu, pv, zs, zws, fs, fws, counts):
    table = np.zeros(1 << n, np.uint8)
    adj = np.zeros(n, np.int64)
    for idx in range(lo, hi):
        if directed:
            _digraph_adj(idx, n, pu, pv, adj)
        else:
            _graph_adj(idx, n, pu, pv, adj)
        _fill_table(adj, n, skew, table)
        b = idx - lo
        z, zw, f, fw = _summarize(table, n, counts[b])
        zs[b] = z
        zws[b] = zw
        fs[b] = f
        fws[b] = fw


def graph_pairs(n: int) -> list[tuple[int, int]]:
    """Vertex pairs in graph6 bit order; bit k of a labeled index is pair k."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def digraph_pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(n) if i != j]


@dataclass
class Summaries:
    """Per-object results of a batch: arrays indexed like the input batch."""

    n: int
    z: np.ndarray
    z_witness: np.ndarray
    f: np.ndarray
    f_witness: np.ndarray
    counts: np.ndarray

    def __len__(self) -> int:
        return len(self.z)

    def span(self) -> np.ndarray:
        return np.where(self.f >= self.z, self.f - self.z + 1, 0)

    def profile_span(self) -> np.ndarray:
        from math import comb
        binom = np.array([comb(self.n, i) for i in range(self.n + 1)])
        return ((self.counts > 0) & (self.counts < binom)).sum(axis=1)


def _alloc(count: int, n: int) -> tuple:
    return (np.zeros(count, np.int64), np.zeros(count, np.int64),
            np.zeros(count, np.int64), np.zeros(count, np.int64),
            np.zeros((count, n + 1), np.int64))


def forcing_table(rule: Rule, g: Graph | Digraph) -> np.ndarray:
    """``table[S] == 1`` iff bitmask ``S`` forces ``g`` under ``rule``."""
    nbrs = neighborhoods(rule, g)
    if g.n > MAX_TABLE_ORDER:
        raise CapacityError(f"forcing table limited to n <= {MAX_TABLE_ORDER}")
    table = np.zeros(1 << g.n, np.uint8)
    _fill_table(np.array(nbrs, np.int64), g.n, rule is Rule.SKEW, table)
    return table


def summarize(rule: Rule, objs: list[Graph | Digraph]) -> Summaries:
    """Z, F, witnesses and forcing-set counts for graphs of one common order."""
    if not objs:
        raise ValueError("empty batch")
    n = objs[0].n
    if n > MAX_TABLE_ORDER:
        raise CapacityError(f"forcing table limited to n <= {MAX_TABLE_ORDER}")
    rows = []
    for g in objs:
        if g.n != n:
            raise ValueError("batch mixes orders")
        rows.append(neighborhoods(rule, g))
    out = _alloc(len(objs), n)
    _batch(np.array(rows, np.int64).reshape(len(objs), n), n, rule is Rule.SKEW, *out)
    return Summaries(n, *out)


def sweep_labeled(rule: Rule, n: int, lo: int, hi: int) -> Summaries:
    """Summaries for labeled objects with index in ``[lo, hi)``.

    Graph index bits follow :func:`graph_pairs`, digraph index bits follow
    :func:`digraph_pairs`; the rule decides which universe is swept.
    """
    directed = rule is Rule.DIRECTED
    pairs = digraph_pairs(n) if directed else graph_pairs(n)
    if not 0 <= lo <= hi <= 1 << len(pairs):
        raise ValueError("index range outside the labeled universe")
    pu = np.array([p[0] for p in pairs] or [0], np.int64)
    pv = np.array([p[1] for p in pairs] or [0], np.int64)
    out = _alloc(hi - lo, n)
    _sweep(lo, hi, n, directed, rule is Rule.SKEW, pu, pv, *out)
    return Summaries(n, *out)
