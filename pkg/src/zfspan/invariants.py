"""Zero forcing numbers, failed zero forcing numbers, spans and profiles.

Searches rely on closure monotonicity: supersets of forcing sets force and
subsets of failed sets fail, so Z is found by ascending cardinality and F by
descending cardinality, each stopping at the first hit.  Within a
cardinality, subsets are scanned in increasing bitmask order, so witnesses are
the numerically smallest ones.
"""
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from math import comb

from . import kernel
from .forcing import Rule, forces
from .graphs import CapacityError, Digraph, Graph, iter_subsets_of_size

MAX_PROFILE_ORDER = kernel.MAX_TABLE_ORDER


@dataclass(frozen=True)
class SpanReport:
    rule: Rule
    n: int
    z: int
    f: int | None
    span: int
    z_witness: int
    f_witness: int | None


@dataclass(frozen=True)
class ForcingProfile:
    """``z_counts[i]`` is the number of forcing sets of cardinality ``i``."""

    rule: Rule
    n: int
    z_counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.z_counts) != self.n + 1:
            raise ValueError("profile needs n + 1 coefficients")
        for i, c in enumerate(self.z_counts):
            if not 0 <= c <= comb(self.n, i):
                raise ValueError(f"z[{i}] = {c} outside 0..C({self.n},{i})")
        if self.z_counts[self.n] != 1:
            raise ValueError("the full vertex set must force")
        if self.rule is not Rule.SKEW and self.z_counts[0] != 0:
            raise ValueError("the empty set cannot force under a non-skew rule")

    def is_monotone_complete(self) -> bool:
        """Once a level is full (every i-set forces) every later level is full."""
        full = False
        for i, c in enumerate(self.z_counts):
            if full and c != comb(self.n, i):
                return False
            full = full or c == comb(self.n, i)
        return True


def zero_forcing_number(rule: Rule, g: Graph | Digraph) -> tuple[int, int]:
    """Return ``(Z, witness)`` with the smallest-bitmask minimum forcing set."""
    for k in range(g.n + 1):
        for s in iter_subsets_of_size(g.n, k):
            if forces(rule, g, s):
                return k, s
    raise AssertionError("the full vertex set always forces")


def failed_zero_forcing_number(rule: Rule, g: Graph | Digraph) -> tuple[int, int] | None:
    """Return ``(F, witness)``, or ``None`` when every subset forces."""
    for k in range(g.n - 1, -1, -1):
        for s in iter_subsets_of_size(g.n, k):
            if not forces(rule, g, s):
                return k, s
    return None


def span_value(z: int, f: int | None) -> int:
    if f is None or f < z:
        return 0
    return f - z + 1


def span(rule: Rule, g: Graph | Digraph) -> SpanReport:
    z, zw = zero_forcing_number(rule, g)
    failed = failed_zero_forcing_number(rule, g)
    f, fw = failed if failed else (None, None)
    return SpanReport(rule, g.n, z, f, span_value(z, f), zw, fw)


def span_is_zero(rule: Rule, g: Graph | Digraph) -> bool:
    """Span 0 iff every Z-set forces; cheap when Z is small, no table needed."""
    z, _ = zero_forcing_number(rule, g)
    return all(forces(rule, g, s) for s in iter_subsets_of_size(g.n, z))


def profile(rule: Rule, g: Graph | Digraph) -> ForcingProfile:
    if g.n > MAX_PROFILE_ORDER:
        raise CapacityError(f"full profile limited to n <= {MAX_PROFILE_ORDER}")
    summary = kernel.summarize(rule, [g])
    return ForcingProfile(rule, g.n, tuple(int(c) for c in summary.counts[0]))


def disconnected_span(components: Sequence[SpanReport]) -> int:
    """Span of a disjoint union from its components' Z, F and orders."""
    if len(components) < 2:
        raise ValueError("needs at least two components")
    for c in components:
        if c.rule is not Rule.STANDARD:
            raise ValueError("component formula is stated for the standard rule")
        if c.f is None:
            raise ValueError("every component needs a defined F")
    order = sum(c.n for c in components)
    return order + max(c.f - c.n for c in components) - sum(c.z for c in components) + 1


def cartesian_span_lower_bound(zg: int, fg: int, ng: int, zh: int, fh: int, nh: int) -> int:
    return max(fg * nh, fh * ng) - min(zg * nh, zh * ng) + 1
