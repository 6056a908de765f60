"""Color-change closure for the standard, skew and directed rules."""
from __future__ import annotations

import enum
import random
from typing import NamedTuple

from .graphs import Digraph, Graph, full_set


class Rule(enum.Enum):
    STANDARD = "standard"
    SKEW = "skew"
    DIRECTED = "digraph"

    @classmethod
    def parse(cls, text: str | Rule) -> Rule:
        if isinstance(text, Rule):
            return text
        aliases = {"standard": cls.STANDARD, "skew": cls.SKEW, "digraph": cls.DIRECTED,
                   "directed": cls.DIRECTED}
        try:
            return aliases[text.lower()]
        except KeyError:
            raise ValueError(f"unknown rule {text!r}") from None


class RuleMismatchError(TypeError):
    """A rule was applied to the wrong kind of object."""


class ForceStep(NamedTuple):
    forcer: int
    forced: int


def neighborhoods(rule: Rule, g: Graph | Digraph) -> tuple[int, ...]:
    """Bitsets a forcer inspects: neighbors for graphs, out-neighbors for digraphs."""
    if rule is Rule.DIRECTED:
        if not isinstance(g, Digraph):
            raise RuleMismatchError("the directed rule needs a Digraph")
    elif not isinstance(g, Graph):
        raise RuleMismatchError(f"the {rule.value} rule needs a Graph")
    return g.nbrs


def close(rule: Rule, g: Graph | Digraph, s: int) -> int:
    """Closure of the blue set ``s`` (a bitmask) under ``rule``."""
    nbrs = neighborhoods(rule, g)
    full = full_set(g.n)
    if s & ~full:
        raise ValueError("blue set has bits outside the vertex range")
    skew = rule is Rule.SKEW
    blue = s
    changed = True
    while changed and blue != full:
        changed = False
        white = full & ~blue
        for v in range(g.n):
            if not skew and not blue >> v & 1:
                continue
            w = nbrs[v] & white
            if w and not w & (w - 1):
                blue |= w
                white &= ~w
                changed = True
    return blue


def forces(rule: Rule, g: Graph | Digraph, s: int) -> bool:
    return close(rule, g, s) == full_set(g.n)


def available_forces(rule: Rule, g: Graph | Digraph, blue: int) -> list[ForceStep]:
    nbrs = neighborhoods(rule, g)
    white = full_set(g.n) & ~blue
    steps = []
    for v in range(g.n):
        if rule is not Rule.SKEW and not blue >> v & 1:
            continue
        w = nbrs[v] & white
        if w and not w & (w - 1):
            steps.append(ForceStep(v, w.bit_length() - 1))
    return steps


def force_trace(rule: Rule, g: Graph | Digraph, s: int) -> list[ForceStep]:
    """Chronological forces from ``s``, always firing the lowest-index forcer.

    Several forcers may target the same white vertex; only the first one is
    recorded.
    """
    blue = s
    trace = []
    while True:
        steps = available_forces(rule, g, blue)
        if not steps:
            return trace
        step = steps[0]
        trace.append(step)
        blue |= 1 << step.forced


def replay(rule: Rule, g: Graph | Digraph, s: int, trace: list[ForceStep]) -> int:
    """Apply the steps of ``trace`` to ``s``, checking each is legal when fired."""
    blue = s
    for step in trace:
        if step not in available_forces(rule, g, blue):
            raise ValueError(f"illegal force {step} from blue set {bin(blue)}")
        blue |= 1 << step.forced
    return blue


def close_random_order(rule: Rule, g: Graph | Digraph, s: int, rng: random.Random) -> int:
    """Closure computed by firing a uniformly random available force each step."""
    blue = s
    while True:
        steps = available_forces(rule, g, blue)
        if not steps:
            return blue
        blue |= 1 << rng.choice(steps).forced
