"""Exhaustive and seeded verification drivers.

Every driver compares the span a characterization predicts against the span
computed by brute force and collects counterexamples with certificates.
Labeled universes are cut into fixed-size index chunks; chunks may run in a
process pool and are merged in index order, so reports do not depend on the
worker count.
"""
from __future__ import annotations

import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations

from . import characterizations as ch
from . import families as fam
from . import gen, kernel
from .enumeration import RangeError, labeled_digraph, labeled_graph, labeled_tree, universe_size
from .forcing import Rule, close, close_random_order, force_trace
from .formats import parse_digraph6, parse_graph6, to_digraph6, to_graph6
from .graphs import Digraph, Graph, full_set, members
from .invariants import (cartesian_span_lower_bound, disconnected_span, profile, span,
                         span_is_zero)
from .isomorphism import permute
from .polynomials import is_binomial_complete

CHUNK = 1 << 15

# (default max_n, largest supported max_n)
RANGES = {
    "span0_standard": (6, 7),
    "span_high_standard": (7, 7),
    "span1_families": (10, 10),
    "skew_span0": (6, 7),
    "skew_high": (6, 7),
    "digraph_span0": (4, 5),
    "digraph_high": (4, 5),
    "tree_bounds": (8, 8),
    "disconnected_formula": (10, 12),
    "cartesian_bound": (12, 16),
    "parallel_module_lemma": (9, 10),
    "poly_span_bridge": (6, 6),
    "skew_binomial": (6, 6),
    "engine_properties": (5, 5),
}
THEOREM_IDS = tuple(RANGES)


@dataclass
class Counterexample:
    code: str
    expected: int | str | None
    actual: int | str | None
    detail: dict = field(default_factory=dict)


@dataclass
class VerificationReport:
    theorem: str
    universe: dict
    checked: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)
    unclassified: list[str] = field(default_factory=list)
    tallies: dict[str, int] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "schema": "zf-span/1",
            "theorem": self.theorem,
            "universe": self.universe,
            "checked": self.checked,
            "passed": self.passed,
            "counterexamples": [asdict(c) for c in self.counterexamples],
            "unclassified": list(self.unclassified),
            "tallies": dict(sorted(self.tallies.items())),
        }
        if timing:
            out["elapsed"] = round(self.elapsed, 3)
        return out

    def render(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [f"{self.theorem}: {status} ({self.checked} checked, "
                 f"{len(self.counterexamples)} counterexamples, "
                 f"{len(self.unclassified)} unclassified)"]
        lines.append("  universe: " + ", ".join(f"{k}={v}" for k, v in self.universe.items()))
        for key, value in sorted(self.tallies.items()):
            lines.append(f"  {key}: {value}")
        for c in self.counterexamples[:20]:
            lines.append(f"  counterexample {c.code}: expected {c.expected}, got {c.actual}")
        for code in self.unclassified[:20]:
            lines.append(f"  unclassified {code}")
        return "\n".join(lines)


def _code(g: Graph | Digraph) -> str:
    return to_digraph6(g) if isinstance(g, Digraph) else to_graph6(g)


def certificate(rule: Rule, g: Graph | Digraph) -> dict:
    """Z/F witnesses and their forcing traces, computed by the reference route."""
    rep = span(rule, g)
    out = {"rule": rule.value, "n": g.n, "z": rep.z, "f": rep.f, "span": rep.span,
           "z_witness": members(rep.z_witness),
           "z_trace": [list(s) for s in force_trace(rule, g, rep.z_witness)]}
    if rep.f_witness is not None:
        out["f_witness"] = members(rep.f_witness)
        out["f_trace"] = [list(s) for s in force_trace(rule, g, rep.f_witness)]
    return out


def _counterexample(rule: Rule, g, expected, actual) -> Counterexample:
    detail = certificate(rule, g) if g.n <= 12 else {}
    return Counterexample(_code(g), expected, actual, detail)


def kernel_zf(rule: Rule, g: Graph | Digraph) -> int:
    return int(kernel.summarize(rule, [g]).z[0])


def kernel_span(rule: Rule, g: Graph | Digraph) -> int:
    return int(kernel.summarize(rule, [g]).span()[0])


# -- labeled two-sided sweeps --------------------------------------------------

SWEEP_RULE = {
    "span0_standard": Rule.STANDARD,
    "span_high_standard": Rule.STANDARD,
    "skew_span0": Rule.SKEW,
    "skew_high": Rule.SKEW,
    "digraph_span0": Rule.DIRECTED,
    "digraph_high": Rule.DIRECTED,
}


def target_values(theorem: str, n: int) -> set[int]:
    if theorem in ("span0_standard", "skew_span0", "digraph_span0"):
        return {0}
    if theorem == "span_high_standard":
        return {v for v in (n - 1, n - 2, n - 3) if v >= 0}
    if theorem == "skew_high":
        return {n - 1}
    if theorem == "digraph_high":
        return {v for v in (n - 1, n - 2) if v >= 0}
    raise ValueError(theorem)


def _family_of(theorem: str, g) -> str | None:
    if theorem == "skew_span0":
        return ch.skew_span0_family(g)
    if theorem == "digraph_span0":
        return ch.digraph_span0_family(g)
    return None


def _sweep_chunk(theorem: str, n: int, lo: int, hi: int) -> tuple:
    rule = SWEEP_RULE[theorem]
    build = labeled_digraph if rule is Rule.DIRECTED else labeled_graph
    summ = kernel.sweep_labeled(rule, n, lo, hi)
    spans = summ.span()
    targets = target_values(theorem, n)
    bad, unclassified = [], []
    tallies: Counter = Counter()
    for b in range(hi - lo):
        g = build(n, lo + b)
        z_here = int(summ.z[b])

        def zf(r, h, g=g, z_here=z_here):
            return z_here if h is g else kernel_zf(r, h)

        predicted = ch.predict_span(theorem, g, zf)
        actual = int(spans[b])
        if predicted is not None:
            tallies[f"predicted={predicted}"] += 1
            family = _family_of(theorem, g)
            if family:
                tallies[f"family:{family}"] += 1
            if actual != predicted:
                bad.append(_counterexample(rule, g, predicted, actual))
        elif actual in targets:
            if theorem == "skew_span0":
                unclassified.append(_code(g))
            else:
                bad.append(_counterexample(
                    rule, g, f"span outside {sorted(targets)} (no family matched)", actual))
        if theorem == "skew_high" and actual > n - 1:
            bad.append(_counterexample(rule, g, f"<= {n - 1}", actual))
        tallies[f"span={actual}"] += 1
    return hi - lo, bad, unclassified, dict(tallies)


def _run_chunks(tasks: list[tuple], workers: int, fn=_sweep_chunk) -> list:
    if workers <= 1 or len(tasks) <= 1:
        return [fn(*t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, *zip(*tasks)))


def _labeled_sweep(report: VerificationReport, theorem: str, ns: range, workers: int) -> None:
    kind = "digraphs" if SWEEP_RULE[theorem] is Rule.DIRECTED else "graphs"
    tasks = []
    for n in ns:
        size = universe_size(kind, n)
        for lo in range(0, size, CHUNK):
            tasks.append((theorem, n, lo, min(size, lo + CHUNK)))
    tallies: Counter = Counter()
    for checked, bad, uncl, tal in _run_chunks(tasks, workers):
        report.checked += checked
        report.counterexamples += bad
        report.unclassified += uncl
        tallies.update(tal)
    report.tallies.update(tallies)


# -- constructed instances ----------------------------------------------------

def span1_instances(max_order: int) -> list[tuple[str, Graph]]:
    out = []

    def partitions(total: int, largest: int):
        if total == 0:
            yield ()
            return
        for part in range(min(total, largest), 0, -1):
            for rest in partitions(total - part, part):
                yield (part,) + rest

    for total in range(3, max_order + 1):
        for parts in partitions(total, total):
            if len(parts) >= 2 and parts[0] >= 2:
                out.append((f"kmp:{','.join(map(str, parts))}", fam.complete_multipartite(*parts)))
    for a in range(2, max_order + 1):
        for b in range(2, max_order + 1 - a):
            out.append((f"complete:{a}+complete:{b}", fam.union(fam.complete(a), fam.complete(b))))
    for n in range(3, max_order + 1):
        for size in range(1, n // 2 + 1):
            out.append((f"kminusm:{n},{size}", fam.complete_minus_matching(n, size)))
    for a in range(1, max_order + 1):
        for m in range(2, max_order + 1 - a):
            out.append((f"complete:{a}^empty:{m}", fam.join(fam.complete(a), fam.empty_graph(m))))
    out.append(("path:4", fam.path(4)))
    return out


def _cycle_partitions(vertices: list[int]):
    """Partitions of ``vertices`` into parts of size >= 3 (one cyclic order per part)."""
    if not vertices:
        yield []
        return
    first, rest = vertices[0], vertices[1:]
    for size in range(2, len(rest) + 1):
        for mates in combinations(rest, size):
            remaining = [v for v in rest if v not in mates]
            for tail in _cycle_partitions(remaining):
                yield [[first, *mates]] + tail


def digraph_span0_instances(ns: range, rng: random.Random) -> list[tuple[str, Digraph]]:
    out: list[tuple[str, Digraph]] = []
    for n in ns:
        out.append((f"dcycle:{n}", fam.directed_cycle(n)))
        out.append((f"dempty:{n}", fam.empty_digraph(n)))
        for cycles in _cycle_partitions(list(range(n))):
            out.append((f"3a:{n}:{cycles}", fam.complete_minus_disjoint_cycles(n, cycles)))
        v = n - 1
        for cycles in _cycle_partitions(list(range(n - 1))):
            base = fam.complete_minus_disjoint_cycles(n, cycles)
            out.append((f"3b:{n}:{cycles}", base))
            for u in range(n - 1):
                out.append((f"3c:{n}:{cycles}:{v}->{u}", base.remove_arcs([(v, u)])))
            sub = fam.complete_minus_disjoint_cycles(n - 1, cycles)
            out.append((f"sinkjoin:{n}:{cycles}", fam.directed_join(sub, fam.empty_digraph(1))))
        for j in range(2, n + 1):
            left = fam.complete_digraph(j)
            d = left if j == n else fam.directed_join(left, fam.empty_digraph(n - j))
            out.append((f"kjoin:{j},{n - j}", d))
    out.append(("tournament5", fam.regular_tournament5()))
    relabeled = []
    for name, d in out:
        phi = list(range(d.n))
        rng.shuffle(phi)
        relabeled.append((name + ":relabeled", permute(d, phi)))
    return out + relabeled


def skew_span0_instances(rng: random.Random, max_order: int = 18) -> list[tuple[str, Graph]]:
    out: list[tuple[str, Graph]] = []
    for lengths in ([3], [5], [7], [3, 3], [3, 5], [5, 5], [3, 3, 3], [3, 3, 5], [3, 3, 3, 3]):
        out.append((f"bouquet:{lengths}", gen.odd_cycles_bouquet(lengths)))
    for i in range(30):
        layout = gen.sample_dipole(rng, max_order)
        out.append((f"dipole:{layout.u_cycles}|{layout.segments}|{layout.v_cycles}",
                    layout.graph))
    for i in range(30):
        m = rng.randint(1, max_order // 2)
        out.append((f"2spo:{m}:{i}", gen.sample_two_set_perfectly_orderable(m, rng.random(), rng).graph))
    relabeled = []
    for name, g in out:
        phi = list(range(g.n))
        rng.shuffle(phi)
        relabeled.append((name + ":relabeled", permute(g, phi)))
    return out + relabeled


def _check_constructed(report: VerificationReport, rule: Rule, instances, recognizer) -> None:
    by_order: dict[int, list] = {}
    for name, g in instances:
        by_order.setdefault(g.n, []).append((name, g))
    for n, items in sorted(by_order.items()):
        spans = kernel.summarize(rule, [g for _, g in items]).span()
        for (name, g), actual in zip(items, spans):
            report.checked += 1
            report.tallies["constructed"] = report.tallies.get("constructed", 0) + 1
            if actual != 0:
                report.counterexamples.append(_counterexample(rule, g, 0, int(actual)))
                report.counterexamples[-1].detail["instance"] = name
            family = recognizer(g)
            if family is None:
                report.counterexamples.append(Counterexample(_code(g), "recognized", "missed",
                                                             {"instance": name}))
            else:
                key = f"constructed:{family}"
                report.tallies[key] = report.tallies.get(key, 0) + 1


# -- drivers --------------------------------------------------------------------

def _check_range(theorem: str, max_n: int | None) -> int:
    if theorem not in RANGES:
        raise KeyError(theorem)
    default, limit = RANGES[theorem]
    max_n = default if max_n is None else max_n
    if not 1 <= max_n <= limit:
        raise RangeError(f"{theorem} supports max_n in 1..{limit}, got {max_n}")
    return max_n


def verify(theorem: str, max_n: int | None = None, seed: int = 0,
           workers: int = 1) -> VerificationReport:
    """Run one driver over ``1..max_n`` (driver default when ``None``)."""
    max_n = _check_range(theorem, max_n)
    start = time.perf_counter()
    rng = random.Random(seed)
    report = VerificationReport(theorem, {"max_n": max_n})
    driver = _DRIVERS[theorem]
    driver(report, max_n, rng, workers)
    report.elapsed = time.perf_counter() - start
    return report


def _drive_sweep(report, max_n, rng, workers):
    theorem = report.theorem
    kind = "digraphs" if SWEEP_RULE[theorem] is Rule.DIRECTED else "graphs"
    report.universe.update({"kind": f"labeled {kind}", "n": f"1..{max_n}"})
    _labeled_sweep(report, theorem, range(1, max_n + 1), workers)
    if theorem == "digraph_span0":
        instances = digraph_span0_instances(range(5, 8), rng)
        report.universe["constructed"] = "all six families, n=5..7, plus relabelings"
        _check_constructed(report, Rule.DIRECTED, instances, ch.digraph_span0_family)
    if theorem == "skew_span0":
        instances = skew_span0_instances(rng)
        report.universe["constructed"] = "bouquets, dipoles, 2spo up to order 18, plus relabelings"
        instances.append(("example:two_set", gen.example_two_set_graph().graph))
        _check_constructed(report, Rule.SKEW, instances, ch.skew_span0_family)
        # 30 vertices: past the table limit, so use the Z-level test
        big = gen.example_dipole().graph
        report.checked += 1
        report.tallies["constructed"] += 1
        if not span_is_zero(Rule.SKEW, big):
            report.counterexamples.append(Counterexample(to_graph6(big), 0, "nonzero",
                                                         {"instance": "example:dipole"}))
        if ch.skew_span0_family(big) is None:
            report.counterexamples.append(Counterexample(to_graph6(big), "recognized", "missed",
                                                         {"instance": "example:dipole"}))


def _drive_span1(report, max_n, rng, workers):
    report.universe.update({"kind": "constructed span-1 families", "max_order": max_n})
    instances = span1_instances(max_n)
    by_order: dict[int, list] = {}
    for name, g in instances:
        by_order.setdefault(g.n, []).append((name, g))
    for n, items in sorted(by_order.items()):
        spans = kernel.summarize(Rule.STANDARD, [g for _, g in items]).span()
        for (name, g), actual in zip(items, spans):
            report.checked += 1
            key = name.split(":")[0] if "+" not in name and "^" not in name else \
                ("union" if "+" in name else "join")
            report.tallies[key] = report.tallies.get(key, 0) + 1
            if actual != 1:
                report.counterexamples.append(_counterexample(Rule.STANDARD, g, 1, int(actual)))
                report.counterexamples[-1].detail["instance"] = name


def _drive_trees(report, max_n, rng, workers):
    lo = 4
    report.universe.update({"kind": "labeled trees (Prufer)", "n": f"{lo}..{max_n}"})
    for n in range(lo, max_n + 1):
        size = universe_size("trees", n)
        low, high = n, -1
        for start in range(0, size, CHUNK):
            trees = [labeled_tree(n, i) for i in range(start, min(size, start + CHUNK))]
            spans = kernel.summarize(Rule.STANDARD, trees).span()
            for t, s in zip(trees, spans):
                s = int(s)
                low, high = min(low, s), max(high, s)
                if not 1 <= s <= n - 3:
                    report.counterexamples.append(_counterexample(Rule.STANDARD, t, f"1..{n - 3}", s))
            report.checked += len(trees)
        report.tallies[f"n={n} span range"] = f"{low}..{high}"
        for name, g, want in (("star", fam.star(n - 1), 1), ("end_spider", fam.end_spider(n), n - 3)):
            got = kernel_span(Rule.STANDARD, g)
            report.tallies[f"n={n} {name}"] = got
            if got != want:
                report.counterexamples.append(_counterexample(Rule.STANDARD, g, want, got))


def _drive_disconnected(report, max_n, rng, workers):
    samples = 500
    report.universe.update({"kind": "seeded multi-component graphs", "samples": samples,
                            "max_order": max_n})
    for _ in range(samples):
        k = rng.randint(2, min(4, max_n))
        orders = [1] * k
        for _ in range(rng.randint(0, max_n - k)):
            orders[rng.randrange(k)] += 1
        comps = [gen.random_connected_graph(m, rng.uniform(0.3, 0.9), rng) for m in orders]
        g = comps[0]
        for c in comps[1:]:
            g = fam.union(g, c)
        assert len(g.components()) == k
        predicted = disconnected_span([span(Rule.STANDARD, c) for c in comps])
        actual = kernel_span(Rule.STANDARD, g)
        report.checked += 1
        if predicted != actual:
            report.counterexamples.append(_counterexample(Rule.STANDARD, g, predicted, actual))
    report.tallies["components<=4"] = samples


def _drive_cartesian(report, max_n, rng, workers):
    samples = 200
    report.universe.update({"kind": "seeded graph pairs", "samples": samples,
                            "max_product_order": max_n})
    tight = 0
    for _ in range(samples):
        ng = rng.randint(1, max_n // 2)
        nh = rng.randint(1, max_n // ng)
        g = gen.random_graph(ng, rng.uniform(0.2, 0.9), rng)
        h = gen.random_graph(nh, rng.uniform(0.2, 0.9), rng)
        rg, rh = span(Rule.STANDARD, g), span(Rule.STANDARD, h)
        bound = cartesian_span_lower_bound(rg.z, rg.f, ng, rh.z, rh.f, nh)
        actual = kernel_span(Rule.STANDARD, fam.cartesian_product(g, h))
        report.checked += 1
        tight += actual == bound
        if actual < bound:
            report.counterexamples.append(
                _counterexample(Rule.STANDARD, fam.cartesian_product(g, h), f">= {bound}", actual))
    report.tallies["bound attained"] = tight


def _drive_parallel_lemma(report, max_n, rng, workers):
    report.universe.update({"kind": "all standard drawings of two parallel paths",
                            "n": f"2..{max_n}"})
    items: Counter = Counter()
    for n in range(2, max_n + 1):
        for k in range(1, n // 2 + 1):
            for cross in gen.iter_noncrossing(k, n - k):
                drawing = gen.ParallelDrawing(k, n - k, cross)
                g = drawing.graph
                if gen.is_path_graph(g):
                    continue
                report.checked += 1
                matched = ch.parallel_module_items(g, *drawing.layers)
                items.update(matched)
                module = ch.has_order2_module(g)
                if bool(matched) != module:
                    report.counterexamples.append(Counterexample(
                        to_graph6(g), f"module={bool(matched)}", f"module={module}",
                        {"k": k, "j": n - k, "cross": [list(c) for c in cross]}))
    report.tallies.update({f"item {k}": v for k, v in items.items()})


def _drive_bridge(report, max_n, rng, workers):
    small = min(max_n, 5)
    report.universe.update({"standard graphs": f"1..{max_n}", "skew graphs": f"1..{small}",
                            "digraphs (reference route)": f"1..{min(small, 4)}",
                            "digraphs (kernel route)": f"{min(small, 4) + 1}..{small}"
                            if small == 5 else "none"})
    plan = [(Rule.STANDARD, "graphs", n) for n in range(1, max_n + 1)]
    plan += [(Rule.SKEW, "graphs", n) for n in range(1, small + 1)]
    plan += [(Rule.DIRECTED, "digraphs", n) for n in range(1, min(small, 4) + 1)]
    for rule, kind, n in plan:
        size = universe_size(kind, n)
        build = labeled_digraph if kind == "digraphs" else labeled_graph
        summ = kernel.sweep_labeled(rule, n, 0, size)
        pspan = summ.profile_span()
        for idx in range(size):
            g = build(n, idx)
            rep = span(rule, g)
            report.checked += 1
            if rep.span != pspan[idx]:
                report.counterexamples.append(_counterexample(rule, g, rep.span, int(pspan[idx])))
        report.tallies[f"{rule.value} n={n}"] = size
    if small == 5:
        summ = kernel.sweep_labeled(Rule.DIRECTED, 5, 0, universe_size("digraphs", 5))
        mismatch = (summ.span() != summ.profile_span()).nonzero()[0]
        report.checked += len(summ)
        report.tallies["digraph n=5"] = len(summ)
        for idx in mismatch:
            d = labeled_digraph(5, int(idx))
            report.counterexamples.append(
                _counterexample(Rule.DIRECTED, d, int(summ.span()[idx]), int(summ.profile_span()[idx])))


def _drive_binomial(report, max_n, rng, workers):
    report.universe.update({"kind": "labeled graphs + seeded 2spo instances",
                            "n": f"1..{max_n}", "instances": "100, m<=8"})
    graphs = [labeled_graph(n, i) for n in range(1, max_n + 1)
              for i in range(universe_size("graphs", n))]
    graphs += [gen.sample_two_set_perfectly_orderable(rng.randint(1, 8), rng.random(), rng).graph
               for _ in range(100)]
    for idx, g in enumerate(graphs):
        p = profile(Rule.SKEW, g)
        binomial = is_binomial_complete(p)
        empty_forces = close(Rule.SKEW, g, 0) == full_set(g.n)
        report.checked += 1
        if binomial:
            report.tallies["binomial"] = report.tallies.get("binomial", 0) + 1
        if binomial != empty_forces:
            report.counterexamples.append(Counterexample(
                to_graph6(g), f"binomial={empty_forces}", f"binomial={binomial}"))
        if idx >= len(graphs) - 100 and not binomial:
            report.counterexamples.append(Counterexample(to_graph6(g), "binomial", "not binomial"))


def _drive_engine(report, max_n, rng, workers):
    trials = 10_000
    report.universe.update({"confluence trials": trials, "monotonicity trials": trials,
                            "round-trip graphs": f"1..{max_n}",
                            "round-trip digraphs": f"1..{max_n}"})
    rules = (Rule.STANDARD, Rule.SKEW, Rule.DIRECTED)
    for t in range(trials):
        rule = rules[t % 3]
        n = rng.randint(1, 8)
        if rule is Rule.DIRECTED:
            g = labeled_digraph(n, rng.getrandbits(n * (n - 1)))
        else:
            g = labeled_graph(n, rng.getrandbits(n * (n - 1) // 2))
        s = rng.getrandbits(n)
        want = close(rule, g, s)
        got = close_random_order(rule, g, s, rng)
        report.checked += 1
        if got != want:
            report.counterexamples.append(Counterexample(
                _code(g), f"closure {want}", f"closure {got}", {"rule": rule.value, "s": s}))
    for t in range(trials):
        rule = rules[t % 3]
        n = rng.randint(1, 8)
        if rule is Rule.DIRECTED:
            g = labeled_digraph(n, rng.getrandbits(n * (n - 1)))
        else:
            g = labeled_graph(n, rng.getrandbits(n * (n - 1) // 2))
        s = rng.getrandbits(n)
        t_set = s | rng.getrandbits(n)
        cs, ct = close(rule, g, s), close(rule, g, t_set)
        report.checked += 1
        if cs & ~ct:
            report.counterexamples.append(Counterexample(
                _code(g), "monotone", f"close({s}) not within close({t_set})", {"rule": rule.value}))
    for n in range(1, max_n + 1):
        for idx in range(universe_size("graphs", n)):
            g = labeled_graph(n, idx)
            report.checked += 1
            if parse_graph6(to_graph6(g)) != g:
                report.counterexamples.append(Counterexample(to_graph6(g), "round-trip", "mismatch"))
    for n in range(1, max_n + 1):
        for idx in range(universe_size("digraphs", n)):
            d = labeled_digraph(n, idx)
            report.checked += 1
            if parse_digraph6(to_digraph6(d)) != d:
                report.counterexamples.append(Counterexample(to_digraph6(d), "round-trip", "mismatch"))
    report.tallies["confluence+monotonicity"] = 2 * trials


_DRIVERS = {
    "span0_standard": _drive_sweep,
    "span_high_standard": _drive_sweep,
    "skew_span0": _drive_sweep,
    "skew_high": _drive_sweep,
    "digraph_span0": _drive_sweep,
    "digraph_high": _drive_sweep,
    "span1_families": _drive_span1,
    "tree_bounds": _drive_trees,
    "disconnected_formula": _drive_disconnected,
    "cartesian_bound": _drive_cartesian,
    "parallel_module_lemma": _drive_parallel_lemma,
    "poly_span_bridge": _drive_bridge,
    "skew_binomial": _drive_binomial,
    "engine_properties": _drive_engine,
}
