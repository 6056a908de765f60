from math import comb

import numpy as np
import pytest
from hypothesis import given, settings

from zfspan import families as fam
from zfspan import kernel
from zfspan.enumeration import labeled_digraph, labeled_graph
from zfspan.forcing import Rule, forces
from zfspan.graphs import CapacityError
from zfspan.invariants import span
from strategies import rule_and_object


@given(rule_and_object(max_n=7))
@settings(max_examples=200)
def test_table_matches_reference_closure(rg):
    rule, g = rg
    table = kernel.forcing_table(rule, g)
    for s in range(1 << g.n):
        assert bool(table[s]) == forces(rule, g, s)


@given(rule_and_object(max_n=7))
@settings(max_examples=200)
def test_summary_matches_reference_search(rg):
    rule, g = rg
    s = kernel.summarize(rule, [g])
    rep = span(rule, g)
    assert int(s.z[0]) == rep.z and int(s.z_witness[0]) == rep.z_witness
    if rep.f is None:
        assert int(s.f[0]) == -1
    else:
        assert int(s.f[0]) == rep.f and int(s.f_witness[0]) == rep.f_witness
    assert int(s.span()[0]) == rep.span


@pytest.mark.parametrize("rule, n, build", [(Rule.STANDARD, 5, labeled_graph),
                                            (Rule.SKEW, 4, labeled_graph),
                                            (Rule.DIRECTED, 3, labeled_digraph)])
def test_sweep_matches_batch(rule, n, build):
    size = 1 << (n * (n - 1) // (1 if rule is Rule.DIRECTED else 2))
    swept = kernel.sweep_labeled(rule, n, 0, size)
    batch = kernel.summarize(rule, [build(n, i) for i in range(size)])
    for field in ("z", "z_witness", "f", "f_witness", "counts"):
        assert np.array_equal(getattr(swept, field), getattr(batch, field))


def test_sweep_slices_concatenate():
    whole = kernel.sweep_labeled(Rule.STANDARD, 5, 0, 1024)
    left = kernel.sweep_labeled(Rule.STANDARD, 5, 0, 300)
    right = kernel.sweep_labeled(Rule.STANDARD, 5, 300, 1024)
    assert np.array_equal(whole.counts, np.vstack([left.counts, right.counts]))


def test_counts_are_a_profile():
    s = kernel.summarize(Rule.STANDARD, [fam.cycle(6)])
    row = s.counts[0]
    assert row[6] == 1 and row[0] == 0
    assert all(0 <= row[i] <= comb(6, i) for i in range(7))


def test_capacity_and_mixed_batches():
    with pytest.raises(CapacityError):
        kernel.forcing_table(Rule.STANDARD, fam.path(25))
    with pytest.raises(ValueError):
        kernel.summarize(Rule.STANDARD, [fam.path(3), fam.path(4)])
