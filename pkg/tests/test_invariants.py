from math import comb

import pytest
from hypothesis import given

from zfspan import families as fam
from zfspan.forcing import Rule, forces
from zfspan.gen import sample_two_set_perfectly_orderable
from zfspan.graphs import iter_subsets_of_size, members
from zfspan.invariants import (ForcingProfile, cartesian_span_lower_bound, disconnected_span,
                               failed_zero_forcing_number, profile, span, span_value,
                               zero_forcing_number)
from strategies import rule_and_object


@pytest.mark.parametrize("rule, g, z", [
    (Rule.STANDARD, fam.path(5), 1),
    (Rule.STANDARD, fam.complete(4), 3),
    (Rule.SKEW, sample_two_set_perfectly_orderable(4, 0.5, 7).graph, 0),
    (Rule.DIRECTED, fam.figure2_digraph(), 1),
])
def test_zero_forcing_number(rule, g, z):
    assert zero_forcing_number(rule, g)[0] == z


def test_failed_zero_forcing_number():
    assert failed_zero_forcing_number(Rule.STANDARD, fam.path(4))[0] == 1
    assert failed_zero_forcing_number(Rule.STANDARD, fam.path(5))[0] == 2
    assert failed_zero_forcing_number(Rule.SKEW, fam.complete(2)) is None
    g = fam.union(fam.path(3), fam.empty_graph(1))
    assert failed_zero_forcing_number(Rule.STANDARD, g)[0] == 3


@pytest.mark.parametrize("g, value", [
    (fam.complete(6), 0), (fam.path(4), 1), (fam.complete(1), 0),
    (fam.union(fam.complete(2), fam.complete(2)), 1),
])
def test_standard_span(g, value):
    assert span(Rule.STANDARD, g).span == value


def test_span_value():
    assert span_value(2, None) == 0
    assert span_value(3, 2) == 0
    assert span_value(1, 3) == 3


@pytest.mark.parametrize("g, z", [
    (fam.path(3), (0, 2, 3, 1)), (fam.complete(3), (0, 0, 3, 1)),
])
def test_profiles(g, z):
    assert profile(Rule.STANDARD, g).z_counts == z


def test_skew_profile_k2():
    assert profile(Rule.SKEW, fam.complete(2)).z_counts == (1, 2, 1)


def test_profile_validation():
    with pytest.raises(ValueError):
        ForcingProfile(Rule.STANDARD, 2, (1, 2, 1))
    with pytest.raises(ValueError):
        ForcingProfile(Rule.STANDARD, 2, (0, 3, 1))
    with pytest.raises(ValueError):
        ForcingProfile(Rule.STANDARD, 2, (0, 1, 0))
    ForcingProfile(Rule.SKEW, 2, (1, 2, 1))


def test_disconnected_formula_examples():
    def reps(*gs):
        return [span(Rule.STANDARD, g) for g in gs]
    assert disconnected_span(reps(fam.complete(2), fam.complete(2))) == 1
    assert disconnected_span(reps(fam.path(4), fam.complete(1))) == 3
    assert disconnected_span(reps(fam.path(3), fam.path(3))) == 3
    assert span(Rule.STANDARD, fam.union(fam.path(3), fam.path(3))).span == 3
    with pytest.raises(ValueError):
        disconnected_span(reps(fam.path(3)))
    with pytest.raises(ValueError):
        disconnected_span([span(Rule.SKEW, fam.complete(2)), span(Rule.SKEW, fam.complete(2))])


def test_cartesian_bound_examples():
    assert cartesian_span_lower_bound(1, 0, 2, 1, 0, 2) == -1
    assert span(Rule.STANDARD, fam.cycle(4)).span == 1
    assert cartesian_span_lower_bound(1, 1, 3, 1, 1, 3) == 1
    assert span(Rule.STANDARD, fam.cartesian_product(fam.path(3), fam.path(3))).span >= 1
    # K1 # P3 is P3, and the bound does not exceed span(P3)
    bound = cartesian_span_lower_bound(1, 0, 1, 1, 1, 3)
    assert bound <= span(Rule.STANDARD, fam.path(3)).span


@given(rule_and_object())
def test_witness_contract(rg):
    rule, g = rg
    rep = span(rule, g)
    assert len(members(rep.z_witness)) == rep.z and forces(rule, g, rep.z_witness)
    if rep.z > 0:
        assert not any(forces(rule, g, s) for s in iter_subsets_of_size(g.n, rep.z - 1))
    if rep.f is not None:
        assert len(members(rep.f_witness)) == rep.f and not forces(rule, g, rep.f_witness)
        assert all(forces(rule, g, s) for s in iter_subsets_of_size(g.n, rep.f + 1))
    assert rep.span == span_value(rep.z, rep.f)


@given(rule_and_object())
def test_profile_invariants(rg):
    rule, g = rg
    p = profile(rule, g)
    assert p.z_counts[g.n] == 1
    assert p.z_counts[0] in (0, 1)
    if rule is not Rule.SKEW:
        assert p.z_counts[0] == 0
    assert p.is_monotone_complete()
    assert all(0 <= c <= comb(g.n, i) for i, c in enumerate(p.z_counts))
