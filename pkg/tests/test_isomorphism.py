import pytest
from hypothesis import given, strategies as st

from zfspan import families as fam
from zfspan.graphs import CapacityError
from zfspan.isomorphism import are_isomorphic, find_isomorphism, permute
from strategies import digraphs, graphs


def test_examples():
    assert are_isomorphic(fam.path(3), fam.complete_multipartite(2, 1))
    assert are_isomorphic(fam.cycle(4), fam.complete_minus_matching(4, 2))
    assert not are_isomorphic(fam.path(4), fam.star(3))
    assert not are_isomorphic(fam.path(3), fam.path(4))


def test_rejects_mixed_and_large():
    with pytest.raises(TypeError):
        are_isomorphic(fam.path(2), fam.directed_path(2))
    with pytest.raises(CapacityError):
        are_isomorphic(fam.path(9), fam.path(9))


@given(graphs(max_n=7), st.randoms(use_true_random=False))
def test_relabeling_is_isomorphic(g, rnd):
    phi = list(range(g.n))
    rnd.shuffle(phi)
    h = permute(g, phi)
    assert are_isomorphic(g, h)
    psi = find_isomorphism(g, h)
    assert permute(g, psi) == h


@given(digraphs(max_n=5), st.randoms(use_true_random=False))
def test_digraph_relabeling(d, rnd):
    phi = list(range(d.n))
    rnd.shuffle(phi)
    assert are_isomorphic(d, permute(d, phi))


@given(graphs(max_n=5), graphs(max_n=5), graphs(max_n=5))
def test_equivalence_relation(a, b, c):
    assert are_isomorphic(a, a)
    assert are_isomorphic(a, b) == are_isomorphic(b, a)
    if are_isomorphic(a, b) and are_isomorphic(b, c):
        assert are_isomorphic(a, c)
