import random
from itertools import product

import pytest
from hypothesis import given, strategies as st

from zfspan import gen, kernel
from zfspan.forcing import Rule
from zfspan.graphs import Graph
from zfspan.invariants import span, span_is_zero, zero_forcing_number


def brute_noncrossing(k, j):
    cells = list(product(range(k), range(j)))
    count = 0
    for mask in range(1 << len(cells)):
        chosen = [c for i, c in enumerate(cells) if mask >> i & 1]
        if not gen.crossing(chosen):
            count += 1
    return count


@pytest.mark.parametrize("k, j", [(1, 1), (1, 3), (2, 2), (2, 3), (3, 3)])
def test_noncrossing_count_matches_brute_force(k, j):
    assert gen.count_noncrossing(k, j) == brute_noncrossing(k, j)
    assert len(set(gen.iter_noncrossing(k, j))) == gen.count_noncrossing(k, j)


@given(st.integers(1, 5), st.integers(1, 5), st.integers(0, 10 ** 6))
def test_sampled_drawings_are_valid(k, j, seed):
    cross = gen.sample_noncrossing(k, j, random.Random(seed))
    assert not gen.crossing(cross)
    drawing = gen.ParallelDrawing(k, j, cross)
    assert gen.validate_parallel_drawing(drawing.graph, k) != gen.is_path_graph(drawing.graph)


def test_two_parallel_paths_sampler_avoids_paths():
    for seed in range(20):
        d = gen.sample_two_parallel_paths(2, 3, seed)
        assert not gen.is_path_graph(d.graph)
        assert span(Rule.STANDARD, d.graph).z == 2


def test_two_parallel_paths_item2_drawing():
    # one isolated-layer vertex x adjacent to the outer two of three path vertices
    d = gen.ParallelDrawing(1, 3, ((0, 0), (0, 2)))
    assert gen.validate_parallel_drawing(d.graph, 1)
    from zfspan.characterizations import parallel_module_items
    assert "2a" in parallel_module_items(d.graph, *d.layers)


def test_two_set_order_m1():
    for seed in range(5):
        g = gen.sample_two_set_perfectly_orderable(1, 0.0, seed).graph
        assert g == Graph.from_edges(2, [(0, 1)])


@given(st.integers(1, 8), st.floats(0, 1), st.integers(0, 10 ** 6))
def test_two_set_orders_have_skew_z_zero(m, density, seed):
    t = gen.sample_two_set_perfectly_orderable(m, density, seed)
    assert gen.validate_two_set_order(t.graph, m)
    assert zero_forcing_number(Rule.SKEW, t.graph)[0] == 0


def test_bouquet():
    g = gen.odd_cycles_bouquet([3, 3])
    assert (g.n, g.num_edges) == (5, 6)
    assert gen.validate_odd_cycles_bouquet(g, [3, 3])
    with pytest.raises(ValueError):
        gen.odd_cycles_bouquet([4])


def test_dipole_validation():
    layout = gen.doubly_extended_bouquet_dipole([3], [3], [(2,)])
    assert layout.graph.n == 6 and gen.validate_dipole(layout)
    for bad in ([(2, 4)], [(2,), (2,)], [(3,)], [(2,), (2, 2), (2,)]):
        with pytest.raises(ValueError):
            gen.doubly_extended_bouquet_dipole([3], [3], bad)


@given(st.integers(0, 10 ** 6))
def test_sampled_dipoles_have_skew_span_zero(seed):
    layout = gen.sample_dipole(random.Random(seed), max_order=16)
    assert gen.validate_dipole(layout)
    assert kernel.summarize(Rule.SKEW, [layout.graph]).span()[0] == 0


def test_drawn_dipole():
    # edge list transcribed from the drawing, vertices renumbered from 0
    chain = [2, 3, 4, 5, 11, 12, 13, 14, 15, 17, 18, 19, 21, 23, 24, 25, 26, 27, 28, 29, 30]
    edges = [(x - 1, x) for x in chain] + [(5, 1)] + [(5, x) for x in (6, 7, 8, 9, 10)]
    edges += [(6, 7), (8, 9), (12, 16), (12, 20), (19, 15), (21, 15), (22, 15), (30, 24)]
    drawn = Graph.from_edges(30, [(a - 1, b - 1) for a, b in edges])
    built = gen.example_dipole().graph
    assert built.num_edges == drawn.num_edges == 35
    assert sorted(built.degrees()) == sorted(drawn.degrees())
    assert span_is_zero(Rule.SKEW, drawn) and span_is_zero(Rule.SKEW, built)


def test_example_two_set_graph():
    g = gen.example_two_set_graph().graph
    assert g.n == 8 and g.num_edges == 13
    assert span(Rule.SKEW, g).z == 0


def test_random_connected():
    for seed in range(10):
        assert gen.random_connected_graph(6, 0.3, seed).is_connected()
