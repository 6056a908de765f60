import pytest

from zfspan import characterizations as ch
from zfspan import families as fam
from zfspan import gen


def test_simple_predicates():
    assert ch.has_isolated_vertex(fam.union(fam.path(3), fam.empty_graph(1)))
    assert not ch.has_isolated_vertex(fam.complete(3))
    assert ch.has_isolated_vertex(fam.empty_graph(2))
    assert ch.has_order2_module(fam.complete_multipartite(2, 2))
    assert not ch.has_order2_module(fam.path(4))
    assert ch.has_order2_module(fam.cycle(4))


def test_two_parallel_paths_and_2spo():
    assert ch.is_two_parallel_paths(fam.cycle(4))
    assert not ch.is_two_parallel_paths(fam.path(5))
    assert not ch.is_two_parallel_paths(fam.complete(4))
    assert ch.is_2spo(fam.complete(2))
    assert not ch.is_2spo(fam.path(3))
    assert ch.is_2spo(gen.sample_two_set_perfectly_orderable(4, 0.3, 5).graph)


def test_digraph_conditions():
    assert ch.has_source(fam.hessenberg_path(5))
    assert not ch.has_source(fam.directed_cycle(3))
    c = ch.digraph_conditions(fam.figure2_digraph())
    assert not c.has_source and c.inpair


def test_bouquet_recognizer():
    assert ch.is_odd_cycles_bouquet(gen.odd_cycles_bouquet([3, 5, 3]))
    assert ch.is_odd_cycles_bouquet(fam.cycle(5))
    assert not ch.is_odd_cycles_bouquet(fam.cycle(4))
    assert not ch.is_odd_cycles_bouquet(fam.union(fam.cycle(3), fam.cycle(3)))


def test_dipole_recognizer():
    assert ch.is_doubly_extended_bouquet_dipole(gen.example_dipole().graph)
    layout = gen.doubly_extended_bouquet_dipole([3], [5], [(2,), (2, 4), (4,)])
    assert ch.is_doubly_extended_bouquet_dipole(layout.graph)
    assert not ch.is_doubly_extended_bouquet_dipole(gen.odd_cycles_bouquet([3, 3]))


def test_digraph_span0_families():
    assert ch.digraph_span0_family(fam.directed_cycle(4)) == "directed_cycle"
    assert ch.digraph_span0_family(fam.regular_tournament5()) == "tournament5"
    assert ch.digraph_span0_family(fam.empty_digraph(3)) == "empty"
    assert ch.complement_cycle_pattern(fam.complete_minus_disjoint_cycles(6, [[0, 1, 2], [3, 4, 5]])) == "3a"
    base = fam.complete_minus_disjoint_cycles(4, [[0, 1, 2]])
    assert ch.complement_cycle_pattern(base) == "3b"
    assert ch.complement_cycle_pattern(base.remove_arcs([(3, 0)])) == "3c"
    join = fam.directed_join(fam.complete_digraph(3), fam.empty_digraph(2))
    assert ch.is_complete_join_independent(join)
    assert ch.digraph_span0_family(fam.directed_path(3)) is None


@pytest.mark.parametrize("theorem, g, value", [
    ("span0_standard", fam.complete(5), 0),
    ("span_high_standard", fam.union(fam.path(4), fam.empty_graph(1)), 3),
    ("span_high_standard", fam.path(3), 1),
    ("span_high_standard", fam.complete(1), 0),
    ("span_high_standard", fam.path(5), 2),
    ("digraph_high", fam.figure2_digraph(), 3),
    ("digraph_span0", fam.regular_tournament5(), 0),
    ("skew_high", fam.union(fam.complete(2), fam.empty_graph(1)), 2),
])
def test_predict_span(theorem, g, value):
    assert ch.predict_span(theorem, g) == value


def test_predict_span_absent():
    assert ch.predict_span("span0_standard", fam.path(4)) is None
    with pytest.raises(ValueError):
        ch.predict_span("no_such_theorem", fam.path(4))


def test_parallel_module_items():
    d = gen.ParallelDrawing(2, 2, ())
    assert ch.parallel_module_items(d.graph, *d.layers) == sorted(ch.parallel_module_items(d.graph, *d.layers))
    for k, j in ((1, 3), (2, 3), (3, 3)):
        for cross in gen.iter_noncrossing(k, j):
            drawing = gen.ParallelDrawing(k, j, cross)
            if gen.is_path_graph(drawing.graph):
                continue
            assert bool(ch.parallel_module_items(drawing.graph, *drawing.layers)) == \
                ch.has_order2_module(drawing.graph)
