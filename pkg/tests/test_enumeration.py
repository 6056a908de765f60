from collections import Counter

import pytest
from hypothesis import given, strategies as st

from zfspan.enumeration import (LIMITS, RangeError, enumerate_labeled, labeled_tree,
                                prufer_decode, prufer_sequence, split_range, universe_size)
from zfspan.formats import to_digraph6, to_graph6


@pytest.mark.parametrize("kind, n, count", [("graphs", 3, 8), ("trees", 4, 16), ("digraphs", 2, 4),
                                            ("graphs", 5, 1024), ("trees", 6, 1296)])
def test_counts(kind, n, count):
    objs = list(enumerate_labeled(kind, n))
    assert len(objs) == count == universe_size(kind, n)


@pytest.mark.parametrize("kind, n", [("graphs", 4), ("digraphs", 3), ("trees", 5)])
def test_each_object_once(kind, n):
    enc = to_digraph6 if kind == "digraphs" else to_graph6
    codes = Counter(enc(g) for g in enumerate_labeled(kind, n))
    assert all(c == 1 for c in codes.values())


def test_trees_are_trees():
    for t in enumerate_labeled("trees", 6):
        assert t.num_edges == 5 and t.is_connected()


def test_limits():
    for kind, top in LIMITS.items():
        with pytest.raises(RangeError):
            universe_size(kind, top + 1)


def test_slices_match_full_enumeration():
    full = list(enumerate_labeled("graphs", 4))
    parts = split_range(len(full), 3)
    assert parts[0][0] == 0 and parts[-1][1] == len(full)
    merged = [g for lo, hi in parts for g in enumerate_labeled("graphs", 4, lo, hi)]
    assert merged == full


@given(st.integers(2, 8), st.data())
def test_prufer_bijection(n, data):
    idx = data.draw(st.integers(0, n ** (n - 2) - 1))
    seq = prufer_sequence(n, idx)
    t = prufer_decode(seq, n)
    assert t == labeled_tree(n, idx)
    degrees = t.degrees()
    for v in range(n):
        assert degrees[v] == seq.count(v) + 1
