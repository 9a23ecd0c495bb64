import random

import pytest
from hypothesis import given, settings, strategies as st

from thompsonlinks.group import (
    TreeDiagram,
    generator_w,
    generator_x,
    identity,
    insert_caret,
    random_diagram,
    random_element,
)
from thompsonlinks.strip import (
    MAX_REGIONS,
    RegionLimitError,
    enumerate_strip_colorings,
    format_gaps,
    frontier_gaps,
    is_member,
    leaf_parity_ok,
    parity_violations,
    region_adjacency,
    strip_coloring,
)
from thompsonlinks.trees import parse_tree, random_tree


def test_x0_gaps():
    x0 = generator_x(0)
    assert format_gaps(frontier_gaps(x0.plus)) == "0,1,2,1"
    assert format_gaps(frontier_gaps(x0.minus)) == "0,2,0,1"
    assert not is_member(x0)
    assert strip_coloring(x0) is None
    assert parity_violations(x0) == [1, 3]


def test_identity_strip():
    c = strip_coloring(identity())
    assert c.colors == (0, 1) and c.n_regions == 2
    assert enumerate_strip_colorings(identity()) == [(0, 1)]


def test_single_caret_pair():
    caret = parse_tree("(..)")
    d = TreeDiagram(caret, caret)
    assert strip_coloring(d).colors == (0, 2, 1)
    assert enumerate_strip_colorings(d) == [(0, 2, 1)]


def test_w0_coloring():
    w0 = generator_w(0)
    assert strip_coloring(w0).colors == (0, 2, 0, 1, 2, 1)


def test_region_adjacency_counts_regions():
    n, adj = region_adjacency(generator_x(0))
    assert n == 4
    assert (0, 3) in adj
    assert all(a < b for a, b in adj)


def test_region_limit():
    rng = random.Random(0)
    t = random_tree(MAX_REGIONS, rng)
    with pytest.raises(RegionLimitError):
        enumerate_strip_colorings(TreeDiagram(t, t))


def sampled_diagrams(seed, count):
    rng = random.Random(seed)
    for _ in range(count):
        kind = rng.random()
        if kind < 0.4:
            d = random_element(rng.randint(1, 6), "w", rng).diagram
        elif kind < 0.7:
            d = random_element(rng.randint(1, 6), "x", rng).diagram
        else:
            d = random_diagram(rng.randint(1, 14), rng)
        for _ in range(rng.randint(0, 2)):
            d = insert_caret(d, rng.randint(1, d.n_leaves))
        if d.n_leaves + 1 <= MAX_REGIONS:
            yield d


def test_membership_agrees_with_enumeration():
    members = 0
    for d in sampled_diagrams(5, 300):
        found = enumerate_strip_colorings(d)
        if is_member(d):
            members += 1
            assert found == [strip_coloring(d).colors]
        else:
            assert found == []
    assert members > 50


@settings(max_examples=100)
@given(st.integers(0, 2**32))
def test_members_satisfy_parity(seed):
    g = random_element(random.Random(seed).randint(1, 10), "w", seed)
    assert is_member(g) and leaf_parity_ok(g)


def test_membership_implies_parity_on_random_pairs():
    rng = random.Random(2)
    for _ in range(2000):
        d = random_diagram(rng.randint(1, 12), rng)
        if is_member(d):
            assert leaf_parity_ok(d)


def test_caret_insertion_preserves_membership():
    for d in sampled_diagrams(9, 100):
        for i in range(1, d.n_leaves + 1):
            assert is_member(insert_caret(d, i)) == is_member(d)
