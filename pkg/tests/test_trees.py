import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from thompsonlinks.trees import (
    LEAF,
    LEAF4,
    BinaryTree,
    QuaternaryTree,
    TreeParseError,
    collapse_caret,
    common_refinement,
    expand_leaf,
    from_depths,
    graft,
    leaf_depths,
    n_carets,
    parse_tree,
    random_tree,
    subdivisions,
    to_text,
)

seeds = st.integers(min_value=0, max_value=2**32)
sizes = st.integers(min_value=1, max_value=40)


def test_parse_leaf():
    t = parse_tree(".")
    assert t == LEAF and t.n_leaves == 1


def test_parse_caret():
    t = parse_tree("((..).)")
    assert t == BinaryTree(BinaryTree(LEAF, LEAF), LEAF)
    assert leaf_depths(t) == [2, 2, 1]


def test_parse_ignores_whitespace():
    assert parse_tree(" ( ( . . ) \n . ) ") == parse_tree("((..).)")


@pytest.mark.parametrize("text, pos", [("((..)", 5), ("", 0), ("(.)", 2), ("(...)", 3),
                                       ("..", 1), ("(.x)", 2), (")", 0)])
def test_parse_errors(text, pos):
    with pytest.raises(TreeParseError) as info:
        parse_tree(text)
    assert info.value.position == pos


def test_parse_unbalanced_reports_end():
    with pytest.raises(TreeParseError, match="end of input"):
        parse_tree("((..)")


def test_quaternary_notation():
    q = parse_tree("((....)...)", arity=4)
    assert q.n_leaves == 7
    assert to_text(q) == "((....)...)"
    with pytest.raises(TreeParseError):
        parse_tree("(..)", arity=4)


@given(seeds, sizes)
def test_print_parse_round_trip(seed, n):
    t = random_tree(n, random.Random(seed))
    assert parse_tree(to_text(t)) == t


@given(seeds, sizes)
def test_dyadic_identity_and_caret_count(seed, n):
    t = random_tree(n, random.Random(seed))
    depths = leaf_depths(t)
    assert len(depths) == t.n_leaves == n
    assert sum(Fraction(1, 2 ** d) for d in depths) == 1
    assert n_carets(t) == n - 1


@given(seeds, st.integers(min_value=0, max_value=12))
def test_quaternary_leaf_count(seed, k):
    q = random_tree(3 * k + 1, random.Random(seed), arity=4)
    assert q.n_leaves % 3 == 1
    assert sum(Fraction(1, 4 ** d) for d in leaf_depths(q)) == 1


@given(seeds, sizes)
def test_from_depths_inverts_leaf_depths(seed, n):
    t = random_tree(n, random.Random(seed))
    assert from_depths(leaf_depths(t)) == t


def test_from_depths_rejects_non_prefix_codes():
    for bad in ([1], [1, 2], [2, 1], [1, 1, 1]):
        with pytest.raises(ValueError):
            from_depths(bad)


def test_expand_and_collapse():
    t = parse_tree("((..).)")
    assert to_text(expand_leaf(t, 3)) == "((..)(..))"
    assert collapse_caret(expand_leaf(t, 2), 2) == t
    with pytest.raises(IndexError):
        expand_leaf(t, 4)
    with pytest.raises(ValueError):
        collapse_caret(t, 2)


def test_common_refinement_contains_both():
    s, t = parse_tree("((..).)"), parse_tree("(.(..))")
    u = common_refinement(s, t)
    assert to_text(u) == "((..)(..))"
    assert [x.n_leaves for x in subdivisions(s, u)] == [1, 1, 2]
    assert graft(s, subdivisions(s, u)) == u
    assert graft(t, subdivisions(t, u)) == u


@given(seeds, sizes, sizes)
def test_common_refinement_is_smallest(seed, n, m):
    rng = random.Random(seed)
    s, t = random_tree(n, rng), random_tree(m, rng)
    u = common_refinement(s, t)
    assert graft(s, subdivisions(s, u)) == u == graft(t, subdivisions(t, u))
    # each caret of u is a caret of s or of t
    assert n_carets(u) <= n_carets(s) + n_carets(t)
    assert common_refinement(u, s) == u


def test_subdivisions_requires_refinement():
    with pytest.raises(ValueError):
        subdivisions(parse_tree("(..)"), LEAF)


def test_leaf_structures_are_distinct_types():
    assert LEAF != LEAF4
    assert QuaternaryTree((LEAF4,) * 4).n_leaves == 4
    with pytest.raises(ValueError):
        QuaternaryTree((LEAF4,) * 3)
