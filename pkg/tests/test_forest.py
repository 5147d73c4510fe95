import math

import pytest
from hypothesis import given

import oracles
from conftest import EXAMPLE, forests
from forestats.forest import (
    Forest,
    ForestError,
    antichain,
    enumerate_forests,
    enumerate_forests_upto,
    enumerate_natural_labelings,
    is_natural,
    natural_labeling_count,
    parse_forest,
    path_forest,
    subtree_sizes,
)


def test_parse_example_shape(example):
    assert example.parents == (3, 3, 5, 5, 0)
    assert example.children[2] == (0, 1)
    assert example.children[4] == (2, 3)
    assert example.roots == (5,)
    assert example.leaves == (1, 2, 4)
    assert str(example) == EXAMPLE


def test_parse_whitespace():
    assert parse_forest(" 2, 0 ").parents == (2, 0)


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("3,x,0", "entry 2"),
        ("", "empty"),
        ("1,0", "v_1"),
        ("0,9", "outside"),
        ("2,1", "v_2"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(ForestError, match=fragment):
        parse_forest(text)


def test_subtree_sizes_example(example):
    assert subtree_sizes(example) == (1, 1, 3, 1, 5)
    assert subtree_sizes(example) == oracles.subtree_sizes(example.parents)


def test_below_example(example):
    assert example.below(3) == {1, 2}
    assert example.below(5) == {1, 2, 3, 4}
    assert example.below(1) == frozenset()
    with pytest.raises(ForestError):
        example.below(6)


def test_natural_count_example(example):
    assert natural_labeling_count(example) == 8
    assert len(oracles.natural_labelings(example.parents)) == 8


def test_natural_labelings_example(example):
    got = list(enumerate_natural_labelings(example))
    assert sorted(got) == sorted(oracles.natural_labelings(example.parents))
    for w in got:
        assert w[4] == 5 and w[2] > w[0] and w[2] > w[1]


def test_path_and_antichain():
    assert path_forest(1).parents == (0,)
    assert path_forest(4).is_path()
    assert not antichain(3).is_path()
    assert natural_labeling_count(path_forest(5)) == 1
    assert natural_labeling_count(antichain(4)) == 24


def test_forest_counts():
    # rooted forests on n unlabeled vertices
    assert [sum(1 for _ in enumerate_forests(n)) for n in range(1, 7)] == [1, 2, 4, 9, 20, 48]
    assert sum(1 for _ in enumerate_forests_upto(4)) == 16


def test_enumeration_is_deterministic():
    assert [f.parents for f in enumerate_forests(5)] == [f.parents for f in enumerate_forests(5)]


def test_subforest(example):
    sub = example.subforest(3)
    assert sub.parents == (3, 3, 0)


def test_canonical_form_isomorphism():
    assert Forest((2, 0, 0)).canonical_form() == Forest((0, 3, 0)).canonical_form()
    assert Forest((3, 3, 0)).canonical_form() != Forest((2, 3, 0)).canonical_form()


@given(forests(max_n=7))
def test_tables_match_oracle(f):
    rel = oracles.strictly_below(f.parents)
    assert set(f.comparable_pairs()) == rel
    assert f.h == oracles.subtree_sizes(f.parents)
    for j in range(1, f.n + 1):
        assert f.below(j) == {x for x, y in rel if y == j}


@given(forests(max_n=6))
def test_hook_length_count(f):
    count = natural_labeling_count(f)
    assert count == math.factorial(f.n) // math.prod(f.h)
    labs = list(enumerate_natural_labelings(f))
    assert len(labs) == count == len(set(labs))
    assert all(is_natural(f, w) for w in labs)


def test_is_natural_rejects_negative(example):
    assert not is_natural(example, (1, 2, 3, 4, -5))
