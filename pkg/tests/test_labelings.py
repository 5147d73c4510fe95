import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import EXAMPLE_W
from forestats.forest import antichain, parse_forest, path_forest
from forestats.labelings import (
    DomainError,
    ExhaustionBoundError,
    ExhaustionBounds,
    LabelingError,
    class_size,
    enumerate_labelings,
    format_labeling,
    induced_sublabeling,
    is_even_signed,
    labeling_class,
    negative_count,
    parse_labeling,
    standardize,
    validate,
)


def test_parse_and_format():
    w = parse_labeling("3,-5,1,-4,2")
    assert w == EXAMPLE_W
    assert format_labeling(w) == "3,-5,1,-4,2"
    assert parse_labeling(" 1, 2 ") == (1, 2)


def test_parse_error_position():
    with pytest.raises(LabelingError, match="entry 3"):
        parse_labeling("1,2,z")


@pytest.mark.parametrize("w", [(1, 2), (1, 1, 2), (0, 1, 2), (1, 2, 4), (-1, 1, 3)])
def test_validate_rejects(w):
    with pytest.raises(LabelingError):
        validate(path_forest(3), w)


def test_classes():
    assert labeling_class((1, 2)) == "unsigned"
    assert labeling_class((-1, -2)) == "even_signed"
    assert labeling_class((-1, 2)) == "signed"
    assert negative_count(EXAMPLE_W) == 2
    assert is_even_signed(EXAMPLE_W)


def test_signed_antichain_two():
    labs = list(enumerate_labelings(antichain(2), "signed"))
    assert len(labs) == 8 == len(set(labs))


@pytest.mark.parametrize("cls", ["unsigned", "signed", "even-signed"])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_enumeration_sizes(cls, n):
    labs = list(enumerate_labelings(path_forest(n), cls))
    assert len(labs) == len(set(labs)) == class_size(n, cls)
    assert all(sorted(map(abs, w)) == list(range(1, n + 1)) for w in labs)


def test_enumeration_order():
    labs = list(enumerate_labelings(antichain(2), "signed"))
    assert labs[0] == (1, 2)
    assert labs[:4] == [(1, 2), (1, -2), (-1, 2), (-1, -2)]


def test_exhaustion_guard():
    with pytest.raises(ExhaustionBoundError):
        next(enumerate_labelings(path_forest(6), "signed"))
    bigger = ExhaustionBounds(unsigned=7, signed=6)
    assert next(enumerate_labelings(path_forest(6), "signed", bigger)) == (1, 2, 3, 4, 5, 6)
    assert next(enumerate_labelings(path_forest(6), "signed", None))


def test_unknown_class():
    with pytest.raises(ValueError):
        list(enumerate_labelings(path_forest(2), "odd"))


def test_induced_sublabeling_example():
    f = parse_forest("3,3,5,5,0")
    assert induced_sublabeling(f, (3, -2, 1, 4, 5), 3) == (3, -2, 1)
    assert induced_sublabeling(f, (3, 2, 1, -4, 5), 4) == (-1,)


@given(st.lists(st.integers(1, 50), min_size=1, max_size=8, unique=True), st.data())
def test_standardize_properties(absvals, data):
    signs = data.draw(st.lists(st.sampled_from((1, -1)), min_size=len(absvals), max_size=len(absvals)))
    vals = [a * s for a, s in zip(absvals, signs)]
    std = standardize(vals)
    assert sorted(map(abs, std)) == list(range(1, len(vals) + 1))
    for (a, x), (b, y) in itertools.combinations(zip(vals, std), 2):
        assert (abs(a) < abs(b)) == (abs(x) < abs(y))
        assert (a < 0) == (x < 0)


def test_domain_error_is_distinct():
    assert not issubclass(DomainError, LabelingError)
