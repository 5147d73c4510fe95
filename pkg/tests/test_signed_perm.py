from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from forestats import codes
from forestats import signed_perm as sp
from forestats import statistics as S
from forestats.forest import ForestError, parse_forest, path_forest
from forestats.labelings import DomainError


@st.composite
def signed_perms(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    perm = draw(st.permutations(range(1, n + 1)))
    signs = draw(st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n))
    return tuple(a * b for a, b in zip(perm, signs))


def test_parse_window():
    assert sp.parse_window("3 -5 1 -4 2") == (3, -5, 1, -4, 2)
    assert sp.parse_window("3,-5,1,-4,2") == (3, -5, 1, -4, 2)
    with pytest.raises(ValueError):
        sp.parse_window("1 1")


def test_inverse_example():
    s = (3, -5, 1, -4, 2)
    t = sp.inverse(s)
    assert sp.compose(t, s) == sp.compose(s, t) == (1, 2, 3, 4, 5)


def test_cycles_example():
    s = (3, -5, 1, -4, 2)
    assert sp.format_cycles(s) == "(1 3)(2 -5 -2 5)(4 -4)"
    assert sp.cyc_min(s, "B") == {1}
    assert oracles.cyc_b(s) == {1}


def test_rlmin_examples():
    assert sp.rlmin((2, 4, 1, 3, 5, 7, 6), "A") == {1, 3, 5, 6}
    assert sp.rlmin((4, -2, 1, 5, -3), "B") == {1}


def test_sorting_index_anchors():
    assert sp.ssort_sor((2, 4, 1, 3, 5, 7, 6), "A") == 5
    assert sp.ssort_sor((4, -2, 1, 5, -3), "B") == 11
    assert oracles.sorting_index_by_factorization((4, -2, 1, 5, -3)) == 11


def test_length_examples():
    s = (4, -2, 1, 5, -3)
    assert (sp.inv(s), sp.n_two(s)) == (6, 3)
    assert sp.length(s, "B") == 11
    assert sp.length((2, 4, 1, 3, 5, 7, 6), "A") == 4
    with pytest.raises(DomainError):
        sp.length(s, "A")
    with pytest.raises(DomainError):
        sp.length((-1, 2), "D")


def test_group_sizes():
    assert sum(1 for _ in sp.enumerate_group(3, "A")) == 6
    assert sum(1 for _ in sp.enumerate_group(3, "B")) == 48
    assert sum(1 for _ in sp.enumerate_group(3, "D")) == 24


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_sorting_index_equidistributed_with_length(n):
    for kind in ("A", "B"):
        group = list(sp.enumerate_group(n, kind))
        sor = Counter(sp.ssort_sor(s, kind) for s in group)
        ln = Counter(sp.length(s, kind) for s in group)
        assert sor == ln


@given(signed_perms())
def test_cycles_match_orbits(s):
    orbits = oracles.signed_cycles(s)
    cycles = sp.cycle_decomposition(s)
    balanced = [c for c in cycles if c.balanced]
    assert {c.minimum for c in balanced} == oracles.cyc_b(s)
    # a balanced cycle comes with its negative, an unbalanced one is its own negative
    assert len(orbits) == 2 * len(balanced) + (len(cycles) - len(balanced))


@given(signed_perms())
def test_sorting_index_oracle(s):
    assert sp.ssort_sor(s, "B") == oracles.sorting_index_by_factorization(s)


@given(signed_perms())
def test_inverse_property(s):
    assert sp.compose(sp.inverse(s), s) == tuple(range(1, len(s) + 1))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_bridge_small(n):
    f = path_forest(n)
    for s in sp.enumerate_group(n, "B"):
        w = sp.inverse(s)
        assert sp.read_word(f, w) == w
        assert codes.sor_b(f, w) == sp.ssort_sor(s, "B")
        assert set(S.btmax(f, w, "B")) == sp.rlmin(s, "B")
        assert S.inv_b(f, w) == sp.length(s, "B")


def test_read_word_rejects_non_path():
    with pytest.raises(ForestError):
        sp.read_word(parse_forest("3,3,0"), (1, 2, 3))
