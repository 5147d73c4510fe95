import itertools
from collections import Counter

import pytest

from forestats import harness
from forestats import statistics as S
from forestats.forest import enumerate_forests_upto
from forestats.genfun import pair_distribution
from forestats.labelings import ExhaustionBounds, validate
from forestats.forest import parse_forest


def test_verify_trivial():
    reports = harness.verify(1)
    assert reports and all(r.status == "verified" for r in reports)


def test_verify_four_all_identities():
    reports = harness.verify(4)
    assert all(r.status == "verified" for r in reports), [r for r in reports if r.status != "verified"][:3]
    n_forests = sum(1 for _ in enumerate_forests_upto(4))
    general = [i for i in harness.IDENTITIES.values() if not i.paths_only]
    paths = [i for i in harness.IDENTITIES.values() if i.paths_only]
    assert len(reports) == n_forests * len(general) + 4 * len(paths)


def test_verify_deterministic():
    a = [r.to_dict() for r in harness.verify(3)]
    b = [r.to_dict() for r in harness.verify(3)]
    assert a == b
    assert "seconds" not in a[0]
    assert "seconds" in harness.verify(1)[0].to_dict(timing=True)


def test_verify_filters():
    reports = harness.verify(3, identities=["inv_btmax"])
    assert {r.identity for r in reports} == {"inv_btmax"}
    reports = harness.verify(3, classes=["even-signed"])
    assert {r.identity for r in reports} == {"invd_btmaxd"}
    with pytest.raises(KeyError):
        harness.verify(2, identities=["nope"])


def test_signed_identities_respect_bound():
    ctx = harness.Context(bounds=ExhaustionBounds(unsigned=3, signed=2))
    reports = harness.verify(3, identities=["invb_btmaxb", "inv_btmax"], ctx=ctx)
    assert max(len(r.forest.split(",")) for r in reports if r.identity == "invb_btmaxb") == 2
    assert max(len(r.forest.split(",")) for r in reports if r.identity == "inv_btmax") == 3


def _corrupt_inv(forest, w):
    # off by one on a single labeling
    bump = 1 if tuple(w) == tuple(range(forest.n, 0, -1)) else 0
    return S.inv(forest, w) + bump


def test_corrupted_statistic_is_caught():
    ctx = harness.Context(registry={"inv": _corrupt_inv})
    reports = harness.verify(3, identities=["inv_btmax", "mahonian_inv"], ctx=ctx)
    failed = [r for r in reports if r.status == "failed"]
    assert failed
    for r in failed:
        forest = parse_forest(r.forest)
        w = tuple(r.witness["labeling"])
        validate(forest, w)
        assert w == tuple(range(forest.n, 0, -1))
        assert r.witness["enumerated"] > r.witness["formula"]


def test_corrupted_set_statistic_is_caught():
    ctx = harness.Context(registry={"btmax_b": lambda f, w: ()})
    reports = harness.verify(2, identities=["acode_lemma"], ctx=ctx)
    assert all(r.status == "failed" and "labeling" in r.witness for r in reports)


def test_failed_reports_carry_witness():
    ctx = harness.Context(registry={"maj": lambda f, w: 0})
    for r in harness.verify(3, identities=["mahonian_maj", "mcode_theorem", "inv_to_maj"], ctx=ctx):
        if r.status == "failed":
            assert r.witness


def test_counterexample_maj_btmax():
    r = harness.counterexample("maj_btmax_vs_inv_btmax", 5)
    assert r.status == "counterexample_found"
    f = parse_forest(r.forest)
    a = pair_distribution(f, "maj_btmax").collapse_t()
    b = pair_distribution(f, "inv_btmax").collapse_t()
    exp = (r.witness["exponent"]["q"], 0, r.witness["exponent"]["t"])
    assert a.coefficient(exp) != b.coefficient(exp)
    assert a.coefficient(exp) == r.witness["maj_btmax"]


def _lrmax(word):
    return sum(1 for i, x in enumerate(word) if all(x > y for y in word[:i]))


def _word_maj(word):
    return sum(i for i in range(1, len(word)) if word[i - 1] > word[i])


def _word_inv(word):
    return sum(1 for i in range(len(word)) for j in range(i + 1, len(word)) if word[i] > word[j])


def test_counterexample_on_paths():
    # on the linear tree the pairs are the word statistics (maj, lrmax) and
    # (inv, lrmax), which already differ on S_3
    assert harness.counterexample("maj_btmax_vs_inv_btmax", 2, paths_only=True).status == "none_found"
    r = harness.counterexample("maj_btmax_vs_inv_btmax", 5, paths_only=True)
    assert r.status == "counterexample_found" and r.forest == "2,3,0"
    words = list(itertools.permutations((1, 2, 3)))
    maj_pairs = Counter((_word_maj(w), _lrmax(w)) for w in words)
    inv_pairs = Counter((_word_inv(w), _lrmax(w)) for w in words)
    q, t = r.witness["exponent"]["q"], r.witness["exponent"]["t"]
    assert maj_pairs[(q, t)] == r.witness["maj_btmax"] != inv_pairs[(q, t)] == r.witness["inv_btmax"]


def test_counterexample_unattained():
    r = harness.counterexample("signed_mcode_not_onto", 5)
    assert r.status == "counterexample_found"
    f = parse_forest(r.forest)
    assert harness.unattained_signed_mcode(f) == tuple(r.witness["sequence"])


def test_counterexample_unknown_target():
    with pytest.raises(KeyError):
        harness.counterexample("nope", 3)
