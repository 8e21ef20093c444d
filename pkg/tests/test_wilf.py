from itertools import combinations

import pytest

from wilfkit.compositions import compositions_of, count_dominating
from wilfkit.equivalence import xi
from wilfkit.setpartitions import bell_numbers, tau_112, tau_121
from wilfkit.wilf import (
    SIGMAS,
    PatternPair,
    avoider_sequence,
    enumerate_pattern_pairs,
    group_pairs,
    is_reduced,
    predicted_classes,
)


def test_pairs_k3():
    pairs = list(enumerate_pattern_pairs(3))
    by_sigma = {s: [p.tau for p in pairs if p.sigma == s] for s in SIGMAS}
    assert by_sigma[(1, 2, 1)] == [(1, 1, 1), (1, 1, 2), (1, 2, 2), (1, 2, 3)]
    assert by_sigma[(1, 2, 3)] == [(1, 1, 1), (1, 1, 2), (1, 2, 1), (1, 2, 2)]


@pytest.mark.parametrize("k", [3, 4, 5, 6])
def test_pair_families(k):
    pairs = list(enumerate_pattern_pairs(k))
    assert all(is_reduced(p) for p in pairs)
    for sigma in SIGMAS:
        assert sum(1 for p in pairs if p.sigma == sigma) == 2 ** (k - 1)
    comps = compositions_of(k)
    assert {p.tau for p in pairs if p.sigma == (1, 2, 1)} == {tau_121(a) for a in comps}
    assert {p.tau for p in pairs if p.sigma == (1, 1, 2)} == {tau_112(a) for a in comps}
    unreduced = sum(1 for _ in enumerate_pattern_pairs(k, reduced=False))
    assert unreduced == 4 * bell_numbers(k)[k]


def test_small_k_rejected():
    with pytest.raises(ValueError):
        list(enumerate_pattern_pairs(2))


@pytest.mark.parametrize("k", [3, 4, 5])
def test_avoider_sequences(k):
    for pair in enumerate_pattern_pairs(k):
        seq = avoider_sequence(pair, 10)
        assert seq[: k - 1] == tuple(2 ** (n - 1) for n in range(1, k))
        assert seq[k - 1] == 2 ** (k - 1) - 1
    for a in compositions_of(k):
        for sigma, tau in (((1, 2, 1), tau_121), ((1, 1, 2), tau_112)):
            seq = avoider_sequence(PatternPair(sigma, tau(a)), 10)
            assert seq == tuple(2 ** (n - 1) - count_dominating(n, a) for n in range(1, 11))


def test_no_cross_size_equivalence():
    reps = {k: [avoider_sequence(p, 6) for p in enumerate_pattern_pairs(k)] for k in (3, 4, 5)}
    for k, k2 in combinations(reps, 2):
        n = min(k, k2)
        for s in reps[k]:
            for s2 in reps[k2]:
                assert s[n - 1] != s2[n - 1]


def test_predicted_structure():
    for k in (3, 4, 5):
        pred = predicted_classes(k)
        assert len(pred) == xi(k) + 1
        all_pairs = [p for pc in pred for p in pc.pairs]
        assert len(all_pairs) == len(set(all_pairs)) == 4 * 2 ** (k - 1)
        ones_class = next(pc for pc in pred if pc.normal_form == (1,) * k)
        assert sum(1 for p in ones_class.pairs if p.sigma == (1, 2, 2)) == 2 ** (k - 1)
    pred3 = {pc.normal_form: pc.pairs for pc in predicted_classes(3)}
    assert pred3[(3,)] == {PatternPair((1, 2, 1), (1, 1, 1)), PatternPair((1, 1, 2), (1, 1, 1))}
    assert pred3[None] == {PatternPair((1, 2, 3), (1, 1, 1))}


@pytest.mark.parametrize("k, expected", [(3, 3), (4, 4), (5, 5)])
def test_grouping_matches_prediction(k, expected):
    report = group_pairs(k)
    assert report.verdict, report.problems
    assert len(report.classes) == expected == 1 + xi(k)
    assert {frozenset(c.pairs) for c in report.classes} == {pc.pairs for pc in report.predicted}
    singleton = (PatternPair((1, 2, 3), (1,) * k),)
    assert any(c.pairs == singleton for c in report.classes)
    seqs = [c.sequence for c in report.classes]
    assert len(set(seqs)) == len(seqs)


def test_short_prefix_is_refused():
    with pytest.raises(ValueError):
        group_pairs(4, 5)


def test_prefix_equal_classes_are_reported(monkeypatch):
    import wilfkit.wilf as wilf

    real = wilf.avoider_sequence
    # only look at n <= k, where all but {123,1^k} agree
    monkeypatch.setattr(wilf, "avoider_sequence", lambda pair, n_max: real(pair, len(pair.tau)))
    report = group_pairs(4)
    assert not report.verdict
    assert any("increase n_max" in p for p in report.problems)
    assert report.to_dict()["verdict"] == "FAIL"


def test_report_dict():
    d = group_pairs(3, 6).to_dict()
    assert d["verdict"] == "OK"
    assert d["class_count"] == 3
    assert sum(c["size"] for c in d["classes"]) == 16
