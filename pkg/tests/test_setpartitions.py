import itertools

import pytest
from hypothesis import given, settings, strategies as st

from wilfkit.compositions import compositions_of, count_dominating
from wilfkit.setpartitions import (
    avoiders,
    bell_numbers,
    contains,
    count_avoiders,
    enumerate_partitions,
    format_rgf,
    from_blocks,
    parse_rgf,
    rgf,
    tau_112,
    tau_121,
    to_blocks,
)

from oracles import all_rgfs_brute, bell_by_stirling, contains_brute


@st.composite
def rgfs(draw, max_size=8):
    n = draw(st.integers(1, max_size))
    labels = [1]
    for _ in range(n - 1):
        labels.append(draw(st.integers(1, max(labels) + 1)))
    return tuple(labels)


class TestBlocks:
    def test_example_partition(self):
        assert from_blocks([{1, 3, 4}, {2, 6}, {5, 7, 8}]) == (1, 2, 1, 1, 3, 2, 3, 3)
        assert to_blocks((1, 2, 1, 1, 3, 2, 3, 3)) == ((1, 3, 4), (2, 6), (5, 7, 8))

    def test_block_order_is_irrelevant(self):
        assert from_blocks([{5, 7, 8}, {2, 6}, {1, 3, 4}]) == (1, 2, 1, 1, 3, 2, 3, 3)

    @pytest.mark.parametrize(
        "blocks, expected",
        [([{1}], (1,)), ([{1}, {2}, {3}], (1, 2, 3)), ([{1, 2, 3}], (1, 1, 1))],
    )
    def test_trivial(self, blocks, expected):
        assert from_blocks(blocks) == expected
        assert to_blocks(expected) == tuple(tuple(sorted(b)) for b in blocks)

    @pytest.mark.parametrize(
        "blocks", [[{1, 2}, {2, 3}], [{1}, {3}], [{1}, set()], []]
    )
    def test_malformed(self, blocks):
        with pytest.raises(ValueError):
            from_blocks(blocks)

    def test_round_trip_exhaustive(self):
        for n in range(1, 9):
            for p in enumerate_partitions(n):
                assert from_blocks(to_blocks(p)) == p


class TestValidation:
    @pytest.mark.parametrize("bad", [(), (2,), (1, 3), (0, 1), (1, 2, 4)])
    def test_rejects(self, bad):
        with pytest.raises(ValueError):
            rgf(bad)

    def test_size_cap(self):
        rgf([1] * 64)
        with pytest.raises(ValueError):
            rgf([1] * 65)
        with pytest.raises(ValueError):
            next(enumerate_partitions(65))

    def test_literals(self):
        assert parse_rgf("12113233") == (1, 2, 1, 1, 3, 2, 3, 3)
        big = tuple(range(1, 12))
        assert parse_rgf(format_rgf(big)) == big
        assert format_rgf(big) == "1,2,3,4,5,6,7,8,9,10,11"
        with pytest.raises(ValueError, match="13"):
            parse_rgf("13")


class TestEnumeration:
    def test_small(self):
        assert list(enumerate_partitions(1)) == [(1,)]
        assert list(enumerate_partitions(3)) == [
            (1, 1, 1), (1, 1, 2), (1, 2, 1), (1, 2, 2), (1, 2, 3)
        ]

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            list(enumerate_partitions(0))

    @pytest.mark.parametrize("n", range(1, 7))
    def test_matches_brute_force_in_order(self, n):
        assert list(enumerate_partitions(n)) == all_rgfs_brute(n)

    def test_bell_triangle_against_stirling(self):
        assert bell_numbers(15) == bell_by_stirling(15)

    def test_counts(self):
        bells = bell_numbers(10)
        for n in range(1, 11):
            assert sum(1 for _ in enumerate_partitions(n)) == bells[n]
        assert bells[10] == 115975


class TestContains:
    def test_examples(self):
        assert contains((1, 2, 1, 1, 3, 2, 3, 3), (1, 2, 1))
        assert not contains((1, 2, 3), (1, 2, 1, 2))

    @given(rgfs())
    def test_reflexive(self, p):
        assert contains(p, p)

    @settings(max_examples=300)
    @given(rgfs(7), rgfs(4))
    def test_matches_brute_force(self, sigma, pi):
        assert contains(sigma, pi) == contains_brute(sigma, pi)

    def test_exhaustive_against_brute_force(self):
        patterns = [p for k in range(1, 5) for p in enumerate_partitions(k)]
        for host in enumerate_partitions(6):
            for pi in patterns:
                assert contains(host, pi) == contains_brute(host, pi), (host, pi)

    @settings(max_examples=200)
    @given(rgfs(7), rgfs(5), rgfs(3))
    def test_transitive(self, a, b, c):
        if contains(a, b) and contains(b, c):
            assert contains(a, c)

    @given(rgfs(6), rgfs(8))
    def test_longer_pattern_never_contained(self, sigma, pi):
        if len(pi) > len(sigma):
            assert not contains(sigma, pi)


class TestAvoiders:
    @pytest.mark.parametrize("pattern", [(1, 2, 3), (1, 2, 2), (1, 2, 1), (1, 1, 2)])
    def test_size_three_patterns(self, pattern):
        for n in range(1, 11):
            assert count_avoiders(n, [pattern]) == 2 ** (n - 1)

    def test_123_avoiders_have_two_blocks(self):
        for n in range(1, 8):
            assert avoiders(n, [(1, 2, 3)]) == [p for p in enumerate_partitions(n) if max(p) <= 2]

    def test_122_avoiders_have_singleton_blocks_outside_the_first(self):
        for n in range(1, 8):
            expected = [
                p for p in enumerate_partitions(n)
                if all(len(b) == 1 for b in to_blocks(p)[1:])
            ]
            assert avoiders(n, [(1, 2, 2)]) == expected

    def test_needs_a_pattern(self):
        with pytest.raises(ValueError):
            count_avoiders(3, [])

    def test_pattern_set_order_irrelevant(self):
        assert count_avoiders(7, [(1, 2, 1), (1, 1, 2, 2)]) == count_avoiders(
            7, [(1, 1, 2, 2), (1, 2, 1)]
        )


class TestTau:
    def test_tau_121(self):
        assert tau_121((2, 1, 2)) == (1, 1, 2, 3, 3)
        assert tau_121((1,)) == (1,)
        assert tau_121((5,)) == (1,) * 5

    def test_tau_121_is_the_unique_121_avoider_with_its_block_sizes(self):
        hosts = [p for p in enumerate_partitions(5) if sorted(map(len, to_blocks(p))) == [1, 2, 2]]
        matches = [p for p in hosts if tuple(map(len, to_blocks(p))) == (2, 1, 2)]
        assert [p for p in matches if not contains(p, (1, 2, 1))] == [(1, 1, 2, 3, 3)]

    def test_tau_112(self):
        assert tau_112((2, 1)) == (1, 2, 1)
        assert tau_112((1, 1, 1)) == (1, 2, 3)
        assert tau_112((3, 2)) == (1, 2, 2, 1, 1)
        assert tau_112((3,)) == (1, 1, 1)

    @pytest.mark.parametrize("n", range(1, 11))
    def test_bijections_onto_avoiders(self, n):
        comps = compositions_of(n)
        for tau, pattern in ((tau_121, (1, 2, 1)), (tau_112, (1, 1, 2))):
            image = [tau(a) for a in comps]
            assert len(set(image)) == len(comps) == 2 ** (n - 1)
            assert sorted(image) == avoiders(n, [pattern])

    def test_avoidance_for_all_compositions(self):
        for k in range(1, 9):
            for a in compositions_of(k):
                assert not contains(tau_121(a), (1, 2, 1))
                assert not contains(tau_112(a), (1, 1, 2))
                assert max(tau_121(a)) == len(a)
                assert tuple(map(len, to_blocks(tau_121(a)))) == a

    def test_pair_avoiders_match_dominance_counts(self):
        for w in range(1, 7):
            for a in compositions_of(w):
                for n in range(1, 11):
                    d = count_dominating(n, a)
                    assert count_avoiders(n, [(1, 2, 1), tau_121(a)]) == 2 ** (n - 1) - d
                    assert count_avoiders(n, [(1, 1, 2), tau_112(a)]) == 2 ** (n - 1) - d


def test_concurrent_calls_agree():
    from concurrent.futures import ThreadPoolExecutor

    jobs = list(itertools.product(range(1, 9), [(1, 2, 3), (1, 2, 1, 2)]))
    with ThreadPoolExecutor(4) as pool:
        got = list(pool.map(lambda job: count_avoiders(job[0], [job[1]]), jobs))
    assert got == [count_avoiders(n, [p]) for n, p in jobs]
