import random

import pytest

from broomdist import (
    SplitGraphSpec,
    bfs_distance,
    broom_count,
    brute_min_objective,
    derive_sets,
    enumerate_brooms,
    iter_brooms,
    random_broom,
)
from broomdist.errors import SpecMismatchError, TooLargeError

from conftest import make_broom, reversal_pair


class TestBroomCount:
    @pytest.mark.parametrize(
        "p,q,expected", [(1, 3, 16), (2, 0, 2), (2, 4, 522), (1, 5, 326), (3, 3, 636)]
    )
    def test_known_counts(self, p, q, expected):
        assert broom_count(SplitGraphSpec(p, q)) == expected

    @pytest.mark.parametrize("p", [1, 2, 3, 4])
    @pytest.mark.parametrize("q", [0, 1, 2, 3, 4, 5])
    def test_formula_matches_enumeration(self, p, q):
        spec = SplitGraphSpec(p, q)
        seen = set()
        total = 0
        for b in iter_brooms(spec):
            b.check()
            seen.add(b)
            total += 1
        assert total == broom_count(spec)
        assert len(seen) == total  # no duplicates


class TestEnumerate:
    def test_deterministic_order(self):
        spec = SplitGraphSpec(2, 2)
        assert enumerate_brooms(spec).brooms == enumerate_brooms(spec).brooms

    def test_cap(self):
        with pytest.raises(TooLargeError):
            enumerate_brooms(SplitGraphSpec(3, 3), cap=100)

    def test_index_round_trip(self):
        idx = enumerate_brooms(SplitGraphSpec(1, 3))
        for i, b in enumerate(idx.brooms):
            assert idx.index[b] == i


class TestBfs:
    def test_zero_distance(self):
        b = make_broom(1, 2, ["q1", "p1"], ["q2"])
        assert bfs_distance(b, b) == 0

    def test_reversal_q3(self):
        assert bfs_distance(*reversal_pair(3)) == 3

    def test_permutohedron_reversal_p3(self):
        t1 = make_broom(3, 0, ["p1", "p2", "p3"])
        t2 = make_broom(3, 0, ["p3", "p2", "p1"])
        assert bfs_distance(t1, t2) == 3

    def test_spec_mismatch(self):
        with pytest.raises(SpecMismatchError):
            bfs_distance(make_broom(1, 1, ["q1", "p1"]), make_broom(2, 0, ["p1", "p2"]))

    def test_cap(self):
        t1, t2 = reversal_pair(9)
        with pytest.raises(TooLargeError):
            bfs_distance(t1, t2, cap=1000)

    @pytest.mark.parametrize("p,q", [(1, 3), (2, 2), (3, 0), (2, 3)])
    def test_flip_graph_connected_and_regular(self, p, q):
        spec = SplitGraphSpec(p, q)
        idx = enumerate_brooms(spec)
        adj = idx.adjacency()
        assert all(len(nbs) == spec.n - 1 for nbs in adj)
        dist = idx.bfs_from(0)
        assert all(d >= 0 for d in dist)

    @pytest.mark.parametrize("q,diameter", [(1, 1), (2, 2), (3, 4), (4, 7), (5, 10)])
    def test_stellohedron_diameter_and_reversal_distance(self, q, diameter):
        # The reversal pair always costs min(q(q-1)/2, 2q), but for q <= 4 it
        # is not extremal: mixed pairs such as (1) vs (2,3,1) cost one more.
        spec = SplitGraphSpec(1, q)
        idx = enumerate_brooms(spec)
        assert max(max(idx.bfs_from(i)) for i in range(len(idx.brooms))) == diameter
        assert bfs_distance(*reversal_pair(q)) == min(q * (q - 1) // 2, 2 * q)


class TestBruteMin:
    def test_reversal_q3(self):
        sets = derive_sets(*reversal_pair(3))
        best, witness, monotone = brute_min_objective(sets)
        assert best == 3
        assert set(witness.values()) == {0}
        assert monotone

    def test_reversal_q6(self):
        sets = derive_sets(*reversal_pair(6))
        best, witness, monotone = brute_min_objective(sets)
        assert best == 12
        assert set(witness.values()) == {1}
        assert monotone

    def test_identical_brooms(self):
        b = make_broom(2, 2, ["q1", "q2", "p1", "p2"])
        sets = derive_sets(b, b)
        best, witness, monotone = brute_min_objective(sets)
        assert best == 0
        assert all(v == 0 for v in witness.values())
        assert monotone

    def test_cap(self):
        t1, t2 = reversal_pair(9)
        with pytest.raises(TooLargeError):
            brute_min_objective(derive_sets(t1, t2), cap_bits=8)

    def test_empty_shared_set(self):
        t1 = make_broom(2, 1, ["q1", "p1", "p2"])
        t2 = make_broom(2, 1, ["p2", "p1"], ["q1"])
        best, witness, monotone = brute_min_objective(derive_sets(t1, t2))
        assert (best, witness, monotone) == (3, {}, True)


class TestRandomBroom:
    def test_deterministic_for_a_seed(self):
        spec = SplitGraphSpec(3, 4)
        a = [random_broom(spec, random.Random(99)) for _ in range(10)]
        b = [random_broom(spec, random.Random(99)) for _ in range(10)]
        assert a == b

    def test_samples_are_valid(self):
        rng = random.Random(1)
        for _ in range(200):
            spec = SplitGraphSpec(rng.randint(1, 4), rng.randint(0, 5))
            random_broom(spec, rng).check()

    def test_roughly_uniform_over_all_brooms(self):
        # 16 brooms for (1,3); 3200 seeded draws, expectation 200 per broom
        spec = SplitGraphSpec(1, 3)
        rng = random.Random(31337)
        counts = {}
        for _ in range(3200):
            b = random_broom(spec, rng)
            counts[b] = counts.get(b, 0) + 1
        assert len(counts) == 16
        assert min(counts.values()) > 120
        assert max(counts.values()) < 300
