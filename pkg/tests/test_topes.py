import numpy as np
import pytest

from cyclotope import (
    DimensionMismatch,
    DimensionTooSmall,
    EmptySetError,
    GroundSubset,
    Tope,
    interval_partition,
    negative_part,
    negpart_meet_join_cards,
    reorient,
    separation_set,
)


class TestTope:
    def test_construction_and_accessors(self):
        T = Tope([1, -1, 1])
        assert T.t == 3
        assert T.sign(1) == 1
        assert T.sign(2) == -1
        assert str(T) == "+-+"

    def test_rejects_bad_entries(self):
        with pytest.raises(ValueError):
            Tope([1, 0, 1])
        with pytest.raises(ValueError):
            Tope([2, 1, 1])

    def test_rejects_small_dimension(self):
        with pytest.raises(DimensionTooSmall):
            Tope([1, 1])

    def test_sign_index_bounds(self):
        T = Tope.positive(4)
        with pytest.raises(IndexError):
            T.sign(0)
        with pytest.raises(IndexError):
            T.sign(5)

    def test_from_string(self):
        assert Tope.from_string("++-+-") == Tope([1, 1, -1, 1, -1])
        with pytest.raises(ValueError):
            Tope.from_string("++x")

    def test_bitmask_roundtrip(self):
        for t in (3, 5, 8):
            for mask in range(1 << t):
                T = Tope.from_bitmask(mask, t)
                assert T.bitmask == mask

    def test_bitmask_wide(self):
        # masks beyond 64 bits must survive the round trip
        t = 70
        mask = (1 << 69) | (1 << 3) | 1
        T = Tope.from_bitmask(mask, t)
        assert T.bitmask == mask
        assert T.sign(1) == -1 and T.sign(4) == -1 and T.sign(70) == -1
        assert T.sign(2) == 1

    def test_negation_and_equality(self):
        T = Tope([1, -1, 1, 1])
        assert -(-T) == T
        assert -T == Tope([-1, 1, -1, -1])
        assert hash(T) == hash(Tope([1, -1, 1, 1]))

    def test_signs_are_read_only(self):
        T = Tope.positive(3)
        with pytest.raises(ValueError):
            T.signs[0] = -1


class TestGroundSubset:
    def test_basic(self):
        A = GroundSubset(5, [3, 1])
        assert A.members == (1, 3)
        assert 3 in A and 2 not in A
        assert len(A) == 2
        assert str(A) == "1,3"

    def test_empty_and_full(self):
        assert str(GroundSubset.empty(4)) == "none"
        assert GroundSubset.full(4).members == (1, 2, 3, 4)

    def test_from_string(self):
        assert GroundSubset.from_string(5, "2,3,5").members == (2, 3, 5)
        assert GroundSubset.from_string(5, "none").members == ()
        with pytest.raises(ValueError):
            GroundSubset.from_string(5, "2,x")

    def test_rejects_duplicates_and_range(self):
        with pytest.raises(ValueError):
            GroundSubset(4, [2, 2])
        with pytest.raises(ValueError):
            GroundSubset(4, [0])
        with pytest.raises(ValueError):
            GroundSubset(4, [5])

    def test_complement(self):
        A = GroundSubset(5, [1, 4])
        assert A.complement().members == (2, 3, 5)

    def test_boundary_count(self):
        assert GroundSubset(5, [1]).boundary_count == 1
        assert GroundSubset(5, [1, 5]).boundary_count == 2
        assert GroundSubset(5, [2, 3]).boundary_count == 0


class TestReorient:
    def test_empty_set_is_identity(self):
        T = Tope([1, 1, 1])
        assert reorient(T, GroundSubset.empty(3)) == T

    def test_full_set_negates(self):
        assert reorient(Tope.positive(3), GroundSubset.full(3)) == Tope.negative(3)

    def test_definition_instance(self):
        T = Tope([1, -1, 1, 1])
        assert reorient(T, GroundSubset(4, [2, 4])) == Tope([1, 1, 1, -1])

    def test_involution_exhaustive_small(self):
        for t in (3, 4, 5):
            for mask in range(1 << t):
                T = Tope.from_bitmask(mask, t)
                for amask in range(1 << t):
                    A = GroundSubset(t, [e + 1 for e in range(t) if amask >> e & 1])
                    assert reorient(reorient(T, A), A) == T


class TestNegativePart:
    def test_examples(self):
        assert negative_part(Tope.positive(6)).members == ()
        assert negative_part(Tope.negative(5)).members == (1, 2, 3, 4, 5)
        assert negative_part(Tope([1, -1, -1, 1, -1])).members == (2, 3, 5)

    def test_cardinality_identity(self):
        # |T^-| = (t - sum of entries) / 2
        for t in (3, 6, 10):
            for mask in range(1 << t):
                T = Tope.from_bitmask(mask, t)
                assert 2 * len(negative_part(T)) == t - int(T.signs.sum())


class TestSeparationSet:
    def test_examples(self):
        T = Tope([1, 1, -1])
        assert separation_set(T, T).members == ()
        assert separation_set(Tope.positive(4), Tope.negative(4)).members == (1, 2, 3, 4)
        assert separation_set(Tope([1, 1, -1]), Tope([1, -1, -1])).members == (2,)

    def test_matches_reorient(self):
        T = Tope([1, -1, 1, 1, -1])
        A = GroundSubset(5, [2, 5])
        assert separation_set(T, reorient(T, A)) == A

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            separation_set(Tope.positive(3), Tope.positive(4))

    def test_flip_reconstruction_identity(self):
        # T2 = T1 with entries on the separation set negated, entrywise
        for t in (3, 5):
            for m1 in range(1 << t):
                T1 = Tope.from_bitmask(m1, t)
                for m2 in range(1 << t):
                    T2 = Tope.from_bitmask(m2, t)
                    S = separation_set(T1, T2)
                    rebuilt = T1.signs.astype(np.int64).copy()
                    for s in S:
                        rebuilt[s - 1] -= 2 * T1.sign(s)
                    assert np.array_equal(rebuilt, T2.signs)


class TestIntervalPartition:
    def test_examples(self):
        p = interval_partition(GroundSubset(5, [1, 2, 4]))
        assert p.intervals == ((1, 2), (4, 4))
        assert p.rho == 2
        p = interval_partition(GroundSubset(5, [3]))
        assert p.intervals == ((3, 3),)
        assert p.rho == 1
        p = interval_partition(GroundSubset(9, [1, 2, 3, 5, 6, 9]))
        assert p.intervals == ((1, 3), (5, 6), (9, 9))
        assert p.rho == 3

    def test_empty_is_an_error(self):
        with pytest.raises(EmptySetError):
            interval_partition(GroundSubset.empty(4))

    def test_gaps_are_at_least_two(self):
        for t in (5, 7):
            for mask in range(1, 1 << t):
                A = GroundSubset(t, [e + 1 for e in range(t) if mask >> e & 1])
                ivs = interval_partition(A).intervals
                assert all(i <= j for i, j in ivs)
                for (_, j1), (i2, _) in zip(ivs, ivs[1:]):
                    assert i2 - j1 >= 2


class TestMeetJoinCards:
    def test_examples(self):
        negd = Tope.negative(4)
        assert negpart_meet_join_cards(negd, negd) == (4, 4)
        T2 = Tope([1, -1, -1, 1])
        assert negpart_meet_join_cards(Tope.positive(4), T2) == (0, 2)
        assert negpart_meet_join_cards(Tope([-1, 1, -1, 1]), Tope([-1, -1, 1, 1])) == (1, 3)

    def test_matches_direct_sets(self):
        for t in (3, 4, 5):
            for m1 in range(1 << t):
                T1 = Tope.from_bitmask(m1, t)
                n1 = set(negative_part(T1))
                for m2 in range(1 << t):
                    T2 = Tope.from_bitmask(m2, t)
                    n2 = set(negative_part(T2))
                    assert negpart_meet_join_cards(T1, T2) == (len(n1 & n2), len(n1 | n2))
