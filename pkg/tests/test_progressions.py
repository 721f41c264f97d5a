"""Progression families: membership, enumeration, monochromatic detection.

Frozen cases were cross-checked by hand against the definitions; the
randomized tests compare the fast paths against brute-force scans.
"""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ramseylab.progressions import (
    Coloring,
    Progression,
    ProgressionKind,
    enumerate_progressions,
    feasible_differences,
    find_monochromatic,
    find_monochromatic_ending_at,
    is_progression,
    progression_masks,
    progression_masks_by_last,
)

AP = ProgressionKind.arithmetic()


class TestKind:
    def test_parse_aliases(self):
        assert ProgressionKind.parse("ap", 0) == AP
        assert ProgressionKind.parse("arithmetic", 0) == AP
        assert ProgressionKind.parse("semi", 2) == ProgressionKind.semi(2)
        assert ProgressionKind.parse("quasi", 1) == ProgressionKind.quasi(1)

    def test_str_forms(self):
        assert str(AP) == "ap"
        assert str(ProgressionKind.semi(2)) == "semi(2)"
        assert str(ProgressionKind.quasi(1)) == "quasi(1)"

    def test_validation(self):
        with pytest.raises(ValueError):
            ProgressionKind.semi(0)
        with pytest.raises(ValueError):
            ProgressionKind.quasi(-1)
        with pytest.raises(ValueError):
            ProgressionKind("arithmetic", 3)

    def test_jump_sets(self):
        assert ProgressionKind.semi(3).jump_set(2) == (2, 4, 6)
        assert ProgressionKind.quasi(2).jump_set(3) == (3, 4, 5)
        assert AP.jump_set(4) == (4,)


class TestFeasibleDifferences:
    def test_arithmetic_triple(self):
        assert feasible_differences((1, 2, 3), AP) == {1}

    def test_arithmetic_rejects_uneven(self):
        assert feasible_differences((1, 2, 4), AP) == set()

    def test_semi_scope2(self):
        # jumps 1,1,2,1,1 all lie in {d,2d} for d=1
        assert feasible_differences((1, 2, 3, 5, 6, 7), ProgressionKind.semi(2)) == {1}

    def test_quasi_diameter1(self):
        assert feasible_differences((1, 2, 4), ProgressionKind.quasi(1)) == {1}

    def test_quasi_multiple_witness_differences(self):
        # jumps 2,3: any d with d <= 2 and 3 <= d+n works for n=2
        assert feasible_differences((1, 3, 6), ProgressionKind.quasi(2)) == {1, 2}

    def test_requires_increasing(self):
        with pytest.raises(ValueError):
            feasible_differences((3, 2, 1), AP)
        with pytest.raises(ValueError):
            feasible_differences((5,), AP)


class TestIsProgression:
    def test_examples(self):
        assert is_progression((1, 2, 3, 5, 6, 7), ProgressionKind.semi(2))
        assert not is_progression((1, 2, 3, 5, 6, 7), AP)
        assert is_progression((1, 2, 4), ProgressionKind.quasi(1))
        assert not is_progression((1, 2, 4), AP)

    def test_constant_tuple_not_increasing(self):
        assert not is_progression((5, 5, 5), AP)

    def test_single_term_vacuous(self):
        assert is_progression((4,), AP)

    @given(st.integers(1, 30), st.integers(1, 5), st.integers(2, 5))
    @settings(max_examples=60, deadline=None)
    def test_ap_is_semi_is_quasi(self, a, d, k):
        terms = tuple(a + i * d for i in range(k))
        assert is_progression(terms, AP)
        assert is_progression(terms, ProgressionKind.semi(1))
        assert is_progression(terms, ProgressionKind.quasi(0))
        # wider scope and diameter only admit more tuples
        assert is_progression(terms, ProgressionKind.semi(3))
        assert is_progression(terms, ProgressionKind.quasi(4))

    @given(st.lists(st.integers(1, 40), min_size=2, max_size=6, unique=True),
           st.integers(1, 3), st.integers(0, 3))
    @settings(max_examples=80, deadline=None)
    def test_monotone_in_param(self, elems, m, n):
        terms = tuple(sorted(elems))
        if is_progression(terms, ProgressionKind.semi(m)):
            assert is_progression(terms, ProgressionKind.semi(m + 1))
        if is_progression(terms, ProgressionKind.quasi(n)):
            assert is_progression(terms, ProgressionKind.quasi(n + 1))


class TestEnumerate:
    def test_quasi_example(self):
        got = {p.terms for p in enumerate_progressions(5, ProgressionKind.quasi(1), 3, 1, 1)}
        assert got == {(1, 2, 3), (1, 2, 4), (1, 3, 4), (1, 3, 5)}

    def test_ap_single(self):
        got = [p.terms for p in enumerate_progressions(9, AP, 3, 1, 4)]
        assert got == [(1, 5, 9)]

    def test_ap_out_of_range_empty(self):
        assert list(enumerate_progressions(5, AP, 3, 4, 1)) == []

    def test_semi_scope2_count(self):
        # start 1, d 1, k 3 in [1,6]: jumps from {1,2}, both fit
        got = {p.terms for p in enumerate_progressions(6, ProgressionKind.semi(2), 3, 1, 1)}
        assert got == {(1, 2, 3), (1, 2, 4), (1, 3, 4), (1, 3, 5)}

    @given(st.integers(2, 4), st.integers(1, 3), st.integers(1, 10), st.integers(1, 3),
           st.sampled_from(["ap", "semi", "quasi"]))
    @settings(max_examples=60, deadline=None)
    def test_outputs_are_valid(self, k, param, a, d, family):
        kind = ProgressionKind.parse(family, 0 if family == "ap" else param)
        N = 20
        for p in enumerate_progressions(N, kind, k, a, d):
            assert len(p.terms) == k
            assert p.terms[0] == a
            assert p.terms[-1] <= N
            assert is_progression(p.terms, kind)
            assert d in feasible_differences(p.terms, kind)

    def test_k1_yields_start_only(self):
        assert [p.terms for p in enumerate_progressions(5, AP, 1, 3, 1)] == [(3,)]


class TestMasks:
    def test_by_last_partitions_global(self):
        N, kind, k = 10, ProgressionKind.quasi(1), 3
        by_last = progression_masks_by_last(N, kind, k)
        flat = sorted(m for bucket in by_last for m in bucket)
        assert flat == sorted(set(flat))
        assert flat == progression_masks(N, kind, k)

    def test_bucket_index_matches_high_bit(self):
        by_last = progression_masks_by_last(12, ProgressionKind.semi(2), 3)
        for last in range(len(by_last)):
            for m in by_last[last]:
                assert m.bit_length() == last

    def test_mask_bits(self):
        p = Progression((1, 3, 5), AP, 2)
        assert p.mask() == 0b10101


class TestColoring:
    def test_string_round_trip(self):
        c = Coloring.from_string("0110")
        assert c.to_string() == "0110"
        assert c.n == 4
        assert [c.color_of(i) for i in (1, 2, 3, 4)] == [0, 1, 1, 0]

    def test_class_masks_complement(self):
        c = Coloring.from_string("01101")
        assert c.class_mask(0) | c.class_mask(1) == (1 << 5) - 1
        assert c.class_mask(0) & c.class_mask(1) == 0

    def test_from_index_matches_binary(self):
        # color-1 class read as an integer equals the index
        for idx in range(16):
            c = Coloring.from_index(4, idx)
            assert c.class_mask(1) == idx

    def test_rejects_bad_strings(self):
        with pytest.raises(ValueError):
            Coloring.from_string("012")


def _brute_find(c, kind, k):
    hits = []
    for terms in itertools.combinations(range(1, c.n + 1), k):
        if is_progression(terms, kind) and len({c.color_of(t) for t in terms}) == 1:
            hits.append(terms)
    return min(hits) if hits else None


class TestFindMonochromatic:
    def test_blocked_coloring_has_no_3ap(self):
        c = Coloring.from_string("00110011")
        assert find_monochromatic(c, AP, 3) is None

    def test_all_zero_hits(self):
        c = Coloring.from_string("000")
        got = find_monochromatic(c, AP, 3)
        assert got is not None and got.terms == (1, 2, 3)

    def test_quasi_sees_more(self):
        # 0110 0110: positions 1,4,5,8 are color 0; 1,4,5 is no 3-AP but
        # jumps (3,1) fit diameter 2 with d=1
        c = Coloring.from_string("01100110")
        assert find_monochromatic(c, AP, 3) is None
        assert find_monochromatic(c, ProgressionKind.quasi(2), 3) is not None

    @given(st.integers(0, 2**14 - 1), st.integers(3, 4),
           st.sampled_from([("ap", 0), ("semi", 2), ("quasi", 1)]))
    @settings(max_examples=120, deadline=None)
    def test_matches_brute_force(self, idx, k, fam):
        kind = ProgressionKind.parse(*fam)
        c = Coloring.from_index(14, idx)
        got = find_monochromatic(c, kind, k)
        want = _brute_find(c, kind, k)
        assert (got is None) == (want is None)
        if got is not None:
            assert is_progression(got.terms, kind)
            assert len({c.color_of(t) for t in got.terms}) == 1

    @given(st.integers(0, 2**12 - 1))
    @settings(max_examples=80, deadline=None)
    def test_incremental_agrees_at_last_position(self, idx):
        kind = ProgressionKind.quasi(1)
        c = Coloring.from_index(12, idx)
        # a hit ending at position `last` must be found by the incremental scan
        full = find_monochromatic(c, kind, 3)
        any_incr = any(
            find_monochromatic_ending_at(c, kind, 3, last) is not None
            for last in range(1, 13)
        )
        assert (full is not None) == any_incr
