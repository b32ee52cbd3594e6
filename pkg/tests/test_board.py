from __future__ import annotations

import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from toruspin import board as board_mod
from toruspin.board import (
    BoardSpec,
    UnknownSymbolError,
    aligned_pair_at,
    alignment_map,
    color_2x5,
    default_3x3,
    identity_state,
    move_cursor,
    shuffle,
    torus_wrap,
    visible_subset,
)

from conftest import oracle_alignment, random_state


class TestTorusWrap:
    def test_in_range_is_identity(self):
        assert torus_wrap((2, 1), (3, 3)) == (2, 1)

    def test_positive_wrap(self):
        assert torus_wrap((3, 1), (3, 3)) == (0, 1)

    def test_negative_wrap(self):
        assert torus_wrap((-1, -1), (3, 3)) == (2, 2)

    @given(
        st.tuples(st.integers(-100, 100), st.integers(-100, 100)),
        st.tuples(st.integers(1, 12), st.integers(1, 12)),
    )
    def test_canonical(self, pos, dims):
        r, c = torus_wrap(pos, dims)
        assert 0 <= r < dims[0] and 0 <= c < dims[1]
        assert (r - pos[0]) % dims[0] == 0
        assert (c - pos[1]) % dims[1] == 0


class TestMoveCursor:
    def test_simple_move(self, spec3x3):
        s = identity_state(spec3x3)
        assert move_cursor(s, (1, 2)).offset == (1, 2)

    def test_wraps(self, spec3x3):
        s = move_cursor(identity_state(spec3x3), (2, 2))
        assert move_cursor(s, (1, 1)).offset == (0, 0)

    def test_full_period_is_identity(self, spec3x3):
        s = random_state(spec3x3, random.Random(5))
        for a, b in [(1, 1), (2, -1), (0, 3)]:
            moved = move_cursor(s, (3 * a, 3 * b))
            assert moved == s

    def test_only_offset_changes(self, spec3x3):
        s = random_state(spec3x3, random.Random(9))
        moved = move_cursor(s, (1, 0))
        assert moved.fixed_perm == s.fixed_perm
        assert moved.cursor_perm == s.cursor_perm
        assert moved.pointer_origin == s.pointer_origin

    @given(
        st.tuples(st.integers(-9, 9), st.integers(-9, 9)),
        st.tuples(st.integers(-9, 9), st.integers(-9, 9)),
    )
    def test_group_property(self, a, b):
        s = random_state(default_3x3(), random.Random(3))
        lhs = move_cursor(move_cursor(s, a), b)
        rhs = move_cursor(s, (a[0] + b[0], a[1] + b[1]))
        assert lhs == rhs


class TestAlignment:
    def test_identity_zero_offset(self, spec3x3):
        m = alignment_map(identity_state(spec3x3))
        assert m == dict(zip(spec3x3.fixed_symbols, spec3x3.cursor_symbols))

    def test_offset_01_matches_enumeration_oracle(self, spec3x3):
        # frozen from the cell-by-cell oracle: digit 3r+c maps to letter
        # at cell (r, (c-1) mod 3)
        s = move_cursor(identity_state(spec3x3), (0, 1))
        expected = {
            "1": "C", "2": "A", "3": "B",
            "4": "F", "5": "D", "6": "E",
            "7": "I", "8": "G", "9": "H",
        }
        assert alignment_map(s) == expected
        assert oracle_alignment(s) == expected

    def test_matches_oracle_on_random_states(self, spec3x3, spec2x5):
        rng = random.Random(11)
        for spec in (spec3x3, spec2x5):
            for _ in range(50):
                s = move_cursor(
                    random_state(spec, rng),
                    (rng.randrange(spec.rows), rng.randrange(spec.cols)),
                )
                assert alignment_map(s) == oracle_alignment(s)

    def test_bijection_all_offsets_random_shuffles(self, spec3x3, spec2x5):
        rng = random.Random(2)
        for spec in (spec3x3, spec2x5):
            for _ in range(100):
                base = random_state(spec, rng)
                for dr in range(spec.rows):
                    for dc in range(spec.cols):
                        m = alignment_map(move_cursor(base, (dr, dc)))
                        assert sorted(m.keys()) == sorted(spec.fixed_symbols)
                        assert sorted(m.values()) == sorted(spec.cursor_symbols)

    def test_conjugation_invariance(self, spec3x3):
        # relabeling cells of both boards the same way leaves the
        # symbol-level map unchanged
        rng = random.Random(4)
        s = random_state(spec3x3, rng)
        relabel = list(range(9))
        rng.shuffle(relabel)
        # conjugation must act on cell positions, which only commutes with
        # the torus translation at zero offset
        s = move_cursor(s, (-s.offset[0], -s.offset[1]))
        fixed = tuple(s.fixed_perm[relabel[i]] for i in range(9))
        cursor = tuple(s.cursor_perm[relabel[i]] for i in range(9))
        t = board_mod.BoardState(spec3x3, fixed, cursor, (0, 0), s.pointer_origin)
        assert alignment_map(t) == alignment_map(s)

    def test_offset_multiset_covers_each_pair_once(self, spec3x3):
        # over the 9 canonical offsets, each (fixed, cursor) pair is aligned
        # exactly as many times as there are offsets mapping their cells: one
        base = random_state(spec3x3, random.Random(8))
        seen: dict[tuple[str, str], int] = {}
        for dr in range(3):
            for dc in range(3):
                for pair in alignment_map(move_cursor(base, (dr, dc))).items():
                    seen[pair] = seen.get(pair, 0) + 1
        assert len(seen) == 81
        assert all(v == 1 for v in seen.values())

    def test_aligned_pair_at(self, spec3x3):
        s = identity_state(spec3x3)
        assert aligned_pair_at(s, "5") == ("5", "E")
        shifted = move_cursor(s, (0, 1))
        assert aligned_pair_at(shifted, "2") == ("2", "A")
        with pytest.raises(UnknownSymbolError):
            aligned_pair_at(s, "X")


class TestShuffle:
    def test_same_seed_same_state(self, spec3x3):
        s = identity_state(spec3x3)
        assert shuffle(s, 123) == shuffle(s, 123)

    def test_changes_only_perms_offset_origin(self, spec3x3):
        s = shuffle(identity_state(spec3x3), 7)
        assert s.spec == spec3x3
        assert s.offset == (0, 0)
        assert sorted(s.fixed_perm) == list(range(9))
        assert sorted(s.cursor_perm) == list(range(9))

    def test_single_board_option(self, spec3x3):
        base = shuffle(identity_state(spec3x3), 1)
        only_cursor = shuffle(base, 2, shuffle_fixed=False)
        assert only_cursor.fixed_perm == base.fixed_perm
        only_fixed = shuffle(base, 2, shuffle_cursor=False)
        assert only_fixed.cursor_perm == base.cursor_perm

    def test_uniformity_smoke(self, spec3x3):
        # small-sample placement frequencies; the full chi-square run lives
        # in the acceptance suite
        rng = random.Random(0)
        draws = 20_000
        counts = [[0] * 9 for _ in range(9)]
        s = identity_state(spec3x3)
        for _ in range(draws):
            s = shuffle(s, rng)
            for cell, sym in enumerate(s.fixed_perm):
                counts[sym][cell] += 1
        p = 1 / 9
        sigma = math.sqrt(p * (1 - p) / draws)
        for sym in range(9):
            for cell in range(9):
                assert abs(counts[sym][cell] / draws - p) < 4 * sigma

    def test_origin_covers_all_cells(self, spec3x3):
        rng = random.Random(3)
        s = identity_state(spec3x3)
        seen = set()
        for _ in range(500):
            s = shuffle(s, rng)
            seen.add(s.pointer_origin)
        assert seen == {(r, c) for r in range(3) for c in range(3)}


class TestVisibleSubset:
    def test_full_display(self, spec3x3):
        s = identity_state(spec3x3)
        assert visible_subset(s, "A", 9, 0) == frozenset(spec3x3.cursor_symbols)

    def test_l2_contains_correct_and_uniform_decoys(self, spec3x3):
        s = identity_state(spec3x3)
        rng = random.Random(1)
        draws = 10_000
        decoy_counts: dict[str, int] = {}
        for _ in range(draws):
            shown = visible_subset(s, "A", 2, rng)
            assert len(shown) == 2 and "A" in shown
            (decoy,) = shown - {"A"}
            decoy_counts[decoy] = decoy_counts.get(decoy, 0) + 1
        p = 1 / 8
        sigma = math.sqrt(p * (1 - p) / draws)
        for sym in spec3x3.cursor_symbols:
            if sym == "A":
                continue
            assert abs(decoy_counts.get(sym, 0) / draws - p) < 4 * sigma

    def test_l_out_of_range(self, spec3x3):
        s = identity_state(spec3x3)
        with pytest.raises(ValueError):
            visible_subset(s, "A", 1, 0)
        with pytest.raises(ValueError):
            visible_subset(s, "A", 10, 0)

    def test_deterministic_under_seed(self, spec3x3):
        s = identity_state(spec3x3)
        assert visible_subset(s, "B", 4, 99) == visible_subset(s, "B", 4, 99)


class TestSpec:
    def test_spec_validation(self):
        with pytest.raises(ValueError):
            BoardSpec(1, 1, ("a",), ("b",))
        with pytest.raises(ValueError):
            BoardSpec(3, 3, tuple("123456789"), tuple("AABCDEFGH"))

    def test_1d_layout_allowed(self):
        spec = BoardSpec(1, 9, tuple("123456789"), tuple("ABCDEFGHI"))
        assert spec.n == 9

    def test_json_round_trip(self, spec2x5):
        assert BoardSpec.from_json(spec2x5.to_json()) == spec2x5

    def test_color_board_layout(self, spec2x5):
        assert spec2x5.fixed_symbols == ("1", "2", "3", "4", "5", "6", "7", "8", "9", "0")
        assert spec2x5.cursor_symbols[0] == "BLACK"
        assert spec2x5.cursor_symbols[-1] == "GRAY"
