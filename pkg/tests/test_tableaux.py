import pytest

from redwords import (
    DomainError,
    column_reading_word,
    eg,
    halve_entries,
    hook_length_count,
    is_increasing,
    is_standard,
    shape_of,
    staircase,
    swap_labels,
)

from oracles import all_increasing_tableaux, all_partitions, all_standard_tableaux, brute_standard_fillings

P7 = ((1, 2, 4), (2, 3), (3,), (4,))
Q7 = ((1, 3, 7), (2, 6), (4,), (5,))


class TestShapeOf:
    def test_single_cell(self):
        assert shape_of(((1,),)) == (1,)

    def test_recording_tableau(self):
        assert shape_of(Q7) == (3, 2, 1, 1)

    def test_insertion_tableau(self):
        assert shape_of(P7) == (3, 2, 1, 1)

    def test_rejects_increasing_row_lengths(self):
        with pytest.raises(DomainError):
            shape_of(((1,), (2, 3)))


class TestIsStandard:
    def test_recording_tableau(self):
        assert is_standard(Q7)

    def test_insertion_tableau_repeats(self):
        assert not is_standard(P7)

    def test_single_cell(self):
        assert is_standard(((1,),))

    def test_exhaustive_against_definition(self):
        for t in all_increasing_tableaux(5, 5):
            n = sum(len(r) for r in t)
            expected = sorted(x for row in t for x in row) == list(range(1, n + 1))
            assert is_standard(t) == expected


class TestIsIncreasing:
    def test_insertion_tableau(self):
        assert is_increasing(P7)

    def test_repeat_in_row(self):
        assert not is_increasing(((1, 1),))

    def test_repeat_in_column(self):
        assert not is_increasing(((2,), (2,)))


class TestHookLengthCount:
    def test_single_cell(self):
        assert hook_length_count((1,)) == 1

    def test_two_one(self):
        assert hook_length_count((2, 1)) == 2

    def test_staircase_of_four(self):
        assert hook_length_count((3, 2, 1)) == 16

    def test_matches_brute_force_up_to_eight_cells(self):
        for shape in all_partitions(8):
            assert hook_length_count(shape) == brute_standard_fillings(shape), shape

    def test_rejects_non_partition(self):
        with pytest.raises(DomainError):
            hook_length_count((1, 2))


class TestSwapLabels:
    def test_small(self):
        assert swap_labels(((1, 2), (3,)), 0, 1) == ((1, 3), (2,))

    def test_out_of_range(self):
        with pytest.raises(DomainError):
            swap_labels(((1,),), 0, 5)

    def test_recording_tableau(self):
        # N = 7: swaps the entries 6 and 5
        assert swap_labels(Q7, 1, 2) == ((1, 3, 7), (2, 5), (4,), (6,))

    def test_involution(self):
        for shape in [(2, 1), (3, 1), (2, 2), (3, 2, 1)]:
            for t in all_standard_tableaux(shape):
                for i in range(3):
                    for j in range(3):
                        assert swap_labels(swap_labels(t, i, j), i, j) == t


class TestColumnReadingWord:
    def test_single_cell(self):
        assert column_reading_word(((1,),)) == (1,)

    def test_insertion_tableau(self):
        w = column_reading_word(P7)
        assert w == (4, 2, 3, 1, 2, 3, 4)
        assert eg(w).p == P7  # the column word re-inserts to the same tableau

    def test_two_rows(self):
        assert column_reading_word(((1, 2), (2,))) == (2, 1, 2)

    def test_empty(self):
        assert column_reading_word(()) == ()


class TestStaircase:
    def test_two(self):
        assert staircase(2) == (1,)

    def test_four(self):
        assert staircase(4) == (3, 2, 1)

    def test_five(self):
        assert staircase(5) == (4, 3, 2, 1)

    def test_rejects_small(self):
        with pytest.raises(DomainError):
            staircase(1)


def consecutive_columns(t):
    cols = []
    if t:
        for c in range(len(t[0])):
            cols.append([row[c] for row in t if len(row) > c])
    return all(col == list(range(col[0], col[0] + len(col))) for col in cols)


def test_column_word_reinserts_to_the_same_tableau():
    # for every strict tableau with <= 8 cells over {1..5}: P(column word) is the
    # tableau back, and the recording tableau has consecutive entries per column
    for t in all_increasing_tableaux(8, 5):
        result = eg(column_reading_word(t))
        assert result.p == t
        assert consecutive_columns(result.q)


class TestHalveEntries:
    def test_odd_entries(self):
        assert halve_entries(((1, 5), (3,))) == ((1, 3), (2,))

    def test_rejects_even(self):
        with pytest.raises(DomainError):
            halve_entries(((2,),))
