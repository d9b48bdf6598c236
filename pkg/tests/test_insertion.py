import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from redwords import (
    CKMove,
    DomainError,
    NotReducedError,
    apply_ck,
    ck_class,
    ck_moves_at,
    eg,
    eg_insert_letter,
    eg_intermediates,
    enumerate_reduced_words,
    inversion_count,
    is_increasing,
    is_reduced,
    is_standard,
    perm_from_word,
    tau,
)

words = st.lists(st.integers(1, 5), max_size=8).map(tuple)

WORD7 = (4, 2, 1, 2, 3, 2, 4)

# the full insertion history of the seven-letter worked example
INTERMEDIATES7 = (
    (((4,),), ((1,),)),
    (((2,), (4,)), ((1,), (2,))),
    (((2, 3), (4,)), ((1, 3), (2,))),
    (((2, 3), (3,), (4,)), ((1, 3), (2,), (4,))),
    (((1, 3), (2,), (3,), (4,)), ((1, 3), (2,), (4,), (5,))),
    (((1, 2), (2, 3), (3,), (4,)), ((1, 3), (2, 6), (4,), (5,))),
    (((1, 2, 4), (2, 3), (3,), (4,)), ((1, 3, 7), (2, 6), (4,), (5,))),
)


class TestInsertLetter:
    def test_special_bump(self):
        t, box = eg_insert_letter(((1, 3), (2,), (3,), (4,)), 2)
        assert t == ((1, 2), (2, 3), (3,), (4,))
        assert box == (2, 2)

    def test_append(self):
        t, box = eg_insert_letter(((1, 2), (2, 3), (3,), (4,)), 4)
        assert t == ((1, 2, 4), (2, 3), (3,), (4,))
        assert box == (1, 3)

    def test_into_empty(self):
        assert eg_insert_letter((), 5) == (((5,),), (1, 1))

    def test_no_special_bump_in_first_column(self):
        # the leading cell has no left neighbour, so x, x+1 at the row start
        # still replaces rather than bumping specially
        t, box = eg_insert_letter(((2, 3), (3,), (4,)), 1)
        assert t == ((1, 3), (2,), (3,), (4,))
        assert box == (4, 1)


class TestEg:
    def test_seven_letter_word(self):
        r = eg(WORD7)
        assert r.p == INTERMEDIATES7[-1][0]
        assert r.q == INTERMEDIATES7[-1][1]

    def test_all_intermediates(self):
        assert eg_intermediates(WORD7) == INTERMEDIATES7

    def test_empty(self):
        r = eg(())
        assert r.p == () and r.q == () and r.steps == ()

    def test_braid(self):
        r = eg((1, 2, 1))
        assert r.p == ((1, 2), (2,))
        assert r.q == ((1, 2), (3,))

    def test_accepts_non_reduced_words(self):
        r = eg((1, 1))
        assert r.q == ((1, 2),)
        assert not is_increasing(r.p)

    @given(words)
    def test_one_box_per_letter(self, w):
        r = eg(w)
        assert sum(len(row) for row in r.p) == len(w)
        # p and q grow in lockstep, one box per inserted letter
        assert [len(row) for row in r.p] == [len(row) for row in r.q]
        assert sorted(x for row in r.q for x in row) == list(range(1, len(w) + 1))
        sizes = [sum(len(row) for row in p) for p, _ in eg_intermediates(w)]
        assert sizes == list(range(1, len(w) + 1))

    def test_non_reduced_words_can_outgrow_the_partition_profile(self):
        # repeated special bumps pile entries into row 2; the standardness and
        # shape guarantees only hold for reduced words
        r = eg((1, 1, 1, 2, 1))
        assert r.p == ((1, 2), (2, 2, 2))
        assert r.q == ((1, 2), (3, 4, 5))

    def test_increasing_p_for_reduced_words_up_to_length_eight(self):
        # every reduced word on the alphabet {1..5} of length <= 8
        for perm in itertools.permutations(range(1, 7)):
            if inversion_count(perm) > 8:
                continue
            for w in enumerate_reduced_words(perm):
                r = eg(w)
                assert is_increasing(r.p)
                assert is_standard(r.q)


class TestTau:
    def test_single_letter(self):
        assert tau((1,)) == (1,)

    def test_seven_letter_word(self):
        t = tau(WORD7)
        assert t == (4, 2, 3, 1, 2, 3, 4)
        assert eg(t).p == eg(WORD7).p
        assert is_reduced(t)

    def test_fixed_point(self):
        assert tau((2, 1, 2)) == (2, 1, 2)

    def test_rejects_non_reduced(self):
        with pytest.raises(NotReducedError):
            tau((1, 1))

    def test_tau_preserves_p_and_q_columns_are_consecutive(self):
        for perm in itertools.permutations(range(1, 6)):
            for w in enumerate_reduced_words(perm):
                t = tau(w)
                r = eg(t)
                assert r.p == eg(w).p
                cols = [
                    [row[c] for row in r.q if len(row) > c]
                    for c in range(len(r.q[0]) if r.q else 0)
                ]
                for col in cols:
                    assert col == list(range(col[0], col[0] + len(col)))


class TestCkMoves:
    def test_braid_pattern(self):
        assert ck_moves_at((1, 2, 1), 1) == [CKMove(1, "type3", "forward")]

    def test_acb_pattern(self):
        assert ck_moves_at((1, 3, 2), 1) == [CKMove(1, "type1", "forward")]

    def test_repeats_match_nothing(self):
        assert ck_moves_at((2, 2, 3), 1) == []

    def test_out_of_range(self):
        with pytest.raises(DomainError):
            ck_moves_at((1, 2, 1), 2)

    def test_at_most_one_move_per_window(self):
        for triple in itertools.product(range(1, 5), repeat=3):
            assert len(ck_moves_at(triple, 1)) <= 1


class TestApplyCk:
    def test_braid(self):
        assert apply_ck((1, 2, 1), CKMove(1, "type3", "forward")) == (2, 1, 2)

    def test_acb_to_cab(self):
        assert apply_ck((1, 3, 2), CKMove(1, "type1", "forward")) == (3, 1, 2)

    def test_preserves_permutation(self):
        for pos in range(1, len(WORD7) - 1):
            for move in ck_moves_at(WORD7, pos):
                assert perm_from_word(apply_ck(WORD7, move)) == (3, 5, 2, 4, 1)

    def test_rejects_inapplicable(self):
        with pytest.raises(DomainError):
            apply_ck((1, 2, 1), CKMove(1, "type1", "forward"))

    def test_every_move_is_undone_by_its_partner(self):
        for perm in itertools.permutations(range(1, 5)):
            for w in enumerate_reduced_words(perm):
                for pos in range(1, len(w) - 1):
                    for move in ck_moves_at(w, pos):
                        v = apply_ck(w, move)
                        assert is_reduced(v)
                        back = ck_moves_at(v, pos)
                        assert len(back) == 1
                        assert apply_ck(v, back[0]) == w


class TestCkClass:
    def test_braid_class(self):
        # the type-3 move joins the two words, and indeed they share P: the
        # special bump fires on [1,2,1]'s final insertion
        assert eg((1, 2, 1)).p == eg((2, 1, 2)).p == ((1, 2), (2,))
        assert ck_class((1, 2, 1)) == {(1, 2, 1), (2, 1, 2)}

    def test_single_letter(self):
        assert ck_class((1,)) == {(1,)}

    def test_rejects_non_reduced(self):
        with pytest.raises(NotReducedError):
            ck_class((1, 1))

    @pytest.mark.parametrize("n", [4, 5])
    def test_classes_are_the_insertion_fibers(self, n):
        for perm in itertools.permutations(range(1, n + 1)):
            fibers = {}
            for w in enumerate_reduced_words(perm):
                fibers.setdefault(eg(w).p, set()).add(w)
            for members in fibers.values():
                assert ck_class(next(iter(members))) == members
