from collections import Counter
from itertools import permutations

import pytest

from schubcalc import (
    VIRTUAL,
    canonical,
    compatible_sequences,
    greedy_compatible,
    is_reduced,
    iter_reduced_words,
    length,
    permutation_of_word,
    reduced_words,
    run_decomposition,
    sequence_weight,
    shift,
    strong_descent_composition,
    weak_descent_composition,
)
from schubcalc.poly import flatten
from oracles import brute_compatible, brute_reduced_words, strip

S4 = [canonical(p) for p in permutations(range(1, 5))]
S5 = [canonical(p) for p in permutations(range(1, 6))]

# the eleven reduced words of 42153, frozen from brute-force enumeration
R42153 = {
    (4, 2, 1, 2, 3),
    (4, 1, 2, 1, 3),
    (4, 1, 2, 3, 1),
    (2, 4, 1, 2, 3),
    (2, 1, 4, 2, 3),
    (2, 1, 2, 4, 3),
    (1, 4, 2, 3, 1),
    (1, 2, 4, 3, 1),
    (1, 4, 2, 1, 3),
    (1, 2, 4, 1, 3),
    (1, 2, 1, 4, 3),
}


def test_permutation_of_word():
    assert permutation_of_word(()) == ()
    assert permutation_of_word((4, 2, 1, 2, 3)) == (4, 2, 1, 5, 3)
    assert permutation_of_word((1, 2, 1)) == (3, 2, 1)
    with pytest.raises(ValueError):
        permutation_of_word((0, 1))


def test_is_reduced():
    assert is_reduced(())
    assert is_reduced((4, 2, 1, 2, 3))
    assert not is_reduced((1, 1))
    assert not is_reduced((1, 2, 1, 2))


def test_reduced_words_identity_and_321():
    assert reduced_words(()) == ((),)
    assert set(reduced_words((3, 2, 1))) == {(1, 2, 1), (2, 1, 2)}
    assert set(reduced_words((3, 2, 1))) == brute_reduced_words((3, 2, 1))


def test_reduced_words_42153():
    words = reduced_words((4, 2, 1, 5, 3))
    assert len(words) == 11
    assert set(words) == R42153
    assert set(words) == brute_reduced_words((4, 2, 1, 5, 3))


def test_reduced_words_match_brute_force_on_s4():
    for w in S4:
        assert set(reduced_words(w)) == brute_reduced_words(w)


def test_reduced_words_sorted_and_reduced():
    for w in S5:
        words = reduced_words(w)
        assert list(words) == sorted(words)
        assert all(is_reduced(rho) and permutation_of_word(rho) == w for rho in words)


def test_iter_reduced_words_streams_the_same_set():
    for w in S4 + [(4, 2, 1, 5, 3)]:
        streamed = list(iter_reduced_words(w))
        assert len(streamed) == len(set(streamed))
        assert set(streamed) == set(reduced_words(w))


def test_word_count_is_shift_invariant_on_s4():
    for w in S4:
        n = len(reduced_words(w))
        for m in (1, 2, 3):
            shifted = reduced_words(shift(w, m))
            assert len(shifted) == n
            assert set(shifted) == {
                tuple(x + m for x in rho) for rho in reduced_words(w)
            }


def test_run_decomposition():
    assert run_decomposition(()) == ()
    assert run_decomposition((1, 2, 3)) == ((1, 2, 3),)
    assert run_decomposition((4, 2, 1, 2, 3)) == ((4,), (2,), (1, 2, 3))
    assert run_decomposition((5, 6, 3, 4, 5, 7, 3, 1, 4, 2, 3, 6)) == (
        (5, 6),
        (3, 4, 5, 7),
        (3,),
        (1, 4),
        (2, 3, 6),
    )


def test_runs_reassemble_and_break_at_weak_descents():
    for w in S5:
        for rho in reduced_words(w):
            runs = run_decomposition(rho)
            assert sum(runs, ()) == rho
            assert all(r[i] < r[i + 1] for r in runs for i in range(len(r) - 1))
            assert all(a[-1] >= b[0] for a, b in zip(runs, runs[1:]))


def test_strong_descent_composition():
    assert strong_descent_composition((4, 2, 1, 2, 3)) == (3, 1, 1)
    assert strong_descent_composition((1, 2, 3)) == (3,)
    # runs are (2 | 1,2,4 | 3), so the sizes read right to left are 1,3,1
    assert strong_descent_composition((2, 1, 2, 4, 3)) == (1, 3, 1)


def test_weak_descent_composition_examples():
    assert weak_descent_composition((4, 2, 1, 2, 3)) == (3, 1, 0, 1)
    assert weak_descent_composition((2, 4, 1, 2, 3)) == (3, 2)
    assert weak_descent_composition(()) == ()
    assert (
        weak_descent_composition((6, 7, 4, 5, 6, 8, 4, 2, 5, 3, 4, 7))
        == (3, 2, 1, 4, 0, 2)
    )
    assert weak_descent_composition((5, 6, 3, 4, 5, 7, 3, 1, 4, 2, 3, 6)) is VIRTUAL


def test_flat_of_weak_equals_strong_on_s5():
    for w in S5:
        for rho in reduced_words(w):
            des = weak_descent_composition(rho)
            if des is VIRTUAL:
                continue
            assert flatten(des) == strong_descent_composition(rho)


def test_weak_descent_composition_of_shifted_word_on_s4():
    for w in S4:
        for rho in reduced_words(w):
            des = weak_descent_composition(rho)
            if des is VIRTUAL:
                continue
            for m in (1, 2, 3):
                lifted = tuple(x + m for x in rho)
                # compositions are compared with trailing zeros stripped, which
                # only matters for the identity's empty word
                assert weak_descent_composition(lifted) == strip((0,) * m + des)


def test_compatible_sequences_examples():
    assert compatible_sequences((4, 2, 1, 2, 3)) == ((1, 1, 1, 2, 3), (1, 1, 1, 2, 4))
    assert compatible_sequences((2, 4, 1, 2, 3)) == ((1, 1, 1, 2, 2),)
    assert compatible_sequences((1, 4, 2, 3, 1)) == ()
    assert compatible_sequences(()) == ((),)
    # of the eleven words of 42153, only the two above have any sequences
    assert sum(bool(compatible_sequences(rho)) for rho in R42153) == 2


def test_compatible_sequences_match_brute_force():
    for w in S4:
        for rho in reduced_words(w):
            assert set(compatible_sequences(rho)) == brute_compatible(rho)


def test_virtual_iff_no_compatible_sequence_on_s5():
    for w in S5:
        for rho in reduced_words(w):
            has_seq = bool(compatible_sequences(rho))
            assert has_seq == (weak_descent_composition(rho) is not VIRTUAL)


def test_greedy_compatible():
    assert greedy_compatible((4, 2, 1, 2, 3)) == (1, 1, 1, 2, 4)
    assert greedy_compatible(()) == ()
    assert greedy_compatible((1, 4, 2, 3, 1)) is VIRTUAL


def test_greedy_weight_is_weak_descent_composition_on_s5():
    for w in S5:
        for rho in reduced_words(w):
            des = weak_descent_composition(rho)
            if des is VIRTUAL:
                assert greedy_compatible(rho) is VIRTUAL
                continue
            best = greedy_compatible(rho)
            seqs = compatible_sequences(rho)
            assert best in seqs
            assert all(
                all(x >= y for x, y in zip(best, s)) for s in seqs
            )
            assert sequence_weight(best) == des


def test_sequence_weight():
    assert sequence_weight(()) == ()
    assert sequence_weight((1, 1, 1, 2, 4)) == (3, 1, 0, 1)
    assert sequence_weight((2, 2, 3)) == (0, 2, 1)


def test_virtual_word_for_41758236():
    # a 12-letter reduced word whose greedy slots fall off the left edge
    rho = (5, 6, 3, 4, 5, 7, 3, 1, 4, 2, 3, 6)
    assert is_reduced(rho)
    assert permutation_of_word(rho) == (4, 1, 7, 5, 8, 2, 3, 6)
    assert weak_descent_composition(rho) is VIRTUAL


def test_descent_composition_counts_42153():
    des_multiset = Counter(strong_descent_composition(rho) for rho in R42153)
    assert des_multiset == Counter(
        {
            (3, 1, 1): 1,
            (2, 2, 1): 2,
            (1, 3, 1): 2,
            (3, 2): 1,
            (1, 2, 2): 2,
            (1, 1, 3): 1,
            (2, 1, 2): 1,
            (2, 3): 1,
        }
    )
