"""Permutation machinery: enumeration, parity, reduced words."""

import pytest

from laughlin.perm import (
    MAX_ENUMERATION_N,
    Permutation,
    apply_word,
    canonical_reduced_decomposition,
    enumerate_permutations,
    inversion_count,
    max_permutation,
    parity,
    reversal_word_length,
)


def brute_inversions(elems):
    n = len(elems)
    return sum(1 for x in range(n) for y in range(x + 1, n) if elems[x] > elems[y])


def test_enumeration_small():
    assert [p.elems for p in enumerate_permutations(1)] == [(0,)]
    assert [p.elems for p in enumerate_permutations(2)] == [(0, 1), (1, 0)]
    perms3 = [p.elems for p in enumerate_permutations(3)]
    assert len(perms3) == 6
    assert perms3[0] == (0, 1, 2)
    assert perms3[-1] == (2, 1, 0)
    assert perms3 == sorted(perms3)  # lexicographic


@pytest.mark.parametrize("n", range(1, 8))
def test_enumeration_count_and_distinct(n):
    import math

    perms = list(enumerate_permutations(n))
    assert len(perms) == math.factorial(n)
    assert len({p.elems for p in perms}) == len(perms)


@pytest.mark.parametrize("n", [0, -1, MAX_ENUMERATION_N + 1])
def test_enumeration_bounds(n):
    with pytest.raises(ValueError, match=str(MAX_ENUMERATION_N)):
        list(enumerate_permutations(n))


def test_invalid_permutation_rejected():
    with pytest.raises(ValueError):
        Permutation((0, 0, 1))
    with pytest.raises(ValueError):
        Permutation((1, 2, 3))
    with pytest.raises(ValueError):
        Permutation(())


def test_parity_examples():
    assert parity(Permutation((0, 1, 2))) == +1
    assert parity(Permutation((1, 0))) == -1
    assert parity(Permutation((2, 1, 0))) == -1  # 3 inversions


def test_reduced_word_examples():
    identity = Permutation(tuple(range(4)))
    assert canonical_reduced_decomposition(identity).word == ()
    assert canonical_reduced_decomposition(Permutation((2, 1, 0))).word == (1, 2, 1)
    assert len(canonical_reduced_decomposition(max_permutation(5))) == 10


@pytest.mark.parametrize("n", range(2, 8))
def test_reversal_follows_nested_pattern(n):
    # s1 (s2 s1) (s3 s2 s1) ... for the maximum permutation
    expected = []
    for block in range(1, n):
        expected.extend(range(block, 0, -1))
    word = canonical_reduced_decomposition(max_permutation(n)).word
    assert word == tuple(expected)


@pytest.mark.parametrize("n", range(1, 8))
def test_word_replay_reconstructs_every_permutation(n):
    for p in enumerate_permutations(n):
        word = canonical_reduced_decomposition(p)
        assert apply_word(word.word, n) == p
        assert len(word) == brute_inversions(p.elems)  # minimality


@pytest.mark.parametrize("n", range(1, 8))
def test_parity_matches_word_length(n):
    for p in enumerate_permutations(n):
        word = canonical_reduced_decomposition(p)
        assert parity(p) == (-1) ** len(word)
        assert inversion_count(p) == len(word)


@pytest.mark.parametrize("n", range(2, 11))
def test_reversal_word_length_closed_form(n):
    assert reversal_word_length(n) == n * (n - 1) // 2
    assert reversal_word_length(n) == len(canonical_reduced_decomposition(max_permutation(n)))


def test_reversal_word_length_edge():
    assert reversal_word_length(1) == 0
    assert reversal_word_length(2) == 1
    assert reversal_word_length(5) == 10


def test_apply_word_bounds():
    with pytest.raises(ValueError):
        apply_word([3], 3)
    with pytest.raises(ValueError):
        apply_word([0], 3)
