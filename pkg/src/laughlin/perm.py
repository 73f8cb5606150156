"""Permutations of ``range(n)``: enumeration, parity, reduced words.

A simple transposition ``s_i`` (1 <= i <= n-1) swaps the two contiguous
entries at positions i-1 and i. Every permutation factors into simple
transpositions; a minimal-length factorization is its canonical reduced
decomposition and its length equals the inversion count. The maximum
permutation (n-1, ..., 1, 0) decomposes as the nested word
s1 (s2 s1) (s3 s2 s1) ... of length n(n-1)/2.

>>> parity(Permutation((2, 1, 0)))
-1
>>> canonical_reduced_decomposition(Permutation((2, 1, 0))).word
(1, 2, 1)
"""

from dataclasses import dataclass
from itertools import permutations as _lexicographic
from typing import Iterator, Sequence

MAX_ENUMERATION_N = 10


@dataclass(frozen=True)
class Permutation:
    """A bijection on {0, ..., n-1} in one-line notation."""

    elems: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "elems", tuple(self.elems))
        n = len(self.elems)
        if n == 0:
            raise ValueError("permutation must have at least one element")
        if sorted(self.elems) != list(range(n)):
            raise ValueError(f"{self.elems} is not a permutation of 0..{n - 1}")

    @property
    def n(self) -> int:
        return len(self.elems)


@dataclass(frozen=True)
class ReducedWord:
    """Simple-transposition indices, applied left to right to the identity."""

    word: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.word)


def enumerate_permutations(n: int) -> Iterator[Permutation]:
    """Yield all n! permutations of range(n) in lexicographic order."""
    if not 1 <= n <= MAX_ENUMERATION_N:
        raise ValueError(
            f"n={n} outside 1..{MAX_ENUMERATION_N}: enumeration grows as n!"
        )
    for elems in _lexicographic(range(n)):
        yield Permutation(elems)


def inversion_count(p: Permutation) -> int:
    """Number of pairs x < y with p.elems[x] > p.elems[y]."""
    e = p.elems
    return sum(1 for x in range(p.n) for y in range(x + 1, p.n) if e[x] > e[y])


def parity(p: Permutation) -> int:
    """(-1)**inversion_count: +1 for even permutations, -1 for odd."""
    return -1 if inversion_count(p) % 2 else +1


def canonical_reduced_decomposition(p: Permutation) -> ReducedWord:
    """Minimal word of simple transpositions rebuilding ``p`` from the identity.

    Computed by bubble passes: sorting ``p`` back to the identity with
    adjacent swaps records the word in reverse. The word length equals the
    inversion count, and for the maximum permutation the word is the nested
    pattern s1 (s2 s1) (s3 s2 s1) ...
    """
    seq = list(p.elems)
    recorded: list[int] = []
    swapped = True
    while swapped:
        swapped = False
        for i in range(len(seq) - 1):
            if seq[i] > seq[i + 1]:
                seq[i], seq[i + 1] = seq[i + 1], seq[i]
                recorded.append(i + 1)
                swapped = True
    return ReducedWord(tuple(reversed(recorded)))


def apply_word(word: Sequence[int], n: int) -> Permutation:
    """Replay a word of simple transpositions on the identity of size n."""
    seq = list(range(n))
    for i in word:
        if not 1 <= i <= n - 1:
            raise ValueError(f"transposition index {i} outside 1..{n - 1}")
        seq[i - 1], seq[i] = seq[i], seq[i - 1]
    return Permutation(tuple(seq))


def max_permutation(n: int) -> Permutation:
    """The order-reversing permutation (n-1, ..., 1, 0)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return Permutation(tuple(range(n - 1, -1, -1)))


def reversal_word_length(n: int) -> int:
    """n(n-1)/2: reduced-word length of the maximum permutation."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return n * (n - 1) // 2


if __name__ == "__main__":
    import doctest

    doctest.testmod()
