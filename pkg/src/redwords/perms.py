"""
Permutations and words in the symmetric group.

A permutation is a tuple in one-line notation over 1..n, e.g. (3, 5, 2, 4, 1).
A word is a tuple of positive letters, each letter i standing for the adjacent
transposition s_i = (i, i+1); the word w_1 ... w_m denotes the product
s_{w_1} s_{w_2} ... s_{w_m} applied left to right (each letter swaps the
entries at positions w_i and w_i + 1 of the running one-line notation).

Words do not carry an ambient degree: the degree of a word is max(letter) + 1
(1 for the empty word), since bump operations can grow the alphabet.  Trailing
fixed points of an explicitly given permutation are significant and are never
normalized away.

All positions, letters and values are 1-based.
"""

from collections.abc import Iterator

__all__ = [
    "Perm",
    "Word",
    "identity",
    "reverse",
    "degree_of",
    "perm_from_word",
    "apply_letter",
    "inversions",
    "inversion_count",
    "descent_set",
    "is_grassmannian",
    "is_reduced",
    "enumerate_reduced_words",
    "inverse",
]

Perm = tuple[int, ...]
Word = tuple[int, ...]


def identity(n: int) -> Perm:
    """The identity permutation of degree n.

    >>> identity(4)
    (1, 2, 3, 4)
    """
    if n < 1:
        raise ValueError(f"degree must be >= 1, got {n}")
    return tuple(range(1, n + 1))


def reverse(n: int) -> Perm:
    """The reverse (longest) permutation n, n-1, ..., 1."""
    if n < 1:
        raise ValueError(f"degree must be >= 1, got {n}")
    return tuple(range(n, 0, -1))


def degree_of(word: Word) -> int:
    """Degree of the permutation a word acts on: max letter + 1, or 1 if empty."""
    return max(word) + 1 if word else 1


def apply_letter(perm: Perm, letter: int) -> Perm:
    """Right-multiply by s_letter: swap the entries at positions letter, letter+1."""
    if not 1 <= letter < len(perm):
        raise ValueError(f"letter {letter} out of range for degree {len(perm)}")
    p = list(perm)
    p[letter - 1], p[letter] = p[letter], p[letter - 1]
    return tuple(p)


def perm_from_word(word: Word) -> Perm:
    """The permutation s_{w_1} s_{w_2} ... s_{w_m}, on degree max(letters) + 1.

    >>> perm_from_word((1, 2, 1))
    (3, 2, 1)
    >>> perm_from_word(())
    (1,)
    """
    n = degree_of(word)
    p = list(range(1, n + 1))
    for a in word:
        p[a - 1], p[a] = p[a], p[a - 1]
    return tuple(p)


def inversions(perm: Perm) -> list[tuple[int, int]]:
    """All pairs (i, j) with i < j and perm_i > perm_j, ascending lexicographically."""
    n = len(perm)
    return [
        (i + 1, j + 1)
        for i in range(n)
        for j in range(i + 1, n)
        if perm[i] > perm[j]
    ]


def inversion_count(perm: Perm) -> int:
    """The Coxeter length of perm (number of inversions)."""
    n = len(perm)
    return sum(perm[i] > perm[j] for i in range(n) for j in range(i + 1, n))


def descent_set(perm: Perm) -> set[int]:
    """Positions i with perm_i > perm_{i+1}.

    >>> sorted(descent_set((2, 4, 1, 3)))
    [2]
    """
    return {i + 1 for i in range(len(perm) - 1) if perm[i] > perm[i + 1]}


def is_grassmannian(perm: Perm) -> bool:
    """True iff perm has exactly one descent.  The identity is not Grassmannian."""
    return len(descent_set(perm)) == 1


def is_reduced(word: Word) -> bool:
    """True iff the word's length equals the length of its permutation.

    >>> is_reduced((1, 1))
    False
    >>> is_reduced((1, 2, 1))
    True
    """
    return len(word) == inversion_count(perm_from_word(word))


def enumerate_reduced_words(perm: Perm) -> Iterator[Word]:
    """Yield every reduced word of perm exactly once, in ascending lex order.

    Backtracks over the descents of the running permutation: the first letter
    of a reduced word of sigma must be a left descent (a value i appearing
    after i+1), and peeling it leaves a shorter permutation.

    >>> list(enumerate_reduced_words((3, 2, 1)))
    [(1, 2, 1), (2, 1, 2)]
    """
    n = len(perm)
    pos = [0] * (n + 2)  # pos[v] = 0-based position of value v
    for i, v in enumerate(perm):
        pos[v] = i
    work = list(perm)

    def gen(remaining: int) -> Iterator[Word]:
        if remaining == 0:
            yield ()
            return
        for v in range(1, n):
            pv, pw = pos[v], pos[v + 1]
            if pv > pw:
                # multiply by s_v on the left: swap the values v and v+1
                work[pv], work[pw] = v + 1, v
                pos[v], pos[v + 1] = pw, pv
                for tail in gen(remaining - 1):
                    yield (v,) + tail
                work[pw], work[pv] = v + 1, v
                pos[v], pos[v + 1] = pv, pw

    return gen(inversion_count(perm))


def inverse(perm: Perm) -> Perm:
    """The inverse permutation.

    >>> inverse((3, 5, 2, 4, 1))
    (5, 3, 1, 4, 2)
    """
    n = len(perm)
    out = [0] * n
    for i, v in enumerate(perm):
        out[v - 1] = i + 1
    return tuple(out)
