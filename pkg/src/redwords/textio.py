"""Text forms: space-separated words, one-line permutations, and tableaux
(one row per line)."""

import re

from .errors import ParseError
from .perms import Perm, Word
from .tableaux import Tableau, shape_of

__all__ = [
    "parse_word_text",
    "parse_perm_text",
    "parse_tableau_text",
    "word_text",
    "perm_text",
    "tableau_text",
]


def _parse_positive_ints(text: str, what: str) -> tuple[int, ...]:
    out = []
    for match in re.finditer(r"\S+", text):
        token, col = match.group(), match.start() + 1
        # isascii() first: exotic unicode digits pass isdigit() but not int()
        if not (token.isascii() and token.isdigit()) or int(token) < 1:
            raise ParseError(f"{what} must be positive integers, got {token!r} at column {col}", col)
        out.append(int(token))
    return tuple(out)


def parse_word_text(text: str) -> Word:
    """Whitespace-separated positive letters; the empty string is the empty word.

    >>> parse_word_text("4 2 1 2 3 2 4")
    (4, 2, 1, 2, 3, 2, 4)
    >>> parse_word_text("")
    ()
    """
    return _parse_positive_ints(text, "letters")


def parse_perm_text(text: str) -> Perm:
    """One-line notation, e.g. "3 5 2 4 1"."""
    values = _parse_positive_ints(text, "permutation entries")
    if not values:
        raise ParseError("a permutation needs at least one entry", 1)
    if sorted(values) != list(range(1, len(values) + 1)):
        raise ParseError(
            f"{' '.join(map(str, values))!r} is not a permutation of 1..{len(values)}", 1
        )
    return values


def parse_tableau_text(text: str) -> Tableau:
    """One row per line, entries space-separated; blank input is the empty tableau.

    >>> parse_tableau_text("1 3 7\\n2 6\\n4\\n5")
    ((1, 3, 7), (2, 6), (4,), (5,))
    """
    rows = [
        _parse_positive_ints(line, "tableau entries")
        for line in text.splitlines()
        if line.strip()
    ]
    t = tuple(rows)
    shape_of(t)
    return t


def word_text(word: Word) -> str:
    return " ".join(str(a) for a in word)


def perm_text(perm: Perm) -> str:
    return " ".join(str(v) for v in perm)


def tableau_text(t: Tableau) -> str:
    return "\n".join(" ".join(str(x) for x in row) for row in t)
