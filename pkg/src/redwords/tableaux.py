"""
Young diagrams and tableaux.

A tableau is a tuple of rows (tuples of positive integers), left-justified,
with weakly decreasing row lengths.  The empty tableau () is legal; it is the
insertion output for the empty word.  A shape is a weakly decreasing tuple of
positive integers.
"""

import math

from .errors import DomainError
from .perms import Word

__all__ = [
    "Shape",
    "Tableau",
    "shape_of",
    "is_standard",
    "is_increasing",
    "hook_length_count",
    "swap_labels",
    "column_reading_word",
    "staircase",
    "halve_entries",
]

Shape = tuple[int, ...]
Tableau = tuple[tuple[int, ...], ...]


def shape_of(t: Tableau) -> Shape:
    """Row-length partition of a tableau.

    >>> shape_of(((1, 3, 7), (2, 6), (4,), (5,)))
    (3, 2, 1, 1)
    """
    shape = tuple(len(row) for row in t)
    for a, b in zip(shape, shape[1:]):
        if b > a:
            raise DomainError(f"row lengths {shape} are not weakly decreasing")
    if any(n == 0 for n in shape):
        raise DomainError("empty rows are not allowed")
    return shape


def cell_count(t: Tableau) -> int:
    return sum(len(row) for row in t)


def is_standard(t: Tableau) -> bool:
    """True iff entries are exactly 1..N, strictly increasing along rows and columns."""
    shape_of(t)
    n = cell_count(t)
    entries = sorted(x for row in t for x in row)
    if entries != list(range(1, n + 1)):
        return False
    return is_increasing(t)


def is_increasing(t: Tableau) -> bool:
    """True iff rows and columns strictly increase (repeats across the tableau allowed)."""
    shape_of(t)
    for row in t:
        if any(a >= b for a, b in zip(row, row[1:])):
            return False
    for r in range(1, len(t)):
        for c in range(len(t[r])):
            if t[r - 1][c] >= t[r][c]:
                return False
    return True


def hook_length_count(shape: Shape) -> int:
    """Number of standard Young tableaux of the given shape (exact integers).

    >>> hook_length_count((3, 2, 1))
    16
    """
    for a, b in zip(shape, shape[1:]):
        if b > a:
            raise DomainError(f"{shape} is not a partition")
    if any(part < 1 for part in shape):
        raise DomainError(f"{shape} is not a partition")
    if not shape:
        return 1
    cols = len(shape)
    col_len = [sum(1 for part in shape if part > c) for c in range(shape[0])]
    hooks = 1
    for r, part in enumerate(shape):
        for c in range(part):
            hooks *= (part - c - 1) + (col_len[c] - r - 1) + 1
    n = sum(shape)
    return math.factorial(n) // hooks


def swap_labels(t: Tableau, i: int, j: int) -> Tableau:
    """Exchange the entry values N-i and N-j, where N is the cell count.

    The caller is responsible for checking whether the result is standard.

    >>> swap_labels(((1, 2), (3,)), 0, 1)
    ((1, 3), (2,))
    """
    n = cell_count(t)
    a, b = n - i, n - j
    if not (1 <= a <= n and 1 <= b <= n):
        raise DomainError(f"labels {a} and {b} must lie in 1..{n}")
    sub = {a: b, b: a}
    return tuple(tuple(sub.get(x, x) for x in row) for row in t)


def column_reading_word(t: Tableau) -> Word:
    """Columns read top to bottom, rightmost column first.

    >>> column_reading_word(((1, 2), (2,)))
    (2, 1, 2)
    """
    shape = shape_of(t)
    if not shape:
        return ()
    out = []
    for c in range(shape[0] - 1, -1, -1):
        for row in t:
            if c < len(row):
                out.append(row[c])
    return tuple(out)


def staircase(n: int) -> Shape:
    """The shape (n-1, n-2, ..., 1).

    >>> staircase(4)
    (3, 2, 1)
    """
    if n < 2:
        raise DomainError(f"staircase needs n >= 2, got {n}")
    return tuple(range(n - 1, 0, -1))


def halve_entries(t: Tableau) -> Tableau:
    """Apply k -> (k+1)/2 to every entry; all entries must be odd."""
    if any(x % 2 == 0 for row in t for x in row):
        raise DomainError("halve_entries requires all entries odd")
    return tuple(tuple((x + 1) // 2 for x in row) for row in t)
