"""
Edelman-Greene insertion and Coxeter-Knuth moves.

Insertion of a letter x into a row works like Schensted row insertion with one
exception: when the row already contains the consecutive pair x, x+1 and x
would land on the x+1, the row is left unchanged and x+1 is inserted into the
next row instead (the "special bump").  A word is inserted from right to left;
the recording tableau stores, in each box, the step at which it was created.

For reduced words the insertion tableau is row-and-column strict and two words
share it exactly when they are connected by Coxeter-Knuth moves: with
a < b < c, the rewrites acb <-> cab, bac <-> bca and x(x+1)x <-> (x+1)x(x+1)
on three consecutive letters.
"""

from bisect import bisect_right
from collections import deque
from dataclasses import dataclass

from .errors import DomainError, NotReducedError
from .perms import Word, is_reduced
from .tableaux import Tableau, column_reading_word

__all__ = [
    "InsertionStep",
    "InsertionResult",
    "eg_insert_letter",
    "eg",
    "eg_intermediates",
    "tau",
    "CKMove",
    "ck_moves_at",
    "apply_ck",
    "ck_class",
]


@dataclass(frozen=True)
class InsertionStep:
    """One letter's insertion: the cells touched in each row, ending at the new box."""

    letter: int
    path: tuple[tuple[int, int], ...]

    @property
    def new_box(self) -> tuple[int, int]:
        return self.path[-1]


@dataclass(frozen=True)
class InsertionResult:
    p: Tableau
    q: Tableau
    steps: tuple[InsertionStep, ...]


def _insert(rows: list[list[int]], x: int) -> tuple[tuple[int, int], list[tuple[int, int]]]:
    """Insert x into mutable rows; return (new box, path of touched cells)."""
    path = []
    r = 0
    while True:
        if r == len(rows):
            rows.append([x])
            box = (r + 1, 1)
            path.append(box)
            return box, path
        row = rows[r]
        if not row or x >= row[-1]:
            row.append(x)
            box = (r + 1, len(row))
            path.append(box)
            return box, path
        j = bisect_right(row, x)  # leftmost entry strictly greater than x
        path.append((r + 1, j + 1))
        if row[j] == x + 1 and j > 0 and row[j - 1] == x:
            x = x + 1  # special bump: row unchanged, x+1 moves on
        else:
            row[j], x = x, row[j]
        r += 1


def eg_insert_letter(p: Tableau, letter: int) -> tuple[Tableau, tuple[int, int]]:
    """Insert one letter into a tableau; return the new tableau and the added box.

    >>> eg_insert_letter(((1, 3), (2,), (3,), (4,)), 2)
    (((1, 2), (2, 3), (3,), (4,)), (2, 2))
    """
    if letter < 1:
        raise DomainError(f"letters must be positive, got {letter}")
    rows = [list(row) for row in p]
    box, _ = _insert(rows, letter)
    return tuple(tuple(row) for row in rows), box


def eg(word: Word) -> InsertionResult:
    """Insert the word from right to left; the word need not be reduced.

    >>> r = eg((4, 2, 1, 2, 3, 2, 4))
    >>> r.p
    ((1, 2, 4), (2, 3), (3,), (4,))
    >>> r.q
    ((1, 3, 7), (2, 6), (4,), (5,))
    """
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    steps = []
    for time, letter in enumerate(reversed(word), 1):
        if letter < 1:
            raise DomainError(f"letters must be positive, got {letter}")
        (r, c), path = _insert(p_rows, letter)
        if r == len(q_rows) + 1:
            q_rows.append([])
        q_rows[r - 1].append(time)
        assert len(q_rows[r - 1]) == c
        steps.append(InsertionStep(letter, tuple(path)))
    return InsertionResult(
        p=tuple(tuple(row) for row in p_rows),
        q=tuple(tuple(row) for row in q_rows),
        steps=tuple(steps),
    )


def eg_intermediates(word: Word) -> tuple[tuple[Tableau, Tableau], ...]:
    """The pairs (P_j, Q_j) after each of the m insertions."""
    out = []
    m = len(word)
    for j in range(1, m + 1):
        r = eg(word[m - j:])
        out.append((r.p, r.q))
    return tuple(out)


def tau(word: Word) -> Word:
    """The column reading word of the insertion tableau; requires a reduced word.

    The result is reduced and Coxeter-Knuth equivalent to the input.

    >>> tau((4, 2, 1, 2, 3, 2, 4))
    (4, 2, 3, 1, 2, 3, 4)
    """
    if not is_reduced(word):
        raise NotReducedError(f"tau requires a reduced word, got {word}")
    return column_reading_word(eg(word).p)


@dataclass(frozen=True)
class CKMove:
    """A Coxeter-Knuth move on the letters at pos, pos+1, pos+2 (1-based)."""

    pos: int
    kind: str  # "type1" | "type2" | "type3"
    direction: str  # "forward" | "backward"


def _classify(x: int, y: int, z: int) -> tuple[str, str] | None:
    """Match a letter triple against the three move patterns (at most one fits)."""
    if x == z:
        if y == x + 1:
            return "type3", "forward"  # x(x+1)x -> (x+1)x(x+1)
        if y == x - 1:
            return "type3", "backward"
        return None
    if x == y or y == z:
        return None
    if x < z < y:
        return "type1", "forward"  # acb -> cab
    if y < z < x:
        return "type1", "backward"
    if y < x < z:
        return "type2", "forward"  # bac -> bca
    if z < x < y:
        return "type2", "backward"
    return None  # abc / cba: not a move


def ck_moves_at(word: Word, pos: int) -> list[CKMove]:
    """All moves applicable to the letters at pos..pos+2 (zero or one).

    >>> ck_moves_at((1, 2, 1), 1)
    [CKMove(pos=1, kind='type3', direction='forward')]
    """
    if not 1 <= pos <= len(word) - 2:
        raise DomainError(f"pos {pos} out of range for word of length {len(word)}")
    hit = _classify(word[pos - 1], word[pos], word[pos + 1])
    if hit is None:
        return []
    kind, direction = hit
    return [CKMove(pos, kind, direction)]


def apply_ck(word: Word, move: CKMove) -> Word:
    """Rewrite three consecutive letters; the permutation is unchanged.

    >>> apply_ck((1, 2, 1), CKMove(1, "type3", "forward"))
    (2, 1, 2)
    """
    if move not in ck_moves_at(word, move.pos):
        raise DomainError(f"{move} does not apply to {word}")
    i = move.pos - 1
    x, y, z = word[i], word[i + 1], word[i + 2]
    if move.kind == "type1":
        x, y = y, x  # acb <-> cab
    elif move.kind == "type2":
        y, z = z, y  # bac <-> bca
    else:
        x, y, z = y, x, y  # x(x+1)x <-> (x+1)x(x+1)
    return word[:i] + (x, y, z) + word[i + 3:]


def ck_class(word: Word) -> set[Word]:
    """The full Coxeter-Knuth equivalence class of a reduced word (BFS closure)."""
    if not is_reduced(word):
        raise NotReducedError(f"ck_class requires a reduced word, got {word}")
    seen = {word}
    queue = deque([word])
    while queue:
        w = queue.popleft()
        for pos in range(1, len(w) - 1):
            for move in ck_moves_at(w, pos):
                v = apply_ck(w, move)
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
    return seen
