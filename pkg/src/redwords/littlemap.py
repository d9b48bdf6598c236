"""
Wiring diagrams, Little bumps, and the LS map to standard tableaux.

A word's wiring diagram has degree_of(word) horizontal wires; the letter w_t
crosses rows w_t and w_t+1 at time t, and the crossing swaps a unique pair of
wire values.  A word is reduced exactly when no value pair crosses twice.

A Little bump pushes one crossing up: decrement the current letter (or, when
the letter is already 1, increment every other letter, which re-embeds the
diagram below a fresh top wire and always terminates the bump); whenever the
result is not reduced, the unique other crossing with the duplicated value
pair becomes the current one.  A bump at i is defined when deleting letter i
leaves a reduced word.  Bumps preserve length, the descent structure of the
word, and the recording tableau of insertion.

The LS map repeatedly bumps at the crossing of the permutation's
lexicographically last inversion until the permutation is Grassmannian, then
reads off the tableau whose entry for the crossing at time l, between row
value a_i and column value b_j, is m+1-l.
"""

from bisect import bisect_right
from dataclasses import dataclass

from .errors import (
    DomainError,
    InternalError,
    NotFoundError,
    NotGrassmannianError,
    NotReducedError,
)
from .perms import (
    Perm,
    Word,
    degree_of,
    descent_set,
    inversions,
    is_grassmannian,
    perm_from_word,
)
from .tableaux import Tableau

__all__ = [
    "WiringDiagram",
    "wiring_diagram",
    "crossing_pairs",
    "crossing_of_values",
    "BumpStep",
    "BumpTrace",
    "valid_bump_starts",
    "little_bump",
    "little_bump_at_values",
    "inverse_bump",
    "GrassmannianData",
    "grassmannian_data",
    "grassmannian_tab",
    "ls",
    "minimal_grassmannian_normalize",
    "rs_embedding_word",
    "rs",
]


@dataclass(frozen=True)
class WiringDiagram:
    """States sigma^0..sigma^m and the value pair swapped at each crossing."""

    word: Word
    n: int
    states: tuple[Perm, ...]
    crossing_pairs: tuple[tuple[int, int], ...]


def crossing_pairs(word: Word) -> list[tuple[int, int]]:
    """The (smaller, larger) value pair swapped at each crossing, in time order."""
    n = degree_of(word)
    state = list(range(1, n + 1))
    pairs = []
    for a in word:
        u, v = state[a - 1], state[a]
        pairs.append((u, v) if u < v else (v, u))
        state[a - 1], state[a] = v, u
    return pairs


def _reduced(word: Word) -> bool:
    # reduced <=> no value pair crosses twice
    pairs = crossing_pairs(word)
    return len(set(pairs)) == len(pairs)


def wiring_diagram(word: Word) -> WiringDiagram:
    """Compute all intermediate states and crossing value pairs.

    >>> wiring_diagram((1, 2, 1)).crossing_pairs
    ((1, 2), (1, 3), (2, 3))
    """
    n = degree_of(word)
    state = list(range(1, n + 1))
    states = [tuple(state)]
    pairs = []
    for a in word:
        u, v = state[a - 1], state[a]
        pairs.append((u, v) if u < v else (v, u))
        state[a - 1], state[a] = v, u
        states.append(tuple(state))
    return WiringDiagram(word, n, tuple(states), tuple(pairs))


def crossing_of_values(word: Word, u: int, v: int) -> int:
    """The unique time at which values u and v cross in a reduced word."""
    if not _reduced(word):
        raise NotReducedError(f"crossing_of_values requires a reduced word, got {word}")
    pair = (u, v) if u < v else (v, u)
    for t, p in enumerate(crossing_pairs(word), 1):
        if p == pair:
            return t
    raise NotFoundError(f"values {u} and {v} never cross in {word}")


@dataclass(frozen=True)
class BumpStep:
    """One bump action: a single-letter change, or a shift of all other letters."""

    index: int
    before: int
    after: int
    shift: bool = False


@dataclass(frozen=True)
class BumpTrace:
    start: int
    steps: tuple[BumpStep, ...]
    result: Word


def valid_bump_starts(word: Word) -> list[int]:
    """Indices i such that deleting letter i leaves a reduced word."""
    return [
        i + 1
        for i in range(len(word))
        if _reduced(word[:i] + word[i + 1:])
    ]


def _check_bump_start(word: Word, start: int, op: str) -> None:
    if not _reduced(word):
        raise NotReducedError(f"{op} requires a reduced word, got {word}")
    if not 1 <= start <= len(word):
        raise DomainError(f"start {start} out of range for word of length {len(word)}")
    if not _reduced(word[:start - 1] + word[start:]):
        raise DomainError(
            f"{op} at {start} undefined: deleting that letter of {word} "
            "does not leave a reduced word"
        )


def _duplicate_of(pairs: list[tuple[int, int]], cur: int) -> int | None:
    """The other 0-based index sharing pairs[cur], or None if the word is reduced."""
    dups = [i for i, p in enumerate(pairs) if p == pairs[cur] and i != cur]
    if not dups:
        if len(set(pairs)) != len(pairs):
            raise InternalError("non-reduced word whose defect misses the current crossing")
        return None
    if len(dups) > 1:
        raise InternalError(f"crossing pair duplicated more than once: {pairs}")
    return dups[0]


def little_bump(word: Word, start: int) -> BumpTrace:
    """Run a Little bump from the given crossing; returns the full trace.

    >>> little_bump((1, 2, 1), 1).result
    (1, 3, 2)
    >>> little_bump((2,), 1).result
    (1,)
    """
    _check_bump_start(word, start, "little_bump")
    w = list(word)
    cur = start - 1
    steps: list[BumpStep] = []
    cap = 4 * len(word) * degree_of(word) + 8
    for _ in range(cap):
        if w[cur] == 1:
            for j in range(len(w)):
                if j != cur:
                    w[j] += 1
            steps.append(BumpStep(cur + 1, 1, 1, shift=True))
            result = tuple(w)
            if not _reduced(result):
                raise InternalError(f"shifted word {result} is not reduced")
            return BumpTrace(start, tuple(steps), result)
        w[cur] -= 1
        steps.append(BumpStep(cur + 1, w[cur] + 1, w[cur]))
        nxt = _duplicate_of(crossing_pairs(tuple(w)), cur)
        if nxt is None:
            return BumpTrace(start, tuple(steps), tuple(w))
        cur = nxt
    raise InternalError(f"bump from {word} at {start} exceeded {cap} steps")


def little_bump_at_values(word: Word, u: int, v: int) -> BumpTrace:
    """Bump starting at the crossing of the value pair {u, v}."""
    return little_bump(word, crossing_of_values(word, u, v))


def inverse_bump(word: Word, start: int) -> BumpTrace:
    """The increment-direction bump: pushes a crossing down instead of up.

    When the current letter is 1, the word has at least two letters and every
    other letter is at least 2, the step decrements every other letter (the
    exact inverse of the decrement bump's shift); otherwise the current letter
    is incremented.  Collisions are resolved through the duplicated value pair
    just as in the decrement direction.

    >>> inverse_bump((1,), 1).result
    (2,)
    >>> inverse_bump((1, 3, 2), 1).result
    (1, 2, 1)
    """
    _check_bump_start(word, start, "inverse_bump")
    w = list(word)
    cur = start - 1
    steps: list[BumpStep] = []
    cap = 4 * len(word) * (degree_of(word) + len(word)) + 8
    for _ in range(cap):
        others = [x for j, x in enumerate(w) if j != cur]
        if w[cur] == 1 and others and min(others) >= 2:
            for j in range(len(w)):
                if j != cur:
                    w[j] -= 1
            steps.append(BumpStep(cur + 1, 1, 1, shift=True))
        else:
            w[cur] += 1
            steps.append(BumpStep(cur + 1, w[cur] - 1, w[cur]))
        nxt = _duplicate_of(crossing_pairs(tuple(w)), cur)
        if nxt is None:
            return BumpTrace(start, tuple(steps), tuple(w))
        cur = nxt
    raise InternalError(f"inverse bump from {word} at {start} exceeded {cap} steps")


@dataclass(frozen=True)
class GrassmannianData:
    """Split of a one-descent permutation: row labels a_k..a_1, column labels b_1..b_{n-k}."""

    k: int
    row_labels: tuple[int, ...]
    col_labels: tuple[int, ...]


def grassmannian_data(perm: Perm) -> GrassmannianData:
    """Split a Grassmannian permutation at its unique descent.

    >>> grassmannian_data((2, 4, 1, 3))
    GrassmannianData(k=2, row_labels=(4, 2), col_labels=(1, 3))
    """
    descents = descent_set(perm)
    if len(descents) != 1:
        raise NotGrassmannianError(f"{perm} has {len(descents)} descents, need exactly 1")
    k = descents.pop()
    return GrassmannianData(k, tuple(reversed(perm[:k])), perm[k:])


def grassmannian_tab(word: Word) -> Tableau:
    """The tableau of a Grassmannian word: m+1-l at (row of a_i, column of b_j).

    >>> grassmannian_tab((1, 3, 2))
    ((1, 2), (3,))
    """
    if not word:
        return ()
    if not _reduced(word):
        raise NotReducedError(f"grassmannian_tab requires a reduced word, got {word}")
    perm = perm_from_word(word)
    gd = grassmannian_data(perm)
    row_of = {a: r for r, a in enumerate(gd.row_labels, 1)}
    col_of = {b: c for c, b in enumerate(gd.col_labels, 1)}
    m = len(word)
    cells: dict[tuple[int, int], int] = {}
    for l, (u, v) in enumerate(crossing_pairs(word), 1):
        # every inversion of a Grassmannian permutation pairs an a with a b
        if u in col_of and v in row_of:
            b, a = u, v
        elif v in col_of and u in row_of:
            b, a = v, u
        else:
            raise InternalError(f"crossing {u},{v} is not an (a, b) pair in {perm}")
        cells[row_of[a], col_of[b]] = m + 1 - l
    rows = []
    for r in range(1, gd.k + 1):
        row = [cells[r, c] for c in range(1, len(gd.col_labels) + 1) if (r, c) in cells]
        if row and any((r, c) not in cells for c in range(1, len(row) + 1)):
            raise InternalError(f"row {r} of the tableau is not left-justified")
        if row:
            rows.append(tuple(row))
    return tuple(rows)


def ls(word: Word) -> tuple[Tableau, tuple[BumpTrace, ...]]:
    """Bump at the last inversion's crossing until Grassmannian, then read the tableau.

    >>> ls((1, 2, 1))[0]
    ((1, 2), (3,))
    """
    if not _reduced(word):
        raise NotReducedError(f"ls requires a reduced word, got {word}")
    traces: list[BumpTrace] = []
    w = word
    cap = 4 * len(word) * degree_of(word) + 8
    for _ in range(cap):
        perm = perm_from_word(w)
        if not w or is_grassmannian(perm):
            return grassmannian_tab(w), tuple(traces)
        i, j = inversions(perm)[-1]  # maximize i, then j
        trace = little_bump_at_values(w, perm[j - 1], perm[i - 1])
        traces.append(trace)
        w = trace.result
    raise InternalError(f"ls({word}) exceeded {cap} bumps")


def minimal_grassmannian_normalize(word: Word) -> tuple[Word, tuple[BumpTrace, ...]]:
    """Bump a Grassmannian word to the word of the minimal permutation of its shape.

    While the permutation has leading fixed points (no letter equals 1), one
    pass bumps at the last crossing featuring each column value b_1, b_2, ...;
    the pass decrements every letter once, trading a leading fixed point for a
    trailing one, which the word's intrinsic degree then drops.  The tableau
    is unchanged throughout.

    >>> minimal_grassmannian_normalize((3, 2))[0]
    (2, 1)
    """
    if not word:
        return (), ()
    if not _reduced(word):
        raise NotReducedError(f"normalize requires a reduced word, got {word}")
    if not is_grassmannian(perm_from_word(word)):
        raise NotGrassmannianError(f"normalize requires a Grassmannian word, got {word}")
    w = word
    traces: list[BumpTrace] = []
    while min(w) >= 2:
        before = w
        tracked = list(grassmannian_data(perm_from_word(w)).col_labels)
        for t_i in range(len(tracked)):
            b = tracked[t_i]
            hits = [l for l, pair in enumerate(crossing_pairs(w), 1) if b in pair]
            if not hits:
                raise InternalError(f"column value {b} has no crossing in {w}")
            trace = little_bump(w, hits[-1])
            traces.append(trace)
            w = trace.result
            if any(step.shift for step in trace.steps):
                # cannot happen when the pass starts with min >= 2, but keep
                # the tracked values honest if it ever does
                tracked = [x + 1 for x in tracked]
        if w != tuple(x - 1 for x in before):
            raise InternalError(f"bump pass on {before} produced {w}, not a uniform decrement")
    return w, tuple(traces)


def rs_embedding_word(perm: Perm) -> Word:
    """The reduced word (2*perm_n - 1, ..., 2*perm_1 - 1); letters are distinct and odd.

    >>> rs_embedding_word((2, 3, 1))
    (1, 5, 3)
    """
    return tuple(2 * v - 1 for v in reversed(perm))


def rs(perm: Perm) -> tuple[Tableau, Tableau]:
    """Classical Schensted row insertion of perm_1, ..., perm_n, left to right."""
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for time, x in enumerate(perm, 1):
        r = 0
        while True:
            if r == len(p_rows):
                p_rows.append([x])
                q_rows.append([time])
                break
            row = p_rows[r]
            if x > row[-1]:
                row.append(x)
                q_rows[r].append(time)
                break
            j = bisect_right(row, x)  # leftmost entry > x (entries are distinct)
            row[j], x = x, row[j]
            r += 1
    return (
        tuple(tuple(row) for row in p_rows),
        tuple(tuple(row) for row in q_rows),
    )
