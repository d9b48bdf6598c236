"""Independent brute-force oracles the tests check the library against.

Everything here is deliberately naive and shares no code path with the
implementations under test.
"""

import itertools


def brute_perm_of_word(word, n):
    """Multiply out a word by swapping positions in a list, on a fixed degree n."""
    state = list(range(1, n + 1))
    for a in word:
        state[a - 1], state[a] = state[a], state[a - 1]
    return tuple(state)


def brute_inversion_count(perm):
    return sum(
        1
        for i, j in itertools.combinations(range(len(perm)), 2)
        if perm[i] > perm[j]
    )


def brute_reduced_words(perm):
    """All reduced words of perm by filtering every word of the right length."""
    n = len(perm)
    length = brute_inversion_count(perm)
    return sorted(
        w
        for w in itertools.product(range(1, n), repeat=length)
        if brute_perm_of_word(w, n) == perm
    )


def brute_standard_fillings(shape):
    """Count standard Young tableaux of a shape by backtracking placement of 1..N."""
    rows = len(shape)
    count = 0
    filled = [0] * rows  # cells filled so far in each row

    def rec(value, total):
        nonlocal count
        if value > total:
            count += 1
            return
        for r in range(rows):
            if filled[r] < shape[r] and (r == 0 or filled[r - 1] > filled[r]):
                filled[r] += 1
                rec(value + 1, total)
                filled[r] -= 1

    rec(1, sum(shape))
    return count


def all_partitions(max_cells):
    """Every partition with 1..max_cells cells."""
    out = []

    def rec(prefix, remaining, cap):
        for part in range(min(cap, remaining), 0, -1):
            out.append(tuple(prefix + [part]))
            rec(prefix + [part], remaining - part, part)

    rec([], max_cells, max_cells)
    return out


def all_increasing_tableaux(max_cells, max_entry):
    """Every row-and-column strict tableau with at most max_cells cells and
    entries bounded by max_entry."""
    out = []
    for shape in all_partitions(max_cells):
        rows = len(shape)
        cells = [(r, c) for r in range(rows) for c in range(shape[r])]
        grid = {}

        def rec(k):
            if k == len(cells):
                out.append(tuple(
                    tuple(grid[r, c] for c in range(shape[r])) for r in range(rows)
                ))
                return
            r, c = cells[k]
            lo = 1
            if c > 0:
                lo = max(lo, grid[r, c - 1] + 1)
            if r > 0:
                lo = max(lo, grid[r - 1, c] + 1)
            for v in range(lo, max_entry + 1):
                grid[r, c] = v
                rec(k + 1)
            grid.pop((r, c), None)

        rec(0)
    return out


def all_standard_tableaux(shape):
    """Every standard filling of a shape (values 1..N once each)."""
    n = sum(shape)
    return [t for t in all_increasing_tableaux_of_shape(shape, n)
            if sorted(x for row in t for x in row) == list(range(1, n + 1))]


def all_increasing_tableaux_of_shape(shape, max_entry):
    rows = len(shape)
    cells = [(r, c) for r in range(rows) for c in range(shape[r])]
    grid = {}
    out = []

    def rec(k):
        if k == len(cells):
            out.append(tuple(
                tuple(grid[r, c] for c in range(shape[r])) for r in range(rows)
            ))
            return
        r, c = cells[k]
        lo = 1
        if c > 0:
            lo = max(lo, grid[r, c - 1] + 1)
        if r > 0:
            lo = max(lo, grid[r - 1, c] + 1)
        for v in range(lo, max_entry + 1):
            grid[r, c] = v
            rec(k + 1)
        grid.pop((r, c), None)

    rec(0)
    return out
