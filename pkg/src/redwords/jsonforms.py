"""JSON wire forms shared by the service and the CLI."""

from .errors import DomainError
from .insertion import InsertionResult
from .littlemap import BumpTrace, GrassmannianData
from .perms import Perm, Word
from .tableaux import Tableau, shape_of

__all__ = [
    "word_json",
    "tableau_json",
    "tableau_from_json",
    "step_json",
    "trace_json",
    "insertion_json",
    "grassmannian_json",
    "require_letters",
    "require_perm",
]


def word_json(word: Word) -> dict:
    return {"letters": list(word)}


def tableau_json(t: Tableau) -> dict:
    return {"rows": [list(row) for row in t]}


def tableau_from_json(obj: object) -> Tableau:
    if not isinstance(obj, dict) or "rows" not in obj:
        raise DomainError('a tableau is encoded as {"rows": [[...], ...]}')
    rows = obj["rows"]
    if not isinstance(rows, list) or not all(
        isinstance(row, list) and all(isinstance(x, int) and x >= 1 for x in row)
        for row in rows
    ):
        raise DomainError("tableau rows must be lists of positive integers")
    t = tuple(tuple(row) for row in rows)
    shape_of(t)  # validates the partition profile
    return t


def step_json(step) -> dict:
    if step.shift:
        return {"index": step.index, "shift": True}
    return {"index": step.index, "from": step.before, "to": step.after}


def trace_json(trace: BumpTrace) -> dict:
    return {
        "start": trace.start,
        "steps": [step_json(s) for s in trace.steps],
        "result": word_json(trace.result),
    }


def insertion_json(result: InsertionResult) -> dict:
    return {
        "p": tableau_json(result.p),
        "q": tableau_json(result.q),
        "steps": [
            {"letter": s.letter, "path": [list(cell) for cell in s.path]}
            for s in result.steps
        ],
    }


def grassmannian_json(gd: GrassmannianData) -> dict:
    return {
        "k": gd.k,
        "row_labels": list(gd.row_labels),
        "col_labels": list(gd.col_labels),
    }


def require_letters(body: object) -> Word:
    if not isinstance(body, dict) or "letters" not in body:
        raise DomainError('request body must carry "letters"')
    letters = body["letters"]
    if not isinstance(letters, list) or not all(
        isinstance(x, int) and not isinstance(x, bool) and x >= 1 for x in letters
    ):
        raise DomainError('"letters" must be a list of positive integers')
    return tuple(letters)


def require_perm(body: object) -> Perm:
    if not isinstance(body, dict) or "perm" not in body:
        raise DomainError('request body must carry "perm"')
    values = body["perm"]
    if not isinstance(values, list) or not all(
        isinstance(x, int) and not isinstance(x, bool) for x in values
    ):
        raise DomainError('"perm" must be a list of integers')
    if sorted(values) != list(range(1, len(values) + 1)):
        raise DomainError(f"{values} is not a permutation of 1..{len(values)}")
    return tuple(values)
