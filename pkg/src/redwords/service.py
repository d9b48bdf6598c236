"""
Stateless JSON endpoints over the core operations.

Every route is a POST taking a JSON body and returning a pure function of it;
the client carries all state.  Library precondition failures map to a
400-class body of the form {"error": {"code", "message", "at"}} and never to
a crash.
"""

from typing import Callable

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .errors import (
    DomainError,
    NotFoundError,
    NotGrassmannianError,
    NotReducedError,
    ParseError,
)
from .insertion import apply_ck, ck_moves_at, eg
from .jsonforms import (
    grassmannian_json,
    insertion_json,
    require_letters,
    require_perm,
    tableau_json,
    trace_json,
    word_json,
)
from .littlemap import (
    grassmannian_data,
    grassmannian_tab,
    inverse_bump,
    little_bump,
    little_bump_at_values,
    ls,
    minimal_grassmannian_normalize,
)
from .perms import (
    degree_of,
    enumerate_reduced_words,
    is_grassmannian,
    is_reduced,
    perm_from_word,
)
from .render import RenderSpec, render_wiring_svg
from .textio import parse_word_text

__all__ = ["app", "create_app", "handle_request"]

_ERROR_CODES = (
    (ParseError, "parse_error"),
    (NotReducedError, "not_reduced"),
    (NotGrassmannianError, "not_grassmannian"),
    (NotFoundError, "not_found"),
    (DomainError, "bad_request"),
)


def _error_payload(exc: Exception) -> tuple[int, dict]:
    for cls, code in _ERROR_CODES:
        if isinstance(exc, cls):
            at = getattr(exc, "column", None)
            return 400, {"error": {"code": code, "message": str(exc), "at": at}}
    return 500, {"error": {"code": "internal", "message": str(exc), "at": None}}


def _word_descents(word) -> list[int]:
    return [i + 1 for i in range(len(word) - 1) if word[i] > word[i + 1]]


def _parse(body: dict) -> dict:
    if "text" not in body:
        raise DomainError('request body must carry "text"')
    word = parse_word_text(str(body["text"]))
    perm = perm_from_word(word)
    return {
        **word_json(word),
        "n": degree_of(word),
        "perm": list(perm),
        "reduced": is_reduced(word),
        "word_descents": _word_descents(word),
    }


def _eg(body: dict) -> dict:
    word = require_letters(body)
    return {**word_json(word), **insertion_json(eg(word))}


def _little(body: dict) -> dict:
    word = require_letters(body)
    tab, traces = ls(word)
    final = traces[-1].result if traces else word
    out = {
        **word_json(word),
        "tableau": tableau_json(tab),
        "traces": [trace_json(t) for t in traces],
        "final": word_json(final),
    }
    perm = perm_from_word(final)
    out["grassmannian"] = (
        grassmannian_json(grassmannian_data(perm)) if is_grassmannian(perm) else None
    )
    return out


def _bump(body: dict) -> dict:
    word = require_letters(body)
    if "value_pair" in body:
        pair = body["value_pair"]
        if not (isinstance(pair, list) and len(pair) == 2
                and all(isinstance(x, int) for x in pair)):
            raise DomainError('"value_pair" must be a two-element list of values')
        trace = little_bump_at_values(word, pair[0], pair[1])
    else:
        trace = little_bump(word, _require_int(body, "start"))
    return {**word_json(word), **trace_json(trace)}


def _inverse_bump(body: dict) -> dict:
    word = require_letters(body)
    trace = inverse_bump(word, _require_int(body, "start"))
    return {**word_json(word), **trace_json(trace)}


def _ck_moves(body: dict) -> dict:
    word = require_letters(body)
    moves = []
    for pos in range(1, len(word) - 1):
        for move in ck_moves_at(word, pos):
            moves.append({"pos": move.pos, "kind": move.kind, "direction": move.direction})
    return {**word_json(word), "moves": moves}


def _ck_apply(body: dict) -> dict:
    word = require_letters(body)
    pos = _require_int(body, "pos")
    candidates = ck_moves_at(word, pos)
    if "kind" in body or "direction" in body:
        candidates = [
            m for m in candidates
            if m.kind == body.get("kind", m.kind)
            and m.direction == body.get("direction", m.direction)
        ]
    if not candidates:
        raise NotFoundError(f"no matching move at position {pos}")
    move = candidates[0]
    return {
        **word_json(word),
        "move": {"pos": move.pos, "kind": move.kind, "direction": move.direction},
        "result": word_json(apply_ck(word, move)),
    }


def _tab(body: dict) -> dict:
    word = require_letters(body)
    tab = grassmannian_tab(word)
    out = {**word_json(word), "tableau": tableau_json(tab)}
    if word:
        out["grassmannian"] = grassmannian_json(grassmannian_data(perm_from_word(word)))
    else:
        out["grassmannian"] = None
    return out


def _normalize(body: dict) -> dict:
    word = require_letters(body)
    result, traces = minimal_grassmannian_normalize(word)
    return {
        **word_json(word),
        "result": word_json(result),
        "traces": [trace_json(t) for t in traces],
    }


def _enumerate(body: dict) -> dict:
    perm = require_perm(body)
    limit = body.get("limit", 10000)
    if isinstance(limit, bool) or not isinstance(limit, int) or limit < 0:
        raise DomainError('"limit" must be a nonnegative integer')
    words = []
    truncated = False
    for w in enumerate_reduced_words(perm):
        if len(words) >= limit:
            truncated = True
            break
        words.append(list(w))
    return {"perm": list(perm), "words": words, "count": len(words), "truncated": truncated}


def _render_svg(body: dict) -> dict:
    word = require_letters(body)
    highlight = body.get("highlight", [])
    if not isinstance(highlight, list) or not all(isinstance(x, int) for x in highlight):
        raise DomainError('"highlight" must be a list of crossing indices')
    spec = RenderSpec(format="svg", highlight=frozenset(highlight))
    return {**word_json(word), "svg": render_wiring_svg(word, spec)}


def _require_int(body: dict, key: str) -> int:
    if key not in body or isinstance(body[key], bool) or not isinstance(body[key], int):
        raise DomainError(f'request body must carry integer "{key}"')
    return body[key]


_ROUTES: dict[str, Callable[[dict], dict]] = {
    "/api/parse": _parse,
    "/api/eg": _eg,
    "/api/little": _little,
    "/api/bump": _bump,
    "/api/inverse_bump": _inverse_bump,
    "/api/ck/moves": _ck_moves,
    "/api/ck/apply": _ck_apply,
    "/api/tab": _tab,
    "/api/normalize": _normalize,
    "/api/enumerate": _enumerate,
    "/api/render/svg": _render_svg,
}


def handle_request(route: str, body: object) -> tuple[int, dict]:
    """Dispatch one request: (status, payload), with errors as error objects.

    Pure in the body; the same (route, body) always maps to the same payload.
    """
    handler = _ROUTES.get(route)
    if handler is None:
        return 404, {"error": {"code": "not_found", "message": f"no route {route}", "at": None}}
    if not isinstance(body, dict):
        return _error_payload(DomainError("request body must be a JSON object"))
    try:
        return 200, handler(body)
    except Exception as exc:  # noqa: BLE001 - mapped to an error object
        return _error_payload(exc)


def create_app(frontend_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="redwords", docs_url=None, redoc_url=None)

    def make_endpoint(route: str):
        async def endpoint(request: Request):
            try:
                body = await request.json()
            except Exception:
                body = None
            status, payload = handle_request(route, body)
            return JSONResponse(payload, status_code=status)

        return endpoint

    for path in _ROUTES:
        app.post(path)(make_endpoint(path))

    if frontend_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=frontend_dir, html=True), name="explorer")

    return app


app = create_app()
