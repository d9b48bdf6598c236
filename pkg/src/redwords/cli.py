"""
Command-line front door.

Verbs map one-to-one onto core operations; words and permutations are given in
their space-separated text forms, results are printed as JSON (render prints
text or SVG).  `verify` exits nonzero when any check fails so CI can gate on
it.
"""

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .errors import ParseError
from .insertion import apply_ck, ck_moves_at, eg
from .jsonforms import (
    grassmannian_json,
    insertion_json,
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
from .perms import enumerate_reduced_words, is_grassmannian, perm_from_word
from .render import RenderSpec, render_wiring_ascii, render_wiring_svg
from .textio import parse_perm_text, parse_word_text
from .verify import Profile, run_all

__all__ = ["main"]


def _emit(obj: dict) -> None:
    print(json.dumps(obj, sort_keys=True))


def _cmd_enum(args) -> int:
    perm = parse_perm_text(args.perm)
    words = []
    truncated = False
    for w in enumerate_reduced_words(perm):
        if args.limit is not None and len(words) >= args.limit:
            truncated = True
            break
        words.append(list(w))
    _emit({"perm": list(perm), "words": words, "count": len(words), "truncated": truncated})
    return 0


def _cmd_eg(args) -> int:
    word = parse_word_text(args.word)
    _emit({**word_json(word), **insertion_json(eg(word))})
    return 0


def _cmd_little(args) -> int:
    word = parse_word_text(args.word)
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
    _emit(out)
    return 0


def _cmd_bump(args) -> int:
    word = parse_word_text(args.word)
    if args.values:
        u, v = (int(x) for x in args.values.split(","))
        trace = little_bump_at_values(word, u, v)
    elif args.start is not None:
        trace = little_bump(word, args.start)
    else:
        raise SystemExit("bump needs --start or --values")
    _emit({**word_json(word), **trace_json(trace)})
    return 0


def _cmd_inverse_bump(args) -> int:
    word = parse_word_text(args.word)
    _emit({**word_json(word), **trace_json(inverse_bump(word, args.start))})
    return 0


def _cmd_ck(args) -> int:
    word = parse_word_text(args.word)
    if args.apply is not None:
        moves = ck_moves_at(word, args.apply)
        if args.kind:
            moves = [m for m in moves if m.kind == args.kind]
        if args.direction:
            moves = [m for m in moves if m.direction == args.direction]
        if not moves:
            print("no matching move", file=sys.stderr)
            return 1
        move = moves[0]
        _emit({
            **word_json(word),
            "move": {"pos": move.pos, "kind": move.kind, "direction": move.direction},
            "result": word_json(apply_ck(word, move)),
        })
        return 0
    moves = [
        {"pos": m.pos, "kind": m.kind, "direction": m.direction}
        for pos in range(1, len(word) - 1)
        for m in ck_moves_at(word, pos)
    ]
    _emit({**word_json(word), "moves": moves})
    return 0


def _cmd_tab(args) -> int:
    word = parse_word_text(args.word)
    out = {**word_json(word), "tableau": tableau_json(grassmannian_tab(word))}
    out["grassmannian"] = (
        grassmannian_json(grassmannian_data(perm_from_word(word))) if word else None
    )
    _emit(out)
    return 0


def _cmd_normalize(args) -> int:
    word = parse_word_text(args.word)
    result, traces = minimal_grassmannian_normalize(word)
    _emit({
        **word_json(word),
        "result": word_json(result),
        "traces": [trace_json(t) for t in traces],
    })
    return 0


def _cmd_verify(args) -> int:
    profile = Profile(n_max=args.n, extended=args.extended, seed=args.seed)
    reports = run_all(profile)
    ok = True
    for report in reports:
        _emit(report.to_json())
        ok = ok and report.passed
    summary = "all checks passed" if ok else "FAILURES PRESENT"
    print(f"# {len(reports)} checks, {summary}", file=sys.stderr)
    return 0 if ok else 1


def _cmd_render(args) -> int:
    word = parse_word_text(args.word)
    highlight = frozenset(int(x) for x in args.highlight.split(",")) if args.highlight else frozenset()
    spec = RenderSpec(format=args.format, highlight=highlight)
    if args.format == "svg":
        print(render_wiring_svg(word, spec))
    else:
        print(render_wiring_ascii(word, spec))
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    frontend = Path(args.frontend) if args.frontend else None
    app = create_app(str(frontend)) if frontend and frontend.is_dir() else None
    if app is None:
        from .service import app as bare_app

        app = bare_app
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="redwords", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("enum", help="enumerate reduced words of a permutation")
    p.add_argument("perm", help='one-line notation, e.g. "3 2 1"')
    p.add_argument("--limit", type=int, default=None)
    p.set_defaults(func=_cmd_enum)

    p = sub.add_parser("eg", help="insertion tableaux P, Q and the step paths")
    p.add_argument("word", help='space-separated letters, e.g. "4 2 1 2 3 2 4"')
    p.set_defaults(func=_cmd_eg)

    p = sub.add_parser("little", help="bump a word to Grassmannian form and read its tableau")
    p.add_argument("word")
    p.set_defaults(func=_cmd_little)

    p = sub.add_parser("bump", help="run one bump from a chosen crossing")
    p.add_argument("word")
    p.add_argument("--start", type=int, default=None, help="1-based crossing index")
    p.add_argument("--values", default=None, help="value pair u,v naming the crossing")
    p.set_defaults(func=_cmd_bump)

    p = sub.add_parser("inverse-bump", help="run one increment-direction bump")
    p.add_argument("word")
    p.add_argument("--start", type=int, required=True)
    p.set_defaults(func=_cmd_inverse_bump)

    p = sub.add_parser("ck", help="list or apply Coxeter-Knuth moves")
    p.add_argument("word")
    p.add_argument("--apply", type=int, default=None, metavar="POS")
    p.add_argument("--kind", choices=["type1", "type2", "type3"], default=None)
    p.add_argument("--direction", choices=["forward", "backward"], default=None)
    p.set_defaults(func=_cmd_ck)

    p = sub.add_parser("tab", help="tableau of a Grassmannian word")
    p.add_argument("word")
    p.set_defaults(func=_cmd_tab)

    p = sub.add_parser("normalize", help="bump a Grassmannian word to its minimal form")
    p.add_argument("word")
    p.set_defaults(func=_cmd_normalize)

    p = sub.add_parser("verify", help="run the exhaustive verification suite")
    p.add_argument("--n", type=int, default=5, help="largest symmetric group rank (2..6)")
    p.add_argument("--extended", action="store_true", help="add the rank-6 sweeps")
    p.add_argument("--seed", type=int, default=1729)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("render", help="draw the wiring diagram")
    p.add_argument("word")
    p.add_argument("--format", choices=["ascii", "svg"], default="ascii")
    p.add_argument("--highlight", default=None, help="comma-separated crossing indices")
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("serve", help="start the JSON service")
    p.add_argument("--port", type=int, default=8008)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--frontend", default=None, help="directory with the explorer bundle")
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
