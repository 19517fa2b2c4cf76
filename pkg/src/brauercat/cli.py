"""
Command line interface.

Subcommands: compose, represent, check, faithfulness, enumerate, render,
eval-term.  Inputs are positional text in the diagram or term notation, or
JSON via --file (use '-' for stdin).  Output is byte-deterministic and
never colored, so NO_COLOR needs no special handling.

Exit codes: 0 success, 2 parse error or invalid value, 3 shape mismatch,
4 type error, 5 a checked law failed.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .diagrams import (
    Diagram,
    NotationError,
    ShapeMismatchError,
    compose,
    diagram_from_json,
    diagram_to_json,
    enumerate_diagrams,
    format_diagram,
    format_weighted,
    is_noncrossing,
    parse_diagram,
    weighted_to_json,
)
from .matrices import (
    axiom_matrix_report,
    commutant_report,
    faithfulness_report,
    functor_report,
    matrix_to_csv,
    matrix_to_json,
    rep_term,
    represent,
)
from .reports import CheckReport
from .terms import (
    Term,
    TermSyntaxError,
    TermTypeError,
    links,
    parse_term,
    print_term,
    term_from_json,
    typecheck,
    verify_axioms,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_SHAPE = 3
EXIT_TYPE = 4
EXIT_LAW = 5

_DIAGRAM_SHAPE = re.compile(r"\s*\d+\s*>")


def _read_json_input(path: str) -> object:
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise NotationError(f"invalid JSON: {exc.msg}", exc.pos) from exc


def _diagram_from_args(args: argparse.Namespace) -> Diagram:
    if args.file:
        return diagram_from_json(_read_json_input(args.file))
    if args.input is None:
        raise NotationError("missing input (positional text or --file)", 0)
    return parse_diagram(args.input)


def _term_or_diagram(args: argparse.Namespace) -> Diagram | Term:
    if args.file:
        obj = _read_json_input(args.file)
        if isinstance(obj, dict) and "kind" in obj:
            return term_from_json(obj)
        return diagram_from_json(obj)
    if args.input is None:
        raise NotationError("missing input (positional text or --file)", 0)
    if _DIAGRAM_SHAPE.match(args.input):
        return parse_diagram(args.input)
    return parse_term(args.input)


def _cmd_compose(args: argparse.Namespace) -> int:
    if args.file:
        obj = _read_json_input(args.file)
        if not isinstance(obj, list) or len(obj) != 2:
            raise NotationError("--file for compose expects a JSON array of two diagrams", 0)
        d1, d2 = (diagram_from_json(o) for o in obj)
    else:
        if args.first is None or args.second is None:
            raise NotationError("compose needs two diagrams (or --file)", 0)
        d1, d2 = parse_diagram(args.first), parse_diagram(args.second)
    w = compose(d1, d2)
    if args.format == "json":
        print(json.dumps(weighted_to_json(w)))
    else:
        print(format_weighted(w))
    return EXIT_OK


def _cmd_represent(args: argparse.Namespace) -> int:
    obj = _term_or_diagram(args)
    if isinstance(obj, Diagram):
        mat = represent(obj, args.p)
        linked = None
    else:
        linked = links(obj)
        mat = rep_term(obj, args.p)
    if args.format == "json":
        payload = matrix_to_json(mat)
        if linked is not None:
            payload = {"links": weighted_to_json(linked), "matrix": payload}
        print(json.dumps(payload))
    elif args.format == "csv":
        sys.stdout.write(matrix_to_csv(mat))
    else:
        if linked is not None:
            print(f"links: {format_weighted(linked)}")
        sys.stdout.write(matrix_to_csv(mat))
    return EXIT_OK


def _emit_report(report: CheckReport, args: argparse.Namespace) -> int:
    for line in report.table_lines():
        print(line)
    if getattr(args, "csv", None):
        from .reporting import save_check_csv

        save_check_csv(report, args.csv)
        print(f"wrote {args.csv}", file=sys.stderr)
    if getattr(args, "figure", None):
        from .reporting import save_check_figure

        save_check_figure(report, args.figure)
        print(f"wrote {args.figure}", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_LAW


def _cmd_check(args: argparse.Namespace) -> int:
    ps = (args.p,) if args.p else (1, 2, 3)
    if args.suite == "axioms":
        link_side = verify_axioms(args.max_power)
        matrix_side = axiom_matrix_report(args.max_power, ps)
        report = CheckReport(
            f"axioms up to power {args.max_power} (links and matrices)",
            link_side.results + matrix_side.results,
        )
    elif args.suite == "functor":
        report = functor_report(args.max_size, ps)
    else:
        report = commutant_report(args.n, args.p or 2)
    return _emit_report(report, args)


def _cmd_faithfulness(args: argparse.Namespace) -> int:
    report = faithfulness_report(args.n, args.p, tl_only=args.tl)
    print(str(report))
    if args.csv or args.figure:
        from .reporting import save_faithfulness_csv, save_faithfulness_figure

        if args.csv:
            save_faithfulness_csv([report], args.csv)
            print(f"wrote {args.csv}", file=sys.stderr)
        if args.figure:
            save_faithfulness_figure([report], args.figure)
            print(f"wrote {args.figure}", file=sys.stderr)
    return EXIT_OK


def _cmd_enumerate(args: argparse.Namespace) -> int:
    diagrams = enumerate_diagrams(args.m, args.n)
    if args.noncrossing:
        diagrams = [d for d in diagrams if is_noncrossing(d)]
    if args.format == "json":
        print(json.dumps([diagram_to_json(d) for d in diagrams]))
    else:
        for d in diagrams:
            print(format_diagram(d))
    return EXIT_OK


def _cmd_render(args: argparse.Namespace) -> int:
    d = _diagram_from_args(args)
    if args.style == "png":
        if not args.out:
            raise ValueError("png rendering needs --out FILE")
        from .reporting import save_diagram_figure

        save_diagram_figure(d, args.out, title=format_diagram(d))
        print(f"wrote {args.out}", file=sys.stderr)
        return EXIT_OK
    from .render import render_ascii, render_tikz

    text = render_ascii(d) if args.style == "ascii" else render_tikz(d)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
        print(f"wrote {args.out}", file=sys.stderr)
    else:
        print(text)
    return EXIT_OK


def _cmd_eval_term(args: argparse.Namespace) -> int:
    if args.file:
        obj = _read_json_input(args.file)
        term = term_from_json(obj)
    else:
        if args.input is None:
            raise NotationError("missing input (positional text or --file)", 0)
        term = parse_term(args.input)
    source, target = typecheck(term)
    w = links(term)
    if args.format == "json":
        print(json.dumps({
            "term": print_term(term),
            "source": source,
            "target": target,
            "links": weighted_to_json(w),
        }))
    else:
        print(f"term: {print_term(term)}")
        print(f"type: {source} -> {target}")
        print(f"links: {format_weighted(w)}")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="brauercat",
        description="Exact engine for diagram categories and their matrix representation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compose", help="compose two diagrams, first argument applied first")
    c.add_argument("first", nargs="?", help="diagram text, e.g. '3>3:[T1-T3,T2-B1,B2-B3]'")
    c.add_argument("second", nargs="?", help="diagram text")
    c.add_argument("--file", help="JSON array of two diagrams ('-' for stdin)")
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.set_defaults(func=_cmd_compose)

    r = sub.add_parser("represent", help="matrix of a diagram or term")
    r.add_argument("input", nargs="?", help="diagram or term text (auto-detected)")
    r.add_argument("--file", help="diagram JSON or term AST JSON ('-' for stdin)")
    r.add_argument("--p", type=int, required=True, help="base dimension, >= 1")
    r.add_argument("--format", choices=("text", "json", "csv"), default="text")
    r.set_defaults(func=_cmd_represent)

    k = sub.add_parser("check", help="run a verification suite")
    k.add_argument("suite", choices=("axioms", "functor", "commutant"))
    k.add_argument("--max-power", type=int, default=3, help="axioms: largest power")
    k.add_argument("--max-size", type=int, default=3, help="functor: largest row size")
    k.add_argument("--n", type=int, default=2, help="commutant: row size")
    k.add_argument("--p", type=int, default=None, help="single base dimension (default sweeps 1..3)")
    k.add_argument("--csv", help="also write the report as CSV")
    k.add_argument("--figure", help="also render the report as a PNG figure")
    k.set_defaults(func=_cmd_check)

    f = sub.add_parser("faithfulness", help="basis dimension versus image rank")
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--p", type=int, default=2)
    f.add_argument("--tl", action="store_true", help="restrict to non-crossing diagrams")
    f.add_argument("--csv", help="also write the report as CSV")
    f.add_argument("--figure", help="also render the report as a PNG figure")
    f.set_defaults(func=_cmd_faithfulness)

    e = sub.add_parser("enumerate", help="list all m-n-diagrams")
    e.add_argument("m", type=int)
    e.add_argument("n", type=int)
    e.add_argument("--noncrossing", action="store_true")
    e.add_argument("--format", choices=("text", "json"), default="text")
    e.set_defaults(func=_cmd_enumerate)

    d = sub.add_parser("render", help="draw a diagram")
    d.add_argument("input", nargs="?", help="diagram text")
    d.add_argument("--file", help="diagram JSON ('-' for stdin)")
    d.add_argument("--style", choices=("ascii", "tikz", "png"), default="ascii")
    d.add_argument("--out", help="output file (required for png)")
    d.set_defaults(func=_cmd_render)

    t = sub.add_parser("eval-term", help="type and links of a term")
    t.add_argument("input", nargs="?", help="term text, e.g. 'phi_1 o F(gamma_0)'")
    t.add_argument("--file", help="term AST JSON ('-' for stdin)")
    t.add_argument("--format", choices=("text", "json"), default="text")
    t.set_defaults(func=_cmd_eval_term)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (NotationError, TermSyntaxError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except TermTypeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TYPE
    except ShapeMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SHAPE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
