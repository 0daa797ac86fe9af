"""Command-line interface.

Exit codes: 0 success/true, 1 relation false or invalid element,
2 parse error, 3 usage error. Output is ``key=value`` lines.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .element import ValidationError, evaluate, semantic_eq, validate
from .fileformat import ParseError, format_element, parse
from .green import RELATIONS, classify, d_class
from .oracle import grid_injective_check, grid_monotone_check, grid_project, pointwise_compose, random_element
from .ops import compose
from .poset import leq, flip_point
from .semilattice import NotIdempotentError, meet

EXIT_OK, EXIT_FALSE, EXIT_PARSE, EXIT_USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _load(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return validate(parse(text))
    except (ParseError, ValidationError) as exc:
        exc.path = path
        raise


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _bool(v: bool) -> str:
    return "true" if v else "false"


def cmd_validate(args):
    a = _load(args.file)
    print(f"valid=true orientation={'flip' if a.flipped else 'preserve'} bound={a.bound}")
    return EXIT_OK


def cmd_eval(args):
    if args.i < 1 or args.j < 1:
        raise UsageError("point coordinates must be >= 1")
    a = _load(args.file)
    q = evaluate(a, (args.i, args.j))
    print(f"value={q if q is not None else 'undefined'}")
    return EXIT_OK


def cmd_compose(args):
    a, b = _load(args.file1), _load(args.file2)
    _emit(format_element(compose(a, b)), args.output)
    return EXIT_OK


def cmd_eq(args):
    same = semantic_eq(_load(args.file1), _load(args.file2))
    print(f"equal={_bool(same)}")
    return EXIT_OK if same else EXIT_FALSE


def cmd_classify(args):
    print(classify(_load(args.file)).summary())
    return EXIT_OK


def cmd_relate(args):
    related = RELATIONS[args.relation](_load(args.file1), _load(args.file2))
    print(f"relation={args.relation} related={_bool(related)}")
    return EXIT_OK if related else EXIT_FALSE


def cmd_dclass(args):
    members = d_class(_load(args.file))
    out = Path(args.output)
    out.mkdir(parents=True, exist_ok=True)
    for k, m in enumerate(members):
        (out / f"member_{k}.po2").write_text(format_element(m), encoding="utf-8")
    print(f"d_class_size={len(members)}")
    return EXIT_OK


def cmd_meet(args):
    try:
        e = meet(_load(args.file1), _load(args.file2))
    except NotIdempotentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FALSE
    _emit(format_element(e), args.output)
    return EXIT_OK


def cmd_oracle_check(args):
    if args.grid < 1:
        raise UsageError("--grid must be >= 1")
    a = _load(args.file)
    g = grid_project(a, args.grid)
    mono = grid_monotone_check(g)
    inj = grid_injective_check(g)
    target = flip_point if a.flipped else (lambda p: p)
    dominated = all(leq(q, target(p)) for p, q in g.table.items())
    # square of the element, canonical vs pointwise
    sq = grid_project(compose(a, a), args.grid)
    sq_ok = sq.table == pointwise_compose(g, g).table
    ok = mono and inj and dominated and sq_ok
    print(
        f"grid={args.grid} points={len(g.table)} monotone={_bool(mono)} injective={_bool(inj)} "
        f"dominated={_bool(dominated)} square_matches={_bool(sq_ok)}"
    )
    return EXIT_OK if ok else EXIT_FALSE


def cmd_random(args):
    if args.len < 0:
        raise UsageError("--len must be >= 0")
    _emit(format_element(random_element(args.seed, args.len)), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="po2", description="Elements of the monoid of monotone injective cofinite partial selfmaps of N x N.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("validate", help="check an element file")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("eval", help="image of the point (I,J)")
    s.add_argument("file")
    s.add_argument("i", type=int)
    s.add_argument("j", type=int)
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("compose", help="FILE1 then FILE2")
    s.add_argument("file1")
    s.add_argument("file2")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_compose)

    s = sub.add_parser("eq", help="equality of the denoted maps")
    s.add_argument("file1")
    s.add_argument("file2")
    s.set_defaults(func=cmd_eq)

    s = sub.add_parser("classify", help="orientation, n_alpha, unit/idempotent flags and class sizes")
    s.add_argument("file")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser(
        "relate",
        help="decide a Green relation",
        description="Decide a Green relation. 'j' runs the 'd' decider: "
        "the D and J relations coincide in this monoid.",
    )
    s.add_argument("relation", choices=sorted(RELATIONS))
    s.add_argument("file1")
    s.add_argument("file2")
    s.set_defaults(func=cmd_relate)

    s = sub.add_parser("dclass", help="write the members of the D-class")
    s.add_argument("file")
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_dclass)

    s = sub.add_parser("meet", help="meet of two idempotents")
    s.add_argument("file1")
    s.add_argument("file2")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_meet)

    s = sub.add_parser("oracle-check", help="brute-force grid checks")
    s.add_argument("file")
    s.add_argument("--grid", type=int, required=True)
    s.set_defaults(func=cmd_oracle_check)

    s = sub.add_parser("random", help="seeded random element")
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--len", type=int, required=True)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_random)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {getattr(exc, 'path', '-')}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValidationError as exc:
        print(f"invalid element: {getattr(exc, 'path', '-')}: {exc}", file=sys.stderr)
        return EXIT_FALSE
