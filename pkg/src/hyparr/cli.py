"""Command line: ``hyparr analyze``, ``hyparr family``, ``hyparr version``.

Exit codes: 0 success, 1 validation error, 2 I/O error.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .arrangement import FAMILIES, ArrangementError
from .exactmath import is_prime
from .files import ArrangementFile, dumps, family_arrangement, load, to_dict, write_atomic
from .pipeline import analyze, report_text

EXIT_OK, EXIT_INVALID, EXIT_IO = 0, 1, 2


def _family_tag(name: str, n: int | None, m: int | None) -> str:
    if name == "pencil":
        if n is None:
            raise ArrangementError("pencil requires --n")
        return f"pencil({n})"
    if name == "monomial":
        if m is None:
            raise ArrangementError("monomial requires --m")
        return f"monomial({m})"
    if name in ("braid3", "hessian"):
        return name
    raise ArrangementError(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}")


def _primes(text: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad prime list {text!r}") from None


class _Parser(argparse.ArgumentParser):
    # usage errors are validation errors; exit code 2 is reserved for I/O
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hyparr", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="compute invariants and the formality verdict")
    p.add_argument("input", nargs="?", help="arrangement JSON file")
    p.add_argument("--family", help="built-in family instead of a file: " + ", ".join(FAMILIES))
    p.add_argument("--n", type=int, help="pencil size")
    p.add_argument("--m", type=int, help="monomial parameter")
    p.add_argument("--primes", type=_primes, default=[2, 3, 5], help="comma-separated primes (default 2,3,5)")
    p.add_argument("--enumerate", dest="enumerate", action="store_true", default=True)
    p.add_argument("--no-enumerate", dest="enumerate", action="store_false", help="skip the multinet search")
    p.add_argument("--max-k", type=int, choices=(3, 4), help="largest net size searched (default 4 when 4 | n)")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json")
    fmt.add_argument("--text", dest="fmt", action="store_const", const="text")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--figures", metavar="DIR", help="also render a summary PNG into DIR")

    f = sub.add_parser("family", help="list or emit built-in arrangements")
    fsub = f.add_subparsers(dest="action", required=True)
    fsub.add_parser("list")
    e = fsub.add_parser("emit")
    e.add_argument("tag")
    e.add_argument("--n", type=int)
    e.add_argument("--m", type=int)
    e.add_argument("--out")

    sub.add_parser("version")
    return parser


def _emit(text: str, out: str | None):
    if out:
        write_atomic(out, text)
    else:
        sys.stdout.write(text)


def cmd_analyze(args) -> int:
    if (args.input is None) == (args.family is None):
        raise ArrangementError("give exactly one of an input file or --family")
    if args.family:
        tag = _family_tag(args.family, args.n, args.m)
        arr = family_arrangement(tag)
        af = ArrangementFile(arr.name, arrangement=arr, family=tag)
    else:
        af = load(args.input)
        tag = af.family
    for p in args.primes:
        if not is_prime(p):
            raise ArrangementError(f"{p} is not prime")
    inc = af.incidence()
    result = analyze(inc, af.name, family_tag=tag, primes=args.primes,
                     enumerate_multinets=args.enumerate, max_k=args.max_k, rank=af.rank())
    report = result.report()
    text = report_text(report) if args.fmt == "text" else dumps(report.to_dict())
    _emit(text, args.out)
    if args.figures:
        from .plotting import render_summary

        path = render_summary(result, args.figures)
        print(f"figure: {path}", file=sys.stderr)
    return EXIT_OK


def cmd_family(args) -> int:
    if args.action == "list":
        for tag, desc in FAMILIES.items():
            print(f"{tag:<10} {desc}")
        return EXIT_OK
    tag = _family_tag(args.tag, args.n, args.m)
    arr = family_arrangement(tag)
    _emit(dumps(to_dict(ArrangementFile(arr.name, arrangement=arr, family=tag))), args.out)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # usage errors and --help
        return exc.code
    try:
        if args.command == "analyze":
            return cmd_analyze(args)
        if args.command == "family":
            return cmd_family(args)
        print(__version__)
        return EXIT_OK
    except (ArrangementError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
