"""Command line interface.

Exit codes: 0 success, 1 well-formed input that fails verification,
2 malformed input or usage error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Sequence, TextIO

from . import formats
from .formats import ParseError
from .hadamard import is_hadamard, williamson_array
from .search import DEFAULT_LIMIT, SearchLimitError, search_williamson
from .seqcore import OddOrderError, SequenceError, paf_spectrum
from .williamson import NotWilliamsonError, double, verify_quad

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _read(path: str | None, stdin: TextIO) -> str:
    if path is None or path == "-":
        return stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def cmd_verify(args, stdin, out, err) -> int:
    quads = formats.parse_quads(_read(args.input, stdin))
    ok = True
    for q in quads:
        report = verify_quad(q, full_range=args.full_range)
        ok &= report.is_williamson
        if args.machine:
            out.write(formats.dumps(formats.verification_document(q, report)))
        elif not args.quiet:
            out.write(formats.format_verification(q, report))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_double(args, stdin, out, err) -> int:
    quads = formats.parse_quads(_read(args.input, stdin))
    doubled, status = [], EXIT_OK
    for i, q in enumerate(quads, start=1):
        try:
            doubled.append(double(q))
        except (OddOrderError, NotWilliamsonError) as exc:
            err.write(f"quad {i} (order {q.order}): {exc}\n")
            status = EXIT_FAIL
    if doubled:
        if args.machine:
            out.write(formats.dumps(formats.quads_document(doubled)))
        else:
            out.write(formats.format_quads(doubled))
    return status


def cmd_search(args, stdin, out, err) -> int:
    report = search_williamson(
        args.n, prune=not args.no_prune, jobs=args.jobs, limit=args.limit
    )
    if args.machine:
        out.write(formats.dumps(formats.report_document(report)))
    elif args.quiet:
        out.write(formats.format_quads(report.normalized_quads))
    else:
        out.write(formats.format_report(report))
    return EXIT_OK


def cmd_hadamard(args, stdin, out, err) -> int:
    quads = formats.parse_quads(_read(args.input, stdin))
    mats, status = [], EXIT_OK
    for i, q in enumerate(quads, start=1):
        try:
            m = williamson_array(q)
        except NotWilliamsonError as exc:
            err.write(f"quad {i} (order {q.order}): {exc}\n")
            status = EXIT_FAIL
            continue
        if not is_hadamard(m):
            err.write(f"quad {i}: array of order {len(m)} is not Hadamard\n")
            status = EXIT_FAIL
            continue
        mats.append(m)
    if args.machine:
        out.write("".join(formats.dumps(formats.matrix_document(m)) for m in mats))
    else:
        out.write(formats.format_matrices(mats))
    return status


def cmd_spectrum(args, stdin, out, err) -> int:
    text = args.sequence if args.sequence is not None else stdin.read()
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    if not lines:
        raise ParseError("no sequence given")
    for lineno, line in enumerate(lines, start=1):
        spec = paf_spectrum(formats.parse_sequence(line, lineno))
        if args.machine:
            out.write(formats.dumps(formats.spectrum_document(spec)))
        else:
            out.write(f"{spec}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--machine", action="store_true", default=argparse.SUPPRESS,
                        help="emit JSON documents, one per line")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS,
                        help="suppress informational output")

    parser = argparse.ArgumentParser(
        prog="williamson",
        description="Williamson sequences: verify, double, search, expand to Hadamard.",
        parents=[common],
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="check quads")
    p.add_argument("input", nargs="?", help="quad file (default: stdin)")
    p.add_argument("--full-range", action="store_true",
                   help="check every shift 1..n-1 instead of 1..n//2")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("double", parents=[common], help="order n -> 2n")
    p.add_argument("input", nargs="?")
    p.set_defaults(func=cmd_double)

    p = sub.add_parser("search", parents=[common], help="exhaustive search at odd order n")
    p.add_argument("n", type=int)
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT,
                   help="largest order allowed (default %(default)s)")
    p.add_argument("--no-prune", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("hadamard", parents=[common], help="Williamson array of order 4n")
    p.add_argument("input", nargs="?")
    p.set_defaults(func=cmd_hadamard)

    p = sub.add_parser("spectrum", parents=[common], help="PAF values for s = 0..n-1")
    p.add_argument("sequence", nargs="?", help="'+'/'-' string (default: stdin)")
    p.set_defaults(func=cmd_spectrum)
    return parser


def main(
    argv: Sequence[str] | None = None,
    stdin: TextIO | None = None,
    stdout: TextIO | None = None,
    stderr: TextIO | None = None,
) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    args.machine = getattr(args, "machine", False)
    args.quiet = getattr(args, "quiet", False)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args, stdin, stdout, stderr)
    except (ParseError, SequenceError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (OddOrderError, SearchLimitError) as exc:
        # only search reaches here; double handles its own order errors
        stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except OSError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
