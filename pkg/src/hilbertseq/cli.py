"""Command-line entry point.

Exit codes: 0 pass, 1 predicate failure or constructor rejection, 2 parse
error, 3 enumeration node cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Optional, Sequence

from . import family, gorenstein, level, macaulay, seqcore
from .seqcore import HilbertSeq

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_CAP = 3

MAX_NODES_ENV = "HILBERTSEQ_MAX_NODES"
_SAFE_INT = 2**53 - 1

FLAGS: dict[str, Callable[[HilbertSeq], bool]] = {
    "symmetric": seqcore.is_symmetric,
    "unimodal": seqcore.is_unimodal,
    "o_sequence": macaulay.is_o_sequence,
    "si": gorenstein.is_si_sequence,
    "cod3_gorenstein": gorenstein.is_cod3_gorenstein,
    "cod2_level": level.is_cod2_level,
    "decreasing_type": level.is_admissible_decreasing_type,
    "log_concave": seqcore.is_log_concave,
}


class ParseError(ValueError):
    pass


@dataclass
class CheckReport:
    sequence: HilbertSeq
    length: int
    socle_degree: int
    flags: dict[str, bool] = field(default_factory=dict)
    violations: list[tuple[int, int]] = field(default_factory=list)
    first_o_failure: Optional[int] = None

    @classmethod
    def of(cls, H: Sequence[int]) -> "CheckReport":
        H = seqcore.canonical(H)
        if any(h < 0 for h in H):
            raise ParseError("entries must be non-negative")
        lc = seqcore.log_concavity_report(H)
        return cls(
            sequence=H,
            length=seqcore.seq_length(H),
            socle_degree=seqcore.socle_degree(H),
            flags={name: fn(H) for name, fn in FLAGS.items()},
            violations=[(i, lc.defects[i]) for i in lc.violations],
            first_o_failure=macaulay.first_o_failure(H),
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "sequence": [_num(h) for h in self.sequence],
            "length": _num(self.length),
            "socle_degree": self.socle_degree,
            "flags": dict(self.flags),
            "violations": [[i, _num(v)] for i, v in self.violations],
            "first_o_failure": self.first_o_failure,
        }


def _num(n: int) -> int | str:
    # big integers go out as strings so JSON consumers keep them exact
    return n if -_SAFE_INT <= n <= _SAFE_INT else str(n)


def _dump(obj: Any, compact: bool = False) -> str:
    if compact:
        return json.dumps(obj, separators=(",", ":"))
    return json.dumps(obj, indent=2)


def _parse(text: str) -> HilbertSeq:
    try:
        return seqcore.parse_sequence(text)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _read_source(arg: str) -> list[str]:
    """Lines of ``@file`` or the literal itself as a single line."""
    if arg.startswith("@"):
        try:
            return Path(arg[1:]).read_text().splitlines()
        except OSError as exc:
            raise ParseError(f"cannot read {arg[1:]}: {exc.strerror}") from None
    return [arg]


# -- subcommands ----------------------------------------------------------------


def cmd_check(args: argparse.Namespace) -> int:
    if args.input.startswith("@"):
        return _check_batch(args)
    H = _parse(args.input)
    report = CheckReport.of(H)
    print(_dump(report.to_dict()))
    if args.assert_flag:
        return EXIT_OK if report.flags[args.assert_flag] else EXIT_FAIL
    return EXIT_OK


def _check_batch(args: argparse.Namespace) -> int:
    code = EXIT_OK
    for lineno, line in enumerate(_read_source(args.input), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        try:
            report = CheckReport.of(_parse(line))
        except ParseError as exc:
            print(_dump({"line": lineno, "error": str(exc)}, compact=True))
            code = EXIT_PARSE
            continue
        record = {"line": lineno, **report.to_dict()}
        print(_dump(record, compact=True))
        if args.assert_flag and not report.flags[args.assert_flag] and code == EXIT_OK:
            code = EXIT_FAIL
    return code


def cmd_gen(args: argparse.Namespace) -> int:
    try:
        if args.kind == "base":
            H = family.build(args.delta, args.k, args.b)
        elif args.kind == "extended":
            H = family.build_extended(args.delta, args.k, args.b, args.ell)
        elif args.kind == "lengthen":
            lines = [ln for ln in _read_source(args.sequence) if ln.strip()]
            if not lines:
                raise ParseError("no sequence given")
            base = _parse(lines[0])
            tail = _parse(args.tail) if args.tail.strip() else ()
            H = family.lengthen_with_tail(base, tail)
        else:
            H = level.compressed_level(args.r, args.type, args.socle)
    except ParseError:
        raise
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    print(seqcore.format_sequence(H))
    if args.report:
        print(_dump(CheckReport.of(H).to_dict()))
    return EXIT_OK


def _max_nodes() -> int:
    raw = os.environ.get(MAX_NODES_ENV)
    if not raw:
        return gorenstein.DEFAULT_MAX_NODES
    try:
        return int(raw)
    except ValueError:
        raise ParseError(f"{MAX_NODES_ENV} is not an integer: {raw!r}") from None


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        report = gorenstein.verify_logconcavity_class(
            args.codim, args.max_socle, jobs=args.jobs, max_nodes=_max_nodes()
        )
    except gorenstein.EnumerationAbandoned as exc:
        print(_dump({"error": str(exc), "partial_count": exc.partial_count}))
        return EXIT_CAP
    print(_dump(report.to_dict(include_elapsed=args.timing)))
    if args.codim <= 3 and not report.ok:
        return EXIT_FAIL
    return EXIT_OK


def _range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None
    if b < a:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(a, b + 1)


def cmd_scan(args: argparse.Namespace) -> int:
    rows = family.scan_params(args.delta_range, args.k_range)
    sys.stdout.write(family.scan_csv(rows))
    return EXIT_OK


# -- parser ---------------------------------------------------------------------


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {n}")
    return n


def _nonneg(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hilbertseq",
        description="Macaulay, SI, level and log-concavity checks on integer sequences.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="report every predicate on a sequence")
    check.add_argument("input", help='sequence literal like "1,3,6,10,6,2", or @file (one per line)')
    check.add_argument("--assert", dest="assert_flag", choices=sorted(FLAGS))
    check.set_defaults(func=cmd_check)

    gen = sub.add_parser("gen", help="construct a sequence")
    kinds = gen.add_subparsers(dest="kind", required=True)
    for name in ("base", "extended"):
        p = kinds.add_parser(name)
        p.add_argument("--delta", type=_positive, required=True)
        p.add_argument("--k", type=_positive, required=True)
        p.add_argument("--b", type=_positive, required=True)
        if name == "extended":
            p.add_argument("--ell", type=_nonneg, required=True)
        p.add_argument("--report", action="store_true")
    p = kinds.add_parser("lengthen")
    p.add_argument("sequence", help="SI sequence literal or @file")
    p.add_argument("--tail", required=True, help='entries to append, e.g. "16,17,8,7"')
    p.add_argument("--report", action="store_true")
    p = kinds.add_parser("compressed")
    p.add_argument("--r", type=_positive, required=True)
    p.add_argument("--type", type=_positive, required=True)
    p.add_argument("--socle", type=_positive, required=True)
    p.add_argument("--report", action="store_true")
    gen.set_defaults(func=cmd_gen)

    verify = sub.add_parser("verify", help="exhaustive log-concavity check of SI sequences")
    verify.add_argument("--codim", type=_positive, required=True)
    verify.add_argument("--max-socle", type=_positive, required=True)
    verify.add_argument("--jobs", type=_positive, default=1)
    verify.add_argument("--timing", action="store_true", help="include elapsed seconds")
    verify.set_defaults(func=cmd_verify)

    scan = sub.add_parser("scan", help="CSV sweep of family parameters")
    scan.add_argument("--delta-range", type=_range, required=True)
    scan.add_argument("--k-range", type=_range, required=True)
    scan.set_defaults(func=cmd_scan)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
