"""Command-line driver: goldbach-lab <verify|audit|census|dc|sieve|partition>.

Exit codes: 0 on success (failing relations are data, not errors), 1 on
internal error, 2 on invalid arguments or domain errors.  JSON output is
byte-identical for identical query parameters, whatever the worker count.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from . import serialize
from .audit import audit_range
from .census import census_range
from .dc import dc_min, goldbach_pairs
from .errors import GoldbachLabError
from .primes import sieve_segment
from .rowrange import Range, partition_rows
from .sweep import DEFAULT_CHECKPOINT_STRIDE, run_verify


def _natural(text: str) -> int:
    # int() already accepts underscore separators: 10_000_000
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {text!r}")
    return value


def _emit(text: str, path: Optional[str]) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _add_common(parser: argparse.ArgumentParser, formats=serialize.FORMATS) -> None:
    parser.add_argument("--format", choices=formats, default="text")
    parser.add_argument("--output", metavar="PATH", default=None)


def cmd_verify(args: argparse.Namespace) -> int:
    summary = run_verify(
        args.from_,
        args.to,
        workers=args.workers,
        checkpoint_path=args.checkpoint,
        checkpoint_stride=args.checkpoint_stride,
    )
    if args.format == "json":
        env = serialize.envelope(
            "verify",
            {"from": summary.from_even, "to": summary.to_even},
            serialize.sweep_payload(summary),
        )
        _emit(serialize.to_json(env), args.output)
        print(
            f"verified {summary.verified} evens in {summary.elapsed_seconds:.2f} s",
            file=sys.stderr,
        )
    else:
        _emit(serialize.sweep_text(summary), args.output)
    return 0


def cmd_audit(args: argparse.Namespace) -> int:
    result = audit_range(
        Range(args.from_, args.to), args.row_width, workers=args.workers
    )
    if args.format == "json":
        env = serialize.envelope(
            "audit",
            {"from": args.from_, "to": args.to, "width": args.row_width},
            serialize.audit_payload(result),
        )
        text = serialize.to_json(env)
    elif args.format == "csv":
        text = serialize.audit_csv(result)
    else:
        text = serialize.audit_text(result)
    _emit(text, args.output)
    return 0


def cmd_census(args: argparse.Namespace) -> int:
    items = census_range(Range(args.from_, args.to), args.row_width)
    if args.format == "json":
        env = serialize.envelope(
            "census",
            {"from": args.from_, "to": args.to, "width": args.row_width},
            serialize.census_payload(items),
        )
        text = serialize.to_json(env)
    elif args.format == "csv":
        text = serialize.census_csv(items)
    else:
        text = serialize.census_text(items)
    _emit(text, args.output)
    return 0


def cmd_dc(args: argparse.Namespace) -> int:
    result = dc_min(args.target)
    pairs = goldbach_pairs(args.target) if args.pairs else None
    if args.format == "json":
        env = serialize.envelope(
            "dc",
            {"target": args.target, "pairs": bool(args.pairs)},
            serialize.dc_payload(result, pairs),
        )
        text = serialize.to_json(env)
    else:
        text = serialize.dc_text(result, pairs)
    _emit(text, args.output)
    return 0


def cmd_sieve(args: argparse.Namespace) -> int:
    seg = sieve_segment(args.from_, args.to)
    payload = serialize.segment_payload(seg, include_primes=args.list)
    if args.format == "json":
        env = serialize.envelope("sieve", {"from": args.from_, "to": args.to}, payload)
        text = serialize.to_json(env)
    else:
        text = f"primes in [{seg.lo}, {seg.hi}]: {seg.count()}\n"
        if args.list:
            text += " ".join(str(p) for p in seg.primes()) + "\n"
    _emit(text, args.output)
    return 0


def cmd_partition(args: argparse.Namespace) -> int:
    rows = partition_rows(Range(args.from_, args.to), args.row_width)
    if args.format == "json":
        env = serialize.envelope(
            "partition",
            {"from": args.from_, "to": args.to, "width": args.row_width},
            serialize.partition_payload(rows, args.row_width),
        )
        text = serialize.to_json(env)
    else:
        text = "\n".join(f"row {r.start}..{r.end}" for r in rows) + "\n"
    _emit(text, args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="goldbach-lab",
        description="Verify two-prime decompositions and audit row relation sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check every even in [from, to] splits into two primes")
    p.add_argument("--from", dest="from_", type=_natural, required=True)
    p.add_argument("--to", type=_natural, required=True)
    p.add_argument("--workers", type=_natural, default=1)
    p.add_argument("--checkpoint", metavar="PATH", default=None)
    p.add_argument(
        "--checkpoint-stride",
        type=_natural,
        default=DEFAULT_CHECKPOINT_STRIDE,
        help="evens between checkpoint writes",
    )
    _add_common(p, formats=("json", "text"))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("audit", help="evaluate the relation catalog on every row")
    p.add_argument("--from", dest="from_", type=_natural, required=True)
    p.add_argument("--to", type=_natural, required=True)
    p.add_argument("--row-width", type=_natural, required=True)
    p.add_argument("--workers", type=_natural, default=1)
    _add_common(p)
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("census", help="count evens, odds, and primes per row")
    p.add_argument("--from", dest="from_", type=_natural, required=True)
    p.add_argument("--to", type=_natural, required=True)
    p.add_argument("--row-width", type=_natural, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("dc", help="minimal prime-summand count for one target")
    p.add_argument("target", type=_natural)
    p.add_argument("--pairs", action="store_true", help="also list all prime pairs")
    _add_common(p, formats=("json", "text"))
    p.set_defaults(func=cmd_dc)

    p = sub.add_parser("sieve", help="sieve one segment and report its primes")
    p.add_argument("--from", dest="from_", type=_natural, required=True)
    p.add_argument("--to", type=_natural, required=True)
    p.add_argument("--list", action="store_true", help="include the full prime list")
    _add_common(p, formats=("json", "text"))
    p.set_defaults(func=cmd_sieve)

    p = sub.add_parser("partition", help="split a range into equal-width rows")
    p.add_argument("--from", dest="from_", type=_natural, required=True)
    p.add_argument("--to", type=_natural, required=True)
    p.add_argument("--row-width", type=_natural, required=True)
    _add_common(p, formats=("json", "text"))
    p.set_defaults(func=cmd_partition)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GoldbachLabError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
