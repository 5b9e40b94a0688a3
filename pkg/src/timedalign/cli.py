"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 data or parse error, 3 when no case of
the log can be aligned because none matches the model's labels.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import _backend
from .bench import DEFAULT_LENGTHS, run_bench
from .distance import d_N, d_t, d_theta
from .errors import ContractError, DataError
from .eventlog import load_log, timestamp_warnings
from .model import LabeledTrace, load_model
from .rational import format_fraction, format_rational, to_decimal
from .report import RENDERERS, build_report, witness_summary, witness_to_json
from .traces import TimedTrace, parse_trace

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_UNTIMED = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _emit(text: str, output: str | None):
    if output:
        with open(output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_check(args) -> int:
    model = load_model(args.model)
    log = load_log(args.log)
    report = build_report(model, log, with_witness=False)
    _emit(RENDERERS[args.format](report), args.output)
    return EXIT_OK


def cmd_align(args) -> int:
    model = load_model(args.model)
    log = load_log(args.log)
    report = build_report(model, log, with_witness=True)
    _emit(RENDERERS[args.format](report), args.output)
    if report.records and report.alignable == 0:
        print("error: no case matches the model's activity sequence", file=sys.stderr)
        return EXIT_UNTIMED
    return EXIT_OK


_VARIANTS = {"dt": d_t, "dtheta": d_theta, "dn": d_N}
_VARIANT_NAMES = {"dt": "d_t", "dtheta": "d_theta", "dn": "d_N"}


def _parse_inline(text: str, flag: str) -> TimedTrace:
    try:
        return parse_trace(text)
    except ValueError as exc:
        raise DataError(f"{flag}: {exc}") from None


def _pair_from_log(path, c1, c2) -> tuple[LabeledTrace, LabeledTrace]:
    log = load_log(path)
    for cid in (c1, c2):
        if cid not in log.cases:
            raise DataError(f"{path}: no case {cid!r}")
    a, b = log[c1], log[c2]
    if a.activities != b.activities:
        raise DataError(f"cases {c1!r} and {c2!r} have different activity sequences")
    return a, b


def cmd_distance(args) -> int:
    if args.log:
        if args.a or args.b or not args.pair:
            raise UsageError("distance: use either --a/--b or --log with --pair")
        la, lb = _pair_from_log(args.log, *args.pair)
        a, b = la.timestamps, lb.timestamps
        warnings = [f"{la.case_id}: {w}" for w in timestamp_warnings(a)]
        warnings += [f"{lb.case_id}: {w}" for w in timestamp_warnings(b)]
    else:
        if args.a is None or args.b is None or args.pair:
            raise UsageError("distance: use either --a/--b or --log with --pair")
        a, b = _parse_inline(args.a, "--a"), _parse_inline(args.b, "--b")
        warnings = [f"--a: {w}" for w in timestamp_warnings(a)]
        warnings += [f"--b: {w}" for w in timestamp_warnings(b)]
    if len(a) != len(b):
        raise DataError(f"traces have different lengths: {len(a)} vs {len(b)}")
    rep = _VARIANTS[args.variant](a, b)
    for w in warnings:
        print(f"warning: {w}", file=sys.stderr)
    if args.format == "json":
        doc = {
            "variant": rep.variant,
            "distance": format_fraction(rep.value),
            "distance_decimal": to_decimal(rep.value),
            "witness": witness_to_json(rep.witness),
        }
        _emit(json.dumps(doc, indent=2) + "\n", args.output)
    else:
        lines = [f"{_VARIANT_NAMES[args.variant]} = {format_rational(rep.value)}"]
        if args.variant == "dn":
            lines.append(f"witness: {witness_summary(rep.witness)}")
        _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def _parse_lengths(text: str) -> list[int]:
    try:
        out = [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise UsageError(f"bench: --lengths must be comma-separated integers, got {text!r}") from None
    if not out or any(n < 1 for n in out):
        raise UsageError("bench: lengths must be positive")
    return out


def cmd_bench(args) -> int:
    lengths = _parse_lengths(args.lengths)
    if args.repeats < 1:
        raise UsageError("bench: --repeats must be at least 1")
    if args.backend == "both":
        backends = list(_backend.AVAILABLE)
    elif args.backend == "auto":
        backends = [_backend.DEFAULT]
    else:
        if args.backend not in _backend.AVAILABLE:
            raise UsageError(f"bench: backend {args.backend!r} not available (have {', '.join(_backend.AVAILABLE)})")
        backends = [args.backend]
    rows = run_bench(lengths, args.seed, args.repeats, backends)
    if args.format == "json":
        doc = [
            {**r, "distance": format_fraction(r["distance"]), "ratio": r["ratio"]}
            for r in rows
        ]
        _emit(json.dumps(doc, indent=2) + "\n", args.output)
    else:
        lines = [f"{'backend':<9} {'length':>9} {'seconds':>11} {'ratio':>7}  distance"]
        for r in rows:
            ratio = "" if r["ratio"] is None else f"{r['ratio']:.2f}"
            lines.append(
                f"{r['backend']:<9} {r['length']:>9} {r['seconds']:>11.6f} {ratio:>7}  {format_rational(r['distance'])}"
            )
        _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="timedalign", description="Timed conformance checking with mixed moves.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("check", help="untimed and timed conformance verdicts per case")
    p.add_argument("--model", required=True)
    p.add_argument("--log", required=True)
    p.add_argument("--format", choices=sorted(RENDERERS), default="text")
    p.add_argument("--output")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("distance", help="distance between two timed traces")
    p.add_argument("--variant", choices=sorted(_VARIANTS), default="dn")
    p.add_argument("--a", help="comma-separated timestamps")
    p.add_argument("--b", help="comma-separated timestamps")
    p.add_argument("--log")
    p.add_argument("--pair", nargs=2, metavar=("CASE1", "CASE2"))
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--output")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("align", help="closest model trace for every case")
    p.add_argument("--model", required=True)
    p.add_argument("--log", required=True)
    p.add_argument("--format", choices=sorted(RENDERERS), default="text")
    p.add_argument("--output")
    p.set_defaults(func=cmd_align)

    p = sub.add_parser("bench", help="time d_N on random traces of growing length")
    p.add_argument("--lengths", default=",".join(map(str, DEFAULT_LENGTHS)))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--backend", choices=["auto", "compiled", "python", "both"], default="auto")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--output")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "func", None):
            raise UsageError(parser.format_usage().strip())
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except (DataError, ContractError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
