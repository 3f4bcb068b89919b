"""``vedicmul`` command line.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import contextlib
import json
import os
import random
import sys
from typing import Sequence

from . import bitnum
from .bitnum import BitNat, SignedInt, schoolbook_mul
from .decimal_demo import (
    PAPER_CASES,
    DecimalBase,
    nikhilam_decimal,
    render_decimal_step,
)
from .nikhilam import nikhilam_mul, nikhilam_mul_signed, render_trace, trace_records
from .profiler import (
    CENSUS_MAX_BITS,
    DEFAULT_CORPUS_CAP,
    CorpusTooLarge,
    census,
    census_sampled,
    emit_csv,
    profile_range,
)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
MAX_EXHAUSTIVE_BITS = 12
CAP_ENV = "NIKHILAM_CORPUS_CAP"


class UsageError(Exception):
    pass


def _parse_operand(text: str, radix: int, signed: bool) -> SignedInt:
    negative = False
    if text.startswith("-"):
        if not signed:
            raise UsageError(f"negative operand {text!r} needs --signed")
        negative, text = True, text[1:]
    try:
        mag = bitnum.parse(text, radix)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return SignedInt(negative, mag)


def _operands(args, count: int = 2) -> list[SignedInt]:
    if len(args.operands) != count:
        raise UsageError(f"{args.command} takes exactly {count} operands")
    return [_parse_operand(t, args.radix, args.signed) for t in args.operands]


def _signed_text(v: SignedInt, radix: int) -> str:
    return ("-" if v.negative else "") + bitnum.format(v.magnitude, radix)


@contextlib.contextmanager
def _sink(path: str | None):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            yield fh


def cmd_mul(args, out) -> int:
    x, y = _operands(args)
    product = nikhilam_mul_signed(x, y)
    out.write(_signed_text(product, args.radix) + "\n")
    return EXIT_OK


def cmd_trace(args, out) -> int:
    x, y = _operands(args)
    _, trace = nikhilam_mul(x.magnitude, y.magnitude)
    if args.format == "records":
        for rec in trace_records(trace, args.radix):
            out.write(json.dumps(rec) + "\n")
        return EXIT_OK
    text = render_trace(trace)
    if x.negative or y.negative:
        product = nikhilam_mul_signed(x, y)
        text += f"{x.value} × {y.value} = {product.value}\n"
    out.write(text)
    return EXIT_OK


def _pairs(args):
    if args.exhaustive_bits is not None:
        n = 1 << args.exhaustive_bits
        for a in range(n):
            for b in range(n):
                yield a, b
        return
    rng = random.Random(args.seed)
    for _ in range(args.random):
        a = rng.getrandbits(rng.randint(1, args.max_bits))
        b = rng.getrandbits(rng.randint(1, args.max_bits))
        yield a, b


def cmd_verify(args, out) -> int:
    if (args.exhaustive_bits is None) == (args.random is None):
        raise UsageError("verify needs exactly one of --exhaustive-bits or --random")
    if args.exhaustive_bits is not None and not 0 <= args.exhaustive_bits <= MAX_EXHAUSTIVE_BITS:
        raise UsageError(f"--exhaustive-bits must be in 0..{MAX_EXHAUSTIVE_BITS}")
    if args.random is not None and (args.random < 1 or args.max_bits < 1):
        raise UsageError("--random and --max-bits must be positive")
    count = 0
    for a, b in _pairs(args):
        x, y = BitNat(a), BitNat(b)
        got, _ = nikhilam_mul(x, y)
        want = schoolbook_mul(x, y)
        if got != want:
            out.write(
                f"MISMATCH {a} × {b}: nikhilam={got.value} oracle={want.value}\n"
            )
            return EXIT_FAILED
        count += 1
    out.write(f"{count} pairs OK\n")
    return EXIT_OK


def _corpus_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    if raw is None:
        return DEFAULT_CORPUS_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise UsageError(f"{CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise UsageError(f"{CAP_ENV} must be positive")
    return cap


def cmd_profile(args, out) -> int:
    lo = _parse_operand(args.lo, args.radix, False).magnitude
    hi = _parse_operand(args.hi, args.radix, False).magnitude
    if hi < lo:
        raise UsageError(f"--hi {args.hi} is below --lo {args.lo}")
    try:
        records = profile_range(lo, hi, cap=_corpus_cap(), jobs=args.jobs)
    except CorpusTooLarge as exc:
        raise UsageError(f"{exc} (set {CAP_ENV} to raise it)") from None
    emit_csv(records, out, kind="profile")
    return EXIT_OK


def cmd_census(args, out) -> int:
    if args.samples is not None:
        if args.b_max < 2:
            raise UsageError("--b-max must be >= 2")
        if args.samples < 1:
            raise UsageError("--samples must be positive")
        rows = census_sampled(range(2, args.b_max + 1), args.samples, args.seed)
    else:
        if not 2 <= args.b_max <= CENSUS_MAX_BITS:
            raise UsageError(
                f"--b-max must be in 2..{CENSUS_MAX_BITS} for an exhaustive census"
                " (use --samples beyond that)"
            )
        rows = census(args.b_max)
        bad = [r.b for r in rows if r.worst_case_depth != (r.b + 1) // 2]
        if bad:
            emit_csv(rows, out, kind="census")
            sys.stderr.write(f"worst-case depth differs from ceil(b/2) for b={bad}\n")
            return EXIT_FAILED
    emit_csv(rows, out, kind="census")
    return EXIT_OK


def cmd_demo_decimal(args, out) -> int:
    if args.all_paper_cases:
        if args.operands or args.base:
            raise UsageError("--all-paper-cases takes no operands or --base")
        ok = True
        for i, (label, n1, n2, base, answer) in enumerate(PAPER_CASES):
            step = nikhilam_decimal(n1, n2, base)
            if i:
                out.write("\n")
            out.write(f"Example {label}: {n1} × {n2}\n")
            out.write(render_decimal_step(step))
            ok &= step.result == answer
        return EXIT_OK if ok else EXIT_FAILED

    if len(args.operands) != 2 or args.base is None:
        raise UsageError("demo-decimal needs two operands and --base, or --all-paper-cases")
    try:
        n1, n2 = (int(bitnum.parse(t, 10)) for t in args.operands)
        base = DecimalBase.parse(args.base)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.write(render_decimal_step(nikhilam_decimal(n1, n2, base)))
    return EXIT_OK


COMMANDS = {
    "mul": cmd_mul,
    "trace": cmd_trace,
    "verify": cmd_verify,
    "profile": cmd_profile,
    "census": cmd_census,
    "demo-decimal": cmd_demo_decimal,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vedicmul",
        description="Recursive radix-2 Nikhilam multiplication toolkit.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, operands=True):
        p.add_argument("-o", "--output", help="write to this file instead of stdout")
        p.add_argument("--radix", type=int, choices=bitnum.RADIXES, default=10,
                       help="numeral radix for operands and output (default 10)")
        if operands:
            p.add_argument("--signed", action="store_true",
                           help="allow negative operands (put them after --)")
            p.add_argument("operands", nargs="*")

    common(sub.add_parser("mul", help="multiply two numbers"))

    p = sub.add_parser("trace", help="show the recursion trace")
    common(p)
    p.add_argument("--format", choices=("text", "records"), default="text",
                   help="records: one JSON object per line")

    p = sub.add_parser("verify", help="check against the schoolbook oracle")
    common(p, operands=False)
    p.add_argument("--exhaustive-bits", type=int,
                   help=f"all pairs below 2**N (N <= {MAX_EXHAUSTIVE_BITS})")
    p.add_argument("--random", type=int, metavar="TRIALS")
    p.add_argument("--max-bits", type=int, default=64)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("profile", help="per-value recursion counts as CSV")
    common(p, operands=False)
    p.add_argument("--lo", required=True)
    p.add_argument("--hi", required=True)
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("census", help="worst-case depth census as CSV")
    common(p, operands=False)
    p.add_argument("--b-max", type=int, required=True)
    p.add_argument("--samples", type=int,
                   help="sample this many values per bit length instead of enumerating")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1,
                   help="accepted for symmetry; the census is vectorised")

    p = sub.add_parser("demo-decimal", help="single-step decimal worked table")
    p.add_argument("-o", "--output")
    p.add_argument("--base", help='e.g. "100" or "5x10"')
    p.add_argument("--all-paper-cases", action="store_true",
                   help="print the four classical cases and check their answers")
    p.add_argument("operands", nargs="*")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        with _sink(args.output) as out:
            return COMMANDS[args.command](args, out)
    except UsageError as exc:
        parser.exit(EXIT_USAGE, f"{parser.prog} {args.command}: error: {exc}\n")
    except OSError as exc:
        parser.exit(EXIT_USAGE, f"{parser.prog}: error: {exc}\n")


if __name__ == "__main__":
    sys.exit(main())
