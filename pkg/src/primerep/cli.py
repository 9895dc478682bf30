"""Command-line front end.

Exit codes: 0 success, 1 precision or verification failure, 2 bad arguments.
JSON output has the shape {"command", "inputs", "status", "result"} with
primes as decimal strings and widths as "numerator/denominator".
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time

from . import kernels
from .constants import (
    ConstantSpec,
    Family,
    TraceStatus,
    backward_refine,
    constant_digits,
    decimal_window,
    digits_of_precision,
    forward_generate,
    required_terms,
    series_enclosure,
)
from .enclosure import AmbiguousEnclosure, Enclosure, certified_decimal
from .exact import fraction_str
from .mills_toth import MILLS, TOTH, InsufficientDepth, mills_constant, toth_constant, tower
from .table import build_table, load_fixture, render_csv
from .verify import run_all

OK, FAILED, BAD_ARGS = 0, 1, 2


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _family(text: str) -> Family:
    try:
        return Family.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit(args, status: str, result: dict, text: str) -> None:
    if args.format == "json":
        inputs = {
            k: (v.name.lower() if isinstance(v, Family) else v)
            for k, v in vars(args).items()
            if k not in ("func", "command", "format")
        }
        record = {"command": args.command, "inputs": inputs, "status": status, "result": result}
        print(json.dumps(record, indent=2))
    else:
        print(text)


def _enclosure_json(e: Enclosure) -> dict:
    return {"lo": fraction_str(e.lo), "hi": fraction_str(e.hi), "width": fraction_str(e.width)}


def _approx(q) -> str:
    # log10 of a positive Fraction without float overflow
    exp = math.log10(q.numerator) - math.log10(q.denominator)
    return f"~1e{exp:.1f}"


def cmd_digits(args) -> int:
    spec = ConstantSpec(args.family, args.index)
    digits = constant_digits(spec, args.digits, args.rounding)
    _emit(args, "ok", {"symbol": f"{spec.family.symbol}_{spec.index}", "digits": digits}, digits)
    return OK


def cmd_table(args) -> int:
    rows = build_table(args.rows, args.digits, args.rounding)
    if args.format == "csv":
        sys.stdout.write(render_csv(rows))
        return OK
    text = "\n".join(
        f"{r.n:>4}  {r.f:<24} {r.h:<24} {r.p}" for r in rows
    )
    header = f"{'n':>4}  {'f_n':<24} {'h_n':<24} p_n\n"
    result = {"rows": [{"n": r.n, "f_n": r.f, "h_n": r.h, "p_n": str(r.p)} for r in rows]}
    _emit(args, "ok", result, header + text)
    return OK


def cmd_generate(args) -> int:
    spec = ConstantSpec(args.family, 1)
    start = decimal_window(spec, args.seed_digits)
    trace = forward_generate(spec, start, args.count)
    complete = trace.status is TraceStatus.COMPLETED and len(trace.steps) == args.count
    status = "completed" if complete else "precision-exhausted"
    lines = [f"{s.index:>4}  {s.prime:>8}  width {_approx(s.width)}" for s in trace.steps]
    lines.append(f"status: {status}" + ("" if complete else f" at index {trace.exhausted_at}"))
    result = {
        "start": _enclosure_json(start),
        "steps": [
            {"index": s.index, "prime": str(s.prime), "width": fraction_str(s.width)}
            for s in trace.steps
        ],
        "primes": [str(p) for p in trace.primes],
        "exhausted_at": trace.exhausted_at,
    }
    _emit(args, status, result, "\n".join(lines))
    return OK if complete else FAILED


def cmd_verify(args) -> int:
    fixture = None if args.no_fixture else load_fixture(args.fixture)
    results = run_all(args.max_n, fixture)
    ok = all(r.passed for r in results)
    lines = [
        f"{'PASS' if r.passed else 'FAIL'}  {r.name:<30} checked={r.checked} failures={len(r.failures)}"
        for r in results
    ]
    lines.append("all checks passed" if ok else "verification FAILED")
    result = {
        "checks": [
            {"name": r.name, "passed": r.passed, "checked": r.checked,
             "failures": [str(f) for f in r.failures[:20]]}
            for r in results
        ]
    }
    _emit(args, "pass" if ok else "fail", result, "\n".join(lines))
    return OK if ok else FAILED


def _tower_command(args, kind: str) -> int:
    tw = tower(kind, args.depth)
    constant = mills_constant if kind == MILLS else toth_constant
    primes = [{"prime": str(q), "verdict": v.value} for q, v in zip(tw.primes, tw.verdicts)]
    lines = [f"{i:>3}  {q}  [{v.value}]" for i, (q, v) in enumerate(zip(tw.primes, tw.verdicts), 1)]
    try:
        e = constant(args.depth, args.digits)
        digits = certified_decimal(e, args.digits)
    except (InsufficientDepth, AmbiguousEnclosure) as exc:
        lines.append(f"error: {exc}")
        _emit(args, "insufficient-depth", {"tower": primes, "error": str(exc)}, "\n".join(lines))
        return FAILED
    lines.append(f"{'A' if kind == MILLS else 'B'} = {digits}")
    _emit(args, "ok", {"tower": primes, "digits": digits, "enclosure": _enclosure_json(e)},
          "\n".join(lines))
    return OK


def cmd_mills(args) -> int:
    return _tower_command(args, MILLS)


def cmd_toth(args) -> int:
    return _tower_command(args, TOTH)


def _digit_count(x: int) -> int:
    return max(1, int(abs(x).bit_length() * math.log10(2)) + 1)


def cmd_bench(args) -> int:
    spec = ConstantSpec(args.family, 1)
    precision = digits_of_precision(args.index_count)
    m = required_terms(spec, precision + 2)
    best, trace, e = math.inf, None, None
    for _ in range(args.repeat):
        t0 = time.perf_counter()
        if args.mode == "series":
            e = series_enclosure(spec, m)
        else:
            e = backward_refine(spec, spec.index + m + 1)
            if args.mode == "forward":
                trace = forward_generate(spec, e, args.index_count)
        best = min(best, time.perf_counter() - t0)
    peak = max(_digit_count(e.hi.numerator), _digit_count(e.hi.denominator))
    if trace is not None:
        for s in trace.steps:
            peak = max(peak, _digit_count(s.enclosure.hi.numerator),
                       _digit_count(s.enclosure.hi.denominator))
    result = {
        "mode": args.mode,
        "index_count": args.index_count,
        "digits_of_precision": precision,
        "terms": m,
        "wall_time_s": best,
        "peak_digits": peak,
        "kernel_backend": kernels.BACKEND,
        "enclosure": _enclosure_json(e),
    }
    status = "ok"
    if trace is not None:
        result["primes_certified"] = len(trace.steps)
        if trace.status is not TraceStatus.COMPLETED:
            status = "precision-exhausted"
    text = (
        f"mode={args.mode} N={args.index_count} digits-of-precision={precision} "
        f"terms={m} time={best * 1e3:.3f} ms peak-digits={peak} backend={kernels.BACKEND}"
    )
    _emit(args, status, result, text)
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="primerep",
        description="Certified digits and prime regeneration for the f_n / h_n "
        "prime-representing constants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, formats=("text", "json")):
        p = sub.add_parser(name, help=help)
        p.add_argument("--format", choices=formats, default="text")
        p.set_defaults(func=func)
        return p

    p = add("digits", cmd_digits, "certified digits of f_n or h_n")
    p.add_argument("--family", type=_family, default=Family.CEILING, help="floor | ceiling")
    p.add_argument("--index", type=_positive, default=1)
    p.add_argument("--digits", type=_positive, default=20, help="fractional digits")
    p.add_argument("--rounding", choices=("nearest", "truncate"), default="nearest")

    p = add("table", cmd_table, "rows n, f_n, h_n, p_n", ("text", "csv", "json"))
    p.add_argument("--rows", type=_positive, default=30)
    p.add_argument("--digits", type=_positive, default=20, help="significant digits per entry")
    p.add_argument("--rounding", choices=("nearest", "truncate"), default="nearest")

    p = add("generate", cmd_generate, "regenerate primes from an enclosure of v_1")
    p.add_argument("--family", type=_family, default=Family.CEILING)
    p.add_argument("--seed-digits", type=_positive, default=60)
    p.add_argument("--count", type=_positive, default=30)

    p = add("verify", cmd_verify, "run the consistency checks up to index M")
    p.add_argument("--max-n", type=_positive, default=30)
    p.add_argument("--fixture", default=None, help="table CSV to check (default: bundled)")
    p.add_argument("--no-fixture", action="store_true")

    for name, func, depth in (("mills", cmd_mills, 4), ("toth", cmd_toth, 5)):
        p = add(name, func, f"{name.capitalize()} tower primes and constant")
        p.add_argument("--depth", type=_positive, default=depth)
        p.add_argument("--digits", type=_positive, default=10)

    p = add("bench", cmd_bench, "time series / backward / forward computation")
    p.add_argument("--family", type=_family, default=Family.CEILING)
    p.add_argument("--index-count", type=_positive, default=30)
    p.add_argument("--mode", choices=("series", "backward", "forward"), default="series")
    p.add_argument("--repeat", type=_positive, default=1)
    return parser


def main(argv: list[str] | None = None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
