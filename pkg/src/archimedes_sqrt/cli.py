"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 failed verification.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Callable, Optional, Sequence

from . import tables
from .pi_bounds import Direction, SqrtPolicy, Verdict, run_archimedes, verify_bound
from .rational import (
    DomainError,
    cmp_sqrt,
    format_fraction,
    format_mixed,
    parse_fraction,
    to_decimal,
)
from .sqrt_methods import (
    Side,
    StopRule,
    brute_force_scan,
    cf_expansion,
    convergents,
    dyadic_sqrt_bound,
    dyadic_sqrt_trace,
    harmonic_partner,
    heath_mixed,
    hero_step,
    interpolate,
    pell2_iterate,
    squares_table,
    theorem1_check,
)
from .trace import Trace, render_jsonl

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def _fraction(text: str) -> Fraction:
    try:
        return parse_fraction(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _natural(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a natural number, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a natural number, got {text!r}")
    return value


def _policy(text: str) -> SqrtPolicy:
    if text == "archimedes":
        return SqrtPolicy.archimedes_recorded()
    if text.startswith("dyadic:"):
        return SqrtPolicy.dyadic(_natural(text.split(":", 1)[1]))
    raise argparse.ArgumentTypeError(f"policy must be 'archimedes' or 'dyadic:N', got {text!r}")


def _override(text: str) -> tuple[Direction, int, Fraction]:
    """``[circumscribed:|inscribed:]STEP=VALUE``; the chain defaults to inscribed."""
    direction = Direction.UPPER_CHAIN
    spec = text
    if ":" in text.split("=", 1)[0]:
        chain, spec = text.split(":", 1)
        try:
            direction = Direction(chain)
        except ValueError:
            raise argparse.ArgumentTypeError(f"unknown chain {chain!r} in override {text!r}") from None
    if "=" not in spec:
        raise argparse.ArgumentTypeError(f"override must look like STEP=VALUE, got {text!r}")
    step, value = spec.split("=", 1)
    return direction, _natural(step), _fraction(value)


def _side(text: str) -> Side:
    try:
        return Side.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit(trace: Trace, fmt: str, text: Callable[[], str], final: Optional[dict] = None) -> str:
    if fmt == "csv":
        return trace.to_csv()
    if fmt == "jsonl":
        return render_jsonl(trace, final)
    return text()


# -- subcommands ------------------------------------------------------------------

def cmd_sqrt_enclose(args) -> int:
    if args.width is None and args.max_den is None and args.steps is None:
        args.steps = 16
    stop = StopRule(iterations=args.steps, width=args.width, max_den=args.max_den)
    trace = interpolate(args.c, args.lo, args.hi, stop)
    args.out.write(_emit(trace, args.format, lambda: tables.render_enclosures(trace, args.c)))
    return EXIT_OK


def cmd_brute_table(args) -> int:
    records = brute_force_scan(args.c, args.max_b, args.min_b)
    trace = Trace("brute-force", ("a", "b", "residual", "bound_side", "decimal"))
    for r in records:
        trace.add(a=r.a, b=r.b, residual=r.residual, bound_side=r.bound_side,
                  decimal=to_decimal(r.fraction, args.digits))
    args.out.write(_emit(trace, args.format,
                         lambda: tables.render_residuals(records, args.c, args.digits)))
    return EXIT_OK


def cmd_squares(args) -> int:
    trace = squares_table(args.start, args.end, args.multiplier)
    args.out.write(_emit(trace, args.format,
                         lambda: tables.render_squares(trace, args.multiplier)))
    return EXIT_OK


def cmd_pell2(args) -> int:
    trace = Trace("pell2", ("n", "a", "b", "sign", "fraction", "decimal"))
    for i, p in enumerate(pell2_iterate(args.n), start=1):
        trace.add(n=i, a=p.a, b=p.b, sign=p.sign, fraction=p.fraction,
                  decimal=to_decimal(p.fraction, args.digits))
    args.out.write(_emit(trace, args.format, trace.to_text))
    return EXIT_OK


def cmd_cf(args) -> int:
    terms = cf_expansion(args.c, args.n)
    trace = Trace("continued-fraction", ("k", "term", "convergent", "position"))
    for k, (t, conv) in enumerate(zip(terms, convergents(terms)), start=1):
        trace.add(k=k, term=t, convergent=conv, position=cmp_sqrt(conv, args.c))
    args.out.write(_emit(trace, args.format, trace.to_text))
    return EXIT_OK


def cmd_hero(args) -> int:
    trace = Trace("hero", ("step", "input", "output", "partner", "position"))
    a = args.a
    for step in range(1, args.steps + 1):
        nxt = hero_step(a, args.c)
        trace.add(step=step, input=a, output=nxt, partner=harmonic_partner(nxt, args.c),
                  position=cmp_sqrt(nxt, args.c))
        a = nxt
    args.out.write(_emit(trace, args.format, trace.to_text))
    return EXIT_OK


def cmd_heath_mixed(args) -> int:
    trace = heath_mixed()
    e = trace.result
    args.out.write(_emit(trace, args.format,
                         lambda: trace.to_text() + f"{e.lo} < √3 < {e.hi}\n",
                         {"lo": e.lo, "hi": e.hi}))
    return EXIT_OK


def cmd_theorem1(args) -> int:
    report = theorem1_check(args.x)
    trace = Trace("theorem1", ("x", "am", "hm", "product_is_three", "hm_below",
                               "am_above", "three_divides_hm_numerator", "passed"))
    trace.add(x=report.x, am=report.am, hm=report.hm,
              product_is_three=report.product_is_three, hm_below=report.hm_below,
              am_above=report.am_above,
              three_divides_hm_numerator=report.three_divides_hm_numerator,
              passed=report.passed)
    args.out.write(_emit(trace, args.format, trace.to_text))
    return EXIT_OK if report.passed else EXIT_VERIFY


def cmd_dyadic_sqrt(args) -> int:
    trace = dyadic_sqrt_trace(args.n, args.depth)
    bound = dyadic_sqrt_bound(args.n, args.depth, args.side)

    def text() -> str:
        head = tables.render_bisection(trace) if args.trace else ""
        return head + format_mixed(bound) + "\n"

    args.out.write(_emit(trace, args.format, text, {"side": args.side, "bound": bound}))
    return EXIT_OK


def cmd_pi(args) -> int:
    policy = args.policy
    for direction, step, value in args.override:
        policy = policy.with_override(direction, step, value)
    result = run_archimedes(policy, doublings=args.doublings, precision=args.precision)
    lo_dec, hi_dec = result.decimals(args.digits)
    if args.format == "text":
        args.out.write(result.circumscribed_trace.to_text() + "\n")
        args.out.write(result.inscribed_trace.to_text() + "\n")
        args.out.write(f"{format_mixed(result.lower)} < π < {format_mixed(result.upper)}\n")
        args.out.write(f"{lo_dec} < π < {hi_dec}\n")
        return EXIT_OK
    traces = (result.circumscribed_trace, result.inscribed_trace)
    if args.format == "csv":
        merged = Trace("pi", ("chain",) + traces[0].columns)
        for t in traces:
            for row in t:
                merged.add(chain=t.name, **row)
        args.out.write(merged.to_csv())
        return EXIT_OK
    args.out.write(render_jsonl(traces[0]))
    args.out.write(render_jsonl(traces[1], {
        "policy": policy.name, "lower": result.lower, "upper": result.upper,
        "lower_decimal": lo_dec, "upper_decimal": hi_dec}))
    return EXIT_OK


def cmd_verify(args) -> int:
    verdict = verify_bound(args.claim, args.side, args.precision)
    relation = "<" if args.side is Side.LOWER else ">"
    line = f"{format_fraction(args.claim)} {relation} π: {verdict.value}"
    if args.format == "jsonl":
        line = json.dumps({"claim": format_fraction(args.claim), "side": args.side.value,
                           "verdict": verdict.value})
    elif args.format == "csv":
        line = f"claim,side,verdict\n{format_fraction(args.claim)},{args.side.value},{verdict.value}"
    args.out.write(line + "\n")
    return EXIT_OK if verdict is Verdict.PASS else EXIT_VERIFY


def _table_cmd(which: int) -> Callable:
    def run(args) -> int:
        if args.format == "text":
            args.out.write(tables.emit_table(which))
            return EXIT_OK
        if which == 1:
            trace = squares_table(120, 124, 3)
        elif which == 2:
            return cmd_brute_table(argparse.Namespace(**{**vars(args), "c": 3, "max_b": 780,
                                                         "min_b": 2}))
        elif which == 3:
            trace = interpolate(3, 1, 2, StopRule(iterations=16))
        else:
            trace = dyadic_sqrt_trace(571 ** 2 + 153 ** 2, 3)
        args.out.write(_emit(trace, args.format, trace.to_text))
        return EXIT_OK
    return run


# -- parser -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "jsonl"), default="text")
    common.add_argument("--digits", type=_natural, default=6)

    parser = _Parser(prog="archimedes-sqrt",
                     description="Exact square-root bounds and Archimedes' bounds on pi.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, func: Callable, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        return p

    p = add("sqrt-enclose", cmd_sqrt_enclose, "mediant interpolation of sqrt(C)")
    p.add_argument("c", type=_fraction, metavar="C")
    p.add_argument("lo", type=_fraction, metavar="LO")
    p.add_argument("hi", type=_fraction, metavar="HI")
    p.add_argument("--steps", type=_natural, help="enclosures to list, start included")
    p.add_argument("--width", type=_fraction)
    p.add_argument("--max-den", type=_natural)

    p = add("brute-table", cmd_brute_table, "smallest residuals a^2 - C b^2")
    p.add_argument("c", type=_natural, metavar="C")
    p.add_argument("max_b", type=_natural, metavar="MAX_B")
    p.add_argument("--min-b", type=_natural, default=2)

    p = add("squares", cmd_squares, "incremental table of squares")
    p.add_argument("start", type=_natural, metavar="START")
    p.add_argument("end", type=_natural, metavar="END")
    p.add_argument("--multiplier", type=_natural, default=3)

    p = add("pell2", cmd_pell2, "a^2 - 2b^2 = ±1 recurrence")
    p.add_argument("n", type=_natural, metavar="N")

    p = add("cf", cmd_cf, "continued fraction of sqrt(C)")
    p.add_argument("c", type=_natural, metavar="C")
    p.add_argument("n", type=_natural, metavar="N")

    p = add("hero", cmd_hero, "Hero iteration a <- (a + C/a)/2")
    p.add_argument("a", type=_fraction, metavar="A")
    p.add_argument("c", type=_fraction, metavar="C")
    p.add_argument("--steps", type=_natural, default=1)

    add("heath-mixed", cmd_heath_mixed, "Heath's mixed route to 265/153 and 1351/780")

    p = add("theorem1", cmd_theorem1, "means of x and 3/x")
    p.add_argument("x", type=_fraction, metavar="X")

    p = add("dyadic-sqrt", cmd_dyadic_sqrt, "dyadic bisection bound on sqrt(N)")
    p.add_argument("n", type=_fraction, metavar="N")
    p.add_argument("--depth", type=_natural, default=3)
    p.add_argument("--side", type=_side, default=Side.LOWER)
    p.add_argument("--trace", action="store_true", help="show the bisection steps")

    p = add("pi", cmd_pi, "bounds on pi from the 96-gon")
    p.add_argument("--policy", type=_policy, default=SqrtPolicy.archimedes_recorded())
    p.add_argument("--override", type=_override, action="append", default=[],
                   metavar="[CHAIN:]STEP=VALUE")
    p.add_argument("--doublings", type=_natural, default=4)
    p.add_argument("--precision", type=_natural, default=64)

    p = add("verify", cmd_verify, "certify a claimed bound on pi")
    p.add_argument("claim", type=_fraction, metavar="CLAIM")
    p.add_argument("--side", type=_side, required=True)
    p.add_argument("--precision", type=_natural, default=64)

    for which in range(1, 5):
        add(f"table{which}", _table_cmd(which), f"regenerate table {which}")
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    args.out = out
    try:
        return args.func(args)
    except (DomainError, ZeroDivisionError) as exc:
        print(f"{args.command}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ArithmeticError as exc:
        print(f"{args.command}: {exc}", file=sys.stderr)
        return EXIT_VERIFY


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
