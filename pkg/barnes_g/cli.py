"""
Command-line front end: evaluate a function at a requested precision, run the identity
suite, or time the evaluators over a list of precisions.
"""
import argparse
import logging
import sys
import time
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence

import jsonpickle
import pandas as pd

from barnes_g import defaults
from barnes_g.barnes import LOG_G_METHODS, log_barnes_g
from barnes_g.constants import CONSTANTS
from barnes_g.exceptions import SpecialFunctionError
from barnes_g.glaisher import log_glaisher
from barnes_g.model import EvalResult, GlaisherMethod, OutputRecord, PrecisionContext, log10_abs, render_value
from barnes_g.multigamma import (log_gamma3_asymptotic, log_gamma3_hermite, log_multigamma,
                                 log_multigamma_hurwitz)
from barnes_g.special import (clausen_cl2, digamma, hurwitz_zeta, hurwitz_zeta_prime_neg1, log_gamma,
                              real_if_real_input, to_mp, trigamma)
from barnes_g.verify import GROUPS, failures, reports_dataframe, run_verify

EXIT_OK = 0
EXIT_IDENTITY_FAILURE = 1
EXIT_USAGE = 2

MULTIGAMMA_METHODS = ("integral-representation", "hurwitz-sum", "triple-hermite", "triple-asymptotic")


class UsageError(Exception):
    """The command line asked for something the evaluators cannot be given."""


def parse_argument(text: str, ctx: PrecisionContext):
    """
    Parse a numeric argument: "p/q" and decimals become exact Fractions, "a+bi" (or with j)
    becomes a complex number at working precision.
    """
    text = text.strip().replace(" ", "")
    try:
        if text and text[-1] in "ij":
            body = text[:-1]
            split = max(body.rfind("+"), body.rfind("-"))
            # a sign right after an exponent marker belongs to the exponent
            while split > 0 and body[split - 1] in "eE":
                split = max(body.rfind("+", 0, split - 1), body.rfind("-", 0, split - 1))
            real_part, imag_part = (body[:split], body[split:]) if split > 0 else ("0", body)
            if imag_part in ("", "+", "-"):
                imag_part += "1"
            return ctx.mp.mpc(to_mp(ctx.mp, Fraction(real_part)), to_mp(ctx.mp, Fraction(imag_part)))
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise UsageError(f"cannot parse numeric argument {text!r}") from e


def _parse_order(text: str) -> int:
    try:
        return int(text)
    except ValueError as e:
        raise UsageError(f"order must be an integer, got {text!r}") from e


def _exponentiate(result: EvalResult, z, ctx: PrecisionContext) -> EvalResult:
    """exp of a log-valued result, with the error bound carried over to the value."""
    mp = ctx.mp
    if result.zero:
        return EvalResult(mp.zero, result.err_log10, result.method, result.evaluations)
    value = real_if_real_input(mp, to_mp(mp, z), mp.exp(result.value))
    return EvalResult(value, result.err_log10 + max(log10_abs(mp, value), 0.0), result.method, result.evaluations)


def _log_barnes(args: List[str], ctx: PrecisionContext, method: Optional[str]) -> EvalResult:
    z = parse_argument(args[0], ctx)
    if method is None:
        return log_barnes_g(z, ctx)
    if method not in LOG_G_METHODS:
        raise UsageError(f"unknown method {method!r} for barnes-g, expected one of {', '.join(LOG_G_METHODS)}")
    return LOG_G_METHODS[method](to_mp(ctx.mp, z) - 1, ctx)


def _barnes(args: List[str], ctx: PrecisionContext, method: Optional[str]) -> EvalResult:
    return _exponentiate(_log_barnes(args, ctx, method), parse_argument(args[0], ctx), ctx)


def _multigamma(args: List[str], ctx: PrecisionContext, method: Optional[str]) -> EvalResult:
    n = _parse_order(args[0])
    z = parse_argument(args[1], ctx)
    if method in (None, "integral-representation"):
        result = log_multigamma(n, z, ctx)
    elif method == "hurwitz-sum":
        result = log_multigamma_hurwitz(n, z, ctx)
    elif method in ("triple-hermite", "triple-asymptotic"):
        if n != 3:
            raise UsageError(f"{method} evaluates the triple gamma function only, got order {n}")
        triple = log_gamma3_hermite if method == "triple-hermite" else log_gamma3_asymptotic
        result = triple(to_mp(ctx.mp, z) - 1, ctx)
    else:
        raise UsageError(f"unknown method {method!r} for multigamma, expected one of {', '.join(MULTIGAMMA_METHODS)}")
    return _exponentiate(result, z, ctx)


def _glaisher(args: List[str], ctx: PrecisionContext, method: Optional[str]) -> EvalResult:
    try:
        route = GlaisherMethod(method or GlaisherMethod.ODD_ZETA_SERIES.value)
    except ValueError as e:
        raise UsageError(f"unknown method {method!r} for glaisher, expected one of "
                         f"{', '.join(m.value for m in GlaisherMethod)}") from e
    result = log_glaisher(route, ctx)
    value = ctx.mp.exp(result.value)
    return EvalResult(value, result.err_log10 + log10_abs(ctx.mp, value), result.method, result.evaluations)


def _single(function: Callable) -> Callable:
    """Adapt a one-argument evaluator without method choices."""
    def run(args: List[str], ctx: PrecisionContext, method: Optional[str]) -> EvalResult:
        if method is not None:
            raise UsageError(f"{function.__name__} has a single method, got --method {method}")
        return function(parse_argument(args[0], ctx), ctx)
    return run


def _hurwitz(args: List[str], ctx: PrecisionContext, method: Optional[str]) -> EvalResult:
    if method is not None:
        raise UsageError(f"hurwitz-zeta has a single method, got --method {method}")
    return hurwitz_zeta(parse_argument(args[0], ctx), parse_argument(args[1], ctx), ctx)


# name -> (argument names, evaluator)
FUNCTIONS: Dict[str, tuple] = {
    "barnes-g": (("z",), _barnes),
    "log-barnes-g": (("z",), _log_barnes),
    "multigamma": (("n", "z"), _multigamma),
    "loggamma": (("z",), _single(log_gamma)),
    "digamma": (("z",), _single(digamma)),
    "trigamma": (("z",), _single(trigamma)),
    "hurwitz-zeta": (("s", "z"), _hurwitz),
    "zeta-prime-neg1-z": (("z",), _single(hurwitz_zeta_prime_neg1)),
    "clausen": (("theta",), _single(clausen_cl2)),
    "glaisher": ((), _glaisher),
}


def evaluate(function: str, args: Sequence[str], digits: int, method: Optional[str] = None) -> OutputRecord:
    """
    Evaluate `function` at the parsed `args` to `digits` digits.
    :raises UsageError: for unknown functions, wrong arity or unparseable arguments
    :raises SpecialFunctionError: when the argument is outside the evaluator's domain
    """
    if function not in FUNCTIONS:
        raise UsageError(f"unknown function {function!r}, expected one of {', '.join(FUNCTIONS)}")
    names, evaluator = FUNCTIONS[function]
    if len(args) != len(names):
        raise UsageError(f"{function} takes {len(names)} argument(s) ({' '.join(names) or 'none'}), got {len(args)}")
    ctx = PrecisionContext(digits)
    start = time.perf_counter()
    result = evaluator(list(args), ctx, method)
    elapsed_ms = (time.perf_counter() - start) * 1000
    if not result.succeeded(digits):
        logging.warning("%s reached only 10**%.1f against the requested 10**-%s", function, result.err_log10, digits)
    return OutputRecord(render_value(ctx, result.value), result.err_log10, result.method, digits, elapsed_ms)


def format_record(record: OutputRecord) -> str:
    """One line of plain-text output."""
    value = record.value
    if isinstance(value, dict):
        imag = value["im"] if value["im"].startswith("-") else "+" + value["im"]
        value = f"{value['re']}{imag}i"
    return f"{value}\terr_log10={record.err_log10:.1f}\tmethod={record.method}\tdigits={record.digits}" \
           f"\telapsed_ms={record.elapsed_ms:.1f}"


def bench(target: str, digits_list: Sequence[int], z: str = "10", method: Optional[str] = None) -> pd.DataFrame:
    """
    Time every method of `target` at each precision. Constants are recomputed for each run
    so the work counters cover the whole evaluation.
    :return: rows (digits, method, terms, elapsed_ms)
    """
    rows = []
    for digits in digits_list:
        ctx = PrecisionContext(digits)
        if target == "glaisher":
            runs = [(m.value, lambda m=m: log_glaisher(m, ctx)) for m in GlaisherMethod
                    if method is None or m.value == method]
        elif target == "barnes-g":
            point = to_mp(ctx.mp, parse_argument(z, ctx)) - 1
            runs = [(tag, lambda f=f: f(point, ctx)) for tag, f in LOG_G_METHODS.items()
                    if method is None or tag == method]
        else:
            raise UsageError(f"unknown bench target {target!r}, expected glaisher or barnes-g")
        if not runs:
            raise UsageError(f"no method {method!r} for bench target {target}")
        for tag, run in runs:
            CONSTANTS.clear()
            start = time.perf_counter()
            result = run()
            elapsed_ms = (time.perf_counter() - start) * 1000
            logging.info("bench %s %s at %s digits: %s terms in %.1f ms", target, tag, digits,
                         result.evaluations, elapsed_ms)
            rows.append({"digits": digits, "method": tag, "terms": result.evaluations, "elapsed_ms": elapsed_ms})
    return pd.DataFrame(rows, columns=["digits", "method", "terms", "elapsed_ms"])


def _digits_in(value: str, bounds: tuple) -> int:
    low, high = bounds
    try:
        digits = int(value)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"digits must be an integer, got {value!r}") from e
    if not low <= digits <= high:
        raise argparse.ArgumentTypeError(f"digits must lie in [{low}, {high}], got {digits}")
    return digits


def build_parser() -> argparse.ArgumentParser:
    """The argument parser with the eval, verify and bench subcommands."""
    parser = argparse.ArgumentParser(prog="barnes-g",
                                     description="Arbitrary precision Barnes G, multiple gamma and zeta functions")
    parser.add_argument("--verbose", action="store_true", help="Log progress to stderr at DEBUG level.")
    commands = parser.add_subparsers(dest="command", required=True)

    eval_parser = commands.add_parser("eval", help="Evaluate a function.")
    eval_parser.add_argument("function", choices=list(FUNCTIONS))
    eval_parser.add_argument("arguments", nargs="*", help="Numeric arguments: decimals, p/q or a+bi.")
    eval_parser.add_argument("--digits", type=lambda v: _digits_in(v, defaults.EVAL_DIGITS_RANGE), default=30)
    eval_parser.add_argument("--method", default=None, help="Evaluation method, where several exist.")
    eval_parser.add_argument("--json", action="store_true", help="Print the record as JSON.")

    verify_parser = commands.add_parser("verify", help="Run the identity suite.")
    verify_parser.add_argument("selection", nargs="?", default="all", choices=["all"] + list(GROUPS))
    verify_parser.add_argument("--digits", type=lambda v: _digits_in(v, defaults.EVAL_DIGITS_RANGE), default=30)
    verify_parser.add_argument("--tolerance-log10", type=float, default=None, dest="tolerance_log10",
                               help="Pass threshold, default -(digits - 5).")
    verify_parser.add_argument("--json", action="store_true", help="Print the reports as JSON.")

    bench_parser = commands.add_parser("bench", help="Time the evaluators over several precisions.")
    bench_parser.add_argument("target", choices=["glaisher", "barnes-g"])
    bench_parser.add_argument("--digits", nargs="+", required=True,
                              type=lambda v: _digits_in(v, defaults.BENCH_DIGITS_RANGE))
    bench_parser.add_argument("--z", default="10", help="Argument of G for the barnes-g target.")
    bench_parser.add_argument("--method", default=None, help="Restrict to one method.")
    bench_parser.add_argument("--json", action="store_true", help="Print the table as JSON.")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point of the barnes-g console script."""
    args = build_parser().parse_args(argv)
    logging.basicConfig(stream=sys.stderr, level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        if args.command == "eval":
            record = evaluate(args.function, args.arguments, args.digits, args.method)
            print(jsonpickle.encode(record, unpicklable=False, indent=2) if args.json else format_record(record))
            return EXIT_OK
        if args.command == "verify":
            reports = run_verify(args.selection, PrecisionContext(args.digits), args.tolerance_log10)
            if args.json:
                print(jsonpickle.encode(reports, unpicklable=False, indent=2))
            else:
                print(reports_dataframe(reports).to_string(index=False))
            failed = failures(reports)
            if failed:
                logging.error("%s of %s identities failed", len(failed), len(reports))
                return EXIT_IDENTITY_FAILURE
            return EXIT_OK
        table = bench(args.target, args.digits, args.z, args.method)
        print(jsonpickle.encode(table.to_dict(orient="records"), unpicklable=False, indent=2) if args.json
              else table.to_string(index=False))
        return EXIT_OK
    except (UsageError, SpecialFunctionError, ValueError) as e:
        logging.error("%s: %s", type(e).__name__, e)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
