"""Command-line interface.

    logfamily closed-form <n> [--normalization h|P] [--format text|latex|json]
    logfamily eval <n> <a> [--method closed|polylog|quadrature]
    logfamily verify [--entry ID | --all] [--tol T] [--json]
    logfamily bernoulli --number m | --poly n

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import sys
from fractions import Fraction
from typing import List, NamedTuple, Optional, Sequence

from .bernoulli import MAX_SUPPORTED, bernoulli_number, bernoulli_polynomial
from .closedform import FORMATS, emit, f_closed_eval, f_polylog_eval, h_poly, normalized_poly
from .corpus import Report, verify_all, verify_entry
from .errors import ConvergenceError, UnknownEntryError
from .quadrature import integrate_f

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

MAX_N = 64


class CliResult(NamedTuple):
    code: int
    out: str
    err: str


class _UsageError(Exception):
    pass


def _num(x: float) -> str:
    return f"{x:.12g}"


def _poly_text(coeffs: List[Fraction]) -> str:
    parts = []
    for m in range(len(coeffs) - 1, -1, -1):
        c = coeffs[m]
        if c == 0:
            continue
        mag = abs(c)
        x = "" if m == 0 else ("x" if m == 1 else f"x^{m}")
        body = x if (mag == 1 and m) else (str(mag) + (" " + x if x else ""))
        parts.append(("-" if c < 0 else "+", body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="logfamily",
        description="Closed forms of int_0^inf ln^(n-1)x / ((x-1)(x+a)) dx and their verification.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    cf = sub.add_parser("closed-form", help="print the exact polynomial in b = ln a")
    cf.add_argument("n", type=int)
    cf.add_argument("--normalization", choices=("h", "P"), default="h")
    cf.add_argument("--format", choices=FORMATS, default="text")

    ev = sub.add_parser("eval", help="evaluate f_n(a) numerically")
    ev.add_argument("n", type=int)
    ev.add_argument("a", type=float)
    ev.add_argument("--method", choices=("closed", "polylog", "quadrature"), default="closed")

    vf = sub.add_parser("verify", help="check table entries against the closed form and quadrature")
    which = vf.add_mutually_exclusive_group(required=True)
    which.add_argument("--entry", metavar="ID")
    which.add_argument("--all", action="store_true")
    vf.add_argument("--tol", type=float, default=1e-9)
    vf.add_argument("--json", action="store_true")

    bn = sub.add_parser("bernoulli", help="exact Bernoulli numbers and polynomials")
    kind = bn.add_mutually_exclusive_group(required=True)
    kind.add_argument("--number", type=int, metavar="M")
    kind.add_argument("--poly", type=int, metavar="N")
    return p


def _closed_form(args) -> int:
    if not 2 <= args.n <= MAX_N:
        raise _UsageError(f"n must lie in [2, {MAX_N}]")
    form = h_poly(args.n) if args.normalization == "h" else normalized_poly(args.n)
    print(emit(form, args.format))
    return EXIT_OK


def _eval(args) -> int:
    if not 2 <= args.n <= MAX_N:
        raise _UsageError(f"n must lie in [2, {MAX_N}]")
    if not args.a > 0:
        raise _UsageError("a must be positive")
    if args.method == "closed":
        value = f_closed_eval(args.n, args.a)
    elif args.method == "polylog":
        value = f_polylog_eval(args.n, args.a)
    else:
        try:
            value = integrate_f(args.n, args.a).value
        except ConvergenceError as exc:
            print(f"quadrature did not converge; best estimate {_num(exc.best.value)}", file=sys.stderr)
            return EXIT_FAIL
    print(_num(value))
    return EXIT_OK


def _report_row(r: Report) -> str:
    exact = "-" if r.exact_match is None else ("yes" if r.exact_match else "NO")
    status = "PASS" if r.passed else "FAIL"
    return f"{status}  {r.entry_id:<10} exact={exact:<3} max_residual={r.max_residual:.3e} tol={r.tolerance:.1e}"


def _verify(args) -> int:
    if not args.tol > 0:
        raise _UsageError("--tol must be positive")
    if args.all:
        reports = verify_all(args.tol)
    else:
        try:
            reports = [verify_entry(args.entry, args.tol)]
        except UnknownEntryError as exc:
            raise _UsageError(exc.args[0]) from None
    if args.json:
        payload = [r.to_dict() for r in reports] if args.all else reports[0].to_dict()
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for r in reports:
            print(_report_row(r))
        npass = sum(r.passed for r in reports)
        print(f"{npass}/{len(reports)} passed")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def _bernoulli(args) -> int:
    m = args.number if args.number is not None else args.poly
    if not 0 <= m <= MAX_SUPPORTED:
        raise _UsageError(f"index must lie in [0, {MAX_SUPPORTED}]")
    if args.number is not None:
        print(bernoulli_number(m))
    else:
        print(_poly_text(bernoulli_polynomial(m)))
    return EXIT_OK


_COMMANDS = {
    "closed-form": _closed_form,
    "eval": _eval,
    "verify": _verify,
    "bernoulli": _bernoulli,
}


def run_cli(argv: Optional[Sequence[str]] = None) -> CliResult:
    """Run the CLI on ``argv`` and capture its exit code and output."""
    parser = _build_parser()
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        try:
            args = parser.parse_args(list(argv) if argv is not None else None)
            code = _COMMANDS[args.command](args)
        except SystemExit as exc:
            code = exc.code if isinstance(exc.code, int) else EXIT_USAGE
        except _UsageError as exc:
            parser.print_usage(sys.stderr)
            print(f"logfamily: error: {exc}", file=sys.stderr)
            code = EXIT_USAGE
    return CliResult(code, out.getvalue(), err.getvalue())


def main(argv: Optional[Sequence[str]] = None) -> int:
    res = run_cli(argv)
    sys.stdout.write(res.out)
    sys.stderr.write(res.err)
    return res.code


if __name__ == "__main__":
    sys.exit(main())
