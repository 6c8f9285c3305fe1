"""``qr``: command-line access to q-rationals, q-metallic numbers and their radii.

Exit codes: 0 success, 1 a verification failed, 2 usage error, 3 the root
iteration did not converge.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from fractions import Fraction

from . import __version__
from .cfrac import negative_expand, q_rational, regular_expand
from .metallic import classical_A, discriminant, f_poly, m_seq, m_tilde_seq, p_factor
from .qpoly import RatFunc, is_palindrome
from .qseries import NotStabilizedError, metallic_series, series_of_ratfunc, stabilized_series
from .reference import REFERENCE_DECIMALS, REFERENCE_RADII
from .roots import DEFAULT_DIGITS, ConvergenceError, fixed, metallic_radius, truncated_radius
from .verify import SUITES, pmap, run_suites

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NONCONVERGENCE = 0, 1, 2, 3
TABLE_DIGITS = REFERENCE_DECIMALS
REPORT_DIGITS = 6
PRECISION_ENV = "QR_PRECISION"


class UsageError(ValueError):
    pass


def _verdict(ok) -> str:
    if ok is None:
        return "n/a"
    return "true" if ok else "false"


def working_digits(printed: int) -> int:
    """Internal precision: the env default (or 64), always above the printed digits."""
    base = DEFAULT_DIGITS
    env = os.environ.get(PRECISION_ENV)
    if env:
        try:
            base = int(env)
        except ValueError:
            raise UsageError(f"{PRECISION_ENV} must be an integer, got {env!r}") from None
        if base < 1:
            raise UsageError(f"{PRECISION_ENV} must be positive")
    return max(base, printed + 10)


class Output:
    """Collects ``(key, value)`` pairs or table rows and renders one format."""

    def __init__(self, fmt: str, stream=None):
        self.fmt = fmt
        self.stream = stream or sys.stdout
        self.fields: list[tuple[str, object, str, str]] = []

    def add(self, key: str, value, plain: str | None = None, label: str | None = None):
        text = plain if plain is not None else _plain(value)
        self.fields.append((key, value, text, label or key))

    def emit(self):
        if self.fmt == "json":
            payload = {k: v for k, v, _, _ in self.fields}
            self.stream.write(json.dumps(payload, indent=2) + "\n")
        elif self.fmt == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(["field", "value"])
            for k, _, text, _ in self.fields:
                w.writerow([k, text])
            self.stream.write(buf.getvalue())
        else:
            for _, _, text, label in self.fields:
                self.stream.write(f"{label}: {text}\n")


def _plain(value) -> str:
    if value is None or isinstance(value, bool):
        return _verdict(value)
    if isinstance(value, list):
        return ", ".join(_plain(v) for v in value)
    return str(value)


def _series_list(series) -> list[str]:
    return [str(c) for c in series.coeffs]


def _digits(args, default: int) -> int:
    d = default if args.digits is None else args.digits
    if d < 1:
        raise UsageError("--digits must be at least 1")
    return d


def _series_order(args) -> int | None:
    if args.series is None:
        return None
    if args.series < 1:
        raise UsageError("--series must be at least 1")
    return args.series


# ---------------------------------------------------------------------------
# subcommands

def cmd_rational(args) -> int:
    if args.s == 0:
        raise UsageError("denominator must be nonzero")
    g = math.gcd(args.r, args.s)
    x = Fraction(args.r, args.s)
    if g != 1 or args.s < 0:
        print(f"note: {args.r}/{args.s} reduced to {x}", file=sys.stderr)
    if x <= 1:
        raise UsageError(f"q-rationals are defined here for r/s > 1, got {x}")
    order = _series_order(args)
    value = q_rational(x)
    out = Output(args.format)
    out.add("x", str(x))
    out.add("regular", list(regular_expand(x).terms), str(regular_expand(x)))
    out.add("negative", list(negative_expand(x).terms), str(negative_expand(x)))
    out.add("q_rational", value.to_json(), str(value))
    if order:
        out.add("series", _series_list(series_of_ratfunc(value, order)))
    out.emit()
    return EXIT_OK


def cmd_metallic(args) -> int:
    n = args.n
    if n < 1:
        raise UsageError("metallic index must be >= 1")
    digits = _digits(args, REPORT_DIGITS)
    order = _series_order(args)
    selected = args.discriminant or args.factor or args.radius or order is not None
    out = Output(args.format)
    status = EXIT_OK
    if args.discriminant or not selected:
        d = discriminant(n)
        out.add("discriminant", d.to_json(), str(d))
    if args.factor or not selected:
        out.add("p_factor", p_factor(n).to_json(), str(p_factor(n)))
        out.add("f", f_poly(n).to_json(), str(f_poly(n)))
    if not selected:
        out.add("discriminant_palindromic", is_palindrome(discriminant(n)))
        out.add("p_factor_palindromic", is_palindrome(p_factor(n)))
        out.add("f_palindromic", is_palindrome(f_poly(n)))
    if args.radius or not selected:
        r = metallic_radius(n, working_digits(digits))
        out.add("radius", r.format(digits))
    if order is not None:
        stab = stabilized_series(n, order)
        direct = metallic_series(n, order)
        agree = stab == direct
        out.add("series", _series_list(stab))
        out.add("series_cross_check", agree)
        if not agree:
            status = EXIT_FAIL
    out.emit()
    return status


def _radius_row(task) -> str:
    n, digits, work = task
    return metallic_radius(n, work).format(digits)


def _reference_row(task) -> str:
    n, work = task
    return fixed(metallic_radius(n, work).value, REFERENCE_DECIMALS)


def cmd_table(args) -> int:
    lo, hi = args.start, args.stop
    if lo < 1 or hi < lo:
        raise UsageError("need 1 <= from <= to")
    digits = _digits(args, TABLE_DIGITS)
    work = working_digits(max(digits, REFERENCE_DECIMALS))
    ns = list(range(lo, hi + 1))
    values = pmap(_radius_row, [(n, digits, work) for n in ns], args.jobs)
    rows = [{"n": n, "radius": v} for n, v in zip(ns, values)]
    status = EXIT_OK
    if args.check:
        rounded = pmap(_reference_row, [(n, work) for n in ns], args.jobs)
        for row, got in zip(rows, rounded):
            want = REFERENCE_RADII.get(row["n"])
            if want is None:
                print(f"note: no reference value for n={row['n']}", file=sys.stderr)
                continue
            row["reference"] = want
            row["match"] = got == want
            if got != want:
                status = EXIT_FAIL
                print(f"mismatch n={row['n']}: computed {got}, reference {want}", file=sys.stderr)
    if args.format == "json":
        sys.stdout.write(json.dumps(rows, indent=2) + "\n")
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "radius"])
        for row in rows:
            w.writerow([row["n"], row["radius"]])
        sys.stdout.write(buf.getvalue())
    else:
        width = max(len(str(hi)), 1)
        for row in rows:
            mark = ""
            if "match" in row:
                mark = "  ok" if row["match"] else f"  MISMATCH (reference {row['reference']})"
            sys.stdout.write(f"{row['n']:>{width}}  {row['radius']}{mark}\n")
    return status


def cmd_truncated(args) -> int:
    n, k = args.n, args.k
    if n < 1 or k < 0:
        raise UsageError("need n >= 1 and k >= 0")
    digits = _digits(args, REPORT_DIGITS)
    out = Output(args.format)
    m = m_seq(n, k)
    out.add("m", m.to_json(), str(m), f"M_{k}({n})")
    if k == 0:
        out.add("radius", None, "none (M_0 = 0, no q-deformed convergent)")
        out.emit()
        return EXIT_OK
    t = m_tilde_seq(n, k)
    out.add("m_tilde", t.to_json(), str(t), f"M~_{k}({n})")
    # the k-term expansion [n, ..., n] is A_{k+1}/A_k
    x = Fraction(classical_A(n, k + 1), classical_A(n, k))
    identity = None
    if x > 1:
        identity = q_rational(x) == RatFunc(m_tilde_seq(n, k + 1), m)
    out.add("convergent_identity", identity, label=f"[A_{k + 1}/A_{k}]_q == M~_{k + 1}/M_{k}")
    r = truncated_radius(n, k, working_digits(digits))
    if r.is_infinite:
        out.add("radius", None, "inf (constant denominator, no poles)")
        out.emit()
        return EXIT_OK
    work = working_digits(digits)
    R1 = metallic_radius(1, work)
    Rn = metallic_radius(n, work)
    above_golden = r.value - r.error >= R1.value - R1.error
    above_limit = r.value - r.error > Rn.value + Rn.error
    out.add("radius", r.format(digits))
    out.add("radius_ge_golden", above_golden, label=f"radius >= R_(1) = {R1.format(digits)}")
    out.add("radius_gt_metallic", above_limit, label=f"radius > R_({n}) = {Rn.format(digits)}")
    out.emit()
    return EXIT_OK if identity in (True, None) else EXIT_FAIL


def cmd_verify(args) -> int:
    try:
        results = run_suites(args.suite, jobs=args.jobs)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    if args.format == "json":
        payload = [{"suite": r.suite, "passed": r.passed, "checks": len(r.checks),
                    "failures": [{"name": c.name, "detail": c.detail} for c in r.failures]}
                   for r in results]
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        for r in results:
            print(r.summary())
            for c in r.failures:
                print(f"  failed: {c.name}" + (f" ({c.detail})" if c.detail else ""))
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "csv", "json"), default="plain")
    common.add_argument("--digits", type=int, default=None,
                        help=f"printed decimals (table default {TABLE_DIGITS}, otherwise {REPORT_DIGITS})")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for sweeps")

    parser = argparse.ArgumentParser(prog="qr", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rational", parents=[common], help="q-deformation of r/s")
    p.add_argument("r", type=int)
    p.add_argument("s", type=int)
    p.add_argument("--series", type=int, metavar="N", help="print N Taylor coefficients")
    p.set_defaults(func=cmd_rational)

    p = sub.add_parser("metallic", parents=[common], help="the q-metallic number [n, n, ...]_q")
    p.add_argument("n", type=int)
    p.add_argument("--discriminant", action="store_true")
    p.add_argument("--factor", action="store_true", help="print P_n and f(q, n)")
    p.add_argument("--radius", action="store_true")
    p.add_argument("--series", type=int, metavar="N", help="stabilized series to order N, cross-checked")
    p.set_defaults(func=cmd_metallic)

    p = sub.add_parser("table", parents=[common], help="radii of convergence for a range of n")
    p.add_argument("start", type=int, metavar="from")
    p.add_argument("stop", type=int, metavar="to")
    p.add_argument("--check", action="store_true", help="compare with the reference radii")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("truncated", parents=[common], help="k-term truncation [n, ..., n]_q")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_truncated)

    p = sub.add_parser("verify", parents=[common], help="run a property suite")
    p.add_argument("suite", choices=list(SUITES) + ["all"])
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.jobs < 1:
        parser.error("--jobs must be at least 1")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"qr: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConvergenceError as exc:
        print(f"qr: numerical non-convergence: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENCE
    except NotStabilizedError as exc:
        print(f"qr: numerical non-convergence: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENCE


if __name__ == "__main__":
    sys.exit(main())
