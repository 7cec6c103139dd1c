"""Command-line entry point.

Exit codes: 0 success, 1 evaluation error, 2 a claim failed under --strict,
64 usage error.
"""

from __future__ import annotations

import argparse
import math
import os
import re
import sys
from dataclasses import dataclass
from pathlib import Path

from oddlab import arithmetic, claims, dirichlet, jsonfmt, sequences, special
from oddlab.errors import OddlabError, ResourceError

EXIT_OK = 0
EXIT_EVAL = 1
EXIT_STRICT = 2
EXIT_USAGE = 64

SEQ_MAX = 10**4


@dataclass(frozen=True)
class Config:
    default_terms: int = dirichlet.DEFAULT_TERMS
    tolerance: float = claims.DEFAULT_TOLERANCE
    sieve_guard: int = arithmetic.SIEVE_GUARD
    output_format: str = "text"

    @classmethod
    def from_env(cls) -> "Config":
        raw = os.environ.get("ODDLAB_SIEVE_GUARD")
        if raw is None:
            return cls()
        try:
            guard = parse_int(raw)
        except argparse.ArgumentTypeError as exc:
            raise UsageError(f"ODDLAB_SIEVE_GUARD: {exc}") from None
        if guard < 1:
            raise UsageError(f"ODDLAB_SIEVE_GUARD must be positive, got {raw!r}")
        return cls(sieve_guard=guard)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_int(text: str) -> int:
    """Integers, also written as 10^6 or 1e6."""
    text = text.strip()
    m = re.fullmatch(r"(\d+)\^(\d+)", text)
    if m:
        return int(m[1]) ** int(m[2])
    if re.fullmatch(r"\d+", text):
        return int(text)
    if re.fullmatch(r"\d+(\.\d*)?[eE]\d+", text):
        value = float(text)
        if value == int(value):
            return int(value)
    raise argparse.ArgumentTypeError(f"not an integer: {text!r}")


def parse_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"not a finite number: {text!r}")
    return value


def _num(x: float) -> str:
    return format(x, ".15g")


def _emit(args, text_lines: list[str], payload: dict) -> None:
    sys.stdout.write("\n".join(text_lines) + "\n")
    if args.json:
        blob = jsonfmt.dumps(payload)
        if args.json == "-":
            sys.stdout.write(blob)
        else:
            Path(args.json).write_text(blob, encoding="utf-8")


def _estimate_payload(est: sequences.SeriesEstimate) -> dict:
    lo, hi = est.value_interval
    return {
        "value": est.partial_sum,
        "terms_used": est.terms_used,
        "tail_bound": est.tail_bound,
        "rounding": est.rounding,
        "interval": [lo, hi],
    }


def _estimate_lines(label: str, est: sequences.SeriesEstimate) -> list[str]:
    lo, hi = est.value_interval
    return [
        f"{label} = {_num(est.partial_sum)}",
        f"terms used = {est.terms_used}",
        f"tail bound = {_num(est.tail_bound)}",
        f"rounding bound = {_num(est.rounding)}",
        f"interval = [{_num(lo)}, {_num(hi)}]",
    ]


def cmd_seq(args, config: Config) -> int:
    n_max = args.max
    if not 1 <= n_max <= SEQ_MAX:
        raise UsageError(f"--max must lie in [1, {SEQ_MAX}], got {n_max}")
    rows = []
    lines = [f"{'n':>6}  {'P_n':>6}  {'a_n':>22}  {'a_n*e^P_n':>22}  {'2^n':>22}"]
    for n in range(1, n_max + 1):
        p = sequences.odd(n).value
        a = sequences.assoc_term(n).value
        try:
            check = a * math.exp(p)
            two_n = float(2**n)
        except OverflowError:
            check = two_n = math.inf
        rows.append({"n": n, "P_n": p, "a_n": a, "a_n_exp_P_n": check, "two_pow_n": two_n})
        lines.append(f"{n:>6}  {p:>6}  {_num(a):>22}  {_num(check):>22}  {_num(two_n):>22}")
    if any(not math.isfinite(r["two_pow_n"]) for r in rows):
        # JSON has no infinity; drop the overflowing check columns
        for r in rows:
            if not math.isfinite(r["two_pow_n"]):
                r["a_n_exp_P_n"] = r["two_pow_n"] = None
    _emit(args, lines, {"rows": rows})
    return EXIT_OK


def cmd_df(args, config: Config) -> int:
    terms = args.terms or config.default_terms
    est = dirichlet.df_eval(dirichlet.DirichletPoint(args.s, terms))
    _emit(args, _estimate_lines(f"D_f({_num(args.s)})", est),
          {"s": args.s, **_estimate_payload(est)})
    return EXIT_OK


def cmd_zeta(args, config: Config) -> int:
    terms = args.terms or config.default_terms
    if args.method == "direct":
        method = special.DirectSum(terms)
    else:
        if terms > config.sieve_guard:
            raise ResourceError(f"prime cutoff {terms} exceeds sieve guard {config.sieve_guard}")
        method = special.EulerProduct(terms)
    est = special.zeta(args.s, method)
    _emit(args, _estimate_lines(f"zeta({_num(args.s)}) [{args.method}]", est),
          {"s": args.s, "method": args.method, **_estimate_payload(est)})
    return EXIT_OK


_VARIANTS = {
    "printed": special.GammaCompositeVariant.AS_PRINTED,
    "shifted": special.GammaCompositeVariant.SHIFTED_DENOMINATOR,
}


def cmd_xfun(args, config: Config) -> int:
    variant = _VARIANTS[args.variant]
    value = special.x_composite(args.s, variant)
    _emit(args, [f"X({_num(args.s)}) [{variant.value}] = {_num(value)}"],
          {"s": args.s, "variant": variant.value, "value": value})
    return EXIT_OK


def cmd_mangoldt(args, config: Config) -> int:
    n = args.n
    base = arithmetic.LogBase(args.base)
    payload = {
        "n": n,
        "base": base.value,
        "mobius": arithmetic.mobius(n),
        "von_mangoldt": arithmetic.von_mangoldt(n, base),
        "divisor_lambda_sum": arithmetic.divisor_lambda_sum(n, base),
        "lambda_by_inversion": arithmetic.lambda_by_inversion(n, base),
        "r_factor": arithmetic.r_factor(n) if n >= 2 else None,
    }
    lines = [
        f"{key} = {value if isinstance(value, (int, str)) or value is None else _num(value)}"
        for key, value in payload.items()
    ]
    _emit(args, lines, payload)
    return EXIT_OK


def _verdict_table(verdicts) -> list[str]:
    header = ("claim", "variant", "lhs", "rhs", "rel_residual", "tol", "verdict")
    rows = [
        (v.claim_id, v.variant or "-", _num(v.lhs), _num(v.rhs),
         format(v.rel_residual, ".6e"), format(v.tolerance, ".3g"), v.verdict)
        for v in verdicts
    ]
    widths = [max(len(r[i]) for r in (header, *rows)) for i in range(len(header))]
    fmt = lambda r: "  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip()
    lines = [fmt(header)] + [fmt(r) for r in rows]
    lines += ["", f"{sum(v.holds for v in verdicts)} hold, "
                  f"{sum(not v.holds for v in verdicts)} fail"]
    return lines


def cmd_claims(args, config: Config) -> int:
    ids = args.id or None
    if ids:
        unknown = [i for i in ids if i not in claims.claim_ids()]
        if unknown:
            raise UsageError(f"unknown claim id(s): {', '.join(unknown)}")
    overrides = {}
    tolerance = config.tolerance
    if args.tol is not None:
        if not args.tol > 0:
            raise UsageError("--tol must be positive")
        overrides["tolerance"] = tolerance = args.tol
    if args.s is not None:
        overrides["s"] = args.s
    if args.terms is not None:
        overrides["terms"] = args.terms
    verdicts = claims.run_all(overrides, ids=ids)
    report = claims.Report(verdicts, tolerance_default=tolerance)
    _emit(args, _verdict_table(verdicts), report.to_dict())
    if args.strict and not report.all_hold:
        return EXIT_STRICT
    return EXIT_OK


def cmd_goldbach(args, config: Config) -> int:
    max_even = args.max
    if max_even < 4:
        raise UsageError("--max must be >= 4")
    if max_even > config.sieve_guard:
        raise ResourceError(f"--max {max_even} exceeds sieve guard {config.sieve_guard}")
    max_even -= max_even % 2
    scan = arithmetic.goldbach_scan(max_even, guard=config.sieve_guard)
    witness = arithmetic.goldbach_decompose(scan.largest_p_at, guard=config.sieve_guard)
    lines = [
        f"even numbers checked in [4, {max_even}]: {scan.verified + len(scan.failures)}",
        f"verified: {scan.verified}",
        f"failures: {len(scan.failures)}",
        f"largest smallest-prime witness: {scan.largest_p_at} = {witness.p} + {witness.q}",
    ]
    if scan.failures:
        lines.append("no witness for: " + ", ".join(map(str, scan.failures[:20])))
    _emit(args, lines, {
        "max_even": max_even,
        "verified": scan.verified,
        "failures": list(scan.failures),
        "largest_p": scan.largest_p,
        "largest_p_at": scan.largest_p_at,
    })
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="oddlab", description="Odd-number sequence, Dirichlet series and identity audit.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", metavar="PATH", help="also write JSON to PATH ('-' for stdout)")
        p.set_defaults(func=func)
        return p

    p = add("seq", cmd_seq, "table of n, P_n, a_n, a_n e^P_n, 2^n")
    p.add_argument("--max", type=parse_int, required=True)

    p = add("df", cmd_df, "Dirichlet series D_f(s) with tail bound")
    p.add_argument("--s", type=parse_float, required=True)
    p.add_argument("--terms", type=parse_int)

    p = add("zeta", cmd_zeta, "Riemann zeta on the real axis")
    p.add_argument("--s", type=parse_float, required=True)
    p.add_argument("--method", choices=("direct", "euler"), default="direct")
    p.add_argument("--terms", type=parse_int, help="terms (direct) or prime cutoff (euler)")

    p = add("xfun", cmd_xfun, "gamma composite X(s)")
    p.add_argument("--s", type=parse_float, required=True)
    p.add_argument("--variant", choices=tuple(_VARIANTS), default="printed")

    p = add("mangoldt", cmd_mangoldt, "Mobius, von Mangoldt and divisor sums at n")
    p.add_argument("--n", type=parse_int, required=True)
    p.add_argument("--base", choices=("natural", "ten"), default="natural")

    p = sub.add_parser("claims", help="claim audit")
    claims_sub = p.add_subparsers(dest="claims_command", required=True, parser_class=_Parser)
    v = claims_sub.add_parser("verify", help="evaluate the claim ledger")
    v.add_argument("--json", metavar="PATH", help="also write the JSON report to PATH ('-' for stdout)")
    v.add_argument("--id", action="append", help="restrict to this claim id (repeatable)")
    v.add_argument("--tol", type=parse_float)
    v.add_argument("--s", type=parse_float, help="override s for claims that take it")
    v.add_argument("--terms", type=parse_int, help="override the D_f truncation")
    v.add_argument("--strict", action="store_true", help="exit 2 if any claim fails")
    v.set_defaults(func=cmd_claims)

    p = add("goldbach", cmd_goldbach, "verify Goldbach for all even n up to --max")
    p.add_argument("--max", type=parse_int, required=True)
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        config = Config.from_env()
        args = build_parser().parse_args(argv)
        return args.func(args, config)
    except UsageError as exc:
        print(f"oddlab: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OddlabError, ValueError, OverflowError) as exc:
        print(f"oddlab: error: {exc}", file=sys.stderr)
        return EXIT_EVAL


if __name__ == "__main__":
    sys.exit(main())
