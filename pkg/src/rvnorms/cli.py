"""Command-line front end.

Subcommands: norm, formula, hunter, oracle, verify.  Exit codes: 0 success,
1 verification suite failure, 2 parse error (bad file or bad string),
3 precondition violation (odd degree on an analytic path, missing moments,
non-Hermitian input to a Hermitian-only method).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .cumulants import distribution_cumulants, parse_distribution
from .errors import ParseError, PreconditionError
from .matrixcore import is_hermitian, load_matrix
from .normengine import (
    circle_extension_check,
    general_norm_pow,
    hermitian_norm_pow,
    series_norm_pow,
    symbolic_formula,
)
from .oracle import mc_norm
from .partitions import enumerate_partitions, hunter_coefficient
from .sympoly import hunter_poly, hunter_poly_recursive
from .suites import SUITES, run_suite

CATALOG_HELP = """\
distribution strings take the form family:key=value,key=value; values may be
integers, rationals p/q (kept exact), or floats.  Catalog:
  gamma:alpha=A,beta=B          A>0, B>0
  exponential[:beta=B]          B>0, default 1
  normal:mu=M,sigma=S           S>0
  uniform:a=A,b=B               A<B
  laplace:mu=M,beta=B           B>0
  bernoulli:q=Q                 0<Q<1
  finite_discrete:atoms=A1|A2|...,probs=Q1|Q2|...   distinct atoms, Q>0, sum 1
  rademacher                    no parameters
  poisson:alpha=A               A>0
  pareto:alpha=A                A>0; moments (and degree d) must stay below A
"""


def _default_seed() -> int:
    return int(os.environ.get("RVNORMS_SEED", "20240901"))


def _fmt_value(v) -> str:
    if isinstance(v, (int, Fraction)):
        return str(Fraction(v))
    return repr(float(v))


def _json_value(v):
    if isinstance(v, (int, Fraction)):
        f = Fraction(v)
        return [f.numerator, f.denominator]
    return float(v)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rvnorms",
        description="Matrix norms induced by random vectors.",
        epilog=CATALOG_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_norm = sub.add_parser(
        "norm",
        help="evaluate the norm of a matrix from a JSON file",
        epilog=CATALOG_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p_norm.add_argument("matrix", help="path to a matrix JSON file {n, re, im}")
    p_norm.add_argument("dist", help="distribution string")
    p_norm.add_argument("-d", "--degree", type=int, required=True)
    p_norm.add_argument(
        "--method",
        choices=("partition", "series", "words", "auto"),
        default="partition",
        help="partition: cumulant sum (trace-word form on non-Hermitian input); "
        "series: truncated-series extraction (Hermitian only); words: trace-word "
        "sum; auto: run partition and series and report their discrepancy "
        "(words plus circle quadrature on non-Hermitian input)",
    )
    p_norm.add_argument("--json", action="store_true")

    p_formula = sub.add_parser("formula", help="print the symbolic trace-polynomial form")
    p_formula.add_argument("dist", help="distribution string (rational parameters stay exact)")
    p_formula.add_argument("-d", "--degree", type=int, required=True)
    p_formula.add_argument("--mode", choices=("hermitian", "general"), default="general")
    p_formula.add_argument("--json", action="store_true")

    p_hunter = sub.add_parser("hunter", help="positive-definite CHS combinations H_{d,alpha}")
    p_hunter.add_argument("-d", "--degree", type=int, required=True)
    p_hunter.add_argument("--alpha", type=int, required=True)
    p_hunter.add_argument("--at", help="comma-separated point to evaluate at, e.g. 1,1/2,-2")
    p_hunter.add_argument("--json", action="store_true")

    p_oracle = sub.add_parser("oracle", help="Monte Carlo estimate for a Hermitian matrix")
    p_oracle.add_argument("matrix")
    p_oracle.add_argument("dist")
    p_oracle.add_argument("-d", "--degree", type=int, required=True)
    p_oracle.add_argument("--samples", type=int, default=10**6)
    p_oracle.add_argument("--seed", type=int, default=None, help="default $RVNORMS_SEED")
    p_oracle.add_argument("--threads", type=int, default=1, help="cap on sampling workers")
    p_oracle.add_argument("--json", action="store_true")

    p_verify = sub.add_parser("verify", help="run the randomized property suites")
    p_verify.add_argument(
        "--suite", choices=tuple(SUITES) + ("all",), default="all"
    )
    p_verify.add_argument("--trials", type=int, default=None, help="override per-suite default")
    p_verify.add_argument("--seed", type=int, default=None, help="default $RVNORMS_SEED")
    p_verify.add_argument("--json", action="store_true")

    return parser


def _cmd_norm(args) -> int:
    Z = load_matrix(args.matrix)
    spec = parse_distribution(args.dist)
    d = args.degree
    hermitian = is_hermitian(Z)
    discrepancy = None
    method = args.method
    if method == "partition":
        value = hermitian_norm_pow(Z, spec, d) if hermitian else general_norm_pow(Z, spec, d)
        used = "partition" if hermitian else "partition(words)"
    elif method == "series":
        value = series_norm_pow(Z, spec, d)
        used = "series"
    elif method == "words":
        value = general_norm_pow(Z, spec, d)
        used = "words"
    else:  # auto
        if hermitian:
            value = hermitian_norm_pow(Z, spec, d)
            if spec.has_mgf:
                other = series_norm_pow(Z, spec, d)
                discrepancy = abs(float(value) - float(other))
            used = "auto(partition,series)"
        else:
            value = general_norm_pow(Z, spec, d)
            quad, alg = circle_extension_check(Z, spec, d)
            discrepancy = abs(quad - alg)
            used = "auto(words,circle)"
    norm_value = float(value) ** (1.0 / d)
    if args.json:
        out = {
            "matrix": args.matrix,
            "n": Z.n,
            "hermitian": hermitian,
            "distribution": spec.label(),
            "degree": d,
            "method": used,
            "norm_pow": _json_value(value),
            "norm": norm_value,
        }
        if discrepancy is not None:
            out["discrepancy"] = discrepancy
        print(json.dumps(out))
    else:
        print(f"matrix: {args.matrix} (n={Z.n}, {'hermitian' if hermitian else 'general'})")
        print(f"distribution: {spec.label()}")
        print(f"degree: {d}")
        print(f"method: {used}")
        print(f"norm^{d} = {_fmt_value(value)}")
        print(f"norm = {norm_value!r}")
        if discrepancy is not None:
            print(f"path discrepancy: {discrepancy!r}")
    return 0


def _cmd_formula(args) -> int:
    spec = parse_distribution(args.dist)
    d = args.degree
    kappas = distribution_cumulants(spec, d)
    poly = symbolic_formula(kappas, d, hermitian_mode=(args.mode == "hermitian"))
    if args.json:
        out = poly.to_json()
        out["distribution"] = spec.label()
        print(json.dumps(out))
    else:
        print(poly.text())
    return 0


def _parse_point(text: str) -> list:
    out = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            raise ParseError("empty coordinate in --at")
        if "/" in item:
            try:
                out.append(Fraction(item))
                continue
            except (ValueError, ZeroDivisionError):
                raise ParseError(f"bad rational {item!r}") from None
        try:
            out.append(int(item))
        except ValueError:
            try:
                out.append(float(item))
            except ValueError:
                raise ParseError(f"bad coordinate {item!r}") from None
    return out


def _hunter_expansion_text(d: int, alpha: int) -> str:
    pieces = []
    for p in enumerate_partitions(d):
        c = hunter_coefficient(p, alpha)
        if not c:
            continue
        factors = " ".join(
            f"h{i}" + (f"^{m}" if m > 1 else "")
            for i, m in sorted(p.multiplicities.items())
        )
        pieces.append(f"{c} {factors}")
    return " + ".join(pieces) if pieces else "0"


def _cmd_hunter(args) -> int:
    d, alpha = args.degree, args.alpha
    if d < 0 or alpha < 1:
        raise PreconditionError("hunter needs degree >= 0 and alpha >= 1")
    expansion = _hunter_expansion_text(d, alpha)
    value = rec = None
    point = None
    if args.at is not None:
        point = _parse_point(args.at)
        value = hunter_poly(d, alpha, point)
        rec = hunter_poly_recursive(d, alpha, point)
    if args.json:
        out = {
            "degree": d,
            "alpha": alpha,
            "terms": [
                {
                    "coeff": hunter_coefficient(p, alpha),
                    "parts": list(p.parts),
                }
                for p in enumerate_partitions(d)
                if hunter_coefficient(p, alpha)
            ],
        }
        if point is not None:
            out["at"] = [_json_value(v) for v in point]
            out["value"] = _json_value(value)
            out["value_recursive"] = _json_value(rec)
        print(json.dumps(out))
    else:
        print(f"H_{{{d},{alpha}}} = {expansion}")
        if point is not None:
            print(f"value at {args.at}: {_fmt_value(value)}")
            print(f"recursive form:  {_fmt_value(rec)}")
    return 0


def _cmd_oracle(args) -> int:
    A = load_matrix(args.matrix)
    spec = parse_distribution(args.dist)
    seed = args.seed if args.seed is not None else _default_seed()
    est = mc_norm(A, spec, args.degree, args.samples, seed, threads=max(1, args.threads))
    if args.json:
        print(
            json.dumps(
                {
                    "matrix": args.matrix,
                    "distribution": spec.label(),
                    "degree": args.degree,
                    "value": est.value,
                    "stderr": est.stderr,
                    "samples": est.samples,
                    "seed": est.seed,
                }
            )
        )
    else:
        print(f"distribution: {spec.label()}")
        print(f"degree: {args.degree}")
        print(f"norm ~ {est.value!r} +/- {est.stderr!r} (samples={est.samples}, seed={est.seed})")
    return 0


def _cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    seed = args.seed if args.seed is not None else _default_seed()
    reports = [run_suite(name, trials=args.trials, seed=seed) for name in names]
    failed = any(not r.passed for r in reports)
    if args.json:
        payload = [r.to_json() for r in reports]
        print(json.dumps(payload[0] if len(payload) == 1 else {"suites": payload}))
    else:
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            print(f"suite {r.suite}: {status} ({r.checks} checks, trials={r.trials})")
            for msg in r.failures[:10]:
                print(f"  failure: {msg}")
            if len(r.failures) > 10:
                print(f"  ... and {len(r.failures) - 10} more")
    return 1 if failed else 0


_DISPATCH = {
    "norm": _cmd_norm,
    "formula": _cmd_formula,
    "hunter": _cmd_hunter,
    "oracle": _cmd_oracle,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
