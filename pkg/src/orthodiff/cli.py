"""Command-line front end.

Exit codes: 0 success, 1 mathematical refutation (not_ops verdict or a failed
check), 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import suites
from .classify import SequenceTooShortError, classify_gamma
from .diffop import ExpOpParams, GammaSeq, apply_gamma, exp_gamma
from .exactfield import format_scalar, parse_scalar
from .laguerreop import a_table, laguerre_operator
from .opsfam import InvalidSpecError, TTRSpec, hermite_gen, hermite_std, laguerre, ttr_generate
from .poly import Poly
from .rootcheck import count_real_roots

FAMILIES = ("hermite-std", "hermite-gen", "laguerre", "exp-form", "ttr")


class UsageError(Exception):
    pass


def _scalar(text: str):
    try:
        return parse_scalar(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid rational: {text!r}") from None


def _nonneg(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer: {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return n


def _read_input(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_json(path: str):
    text = _read_input(path)
    if not text.strip():
        raise UsageError(f"{path} is empty")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON ({exc.msg})") from None


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


# commands


def _family_polys(args) -> list[Poly]:
    n = args.n
    fam = args.family
    if fam == "hermite-std":
        return [hermite_std(k) for k in range(n + 1)]
    if fam == "hermite-gen":
        if args.alpha is None:
            raise UsageError("--alpha is required for hermite-gen")
        return [hermite_gen(args.alpha, k) for k in range(n + 1)]
    if fam == "laguerre":
        alpha = args.alpha if args.alpha is not None else Fraction(0)
        if not isinstance(alpha, Fraction):
            raise UsageError("laguerre needs a rational --alpha")
        return [laguerre(alpha, k) for k in range(n + 1)]
    if fam == "exp-form":
        params = _exp_params(args)
        g = exp_gamma(params, n)
        return [apply_gamma(g, k) for k in range(n + 1)]
    if fam == "ttr":
        if not args.infile:
            raise UsageError("--in <TTRSpec JSON> is required for the ttr family")
        spec = TTRSpec.from_json(_load_json(args.infile))
        return ttr_generate(spec, n)
    raise UsageError(f"unknown family {fam!r}")


def _exp_params(args) -> ExpOpParams:
    if args.alpha is None:
        raise UsageError("--alpha is required")
    gamma0 = args.gamma0 if args.gamma0 is not None else Fraction(1)
    beta = args.beta if args.beta is not None else Fraction(0)
    if args.alpha == 0 or gamma0 == 0:
        raise UsageError("alpha and gamma0 must be nonzero")
    return ExpOpParams(gamma0, args.alpha, beta)


def cmd_gen(args) -> tuple[str, int]:
    try:
        polys = _family_polys(args)
    except InvalidSpecError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "csv":
        rows = [("n", "k", "coefficient")]
        for n, p in enumerate(polys):
            rows.extend((n, k, format_scalar(c)) for k, c in enumerate(p.coeffs))
        return _csv(rows), 0
    if args.format == "plain":
        return "".join(f"P_{n} = {p}\n" for n, p in enumerate(polys)), 0
    return _dump_json({"family": args.family, "n": args.n, "polys": [p.to_json() for p in polys]}), 0


def _parse_gamma_text(text: str) -> list:
    stripped = text.strip()
    if stripped.startswith("{") or stripped.startswith("["):
        obj = json.loads(stripped)
        return list(GammaSeq.from_json(obj))
    tokens = stripped.replace(",", " ").split()
    return [parse_scalar(t) for t in tokens]


def cmd_classify(args) -> tuple[str, int]:
    if args.infile:
        text = _read_input(args.infile)
        if not text.strip():
            raise UsageError(f"{args.infile} is empty")
        try:
            gammas = _parse_gamma_text(text)
        except (ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"cannot parse gamma sequence: {exc}") from None
    else:
        params = _exp_params(args)
        gammas = list(exp_gamma(params, args.n if args.n is not None else 25))
    N = args.n if args.n is not None else len(gammas) - 1
    try:
        res = classify_gamma(gammas, N)
    except SequenceTooShortError as exc:
        raise UsageError(str(exc)) from None
    payload = res.to_json()
    code = 0 if res else 1
    if args.format == "plain":
        body = " ".join(f"{k}={v}" for k, v in payload.items())
        return f"{body} checked_up_to={N}\n", code
    if args.format == "csv":
        return _csv([list(payload), list(payload.values())]), code
    return _dump_json(payload), code


def cmd_laguerre_op(args) -> tuple[str, int]:
    if args.format == "csv":
        rows = [("r", "a_r")] + [(r, format_scalar(a)) for r, a in enumerate(a_table(args.n))]
        return _csv(rows), 0
    op = laguerre_operator(args.n)
    if args.format == "plain":
        return "".join(f"p_{k} = {p}\n" for k, p in enumerate(op.pk)), 0
    return _dump_json(op.to_json()), 0


def cmd_roots(args) -> tuple[str, int]:
    if args.infile:
        p = Poly.from_json(_load_json(args.infile))
    elif args.family:
        p = _family_polys(args)[-1]
    else:
        raise UsageError("roots needs --in <Poly JSON> or --family")
    try:
        rep = count_real_roots(p)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "plain":
        ivs = ", ".join(f"({lo}, {hi}]" for lo, hi in rep.isolating_intervals)
        return (f"degree={rep.degree} distinct_real_roots={rep.distinct_real_roots} "
                f"all_roots_real={rep.all_roots_real} intervals=[{ivs}]\n"), 0
    if args.format == "csv":
        rows = [("lo", "hi")] + [(format_scalar(lo), format_scalar(hi)) for lo, hi in rep.isolating_intervals]
        return _csv(rows), 0
    return _dump_json(rep.to_json()), 0


def cmd_verify(args) -> tuple[str, int]:
    n = args.n if args.n is not None else 25
    results = suites.run_suite(args.suite, n, args.seed)
    ok = all(r.ok for r in results)
    code = 0 if ok else 1
    if args.format == "json":
        payload = {"suite": args.suite, "n": n, "seed": args.seed, "ok": ok,
                   "checks": [r.to_json() for r in results]}
        return _dump_json(payload), code
    if args.format == "csv":
        rows = [("name", "anchor", "ok", "detail")] + [(r.name, r.anchor, r.ok, r.detail) for r in results]
        return _csv(rows), code
    lines = [r.line() for r in results]
    passed = sum(r.ok for r in results)
    lines.append(f"{passed}/{len(results)} checks passed (suite={args.suite}, n={n}, seed={args.seed})")
    return "\n".join(lines) + "\n", code


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "plain"), default=None)
    common.add_argument("--out", dest="outfile", metavar="FILE")
    common.add_argument("--in", dest="infile", metavar="FILE")

    params = argparse.ArgumentParser(add_help=False)
    params.add_argument("--family", choices=FAMILIES)
    params.add_argument("--alpha", type=_scalar)
    params.add_argument("--beta", type=_scalar)
    params.add_argument("--gamma0", type=_scalar)

    parser = argparse.ArgumentParser(prog="orthodiff", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common, params], help="generate P_0..P_n of a family")
    p.add_argument("--n", type=_nonneg, required=True)
    p.set_defaults(func=cmd_gen, default_format="json")

    p = sub.add_parser("classify", parents=[common, params],
                       help="classify a gamma sequence (--in) or exp-form parameters")
    p.add_argument("--n", type=_nonneg)
    p.set_defaults(func=cmd_classify, default_format="json")

    p = sub.add_parser("laguerre-op", parents=[common], help="closed-form Laguerre operator p_0..p_n")
    p.add_argument("--n", type=_nonneg, required=True)
    p.set_defaults(func=cmd_laguerre_op, default_format="json")

    p = sub.add_parser("roots", parents=[common, params], help="Sturm root report for a polynomial")
    p.add_argument("--n", type=_nonneg, default=0)
    p.set_defaults(func=cmd_roots, default_format="json")

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", choices=suites.SUITES, default="all")
    p.add_argument("--n", type=_nonneg)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify, default_format="plain")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = args.default_format
    try:
        text, code = args.func(args)
    except UsageError as exc:
        parser.exit(2, f"{parser.prog} {args.command}: error: {exc}\n")
    if args.outfile:
        with open(args.outfile, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
