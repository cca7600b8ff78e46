"""Command-line front end.

    orthogs gen     polynomial tables (json, csv or latex)
    orthogs verify  identity suites; exit 1 on any failure
    orthogs det     one generalized Vandermonde determinant, closed form vs brute force
    orthogs bench   timing of closed forms against elimination

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import re
import sys
import time
from fractions import Fraction
from pathlib import Path
from typing import Callable, Sequence

from . import classical, detkit, verify
from .classical import MomentFunctional, Polynomial
from .errors import OrthogsError
from .ratcore import format_rational, parse_rational

NORMALIZATIONS = ("gs-monic", "paper-closed", "standard-hermite")
PRESETS = ("legendre", "chebyshev1", "chebyshev2", "gegenbauer")
DET_KINDS = ("vandermonde", "pochhammer", "gamma", "beta", "beta-ratio", "binomial")
BENCH_KINDS = ("vandermonde", "pochhammer", "gamma", "beta", "beta-ratio")


# argparse only treats "-3" and "-.5" as values; rationals like "-1/2" too
_NEGATIVE_RATIONAL = re.compile(r"^-\d+(/\d+)?$|^-\d*\.\d+$")


class UsageError(Exception):
    pass


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _rational_list(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(parse_rational(t) for t in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _nonneg(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError(f"{n} is negative")
    return n


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError(f"{n} is not positive")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="orthogs", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="emit a table of polynomials")
    source = gen.add_mutually_exclusive_group(required=True)
    source.add_argument("--family", choices=("hermite", "laguerre", "jacobi"))
    source.add_argument("--preset", choices=PRESETS)
    gen.add_argument("--lambda", dest="lam", type=_rational_arg, help="gegenbauer parameter")
    gen.add_argument("--alpha", type=_rational_arg)
    gen.add_argument("--beta", type=_rational_arg)
    gen.add_argument("--max-degree", type=_nonneg, default=5)
    gen.add_argument("--normalization", choices=NORMALIZATIONS, default="gs-monic")
    gen.add_argument("--basis", choices=("monomial", "shifted"), default="monomial")
    gen.add_argument("--format", choices=("json", "csv", "latex"), default="json")
    gen.add_argument("--out", type=Path)

    ver = sub.add_parser("verify", help="run identity suites")
    ver.add_argument("--suite", choices=("all",) + verify.SUITES, default="all")
    ver.add_argument("--max-degree", type=_nonneg, default=8)
    ver.add_argument("--seed", type=_nonneg, default=42)
    ver.add_argument("--size", type=_positive, default=6, help="largest random determinant")
    ver.add_argument("--instances", type=_positive, default=100)
    ver.add_argument("--dim", type=_positive, default=5, help="largest exterior-algebra dimension")
    ver.add_argument("--out", type=Path)

    det = sub.add_parser("det", help="evaluate one determinant identity")
    det.add_argument("--kind", choices=DET_KINDS, required=True)
    det.add_argument("--z", type=_rational_list)
    det.add_argument("--w", type=_rational_arg)
    det.add_argument("--n", type=_positive)
    det.add_argument("--m", type=_nonneg)
    det.add_argument("--format", choices=("text", "json"), default="text")
    det.add_argument("--out", type=Path)

    bench = sub.add_parser("bench", help="time closed forms against elimination")
    bench.add_argument("--kind", choices=BENCH_KINDS, required=True)
    bench.add_argument("--max-n", type=_positive, default=10)
    bench.add_argument("--repeat", type=_positive, default=3)
    bench.add_argument("--seed", type=_nonneg, default=42)
    bench.add_argument("--out", type=Path)

    for p in (parser, gen, ver, det, bench):
        p._negative_number_matcher = _NEGATIVE_RATIONAL
    return parser


# ---------------------------------------------------------------------------
# gen
# ---------------------------------------------------------------------------


def functional_from_args(args: argparse.Namespace) -> MomentFunctional:
    if args.preset:
        if args.alpha is not None or args.beta is not None:
            raise UsageError("--alpha/--beta cannot be combined with --preset")
        if (args.lam is not None) != (args.preset == "gegenbauer"):
            raise UsageError("--lambda is required for, and only for, the gegenbauer preset")
        return classical.preset(args.preset, args.lam)
    if args.lam is not None:
        raise UsageError("--lambda only applies to --preset gegenbauer")
    if args.family == "hermite":
        if args.alpha is not None or args.beta is not None:
            raise UsageError("hermite takes no --alpha/--beta")
        return MomentFunctional.hermite()
    alpha = Fraction(0) if args.alpha is None else args.alpha
    if args.family == "laguerre":
        if args.beta is not None:
            raise UsageError("laguerre takes no --beta")
        return MomentFunctional.laguerre(alpha)
    beta = Fraction(0) if args.beta is None else args.beta
    return MomentFunctional.jacobi(alpha, beta)


def polynomial_table(F: MomentFunctional, max_degree: int, normalization: str, basis: str) -> list[Polynomial]:
    if normalization == "standard-hermite" and F.family != "hermite":
        raise UsageError("standard-hermite normalization applies to the hermite family only")
    if basis == "shifted" and F.family != "jacobi":
        raise UsageError("the shifted basis is only defined for jacobi")
    polys = []
    for n in range(max_degree + 1):
        if normalization == "gs-monic":
            p = classical.gs_polynomial(F, n)
        elif normalization == "paper-closed":
            p = classical.closed_form(F, n)
        else:
            p = classical.closed_hermite(n, standard=True)
        polys.append(classical.to_monomial(p) if basis == "monomial" else p)
    return polys


def _coeff_strings(p: Polynomial) -> list[str]:
    return [format_rational(c) for c in p.coeffs] or ["0"]


def render_json(F: MomentFunctional, normalization: str, basis: str, polys: list[Polynomial]) -> str:
    doc = {
        "family": F.family,
        "alpha": None if F.alpha is None else format_rational(F.alpha),
        "beta": None if F.beta is None else format_rational(F.beta),
        "basis": basis,
        "normalization": normalization,
        "polys": [{"n": n, "coeffs": _coeff_strings(p)} for n, p in enumerate(polys)],
    }
    return json.dumps(doc, indent=2) + "\n"


def render_csv(polys: list[Polynomial]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "power", "coeff"])
    for n, p in enumerate(polys):
        for power, c in enumerate(_coeff_strings(p)):
            w.writerow([n, power, c])
    return buf.getvalue()


def _latex_rational(c: Fraction) -> str:
    c = abs(c)
    if c.denominator == 1:
        return str(c.numerator)
    return rf"\frac{{{c.numerator}}}{{{c.denominator}}}"


def _latex_symbol(F: MomentFunctional, normalization: str, n: int) -> str:
    monic = normalization == "gs-monic"
    a = "" if F.alpha is None else format_rational(F.alpha)
    b = "" if F.beta is None else format_rational(F.beta)
    if F.family == "hermite":
        return f"{'h' if monic else 'H'}_{{{n}}}"
    if F.family == "laguerre":
        return f"{'l' if monic else 'L'}_{{{n}}}^{{({a})}}"
    return f"{'j' if monic else 'J'}_{{{n}}}^{{({a},{b})}}"


def latex_polynomial(p: Polynomial) -> str:
    var = "x" if p.basis == "monomial" else r"\left(\frac{1-x}{2}\right)"
    terms = []
    for power in range(p.degree, -1, -1):
        c = p.coeffs[power]
        if c == 0:
            continue
        mag = _latex_rational(c)
        if power == 0:
            body = mag
        else:
            body = var if power == 1 else f"{var}^{{{power}}}"
            body = body if mag == "1" else f"{mag} {body}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def render_latex(F: MomentFunctional, normalization: str, polys: list[Polynomial]) -> str:
    lines = [r"\begin{align*}"]
    for n, p in enumerate(polys):
        end = r" \\" if n < len(polys) - 1 else ""
        lines.append(f"{_latex_symbol(F, normalization, n)}(x) &= {latex_polynomial(p)}{end}")
    lines.append(r"\end{align*}")
    return "\n".join(lines) + "\n"


def cmd_gen(args: argparse.Namespace) -> tuple[int, str]:
    F = functional_from_args(args)
    polys = polynomial_table(F, args.max_degree, args.normalization, args.basis)
    if args.format == "json":
        text = render_json(F, args.normalization, args.basis, polys)
    elif args.format == "csv":
        text = render_csv(polys)
    else:
        text = render_latex(F, args.normalization, polys)
    return 0, text


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def cmd_verify(args: argparse.Namespace) -> tuple[int, str]:
    results = verify.run_suites(
        args.suite,
        max_degree=args.max_degree,
        seed=args.seed,
        size=args.size,
        instances=args.instances,
        dim=args.dim,
    )
    code = 0 if all(r.passed for r in results) else 1
    return code, verify.report(results)


# ---------------------------------------------------------------------------
# det
# ---------------------------------------------------------------------------


def evaluate_det(kind: str, z=None, w=None, n=None, m=None) -> dict[str, str]:
    """Closed-form and brute-force values of one determinant identity."""
    needs_z = kind != "binomial"
    if needs_z and not z:
        raise UsageError(f"--z is required for {kind}")
    if kind in ("beta", "beta-ratio") and w is None:
        raise UsageError(f"--w is required for {kind}")
    if kind == "binomial" and (n is None or m is None):
        raise UsageError("--n and --m are required for binomial")
    values: dict[str, str] = {}
    if kind == "vandermonde":
        values["closed-form"] = format_rational(detkit.vandermonde_delta(z))
        values["brute-force"] = format_rational(detkit.bareiss_det(detkit.vandermonde_matrix(z)))
    elif kind == "pochhammer":
        values["closed-form"] = format_rational(detkit.pochhammer_matrix_det(z))
        values["brute-force"] = format_rational(detkit.bareiss_det(detkit.pochhammer_matrix(z)))
    elif kind == "gamma":
        values["closed-form"] = str(detkit.det_gamma(z).canonical())
        values["brute-force"] = str(detkit.det_gamma_oracle(z))
    elif kind == "beta":
        values["closed-form"] = str(detkit.det_beta(z, w).canonical())
        values["brute-force"] = str(detkit.det_beta_oracle(z, w))
    elif kind == "beta-ratio":
        values["closed-form"] = format_rational(detkit.pochhammer_ratio_det(z, w))
        values["brute-force"] = format_rational(detkit.bareiss_det(detkit.pochhammer_ratio_matrix(z, w)))
        values["recursive"] = format_rational(detkit.ratio_det_recursive_oracle(z, w))
    else:
        values["closed-form"] = format_rational(detkit.eset_ratio(n, m))
        values["brute-force"] = format_rational(detkit.binomial_ratio_oracle(n, m))
    values["verdict"] = "equal" if len(set(values.values())) == 1 else "different"
    return values


def cmd_det(args: argparse.Namespace) -> tuple[int, str]:
    values = evaluate_det(args.kind, args.z, args.w, args.n, args.m)
    code = 0 if values["verdict"] == "equal" else 1
    if args.format == "json":
        return code, json.dumps({"kind": args.kind, **values}, indent=2) + "\n"
    lines = [f"kind: {args.kind}"] + [f"{k}: {v}" for k, v in values.items()]
    return code, "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# bench
# ---------------------------------------------------------------------------


def _bench_methods(kind: str, z, w) -> dict[str, Callable[[], object]]:
    if kind == "vandermonde":
        return {
            "closed": lambda: detkit.vandermonde_delta(z),
            "bareiss": lambda: detkit.bareiss_det(detkit.vandermonde_matrix(z)),
        }
    if kind == "pochhammer":
        return {
            "closed": lambda: detkit.pochhammer_matrix_det(z),
            "bareiss": lambda: detkit.bareiss_det(detkit.pochhammer_matrix(z)),
        }
    if kind == "gamma":
        return {
            "closed": lambda: detkit.det_gamma(z).canonical(),
            "bareiss": lambda: detkit.det_gamma_oracle(z),
        }
    if kind == "beta":
        return {
            "closed": lambda: detkit.det_beta(z, w).canonical(),
            "bareiss": lambda: detkit.det_beta_oracle(z, w),
        }
    return {
        "closed": lambda: detkit.pochhammer_ratio_det(z, w),
        "bareiss": lambda: detkit.bareiss_det(detkit.pochhammer_ratio_matrix(z, w)),
        "recursive": lambda: detkit.ratio_det_recursive_oracle(z, w),
    }


def cmd_bench(args: argparse.Namespace) -> tuple[int, str]:
    rng = random.Random(f"{args.seed}:bench:{args.kind}")
    positive = args.kind in ("gamma", "beta", "beta-ratio")
    buf = io.StringIO()
    out = csv.writer(buf, lineterminator="\n")
    out.writerow(["n", "method", "seconds"])
    for n in range(1, args.max_n + 1):
        z = verify.random_distinct(rng, n, positive=positive)
        w = verify.random_rational(rng, 1, 20, 4)
        methods = _bench_methods(args.kind, z, w)
        results = {name: fn() for name, fn in methods.items()}
        if len(set(map(str, results.values()))) != 1:
            sys.stderr.write(f"disagreement at n={n}: {results}\n")
            return 1, buf.getvalue()
        for name, fn in methods.items():
            best = min(_time(fn) for _ in range(args.repeat))
            out.writerow([n, name, f"{best:.9f}"])
    return 0, buf.getvalue()


def _time(fn: Callable[[], object]) -> float:
    start = time.perf_counter()
    fn()
    return time.perf_counter() - start


COMMANDS = {"gen": cmd_gen, "verify": cmd_verify, "det": cmd_det, "bench": cmd_bench}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, text = COMMANDS[args.command](args)
    except (UsageError, OrthogsError) as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"orthogs {args.command}: error: {exc}\n")
        return 2
    if args.out is not None:
        args.out.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
