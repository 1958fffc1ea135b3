"""Command line interface.

Exit codes: 0 success, 1 usage error, 2 failed mathematical self-check.
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import groupby

from aronhold import gct
from aronhold.stabilizer import NonIntegralAverage
from aronhold.symfunc import NonIntegralRecurrence, NotACharacter, SchurExpansion, multi_lr, plethysm_coeff, schur_mul
from aronhold.weights import ZERO, NotDominant, parse_partition

EXIT_USAGE = 1
EXIT_ASSERTION = 2
SOFT_MAX_DEGREE = 12
INTERNAL_ERRORS = (
    gct.MethodMismatch,
    gct.BugNegative,
    NotACharacter,
    NonIntegralRecurrence,
    NonIntegralAverage,
    AssertionError,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _partition_arg(text: str):
    try:
        return parse_partition(text)
    except (ValueError, NotDominant) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def _row_dict(row: gct.MultiplicityRow) -> dict:
    return {"a": row.a, "b": row.b, "m": row.m, "lambda": list(row.lam), "degree": row.degree}


def format_rows(rows: list[gct.MultiplicityRow], fmt: str, header: bool = False) -> str:
    blocks = [list(g) for _, g in groupby(rows, key=lambda r: r.degree)]
    if fmt == "json":
        return json.dumps([[_row_dict(r) for r in block] for block in blocks]) + "\n"
    if fmt == "markdown":
        parts = []
        for block in blocks:
            lines = ["| a | b | m | lambda | degree |", "|---:|---:|---:|:---|---:|"]
            lines += [f"| {r.a} | {r.b} | {r.m} | {r.lam} | {r.degree} |" for r in block]
            parts.append("\n".join(lines) + "\n")
        return "\n".join(parts)
    parts = ["".join(f"{r.a}\t{r.b}\t{r.m}\t{r.lam}\t{r.degree}\n" for r in block) for block in blocks]
    body = "\n".join(parts)
    return ("a\tb\tm\tlambda\tdegree\n" + body) if header else body


def _format_scalar(value: int, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"value": value}) + "\n"
    return f"{value}\n"


def _format_expansion(exp: SchurExpansion, fmt: str) -> str:
    if fmt == "json":
        return json.dumps([{"lambda": list(k), "multiplicity": exp[k]} for k in sorted(exp)]) + "\n"
    if fmt == "markdown":
        lines = ["| multiplicity | lambda |", "|---:|:---|"] + [f"| {exp[k]} | {k} |" for k in sorted(exp)]
        return "\n".join(lines) + "\n"
    return exp.to_text()


def cmd_table(args) -> str:
    if args.max_degree > SOFT_MAX_DEGREE:
        print(f"warning: --max-degree {args.max_degree} above {SOFT_MAX_DEGREE} may run for a long time", file=sys.stderr)
    if args.min_degree > args.max_degree:
        raise UsageError("--min-degree exceeds --max-degree")
    rows = gct.multiplicity_table(args.max_degree, args.method, jobs=args.jobs, min_degree=args.min_degree)
    return format_rows(rows, args.format, header=args.header)


def cmd_query(args) -> str:
    kind = args.command
    if kind == "pleth":
        return _format_scalar(plethysm_coeff(args.d, args.m, args.lam), args.format)
    if kind == "alambda":
        return _format_scalar(gct.a_lambda(args.lam, args.method), args.format)
    if kind == "blambda":
        return _format_scalar(gct.b_lambda(args.lam), args.format)
    if kind == "mlambda":
        return _format_scalar(gct.m_lambda(args.lam, args.method), args.format)
    if kind == "lr":
        if args.target is not None:
            return _format_scalar(multi_lr(args.factors, args.target), args.format)
        exp = SchurExpansion({ZERO: 1})
        for nu in args.factors:
            nxt: dict = {}
            for alpha, c in exp.items():
                for beta, k in schur_mul(alpha, nu).items():
                    nxt[beta] = nxt.get(beta, 0) + c * k
            exp = SchurExpansion(nxt)
        return _format_expansion(exp, args.format)
    raise UsageError(f"unknown query {kind}")


def cmd_validate(args) -> tuple[str, bool]:
    report = gct.validate(args.max_degree, jobs=args.jobs)
    lines = []
    for check in report.checks:
        status = "PASS" if check.passed else "FAIL"
        line = f"[{status}] {check.name}"
        if check.detail:
            line += f": {check.detail}"
        lines.append(line)
        for ce in check.counterexamples:
            lines.append(f"    counterexample: {ce}")
    lines.append("all checks passed" if report.passed else "SOME CHECKS FAILED")
    return "\n".join(lines) + "\n", report.passed


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="aronhold", description="GL(3) multiplicities for the Fermat cubic orbit closure")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, method=False):
        p.add_argument("--format", choices=("tsv", "json", "markdown"), default="tsv")
        if method:
            p.add_argument("--method", choices=gct.METHODS, default="both")

    t = sub.add_parser("table", help="multiplicity table a, b, m by degree")
    t.add_argument("--max-degree", type=_positive, required=True)
    t.add_argument("--min-degree", type=_positive, default=1)
    t.add_argument("--jobs", type=_positive, default=1)
    t.add_argument("--header", action="store_true")
    common(t, method=True)

    p = sub.add_parser("pleth", help="plethysm coefficient a(d, m, lambda)")
    p.add_argument("d", type=_nonneg)
    p.add_argument("m", type=_positive)
    p.add_argument("lam", type=_partition_arg)
    common(p)

    for name, helptext, method in (
        ("alambda", "multiplicity in the polynomial part of C[orbit]", True),
        ("blambda", "multiplicity in C[orbit closure]", False),
        ("mlambda", "multiplicity in the quotient", True),
    ):
        q = sub.add_parser(name, help=helptext)
        q.add_argument("lam", type=_partition_arg)
        common(q, method=method)

    lr = sub.add_parser("lr", help="product of Schur polynomials, or one multi-LR coefficient with --target")
    lr.add_argument("factors", type=_partition_arg, nargs="*")
    lr.add_argument("--target", type=_partition_arg)
    common(lr)

    v = sub.add_parser("validate", help="run the self-consistency checks")
    v.add_argument("--max-degree", type=_positive, required=True)
    v.add_argument("--jobs", type=_positive, default=1)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "table":
            out, ok = cmd_table(args), True
        elif args.command == "validate":
            out, ok = cmd_validate(args)
        else:
            out, ok = cmd_query(args), True
    except UsageError as exc:
        print(f"aronhold: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except INTERNAL_ERRORS as exc:
        print(f"aronhold: internal check failed: {exc}", file=sys.stderr)
        return EXIT_ASSERTION
    sys.stdout.write(out)
    return 0 if ok else EXIT_ASSERTION


if __name__ == "__main__":
    sys.exit(main())
