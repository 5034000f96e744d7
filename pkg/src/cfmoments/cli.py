"""Command-line front end.

Subcommands cover the whole library surface: building the matrix pair
and their product from a coefficient sequence, listing moments, Hankel
determinants by two methods, recovering coefficients from moments,
Riordan arrays from rational series, and replaying the worked examples.

Coefficient sequences a_n are 1-indexed; moment sequences are
0-indexed.  Exit codes: 0 success, 1 verification failure, 2 usage or
parse error, 3 mathematical precondition failure.  Failures put a
one-line reason on stderr prefixed with ``usage-error:``,
``precondition-error:``, or ``verify-failure:``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .cfrac import (
    InsufficientCoefficients,
    QDBreakdownError,
    SFractionCoeffs,
    hankel_from_sfraction,
    moments_from_sfraction,
    qd_sfraction_from_moments,
)
from .pipeline import CatalanLikenessError, compare, verify_example
from .ring import ExactDivisionError, QPoly, QRat, ScalarParseError, parse_scalar, q, render
from .series import RiordanPair, riordan_inverse, riordan_matrix, series_from_rational
from .triangle import ProductionMatrix, Triangle, hankel_transform

__all__ = [
    "SequenceSpec",
    "SpecParseError",
    "SequenceExhausted",
    "parse_spec",
    "parse_matrix_json",
    "run",
    "main",
]


class SpecParseError(ValueError):
    """Sequence spec does not match the grammar; ``offset`` is the byte
    position of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at byte {offset}")
        self.offset = offset


class SequenceExhausted(ValueError):
    """A literal spec ran out of terms before the command was done."""


class SequenceSpec:
    """A rule producing a_1, a_2, ...

    Kinds: ``lit`` (finite list), ``const`` (one value repeated),
    ``cycle`` (optional prefix, then a repeating block), ``qpow``
    (a_n = q^(n-1)).
    """

    __slots__ = ("kind", "prefix", "values")

    def __init__(self, kind, values=(), prefix=()):
        if kind not in ("lit", "const", "cycle", "qpow"):
            raise ValueError(f"unknown spec kind {kind!r}")
        self.kind = kind
        self.prefix = tuple(prefix)
        self.values = tuple(values)

    def term(self, n: int):
        """a_n, 1-indexed."""
        if n < 1:
            raise ValueError("term index is 1-based")
        if self.kind == "qpow":
            return q ** (n - 1)
        if self.kind == "const":
            return self.values[0]
        if self.kind == "lit":
            if n > len(self.values):
                raise SequenceExhausted(
                    f"literal spec has {len(self.values)} terms, term {n} requested"
                )
            return self.values[n - 1]
        if n <= len(self.prefix):
            return self.prefix[n - 1]
        return self.values[(n - len(self.prefix) - 1) % len(self.values)]

    def terms(self, count: int):
        return [self.term(k) for k in range(1, count + 1)]

    def __repr__(self):
        return f"SequenceSpec({self.kind!r}, {list(self.values)!r}, {list(self.prefix)!r})"


def _parse_value_list(body: str, base: int, what: str):
    """Comma-separated scalars with absolute byte offsets."""
    if not body:
        raise SpecParseError(f"empty {what}", base)
    out = []
    pos = 0
    for piece in body.split(","):
        if not piece.strip():
            raise SpecParseError(f"empty value in {what}", base + pos)
        try:
            out.append(parse_scalar(piece))
        except ScalarParseError as e:
            raise SpecParseError(e.reason, base + pos + e.offset) from None
        pos += len(piece) + 1
    return out


def parse_spec(text: str) -> SequenceSpec:
    """Parse ``lit:v1,v2,...`` | ``const:v`` | ``cycle:p1,...`` |
    ``prefix:v1,..|cycle:p1,..`` | ``qpow``."""
    if text == "qpow":
        return SequenceSpec("qpow")
    head, sep, rest = text.partition(":")
    if not sep:
        raise SpecParseError(f"expected 'kind:' in spec {text!r}", 0)
    base = len(head) + 1
    if head == "lit":
        return SequenceSpec("lit", _parse_value_list(rest, base, "value list"))
    if head == "const":
        vals = _parse_value_list(rest, base, "value")
        if len(vals) != 1:
            raise SpecParseError("const takes exactly one value", base)
        return SequenceSpec("const", vals)
    if head == "cycle":
        return SequenceSpec("cycle", _parse_value_list(rest, base, "cycle"))
    if head == "prefix":
        body, bar, tail = rest.partition("|")
        if not bar:
            raise SpecParseError("expected '|cycle:' after the prefix values", len(text))
        prefix = _parse_value_list(body, base, "prefix")
        tail_base = base + len(body) + 1
        ckind, csep, cbody = tail.partition(":")
        if ckind != "cycle" or not csep:
            raise SpecParseError("expected 'cycle:' after '|'", tail_base)
        values = _parse_value_list(cbody, tail_base + len(ckind) + 1, "cycle")
        return SequenceSpec("cycle", values, prefix)
    raise SpecParseError(f"unknown spec kind {head!r}", 0)


# --- serialization ---------------------------------------------------------


def _ring_label(values) -> str:
    return "q" if any(isinstance(v, (QPoly, QRat)) for v in values) else "int"


def _matrix_ring(rows) -> str:
    return _ring_label([v for row in rows for v in row])


def _matrix_json_obj(m):
    return {
        "size": m.size,
        "ring": _matrix_ring(m.rows),
        "rows": [[render(v) for v in row] for row in m.rows],
    }


def parse_matrix_json(text: str):
    """Rebuild a Triangle or ProductionMatrix from its JSON form."""
    obj = json.loads(text)
    rows = [[parse_scalar(s) for s in row] for row in obj["rows"]]
    if all(len(r) == i + 1 for i, r in enumerate(rows)):
        return Triangle(rows)
    return ProductionMatrix(rows)


def _matrix_pretty(rows) -> str:
    texts = [[render(v) for v in row] for row in rows]
    ncols = max(len(r) for r in texts)
    widths = [
        max((len(r[j]) for r in texts if j < len(r)), default=0) for j in range(ncols)
    ]
    return "\n".join(
        "  ".join(r[j].rjust(widths[j]) for j in range(len(r))) for r in texts
    )


def _matrix_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for row in rows:
        w.writerow([render(v) for v in row])
    return buf.getvalue().rstrip("\n")


def _format_matrix(m, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(_matrix_json_obj(m), indent=2)
    if fmt == "csv":
        return _matrix_csv(m.rows)
    return _matrix_pretty(m.rows)


def _format_values(values, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(
            {
                "count": len(values),
                "ring": _ring_label(values),
                "values": [render(v) for v in values],
            },
            indent=2,
        )
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([render(v) for v in values])
        return buf.getvalue().rstrip("\n")
    return " ".join(render(v) for v in values)


def _verify_q_field(args_q, example):
    if example != "qcase":
        return None
    return "symbolic" if args_q is None else args_q


def _format_report(rep, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(
            {
                "example": rep.example,
                "size": rep.size,
                "q": _verify_q_field(rep.q_value, rep.example),
                "checks": [
                    {
                        "name": c.name,
                        "status": c.status,
                        "expected": c.expected,
                        "computed": c.actual,
                        "note": c.note,
                    }
                    for c in rep.checks
                ],
                "pass": rep.passed,
            },
            indent=2,
        )
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        for c in rep.checks:
            w.writerow([c.name, c.status, c.expected, c.actual, c.note])
        return buf.getvalue().rstrip("\n")
    lines = []
    for c in rep.checks:
        if c.status == "pass":
            lines.append(f"PASS {c.name}")
        elif c.status == "documented-discrepancy":
            lines.append(
                f"DISCREPANCY {c.name} reference={c.expected} "
                f"computed={c.actual} note={c.note}"
            )
        else:
            lines.append(
                f"FAIL {c.name} expected={c.expected} "
                f"computed={c.actual} note={c.note}"
            )
    p, f, d = rep.counts
    qpart = _verify_q_field(rep.q_value, rep.example)
    qtext = "" if qpart is None else f" q={qpart}"
    lines.append(
        f"RESULT {'pass' if rep.passed else 'fail'}: {p} passed, {f} failed, "
        f"{d} documented discrepancies (example={rep.example} size={rep.size}{qtext})"
    )
    return "\n".join(lines)


# --- commands --------------------------------------------------------------


class _UsageError(ValueError):
    pass


class _PreconditionError(ValueError):
    pass


_WHAT_ORDER = ("N", "M", "C", "prodN", "prodM", "prodCinv")


def _spec_terms(args, count: int):
    spec = parse_spec(args.spec)
    return spec.terms(count)


def _cmd_gen(args):
    if args.size < 2:
        raise _UsageError("--size must be at least 2")
    terms = _spec_terms(args, 2 * args.size)
    if terms[0] != 1:
        raise _PreconditionError("first coefficient must be 1")
    r = compare(SFractionCoeffs(terms), args.size)
    parts = {
        "N": r.N,
        "M": r.M,
        "C": r.C,
        "prodN": r.prodN,
        "prodM": r.prodM,
        "prodCinv": r.prodCinv,
    }
    if args.what != "all":
        return _format_matrix(parts[args.what], args.format), 0, None
    if args.format == "csv":
        raise _UsageError("csv carries a single matrix; pick one with --what")
    if args.format == "json":
        return (
            json.dumps(
                {name: _matrix_json_obj(parts[name]) for name in _WHAT_ORDER},
                indent=2,
            ),
            0,
            None,
        )
    blocks = [f"{name}:\n{_matrix_pretty(parts[name].rows)}" for name in _WHAT_ORDER]
    return "\n\n".join(blocks), 0, None


def _cmd_moments(args):
    if args.count < 1:
        raise _UsageError("--count must be positive")
    terms = _spec_terms(args, max(args.count - 1, 0))
    mu = moments_from_sfraction(SFractionCoeffs(terms), args.count)
    return _format_values(mu, args.format), 0, None


def _cmd_hankel(args):
    if args.count < 1:
        raise _UsageError("--count must be positive")
    terms = _spec_terms(args, 2 * (args.count - 1))
    s = SFractionCoeffs(terms)
    results = {}
    if args.method in ("det", "both"):
        mu = moments_from_sfraction(s, 2 * args.count - 1)
        results["det"] = hankel_transform(mu, args.count)
    if args.method in ("product", "both"):
        results["product"] = hankel_from_sfraction(s, args.count)
    if args.method != "both":
        return _format_values(results[args.method], args.format), 0, None
    agree = results["det"] == results["product"]
    if args.format == "json":
        text = json.dumps(
            {
                "count": args.count,
                "ring": _ring_label(results["det"] + results["product"]),
                "det": [render(v) for v in results["det"]],
                "product": [render(v) for v in results["product"]],
                "agree": agree,
            },
            indent=2,
        )
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([render(v) for v in results["det"]])
        w.writerow([render(v) for v in results["product"]])
        text = buf.getvalue().rstrip("\n")
    else:
        text = "\n".join(
            [
                "det: " + " ".join(render(v) for v in results["det"]),
                "product: " + " ".join(render(v) for v in results["product"]),
                f"agree: {'yes' if agree else 'no'}",
            ]
        )
    return text, 0, None


def _cmd_qd(args):
    mu = _parse_value_list(args.moments, 0, "moment list")
    try:
        s = qd_sfraction_from_moments(mu)
    except QDBreakdownError:
        raise
    except ValueError as e:
        raise _PreconditionError(str(e)) from None
    return _format_values(list(s.terms), args.format), 0, None


def _rational_coeffs(text: str):
    v = parse_scalar(text, var="x")
    if isinstance(v, QRat):
        num, den = v.num, v.den
    else:
        num, den = v, 1
    ncs = list(num.coeffs) if isinstance(num, QPoly) else [num]
    dcs = list(den.coeffs) if isinstance(den, QPoly) else [den]
    return ncs, dcs


def _cmd_riordan(args):
    if args.size < 1:
        raise _UsageError("--size must be positive")
    order = max(args.size, 2)
    try:
        gn, gd = _rational_coeffs(args.g)
        fn, fd = _rational_coeffs(args.f)
        pair = RiordanPair(
            series_from_rational(gn, gd, order), series_from_rational(fn, fd, order)
        )
        if args.inverse:
            pair = riordan_inverse(pair)
        m = riordan_matrix(pair, args.size)
    except (ValueError, ZeroDivisionError) as e:
        if isinstance(e, (ScalarParseError, _UsageError)):
            raise
        raise _PreconditionError(str(e)) from None
    return _format_matrix(m, args.format), 0, None


def _cmd_verify(args):
    if args.q is not None and args.q_symbolic:
        raise _UsageError("--q and --q-symbolic are mutually exclusive")
    if args.q is not None and args.example != "qcase":
        raise _UsageError("--q applies only to the qcase example")
    try:
        rep = verify_example(args.example, args.size, q_value=args.q)
    except ValueError as e:
        raise _UsageError(str(e)) from None
    text = _format_report(rep, args.format)
    if not rep.passed:
        nfail = rep.counts[1]
        return text, 1, f"verify-failure: {nfail} check(s) failed"
    return text, 0, None


_COMMANDS = {
    "gen": _cmd_gen,
    "moments": _cmd_moments,
    "hankel": _cmd_hankel,
    "qd": _cmd_qd,
    "riordan": _cmd_riordan,
    "verify": _cmd_verify,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("pretty", "json", "csv"),
        default="pretty",
        help="output format (default pretty)",
    )
    common.add_argument("--out", metavar="FILE", help="write output to FILE")
    common.add_argument(
        "--q-symbolic",
        action="store_true",
        dest="q_symbolic",
        help="keep q unevaluated (the default everywhere; spelled out "
        "for scripts that want to be explicit)",
    )
    p = _Parser(
        prog="cfmoments",
        description="Exact matrices, moments, and Hankel data from "
        "continued-fraction coefficient sequences.",
        epilog="Coefficient sequences a_n are 1-indexed; moments are "
        "0-indexed.  Scalars use the canonical rendering, e.g. 17/32 or "
        "1 + q - 2*q^2.  Familiar inputs: 'const:1' yields the Catalan "
        "moments (A000108), 'cycle:1,2' the little Schroeder numbers "
        "(A001003), 'qpow' the geometric q-powers.",
    )
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    spec_help = "sequence spec: lit:v1,v2,... | const:v | cycle:p1,... | prefix:v1,..|cycle:p1,.. | qpow"

    g = sub.add_parser(
        "gen",
        parents=[common],
        help="build the matrix pair and derived matrices",
        description="Build both moment matrices, their product, and the "
        "production matrices from a coefficient sequence.",
    )
    g.add_argument("--spec", required=True, help=spec_help)
    g.add_argument("--size", type=int, required=True, help="matrix size (rows)")
    g.add_argument(
        "--what",
        choices=_WHAT_ORDER + ("all",),
        default="all",
        help="which matrix to print (default all)",
    )

    m = sub.add_parser(
        "moments",
        parents=[common],
        help="series coefficients of the one-parameter form",
        description="First coefficients of the series generated by the "
        "coefficient sequence.",
    )
    m.add_argument("--spec", required=True, help=spec_help)
    m.add_argument("--count", type=int, required=True, help="how many moments")

    h = sub.add_parser(
        "hankel",
        parents=[common],
        help="Hankel determinants by determinant and/or product formula",
        description="Hankel determinants of the moment sequence, by "
        "fraction-free determinant, by the coefficient product formula, "
        "or both for cross-checking.",
    )
    h.add_argument("--spec", required=True, help=spec_help)
    h.add_argument("--count", type=int, required=True, help="how many determinants")
    h.add_argument(
        "--method", choices=("det", "product", "both"), default="both",
        help="evaluation route (default both)",
    )

    d = sub.add_parser(
        "qd",
        parents=[common],
        help="recover coefficients from moments",
        description="Quotient-difference extraction of the coefficient "
        "sequence from a moment list (mu_0 must be 1).",
    )
    d.add_argument(
        "--moments", required=True, help="comma-separated moments mu_0,mu_1,..."
    )

    r = sub.add_parser(
        "riordan",
        parents=[common],
        help="matrix of a Riordan pair given as rationals in x",
        description="Build the lower-triangular array of the pair (g, f); "
        "g and f are rational expressions in x, e.g. --g 1 --f 'x/(1 - x)'.",
    )
    r.add_argument("--g", required=True, help="rational expression in x, g(0) != 0")
    r.add_argument(
        "--f", required=True, help="rational expression in x, f(0) = 0, f'(0) != 0"
    )
    r.add_argument("--size", type=int, required=True, help="matrix size (rows)")
    r.add_argument(
        "--inverse", action="store_true", help="build the group inverse instead"
    )

    v = sub.add_parser(
        "verify",
        parents=[common],
        help="replay a worked example against its reference values",
        description="Run every registered check for a worked example; "
        "known reference disagreements show as documented-discrepancy "
        "and do not fail the run.",
    )
    v.add_argument(
        "--example", required=True, choices=("catalan", "qcase", "schroder")
    )
    v.add_argument("--size", type=int, default=6, help="build size (default 6)")
    v.add_argument(
        "--q", type=int, default=None,
        help="evaluate the qcase example at this integer instead of "
        "symbolically",
    )
    return p


def run(argv) -> int:
    """Execute one command line; returns the exit status."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as e:
        print(f"usage-error: {e}", file=sys.stderr)
        return 2
    except SystemExit as e:  # --help
        return 0 if e.code in (0, None) else 2
    try:
        text, code, complaint = _COMMANDS[args.command](args)
    except (_UsageError, SpecParseError, ScalarParseError) as e:
        print(f"usage-error: {e}", file=sys.stderr)
        return 2
    except (
        _PreconditionError,
        QDBreakdownError,
        CatalanLikenessError,
        InsufficientCoefficients,
        SequenceExhausted,
        ExactDivisionError,
        ZeroDivisionError,
    ) as e:
        print(f"precondition-error: {e}", file=sys.stderr)
        return 3
    if complaint:
        print(complaint, file=sys.stderr)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
