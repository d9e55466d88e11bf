"""Command line front end.

    tightsfs [--format text|json|csv] slope act|inv --matrix a,b,c,d [--slope p/q]
    tightsfs cf expand|count --slope p/q
    tightsfs cf eval --digits -2,-4
    tightsfs seifert normalize|euler --inv "M(0; 1/2, -1/3, -1/7)"
    tightsfs seifert eq --inv X --other Y
    tightsfs seifert slamdunk --inv X --leg 1 --framing -2
    tightsfs family count|table|target --m M --n N --fiber F1|F2
    tightsfs family maxtwist --m M --n N --kmax K

Exit status: 0 on success, 2 on invalid input, 3 when two independent
computations disagree.

CSV columns:
    triangle: a,structures,reg_twist,fiber_twist,contact_coeff,choices
    upper:    l,tw,n1,slope_V3,slope_V2,count
    maxtwist: k,t,n1,n2,s_round,slope_V3,witness,witness_twist,verdict
    count:    m,n,fiber,lower,upper,closed,agrees
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Callable, Optional, Sequence

from . import family as fam
from .seifert import (
    SeifertInvariants,
    UnsupportedError,
    euler_number,
    is_equivalent,
    meridian_surgery,
    normalize,
)
from .slopes import DomainError, InvalidSlope, Mat2, Slope, act, cf_eval, honda_count, invert, neg_cf

EXIT_OK, EXIT_INPUT, EXIT_CONSISTENCY = 0, 2, 3


class Output:
    """One result in the three output formats."""

    def __init__(self, data: dict, text: str, header: Sequence[str], rows: list[Sequence]):
        self.data = data
        self.text = text
        self.header = header
        self.rows = rows

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.data, indent=2, sort_keys=True) + "\n"
        if fmt == "csv":
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(self.header)
            writer.writerows(self.rows)
            return buf.getvalue()
        return self.text.rstrip("\n") + "\n"


def table(header: Sequence[str], rows: list[Sequence]) -> str:
    cells = [[str(h) for h in header]] + [[str(v) for v in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = [" | ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells]
    lines.insert(1, "-+-".join("-" * w for w in widths))
    return "\n".join(lines)


def _framing(text: str) -> Optional[int]:
    return None if text.lower() in ("inf", "none") else int(text)


def _digits(text: str) -> list[int]:
    try:
        return [int(d) for d in text.split(",")]
    except ValueError as exc:
        raise DomainError(f"bad digit list {text!r}") from exc


# -- handlers ---------------------------------------------------------------


def cmd_slope(args) -> tuple[Output, int]:
    M = Mat2.parse(args.matrix)
    if args.op == "inv":
        Mi = invert(M)
        if args.slope is None:
            data = {"matrix": [M.a, M.b, M.c, M.d], "inverse": [Mi.a, Mi.b, Mi.c, Mi.d]}
            return Output(data, str(Mi), ["a", "b", "c", "d"], [[Mi.a, Mi.b, Mi.c, Mi.d]]), EXIT_OK
        M = Mi
    elif args.slope is None:
        raise DomainError("slope act needs --slope")
    s = Slope.parse(args.slope)
    r = act(M, s)
    data = {"matrix": [M.a, M.b, M.c, M.d], "slope": str(s), "result": str(r)}
    return Output(data, str(r), ["matrix", "slope", "result"], [[f"{M.a},{M.b},{M.c},{M.d}", s, r]]), EXIT_OK


def cmd_cf(args) -> tuple[Output, int]:
    if args.op == "eval":
        if args.digits is None:
            raise DomainError("cf eval needs --digits")
        digits = _digits(args.digits)
        s = cf_eval(digits)
        data = {"digits": digits, "slope": str(s)}
        return Output(data, str(s), ["digits", "slope"], [[" ".join(map(str, digits)), s]]), EXIT_OK
    if args.slope is None:
        raise DomainError(f"cf {args.op} needs --slope")
    s = Slope.parse(args.slope)
    if args.op == "expand":
        digits = neg_cf(s)
        data = {"slope": str(s), "digits": digits}
        text = "[" + ", ".join(map(str, digits)) + "]"
        return Output(data, text, ["slope", "digits"], [[s, " ".join(map(str, digits))]]), EXIT_OK
    c = honda_count(s)
    return Output({"slope": str(s), "count": c}, str(c), ["slope", "count"], [[s, c]]), EXIT_OK


def cmd_seifert(args) -> tuple[Output, int]:
    x = SeifertInvariants.parse(args.inv)
    if args.op == "normalize":
        y = normalize(x)
        return Output({"input": x.to_dict(), "normalized": y.to_dict()}, str(y),
                      ["input", "normalized"], [[x, y]]), EXIT_OK
    if args.op == "euler":
        e = euler_number(x)
        es = f"{e.numerator}/{e.denominator}"
        return Output({"input": x.to_dict(), "euler": es}, es, ["input", "euler"], [[x, es]]), EXIT_OK
    if args.op == "eq":
        if args.other is None:
            raise DomainError("seifert eq needs --other")
        y = SeifertInvariants.parse(args.other)
        eq = is_equivalent(x, y)
        return Output({"x": x.to_dict(), "y": y.to_dict(), "equivalent": eq}, str(eq).lower(),
                      ["x", "y", "equivalent"], [[x, y, eq]]), EXIT_OK
    if args.leg is None or args.framing is None:
        raise DomainError("seifert slamdunk needs --leg and --framing")
    f = _framing(args.framing)
    y = meridian_surgery(x, args.leg, f)
    data = {"input": x.to_dict(), "leg": args.leg, "framing": f, "result": y.to_dict()}
    return Output(data, str(y), ["input", "leg", "framing", "result"], [[x, args.leg, f, y]]), EXIT_OK


TRIANGLE_COLS = ["a", "structures", "reg_twist", "fiber_twist", "contact_coeff", "choices"]
UPPER_COLS = ["l", "tw", "n1", "slope_V3", "slope_V2", "count"]
MAXTWIST_COLS = ["k", "t", "n1", "n2", "s_round", "slope_V3", "witness", "witness_twist", "verdict"]


def _params(args) -> fam.FamilyParams:
    p = fam.FamilyParams(args.m, args.n, fam.Fiber[args.fiber])
    if not p.in_range:
        print(f"warning: n={p.n} is outside 1 <= n < {p.n_limit}; hypothesis violated",
              file=sys.stderr)
    return p


def cmd_family(args) -> tuple[Output, int]:
    if args.op == "maxtwist":
        report = fam.max_twist_report(args.m, args.n, args.kmax)
        dicts = [v.to_dict() for v in report]
        rows = [["" if d[c] is None else d[c] for c in MAXTWIST_COLS] for d in dicts]
        text = table(MAXTWIST_COLS, rows) + "\n\n" + "\n".join(
            f"k={v.k}: {v.verdict} ({v.reason})" for v in report)
        data = {"m": args.m, "n": args.n, "kmax": args.kmax, "verdicts": dicts}
        return Output(data, text, MAXTWIST_COLS, rows), EXIT_OK

    p = _params(args)
    if args.op == "target":
        surgered, stated, eq = fam.target_manifold(p)
        data = {"params": p.to_dict(), "surgery": surgered.to_dict(), "stated": stated.to_dict(),
                "equivalent": eq}
        text = f"{surgered} == {stated}: {str(eq).lower()}"
        code = EXIT_OK if eq else EXIT_CONSISTENCY
        return Output(data, text, ["surgery", "stated", "equivalent"], [[surgered, stated, eq]]), code

    report = fam.count_report(p)
    if args.op == "table":
        if args.which == "triangle":
            rows = [[getattr(r, c) for c in TRIANGLE_COLS] for r in report.rows_lower]
            data = {"params": p.to_dict(), "rows_lower": [r.to_dict() for r in report.rows_lower]}
            return Output(data, table(TRIANGLE_COLS, rows), TRIANGLE_COLS, rows), EXIT_OK
        rows = [[getattr(r, c) for c in UPPER_COLS] for r in report.rows_upper]
        data = {"params": p.to_dict(), "rows_upper": [r.to_dict() for r in report.rows_upper]}
        return Output(data, table(UPPER_COLS, rows), UPPER_COLS, rows), EXIT_OK

    values = {"lower": report.lower_total, "upper": report.upper_total, "closed": report.closed_form}
    shown = list(values) if args.bound == "all" else [args.bound]
    data = {"params": p.to_dict(), **{k: values[k] for k in shown},
            "hypothesis_violated": report.hypothesis_violated}
    text = " ".join(f"{k}={values[k]}" for k in shown)
    code = EXIT_OK
    if args.bound == "all":
        data["agrees"] = report.agrees
        if not report.agrees:
            code = EXIT_CONSISTENCY
    header = ["m", "n", "fiber", "lower", "upper", "closed", "agrees"]
    row = [p.m, p.n, p.fiber.name, report.lower_total, report.upper_total, report.closed_form,
           report.agrees]
    return Output(data, text, header, [row]), code


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["text", "json", "csv"], default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="tightsfs", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=["text", "json", "csv"], default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("slope", parents=[fmt], help="act on slopes by det-1 matrices")
    p.add_argument("op", choices=["act", "inv"])
    p.add_argument("--matrix", required=True)
    p.add_argument("--slope")
    p.set_defaults(func=cmd_slope)

    p = sub.add_parser("cf", parents=[fmt], help="negative continued fractions and solid-torus counts")
    p.add_argument("op", choices=["expand", "eval", "count"])
    p.add_argument("--slope")
    p.add_argument("--digits")
    p.set_defaults(func=cmd_cf)

    p = sub.add_parser("seifert", parents=[fmt], help="Seifert invariant calculus")
    p.add_argument("op", choices=["normalize", "eq", "euler", "slamdunk"])
    p.add_argument("--inv", required=True)
    p.add_argument("--other")
    p.add_argument("--leg", type=int)
    p.add_argument("--framing")
    p.set_defaults(func=cmd_seifert)

    p = sub.add_parser("family", parents=[fmt], help="counts for the surgery families")
    p.add_argument("op", choices=["count", "table", "maxtwist", "target"])
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--fiber", choices=["F1", "F2"], default="F1")
    p.add_argument("--bound", choices=["lower", "upper", "closed", "all"], default="all")
    p.add_argument("--which", choices=["triangle", "upper"], default="upper")
    p.add_argument("--kmax", type=int, default=6)
    p.set_defaults(func=cmd_family)
    return parser


VALUE_FLAGS = ("--matrix", "--slope", "--digits", "--framing", "--inv", "--other")


def _glue_values(argv: Sequence[str]) -> list[str]:
    # argparse reads "-5/1" as an option; bind literal values to their flag.
    out, it = [], iter(argv)
    for tok in it:
        if tok in VALUE_FLAGS:
            out.append(f"{tok}={next(it, '')}")
        else:
            out.append(tok)
    return out


def run(argv: Sequence[str], out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(_glue_values(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    handler: Callable = args.func
    try:
        output, code = handler(args)
    except (DomainError, InvalidSlope, UnsupportedError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    except fam.ConsistencyError as exc:
        print(f"consistency failure: {exc}", file=err)
        return EXIT_CONSISTENCY
    out.write(output.render(args.format))
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
