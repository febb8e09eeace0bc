"""Command-line front end: triangles, determinants, closed forms, Jacobi
parameters and verification suites, with exact pretty/JSON/CSV output.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 mathematical error (pole, singular leading minor, division by zero).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .closed_forms import FORMULAS, closed_form, oracle_matrix
from .errors import HankelkitError, MissingParameter, NotNormalized, ParseError
from .field import FieldElem, coeff_strings, parse_field_expr
from .hankel import det_exact, det_from_jacobi, hankel_matrix, jacobi_from_moments
from .sequences import ExplicitSeq, MomentSeq, parse_sequence_spec
from .triangle import JacobiParams, TSeq, Triangle, build_triangle, build_zero_s_triangle, contract
from .verify import SUITES, SuiteSpec, report_to_csv, report_to_json, report_to_text, run_suite

USAGE_ERROR = 2
MATH_ERROR = 3


def _elem_json(x: FieldElem) -> dict:
    return {"num_coeffs": coeff_strings(x.num), "den_coeffs": coeff_strings(x.den)}


def _emit(text: str) -> None:
    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")


def _emit_value(command: str, params: dict, value: FieldElem, cross, fmt: str) -> None:
    """cross is None or a (oracle_value, matches) pair."""
    if fmt == "json":
        payload = {
            "command": command,
            "params": params,
            "result": _elem_json(value),
            "cross_check": None
            if cross is None
            else {"oracle": _elem_json(cross[0]), "matches": cross[1]},
        }
        _emit(json.dumps(payload, indent=2, sort_keys=True))
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        header = ["command"] + list(params) + ["result"]
        row = [command] + [str(v) for v in params.values()] + [str(value)]
        if cross is not None:
            header += ["oracle", "matches"]
            row += [str(cross[0]), cross[1]]
        writer.writerow(header)
        writer.writerow(row)
        _emit(buf.getvalue())
    else:
        _emit(str(value))
        if cross is not None:
            _emit(f"cross-check: {cross[0]}")
            _emit(f"matches: {'yes' if cross[1] else 'no'}")


def _parse_expr_list(text: str):
    return [parse_field_expr(part) for part in text.split(",")]


def _triangle_params(args) -> tuple[Triangle, dict]:
    rows = args.rows
    if rows < 1:
        raise ValueError("--rows must be at least 1")
    if args.seq:
        seq = parse_sequence_spec(args.seq)
        jp = jacobi_from_moments(seq, rows)
        return build_triangle(jp, rows - 1), {"seq": args.seq, "rows": rows}
    if args.T:
        values = _parse_expr_list(args.T)
        # the parity-split recurrence reads T(0..rows-3); contraction to
        # (s, t) reaches twice as far, up to T(2*rows-4)
        needed = max(rows - 2, 0) if args.zero_s else max(2 * rows - 3, 0)
        if len(values) == 1:
            T = TSeq.constant(values[0])
        else:
            if len(values) < needed:
                raise ValueError(f"--T table needs at least {needed} values for {rows} rows")
            T = TSeq(values)
        params = {"T": args.T, "rows": rows, "zero_s": bool(args.zero_s)}
        if args.zero_s:
            return build_zero_s_triangle(T, rows - 1), params
        return build_triangle(contract(T), rows - 1), params
    if args.s and args.t:
        s_vals = _parse_expr_list(args.s)
        t_vals = _parse_expr_list(args.t)
        if rows >= 2 and (len(s_vals) < rows - 1 or len(t_vals) < rows - 2):
            raise ValueError(f"--s needs {rows - 1} and --t needs {max(rows - 2, 0)} values")
        jp = JacobiParams(s_vals, t_vals)
        return build_triangle(jp, rows - 1), {"s": args.s, "t": args.t, "rows": rows}
    raise ValueError("triangle needs --seq, --T, or both --s and --t")


def cmd_triangle(args) -> int:
    tri, params = _triangle_params(args)
    if args.format == "json":
        payload = {
            "command": "triangle",
            "params": params,
            "rows": [[_elem_json(v) for v in row] for row in tri.rows],
        }
        _emit(json.dumps(payload, indent=2, sort_keys=True))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        for row in tri.rows:
            writer.writerow([str(v) for v in row])
        _emit(buf.getvalue())
    else:
        for row in tri.rows:
            _emit(" ".join(str(v) for v in row))
    return 0


def _det_by_jacobi(seq: MomentSeq, n: int, m: int) -> FieldElem:
    """Determinant through the Jacobi-parameter t-product; shifted sequences
    are normalized first, d(n, m) = c(m)^n * det(shifted / c(m))."""
    if m == 0:
        return det_from_jacobi(jacobi_from_moments(seq, n), n)
    cm = seq.term(m)
    if cm.is_zero:
        raise NotNormalized(f"cannot normalize the shifted sequence: c({m}) = 0")
    shifted = ExplicitSeq([seq.term(m + k) / cm for k in range(2 * n - 1)])
    return cm ** n * det_from_jacobi(jacobi_from_moments(shifted, n), n)


def cmd_det(args) -> int:
    seq = parse_sequence_spec(args.seq)
    if args.n < 1:
        raise ValueError("--n must be at least 1")
    params = {"seq": args.seq, "n": args.n, "m": args.m, "via": args.via,
              "engine": args.engine}
    oracle_value = None
    lemma_value = None
    if args.via == "oracle" or args.cross_check:
        oracle_value = det_exact(hankel_matrix(seq, args.n, args.m), args.engine)
    if args.via == "lemma" or args.cross_check:
        lemma_value = _det_by_jacobi(seq, args.n, args.m)
    value = lemma_value if args.via == "lemma" else oracle_value
    cross = None
    if args.cross_check:
        other = lemma_value if args.via == "oracle" else oracle_value
        cross = (other, other == value)
    _emit_value("det", params, value, cross, args.format)
    return 0


def cmd_closed_form(args) -> int:
    x = parse_field_expr(args.x).as_rational() if args.x is not None else None
    params = {"formula": args.formula, "n": args.n, "m": args.m}
    if x is not None:
        params["x"] = str(x)
    value = closed_form(args.formula, args.n, args.m, x)
    cross = None
    if args.cross_check:
        oracle = det_exact(oracle_matrix(args.formula, args.n, args.m, x), args.engine)
        cross = (oracle, oracle == value)
    _emit_value("closed-form", params, value, cross, args.format)
    return 0


def cmd_jacobi(args) -> int:
    seq = parse_sequence_spec(args.seq)
    if args.depth < 2:
        raise ValueError("--depth must be at least 2")
    jp = jacobi_from_moments(seq, args.depth)
    s = jp.s_list(args.depth - 1)
    t = jp.t_list(args.depth - 1)
    params = {"seq": args.seq, "depth": args.depth}
    if args.format == "json":
        payload = {
            "command": "jacobi",
            "params": params,
            "s": [_elem_json(v) for v in s],
            "t": [_elem_json(v) for v in t],
        }
        _emit(json.dumps(payload, indent=2, sort_keys=True))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["k"] + list(range(args.depth - 1)))
        writer.writerow(["s"] + [str(v) for v in s])
        writer.writerow(["t"] + [str(v) for v in t])
        _emit(buf.getvalue())
    else:
        _emit("s: " + ", ".join(str(v) for v in s))
        _emit("t: " + ", ".join(str(v) for v in t))
    return 0


def cmd_verify(args) -> int:
    spec = SuiteSpec(
        suite=args.suite,
        n_max=args.n_max,
        m_max=args.m_max,
        engine=args.engine,
        seed=args.seed,
    )
    report = run_suite(spec)
    if args.format == "json":
        text = report_to_json(report)
    elif args.format == "csv":
        text = report_to_csv(report)
    else:
        text = report_to_text(report)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        _emit(f"report written to {args.out}")
        _emit(
            f"{report.counts['total']} cases: {report.counts['passed']} passed, "
            f"{report.counts['failed']} failed, "
            f"{report.counts['expected_failures']} expected failures, "
            f"{report.counts['anomalies']} anomalies"
        )
    else:
        _emit(text)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hankelkit",
        description="Exact Hankel determinants of combinatorial moment sequences "
        "and their q-analogues.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("pretty", "json", "csv"), default="pretty")

    p = sub.add_parser("triangle", help="build and print a moment triangle")
    p.add_argument("--seq", help="sequence spec (see README for the mini-syntax)")
    p.add_argument("--T", help="comma-separated weight values; one value means constant")
    p.add_argument("--zero-s", action="store_true", dest="zero_s",
                   help="run the parity-split recurrence driven by --T")
    p.add_argument("--s", help="comma-separated s table")
    p.add_argument("--t", help="comma-separated t table")
    p.add_argument("--rows", type=int, required=True, help="number of rows to print")
    add_format(p)
    p.set_defaults(fn=cmd_triangle)

    p = sub.add_parser("det", help="exact Hankel determinant of a sequence")
    p.add_argument("--seq", required=True)
    p.add_argument("--n", type=int, required=True, help="matrix dimension")
    p.add_argument("--m", type=int, default=0, help="index shift of the entries")
    p.add_argument("--via", choices=("oracle", "lemma"), default="oracle",
                   help="oracle = elimination engines, lemma = Jacobi t-product")
    p.add_argument("--engine", choices=("bareiss", "division"), default="bareiss")
    p.add_argument("--cross-check", action="store_true", dest="cross_check",
                   help="compute both routes and compare")
    add_format(p)
    p.set_defaults(fn=cmd_det)

    p = sub.add_parser("closed-form", help="evaluate a registry formula")
    p.add_argument("formula", choices=sorted(FORMULAS))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--x", help="rational parameter for the x-dependent formulas")
    p.add_argument("--engine", choices=("bareiss", "division"), default="bareiss")
    p.add_argument("--cross-check", action="store_true", dest="cross_check",
                   help="also compute the brute-force determinant of the defining matrix")
    add_format(p)
    p.set_defaults(fn=cmd_closed_form)

    p = sub.add_parser("jacobi", help="recover (s, t) from moments")
    p.add_argument("--seq", required=True)
    p.add_argument("--depth", type=int, required=True,
                   help="consumes moments 0..2*depth-2, returns depth-1 parameters")
    add_format(p)
    p.set_defaults(fn=cmd_jacobi)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=SUITES + ("all",))
    p.add_argument("--n-max", type=int, default=5, dest="n_max")
    p.add_argument("--m-max", type=int, default=3, dest="m_max")
    p.add_argument("--engine", choices=("bareiss", "division"), default="bareiss")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="write the report to a file instead of stdout")
    add_format(p)
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ParseError, MissingParameter, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except HankelkitError as exc:
        print(f"math error: {exc}", file=sys.stderr)
        return MATH_ERROR


if __name__ == "__main__":
    sys.exit(main())
