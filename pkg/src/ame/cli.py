"""Console front end for the invariant tables, existence checks, and oracle.

Exit codes are a stable contract: 0 = pass / existence not excluded, 1 =
usage or I/O error, 2 = negative finding (a pair ruled out, or a state
failing verification).  Algebraic quantities are always rendered exactly
-- a bare integer when the denominator is 1, otherwise "p/q" -- and JSON
carries numerator and denominator as decimal strings, since the values
overflow 64-bit integers long before the desk-scale limits do.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from fractions import Fraction

from . import oracle
from .enumerator import (
    SystemParams,
    build_system,
    explicit_inverse,
    solve_traces,
    trace_closed_form,
)
from .existence import check, i2_counterexamples, scan


def fmt_exact(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def json_exact(x: Fraction) -> dict[str, str]:
    return {"numerator": str(x.numerator), "denominator": str(x.denominator)}


def _emit_json(doc: dict) -> None:
    print(json.dumps(doc, indent=2))


def _md_table(header: list[str], rows: list[list[str]]) -> str:
    lines = [
        "| " + " | ".join(header) + " |",
        "| " + " | ".join("---" for _ in header) + " |",
    ]
    lines += ["| " + " | ".join(row) + " |" for row in rows]
    return "\n".join(lines)


# --- table ---------------------------------------------------------------


def cmd_table(args: argparse.Namespace) -> int:
    d, n_min, n_max = args.d, args.n_min, args.n_max
    if d < 2 or n_min < 2:
        raise ValueError(f"need d >= 2 and n >= 2, got d={d}, n_min={n_min}")
    if n_min > n_max:
        raise ValueError(f"empty range: n_min={n_min} > n_max={n_max}")
    columns = list(range(1, (n_max + 1) // 2 + 1))
    rows = []
    for n in range(n_min, n_max + 1):
        params = SystemParams(n=n, d=d)
        profile = solve_traces(params)
        rows.append((n, {i: profile.traces[i] for i in range(1, params.i_max + 1)}))
    if args.format == "json":
        _emit_json(
            {
                "command": "table",
                "d": d,
                "n_min": n_min,
                "n_max": n_max,
                "columns": columns,
                "rows": [
                    {"n": n, "cells": {str(i): json_exact(v) for i, v in cells.items()}}
                    for n, cells in rows
                ],
            }
        )
    elif args.format == "csv":
        print(",".join(["n"] + [f"i={i}" for i in columns]))
        for n, cells in rows:
            print(",".join([str(n)] + [fmt_exact(cells[i]) if i in cells else "" for i in columns]))
    else:
        header = ["n"] + [f"i={i}" for i in columns]
        body = [
            [str(n)] + [fmt_exact(cells[i]) if i in cells else "" for i in columns]
            for n, cells in rows
        ]
        print(_md_table(header, body))
    return 0


# --- check ---------------------------------------------------------------


def cmd_check(args: argparse.Namespace) -> int:
    verdict = check(SystemParams(n=args.n, d=args.d))
    profile = verdict.profile
    order = range(1, verdict.params.i_max + 1)
    if args.format == "json":
        _emit_json(
            {
                "command": "check",
                "n": args.n,
                "d": args.d,
                "scott_satisfied": verdict.scott_satisfied,
                "ruled_out": verdict.ruled_out,
                "witness_i": verdict.witness_i,
                "traces": {str(i): json_exact(profile.traces[i]) for i in order},
                "eigenvalues": {str(i): json_exact(profile.eigenvalues[i]) for i in order},
            }
        )
    elif args.format == "csv":
        print("n,d,i,trace,eigenvalue,scott_satisfied,ruled_out,witness_i")
        for i in order:
            print(
                ",".join(
                    [
                        str(args.n),
                        str(args.d),
                        str(i),
                        fmt_exact(profile.traces[i]),
                        fmt_exact(profile.eigenvalues[i]),
                        str(verdict.scott_satisfied).lower(),
                        str(verdict.ruled_out).lower(),
                        "" if verdict.witness_i is None else str(verdict.witness_i),
                    ]
                )
            )
    else:
        body = [
            [str(i), fmt_exact(profile.traces[i]), fmt_exact(profile.eigenvalues[i])]
            for i in order
        ]
        print(_md_table(["i", "trace", "eigenvalue"], body))
        print()
        print(f"scott bound satisfied: {str(verdict.scott_satisfied).lower()}")
        print(f"ruled out: {str(verdict.ruled_out).lower()}")
        witness = "none" if verdict.witness_i is None else str(verdict.witness_i)
        print(f"witness i: {witness}")
    return 2 if verdict.ruled_out else 0


# --- scan ----------------------------------------------------------------


def cmd_scan(args: argparse.Namespace) -> int:
    if args.d_max < 2 or args.n_max < 2:
        raise ValueError(f"need bounds >= 2, got d_max={args.d_max}, n_max={args.n_max}")
    verdicts = scan((2, args.d_max), (2, args.n_max))
    bad = i2_counterexamples(verdicts)
    holds = not bad
    if args.format == "json":
        _emit_json(
            {
                "command": "scan",
                "d_max": args.d_max,
                "n_max": args.n_max,
                "grid": [
                    {
                        "d": v.params.d,
                        "n": v.params.n,
                        "ruled_out": v.ruled_out,
                        "witness_i": v.witness_i,
                        "scott_satisfied": v.scott_satisfied,
                    }
                    for v in verdicts
                ],
                "first_negative_at_i2": {
                    "holds": holds,
                    "counterexamples": [{"d": p.d, "n": p.n} for p in bad],
                },
            }
        )
        return 0
    summary = (
        "first negative trace always at i=2: holds"
        if holds
        else "first negative trace always at i=2: fails at "
        + ", ".join(f"(n={p.n}, d={p.d})" for p in bad)
    )
    if args.format == "csv":
        print("d,n,ruled_out,witness_i,scott_satisfied")
        for v in verdicts:
            print(
                ",".join(
                    [
                        str(v.params.d),
                        str(v.params.n),
                        str(v.ruled_out).lower(),
                        "" if v.witness_i is None else str(v.witness_i),
                        str(v.scott_satisfied).lower(),
                    ]
                )
            )
        print(f"# {summary}")
    else:
        body = [
            [
                str(v.params.d),
                str(v.params.n),
                str(v.ruled_out).lower(),
                "" if v.witness_i is None else str(v.witness_i),
                str(v.scott_satisfied).lower(),
            ]
            for v in verdicts
        ]
        print(_md_table(["d", "n", "ruled_out", "witness_i", "scott_satisfied"], body))
        print()
        print(summary)
    return 0


# --- solve ---------------------------------------------------------------


def _matrix_json(rows: tuple[tuple[Fraction, ...], ...]) -> list[list[dict[str, str]]]:
    return [[json_exact(entry) for entry in row] for row in rows]


def _print_md_matrix(title: str, rows) -> None:
    size = len(rows)
    print(f"### {title}")
    header = ["l\\j"] + [str(j) for j in range(1, size + 1)]
    body = [[str(l + 1)] + [fmt_exact(x) for x in row] for l, row in enumerate(rows)]
    print(_md_table(header, body))
    print()


def cmd_solve(args: argparse.Namespace) -> int:
    params = SystemParams(n=args.n, d=args.d)
    size = args.i if args.i is not None else params.i_max
    system = build_system(params, size, "A")
    profile = solve_traces(params, i_max=size)
    xs = [profile.traces[i] for i in range(1, size + 1)]
    inverse = residual = None
    if args.show_inverse:
        inverse = explicit_inverse(system)
        residual = Fraction(0)
        for l in range(size):
            for j in range(size):
                acc = sum(
                    (system.entries[l][t] * inverse[t][j] for t in range(size)),
                    Fraction(0),
                )
                target = Fraction(1) if l == j else Fraction(0)
                residual = max(residual, abs(acc - target))
    if args.format == "json":
        doc = {
            "command": "solve",
            "n": args.n,
            "d": args.d,
            "size": size,
            "A": _matrix_json(system.entries),
            "T": [json_exact(t) for t in system.rhs],
            "x": [json_exact(x) for x in xs],
        }
        if args.show_inverse:
            doc["A_inverse"] = _matrix_json(inverse)
            doc["max_inverse_residual"] = json_exact(residual)
        _emit_json(doc)
    elif args.format == "csv":
        print("section,row,col,value")
        for l, row in enumerate(system.entries, start=1):
            for j, entry in enumerate(row, start=1):
                print(f"A,{l},{j},{fmt_exact(entry)}")
        for l, t in enumerate(system.rhs, start=1):
            print(f"T,{l},,{fmt_exact(t)}")
        for i, x in enumerate(xs, start=1):
            print(f"x,{i},,{fmt_exact(x)}")
        if args.show_inverse:
            for l, row in enumerate(inverse, start=1):
                for j, entry in enumerate(row, start=1):
                    print(f"A_inv,{l},{j},{fmt_exact(entry)}")
            print(f"residual,,,{fmt_exact(residual)}")
    else:
        print(f"triangular system A for n={args.n}, d={args.d}, size {size}")
        print()
        _print_md_matrix("A", system.entries)
        print("### T")
        print(_md_table(["l", "value"], [[str(l), fmt_exact(t)] for l, t in enumerate(system.rhs, start=1)]))
        print()
        print("### x")
        print(_md_table(["i", "value"], [[str(i), fmt_exact(x)] for i, x in enumerate(xs, start=1)]))
        if args.show_inverse:
            print()
            _print_md_matrix("A inverse", inverse)
            print(f"max |A*A_inv - I| = {fmt_exact(residual)} (exact)")
    return 0


# --- verify --------------------------------------------------------------


def run_verification(state, tol: float) -> list[tuple[str, bool, str]]:
    """All state-level checks behind `ame verify`, as (name, ok, detail) rows.

    The state is treated as an AME candidate: its floor(n/2)-party
    reductions must be maximally mixed, every low-weight trace must vanish,
    weight traces must be constant across equal-size supports and match the
    closed forms, and every qualifying reduction must satisfy the projector
    property.
    """
    if state.n < 2:
        raise ValueError("verification needs at least two parties")
    params = SystemParams(n=state.n, d=state.d)
    m = params.m
    checks: list[tuple[str, bool, str]] = []

    report = oracle.k_uniformity(state, m, tol=tol)
    checks.append(
        (
            f"k-uniformity (k={m})",
            report.uniform,
            f"max deviation {report.max_deviation:.3e}",
        )
    )

    dist = oracle.weight_distribution(state)
    by_weight = dist.per_weight()

    low = [abs(v) for w in range(1, m + 1) for v in by_weight[w]]
    worst_low = max(low) if low else 0.0
    checks.append(
        (f"vanishing weights 1..{m}", worst_low <= tol, f"max |tr P_S^2| = {worst_low:.3e}")
    )

    spread = 0.0
    for w in range(m + 1, state.n + 1):
        values = by_weight[w]
        spread = max(spread, max(values) - min(values))
    checks.append(
        ("equal values across equal-size supports", spread <= tol, f"max spread {spread:.3e}")
    )

    closed_dev = 0.0
    for i in range(1, params.i_max + 1):
        want = float(trace_closed_form(params, i))
        closed_dev = max(closed_dev, max(abs(v - want) for v in by_weight[m + i]))
    checks.append(
        ("closed-form match", closed_dev <= tol, f"max deviation {closed_dev:.3e}")
    )

    proj = 0.0
    for size in range(state.n - m, state.n + 1):
        for keep in itertools.combinations(range(state.n), size):
            proj = max(proj, oracle.projector_property_residual(state, keep))
    checks.append(("projector property", proj <= tol, f"max residual {proj:.3e}"))
    return checks


def cmd_verify(args: argparse.Namespace) -> int:
    source = args.state
    if source.startswith("builtin:"):
        state = oracle.builtin_state(source[len("builtin:") :])
    else:
        state = oracle.load_state(source)
    print(f"state: {source} (n={state.n}, d={state.d})")
    checks = run_verification(state, args.tol)
    for name, ok, detail in checks:
        print(f"check {name}: {'PASS' if ok else 'FAIL'} ({detail})")
    all_ok = all(ok for _, ok, _ in checks)
    print(f"result: {'PASS' if all_ok else 'FAIL'}")
    return 0 if all_ok else 2


# --- find-graph ----------------------------------------------------------


def cmd_find_graph(args: argparse.Namespace) -> int:
    specs = oracle.find_ame_graph(args.n, args.d, limit=args.limit)
    if not specs:
        print("no AME graph state found")
        return 0
    for idx, spec in enumerate(specs):
        print(f"# graph {idx}")
        for row in spec.adjacency:
            print(" ".join(str(w) for w in row))
    print(f"found {len(specs)} graph(s)")
    return 0


# --- wiring --------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; the contract here reserves 2
    for negative findings, so usage errors exit 1 instead."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ame", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    fmt = {"choices": ("md", "csv", "json"), "default": "md"}

    p = sub.add_parser("table", help="invariant table over a range of n")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("check", help="existence verdict for one (n, d)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("scan", help="verdict grid for 2..d_max x 2..n_max")
    p.add_argument("--d-max", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("solve", help="dump the exact triangular system")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--i", type=int, default=None, help="system size (default: full, n - floor(n/2))")
    p.add_argument("--show-inverse", action="store_true")
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="oracle checks on a builtin or file state")
    p.add_argument("--state", required=True, metavar="builtin:NAME|PATH")
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("find-graph", help="exhaustive AME graph-state search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--limit", type=int, default=None)
    p.set_defaults(func=cmd_find_graph)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
