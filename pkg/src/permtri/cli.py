"""Command-line harness: grid sweeps, single checks, bridge runs, Dickson value sets.

Exit codes: 0 agreement, 1 disagreement found, 2 usage error, 3 cap exceeded.
"""

import argparse
import csv
import io
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .bridge import bridge_row, dickson_report
from .classify import cubic_diff_quotient_analysis, normalize, reduced_degree, sweep_cell, verdict
from .gf import CapExceededError, check_cap, field_of_order, make_field, prime_powers
from .poly import TrinomialParams, build_f

EXIT_OK, EXIT_DISAGREE, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

CSV_HEADER = ["p", "t", "s", "r", "lambda", "d", "applicable", "is_pp", "predicted", "agrees"]
ROW_KEYS = ["p", "t", "s", "r", "lambdaIndex", "d", "applicable", "isPp", "predicted", "agrees"]


@dataclass(frozen=True)
class GridSpec:
    max_q: int
    s_range: tuple[int, int]
    r_range: tuple[int, int]
    require_applicable: bool = False
    workers: int = 1

    def __post_init__(self):
        check_cap(self.max_q)
        for lo, hi in (self.s_range, self.r_range):
            if lo < 0 or hi < lo:
                raise ValueError(f"empty or negative range {lo}..{hi}")

    def cells(self) -> list[tuple[int, int, int, int]]:
        out = []
        for p, t, q in prime_powers(self.max_q):
            for s in range(self.s_range[0], self.s_range[1] + 1):
                for r in range(self.r_range[0], self.r_range[1] + 1):
                    if self.require_applicable and reduced_degree(p, s, r)[0] ** 4 >= q:
                        continue
                    out.append((p, t, s, r))
        return out


def parse_range(text: str) -> tuple[int, int]:
    """'3' -> (3, 3); '0..2' -> (0, 2)."""
    lo, sep, hi = text.partition("..")
    try:
        return (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; use N or A..B") from None


def _run_cell(cell) -> tuple[tuple[int, int, int, int], list[dict]]:
    p, t, s, r = cell
    res = sweep_cell(make_field(p, t), s, r)
    return cell, [v.to_row() for v in res.verdicts()]


def verify_theorem(grid: GridSpec, progress=None) -> dict:
    """Sweep every cell of the grid and collect rows and a summary."""
    cells = grid.cells()
    results = []
    if grid.workers > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=grid.workers) as pool:
            for item in pool.map(_run_cell, cells, chunksize=4):
                results.append(item)
                if progress:
                    progress(item[0])
    else:
        for cell in cells:
            results.append(_run_cell(cell))
            if progress:
                progress(cell)
    rows = [row for _, cell_rows in sorted(results) for row in cell_rows]
    rows.sort(key=lambda row: (row["p"], row["t"], row["s"], row["r"], row["lambdaIndex"]))
    disagreements = [row for row in rows if row["agrees"] is False]
    summary = {
        "cells": len(cells),
        "rows": len(rows),
        "ppsFound": sum(row["isPp"] for row in rows),
        "applicableRows": sum(row["applicable"] for row in rows),
        "disagreements": len(disagreements),
        "sporadicPps": sum(row["isPp"] and not row["applicable"] for row in rows),
    }
    return {
        "grid": {
            "maxQ": grid.max_q, "s": list(grid.s_range), "r": list(grid.r_range),
            "requireApplicable": grid.require_applicable,
        },
        "summary": summary,
        "disagreements": disagreements,
        "rows": rows,
    }


def _csv_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def rows_to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for row in rows:
        w.writerow([_csv_cell(row[k]) for k in ROW_KEYS])
    return buf.getvalue()


def _emit(report: dict, out: str | None, fmt: str | None) -> None:
    text = {
        "json": lambda: json.dumps(report, indent=1) + "\n",
        "csv": lambda: rows_to_csv(report["rows"]),
    }
    if out is None:
        sys.stdout.write(text[fmt or "json"]())
        return
    path = Path(out)
    if fmt:
        path.write_text(text[fmt]())
        return
    stem = path.with_suffix("") if path.suffix in (".json", ".csv") else path
    stem.with_suffix(".json").write_text(text["json"]())
    stem.with_suffix(".csv").write_text(text["csv"]())


def cmd_verify_theorem(args) -> int:
    grid = GridSpec(args.max_q, args.s, args.r, args.require_applicable, args.workers)
    started = time.perf_counter()

    def progress(cell):
        if args.verbose:
            print(f"done p={cell[0]} t={cell[1]} s={cell[2]} r={cell[3]}", file=sys.stderr)

    report = verify_theorem(grid, progress)
    _emit(report, args.out, args.format)
    summ = report["summary"]
    print(f"{summ['cells']} cells, {summ['rows']} rows, {summ['ppsFound']} PPs, "
          f"{summ['disagreements']} disagreements in {time.perf_counter() - started:.1f}s", file=sys.stderr)
    for row in report["disagreements"]:
        print("DISAGREEMENT " + json.dumps(row), file=sys.stderr)
    return EXIT_DISAGREE if summ["disagreements"] else EXIT_OK


def _single(value: tuple[int, int], name: str) -> int:
    if value[0] != value[1]:
        raise ValueError(f"--{name} takes a single value here")
    return value[0]


def cmd_check(args) -> int:
    F = make_field(args.p, args.t)
    s, r = _single(args.s, "s"), _single(args.r, "r")
    params = TrinomialParams(F, s, r, args.lam)
    v = verdict(params)
    n = normalize(params)
    out = v.to_row()
    out["poly"] = build_f(params).to_json()
    out["normalized"] = {"s": n.s, "r": n.r, "lambdaIndex": n.lam, "m": n.m, "d": n.d}
    if r == 1 and s == 0 and F.p > 2:
        out["cubic"] = cubic_diff_quotient_analysis(F, args.lam).kind.value
    print(json.dumps(out, indent=1))
    return EXIT_DISAGREE if v.agrees is False else EXIT_OK


def cmd_bridge(args) -> int:
    if args.p == 2:
        raise ValueError("characteristic 2 unsupported in bridge")
    F = make_field(args.p, args.t)
    s = _single(args.s, "s")
    check_cap((F.q) ** (2 * args.p ** s), "extension field")
    if args.all_lambda:
        lams = range(F.q)
    elif args.lam is not None:
        lams = [args.lam]
    else:
        raise ValueError("give --lambda or --all-lambda")
    rows = [bridge_row(args.p, args.t, s, lam).to_row() for lam in lams]
    report = {"rows": rows, "allAgree": all(r["agree"] is not False for r in rows)}
    print(json.dumps(report, indent=1))
    return EXIT_OK if report["allAgree"] else EXIT_DISAGREE


def cmd_dickson(args) -> int:
    F = field_of_order(args.q)
    rep = dickson_report(F, args.n, args.a)
    out = {
        "field": {"p": F.p, "t": F.t},
        "n": args.n,
        "aIndex": args.a,
        "poly": rep.poly.to_json(),
        "isPp": rep.pp,
        "histogram": {str(k): c for k, c in sorted(rep.histogram.counts.items())},
        "zClaim": rep.z_claim,
        "ppExpected": rep.pp_expected,
        "holds": rep.holds,
    }
    print(json.dumps(out, indent=1))
    return EXIT_OK if rep.holds else EXIT_DISAGREE


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="permtri", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify-theorem", help="sweep a grid of fields, s, r and every lambda")
    v.add_argument("--max-q", type=int, required=True)
    v.add_argument("--s", type=parse_range, default=(0, 0), help="N or A..B (inclusive)")
    v.add_argument("--r", type=parse_range, default=(1, 1), help="N or A..B (inclusive)")
    v.add_argument("--require-applicable", action="store_true",
                   help="only cells with d^4 < q")
    v.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    v.add_argument("--out")
    v.add_argument("--format", choices=["json", "csv"])
    v.add_argument("-v", "--verbose", action="store_true")
    v.set_defaults(func=cmd_verify_theorem)

    c = sub.add_parser("check", help="one (p, t, s, r, lambda) verdict")
    c.add_argument("p", type=int)
    c.add_argument("t", type=int)
    c.add_argument("--s", type=parse_range, required=True)
    c.add_argument("--r", type=parse_range, required=True)
    c.add_argument("--lambda", dest="lam", type=int, required=True, help="lambda as element index")
    c.set_defaults(func=cmd_check)

    b = sub.add_parser("bridge", help="compare f_lambda with the binomial over F_{q^(2p^s)}")
    b.add_argument("p", type=int)
    b.add_argument("t", type=int)
    b.add_argument("--s", type=parse_range, default=(1, 1))
    g = b.add_mutually_exclusive_group()
    g.add_argument("--lambda", dest="lam", type=int)
    g.add_argument("--all-lambda", action="store_true")
    b.set_defaults(func=cmd_bridge)

    d = sub.add_parser("dickson", help="value set of D_n(x, a) over F_Q")
    d.add_argument("q", type=int, help="field order Q")
    d.add_argument("n", type=int)
    d.add_argument("a", type=int, help="a as element index")
    d.set_defaults(func=cmd_dickson)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapExceededError as exc:
        print(f"permtri: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ValueError, ZeroDivisionError) as exc:
        print(f"permtri: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
