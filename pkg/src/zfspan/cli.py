"""Command-line interface: ``zfspan compute | batch | verify | generate``.

Family specs use ``name:p1,p2`` terms chained with ``+`` (disjoint union),
``^`` (join; directed join for digraphs) and ``#`` (Cartesian product).
Graph families: path, cycle, complete, empty, star, kmp, kminusm, pk1, spider.
Digraph families: dcycle, dpath, dcomplete, dempty, tournament5, fig2.

Exit codes: 0 success, 1 counterexample found, 2 usage or parse error,
3 unsupported size or range.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass

from . import families, kernel
from .enumeration import RangeError
from .forcing import Rule, RuleMismatchError, force_trace, neighborhoods
from .formats import (GraphFormatError, OrderTooLargeError, parse_any, parse_edge_list,
                      to_digraph6, to_edge_list, to_graph6)
from .graphs import CapacityError, Digraph, Graph, members
from .invariants import span_value
from .polynomials import ZfPolynomial
from .verify import THEOREM_IDS, verify

SCHEMA = "zf-span/1"
CSV_FIELDS = ["input", "rule", "n", "z", "f", "span", "poly", "z_witness", "f_witness",
              "z_trace", "f_trace", "line", "error"]

EXIT_OK, EXIT_FOUND, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


@dataclass
class OutputRecord:
    input: str
    rule: str
    n: int
    z: int
    f: int | None
    span: int
    poly: list[int]
    z_witness: list[int] | None = None
    f_witness: list[int] | None = None
    z_trace: list[list[int]] | None = None
    f_trace: list[list[int]] | None = None

    def to_dict(self) -> dict:
        return {k: v for k, v in vars(self).items() if v is not None or k == "f"}


def compute_record(rule: Rule, g: Graph | Digraph, label: str, witness: bool = False,
                   trace: bool = False) -> OutputRecord:
    if g.n > kernel.MAX_TABLE_ORDER:
        raise CapacityError(f"subset tables are limited to n <= {kernel.MAX_TABLE_ORDER}")
    neighborhoods(rule, g)
    if g.n == 0:
        return OutputRecord(label, rule.value, 0, 0, None, 0, [1])
    s = kernel.summarize(rule, [g])
    z, f = int(s.z[0]), int(s.f[0])
    zw, fw = int(s.z_witness[0]), int(s.f_witness[0])
    rec = OutputRecord(label, rule.value, g.n, z, None if f < 0 else f,
                       span_value(z, None if f < 0 else f), [int(c) for c in s.counts[0]])
    if witness or trace:
        rec.z_witness = members(zw)
        rec.f_witness = members(fw) if f >= 0 else None
    if trace:
        rec.z_trace = [list(step) for step in force_trace(rule, g, zw)]
        rec.f_trace = [list(step) for step in force_trace(rule, g, fw)] if f >= 0 else None
    return rec


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, list):
        return json.dumps(value, separators=(",", ":"))
    return str(value)


def csv_row(row: dict) -> dict:
    return {k: _csv_cell(row.get(k)) for k in CSV_FIELDS}


def parse_csv_row(row: dict) -> dict:
    """Inverse of :func:`csv_row` for the fields that are present."""
    out: dict = {}
    for key, cell in row.items():
        if cell == "":
            continue
        if key in ("n", "z", "f", "span", "line"):
            out[key] = int(cell)
        elif key in ("poly", "z_witness", "f_witness", "z_trace", "f_trace"):
            out[key] = json.loads(cell)
        else:
            out[key] = cell
    if "error" not in out and "f" not in out:
        out["f"] = None
    return out


def _label(g: Graph | Digraph) -> str:
    return to_digraph6(g) if isinstance(g, Digraph) else to_graph6(g)


def _read_inputs(args, rule: Rule) -> list[tuple[str, Graph | Digraph]]:
    if args.g6 is not None:
        try:
            return [(args.g6, parse_any(args.g6))]
        except OrderTooLargeError as exc:
            raise CliError(f"line 1: {exc}", EXIT_CAPACITY)
        except GraphFormatError as exc:
            raise CliError(f"line 1: {exc}", EXIT_USAGE)
    if args.family is not None:
        try:
            return [(args.family, families.parse_family_spec(args.family))]
        except (KeyError, ValueError, TypeError) as exc:
            raise CliError(f"bad family spec {args.family!r}: {exc}", EXIT_USAGE)
    try:
        text = sys.stdin.read() if args.input == "-" else open(args.input).read()
    except OSError as exc:
        raise CliError(str(exc), EXIT_USAGE)
    lines = text.splitlines()
    first = next((ln.strip() for ln in lines if ln.strip() and not ln.startswith("#")), "")
    if first.startswith("n "):
        try:
            return [(args.input, parse_edge_list(text, directed=rule is Rule.DIRECTED))]
        except OrderTooLargeError as exc:
            raise CliError(str(exc), EXIT_CAPACITY)
        except GraphFormatError as exc:
            raise CliError(str(exc), EXIT_USAGE)
    out = []
    for lineno, line in enumerate(lines, 1):
        code = line.strip()
        if not code:
            continue
        try:
            out.append((code, parse_any(code)))
        except OrderTooLargeError as exc:
            raise CliError(f"line {lineno}: {exc}", EXIT_CAPACITY)
        except GraphFormatError as exc:
            raise CliError(f"line {lineno}: {exc}", EXIT_USAGE)
    return out


def cmd_compute(args) -> int:
    rule = Rule.parse(args.rule)
    records = []
    for label, g in _read_inputs(args, rule):
        try:
            records.append(compute_record(rule, g, label, args.witness, args.trace))
        except RuleMismatchError as exc:
            raise CliError(f"{label}: {exc}", EXIT_USAGE)
        except CapacityError as exc:
            raise CliError(f"{label}: {exc}", EXIT_CAPACITY)
    rows = [r.to_dict() for r in records]
    if args.json:
        print(json.dumps({"schema": SCHEMA, "records": rows}, indent=2))
    elif args.csv:
        writer = csv.DictWriter(sys.stdout, CSV_FIELDS, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow(csv_row(row))
    else:
        for rec in records:
            f = "absent" if rec.f is None else rec.f
            print(f"{rec.input} [{rec.rule}] n={rec.n} Z={rec.z} F={f} span={rec.span}")
            print(f"  poly: {_poly_text(rec.poly)}")
            if rec.z_witness is not None:
                print(f"  Z witness: {rec.z_witness}")
                print(f"  F witness: {rec.f_witness if rec.f is not None else 'none'}")
            if rec.z_trace is not None:
                print(f"  Z trace: {_trace_text(rec.z_trace)}")
                if rec.f_trace is not None:
                    print(f"  F trace: {_trace_text(rec.f_trace)}")
    return EXIT_OK


def _poly_text(coeffs: list[int]) -> str:
    return str(ZfPolynomial(Rule.STANDARD, tuple(coeffs)))


def _trace_text(trace: list[list[int]]) -> str:
    return ", ".join(f"{u}->{v}" for u, v in trace) or "(no forces)"


def cmd_batch(args) -> int:
    rule = Rule.parse(args.rule)
    try:
        src = sys.stdin if args.input == "-" else open(args.input)
    except OSError as exc:
        raise CliError(str(exc), EXIT_USAGE)
    dst = sys.stdout if args.out in (None, "-") else open(args.out, "w")
    writer = None
    if args.format == "csv":
        writer = csv.DictWriter(dst, CSV_FIELDS, lineterminator="\n")
        writer.writeheader()
    ok = errors = 0
    spans: list[int] = []
    with src:
        for lineno, line in enumerate(src, 1):
            code = line.strip()
            try:
                row = compute_record(rule, parse_any(code), code).to_dict()
                ok += 1
                spans.append(row["span"])
            except (GraphFormatError, CapacityError, RuleMismatchError) as exc:
                row = {"input": code, "error": f"{type(exc).__name__}: {exc}"}
                errors += 1
            row["line"] = lineno
            if writer:
                writer.writerow(csv_row(row))
            else:
                dst.write(json.dumps({"schema": SCHEMA, **row}) + "\n")
            dst.flush()
    summary = {"schema": SCHEMA, "summary": {
        "rows": ok + errors, "ok": ok, "errors": errors,
        "min_span": min(spans) if spans else None, "max_span": max(spans) if spans else None}}
    if dst is not sys.stdout:
        dst.close()
    print(json.dumps(summary), file=sys.stderr if dst is sys.stdout else sys.stdout)
    return EXIT_OK if args.keep_going or not errors else EXIT_USAGE


def cmd_verify(args) -> int:
    if args.theorem not in THEOREM_IDS:
        raise CliError(f"unknown theorem {args.theorem!r}; choose from {', '.join(THEOREM_IDS)}",
                       EXIT_USAGE)
    try:
        report = verify(args.theorem, args.max_n, args.seed, args.workers)
    except RangeError as exc:
        raise CliError(str(exc), EXIT_CAPACITY)
    if args.json:
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print(report.render())
    return EXIT_OK if report.passed else EXIT_FOUND


def cmd_generate(args) -> int:
    try:
        g = families.parse_family_spec(args.family)
    except (KeyError, ValueError, TypeError) as exc:
        raise CliError(f"bad family spec {args.family!r}: {exc}", EXIT_USAGE)
    if args.format == "edges":
        sys.stdout.write(to_edge_list(g))
    else:
        print(_label(g))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zfspan", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="Z, F, span and polynomial of given graphs")
    p.add_argument("--rule", default="standard", choices=["standard", "skew", "digraph"])
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", help="file of graph6/digraph6 lines or an edge list ('-' = stdin)")
    src.add_argument("--g6", help="a single graph6 or digraph6 string")
    src.add_argument("--family", help="family spec, e.g. kmp:2,2,3 or path:4+empty:1")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    p.add_argument("--witness", action="store_true", help="include Z and F witness sets")
    p.add_argument("--trace", action="store_true", help="include forcing traces of the witnesses")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("batch", help="one record per graph6 line, errors kept in-stream")
    p.add_argument("--input", required=True)
    p.add_argument("--rule", default="standard", choices=["standard", "skew", "digraph"])
    p.add_argument("--out", help="output path (default stdout)")
    p.add_argument("--format", default="jsonl", choices=["jsonl", "csv"])
    p.add_argument("--keep-going", action="store_true", help="exit 0 even if some lines fail")
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("verify", help="run a verification driver")
    p.add_argument("--theorem", required=True, help=", ".join(THEOREM_IDS))
    p.add_argument("--max-n", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="print a family member as graph6/digraph6")
    p.add_argument("--family", required=True)
    p.add_argument("--format", default="code", choices=["code", "edges"])
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"zfspan: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
