"""Command-line front end: spectra, token graphs, verification, and scans.

Exit codes: 0 success, 1 input/parse error, 2 size guard exceeded,
3 a theorem-grade assertion failed (conjecture violations never do this).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from . import __version__
from .analysis import (Report, complement_identity, conjecture_scan,
                       heawood_case_study, johnson_report, lew_bounds_check,
                       table1_report, token_laplacian_chain,
                       token_radius_bounds)
from .errors import (ContainmentError, Graph6Error, GuardExceededError,
                     NumericHealthError)
from .families import generate
from .graphs import (Graph, encode_graph6, read_edge_json_file,
                     read_graph6_file)
from .spectra import multiset_contains, spectrum
from .tokens import token_graph, verify_commutation
from .walks import local_spectra

VERIFY_CHECKS = ("inclusion", "lew", "radius", "complement", "quotient",
                 "heawood", "table1", "johnson")


@dataclass(frozen=True)
class RunConfig:
    command: str
    graphs: list[Graph]
    k: int
    k_max: int
    fmt: str
    tol: float | None
    jobs: int


def _f12(x) -> str:
    if isinstance(x, bool) or x is None:
        return "" if x is None else str(x).lower()
    if isinstance(x, float):
        return f"{x:.12g}"
    return str(x)


def _round12(obj):
    if isinstance(obj, float):
        return float(f"{obj:.12g}")
    if isinstance(obj, dict):
        return {k: _round12(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round12(v) for v in obj]
    return obj


def _emit(meta: dict, rows: list[dict], summary: dict, fmt: str, out) -> None:
    if fmt == "json":
        payload = {"meta": meta, "rows": _round12(rows), "summary": _round12(summary)}
        out.write(json.dumps(payload, indent=2) + "\n")
        return
    columns: list[str] = []
    for row in rows:
        for key in row:
            if key not in columns:
                columns.append(key)
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_f12(row.get(c)) for c in columns])
        return
    # human table
    cells = [[_f12(row.get(c)) for c in columns] for row in rows]
    widths = [max([len(c)] + [len(r[i]) for r in cells])
              for i, c in enumerate(columns)]
    out.write("  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip() + "\n")
    for r in cells:
        out.write("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip() + "\n")
    if summary:
        out.write("-- summary --\n")
        for key, value in summary.items():
            out.write(f"{key}: {_f12(value) if not isinstance(value, list) else value}\n")


def _seq(values) -> str:
    return ";".join(_f12(float(v)) for v in values)


def _parse_gen(spec: str) -> Graph:
    family, _, params = spec.partition(":")
    args = [int(p) for p in params.split(",") if p] if params else []
    return generate(family, *args)


def _parse_gen_range(spec: str) -> list[Graph]:
    family, _, span = spec.partition(":")
    lo, sep, hi = span.partition("..")
    if not sep:
        raise ValueError("range syntax is family:a..b")
    return [generate(family, n) for n in range(int(lo), int(hi) + 1)]


def _load_graphs(args, required: bool = True) -> list[Graph]:
    sources = [s for s in (args.gen, args.gen_range, args.graph6_file,
                           args.json_file) if s]
    if len(sources) > 1:
        raise ValueError("give exactly one input source")
    if not sources:
        if required:
            raise ValueError(
                "an input source is required (--gen, --gen-range, "
                "--graph6-file, or --json-file)")
        return []
    if args.gen:
        return [_parse_gen(args.gen)]
    if args.gen_range:
        return _parse_gen_range(args.gen_range)
    if args.graph6_file:
        return read_graph6_file(args.graph6_file)
    return [read_edge_json_file(args.json_file)]


def _report_rows(report: Report, extra: dict | None = None) -> list[dict]:
    rows = []
    for c in report.checks:
        row = dict(extra or {})
        row.update({"key": c.key, "name": c.name, "left": c.left,
                    "right": c.right, "slack": c.slack,
                    "passed": c.passed, "asserted": c.asserted, "note": c.note})
        rows.append(row)
    return rows


def _summary_of(rows: list[dict]) -> dict:
    failures = [r for r in rows if r.get("passed") is False and r.get("asserted")]
    flagged = [r for r in rows if r.get("passed") is False and not r.get("asserted")]
    return {
        "checks": len(rows),
        "asserted_failures": len(failures),
        "flagged_rows": len(flagged),
        "worst_slack": min((r["slack"] for r in rows if "slack" in r), default=None),
    }


# ---------------------------------------------------------------------------
# Subcommands


def cmd_spectrum(args, out) -> int:
    graphs = _load_graphs(args)
    rows = []
    for idx, g in enumerate(graphs):
        row: dict = {"index": idx, "label": g.label, "n": g.n, "m": g.num_edges}
        kinds = ("adjacency", "laplacian") if args.kind == "both" else (args.kind,)
        for kind in kinds:
            spec = spectrum(g, kind, args.tol)
            row[kind] = _seq(spec.values) if args.format != "json" else list(spec.values)
            if kind == "adjacency":
                row["rho"] = spec.max
            else:
                row["rho_laplacian"] = spec.max
                if g.n >= 2:
                    row["alpha"] = spec.values[1]
        if args.local:
            locs = local_spectra(g)
            token = [[[theta, weight] for theta, weight in loc.pairs]
                     for loc in locs]
            row["local_spectra"] = (token if args.format == "json" else
                                    json.dumps(_round12(token)))
        rows.append(row)
    _emit({"version": __version__, "command": "spectrum", "tolerance": args.tol},
          rows, {"graphs": len(rows)}, args.format, out)
    return 0


def cmd_token(args, out) -> int:
    graphs = _load_graphs(args)
    rows = []
    for idx, g in enumerate(graphs):
        tg = token_graph(g, args.k)
        fk = tg.graph
        row: dict = {
            "index": idx, "label": g.label, "k": args.k, "order": fk.n,
            "size": fk.num_edges, "regular": fk.is_regular(),
            "degree_min": min(fk.degrees, default=0),
            "degree_max": max(fk.degrees, default=0),
            "graph6": encode_graph6(fk) if fk.n <= 62 else "",
        }
        if args.format == "json":
            row["edges"] = [list(e) for e in fk.sorted_edges]
        if args.spectra:
            for kind in ("adjacency", "laplacian"):
                spec = spectrum(fk, kind, args.tol)
                row[kind] = (_seq(spec.values) if args.format != "json"
                             else list(spec.values))
        rows.append(row)
    _emit({"version": __version__, "command": "token", "tolerance": args.tol},
          rows, {"graphs": len(rows)}, args.format, out)
    return 0


def _verify_inclusion(graphs, k_max, tol) -> list[dict]:
    rows = []
    for idx, g in enumerate(graphs):
        km = min(k_max, g.n // 2) if g.n >= 2 else 0
        chain = token_laplacian_chain(g, km, tol)
        for k in range(1, km + 1):
            match = multiset_contains(chain[k], chain[k - 1])
            gap = max((abs(a - b) for a, b in match.pairs), default=0.0)
            rows.append({"index": idx, "label": g.label,
                         "key": "inclusion-chain",
                         "name": f"spec L(F_{k - 1}) within spec L(F_{k})",
                         "left": gap, "right": chain[k].tol,
                         "slack": chain[k].tol - gap,
                         "passed": bool(match), "asserted": True,
                         "note": "left is the worst pairing gap"})
    return rows


def _verify_quotient(graphs, h, k) -> list[dict]:
    rows = []
    for idx, g in enumerate(graphs):
        kk = min(k, g.n)
        hh = min(h, kk)
        rep = verify_commutation(g, hh, kk)
        rows.append({"index": idx, "label": g.label, "key": "token-commutation",
                     "name": f"L_{kk} S_b = S_b L_{hh}",
                     "left": rep.max_commutator, "right": 1e-9,
                     "slack": 1e-9 - rep.max_commutator,
                     "passed": True, "asserted": True, "note": ""})
        rows.append({"index": idx, "label": g.label, "key": "token-pseudoinverse",
                     "name": f"L_{hh} = (S^T S)^-1 S^T L_{kk} S",
                     "left": rep.max_reconstruction, "right": 1e-7,
                     "slack": 1e-7 - rep.max_reconstruction,
                     "passed": True, "asserted": True, "note": ""})
    return rows


def cmd_verify(args, out) -> int:
    if args.check not in VERIFY_CHECKS:
        raise ValueError(f"unknown check {args.check!r}; "
                         f"known: {', '.join(VERIFY_CHECKS)}")
    needs_input = args.check in ("inclusion", "lew", "radius", "complement",
                                 "quotient")
    graphs = _load_graphs(args, required=needs_input)
    if args.check == "inclusion":
        rows = _verify_inclusion(graphs, args.kmax, args.tol)
    elif args.check == "lew":
        rows = []
        for idx, g in enumerate(graphs):
            for k in range(1, min(args.kmax, g.n // 2) + 1):
                rows.extend(_report_rows(lew_bounds_check(g, k),
                                         {"index": idx, "label": g.label}))
    elif args.check == "radius":
        rows = []
        for idx, g in enumerate(graphs):
            rows.extend(_report_rows(token_radius_bounds(g, args.k),
                                     {"index": idx, "label": g.label}))
    elif args.check == "complement":
        rows = []
        for idx, g in enumerate(graphs):
            for k in range(1, min(args.kmax, g.n // 2) + 1):
                rows.extend(_report_rows(complement_identity(g, k),
                                         {"index": idx, "label": g.label}))
    elif args.check == "quotient":
        rows = _verify_quotient(graphs, args.h, args.k)
    elif args.check == "heawood":
        rows = _report_rows(heawood_case_study())
    elif args.check == "table1":
        rows = _report_rows(table1_report())
    else:  # johnson
        rows = _report_rows(johnson_report())
    summary = _summary_of(rows)
    _emit({"version": __version__, "command": f"verify {args.check}",
           "tolerance": args.tol}, rows, summary, args.format, out)
    return 3 if summary["asserted_failures"] else 0


def cmd_scan(args, out) -> int:
    graphs = _load_graphs(args)
    report = conjecture_scan(graphs, args.kmax, jobs=args.jobs)
    rows = []
    for r in report.rows:
        rows.append({
            "index": r.index, "label": r.label, "n": r.n, "k_max": r.k_max,
            "alphas": (_seq(r.alphas) if args.format != "json"
                       else list(r.alphas)),
            "rhos": _seq(r.rhos) if args.format != "json" else list(r.rhos),
            "alpha_monotone": r.alpha_monotone, "rho_monotone": r.rho_monotone,
            "alpha_worst_slack": r.alpha_worst_slack,
            "rho_worst_slack": r.rho_worst_slack,
            "aldous_ok": r.aldous_ok, "aldous_max_dev": r.aldous_max_dev,
            "alpha_floor_ok": r.alpha_floor_ok, "error": r.error,
        })
    _emit({"version": __version__, "command": "scan", "tolerance": args.tol},
          rows, report.summary(), args.format, out)
    return 0 if report.ok else 3


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tokenspectra",
        description="Token graphs of small graphs and their spectra")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, k_default=2, kmax_default=3):
        p.add_argument("--gen", help="family:params, e.g. cycle:9 or johnson:5,2")
        p.add_argument("--gen-range", dest="gen_range",
                       help="family:a..b for one-parameter families")
        p.add_argument("--graph6-file", dest="graph6_file",
                       help="file with one graph6 line per graph")
        p.add_argument("--json-file", dest="json_file",
                       help='edge-list JSON file {"n": int, "edges": [[u,v],...]}')
        p.add_argument("--k", type=int, default=k_default)
        p.add_argument("--kmax", type=int, default=kmax_default)
        p.add_argument("--format", choices=("table", "csv", "json"),
                       default="table")
        p.add_argument("--tol", type=float, default=None,
                       help="pairing tolerance override (> 0)")
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--out", help="write the report here instead of stdout")

    p = sub.add_parser("spectrum", help="adjacency/Laplacian spectra of graphs")
    add_common(p)
    p.add_argument("--kind", choices=("adjacency", "laplacian", "both"),
                   default="both")
    p.add_argument("--local", action="store_true",
                   help="include per-vertex local spectra")
    p.set_defaults(run=cmd_spectrum)

    p = sub.add_parser("token", help="construct F_k(G) and summarize it")
    add_common(p)
    p.add_argument("--spectra", action="store_true",
                   help="include the token graph's spectra")
    p.set_defaults(run=cmd_token)

    p = sub.add_parser("verify", help="run a named checker")
    p.add_argument("check", help=f"one of: {', '.join(VERIFY_CHECKS)}")
    add_common(p)
    p.add_argument("--h", type=int, default=1, help="small side for quotient checks")
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("scan", help="conjecture scan over a corpus")
    add_common(p, kmax_default=2)
    p.set_defaults(run=cmd_scan)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.tol is not None and args.tol <= 0:
        print("error: --tol must be positive", file=sys.stderr)
        return 1
    buffer = io.StringIO()
    try:
        code = args.run(args, buffer)
    except GuardExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ContainmentError, NumericHealthError) as exc:
        print(f"internal invariant failure: {exc}", file=sys.stderr)
        return 3
    except (Graph6Error, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    text = buffer.getvalue()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
