"""Command-line interface: ``supercatalan {table,verify,enumerate,biject,render}``.

Exit codes: 0 when nothing failed, 1 when a verification failed, 2 for usage,
parse, and domain errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from pathlib import Path

from . import bijections as bj
from .errors import DomainError, ParseError, SuperCatalanError
from .identities import IDENTITY_SUITE, SUITES, Bounds, reports_to_csv, verify_all, verify_suite
from .paths import enumerate_family, gen_fun, parse_family, parse_path, stats
from .qpoly import ballot_q, super_catalan, super_catalan_q, super_catalan_t, super_catalan_t_q
from .render import render_svg

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


_RANGE_RE = re.compile(r"^\s*(\d+)\s*(?:(?:\.\.|-|:)\s*(\d+))?\s*$")


def parse_range(text: str) -> range:
    """``"3"`` -> 3..3, ``"0..4"`` (or ``0-4``, ``0:4``) -> 0..4 inclusive."""
    m = _RANGE_RE.match(text)
    if not m:
        raise UsageError(f"bad range {text!r}; use N or A..B")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) is not None else lo
    if hi < lo:
        raise UsageError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


# -- table -------------------------------------------------------------------------

def _table_entries(kind: str, m_range: range, n_range: range) -> list[dict]:
    entries = []
    if kind == "Bq":
        for n in n_range:
            if n < 1:
                raise UsageError("Bq needs n >= 1")
            for r in range(1, n + 1):
                entries.append({"n": n, "r": r, "value": ballot_q(n, r)})
        return entries
    for m in m_range:
        for n in n_range:
            if kind in ("T", "Tq") and n < 1:
                raise UsageError(f"{kind} needs n >= 1")
            fn = {"S": super_catalan, "T": super_catalan_t,
                  "Sq": super_catalan_q, "Tq": super_catalan_t_q}[kind]
            entries.append({"m": m, "n": n, "value": fn(m, n)})
    return entries


def cmd_table(args) -> int:
    m_range = parse_range(args.m)
    n_range = parse_range(args.n)
    entries = _table_entries(args.kind, m_range, n_range)
    if args.format == "json":
        js = []
        for e in entries:
            v = e["value"]
            row = {k: e[k] for k in ("m", "n", "r") if k in e}
            if isinstance(v, int):
                row["value"] = str(v)
            else:
                row["value"] = v.to_json()
                row["text"] = str(v)
            js.append(row)
        _emit(json.dumps({"kind": args.kind, "entries": js}, indent=2) + "\n", args.out)
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        keys = ["n", "r"] if args.kind == "Bq" else ["m", "n"]
        w.writerow(keys + ["value"])
        for e in entries:
            w.writerow([e[k] for k in keys] + [str(e["value"])])
        _emit(buf.getvalue(), args.out)
    else:
        lines = []
        if args.kind == "Bq":
            for n in n_range:
                row = [str(e["value"]) for e in entries if e["n"] == n]
                lines.append(f"n={n}: " + " | ".join(row))
        elif args.kind in ("S", "T"):
            cols = list(n_range)
            width = max(len(str(e["value"])) for e in entries)
            width = max(width, 3)
            lines.append("m\\n " + " ".join(f"{c:>{width}}" for c in cols))
            for m in m_range:
                vals = [str(e["value"]) for e in entries if e["m"] == m]
                lines.append(f"{m:>3} " + " ".join(f"{v:>{width}}" for v in vals))
        else:
            for e in entries:
                lines.append(f"{args.kind}({e['m']},{e['n']}) = {e['value']}")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


# -- verify ------------------------------------------------------------------------

def cmd_verify(args) -> int:
    defaults = Bounds()
    bounds = Bounds(
        enum_n_max=args.n_max if args.n_max is not None else defaults.enum_n_max,
        closed_n_max=args.closed_n_max if args.closed_n_max is not None else defaults.closed_n_max,
        expansion_m_max=args.m_max if args.m_max is not None else defaults.expansion_m_max,
        expansion_n_max=(args.closed_n_max if args.closed_n_max is not None
                         else defaults.expansion_n_max),
        scan_bound=args.scan_bound if args.scan_bound is not None else defaults.scan_bound,
    )
    if args.suite == "all":
        reports = verify_all(bounds, jobs=args.shards)
    elif args.suite in SUITES or args.suite in IDENTITY_SUITE:
        reports = verify_suite(args.suite, bounds)
    else:
        raise UsageError(f"unknown suite {args.suite!r}; choose from all, {', '.join(SUITES)} "
                         "or a single identity id")
    if args.format == "json":
        _emit(json.dumps([r.to_json() for r in reports], indent=2) + "\n", args.out)
    elif args.format == "csv":
        _emit(reports_to_csv(reports), args.out)
    else:
        _emit("\n".join(r.summary_line() for r in reports) + "\n", args.out)
    return EXIT_FAIL if any(r.failed for r in reports) else EXIT_OK


# -- enumerate ---------------------------------------------------------------------

def cmd_enumerate(args) -> int:
    spec = parse_family(args.family)
    if args.genfun:
        poly = gen_fun(spec, args.genfun, shards=args.shards)
        stat = "maj_minus_des" if args.genfun in ("maj-des", "maj_minus_des", "majdes") else args.genfun
        if args.format == "json":
            _emit(json.dumps({"family": str(spec), "statistic": stat,
                              "polynomial": poly.to_json(), "text": str(poly)}, indent=2) + "\n", args.out)
        else:
            _emit(f"{poly}\n", args.out)
        return EXIT_OK
    paths = list(enumerate_family(spec))
    if args.format == "json":
        items = []
        for p in paths:
            item: dict = {"path": str(p)}
            if args.stats:
                item["stats"] = stats(p).to_json()
            items.append(item)
        _emit(json.dumps({"family": str(spec), "count": len(paths), "paths": items}, indent=2) + "\n", args.out)
    else:
        lines = []
        for p in paths:
            if args.stats:
                st = stats(p)
                extra = f"  maj={st.maj} des={st.des} height={st.height}"
                if st.h_minus is not None:
                    extra += f" h-={st.h_minus} h+={st.h_plus}"
                lines.append(f"{p}{extra}")
            else:
                lines.append(str(p))
        _emit("\n".join(lines) + ("\n" if lines else ""), args.out)
    return EXIT_OK


# -- biject ------------------------------------------------------------------------

def _run_trace(name: str, text: str, n: int | None, r: int | None) -> bj.BijectionTrace:
    p = parse_path(text)
    if name in ("psi", "psi_inv", "phi", "phi_inv") and (n is None or r is None):
        n0, r0 = bj.infer_params(name, p)
        n = n if n is not None else n0
        r = r if r is not None else r0
    return bj.trace(name, p, n, r)


def cmd_biject(args) -> int:
    if args.name not in bj.BIJECTIONS:
        raise UsageError(f"unknown bijection {args.name!r}; choose from {', '.join(bj.BIJECTIONS)}")
    tr = _run_trace(args.name, args.path, args.n, args.r)
    if args.trace or args.format == "json":
        _emit(json.dumps(tr.to_json(), indent=2) + "\n", args.out)
    else:
        _emit(f"{tr.output}\n", args.out)
    return EXIT_OK


# -- render ------------------------------------------------------------------------

def cmd_render(args) -> int:
    target = args.target
    if ":" in target:
        spec = parse_family(target)
        paths = list(enumerate_family(spec))
        if len(paths) > args.limit:
            raise UsageError(f"{spec} has {len(paths)} paths; raise --limit to draw them all")
        panels = [(p, None, str(p)) for p in paths]
    elif args.trace:
        tr = _run_trace(args.trace, target, args.n, args.r)
        in_marks, out_marks = tr.split_landmarks()
        case = f", {tr.case_taken}" if tr.case_taken else ""
        panels = [
            (tr.input, in_marks, f"{tr.input}  ({tr.name} input{case})"),
            (tr.output, out_marks, f"{tr.output}  ({tr.name} output)"),
        ]
    else:
        p = parse_path(target)
        panels = [(p, None, str(p))]
    svg = render_svg(panels)
    if args.out:
        Path(args.out).write_text(svg, encoding="utf-8")
    else:
        sys.stdout.write(svg)
    return EXIT_OK


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="supercatalan",
        description="q-analogs of super Catalan and ballot numbers, lattice-path bijections, "
                    "and brute-force verification of their identities.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="tabulate S, T, S_q, T_q or B_q")
    t.add_argument("kind", choices=["S", "T", "Sq", "Tq", "Bq"])
    t.add_argument("m", nargs="?", default="0..3", help="m range, e.g. 0..4 (ignored for Bq)")
    t.add_argument("n", nargs="?", default="1..3", help="n range, e.g. 1..4")
    t.add_argument("--format", choices=["text", "json", "csv"], default="text")
    t.add_argument("--out")
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("suite", help=f"all, a suite ({', '.join(SUITES)}) or one identity id")
    v.add_argument("--n-max", type=int, help="bound for enumeration-backed checks (default 9)")
    v.add_argument("--m-max", type=int, help="bound on m for the ballot expansion (default 6)")
    v.add_argument("--closed-n-max", type=int, help="bound for closed-form-only checks (default 12)")
    v.add_argument("--scan-bound", type=int, help="bound on m+n for coefficient scans (default 20)")
    v.add_argument("--shards", type=int, default=1, help="worker processes for 'all'")
    v.add_argument("--format", choices=["text", "json", "csv"], default="text")
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("enumerate", help="list a path family, e.g. catalan:4 or ballot:6,2")
    e.add_argument("family")
    e.add_argument("--stats", action="store_true", help="show maj, des, height, h-/h+")
    e.add_argument("--genfun", choices=["maj", "maj-des", "maj_minus_des"],
                   help="print the generating polynomial instead of the paths")
    e.add_argument("--shards", type=int, default=1)
    e.add_argument("--format", choices=["text", "json"], default="text")
    e.add_argument("--out")
    e.set_defaults(func=cmd_enumerate)

    b = sub.add_parser("biject", help="apply psi, phi, f, g or an inverse to a path")
    b.add_argument("name", help=", ".join(bj.BIJECTIONS))
    b.add_argument("path")
    b.add_argument("--n", type=int)
    b.add_argument("--r", type=int)
    b.add_argument("--trace", action="store_true", help="emit the full trace as JSON")
    b.add_argument("--format", choices=["text", "json"], default="text")
    b.add_argument("--out")
    b.set_defaults(func=cmd_biject)

    r = sub.add_parser("render", help="draw a path or small family as SVG")
    r.add_argument("target", help="path text (0101, udud) or family spec (catalan:3)")
    r.add_argument("--trace", metavar="BIJECTION", help="label landmarks of this map applied to the path")
    r.add_argument("--n", type=int)
    r.add_argument("--r", type=int)
    r.add_argument("--limit", type=int, default=64)
    r.add_argument("--out")
    r.set_defaults(func=cmd_render)
    return ap


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParseError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SuperCatalanError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
