"""Command-line interface.

Exit codes: 0 success, 1 verification failure (suite or table mismatch),
2 input error. Reports default to a human-readable layout; ``--format
json`` or ``--format csv`` switch the encoding. The COMMGRAPH_THREADS
environment variable sizes the catalog-scan thread pool.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .catalog import load_bundled_catalog, load_catalog
from .classify import classify_group
from .errors import CommgraphError
from .families import build_family, parse_family
from .graphs import commuting_graph
from .recognition import ALL_CLASSES, find_induced
from .scans import (
    EXPECTED_NONCOGRAPH_COUNTS,
    EXPECTED_NONCOGRAPH_IDS_36,
    scan_noncograph,
)
from .suite import run_theorem_suite


def _load(args):
    if getattr(args, "catalog", None):
        return load_catalog(args.catalog)
    return load_bundled_catalog()


def _emit_rows(rows, header, fmt):
    if fmt == "json":
        print(json.dumps([dict(zip(header, r)) for r in rows], indent=2))
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(header)
        writer.writerows(rows)
        sys.stdout.write(buf.getvalue())
    else:
        widths = [max(len(str(x)) for x in [h] + [r[i] for r in rows])
                  for i, h in enumerate(header)]
        print("  ".join(h.ljust(w) for h, w in zip(header, widths)))
        for r in rows:
            print("  ".join(str(x).ljust(w) for x, w in zip(r, widths)))


def cmd_classify(args):
    if args.family:
        group = build_family(parse_family(args.family))
        label = args.family
    elif args.id:
        order, index = (int(x) for x in args.id.split(","))
        catalog = _load(args)
        group = catalog.get(order, index).build()
        label = f"[{order},{index}]"
    else:
        print("classify needs --family or --id", file=sys.stderr)
        return 2
    report = classify_group(group, scope=args.scope, label=label)
    if args.format == "json":
        payload = {
            "group": report.group_label,
            "order": report.order,
            "center": report.center_size,
            "scope": report.scope,
            "abelian": report.is_abelian,
            "generalized_dihedral_odd": report.is_generalized_dihedral_odd,
            "ac_group": report.is_ac,
            "ca_group": report.is_ca,
            "classes": {
                cls: {
                    "member": report.verdicts[cls].member,
                    **({} if report.verdicts[cls].member else {
                        "witness_pattern": report.verdicts[cls].witness.pattern,
                        "witness_vertices": list(report.verdicts[cls].witness.vertices),
                    }),
                }
                for cls in ALL_CLASSES
            },
        }
        print(json.dumps(payload, indent=2))
    else:
        sys.stdout.write(report.to_text())
    return 0


def cmd_table1(args):
    catalog = _load(args)
    ids = []
    rows = []
    for row in scan_noncograph(catalog, 36):
        for idx in row.ids:
            ids.append((row.order, idx))
            w = row.witnesses[idx]
            rows.append((f"[{row.order},{idx}]", w.pattern,
                         " ".join(map(str, w.vertices))))
    _emit_rows(rows, ("group", "witness", "vertices"), args.format)
    if tuple(ids) != EXPECTED_NONCOGRAPH_IDS_36:
        print(f"MISMATCH: expected {EXPECTED_NONCOGRAPH_IDS_36}", file=sys.stderr)
        return 1
    return 0


def cmd_table2(args):
    catalog = _load(args)
    rows = []
    mismatch = False
    for row in scan_noncograph(catalog, args.max_order):
        if not row.count and row.order not in EXPECTED_NONCOGRAPH_COUNTS:
            continue
        expected = EXPECTED_NONCOGRAPH_COUNTS.get(row.order, 0)
        ok = row.count == expected
        mismatch |= not ok
        rows.append((row.order, row.count, expected, "ok" if ok else "MISMATCH"))
    _emit_rows(rows, ("order", "count", "expected", "status"), args.format)
    return 1 if mismatch else 0


def cmd_witness(args):
    group = build_family(parse_family(args.family))
    graph = commuting_graph(group, scope=args.scope)
    pat = args.pattern
    if pat.lower().startswith("hole:"):
        k = int(pat.split(":", 1)[1])
        found = find_induced(graph, ("hole", k), cap=max(k, graph.n))
        patname = f"hole>={k}"
    else:
        found = find_induced(graph, pat)
        patname = pat
    if found is None:
        print(f"no induced {patname} in the commuting graph of {args.family}")
        return 1
    names = [group.element_name(graph.label_of(v)) for v in found]
    if args.format == "json":
        print(json.dumps({"family": args.family, "pattern": patname,
                          "vertices": list(found),
                          "elements": names}, indent=2))
    else:
        print(f"{patname} in commuting graph of {args.family}:")
        for v, name in zip(found, names):
            print(f"  vertex {v}  element {graph.label_of(v)}  {name}")
    return 0


def cmd_verify(args):
    try:
        catalog = _load(args)
    except FileNotFoundError:
        catalog = None
    report = run_theorem_suite(catalog=catalog, slow=args.slow)
    for line in report.lines():
        print(line)
    return 0 if report.ok else 1


def cmd_export_graph(args):
    group = build_family(parse_family(args.family))
    graph = commuting_graph(group, scope=args.scope)
    text = (graph.to_packed_text() + "\n" if args.packed
            else graph.to_edge_list_text())
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="commgraph",
        description="Commuting graphs of finite groups: construction, "
                    "certified graph-class recognition, and table checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify one group's commuting graph")
    p.add_argument("--family", help="family spec, e.g. S4, D14, Q16, PSL2(7)")
    p.add_argument("--id", help="catalog ID as 'order,index'")
    p.add_argument("--catalog", help="catalog file (default: bundled)")
    p.add_argument("--scope", choices=("all", "noncentral"), default="noncentral")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("table1", help="non-cograph groups of order <= 36")
    p.add_argument("--catalog")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("table2", help="non-cograph counts per order")
    p.add_argument("--catalog")
    p.add_argument("--max-order", type=int, default=72)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=cmd_table2)

    p = sub.add_parser("witness", help="find an induced pattern in a family")
    p.add_argument("--family", required=True)
    p.add_argument("--pattern", required=True,
                   help="P4 | C4 | C5 | 2K2 | hole:k")
    p.add_argument("--scope", choices=("all", "noncentral"), default="noncentral")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify", help="run the theorem suite")
    p.add_argument("--catalog")
    p.add_argument("--slow", action="store_true",
                   help="include the Sz(8) and exhaustive hole checks")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export-graph", help="write a commuting graph to a file")
    p.add_argument("--family", required=True)
    p.add_argument("--out", required=True, help="path or - for stdout")
    p.add_argument("--scope", choices=("all", "noncentral"), default="noncentral")
    p.add_argument("--packed", action="store_true",
                   help="one-line packed format instead of an edge list")
    p.set_defaults(func=cmd_export_graph)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CommgraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
