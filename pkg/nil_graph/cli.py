"""
Command line front end: ring, graph, invariants, scan and verify.

Exit codes: 0 success, 1 an unexpected theorem mismatch, 2 usage or input error.
"""

import argparse
import json
import os
import sys

from .config.config_loader import ensure_config_exists, get_exact_dominating_cap, get_max_order
from .errors import NilGraphError, SearchTooLargeError
from .graph.export import GRAPH_FORMATS, write_scan_csv
from .graph.nil_clean_graph import build_graph
from .graph.report import compute_report, report_inconsistencies
from .harness.cases import select_cases
from .harness.families import families_for_scan, resolve_families
from .harness.suite import run_scan, run_suite
from .nil_clean import nilclean_profile, profile_to_dict
from .rings.builder import build_ring
from .rings.ring_spec import format_spec, parse_spec, spec_order
from .utils.logs import log

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


def _write_output(text, path):
    """Write command output to *path*, or stdout when path is None or "-"."""
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    parent = os.path.dirname(os.path.abspath(path))
    os.makedirs(parent, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(text)
    log("OUTPUT", f"wrote {path}")


def _format_set(labels):
    return "{" + ", ".join(labels) + "}"


def _build_ring(args):
    """Build the ring of a single-ring command, refusing orders above max_order."""
    spec = parse_spec(args.spec)
    max_order = get_max_order() if args.max_order is None else args.max_order
    order = spec_order(spec)
    if order > max_order:
        raise SearchTooLargeError(
            f"{format_spec(spec)} has {order} elements, above max_order {max_order} (see --max-order)"
        )
    return build_ring(spec)


def cmd_ring(args):
    ring = _build_ring(args)
    data = profile_to_dict(ring, nilclean_profile(ring))
    if args.json:
        _write_output(json.dumps(data, indent=2, ensure_ascii=False) + "\n", args.out)
        return EXIT_OK

    lines = [f"ring: {data['ring']}  order {data['order']}  commutative: {str(data['commutative']).lower()}"]
    for key, title in (("idempotents", "Idem"), ("nilpotents", "Nil"), ("nilclean", "NC")):
        labels = data[key]["labels"]
        lines.append(f"{title} ({len(labels)}): {_format_set(labels)}")
    lines.append(f"nil clean: {str(data['is_nil_clean_ring']).lower()}")
    lines.append(f"weak nil clean: {str(data['is_weak_nil_clean_ring']).lower()}")
    lines.append(f"field: {str(data['is_field']).lower()}")
    _write_output("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_graph(args):
    ring = _build_ring(args)
    g = build_graph(ring)
    _write_output(GRAPH_FORMATS[args.format](g), args.out)
    log("GRAPH", f"{ring.name}: {g.order} vertices, {g.edge_count} edges")
    return EXIT_OK


def cmd_invariants(args):
    ring = _build_ring(args)
    report = compute_report(
        build_graph(ring),
        with_dominating=not args.no_dominating,
        dominating_cap=args.dominating_cap,
        include_edge_colors=args.edge_colors,
    )
    for problem in report_inconsistencies(report):
        log("WARNING", problem)
    if args.json:
        _write_output(json.dumps(report.to_dict(), indent=2, ensure_ascii=False) + "\n", args.out)
        return EXIT_OK

    lines = [
        f"ring: {report.ring}  order {report.order}  edges {report.edge_count}",
        f"components: {report.component_count} {report.component_sizes}",
        f"girth: {report.girth}",
        f"diameter: {report.diameter}",
        f"bipartite: {str(report.bipartite).lower()}",
        f"complete: {str(report.complete).lower()}",
        f"max degree: {report.max_degree}",
        f"sum colouring: {report.coloring.color_count} colours, "
        f"proper: {str(report.coloring.proper).lower()}, class 1: {str(report.coloring.class_one).lower()}",
        f"census: {report.census.to_dict()}",
    ]
    if report.dominating is not None:
        d = report.dominating
        exact = "" if d.exact else " (greedy bound)"
        lines.append(f"dominating set: {_format_set(d.labels)} size {d.size}{exact}")
    _write_output("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_scan(args):
    families = families_for_scan(args.zn_range, args.gf_bound, args.list)
    rows = run_scan(families, max_order=args.max_order, jobs=args.jobs, with_dominating=not args.no_dominating)
    _write_output(write_scan_csv(rows), args.csv)
    log("SCAN", f"{len(rows)} rows")
    return EXIT_OK


def cmd_verify(args):
    families = resolve_families(args.families)
    try:
        cases = select_cases(args.cases)
    except KeyError as e:
        log("ERROR", e.args[0])
        return EXIT_USAGE
    report = run_suite(families, cases, max_order=args.max_order, jobs=args.jobs)
    if args.json:
        _write_output(report.to_json(include_metadata=not args.no_metadata), args.json)

    summary = ", ".join(f"{k}={v}" for k, v in report.totals.items())
    log("VERIFY", f"{len(report.results)} verdicts: {summary}")
    return report.exit_code


def build_parser():
    parser = argparse.ArgumentParser(
        prog="nil_graph",
        description="Nil clean graphs of finite rings: build, measure and check the theorems",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  nil_graph ring "GF(5,2)"
  nil_graph graph Z5 --format dot --out z5.dot
  nil_graph invariants "Z4xZ3" --json
  nil_graph scan --zn-range 2..20 --csv scan.csv
  nil_graph verify --families "GF(2,2)" --cases girth-path-shape
  nil_graph verify --jobs 8 --json report.json
        """,
    )
    parser.add_argument("--config", default=None, help="Path to an alternative config.json")
    sub = parser.add_subparsers(dest="command", required=True)

    ring = sub.add_parser("ring", help="Idempotents, nilpotents and nil clean elements of a ring")
    ring.add_argument("spec", help='Ring spec, e.g. Z6, "GF(5,2)", Z4xZ3, "M2(Z2)", "Q(Z12)"')
    ring.add_argument("--json", action="store_true", help="Print the profile as JSON")
    ring.add_argument("--out", default=None, help="Write to this file instead of stdout")
    ring.add_argument("--max-order", type=int, default=None, help="Refuse rings above this order")
    ring.set_defaults(handler=cmd_ring)

    graph = sub.add_parser("graph", help="Export the nil clean graph")
    graph.add_argument("spec", help="Ring spec")
    graph.add_argument("--format", choices=sorted(GRAPH_FORMATS), default="dot", help="Output format")
    graph.add_argument("--out", default=None, help="Write to this file instead of stdout")
    graph.add_argument("--max-order", type=int, default=None, help="Refuse rings above this order")
    graph.set_defaults(handler=cmd_graph)

    invariants = sub.add_parser("invariants", help="Girth, diameter, domination, colouring and more")
    invariants.add_argument("spec", help="Ring spec")
    invariants.add_argument("--json", action="store_true", help="Print the report as JSON")
    invariants.add_argument("--out", default=None, help="Write to this file instead of stdout")
    invariants.add_argument("--max-order", type=int, default=None, help="Refuse rings above this order")
    invariants.add_argument("--no-dominating", action="store_true", help="Skip the dominating set search")
    invariants.add_argument(
        "--dominating-cap",
        type=int,
        default=None,
        help=f"Largest order for the exact dominating search (default {get_exact_dominating_cap()})",
    )
    invariants.add_argument("--edge-colors", action="store_true", help="Include the colour of every edge")
    invariants.set_defaults(handler=cmd_invariants)

    scan = sub.add_parser("scan", help="One CSV row of invariants per ring")
    scan.add_argument("--zn-range", default=None, help="Z_n range like 2..20")
    scan.add_argument("--gf-bound", type=int, default=None, help="Include GF(p^k), k >= 2, up to this order")
    scan.add_argument("--list", default=None, help="File with one ring spec per line, or a families JSON file")
    scan.add_argument("--csv", default=None, help="Write the CSV here instead of stdout")
    scan.add_argument("--jobs", type=int, default=None, help="Worker processes")
    scan.add_argument("--max-order", type=int, default=None, help="Skip rings above this order")
    scan.add_argument("--no-dominating", action="store_true", help="Leave the dominating number out")
    scan.set_defaults(handler=cmd_scan)

    verify = sub.add_parser("verify", help="Check every theorem case over ring families")
    verify.add_argument(
        "--families",
        default=None,
        help="Families file (JSON or one spec per line) or a comma separated spec list",
    )
    verify.add_argument("--cases", default="all", help='Comma separated case ids, or "all"')
    verify.add_argument("--json", default=None, help='Write the JSON report here ("-" for stdout)')
    verify.add_argument(
        "--no-metadata",
        action="store_true",
        help="Leave wall time and worker count out of the JSON report",
    )
    verify.add_argument("--jobs", type=int, default=None, help="Worker processes")
    verify.add_argument("--max-order", type=int, default=None, help="Skip rings above this order")
    verify.set_defaults(handler=cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.config:
        os.environ["NILGRAPH_CONFIG"] = args.config
    ensure_config_exists()

    try:
        return args.handler(args)
    except NilGraphError as e:
        log("ERROR", str(e))
        return EXIT_USAGE
    except OSError as e:
        log("ERROR", f"cannot write output: {e}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
