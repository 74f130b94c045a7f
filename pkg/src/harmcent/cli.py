"""Command-line front end: generate, analyze, closed-form, verify.

Exit codes: 0 success, 1 verification found an unexplained mismatch,
2 usage/parse/domain errors.  Diagnostics go to stderr; reports go to
stdout or the --output path.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .centrality import CentralityReport, format_decimal, full_report
from .closed_form import centralization_closed
from .families import FAMILY_NAMES, parse_family_spec, generate
from .graph import parse_edge_list, serialize_edge_list
from .verify import (
    full_sweep,
    records_to_csv,
    records_to_json,
    verify_family,
)

USAGE_ERROR = 2
MISMATCH_ERROR = 1


def _add_output_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        choices=("text", "json", "csv"),
        default="text",
        help="output format (default: text)",
    )
    parser.add_argument(
        "-o",
        "--output",
        metavar="PATH",
        default=None,
        help="write output to PATH instead of stdout",
    )
    parser.add_argument(
        "--decimals",
        type=int,
        metavar="N",
        default=None,
        help="additionally render rationals as decimals with N digits",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="harmcent",
        description=(
            "Exact harmonic centrality and Freeman harmonic centralization "
            "of simple undirected graphs."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser(
        "generate",
        help="write a family instance as an edge-list file",
    )
    p_gen.add_argument("spec", help="family spec, e.g. wheel:6 or bipartite:3,4")
    p_gen.add_argument("-o", "--output", metavar="PATH", default=None)

    p_an = sub.add_parser(
        "analyze",
        help="per-vertex harmonic centralities and centralization",
    )
    p_an.add_argument(
        "input", nargs="?", default=None, help="edge-list file to analyze"
    )
    p_an.add_argument(
        "--family",
        metavar="SPEC",
        default=None,
        help="analyze a generated family instance instead of a file",
    )
    p_an.add_argument(
        "--centralization-only",
        action="store_true",
        help="print only the centralization value",
    )
    p_an.add_argument(
        "--threads",
        type=int,
        metavar="N",
        default=None,
        help="parallel workers for the all-pairs search (default: CPU count)",
    )
    _add_output_options(p_an)

    p_cf = sub.add_parser(
        "closed-form",
        help="closed-form centralization without building the graph",
    )
    p_cf.add_argument("spec", help="family spec, e.g. helm:7")
    _add_output_options(p_cf)

    p_ver = sub.add_parser(
        "verify",
        help="sweep families comparing closed forms against the engine",
    )
    p_ver.add_argument(
        "--family",
        default="all",
        help="family name or 'all' (default: all)",
    )
    p_ver.add_argument("--min", type=int, default=None, help="sweep lower bound")
    p_ver.add_argument("--max", type=int, default=None, help="sweep upper bound")
    p_ver.add_argument(
        "--threads",
        type=int,
        metavar="N",
        default=None,
        help="parallel workers for the all-pairs search (default: CPU count)",
    )
    _add_output_options(p_ver)

    return parser


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _rational_cell(value, decimals: int | None) -> str:
    if decimals is None:
        return str(value)
    return f"{value} ({format_decimal(value, decimals)})"


def _report_text(report: CentralityReport, decimals: int | None) -> str:
    lines = [f"order: {report.order}", f"size: {report.size}"]
    for v, value in enumerate(report.centralities):
        lines.append(f"vertex {v}: {_rational_cell(value, decimals)}")
    lines.append(f"max: {_rational_cell(report.max_value, decimals)}")
    lines.append("argmax: " + " ".join(str(v) for v in report.argmax))
    if report.centralization is None:
        lines.append("centralization: undefined")
    else:
        lines.append(
            f"centralization: {_rational_cell(report.centralization, decimals)}"
        )
    return "\n".join(lines) + "\n"


def _report_json(report: CentralityReport, decimals: int | None) -> str:
    payload = {
        "order": report.order,
        "size": report.size,
        "centralities": [str(c) for c in report.centralities],
        "max": str(report.max_value),
        "argmax": list(report.argmax),
        "centralization": (
            None if report.centralization is None else str(report.centralization)
        ),
    }
    if decimals is not None:
        payload["centralities_decimal"] = [
            format_decimal(c, decimals) for c in report.centralities
        ]
        payload["max_decimal"] = format_decimal(report.max_value, decimals)
        payload["centralization_decimal"] = (
            None
            if report.centralization is None
            else format_decimal(report.centralization, decimals)
        )
    return json.dumps(payload, indent=2) + "\n"


def _report_csv(report: CentralityReport, decimals: int | None) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    header = ["quantity", "vertex", "value"]
    if decimals is not None:
        header.append("decimal")
    writer.writerow(header)

    def row(quantity, vertex, value):
        cells = [quantity, vertex, str(value)]
        if decimals is not None:
            cells.append("" if value == "undefined" else format_decimal(value, decimals))
        writer.writerow(cells)

    for v, value in enumerate(report.centralities):
        row("centrality", v, value)
    row("max", "", report.max_value)
    writer.writerow(
        ["argmax", "", " ".join(str(v) for v in report.argmax)]
        + ([""] if decimals is not None else [])
    )
    if report.centralization is None:
        writer.writerow(
            ["centralization", "", "undefined"]
            + ([""] if decimals is not None else [])
        )
    else:
        row("centralization", "", report.centralization)
    return buffer.getvalue()


def _cmd_generate(args) -> int:
    spec = parse_family_spec(args.spec)
    graph, _ = generate(spec)
    _write(serialize_edge_list(graph), args.output)
    return 0


def _load_graph(args):
    if (args.input is None) == (args.family is None):
        raise ValueError("exactly one of an input file or --family is required")
    if args.family is not None:
        graph, _ = generate(parse_family_spec(args.family))
        return graph
    with open(args.input, "r", encoding="utf-8") as handle:
        return parse_edge_list(handle.read())


def _cmd_analyze(args) -> int:
    graph = _load_graph(args)
    report = full_report(graph, args.threads)
    decimals = args.decimals
    if args.centralization_only:
        value = report.centralization
        if args.format == "json":
            payload = {"centralization": None if value is None else str(value)}
            if decimals is not None and value is not None:
                payload["centralization_decimal"] = format_decimal(value, decimals)
            text = json.dumps(payload, indent=2) + "\n"
        elif args.format == "csv":
            buffer = io.StringIO()
            writer = csv.writer(buffer, lineterminator="\n")
            header = ["quantity", "value"] + (
                ["decimal"] if decimals is not None else []
            )
            writer.writerow(header)
            if value is None:
                writer.writerow(
                    ["centralization", "undefined"]
                    + ([""] if decimals is not None else [])
                )
            else:
                writer.writerow(
                    ["centralization", str(value)]
                    + ([format_decimal(value, decimals)] if decimals is not None else [])
                )
            text = buffer.getvalue()
        else:
            if value is None:
                text = "undefined\n"
            else:
                text = _rational_cell(value, decimals) + "\n"
        _write(text, args.output)
        return 0
    if args.format == "json":
        text = _report_json(report, decimals)
    elif args.format == "csv":
        text = _report_csv(report, decimals)
    else:
        text = _report_text(report, decimals)
    _write(text, args.output)
    return 0


def _cmd_closed_form(args) -> int:
    spec = parse_family_spec(args.spec)
    value = centralization_closed(spec)
    decimals = args.decimals
    if args.format == "json":
        payload = {
            "family": spec.family,
            "params": list(spec.params),
            "centralization": str(value),
        }
        if decimals is not None:
            payload["centralization_decimal"] = format_decimal(value, decimals)
        text = json.dumps(payload, indent=2) + "\n"
    elif args.format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        header = ["family", "params", "centralization"]
        if decimals is not None:
            header.append("decimal")
        writer.writerow(header)
        cells = [
            spec.family,
            ",".join(str(p) for p in spec.params),
            str(value),
        ]
        if decimals is not None:
            cells.append(format_decimal(value, decimals))
        writer.writerow(cells)
        text = buffer.getvalue()
    else:
        text = _rational_cell(value, decimals) + "\n"
    _write(text, args.output)
    return 0


def _records_text(records) -> str:
    lines = []
    for r in records:
        params = ",".join(str(p) for p in r.params)
        status = "match" if r.match else "MISMATCH"
        line = f"{r.family}:{params} {r.quantity} closed={r.closed} oracle={r.oracle} {status}"
        if r.note:
            line += f"  # {r.note}"
        lines.append(line)
    total = len(records)
    bad = sum(1 for r in records if not r.match)
    lines.append(f"records: {total}  mismatches: {bad}")
    return "\n".join(lines) + "\n"


def _cmd_verify(args) -> int:
    family = args.family.lower()
    if family == "all":
        records = full_sweep(lo=args.min, hi=args.max, threads=args.threads)
    elif family in FAMILY_NAMES:
        records = verify_family(family, args.min, args.max, args.threads)
    else:
        raise ValueError(
            f"unknown family {args.family!r}; expected 'all' or one of "
            + ", ".join(FAMILY_NAMES)
        )
    if args.format == "json":
        text = records_to_json(records)
    elif args.format == "csv":
        text = records_to_csv(records)
    else:
        text = _records_text(records)
    _write(text, args.output)
    return 0 if all(r.match for r in records) else MISMATCH_ERROR


_COMMANDS = {
    "generate": _cmd_generate,
    "analyze": _cmd_analyze,
    "closed-form": _cmd_closed_form,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
