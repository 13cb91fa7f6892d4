"""Command-line interface: check, generate, validate, export-graph.

Exit codes across all commands: 0 = success / all requested conditions
hold, 1 = a requested condition fails, 2 = invalid input or parameters.
Output is plain text (nothing to disable for NO_COLOR).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .criteria import CriteriaContext
from .diagram import Diagram, DiagramError, MINUS, PLUS
from .diagramio import (
    build_report,
    graph_to_dot,
    parse_diagram,
    report_to_json,
    report_to_text,
    serialize_diagram,
)
from .systems import validate_disk_systems
from .twist import example_diagram


def _load(path: str) -> Diagram:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise DiagramError(f"cannot read {path}: {exc}") from exc
    return parse_diagram(text)


def cmd_check(args) -> int:
    try:
        diagram = _load(args.file)
    except DiagramError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    validation = validate_disk_systems(diagram)
    if not validation.passed:
        report = {
            "input": {
                "genus": diagram.genus,
                "n": len(diagram.a_words),
                "n_star": len(diagram.b_words),
                "m": None,
                "m_star": None,
                "crossings": diagram.num_crossings,
            },
            "validation": {
                "passed": False,
                "entries": [{"code": c, "detail": t} for c, t in validation],
            },
            "annotations": [],
        }
        _emit(args, report)
        return 2
    report = build_report(diagram, condition=args.condition, validation=validation)
    _emit(args, report)
    requested = []
    if args.condition in ("rc", "both"):
        requested.append(report["rc"]["holds"])
    if args.condition in ("drc", "both"):
        requested.append(report["drc"]["holds"])
    return 0 if all(requested) else 1


def _emit(args, report):
    text = report_to_json(report) if args.structured else report_to_text(report)
    if getattr(args, "output", None):
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_generate(args) -> int:
    try:
        diagram = example_diagram(args.genus, args.power, maximal=args.maximal)
    except DiagramError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = serialize_diagram(diagram)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_validate(args) -> int:
    try:
        diagram = _load(args.file)
    except DiagramError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    validation = validate_disk_systems(diagram)
    if validation.passed:
        print("validation: passed")
        return 0
    print("validation: FAILED")
    for code, detail in validation:
        print(f"  - [{code}] {detail}")
    return 1


def _parse_side(s: str) -> int:
    if s == "+":
        return PLUS
    if s == "-":
        return MINUS
    raise DiagramError(f"bad side label {s!r} (use + or -)")


def cmd_export_graph(args) -> int:
    try:
        diagram = _load(args.file)
        ctx = CriteriaContext(diagram)
        kind, _, rest = args.which.partition(":")
        if kind == "Gk":
            graph = ctx.component_graph(int(rest))
        elif kind == "Hd":
            graph = ctx.disk_graph(int(rest))
        elif kind == "Gdetail":
            parts = rest.split(",")
            if len(parts) != 6:
                raise DiagramError("Gdetail selector needs k,l,i,eps,j,delta")
            k, l, i = int(parts[0]), int(parts[1]), int(parts[2])
            eps = _parse_side(parts[3])
            j, delta = int(parts[4]), _parse_side(parts[5])
            graph = ctx.detail_graph(k, l, (i, eps), (j, delta))
        else:
            raise DiagramError(f"unknown selector kind {kind!r}")
    except (DiagramError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = graph_to_dot(graph, name=args.which)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="heegaardrect",
        description="Rectangle and double rectangle conditions for "
        "disk-system diagrams of Heegaard splittings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide the conditions for a diagram file")
    p.add_argument("file")
    p.add_argument("--condition", choices=("rc", "drc", "both"), default="both")
    p.add_argument("--structured", action="store_true",
                   help="emit a JSON report instead of text")
    p.add_argument("-o", "--output", help="write the report to a file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("generate", help="generate a twisted example diagram")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--power", type=int, required=True)
    p.add_argument("--maximal", action="store_true",
                   help="extend to maximal disk systems (genus 3 only)")
    p.add_argument("-o", "--output", help="write the diagram to a file")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("validate", help="run the disk-system checks only")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("export-graph", help="export a criteria graph as DOT")
    p.add_argument("file")
    p.add_argument("--which", required=True,
                   help="Gk:K | Hd:D | Gdetail:K,L,I,EPS,J,DELTA")
    p.add_argument("--dot", action="store_true",
                   help="DOT output (the default and only format)")
    p.add_argument("-o", "--output", help="write the graph to a file")
    p.set_defaults(func=cmd_export_graph)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
