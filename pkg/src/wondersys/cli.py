"""Command-line front end.

Verbs: validate, localize, rigidity, critical, orbits, catalog.  Input is
a spherical-system document path or a built-in catalog name.  Exit codes:
0 success, 1 validation failure, 2 malformed input or arguments.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Dict, List, Optional

from .catalog import catalog_entries, catalog_entry
from .localize import localize
from .orbits import emit_graph, orbit_poset
from .rigidity import critical_roots, critical_roots_oracle, distinguished_elements
from .rootlat import RootSystemError
from .serialize import DocumentError, document_to_system, system_to_document
from .sphsys import SphericalSystem, ValidationReport, validate_system

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _load_system(source: str) -> SphericalSystem:
    if os.path.exists(source):
        try:
            with open(source, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise CliError(f"cannot read {source}: {exc}", EXIT_USAGE)
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise CliError(
                f"{source}: invalid JSON at line {exc.lineno}: {exc.msg}", EXIT_USAGE
            )
        try:
            return document_to_system(doc)
        except DocumentError as exc:
            raise CliError(f"{source}: {exc}", EXIT_USAGE)
    try:
        return catalog_entry(source).system
    except KeyError:
        raise CliError(
            f"{source!r} is neither an existing file nor a catalog entry", EXIT_USAGE
        )


def _require_valid(system: SphericalSystem) -> ValidationReport:
    report = validate_system(system)
    if not report.ok:
        lines = ["invalid"] + [f"violation {v}" for v in report.violations]
        raise CliError("\n".join(lines), EXIT_INVALID)
    return report


def _violations_json(report: ValidationReport) -> List[Dict[str, str]]:
    return [{"axiom": v.axiom, "message": v.message} for v in report.violations]


def _cmd_validate(args) -> tuple:
    system = _load_system(args.input)
    report = validate_system(system)
    if report.ok:
        return EXIT_OK, "ok", {"ok": True, "violations": []}
    text = "invalid\n" + "\n".join(f"violation {v}" for v in report.violations)
    return EXIT_INVALID, text, {"ok": False, "violations": _violations_json(report)}


def _parse_subset(raw: str) -> List[str]:
    labels = [part.strip() for part in raw.split(",") if part.strip()]
    if not labels:
        raise CliError("--subset must list at least one simple root", EXIT_USAGE)
    return labels


def _cmd_localize(args) -> tuple:
    system = _load_system(args.input)
    _require_valid(system)
    try:
        sub = localize(system, _parse_subset(args.subset))
    except RootSystemError as exc:
        raise CliError(str(exc), EXIT_USAGE)
    doc = system_to_document(sub)
    text = json.dumps(doc, indent=2, sort_keys=True)
    return EXIT_OK, text, {"system": doc}


def _cmd_rigidity(args) -> tuple:
    system = _load_system(args.input)
    _require_valid(system)
    report = distinguished_elements(system)
    lines = [f"rigid: {'true' if report.rigid else 'false'}"]
    payload = {"rigid": report.rigid, "distinguished": []}
    for w in report.distinguished:
        idx = system.psi_index(w.root)
        lines.append(
            f"distinguished: s{idx + 1} = {w.root} (condition {w.condition}: {w.witness})"
        )
        payload["distinguished"].append(
            {
                "index": idx,
                "root": str(w.root),
                "condition": w.condition,
                "witness": w.witness,
            }
        )
    return EXIT_OK, "\n".join(lines), payload


def _cmd_critical(args) -> tuple:
    system = _load_system(args.input)
    _require_valid(system)
    compute = critical_roots_oracle if args.oracle else critical_roots
    report = compute(system)
    lines = []
    payload = {"oracle": bool(args.oracle), "entries": []}
    for i, e in enumerate(report.entries):
        if e.distinguished:
            verdict = "distinguished (not critical)"
        elif e.critical and e.vacuous:
            verdict = "critical (vacuously: no admissible proper subsets)"
        elif e.critical:
            verdict = "critical"
        else:
            failing = ",".join(sorted(e.failing_subset, key=lambda s: (len(s), s)))
            verdict = f"not critical (not distinguished at {{{failing}}})"
        lines.append(f"s{i + 1} = {e.root}: {verdict}")
        payload["entries"].append(
            {
                "index": i,
                "root": str(e.root),
                "distinguished": e.distinguished,
                "critical": e.critical,
                "vacuous": e.vacuous,
                "failing_subset": sorted(e.failing_subset) if e.failing_subset else None,
            }
        )
    if not report.entries:
        lines.append("no spherical roots")
    return EXIT_OK, "\n".join(lines), payload


def _cmd_orbits(args) -> tuple:
    system = _load_system(args.input)
    _require_valid(system)
    poset = orbit_poset(system)
    lines = [
        f"rank: {poset.rank}",
        f"nodes: {len(poset.nodes)}",
        f"edges: {len(poset.edges)}",
    ]
    payload: Dict[str, Any] = {
        "rank": poset.rank,
        "nodes": len(poset.nodes),
        "edges": len(poset.edges),
        "dot_path": None,
    }
    if args.dot:
        try:
            with open(args.dot, "w", encoding="utf-8") as fh:
                fh.write(emit_graph(poset))
        except OSError as exc:
            raise CliError(f"cannot write {args.dot}: {exc}", EXIT_USAGE)
        lines.append(f"dot: {args.dot}")
        payload["dot_path"] = args.dot
    return EXIT_OK, "\n".join(lines), payload


def _cmd_catalog(args) -> tuple:
    if args.action == "list":
        entries = catalog_entries()
        lines = [f"{e.name}: {e.description}" for e in entries]
        payload = {
            "entries": [{"name": e.name, "description": e.description} for e in entries]
        }
        return EXIT_OK, "\n".join(lines), payload
    try:
        entry = catalog_entry(args.name)
    except KeyError as exc:
        raise CliError(str(exc.args[0]), EXIT_USAGE)
    doc = system_to_document(entry.system)
    text = json.dumps(doc, indent=2, sort_keys=True)
    return EXIT_OK, text, {"name": entry.name, "system": doc}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wondersys",
        description="Combinatorics of spherical systems: validation, "
        "localization, rigidity, criticality and orbit posets.",
    )
    parser.add_argument(
        "--format", choices=("text", "json"), default="text", help="report format"
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("validate", help="check the axioms of a spherical system")
    p.add_argument("input", help="document path or catalog name")

    p = sub.add_parser("localize", help="localize at a subset of simple roots")
    p.add_argument("input", help="document path or catalog name")
    p.add_argument("--subset", required=True, help="comma-separated simple-root labels")

    p = sub.add_parser("rigidity", help="list distinguished spherical roots")
    p.add_argument("input", help="document path or catalog name")

    p = sub.add_parser("critical", help="per-root criticality report")
    p.add_argument("input", help="document path or catalog name")
    p.add_argument(
        "--oracle",
        action="store_true",
        help="enumerate every admissible subset instead of only the maximal ones",
    )

    p = sub.add_parser("orbits", help="orbit poset statistics and DOT output")
    p.add_argument("input", help="document path or catalog name")
    p.add_argument("--dot", metavar="PATH", help="write the poset as a DOT digraph")

    p = sub.add_parser("catalog", help="built-in regression systems")
    cat_sub = p.add_subparsers(dest="action", required=True)
    cat_sub.add_parser("list", help="list catalog entries")
    show = cat_sub.add_parser("show", help="emit one catalog entry as a document")
    show.add_argument("name")

    return parser


_HANDLERS = {
    "validate": _cmd_validate,
    "localize": _cmd_localize,
    "rigidity": _cmd_rigidity,
    "critical": _cmd_critical,
    "orbits": _cmd_orbits,
    "catalog": _cmd_catalog,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        code, text, payload = _HANDLERS[args.verb](args)
    except CliError as exc:
        if args.format == "json":
            print(json.dumps({"ok": False, "error": str(exc)}, sort_keys=True))
        else:
            print(str(exc), file=sys.stderr if exc.code == EXIT_USAGE else sys.stdout)
        return exc.code
    if args.format == "json":
        envelope = {"command": args.verb, "ok": code == EXIT_OK}
        envelope.update(payload)
        print(json.dumps(envelope, indent=2, sort_keys=True))
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
