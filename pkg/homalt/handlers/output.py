"""Shared output helpers for command handlers."""

import json
import sys
from typing import Optional

from homalt.errors import UsageError
from homalt.homalg import AxiomReport
from homalt.shell import AlgebraDocument, dump, serialize
from homalt.utils import format_rational, parse_param


def exit_code(report: AxiomReport) -> int:
    return 0 if report.holds else 1


def report_payload(suite: str, report: AxiomReport) -> dict:
    axioms = []
    for entry in report:
        witness = entry.witness
        axioms.append({
            'name': entry.name,
            'holds': entry.holds,
            'witness': list(witness.indices) if witness else None,
            'defect': [format_rational(v) for v in witness.defect] if witness else None,
        })
    return {'suite': suite, 'axioms': axioms, 'exit': exit_code(report)}


def render_report(suite: str, report: AxiomReport) -> str:
    lines = []
    for entry in report:
        if entry.holds:
            lines.append(f"✅ {entry.name}")
            continue
        witness = entry.witness
        defect = ', '.join(format_rational(v) for v in witness.defect)
        lines.append(f"❌ {entry.name} at {witness.indices}: defect ({defect})")
    verdict = 'all hold' if report.holds else f"{len(report.failures())} fail"
    lines.append(f"{suite}: {len(report)} axioms, {verdict}")
    return '\n'.join(lines)


def print_report(suite: str, report: AxiomReport, as_json: bool) -> int:
    if as_json:
        print(json.dumps(report_payload(suite, report), indent=2))
    else:
        print(render_report(suite, report))
    return exit_code(report)


def write_document(document: AlgebraDocument, output: Optional[str]) -> None:
    """Write to ``output`` or to stdout when no path is given."""
    if output:
        dump(document, output)
    else:
        sys.stdout.write(serialize(document))


def collect_params(raw: Optional[list[str]]) -> dict[str, str]:
    params: dict[str, str] = {}
    for item in raw or []:
        name, value = parse_param(item)
        if name in params:
            raise UsageError(f"parameter {name!r} given twice")
        params[name] = value
    return params
