"""The ``check`` command."""

import argparse
import logging

from homalt.handlers.output import print_report
from homalt.shell import Suite, load, run_suite

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser('check', help='run an axiom suite against a document')
    parser.add_argument('file', help='algebra document (JSON)')
    parser.add_argument('--suite', choices=[s.value for s in Suite], default=Suite.ALTERNATIVE.value)
    parser.add_argument('--form', help='name of the bilinear form to use')
    parser.add_argument('--phi', help='name of the morphism operator used as φ')
    parser.add_argument('--operator', help='name of the operator, or an operator file')
    parser.add_argument('--json', action='store_true', help='machine-readable report')
    parser.set_defaults(handler=handle_check)


def handle_check(args: argparse.Namespace) -> int:
    document = load(args.file)
    report = run_suite(document, args.suite, form=args.form, phi=args.phi,
                       operator=args.operator)
    if not report.holds:
        logger.info("%s suite fails on %s: %s", args.suite, args.file,
                    ', '.join(entry.name for entry in report.failures()))
    return print_report(args.suite, report, args.json)
