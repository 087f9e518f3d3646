"""The ``fixture`` command."""

import argparse

from homalt.handlers.output import collect_params, write_document
from homalt.shell import FIXTURE_NAMES, generate_fixture


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        'fixture', help='write a fixture document',
        description=f"Known fixtures: {', '.join(FIXTURE_NAMES)}",
    )
    parser.add_argument('name', help='fixture name, e.g. DUAL or ZERO(0|2)')
    parser.add_argument('--param', action='append', metavar='NAME=VALUE')
    parser.add_argument('-o', '--output', help='output path (default: stdout)')
    parser.set_defaults(handler=handle_fixture)


def handle_fixture(args: argparse.Namespace) -> int:
    write_document(generate_fixture(args.name, collect_params(args.param)), args.output)
    return 0
