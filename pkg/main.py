"""Command-line entry point for the Hom-alternative superalgebra toolkit."""

import argparse
import logging
import sys
from typing import Optional, Sequence

from homalt.config import ToolkitConfig
from homalt.errors import HomAltError
from homalt.handlers import COMMANDS


def _parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        prog='homalt',
        description='Check and construct Hom-alternative superalgebras given by structure constants.',
    )
    parser.add_argument('--debug', action='store_true', default=ToolkitConfig.DEBUG,
                        help='verbose logging (also HOMALT_DEBUG=true)')
    subparsers = parser.add_subparsers(dest='command', required=True)
    for register in COMMANDS:
        register(subparsers)
    return parser.parse_args(argv)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run one command and return its exit code."""
    args = _parse_args(argv)

    # Configure logging; stdout is reserved for reports and documents
    logging.basicConfig(
        level=logging.DEBUG if args.debug else logging.INFO,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )

    if not ToolkitConfig.validate():
        logging.error("HOMALT_ORACLE_TRIALS and HOMALT_SEARCH_BOUND must be positive")
        return 2

    try:
        return args.handler(args)
    except HomAltError as e:
        logging.error(f"{args.command} failed: {type(e).__name__}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code


if __name__ == '__main__':
    raise SystemExit(main())
