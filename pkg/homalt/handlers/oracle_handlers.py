"""The ``oracle`` command: random-trial verdict next to the checker's."""

import argparse
import json
import logging

from homalt.config import ToolkitConfig
from homalt.shell import IDENTITY_CATALOG, checker_verdict, load, oracle_check, to_algebra, to_postalt
from homalt.shell.oracle import ALGEBRA_IDENTITIES, lookup_identity

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser('oracle', help='evaluate one identity on random elements')
    parser.add_argument('file', help='algebra document (JSON)')
    parser.add_argument('--identity', required=True,
                        help=f"one of: {', '.join(IDENTITY_CATALOG)}")
    parser.add_argument('--trials', type=int, default=None)
    parser.add_argument('--seed', type=int, default=None)
    parser.add_argument('--json', action='store_true')
    parser.set_defaults(handler=handle_oracle)


def handle_oracle(args: argparse.Namespace) -> int:
    lookup_identity(args.identity)
    document = load(args.file)
    if args.identity in ALGEBRA_IDENTITIES:
        source = to_algebra(document)
    else:
        source = to_postalt(document)
    trials = args.trials if args.trials is not None else ToolkitConfig.ORACLE_TRIALS
    seed = args.seed if args.seed is not None else ToolkitConfig.ORACLE_SEED
    holds = oracle_check(source, args.identity, trials, seed)
    agrees = checker_verdict(source, args.identity) == holds
    if not agrees:
        logger.warning("oracle and checker disagree on %s for %s", args.identity, args.file)
    if args.json:
        print(json.dumps({'identity': args.identity, 'holds': holds, 'trials': trials,
                          'seed': seed, 'checkerAgrees': agrees}, indent=2))
    else:
        mark = '✅' if holds else '❌'
        print(f"{mark} {args.identity}: {'holds' if holds else 'fails'} on {trials} trials "
              f"(seed {seed}), checker {'agrees' if agrees else 'DISAGREES'}")
    return 0 if holds else 1
