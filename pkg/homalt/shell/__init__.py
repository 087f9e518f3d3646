"""Documents, fixtures, the identity oracle and named check suites."""

from .document import (
    AlgebraDocument,
    FormSpec,
    OperatorKind,
    OperatorSpec,
    dump,
    from_algebra,
    load,
    parse,
    serialize,
    to_algebra,
    to_derivation,
    to_form,
    to_forms,
    to_map,
    to_postalt,
    to_rota_baxter,
)
from .fixtures import FIXTURE_NAMES, generate_fixture
from .oracle import IDENTITY_CATALOG, oracle_check
from .suites import Suite, checker_verdict, run_suite

__all__ = [
    'AlgebraDocument',
    'FIXTURE_NAMES',
    'FormSpec',
    'IDENTITY_CATALOG',
    'OperatorKind',
    'OperatorSpec',
    'Suite',
    'checker_verdict',
    'dump',
    'from_algebra',
    'generate_fixture',
    'load',
    'oracle_check',
    'parse',
    'run_suite',
    'serialize',
    'to_algebra',
    'to_derivation',
    'to_form',
    'to_forms',
    'to_map',
    'to_postalt',
    'to_rota_baxter',
]
