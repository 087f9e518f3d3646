"""Handlers module."""

from .check_handlers import handle_check, register as register_check
from .construct_handlers import OPERATIONS, construct, handle_construct, register as register_construct
from .fixture_handlers import handle_fixture, register as register_fixture
from .oracle_handlers import handle_oracle, register as register_oracle

COMMANDS = [register_check, register_construct, register_fixture, register_oracle]

__all__ = [
    'COMMANDS',
    'OPERATIONS',
    'construct',
    'handle_check',
    'handle_construct',
    'handle_fixture',
    'handle_oracle',
]
