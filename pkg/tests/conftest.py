"""Shared fixtures for unit and integration tests."""

import json
from fractions import Fraction

import pytest

from homalt.gsla import SuperSpace
from homalt.homalg import HomAlgebra
from homalt.shell import dump, generate_fixture
from homalt.shell.fixtures import (
    broken2_algebra,
    dual_algebra,
    grassmann_algebra,
    non_malcev_algebra,
    octonion_algebra,
    tstar_algebra,
)
from main import main


@pytest.fixture
def dual():
    return dual_algebra()


@pytest.fixture(scope='session')
def octonions():
    return octonion_algebra()


@pytest.fixture
def broken2():
    return broken2_algebra()


@pytest.fixture
def grassmann2():
    return grassmann_algebra(2)


@pytest.fixture
def tstar():
    return tstar_algebra()


@pytest.fixture
def non_malcev():
    return non_malcev_algebra()


@pytest.fixture
def odd_plane():
    """The 0|2 zero algebra."""
    return HomAlgebra.zero(SuperSpace(0, 2))


@pytest.fixture
def fixture_file(tmp_path):
    """Write a named fixture document to a temporary file and return its path."""
    def write(name: str) -> str:
        path = tmp_path / (name.replace('(', '_').replace('|', '_').replace(')', '') + '.json')
        dump(generate_fixture(name), path)
        return str(path)
    return write


@pytest.fixture
def operator_file(tmp_path):
    """Write one operator object to a temporary file."""
    def write(name: str, kind: str, matrix, weight='0') -> str:
        path = tmp_path / f'{name}.json'
        payload = {'name': name, 'kind': kind, 'weight': weight,
                   'matrix': [[str(Fraction(v)) for v in row] for row in matrix]}
        path.write_text(json.dumps(payload), encoding='utf-8')
        return str(path)
    return write


@pytest.fixture
def cli(capsys):
    """Run the command line and return (exit code, stdout)."""
    def run(*argv: str):
        code = main(list(argv))
        return code, capsys.readouterr().out
    return run
