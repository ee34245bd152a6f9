import os

import pytest

from polyfence.fileio import load_config

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


def fixture_path(name: str) -> str:
    return os.path.join(FIXTURES, f"{name}.json")


@pytest.fixture
def fixtures_dir():
    return FIXTURES


def load_fixture(name: str, strict: bool = False):
    return load_config(fixture_path(name), strict=strict)


@pytest.fixture
def tetromino_nine():
    return load_fixture("tetromino_nine")


@pytest.fixture
def two_holes():
    return load_fixture("two_holes")
