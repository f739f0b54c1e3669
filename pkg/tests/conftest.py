from __future__ import annotations

import random
from pathlib import Path

import pytest

from ehull.code import from_generators
from ehull.ring import parse_ematrix

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"


def load_code(name: str):
    return from_generators(parse_ematrix((DATA / name).read_text()))


@pytest.fixture
def rng():
    return random.Random(20241018)


@pytest.fixture
def data_dir():
    return DATA


# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[num])
