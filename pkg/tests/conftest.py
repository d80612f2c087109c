import json
from pathlib import Path

import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None)
settings.load_profile("default")

GOLDEN = Path(__file__).parent / "golden"

ACCEPTANCE_LINES: list[str] = []


def load_fixture(name: str) -> tuple[int, list[list[tuple[int, int]]]]:
    data = json.loads((GOLDEN / name).read_text())
    return data["n"], [[tuple(e) for e in tree] for tree in data["trees"]]


@pytest.fixture
def golden_dir() -> Path:
    return GOLDEN


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
