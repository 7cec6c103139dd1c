import sys
import json
from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def expected_pattern():
    return [tuple(row) for row in json.loads((FIXTURES / "expected_verdicts.json").read_text())]


@pytest.fixture(scope="session")
def default_verdicts():
    from oddlab.claims import run_all

    return run_all()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
