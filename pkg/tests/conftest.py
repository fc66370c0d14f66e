import random

import pytest


@pytest.fixture
def rng():
    return random.Random(1234)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import OUTCOME_LINES

    if OUTCOME_LINES:
        terminalreporter.section("acceptance criteria")
        for line in OUTCOME_LINES:
            terminalreporter.write_line(line)
