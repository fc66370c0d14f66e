"""One test per acceptance criterion.

Each outcome line (PASS/FAIL, criterion, timing, detail) is also collected and
printed in the terminal summary by conftest.py.
"""

import pytest

from cyclohedra import verify

OUTCOME_LINES = []


@pytest.mark.parametrize("criterion", verify.CRITERIA, ids=lambda c: f"C{c.number}-{c.name}")
def test_criterion(criterion):
    outcome = verify.run(criterion)
    OUTCOME_LINES.append(outcome.line())
    print(outcome.line())
    assert outcome.passed, outcome.line()
