"""Acceptance criteria 1-9.

Each criterion prints one PASS/FAIL line (visible even under capture).
Run directly with ``python3 tests/test_acceptance.py`` for just the summary.
"""

import sys

import pytest

from qpartition.verify import CRITERIA, run_criterion


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    result = run_criterion(number)
    with capsys.disabled():
        print("\n" + result.line())
    assert result.passed, result.line()


if __name__ == "__main__":
    results = [run_criterion(n) for n in sorted(CRITERIA)]
    for r in results:
        print(r.line())
    sys.exit(0 if all(r.passed for r in results) else 1)
