"""The ten acceptance criteria, each at its own tolerance and time limit.

Every test prints one PASS/FAIL line; run ``pytest -s tests/test_acceptance.py``
or ``minitwistor suite all`` for the summary alone.
"""

import pytest

from minitwistor.acceptance import CRITERIA, run_criterion


@pytest.mark.parametrize("number", [c[0] for c in CRITERIA], ids=[f"criterion_{c[0]:02d}_{c[1].replace(' ', '_')}" for c in CRITERIA])
def test_criterion(number, capsys):
    result = run_criterion(number, seed=0)
    with capsys.disabled():
        print("\n" + result.line())
    assert result.passed, result.detail
    assert result.elapsed <= result.limit
