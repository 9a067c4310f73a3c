"""The thirteen acceptance criteria, one test each.

Each test prints a single ``[PASS]``/``[FAIL]`` line (visible with ``-s`` or
in ``-v`` runs) and fails when its criterion fails.  Randomized criteria use
the seed from ``GWA_SEED`` (default 20240).
"""

import pytest

from qgwa import acceptance


def test_all_criteria_registered():
    assert [c.number for c in acceptance.CRITERIA] == list(range(1, 14))


@pytest.mark.parametrize("criterion", acceptance.CRITERIA, ids=lambda c: f"c{c.number:02d}")
def test_criterion(criterion, capsys):
    result = acceptance.run_one(criterion)
    with capsys.disabled():
        print("\n" + result.line())
    assert result.ok, result.detail
