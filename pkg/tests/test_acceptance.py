"""Acceptance suite: one test per verification criterion, exact tolerances.

Each test prints its pass/fail line; `quatdesign verify-paper` runs the same
checks from the command line.  Expected wall time for the whole module is a
few minutes (shell enumeration to O_(2I,8) and the degree-24 theta probes
dominate).
"""

import pytest

from quatdesign.budget import get_budget
from quatdesign.verify import ALL_CHECKS

BUDGET = get_budget("desk")

_ORDER = [cid for cid, _ in ALL_CHECKS]


@pytest.mark.parametrize("check_id", _ORDER)
def test_acceptance(check_id):
    fn = dict(ALL_CHECKS)[check_id]
    result = fn(BUDGET)
    print()
    print(f"criterion {1 + _ORDER.index(check_id):>2}  {result.line()}")
    if result.blocking:
        assert result.passed, f"{check_id}: {result.details}"
