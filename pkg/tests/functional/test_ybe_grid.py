"""
Functional tests for the local Yang-Baxter equation of every pair of row types
"""

import pytest
from settings import YBE_MODULI
from validate import validate

from metaice.core._common import RowType
from metaice.verify import verify_ybe

GAMMA, DELTA = RowType.GAMMA, RowType.DELTA


@pytest.mark.parametrize("n", YBE_MODULI)
@pytest.mark.parametrize(
    "X,Y", [(GAMMA, GAMMA), (DELTA, DELTA), (GAMMA, DELTA), (DELTA, GAMMA)]
)
def test_ybe(X, Y, n):
    report = verify_ybe(X, Y, n)
    validate(report, f"for n={n}")
    assert report.cases == 64 * n ** 4, "every spin and charge boundary is a case"
