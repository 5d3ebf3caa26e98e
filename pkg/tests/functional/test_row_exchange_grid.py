"""
Functional tests for exchanging a Gamma row with a Delta row: directly on
every small two-row boundary, through the column-by-column train of the
tilted vertex, and as commuting transfer matrices
"""

import pytest
from settings import MAX_COLUMNS, MAX_TOP, MODULI
from validate import validate

from metaice.verify import (
    train_trace,
    two_row_boundaries,
    verify_transfer_commutation,
    verify_two_row,
)


@pytest.mark.parametrize("n", MODULI)
def test_two_row_grid(n):
    for M in range(2, MAX_COLUMNS + 1):
        for top, bottom in two_row_boundaries(M, MAX_TOP):
            report = verify_two_row(top, bottom, n, M)
            validate(report, f"for top={top}, bottom={bottom}, M={M}, n={n}")


@pytest.mark.parametrize("n", MODULI)
def test_train_grid(n):
    for M in range(2, 5):
        for top, bottom in two_row_boundaries(M, MAX_TOP):
            report = train_trace(top, bottom, n, M)
            validate(report, f"for top={top}, bottom={bottom}, M={M}, n={n}")
            assert report.details["first_change"] is None


def test_figure_boundary():
    """top columns 4, 2, 1 and bottom column 4, the boundary of lambda =
    (2, 1, 1) over mu = (4)
    """
    from metaice.lattice import ColumnSet

    for n in MODULI:
        top, bottom = ColumnSet((4, 2, 1)), ColumnSet((4,))
        validate(verify_two_row(top, bottom, n), f"for n={n}")
        validate(train_trace(top, bottom, n), f"for n={n}")


@pytest.mark.parametrize("n", MODULI)
@pytest.mark.parametrize("M", [1, 2, 3, 4])
def test_transfer_commutation(M, n):
    validate(verify_transfer_commutation(M, n), f"for M={M}, n={n}")
