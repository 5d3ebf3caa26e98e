import matplotlib
import pytest

from metaice.algebra import CoeffElem, sample_point
from metaice.core._common import RowType
from metaice.lattice import (
    ColumnSet,
    Partition,
    build_standard_system,
    build_two_row,
    labelled_state,
)

matplotlib.use("Agg")


@pytest.fixture()
def ring():
    """factory for elements of the coefficient ring with two variables"""

    def make(text, n=1, nvars=2):
        return CoeffElem.parse(text, n, nvars)

    yield make


@pytest.fixture()
def point():
    """a fixed consistent evaluation point for n = 3 and two variables"""
    yield sample_point(3, 2, seed=11)


@pytest.fixture()
def labelled():
    """the fully labelled 3 x 6 Gamma state with n = 2"""
    yield labelled_state()


@pytest.fixture()
def small_gamma():
    """lambda = (0, 0) in two Gamma rows with n = 1, the smallest system with
    more than one state"""
    yield build_standard_system(Partition((0, 0)), 2, RowType.GAMMA, 1)


@pytest.fixture()
def figure_boundary():
    """two-row boundary with top columns 4, 2, 1 and bottom column 4"""
    yield ColumnSet((4, 2, 1)), ColumnSet((4,))


@pytest.fixture()
def two_row_gd(figure_boundary):
    top, bottom = figure_boundary
    yield build_two_row(top, bottom, "gamma-delta", 2)
