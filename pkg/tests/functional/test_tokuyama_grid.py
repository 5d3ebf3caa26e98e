"""
Functional tests for the n = 1 factorization of the Gamma partition function
into a monomial, a deformed Weyl denominator and a Schur polynomial
"""

import pytest
from settings import MAX_PART
from validate import validate

from metaice.lattice import Partition
from metaice.verify import tokuyama_crosscheck, tokuyama_grid


@pytest.mark.parametrize("r,monomial", [(1, "1"), (2, "z1"), (3, "z1^2*z2")])
def test_tokuyama_grid(r, monomial):
    report = tokuyama_grid(r, MAX_PART)
    validate(report, f"for r={r}")
    assert report.details["monomials"] == [monomial]


def test_positive_roots_do_not_factor():
    for lam in [(0, 0), (1, 0), (2, 1)]:
        report = tokuyama_crosscheck(Partition(lam), 2, root_sign="positive")
        assert not report.passed, f"positive roots factored for {lam}"
