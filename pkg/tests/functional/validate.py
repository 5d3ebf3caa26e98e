"""
Module to contain common verification code for functional tests
"""


def validate(report, context=""):
    """Assert that a verification report passed

    The assertion message names the identity, the context the caller gives
    and the first counterexample, so a failing grid points straight at the
    smallest offending case.
    """
    first = report.failures[0] if report.failures else None
    msg = f"{report.identity} failed {context}: {first}"
    assert report.passed, msg
    assert report.cases > 0, f"{report.identity} checked nothing {context}"
