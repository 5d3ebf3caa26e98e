"""
The verify module checks the identities of the lattice models by brute
force in exact arithmetic.

    * the Yang-Baxter equation for every pair of row types
    * commutation of a Gamma row with a Delta row, on whole two-row systems
      and entrywise on transfer matrices
    * equality of the Gamma and Delta systems with reversed parameters,
      directly and as a chain of row exchanges
    * the step by step train argument behind the row commutation
    * at n = 1, the factorization into a deformation factor and a Schur
      polynomial

Mismatches never raise. They are recorded in a :obj:`VerificationReport`
and the report fails.
"""

import logging
import time
from itertools import product
from typing import Any, Dict, Iterator, List, NamedTuple, Optional, Tuple

import numpy as np
import sympy

from metaice.algebra import CoeffElem
from metaice.boltzmann import (
    TiltedPattern,
    VertexPattern,
    row_completions,
    row_weight,
    tilted_weight,
)
from metaice.core._common import RowType, Spin, parallel_map, spins_to_text
from metaice.engine import (
    partition_function,
    partition_via_transfer,
    row_transfer_matrix,
    spin_vectors,
)
from metaice.lattice import (
    ColumnSet,
    Partition,
    SpinVector,
    SystemSpec,
    build_standard_system,
    build_two_row,
    column_sets,
    partitions_in_box,
    propagate_charges,
    run_row,
)

logger = logging.getLogger(__name__)

PLUS, MINUS = Spin.PLUS, Spin.MINUS
SPINS = (PLUS, MINUS)
GAMMA, DELTA = RowType.GAMMA, RowType.DELTA


class VerificationReport(object):
    """
    Outcome of one identity check

    Parameters:
        identity (:obj:`str`): name of the identity
        cases (:obj:`int`): number of cases checked
        failures (:obj:`list`): counterexamples, one dict each
        elapsed (:obj:`float`): seconds spent
        details (:obj:`dict`, optional): identity specific data, e.g.
            computed values or the measured monomial

    The report passes exactly when there are no failures.
    """

    def __init__(
        self,
        identity: str,
        cases: int = 0,
        failures: Optional[List[Dict[str, Any]]] = None,
        elapsed: float = 0.0,
        details: Optional[Dict[str, Any]] = None,
    ) -> None:
        self.identity = identity
        self.cases = cases
        self.failures: List[Dict[str, Any]] = list(failures or [])
        self.elapsed = elapsed
        self.details: Dict[str, Any] = dict(details or {})

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self, include_timing: bool = False) -> Dict[str, Any]:
        out = {
            "identity": self.identity,
            "cases": self.cases,
            "failures": self.failures,
            "passed": self.passed,
            "details": self.details,
        }
        if include_timing:
            out["elapsed"] = round(self.elapsed, 3)
        return out

    def __str__(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        lines = [
            f"{self.identity}: {verdict}",
            f"Cases: {self.cases}",
            f"Failures: {len(self.failures)}",
        ]
        for failure in self.failures[:5]:
            lines.append(f"  {failure}")
        for key in sorted(self.details):
            lines.append(f"{key}: {self.details[key]}")
        return "\n".join(lines)

    def __repr__(self) -> str:
        return (
            f"{self.__class__.__name__}(identity={self.identity!r}, "
            f"cases={self.cases}, failures={len(self.failures)})"
        )


# ----------------------------------------------------------------------------
# Yang-Baxter equation
# ----------------------------------------------------------------------------
class YbeBoundary(NamedTuple):
    """
    Boundary of the two three-vertex systems in the Yang-Baxter equation

    The left side has the tilted vertex to the left of a column holding an X
    vertex over a Y vertex; the right side has it to the right of a Y vertex
    over an X vertex. The left legs enter the system, the right legs leave
    it, and the column carries the top and bottom legs.
    """

    left_top: Spin
    left_bottom: Spin
    top: Spin
    bottom: Spin
    right_top: Spin
    right_bottom: Spin
    left_top_charge: int
    left_bottom_charge: int
    right_top_charge: int
    right_bottom_charge: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            k: (v.value if isinstance(v, Spin) else v)
            for k, v in self._asdict().items()
        }


def ybe_sides(
    X: RowType, Y: RowType, bd: YbeBoundary, n: int
) -> Tuple[CoeffElem, CoeffElem]:
    """
    Partition functions of the two sides of the Yang-Baxter equation

    The X line carries z1 and the Y line carries z2. Internal charges are
    fixed by the row vertices from the known boundary charge of each line.

    Returns:
        :obj:`tuple`: (left side, right side)
    """
    lhs = CoeffElem.zero(n, 2)
    for m, p, q in product(SPINS, repeat=3):
        xs = row_completions(
            X, (p, bd.top, bd.right_top, m), 0, n, 2, right_charge=bd.right_top_charge
        )
        if not xs:
            continue
        ys = row_completions(
            Y,
            (q, m, bd.right_bottom, bd.bottom),
            1,
            n,
            2,
            right_charge=bd.right_bottom_charge,
        )
        for (cp, wx), (cq, wy) in product(xs, ys):
            pattern = TiltedPattern.of(
                sw=(bd.left_bottom, bd.left_bottom_charge),
                nw=(bd.left_top, bd.left_top_charge),
                ne=(p, cp),
                se=(q, cq),
            )
            w = tilted_weight(X, Y, pattern, n, 0, 1, 2)
            if w:
                lhs = lhs + w * wx * wy

    rhs = CoeffElem.zero(n, 2)
    for m, p, q in product(SPINS, repeat=3):
        ys = row_completions(
            Y, (bd.left_top, bd.top, p, m), 1, n, 2, left_charge=bd.left_top_charge
        )
        if not ys:
            continue
        xs = row_completions(
            X,
            (bd.left_bottom, m, q, bd.bottom),
            0,
            n,
            2,
            left_charge=bd.left_bottom_charge,
        )
        for (cp, wy), (cq, wx) in product(ys, xs):
            pattern = TiltedPattern.of(
                sw=(q, cq),
                nw=(p, cp),
                ne=(bd.right_top, bd.right_top_charge),
                se=(bd.right_bottom, bd.right_bottom_charge),
            )
            w = tilted_weight(X, Y, pattern, n, 0, 1, 2)
            if w:
                rhs = rhs + w * wy * wx
    return lhs, rhs


def _ybe_batch(
    args: Tuple[RowType, RowType, int, Tuple[Spin, ...]]
) -> Tuple[int, List[Dict[str, Any]]]:
    X, Y, n, spins = args
    failures = []
    cases = 0
    for charges in product(range(n), repeat=4):
        bd = YbeBoundary(*spins, *charges)
        lhs, rhs = ybe_sides(X, Y, bd, n)
        cases += 1
        if lhs != rhs:
            failures.append(
                {"boundary": bd.to_dict(), "lhs": str(lhs), "rhs": str(rhs)}
            )
    return cases, failures


def verify_ybe(
    X: RowType, Y: RowType, n: int, workers: Optional[int] = None
) -> VerificationReport:
    """
    Check the Yang-Baxter equation for one pair of row types

    Every one of the 64 spin boundaries and n^4 charge boundaries is
    checked as an exact identity in z1, z2, v and the g symbols.

    Parameters:
        X (:obj:`RowType`): type of the upper row on the left side
        Y (:obj:`RowType`): type of the lower row on the left side
        n (:obj:`int`): charge modulus
        workers (:obj:`int`, optional): worker processes, one spin boundary
            per task

    Returns:
        :obj:`VerificationReport`
    """
    start = time.perf_counter()
    batches = [(X, Y, n, spins) for spins in product(SPINS, repeat=6)]
    results = parallel_map(_ybe_batch, batches, workers)
    report = VerificationReport(
        f"ybe-{X.value}-{Y.value}", details={"n": n, "x": X.value, "y": Y.value}
    )
    for cases, failures in results:
        report.cases += cases
        report.failures.extend(failures)
    report.elapsed = time.perf_counter() - start
    logger.info(
        "%s n=%d: %d cases, %d failures",
        report.identity,
        n,
        report.cases,
        len(report.failures),
    )
    return report


# ----------------------------------------------------------------------------
# row commutation
# ----------------------------------------------------------------------------
def verify_two_row(
    top: ColumnSet,
    bottom: ColumnSet,
    n: int,
    M: Optional[int] = None,
    workers: Optional[int] = None,
) -> VerificationReport:
    """
    Check that exchanging a Gamma row with a Delta row keeps the partition
    function

    The Gamma row keeps z1 and the Delta row keeps z2 on both sides.
    """
    start = time.perf_counter()
    gd = build_two_row(top, bottom, "gamma-delta", n, M)
    dg = build_two_row(top, bottom, "delta-gamma", n, M)
    z_gd = partition_function(gd, workers).value
    z_dg = partition_function(dg, workers).value
    report = VerificationReport(
        "two-row",
        cases=1,
        details={
            "spec": gd.to_dict(),
            "gamma_delta": str(z_gd),
            "delta_gamma": str(z_dg),
        },
    )
    if z_gd != z_dg:
        report.failures.append(
            {
                "top": list(top),
                "bottom": list(bottom),
                "gamma_delta": str(z_gd),
                "delta_gamma": str(z_dg),
            }
        )
    report.elapsed = time.perf_counter() - start
    return report


def two_row_boundaries(
    M: int, max_top: int
) -> Iterator[Tuple[ColumnSet, ColumnSet]]:
    """every flux valid two-row boundary in M columns with at most max_top
    Minus top edges"""
    for size in range(2, min(max_top, M) + 1):
        for top in column_sets(M, size):
            for bottom in column_sets(M, size - 2):
                yield top, bottom


def verify_transfer_commutation(M: int, n: int) -> VerificationReport:
    """
    Check T_gamma(z1) T_delta(z2) = T_delta(z2) T_gamma(z1) entrywise

    Both products are taken over all vertical spin vectors of length M.
    """
    start = time.perf_counter()
    basis = spin_vectors(M)
    tg = row_transfer_matrix(GAMMA, 0, M, n, 2).to_array(basis)
    td = row_transfer_matrix(DELTA, 1, M, n, 2).to_array(basis)
    left = np.dot(tg, td)
    right = np.dot(td, tg)
    report = VerificationReport(
        "transfer-commutation", cases=len(basis) ** 2, details={"M": M, "n": n}
    )
    for i, j in product(range(len(basis)), repeat=2):
        if left[i, j] != right[i, j]:
            report.failures.append(
                {
                    "top": spins_to_text(basis[i]),
                    "bottom": spins_to_text(basis[j]),
                    "gamma_delta": str(left[i, j]),
                    "delta_gamma": str(right[i, j]),
                }
            )
    report.elapsed = time.perf_counter() - start
    return report


# ----------------------------------------------------------------------------
# duality
# ----------------------------------------------------------------------------
def dual_system(lam: Partition, r: int, n: int) -> SystemSpec:
    """the all Delta system whose row i carries z_{r-i}"""
    return build_standard_system(lam, r, DELTA, n, params=range(r - 1, -1, -1))


def verify_duality(
    lam: Partition, r: int, n: int, workers: Optional[int] = None
) -> VerificationReport:
    """
    Check Z(Gamma system, z) = Z(Delta system, reversed z)

    Parameters:
        lam (:obj:`Partition`): partition with r parts
        r (:obj:`int`): number of rows
        n (:obj:`int`): charge modulus
    """
    start = time.perf_counter()
    z_gamma = partition_function(
        build_standard_system(lam, r, GAMMA, n), workers
    ).value
    z_delta = partition_function(dual_system(lam, r, n), workers).value
    report = VerificationReport(
        "duality",
        cases=1,
        details={
            "lambda": str(lam),
            "r": r,
            "n": n,
            "gamma": str(z_gamma),
            "delta": str(z_delta),
        },
    )
    if z_gamma != z_delta:
        report.failures.append({"gamma": str(z_gamma), "delta": str(z_delta)})
    report.elapsed = time.perf_counter() - start
    return report


def duality_chain_systems(lam: Partition, r: int, n: int) -> List[SystemSpec]:
    """
    The chain of systems from the Gamma system to its Delta dual

    At each stage the bottom Gamma row becomes a Delta row, which is then
    exchanged upward with each Gamma row above it until it sits below the
    Delta rows already raised.
    """
    base = build_standard_system(lam, r, GAMMA, n)
    rows = list(base.rows)
    chain = [base]
    for raised in range(r):
        row_type, param = rows[-1]
        rows[-1] = (DELTA, param)
        chain.append(base.with_rows(rows))
        for pos in range(r - 1, raised, -1):
            rows[pos - 1], rows[pos] = rows[pos], rows[pos - 1]
            chain.append(base.with_rows(rows))
    return chain


def duality_chain(lam: Partition, r: int, n: int) -> VerificationReport:
    """
    Check every step of the chain from the Gamma system to its dual

    Each system in the chain must have the partition function of the first.
    The report names the first step that changes it.
    """
    start = time.perf_counter()
    chain = duality_chain_systems(lam, r, n)
    values = [partition_via_transfer(spec).value for spec in chain]
    report = VerificationReport(
        "duality-chain",
        cases=len(chain),
        details={
            "lambda": str(lam),
            "r": r,
            "n": n,
            "steps": [
                "".join(t.symbol for t, _ in spec.rows)
                + " "
                + ",".join(f"z{p + 1}" for _, p in spec.rows)
                for spec in chain
            ],
        },
    )
    for step, value in enumerate(values[1:], start=1):
        if value != values[0]:
            report.failures.append(
                {"step": step, "expected": str(values[0]), "found": str(value)}
            )
            break
    report.elapsed = time.perf_counter() - start
    return report


# ----------------------------------------------------------------------------
# train argument
# ----------------------------------------------------------------------------
def _segment_weight(
    row_type: RowType,
    param: int,
    h: SpinVector,
    tops: SpinVector,
    bottoms: SpinVector,
    charges: Tuple[int, ...],
    n: int,
) -> CoeffElem:
    weight = CoeffElem.one(n, 2)
    for j in range(len(tops)):
        p = VertexPattern.of(
            h[j], tops[j], h[j + 1], bottoms[j], charges[j], charges[j + 1]
        )
        w = row_weight(row_type, p, param, n, 2)
        if not w:
            return w
        weight = weight * w
    return weight


def augmented_partition(spec: SystemSpec, k: int) -> CoeffElem:
    """
    Partition function of a two-row system with a tilted Delta/Gamma vertex
    inserted before position k

    Left of the vertex the rows are Gamma(z1) over Delta(z2); right of it
    they are Delta(z2) over Gamma(z1). The Delta line enters at the bottom
    left with charge 0 and leaves through the tilted vertex into the top
    right; the Gamma line enters at the top left and leaves at the bottom
    right with charge 0. The charges where each line leaves the tilted
    vertex's upper legs are summed over.
    """
    n, M = spec.n, spec.M
    top, bottom = spec.boundary_vectors()
    total = CoeffElem.zero(n, 2)
    for mid in spin_vectors(M):
        h_tl = run_row(PLUS, top[:k], mid[:k])
        h_bl = run_row(PLUS, mid[:k], bottom[:k])
        if h_tl is None or h_bl is None:
            continue
        ch_bl = propagate_charges(DELTA, h_bl, n, 0)
        w_bl = _segment_weight(DELTA, 1, h_bl, mid[:k], bottom[:k], ch_bl, n)
        if not w_bl:
            continue
        for s_ne, s_se in product(SPINS, repeat=2):
            h_tr = run_row(s_ne, top[k:], mid[k:])
            h_br = run_row(s_se, mid[k:], bottom[k:])
            if h_tr is None or h_br is None:
                continue
            if h_tr[-1] is not MINUS or h_br[-1] is not MINUS:
                continue
            ch_br = propagate_charges(GAMMA, h_br, n, 0)
            w_br = _segment_weight(GAMMA, 0, h_br, mid[k:], bottom[k:], ch_br, n)
            if not w_br:
                continue
            for c_nw, c_ne in product(range(n), repeat=2):
                pattern = TiltedPattern.of(
                    sw=(h_bl[-1], ch_bl[-1]),
                    nw=(h_tl[-1], c_nw),
                    ne=(h_tr[0], c_ne),
                    se=(h_br[0], ch_br[0]),
                )
                w_r = tilted_weight(DELTA, GAMMA, pattern, n, 1, 0, 2)
                if not w_r:
                    continue
                ch_tl = propagate_charges(GAMMA, h_tl, n, c_nw)
                ch_tr = propagate_charges(DELTA, h_tr, n, c_ne)
                w_tl = _segment_weight(GAMMA, 0, h_tl, top[:k], mid[:k], ch_tl, n)
                w_tr = _segment_weight(DELTA, 1, h_tr, top[k:], mid[k:], ch_tr, n)
                total = total + w_tl * w_bl * w_r * w_tr * w_br
    return total


TRAIN_FACTOR_NOTE = (
    "the Delta line carries z2 and the Gamma line z1, so the tilted vertex "
    "at either end weighs z1^n - v^n*z2^n"
)


def train_factor(n: int) -> CoeffElem:
    """z1^n - v^n z2^n, the weight of the tilted vertex at either end"""
    return CoeffElem.z(0, n, 2, n) - CoeffElem.v(n, 2, n) * CoeffElem.z(1, n, 2, n)


def train_trace(
    top: ColumnSet, bottom: ColumnSet, n: int, M: Optional[int] = None
) -> VerificationReport:
    """
    Follow the tilted vertex across a two-row system column by column

    The augmented partition function is computed with the tilted vertex at
    every position from the right edge to the left edge. At the right edge
    it must equal the end factor times Z(Gamma over Delta), at the left edge
    the factor times Z(Delta over Gamma), and in between it must not change.
    Since the factor is a nonzero element of an integral domain, it cancels
    and the two-row partition functions agree.

    Returns:
        :obj:`VerificationReport`: ``details['positions']`` lists the value
        at every position; a failure names the first position where the
        value changes
    """
    start = time.perf_counter()
    gd = build_two_row(top, bottom, "gamma-delta", n, M)
    dg = build_two_row(top, bottom, "delta-gamma", n, M)
    factor = train_factor(n)
    values = {k: augmented_partition(gd, k) for k in range(gd.M, -1, -1)}
    z_gd = partition_function(gd).value
    z_dg = partition_function(dg).value
    report = VerificationReport(
        "train",
        cases=len(values) + 2,
        details={
            "spec": gd.to_dict(),
            "factor": str(factor),
            "factor_note": TRAIN_FACTOR_NOTE,
            "positions": [
                {"position": k, "value": str(values[k])}
                for k in range(gd.M, -1, -1)
            ],
            "first_change": None,
            "gamma_delta": str(z_gd),
            "delta_gamma": str(z_dg),
        },
    )
    if values[gd.M] != factor * z_gd:
        report.failures.append(
            {
                "step": "right end",
                "expected": str(factor * z_gd),
                "found": str(values[gd.M]),
            }
        )
    for k in range(gd.M - 1, -1, -1):
        if values[k] != values[k + 1]:
            report.details["first_change"] = k
            report.failures.append(
                {
                    "step": "exchange",
                    "position": k,
                    "column": gd.column_of(k),
                    "before": str(values[k + 1]),
                    "after": str(values[k]),
                }
            )
            break
    if values[0] != factor * z_dg:
        report.failures.append(
            {
                "step": "left end",
                "expected": str(factor * z_dg),
                "found": str(values[0]),
            }
        )
    report.details["rows_commute"] = z_gd == z_dg
    report.elapsed = time.perf_counter() - start
    return report


# ----------------------------------------------------------------------------
# Schur polynomials and the n = 1 factorization
# ----------------------------------------------------------------------------
def _z_symbols(r: int) -> Tuple[sympy.Symbol, ...]:
    return tuple(sympy.symbols(f"z1:{r + 1}"))


def schur_polynomial(lam: Partition, r: int, n: int = 1) -> CoeffElem:
    """
    Schur polynomial as a ratio of alternants

    Parameters:
        lam (:obj:`Partition`): at most r parts
        r (:obj:`int`): number of variables
        n (:obj:`int`): modulus of the ring the result is placed in

    Returns:
        :obj:`CoeffElem`: free of v and g

    Raises:
        ArithmeticError: if the alternants do not divide exactly
    """
    parts = lam.padded(r).parts
    zs = _z_symbols(r)
    num = sympy.Matrix(r, r, lambda i, j: zs[i] ** (parts[j] + r - 1 - j)).det()
    den = sympy.Matrix(r, r, lambda i, j: zs[i] ** (r - 1 - j)).det()
    quotient, remainder = sympy.div(sympy.expand(num), sympy.expand(den), *zs)
    if remainder != 0:
        raise ArithmeticError(f"alternant for {lam} does not divide exactly")
    return CoeffElem.from_sympy(quotient, n, r)


def semistandard_tableaux(lam: Partition, r: int) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    """semistandard fillings of shape lam with entries 1..r, row by row"""
    shape = [p for p in lam.parts if p]
    cells = [(i, j) for i, length in enumerate(shape) for j in range(length)]
    filling: Dict[Tuple[int, int], int] = {}

    def rec(k: int) -> Iterator[Tuple[Tuple[int, ...], ...]]:
        if k == len(cells):
            yield tuple(
                tuple(filling[(i, j)] for j in range(length))
                for i, length in enumerate(shape)
            )
            return
        i, j = cells[k]
        low = 1
        if j > 0:
            low = max(low, filling[(i, j - 1)])
        if i > 0:
            low = max(low, filling[(i - 1, j)] + 1)
        for value in range(low, r + 1):
            filling[(i, j)] = value
            yield from rec(k + 1)
        filling.pop((i, j), None)

    yield from rec(0)


def schur_from_tableaux(lam: Partition, r: int, n: int = 1) -> CoeffElem:
    """Schur polynomial as a sum of tableau monomials"""
    total = CoeffElem.zero(n, r)
    for tableau in semistandard_tableaux(lam, r):
        pows = [0] * r
        for row in tableau:
            for entry in row:
                pows[entry - 1] += 1
        total = total + CoeffElem.monomial(n, r, z_pows=pows)
    return total


ROOT_SIGNS = ("negative", "positive")

FACTOR_CONVENTIONS = {
    "negative": "product over i < j of (1 - v*zj/zi), one factor per negative root",
    "positive": "product over i < j of (1 - v*zi/zj), one factor per positive root",
}


def deformation_factor(r: int, root_sign: str = "negative") -> sympy.Expr:
    """
    Product over i < j of (1 - v z_j / z_i), or of (1 - v z_i / z_j) with
    ``root_sign='positive'``
    """
    if root_sign not in ROOT_SIGNS:
        raise ValueError(f"root_sign must be one of {ROOT_SIGNS}, not {root_sign!r}")
    zs = _z_symbols(r)
    v = sympy.Symbol("v")
    out = sympy.Integer(1)
    for i in range(r):
        for j in range(i + 1, r):
            if root_sign == "negative":
                out *= 1 - v * zs[j] / zs[i]
            else:
                out *= 1 - v * zs[i] / zs[j]
    return out


def _monomial_ratio(expr: sympy.Expr, r: int) -> Optional[sympy.Expr]:
    gens = list(_z_symbols(r)) + [sympy.Symbol("v")]
    num, den = sympy.fraction(sympy.cancel(expr))
    if not sympy.Poly(num, *gens).is_monomial:
        return None
    if not sympy.Poly(den, *gens).is_monomial:
        return None
    return num / den


def tokuyama_crosscheck(
    lam: Partition, r: int, root_sign: str = "negative"
) -> VerificationReport:
    """
    Factor the n = 1 Gamma partition function

    Checks that Z divided by the deformation factor and the Schur polynomial
    is a single Laurent monomial, and that at v = 0 the quotient of Z by that
    monomial is the Schur polynomial.

    Returns:
        :obj:`VerificationReport`: ``details['monomial']`` holds the measured
        monomial when it exists
    """
    start = time.perf_counter()
    spec = build_standard_system(lam, r, GAMMA, 1)
    z = partition_function(spec).value
    schur = schur_polynomial(lam, r)
    ratio = sympy.cancel(z.to_sympy() / (deformation_factor(r, root_sign) * schur.to_sympy()))
    monomial = _monomial_ratio(ratio, r)
    report = VerificationReport(
        "tokuyama",
        cases=2,
        details={
            "lambda": str(lam),
            "r": r,
            "root_sign": root_sign,
            "factor_convention": FACTOR_CONVENTIONS[root_sign],
            "partition_function": str(z),
            "schur": str(schur),
            "monomial": None,
        },
    )
    if monomial is None:
        report.failures.append({"check": "monomial ratio", "ratio": str(ratio)})
    else:
        m = CoeffElem.from_sympy(monomial, 1, r)
        report.details["monomial"] = str(m)
        if z.at_v_zero() != m.at_v_zero() * schur:
            report.failures.append(
                {
                    "check": "v = 0",
                    "expected": str(m.at_v_zero() * schur),
                    "found": str(z.at_v_zero()),
                }
            )
    report.elapsed = time.perf_counter() - start
    return report


def tokuyama_grid(
    r: int, max_part: int, root_sign: str = "negative"
) -> VerificationReport:
    """
    Run :obj:`tokuyama_crosscheck` for every partition in a box

    Also checks each Schur polynomial against its tableau expansion and that
    the measured monomial is the same for every partition.
    """
    start = time.perf_counter()
    report = VerificationReport(
        "tokuyama-grid",
        details={"r": r, "max_part": max_part, "root_sign": root_sign},
    )
    monomials = set()
    for lam in partitions_in_box(max_part, r):
        single = tokuyama_crosscheck(lam, r, root_sign)
        report.cases += single.cases + 1
        for failure in single.failures:
            report.failures.append(dict(failure, **{"lambda": str(lam)}))
        if single.details["monomial"] is not None:
            monomials.add(single.details["monomial"])
        if schur_polynomial(lam, r) != schur_from_tableaux(lam, r):
            report.failures.append({"check": "tableaux", "lambda": str(lam)})
    if len(monomials) > 1:
        report.failures.append({"check": "constant monomial", "found": sorted(monomials)})
    report.details["monomials"] = sorted(monomials)
    report.elapsed = time.perf_counter() - start
    return report
