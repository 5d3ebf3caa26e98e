"""
The engine module computes partition functions of lattice systems, either
by enumerating admissible states or by multiplying row transfer matrices.

Both methods are exact and must agree on every system; the test-suite
checks this on a grid of small systems.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from metaice.algebra import CoeffElem, EvalPoint
from metaice.boltzmann import VertexPattern, row_weight
from metaice.core._common import RowType, Spin, parallel_map
from metaice.lattice import (
    ChargedState,
    Partition,
    SpinVector,
    SystemSpec,
    build_standard_system,
    enumerate_admissible,
    row_charges,
    run_row,
)

logger = logging.getLogger(__name__)

PLUS, MINUS = Spin.PLUS, Spin.MINUS


class PartitionValue(NamedTuple):
    """
    The partition function of a system

    Attributes:
        value (:obj:`CoeffElem`): the exact sum of state weights
        state_count (:obj:`int`): number of spin admissible states, including
            those whose weight vanishes because of charges
        method (:obj:`str`): ``'enumerate'`` or ``'transfer'``
    """

    value: CoeffElem
    state_count: int
    method: str


def state_weight(spec: SystemSpec, state: ChargedState) -> CoeffElem:
    """
    Boltzmann weight of a state, the product of its vertex weights

    Parameters:
        spec (:obj:`SystemSpec`): the system the state belongs to
        state (:obj:`ChargedState`): an admissible charged state

    Returns:
        :obj:`CoeffElem`
    """
    weight = CoeffElem.one(spec.n, spec.nvars)
    for row, (row_type, param) in enumerate(spec.rows):
        for pos in range(spec.M):
            w = row_weight(row_type, state.vertex(row, pos), param, spec.n, spec.nvars)
            if not w:
                return w
            weight = weight * w
    return weight


def _first_bottoms(spec: SystemSpec) -> List[SpinVector]:
    # vertical spins below the first row carry one Minus fewer than the top
    size = len(spec.top_minus) - 1
    out = []
    for minus in combinations(range(spec.M), size):
        out.append(tuple(MINUS if p in minus else PLUS for p in range(spec.M)))
    return out


def _partial_sum(
    args: Tuple[SystemSpec, Optional[SpinVector]]
) -> Tuple[CoeffElem, int]:
    spec, first_bottom = args
    total = CoeffElem.zero(spec.n, spec.nvars)
    count = 0
    for state in enumerate_admissible(spec, first_bottom):
        total = total + state_weight(spec, state)
        count += 1
    return total, count


def partition_function(
    spec: SystemSpec, workers: Optional[int] = None
) -> PartitionValue:
    """
    Partition function by direct enumeration of admissible states

    With more than one worker, states are split by the vertical spins below
    the first row and the branches are summed in a fixed order.

    Parameters:
        spec (:obj:`SystemSpec`): the system
        workers (:obj:`int`, optional): worker processes, see
            :obj:`metaice.core._common.resolve_workers`

    Returns:
        :obj:`PartitionValue`
    """
    if spec.num_rows >= 2 and len(spec.top_minus) >= 1:
        branches: List[Tuple[SystemSpec, Optional[SpinVector]]] = [
            (spec, b) for b in _first_bottoms(spec)
        ]
    else:
        branches = [(spec, None)]
    results = parallel_map(_partial_sum, branches, workers)
    total = CoeffElem.zero(spec.n, spec.nvars)
    count = 0
    for value, c in results:
        total = total + value
        count += c
    logger.debug("%r: %d states by enumeration", spec, count)
    return PartitionValue(total, count, "enumerate")


def partition_at_point(spec: SystemSpec, point: EvalPoint) -> Fraction:
    """
    Sum of evaluated state weights in exact rationals

    This never forms the symbolic partition function, so it is an independent
    check of :obj:`CoeffElem.evaluate`.
    """
    total = Fraction(0)
    for state in enumerate_admissible(spec):
        value = Fraction(1)
        for row, (row_type, param) in enumerate(spec.rows):
            for pos in range(spec.M):
                w = row_weight(
                    row_type, state.vertex(row, pos), param, spec.n, spec.nvars
                )
                value *= w.evaluate(point)
        total += value
    return total


class TransferMatrix(object):
    """
    Row transfer matrix indexed by top and bottom vertical spin vectors

    The entry at (top, bottom) is the summed weight of the row with that
    vertical boundary, a Plus left edge and a Minus right edge. Charges are
    derived within the row, so the index needs no charge data.

    Parameters:
        row_type (:obj:`RowType`): type of the row
        param (:obj:`int`): index of the row parameter
        M (:obj:`int`): number of columns
        n (:obj:`int`): charge modulus
        nvars (:obj:`int`): number of z variables in the entries
        entries (:obj:`dict`): nonzero entries keyed by (top, bottom)
        admissible (:obj:`set`): every (top, bottom) admitting a spin
            configuration, including those of weight zero
    """

    def __init__(
        self,
        row_type: RowType,
        param: int,
        M: int,
        n: int,
        nvars: int,
        entries: Dict[Tuple[SpinVector, SpinVector], CoeffElem],
        admissible: Sequence[Tuple[SpinVector, SpinVector]],
    ) -> None:
        self._row_type = row_type
        self._param = param
        self._M = M
        self._n = n
        self._nvars = nvars
        self._entries = dict(entries)
        self._admissible = frozenset(admissible)
        self._by_top: Dict[SpinVector, List[Tuple[SpinVector, CoeffElem]]] = {}
        for (top, bottom), w in self._entries.items():
            self._by_top.setdefault(top, []).append((bottom, w))

    @property
    def row_type(self) -> RowType:
        return self._row_type

    @property
    def param(self) -> int:
        return self._param

    @property
    def M(self) -> int:
        return self._M

    @property
    def n(self) -> int:
        return self._n

    @property
    def nvars(self) -> int:
        return self._nvars

    @property
    def entries(self) -> Dict[Tuple[SpinVector, SpinVector], CoeffElem]:
        return dict(self._entries)

    def entry(self, top: SpinVector, bottom: SpinVector) -> CoeffElem:
        return self._entries.get(
            (tuple(top), tuple(bottom)), CoeffElem.zero(self._n, self._nvars)
        )

    def is_admissible(self, top: SpinVector, bottom: SpinVector) -> bool:
        return (tuple(top), tuple(bottom)) in self._admissible

    def row(self, top: SpinVector) -> List[Tuple[SpinVector, CoeffElem]]:
        """nonzero (bottom, weight) pairs below a top vector"""
        return list(self._by_top.get(tuple(top), []))

    def to_array(self, basis: Sequence[SpinVector]) -> np.ndarray:
        """dense object matrix with rows and columns ordered by basis"""
        index = {vec: i for i, vec in enumerate(basis)}
        out = np.empty((len(basis), len(basis)), dtype=object)
        out[:, :] = CoeffElem.zero(self._n, self._nvars)
        for (top, bottom), w in self._entries.items():
            out[index[top], index[bottom]] = w
        return out

    def __repr__(self) -> str:
        return (
            f"{self.__class__.__name__}({self._row_type.symbol}, "
            f"z{self._param + 1}, M={self._M}, n={self._n}, "
            f"nonzero={len(self._entries)})"
        )


def spin_vectors(M: int) -> List[SpinVector]:
    """all 2^M vertical spin vectors, Plus before Minus at each position"""
    return [tuple(v) for v in product((PLUS, MINUS), repeat=M)]


@lru_cache(maxsize=None)
def row_transfer_matrix(
    row_type: RowType,
    param: int,
    M: int,
    n: int,
    nvars: Optional[int] = None,
) -> TransferMatrix:
    """
    The transfer matrix of a single row

    Parameters:
        row_type (:obj:`RowType`): Gamma or Delta
        param (:obj:`int`): index of the row parameter
        M (:obj:`int`): number of columns, at least 1
        n (:obj:`int`): charge modulus
        nvars (:obj:`int`, optional): defaults to ``param + 1``

    Returns:
        :obj:`TransferMatrix`
    """
    if M < 1:
        raise ValueError("a row needs at least one column")
    r = nvars if nvars is not None else param + 1
    entries: Dict[Tuple[SpinVector, SpinVector], CoeffElem] = {}
    admissible = []
    for top in spin_vectors(M):
        for bottom in spin_vectors(M):
            h = run_row(PLUS, top, bottom)
            if h is None or h[-1] is not MINUS:
                continue
            admissible.append((top, bottom))
            charges = row_charges(row_type, h, n)
            weight = CoeffElem.one(n, r)
            for p in range(M):
                pattern = VertexPattern.of(
                    h[p], top[p], h[p + 1], bottom[p], charges[p], charges[p + 1]
                )
                w = row_weight(row_type, pattern, param, n, r)
                if not w:
                    weight = w
                    break
                weight = weight * w
            if weight:
                entries[(top, bottom)] = weight
    logger.debug(
        "transfer matrix %s(z%d) M=%d n=%d: %d nonzero entries",
        row_type.symbol,
        param + 1,
        M,
        n,
        len(entries),
    )
    return TransferMatrix(row_type, param, M, n, r, entries, admissible)


def partition_via_transfer(spec: SystemSpec) -> PartitionValue:
    """
    Partition function as a product of row transfer matrices

    A vector indexed by vertical spin vectors starts at the top boundary and
    is pushed down through each row; the result is its component at the
    bottom boundary. The state count is propagated the same way over the
    admissible entries.
    """
    top, bottom = spec.boundary_vectors()
    vector: Dict[SpinVector, CoeffElem] = {top: CoeffElem.one(spec.n, spec.nvars)}
    counts: Dict[SpinVector, int] = {top: 1}
    for row_type, param in spec.rows:
        T = row_transfer_matrix(row_type, param, spec.M, spec.n, spec.nvars)
        nxt: Dict[SpinVector, CoeffElem] = {}
        for t, value in vector.items():
            for b, w in T.row(t):
                nxt[b] = nxt.get(b, CoeffElem.zero(spec.n, spec.nvars)) + value * w
        vector = {k: v for k, v in nxt.items() if v}
        next_counts: Dict[SpinVector, int] = {}
        for t, c in counts.items():
            for b in spin_vectors(spec.M):
                if T.is_admissible(t, b):
                    next_counts[b] = next_counts.get(b, 0) + c
        counts = next_counts
    value = vector.get(bottom, CoeffElem.zero(spec.n, spec.nvars))
    return PartitionValue(value, counts.get(bottom, 0), "transfer")


def bottom_row_swap(
    lam: Partition, r: int, n: int, row: Optional[int] = None
) -> PartitionValue:
    """
    Partition function of the standard Gamma system with one row made Delta

    Parameters:
        lam (:obj:`Partition`): partition with r parts
        r (:obj:`int`): number of rows
        n (:obj:`int`): charge modulus
        row (:obj:`int`, optional): index of the row to change, from 0 at
            the top; defaults to the bottom row

    Returns:
        :obj:`PartitionValue`
    """
    row = r - 1 if row is None else row
    if not 0 <= row < r:
        raise ValueError(f"row {row} outside 0..{r - 1}")
    types = [RowType.DELTA if i == row else RowType.GAMMA for i in range(r)]
    return partition_function(build_standard_system(lam, r, types, n))


def iter_states_with_weights(
    spec: SystemSpec,
) -> Iterator[Tuple[ChargedState, CoeffElem]]:
    """every admissible state together with its weight"""
    for state in enumerate_admissible(spec):
        yield state, state_weight(spec, state)
