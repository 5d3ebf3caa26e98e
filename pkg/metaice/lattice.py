"""
The lattice module defines rectangular systems of Gamma and Delta rows,
their admissible states and the charges carried by horizontal edges.

A system has M columns labelled right to left from 0 and a sequence of rows,
each with a row type and the index of its spectral parameter. The left
boundary is all Plus, the right boundary all Minus, and the top and bottom
boundaries are Minus exactly at the columns of a :obj:`ColumnSet`.

Charges are a statistic of a single row:

    * in a Gamma row, the charge of an edge is the number of Plus edges
      weakly to its right, modulo n
    * in a Delta row, the charge of an edge is the number of Minus edges
      weakly to its left, modulo n
"""

import logging
from itertools import combinations
from typing import (
    Any,
    Dict,
    Iterable,
    Iterator,
    List,
    Optional,
    Sequence,
    Tuple,
    Union,
)
from warnings import warn

import matplotlib.pyplot as plt

from metaice.core._base_systems import ROWS, LatticeBase
from metaice.core._common import RowType, Spin, spins_from_text, spins_to_text

logger = logging.getLogger(__name__)

PLUS, MINUS = Spin.PLUS, Spin.MINUS
SPINS = (PLUS, MINUS)

SpinVector = Tuple[Spin, ...]


class Partition(object):
    """
    A weakly decreasing sequence of non-negative integers

    Zero parts are kept, since the number of parts fixes the number of rows.

    Parameters:
        parts (:obj:`list`): the parts, largest first

    Raises:
        TypeError: if a part is not an integer
        ValueError: if a part is negative or the parts increase
    """

    def __init__(self, parts: Iterable[int]) -> None:
        parts = tuple(parts)
        for part in parts:
            if isinstance(part, bool) or not isinstance(part, int):
                raise TypeError(f"part {part!r} is not an integer")
            if part < 0:
                raise ValueError(f"part {part} must not be negative")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"{parts} is not weakly decreasing")
        self._parts = parts

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """'3,2,0' -> Partition((3, 2, 0))"""
        try:
            return cls(int(p) for p in text.split(",") if p.strip())
        except ValueError as err:
            raise ValueError(f"malformed partition {text!r}: {err}") from None

    @property
    def parts(self) -> Tuple[int, ...]:
        return self._parts

    def padded(self, k: int) -> "Partition":
        """the partition with zeros appended up to k parts"""
        if len(self._parts) > k:
            raise ValueError(f"{self._parts} has more than {k} parts")
        return Partition(self._parts + (0,) * (k - len(self._parts)))

    def __len__(self) -> int:
        return len(self._parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self._parts)

    def __getitem__(self, i: int) -> int:
        return self._parts[i]

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self._parts})"

    def __str__(self) -> str:
        return ",".join(str(p) for p in self._parts)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Partition) and self._parts == other._parts

    def __hash__(self) -> int:
        return hash(self._parts)


def partitions_in_box(max_part: int, k: int) -> Iterator[Partition]:
    """all partitions with k parts (zeros allowed) each at most max_part"""

    def rec(prefix: Tuple[int, ...], bound: int) -> Iterator[Tuple[int, ...]]:
        if len(prefix) == k:
            yield prefix
            return
        for part in range(bound, -1, -1):
            yield from rec(prefix + (part,), part)

    for parts in rec((), max_part):
        yield Partition(parts)


class ColumnSet(object):
    """
    A strictly decreasing set of column labels

    Columns given in another order are sorted with a warning.

    Raises:
        ValueError: on negative or repeated columns
    """

    def __init__(self, columns: Iterable[int]) -> None:
        cols = tuple(columns)
        for c in cols:
            if isinstance(c, bool) or not isinstance(c, int):
                raise TypeError(f"column {c!r} is not an integer")
            if c < 0:
                raise ValueError(f"column {c} must not be negative")
        if len(set(cols)) != len(cols):
            raise ValueError(f"columns {cols} repeat")
        ordered = tuple(sorted(cols, reverse=True))
        if ordered != cols:
            warn(f"columns {cols} reordered to {ordered}")
        self._columns = ordered

    @classmethod
    def parse(cls, text: str) -> "ColumnSet":
        """'4,2,1' -> ColumnSet((4, 2, 1)); an empty string is the empty set"""
        try:
            return cls(int(c) for c in text.split(",") if c.strip())
        except ValueError as err:
            raise ValueError(f"malformed column set {text!r}: {err}") from None

    @property
    def columns(self) -> Tuple[int, ...]:
        return self._columns

    @property
    def max_column(self) -> int:
        return self._columns[0] if self._columns else -1

    def __contains__(self, column: object) -> bool:
        return column in self._columns

    def __len__(self) -> int:
        return len(self._columns)

    def __iter__(self) -> Iterator[int]:
        return iter(self._columns)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self._columns})"

    def __str__(self) -> str:
        return ",".join(str(c) for c in self._columns)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ColumnSet) and self._columns == other._columns

    def __hash__(self) -> int:
        return hash(self._columns)


def columns_from_partition(lam: Partition, k: int) -> ColumnSet:
    """
    Columns lambda_i + k - i for i = 1..k

    Parameters:
        lam (:obj:`Partition`): a partition with k parts, zeros allowed
        k (:obj:`int`): number of parts

    Returns:
        :obj:`ColumnSet`
    """
    if len(lam) != k:
        raise ValueError(f"{lam} must have exactly {k} parts")
    return ColumnSet(lam[i] + k - 1 - i for i in range(k))


def column_sets(M: int, size: int) -> Iterator[ColumnSet]:
    """every set of ``size`` columns below M"""
    for cols in combinations(range(M - 1, -1, -1), size):
        yield ColumnSet(cols)


class SystemSpec(LatticeBase):
    """
    A rectangular lattice system

    Parameters:
        M (:obj:`int`): number of columns
        rows (:obj:`list`): (row type, parameter index) for each row, top
            first
        top_minus (:obj:`ColumnSet`): columns with a Minus top boundary edge
        bottom_minus (:obj:`ColumnSet`): columns with a Minus bottom boundary
            edge
        n (:obj:`int`): charge modulus
        nvars (:obj:`int`, optional): number of z variables in weights,
            defaults to one more than the largest parameter index

    Raises:
        ValueError: if a boundary column does not fit in M columns, or if
            ``|top_minus| != |bottom_minus| + len(rows)``
    """

    def __init__(
        self,
        M: int,
        rows: Sequence[Tuple[RowType, int]],
        top_minus: ColumnSet,
        bottom_minus: ColumnSet,
        n: int,
        nvars: Optional[int] = None,
    ) -> None:
        self._rows: ROWS = []
        for row in rows:
            row_type, param = row
            if not isinstance(row_type, RowType):
                raise TypeError(f"type {type(row_type)} is not of type RowType")
            if param < 0:
                raise ValueError("parameter indices must not be negative")
            self._rows.append((row_type, param))
        if not isinstance(top_minus, ColumnSet) or not isinstance(
            bottom_minus, ColumnSet
        ):
            raise TypeError("boundaries must be given as ColumnSet")
        self._top_minus = top_minus
        self._bottom_minus = bottom_minus
        default = max((p for _, p in self._rows), default=0) + 1
        self._nvars = nvars if nvars is not None else default
        if self._nvars < default:
            raise ValueError(f"need at least {default} variables")
        super().__init__(M, n)
        self.__validate_flux()

    def invalidate(self) -> None:
        super().invalidate()
        if hasattr(self, "_top_minus"):
            self.__validate_columns()

    def __validate_columns(self) -> None:
        for name, cols in (("top", self._top_minus), ("bottom", self._bottom_minus)):
            if cols.max_column >= self.M:
                raise ValueError(
                    f"{name} boundary column {cols.max_column} does not fit "
                    f"in {self.M} columns"
                )

    def __validate_flux(self) -> None:
        if len(self._top_minus) != len(self._bottom_minus) + len(self._rows):
            raise ValueError(
                f"flux violated: {len(self._top_minus)} top Minus edges, "
                f"{len(self._bottom_minus)} bottom Minus edges and "
                f"{len(self._rows)} rows; each row absorbs exactly one"
            )

    @property
    def rows(self) -> Tuple[Tuple[RowType, int], ...]:
        return tuple(self._rows)

    @property
    def num_rows(self) -> int:
        return len(self._rows)

    @property
    def top_minus(self) -> ColumnSet:
        return self._top_minus

    @property
    def bottom_minus(self) -> ColumnSet:
        return self._bottom_minus

    @property
    def nvars(self) -> int:
        return self._nvars

    def boundary_vectors(self) -> Tuple[SpinVector, SpinVector]:
        return (
            self.vector_of(self._top_minus),
            self.vector_of(self._bottom_minus),
        )

    def vector_of(self, columns: ColumnSet) -> SpinVector:
        """vertical spins in position order, Minus at the given columns"""
        return tuple(
            MINUS if self.column_of(p) in columns else PLUS for p in range(self.M)
        )

    def with_rows(self, rows: Sequence[Tuple[RowType, int]]) -> "SystemSpec":
        """the same boundary with different rows"""
        return SystemSpec(
            self.M, rows, self._top_minus, self._bottom_minus, self.n, self._nvars
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "M": self.M,
            "n": self.n,
            "rows": [[t.value, p + 1] for t, p in self._rows],
            "top_minus": list(self._top_minus),
            "bottom_minus": list(self._bottom_minus),
        }

    def __repr__(self) -> str:
        rows = ", ".join(f"{t.symbol}(z{p + 1})" for t, p in self._rows)
        return (
            f"{self.__class__.__name__}(M={self.M}, rows=[{rows}], "
            f"top={self._top_minus.columns}, "
            f"bottom={self._bottom_minus.columns}, n={self.n})"
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SystemSpec):
            return False
        return (
            self.M == other.M
            and self.n == other.n
            and self._rows == other._rows
            and self._top_minus == other._top_minus
            and self._bottom_minus == other._bottom_minus
            and self._nvars == other._nvars
        )

    def __hash__(self) -> int:
        return hash(
            (
                self.M,
                self.n,
                tuple(self._rows),
                self._top_minus,
                self._bottom_minus,
                self._nvars,
            )
        )


def build_standard_system(
    lam: Partition,
    r: int,
    row_types: Union[RowType, Sequence[RowType]],
    n: int,
    params: Optional[Sequence[int]] = None,
) -> SystemSpec:
    """
    The r-row system with top boundary given by lambda

    The grid has M = lambda_1 + r columns, Minus top edges at
    ``columns_from_partition(lam, r)`` and an all Plus bottom boundary.

    Parameters:
        lam (:obj:`Partition`): partition with r parts
        r (:obj:`int`): number of rows
        row_types: one row type for every row, or a list with one per row
        n (:obj:`int`): charge modulus
        params (:obj:`list`, optional): parameter index of each row,
            defaults to ``0, 1, ..., r - 1``

    Returns:
        :obj:`SystemSpec`
    """
    if isinstance(row_types, RowType):
        row_types = [row_types] * r
    if len(row_types) != r:
        raise ValueError(f"expected {r} row types, got {len(row_types)}")
    params = list(params) if params is not None else list(range(r))
    if len(params) != r:
        raise ValueError(f"expected {r} parameter indices, got {len(params)}")
    top = columns_from_partition(lam, r)
    M = (lam[0] if r else 0) + r
    return SystemSpec(
        M, list(zip(row_types, params)), top, ColumnSet(()), n, nvars=r
    )


ORDERS = {
    "gamma-delta": ((RowType.GAMMA, 0), (RowType.DELTA, 1)),
    "delta-gamma": ((RowType.DELTA, 1), (RowType.GAMMA, 0)),
}


def build_two_row(
    top: ColumnSet,
    bottom: ColumnSet,
    order: str,
    n: int,
    M: Optional[int] = None,
) -> SystemSpec:
    """
    A two row system with explicit boundaries

    ``'gamma-delta'`` puts a Gamma row with z1 above a Delta row with z2;
    ``'delta-gamma'`` puts a Delta row with z2 above a Gamma row with z1.

    Parameters:
        top (:obj:`ColumnSet`): Minus top boundary columns
        bottom (:obj:`ColumnSet`): Minus bottom boundary columns, two fewer
            than ``top``
        order (:obj:`str`): ``'gamma-delta'`` or ``'delta-gamma'``
        n (:obj:`int`): charge modulus
        M (:obj:`int`, optional): number of columns, defaults to one more
            than the largest boundary column

    Raises:
        ValueError: on an unknown order or a flux violation
    """
    if order not in ORDERS:
        raise ValueError(f"order must be one of {sorted(ORDERS)}, not {order!r}")
    if M is None:
        M = max(top.max_column, bottom.max_column) + 1
    return SystemSpec(M, ORDERS[order], top, bottom, n, nvars=2)


class SpinState(object):
    """
    Spins on every edge of a system

    Parameters:
        spec (:obj:`SystemSpec`): the system
        horizontals (:obj:`list`): for each row, the M + 1 horizontal spins
            left to right
        verticals (:obj:`list`): for each of the ``num_rows + 1`` levels of
            vertical edges (top boundary first), the M spins left to right

    Raises:
        ValueError: if a boundary edge disagrees with the system or a vertex
            is not one of the six admissible patterns
    """

    def __init__(
        self,
        spec: SystemSpec,
        horizontals: Sequence[Sequence[Spin]],
        verticals: Sequence[Sequence[Spin]],
    ) -> None:
        self._spec = spec
        self._horizontals = tuple(tuple(h) for h in horizontals)
        self._verticals = tuple(tuple(v) for v in verticals)
        self.__validate()

    def __validate(self) -> None:
        spec = self._spec
        if len(self._horizontals) != spec.num_rows:
            raise ValueError("one horizontal line per row is required")
        if len(self._verticals) != spec.num_rows + 1:
            raise ValueError("num_rows + 1 levels of vertical edges required")
        if any(len(h) != spec.M + 1 for h in self._horizontals):
            raise ValueError("each row has M + 1 horizontal edges")
        if any(len(v) != spec.M for v in self._verticals):
            raise ValueError("each level has M vertical edges")
        top, bottom = spec.boundary_vectors()
        if self._verticals[0] != top or self._verticals[-1] != bottom:
            raise ValueError("vertical boundary does not match the system")
        for i, h in enumerate(self._horizontals):
            if h[0] is not PLUS or h[-1] is not MINUS:
                raise ValueError(f"row {i + 1} must run from Plus to Minus")
            for p in range(spec.M):
                if _right_spin(h[p], self._verticals[i][p], self._verticals[i + 1][p]) != h[p + 1]:
                    raise ValueError(
                        f"vertex at row {i + 1}, column {spec.column_of(p)} "
                        "is not admissible"
                    )

    @property
    def spec(self) -> SystemSpec:
        return self._spec

    @property
    def horizontals(self) -> Tuple[SpinVector, ...]:
        return self._horizontals

    @property
    def verticals(self) -> Tuple[SpinVector, ...]:
        return self._verticals

    def __str__(self) -> str:
        lines = []
        for i, h in enumerate(self._horizontals):
            lines.append("  " + " ".join(s.value for s in self._verticals[i]))
            lines.append(spins_to_text(h))
        lines.append("  " + " ".join(s.value for s in self._verticals[-1]))
        return "\n".join(lines)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SpinState)
            and self._spec == other._spec
            and self._horizontals == other._horizontals
            and self._verticals == other._verticals
        )

    def __hash__(self) -> int:
        return hash((self._horizontals, self._verticals))


class ChargedState(SpinState):
    """
    An admissible spin state completed with a charge on every horizontal edge

    Build instances with :obj:`derive_charges`.
    """

    def __init__(
        self,
        spec: SystemSpec,
        horizontals: Sequence[Sequence[Spin]],
        verticals: Sequence[Sequence[Spin]],
        charges: Sequence[Sequence[int]],
    ) -> None:
        super().__init__(spec, horizontals, verticals)
        self._charges = tuple(tuple(c) for c in charges)

    @property
    def charges(self) -> Tuple[Tuple[int, ...], ...]:
        return self._charges

    def vertex(self, row: int, position: int) -> "VertexPattern":
        """the pattern of the vertex at (row, position), both from 0"""
        # deferred: boltzmann imports lattice for calibration
        from metaice.boltzmann import VertexPattern

        h = self.horizontals[row]
        c = self._charges[row]
        return VertexPattern.of(
            h[position],
            self.verticals[row][position],
            h[position + 1],
            self.verticals[row + 1][position],
            c[position],
            c[position + 1],
        )

    def __str__(self) -> str:
        out = super().__str__().splitlines()
        for i, c in enumerate(self._charges):
            out[2 * i + 1] += "   charges " + " ".join(str(x) for x in c)
        return "\n".join(out)


def _right_spin(left: Spin, top: Spin, bottom: Spin) -> Optional[Spin]:
    # ice rule: Minus edges in from top/left equal Minus edges out bottom/right
    k = (top is MINUS) + (left is MINUS) - (bottom is MINUS)
    if k == 0:
        return PLUS
    if k == 1:
        return MINUS
    return None


def run_row(
    left: Spin, tops: Sequence[Spin], bottoms: Sequence[Spin]
) -> Optional[SpinVector]:
    """
    Horizontal spins of a row segment fixed by its verticals and left spin

    Returns:
        :obj:`tuple` of ``len(tops) + 1`` spins, or None if some vertex would
        not be admissible
    """
    out = [left]
    for top, bottom in zip(tops, bottoms):
        nxt = _right_spin(out[-1], top, bottom)
        if nxt is None:
            return None
        out.append(nxt)
    return tuple(out)


def row_charges(
    row_type: RowType, horizontals: Sequence[Spin], n: int
) -> Tuple[int, ...]:
    """charges of one row by the counting rule of its type"""
    out = [0] * len(horizontals)
    count = 0
    if row_type is RowType.GAMMA:
        for j in range(len(horizontals) - 1, -1, -1):
            count += horizontals[j] is PLUS
            out[j] = count % n
    else:
        for j, s in enumerate(horizontals):
            count += s is MINUS
            out[j] = count % n
    return tuple(out)


def propagate_charges(
    row_type: RowType, horizontals: Sequence[Spin], n: int, anchor: int = 0
) -> Tuple[int, ...]:
    """
    Charges of a line segment from one known edge by the local vertex rule

    A Gamma segment is anchored at its right end and gains one for each
    Plus edge passed moving left; a Delta segment is anchored at its left end
    and gains one for each Minus edge passed moving right.
    """
    out = [0] * len(horizontals)
    if row_type is RowType.GAMMA:
        out[-1] = anchor % n
        for j in range(len(horizontals) - 2, -1, -1):
            out[j] = (out[j + 1] + (horizontals[j] is PLUS)) % n
    else:
        out[0] = anchor % n
        for j in range(1, len(horizontals)):
            out[j] = (out[j - 1] + (horizontals[j] is MINUS)) % n
    return tuple(out)


def derive_charges(state: SpinState) -> ChargedState:
    """
    Complete a spin state with the charges of its rows

    The right edge of every Gamma row and the left edge of every Delta row
    get charge 0.
    """
    spec = state.spec
    charges = [
        row_charges(row_type, h, spec.n)
        for (row_type, _), h in zip(spec.rows, state.horizontals)
    ]
    return ChargedState(spec, state.horizontals, state.verticals, charges)


def enumerate_admissible(
    spec: SystemSpec, first_bottom: Optional[SpinVector] = None
) -> Iterator[ChargedState]:
    """
    Every admissible state of a system

    States are produced by a depth first search over vertices in row major
    order, trying a Plus bottom edge before a Minus one. Only the six-vertex
    rule prunes; charge dependent zeros are left to the weights.

    Parameters:
        spec (:obj:`SystemSpec`): the system
        first_bottom (:obj:`tuple`, optional): restrict to states whose
            vertical edges below the first row are these spins

    Yields:
        :obj:`ChargedState`
    """
    top, bottom = spec.boundary_vectors()
    M, r = spec.M, spec.num_rows
    levels: List[List[Spin]] = [list(top)] + [[PLUS] * M for _ in range(r)]
    levels[r] = list(bottom)
    rows: List[List[Spin]] = [[PLUS] * (M + 1) for _ in range(r)]

    def choices(i: int, p: int) -> Sequence[Spin]:
        if i == r - 1:
            return (bottom[p],)
        if i == 0 and first_bottom is not None:
            return (first_bottom[p],)
        return SPINS

    def dfs(i: int, p: int) -> Iterator[ChargedState]:
        if i == r:
            state = SpinState(spec, rows, levels)
            yield derive_charges(state)
            return
        if p == M:
            if rows[i][M] is MINUS:
                yield from dfs(i + 1, 0)
            return
        for b in choices(i, p):
            right = _right_spin(rows[i][p], levels[i][p], b)
            if right is None:
                continue
            levels[i + 1][p] = b
            rows[i][p + 1] = right
            yield from dfs(i, p + 1)

    if r == 0:
        if top == bottom:
            yield ChargedState(spec, [], [top], [])
        return
    yield from dfs(0, 0)


def labelled_state() -> ChargedState:
    """
    The fully labelled 3 x 6 Gamma state for lambda = (3, 2, 0) with n = 2

    Its first row carries the charges 1 0 1 0 0 1 0 from left to right.
    """
    spec = build_standard_system(Partition((3, 2, 0)), 3, RowType.GAMMA, 2)
    horizontals = [
        spins_from_text("+++-++-"),
        spins_from_text("+------"),
        spins_from_text("++++---"),
    ]
    verticals = [
        spins_from_text("-+-++-"),
        spins_from_text("-++-++"),
        spins_from_text("+++-++"),
        spins_from_text("++++++"),
    ]
    return derive_charges(SpinState(spec, horizontals, verticals))


def plot_state(state: ChargedState, **kwargs: Any) -> Tuple[Any, Any]:
    """
    Draw a charged state

    Every edge is labelled with its spin and every horizontal edge with its
    charge. Columns are labelled along the top.

    Parameters:
        state (:obj:`ChargedState`): the state to draw
        title (:obj:`str`, optional): title of the axes

    Returns:
        :obj:`tuple`: (figure, axes)

    .. note:: The figure is created but not shown. Use :obj:`show` or
              :obj:`matplotlib.pyplot.show`.
    """
    kwargs.setdefault("title", repr(state.spec))
    kwargs.setdefault("spin_color", {"+": "tab:blue", "-": "tab:red"})
    kwargs.setdefault("charge_color", "tab:green")
    spec = state.spec
    M, r = spec.M, spec.num_rows
    fig, ax = plt.subplots(figsize=(1.0 + 0.9 * M, 1.0 + 0.9 * r))
    colors = kwargs["spin_color"]

    for i in range(r):
        y = r - i - 0.5
        ax.plot([-0.5, M - 0.5], [y, y], color="black", lw=0.8)
        for j, s in enumerate(state.horizontals[i]):
            x = j - 1
            ax.text(x + 0.5, y + 0.08, s.value, ha="center", color=colors[s.value])
            ax.text(
                x + 0.5,
                y - 0.25,
                str(state.charges[i][j]),
                ha="center",
                fontsize="small",
                color=kwargs["charge_color"],
            )
        ax.text(-1.1, y, f"{spec.rows[i][0].symbol}  z{spec.rows[i][1] + 1}", va="center")
    for p in range(M):
        ax.plot([p, p], [0, r], color="black", lw=0.8)
        for level, vec in enumerate(state.verticals):
            s = vec[p]
            ax.text(p + 0.08, r - level, s.value, va="center", color=colors[s.value])
        ax.text(p, r + 0.35, str(spec.column_of(p)), ha="center", fontsize="small")
    ax.set_xlim(-1.5, M + 0.5)
    ax.set_ylim(-0.5, r + 0.7)
    ax.set_axis_off()
    ax.set_title(kwargs["title"])
    return fig, ax


def show(*args: Any, **kwargs: Any) -> None:
    """display the figures returned by :obj:`plot_state`"""
    plt.show(*args, **kwargs)  # pragma: no cover
