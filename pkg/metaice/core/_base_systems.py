"""
Module to define the grid geometry shared by all lattice systems, and the
base system class that rectangular systems are derived from
"""

from abc import ABC, abstractmethod
from typing import List, Optional, Sequence, Tuple

from metaice.core._common import RowType

ROWS = List[Tuple[RowType, int]]


class Grid(object):
    """
    Geometry of a rectangular grid with M columns and a number of rows

    Columns are labelled right to left from 0, so the leftmost column is
    M - 1. Positions count left to right from 0 and are what the engine
    iterates over. Each row has M vertices and M + 1 horizontal edges.
    """

    def __init__(self, M: int, num_rows: int) -> None:
        if M < 1:
            raise ValueError("a grid needs at least one column")
        if num_rows < 0:
            raise ValueError("row count must not be negative")
        self._M = M
        self._num_rows = num_rows

    @property
    def M(self) -> int:
        return self._M

    @property
    def num_rows(self) -> int:
        return self._num_rows

    @property
    def columns(self) -> Tuple[int, ...]:
        """
        Column labels in position order

        Returns:
            :obj:`tuple`: Read-only. ``(M - 1, ..., 1, 0)``
        """
        return tuple(range(self._M - 1, -1, -1))

    def column_of(self, position: int) -> int:
        return self._M - 1 - position

    def position_of(self, column: int) -> int:
        if not 0 <= column < self._M:
            raise ValueError(f"column {column} outside 0..{self._M - 1}")
        return self._M - 1 - column


class LatticeBase(ABC):
    """base object for lattice systems: a charge modulus and a grid width"""

    def __init__(self, M: int, n: int) -> None:
        self._grid: Optional[Grid] = None
        self.M = M
        self.n = n

    @property
    def M(self) -> int:
        return self._M

    @M.setter
    def M(self, M: int) -> None:
        if isinstance(M, bool) or not isinstance(M, int):
            raise TypeError("column count must be an integer")
        if M < 1:
            raise ValueError("column count must be positive!")
        self._M = M
        self.invalidate()

    @property
    def n(self) -> int:
        return self._n

    @n.setter
    def n(self, n: int) -> None:
        if isinstance(n, bool) or not isinstance(n, int):
            raise TypeError("charge modulus must be an integer")
        if n < 1:
            raise ValueError("charge modulus must be positive!")
        self._n = n
        self.invalidate()

    @property
    @abstractmethod
    def num_rows(self) -> int:
        raise NotImplementedError("must be overloaded!")

    @property
    def grid(self) -> Grid:
        """grid geometry, rebuilt after any change of dimensions"""
        if self._grid is None:
            self._grid = Grid(self.M, self.num_rows)
        return self._grid

    def invalidate(self) -> None:
        """drop cached geometry so it is rebuilt on next use"""
        self._grid = None

    def column_of(self, position: int) -> int:
        return self.grid.column_of(position)

    def position_of(self, column: int) -> int:
        return self.grid.position_of(column)

    @abstractmethod
    def boundary_vectors(self) -> Tuple[Sequence[object], Sequence[object]]:
        """top and bottom vertical boundary spins in position order"""
        raise NotImplementedError("must be overloaded!")
