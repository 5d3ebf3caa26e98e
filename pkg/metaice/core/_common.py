"""
Base module that contains base classes and helpers shared by other modules
"""

import logging
import os
from abc import ABC
from concurrent.futures import ProcessPoolExecutor
from enum import Enum
from typing import Callable, Iterable, List, Optional, Sequence, Tuple, TypeVar

logger = logging.getLogger(__name__)

WORKERS_ENV = "METAICE_WORKERS"

T = TypeVar("T")
R = TypeVar("R")


class MetaIceError(Exception):
    """Base class for errors raised by metaice"""


class CalibrationError(MetaIceError):
    """The weight conventions failed a calibration check"""


class SingularPointError(MetaIceError):
    """A matrix to be inverted is singular at the chosen evaluation point"""


class Spin(Enum):
    PLUS = "+"
    MINUS = "-"

    @classmethod
    def from_char(cls, char: str) -> "Spin":
        try:
            return cls(char)
        except ValueError:
            raise ValueError(f"spin must be '+' or '-', not {char!r}") from None

    def flip(self) -> "Spin":
        return Spin.MINUS if self is Spin.PLUS else Spin.PLUS

    def __str__(self) -> str:
        return self.value


class RowType(Enum):
    GAMMA = "gamma"
    DELTA = "delta"

    @classmethod
    def from_name(cls, name: str) -> "RowType":
        key = name.strip().lower()
        aliases = {"g": "gamma", "d": "delta", "γ": "gamma", "δ": "delta"}
        try:
            return cls(aliases.get(key, key))
        except ValueError:
            raise ValueError(f"unknown row type {name!r}") from None

    @property
    def symbol(self) -> str:
        return "Γ" if self is RowType.GAMMA else "Δ"

    def __str__(self) -> str:
        return self.value


def spins_from_text(text: str) -> Tuple[Spin, ...]:
    """'+-+-' -> (PLUS, MINUS, PLUS, MINUS)"""
    return tuple(Spin.from_char(c) for c in text)


def spins_to_text(spins: Iterable[Spin]) -> str:
    return "".join(s.value for s in spins)


class Legs(ABC):
    """Base class for all vertex patterns

    A pattern is a spin on each leg of a vertex together with a charge on
    the charged legs. Subclasses name their legs in ``legs`` and their charged
    legs in ``charged_legs``. Patterns are immutable and hashable so they can
    key weight caches.

    Charges are stored as given; the weight functions reduce them modulo n.
    """

    legs: Tuple[str, ...] = ()
    charged_legs: Tuple[str, ...] = ()

    def __init__(self, spins: Sequence[Spin], charges: Sequence[int]) -> None:
        spins = tuple(spins)
        charges = tuple(charges)
        if len(spins) != len(self.legs):
            raise ValueError(
                f"{self.__class__.__name__} needs {len(self.legs)} spins"
            )
        for s in spins:
            if not isinstance(s, Spin):
                raise TypeError(f"type {type(s)} is not of type Spin")
        if len(charges) != len(self.charged_legs):
            raise ValueError(
                f"{self.__class__.__name__} needs "
                f"{len(self.charged_legs)} charges"
            )
        for c in charges:
            if isinstance(c, bool) or not isinstance(c, int):
                raise TypeError(f"charge {c!r} must be an integer")
        self._spins: Tuple[Spin, ...] = spins
        self._charges: Tuple[int, ...] = charges

    @property
    def spins(self) -> Tuple[Spin, ...]:
        return self._spins

    @property
    def charges(self) -> Tuple[int, ...]:
        return self._charges

    def spin(self, leg: str) -> Spin:
        return self._spins[self.legs.index(leg)]

    def charge(self, leg: str) -> int:
        return self._charges[self.charged_legs.index(leg)]

    def reduced(self, n: int) -> "Legs":
        """the same pattern with charges reduced modulo n"""
        return self.__class__(self._spins, tuple(c % n for c in self._charges))

    def __repr__(self) -> str:
        return (
            f"{self.__class__.__name__}(spins='{spins_to_text(self._spins)}', "
            f"charges={self._charges})"
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, self.__class__):
            return False
        return self._spins == other._spins and self._charges == other._charges

    def __hash__(self) -> int:
        return hash((self.__class__.__name__, self._spins, self._charges))


def resolve_workers(workers: Optional[int] = None) -> int:
    """worker count from the argument, else the environment, else 1"""
    if workers is None:
        raw = os.environ.get(WORKERS_ENV, "1")
        try:
            workers = int(raw)
        except ValueError:
            raise ValueError(f"{WORKERS_ENV}={raw!r} is not an integer") from None
    if workers < 1:
        raise ValueError("worker count must be at least 1")
    return workers


def parallel_map(
    func: Callable[[T], R], items: Sequence[T], workers: Optional[int] = None
) -> List[R]:
    """
    Apply func to every item, in a process pool when more than one worker

    Results come back in the order of ``items`` regardless of scheduling.
    ``func`` must be a picklable module-level callable when workers > 1.
    """
    workers = resolve_workers(workers)
    if workers == 1 or len(items) < 2:
        return [func(item) for item in items]
    logger.debug("fanning %d items out over %d workers", len(items), workers)
    chunksize = max(1, len(items) // (4 * workers))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items, chunksize=chunksize))
