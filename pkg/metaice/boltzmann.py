"""
The boltzmann module defines vertex patterns and their Boltzmann weights

There are two kinds of vertices.

    * row vertices, where a horizontal line of a Gamma or Delta row crosses a
      vertical column line. Their pattern is a :obj:`VertexPattern`.
    * tilted vertices, where two charged lines cross. Their pattern is a
      :obj:`TiltedPattern` and their weight depends on the types (X, Y) of the
      line running SW to NE (X) and the line running NW to SE (Y).

Every weight function is total: patterns that do not appear in a table have
weight zero. Charges are read modulo n.
"""

import logging
from functools import lru_cache
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from metaice.algebra import CoeffElem
from metaice.core._common import (
    CalibrationError,
    Legs,
    RowType,
    Spin,
    spins_from_text,
    spins_to_text,
)

logger = logging.getLogger(__name__)

PLUS, MINUS = Spin.PLUS, Spin.MINUS

# (left, top, right, bottom) spins of the six admissible row vertices
ROW_LABELS: Dict[str, Tuple[Spin, Spin, Spin, Spin]] = {
    "a1": (PLUS, PLUS, PLUS, PLUS),
    "a2": (MINUS, MINUS, MINUS, MINUS),
    "b1": (PLUS, MINUS, PLUS, MINUS),
    "b2": (MINUS, PLUS, MINUS, PLUS),
    "c1": (MINUS, PLUS, PLUS, MINUS),
    "c2": (PLUS, MINUS, MINUS, PLUS),
}


class VertexPattern(Legs):
    """
    Spins around a row vertex and the charges on its horizontal legs

    Parameters:
        spins (:obj:`tuple`): spins on the (top, right, bottom, left) legs
        charges (:obj:`tuple`): (left charge, right charge)

    Use :obj:`VertexPattern.of` to build a pattern from named legs.
    """

    legs = ("top", "right", "bottom", "left")
    charged_legs = ("left", "right")

    @classmethod
    def of(
        cls,
        left: Spin,
        top: Spin,
        right: Spin,
        bottom: Spin,
        left_charge: int = 0,
        right_charge: int = 0,
    ) -> "VertexPattern":
        return cls((top, right, bottom, left), (left_charge, right_charge))

    @property
    def left(self) -> Spin:
        return self.spins[3]

    @property
    def top(self) -> Spin:
        return self.spins[0]

    @property
    def right(self) -> Spin:
        return self.spins[1]

    @property
    def bottom(self) -> Spin:
        return self.spins[2]

    @property
    def left_charge(self) -> int:
        return self.charges[0]

    @property
    def right_charge(self) -> int:
        return self.charges[1]

    @property
    def label(self) -> Optional[str]:
        return classify_vertex(self)


class TiltedPattern(Legs):
    """
    Spins and charges on the four legs of a tilted vertex

    The X line passes through the SW and NE legs, the Y line through the NW
    and SE legs. Every leg is charged.

    Parameters:
        spins (:obj:`tuple`): spins on the (ne, se, sw, nw) legs
        charges (:obj:`tuple`): charges on the (ne, se, sw, nw) legs

    Use :obj:`TiltedPattern.of` to build a pattern leg by leg.
    """

    legs = ("ne", "se", "sw", "nw")
    charged_legs = ("ne", "se", "sw", "nw")

    @classmethod
    def of(
        cls,
        sw: Tuple[Spin, int],
        nw: Tuple[Spin, int],
        ne: Tuple[Spin, int],
        se: Tuple[Spin, int],
    ) -> "TiltedPattern":
        return cls((ne[0], se[0], sw[0], nw[0]), (ne[1], se[1], sw[1], nw[1]))

    @classmethod
    def from_text(cls, spins: str, charges: Sequence[int]) -> "TiltedPattern":
        """spins and charges listed in (sw, nw, ne, se) order, e.g. '+-+-'"""
        sw, nw, ne, se = spins_from_text(spins)
        return cls.of((sw, charges[0]), (nw, charges[1]), (ne, charges[2]), (se, charges[3]))

    def table_order(self) -> Tuple[str, Tuple[int, ...]]:
        """spins as text and charges, both in (sw, nw, ne, se) order"""
        names = ("sw", "nw", "ne", "se")
        return (
            spins_to_text(self.spin(leg) for leg in names),
            tuple(self.charge(leg) for leg in names),
        )


def classify_vertex(pattern: VertexPattern) -> Optional[str]:
    """label a1, a2, b1, b2, c1 or c2 of the spins, None if inadmissible"""
    key = (pattern.left, pattern.top, pattern.right, pattern.bottom)
    for label, spins in ROW_LABELS.items():
        if spins == key:
            return label
    return None


# ----------------------------------------------------------------------------
# row vertices
# ----------------------------------------------------------------------------
@lru_cache(maxsize=None)
def gamma_weight(
    p: VertexPattern, z: int, n: int, nvars: Optional[int] = None
) -> CoeffElem:
    """
    Boltzmann weight of a Gamma vertex

    A Minus horizontal leg must carry charge 0, and the left charge exceeds
    the right charge by one exactly when the left spin is Plus.

    ====  ======  ====  =====  ==========  ====
    a1    a2      b1    b2     c1          c2
    ====  ======  ====  =====  ==========  ====
    1     z       g(a)  z      (1 - v) z   1
    ====  ======  ====  =====  ==========  ====

    where a is the right charge of the b1 vertex.

    Parameters:
        p (:obj:`VertexPattern`): the vertex
        z (:obj:`int`): index of the row parameter
        n (:obj:`int`): charge modulus
        nvars (:obj:`int`, optional): number of z variables, defaults to
            ``z + 1``

    Returns:
        :obj:`CoeffElem`: the weight, zero for inadmissible patterns
    """
    r = nvars if nvars is not None else z + 1
    label = classify_vertex(p)
    cl, cr = p.left_charge % n, p.right_charge % n
    if label is None:
        return CoeffElem.zero(n, r)
    if (p.left is MINUS and cl) or (p.right is MINUS and cr):
        return CoeffElem.zero(n, r)
    if cl != (cr + (p.left is PLUS)) % n:
        return CoeffElem.zero(n, r)
    zz = CoeffElem.z(z, n, r)
    if label == "a1" or label == "c2":
        return CoeffElem.one(n, r)
    if label == "b1":
        return CoeffElem.g(cr, n, r)
    if label == "c1":
        return (1 - CoeffElem.v(n, r)) * zz
    return zz


@lru_cache(maxsize=None)
def delta_weight(
    p: VertexPattern, z: int, n: int, nvars: Optional[int] = None
) -> CoeffElem:
    """
    Boltzmann weight of a Delta vertex

    A Plus horizontal leg must carry charge 0, and the right charge exceeds
    the left charge by one exactly when the right spin is Minus.

    ====  ========  ====  =====  ==========  ====
    a1    a2        b1    b2     c1          c2
    ====  ========  ====  =====  ==========  ====
    1     g(a) z    1     z      (1 - v) z   1
    ====  ========  ====  =====  ==========  ====

    where a is the left charge of the a2 vertex.
    """
    r = nvars if nvars is not None else z + 1
    label = classify_vertex(p)
    cl, cr = p.left_charge % n, p.right_charge % n
    if label is None:
        return CoeffElem.zero(n, r)
    if (p.left is PLUS and cl) or (p.right is PLUS and cr):
        return CoeffElem.zero(n, r)
    if cr != (cl + (p.right is MINUS)) % n:
        return CoeffElem.zero(n, r)
    zz = CoeffElem.z(z, n, r)
    if label in ("a1", "b1", "c2"):
        return CoeffElem.one(n, r)
    if label == "a2":
        return CoeffElem.g(cl, n, r) * zz
    if label == "c1":
        return (1 - CoeffElem.v(n, r)) * zz
    return zz


def row_weight(
    row_type: RowType,
    p: VertexPattern,
    z: int,
    n: int,
    nvars: Optional[int] = None,
) -> CoeffElem:
    """dispatch to :obj:`gamma_weight` or :obj:`delta_weight`"""
    if row_type is RowType.GAMMA:
        return gamma_weight(p, z, n, nvars)
    return delta_weight(p, z, n, nvars)


@lru_cache(maxsize=None)
def row_completions(
    row_type: RowType,
    spins: Tuple[Spin, Spin, Spin, Spin],
    z: int,
    n: int,
    nvars: int,
    left_charge: Optional[int] = None,
    right_charge: Optional[int] = None,
) -> Tuple[Tuple[int, CoeffElem], ...]:
    """
    Charges completing a row vertex with one known horizontal charge

    Exactly one of ``left_charge`` and ``right_charge`` is given. Returns the
    (unknown charge, weight) pairs with nonzero weight.

    Parameters:
        spins (:obj:`tuple`): (left, top, right, bottom)
    """
    if (left_charge is None) == (right_charge is None):
        raise ValueError("give exactly one of left_charge and right_charge")
    left, top, right, bottom = spins
    out = []
    for c in range(n):
        if left_charge is None:
            p = VertexPattern.of(left, top, right, bottom, c, right_charge or 0)
        else:
            p = VertexPattern.of(left, top, right, bottom, left_charge, c)
        w = row_weight(row_type, p, z, n, nvars)
        if w:
            out.append((c, w))
    return tuple(out)


def vertex_catalogue(
    row_type: RowType, n: int
) -> List[Tuple[VertexPattern, str, CoeffElem]]:
    """
    Every charged row vertex with nonzero weight

    Each row type has exactly 2n + 4 of them.

    Returns:
        :obj:`list` of (pattern, label, weight) with weights in one variable
    """
    out = []
    for label, (left, top, right, bottom) in ROW_LABELS.items():
        for cl, cr in product(range(n), repeat=2):
            p = VertexPattern.of(left, top, right, bottom, cl, cr)
            w = row_weight(row_type, p, 0, n, 1)
            if w:
                out.append((p, label, w))
    return out


# ----------------------------------------------------------------------------
# tilted vertices
# ----------------------------------------------------------------------------
class _Table(object):
    """building blocks of the tilted weights in a fixed ring"""

    def __init__(self, n: int, z1: int, z2: int, nvars: int) -> None:
        self.n = n
        self.r = nvars
        self.i1 = z1
        self.i2 = z2

    def zz(self, e1: int, e2: int) -> CoeffElem:
        pows = [0] * self.r
        pows[self.i1] += e1
        pows[self.i2] += e2
        return CoeffElem.monomial(self.n, self.r, z_pows=pows)

    def v(self, power: int = 1) -> CoeffElem:
        return CoeffElem.v(self.n, self.r, power)

    def g(self, a: int) -> CoeffElem:
        return CoeffElem.g(a, self.n, self.r)

    def one(self) -> CoeffElem:
        return CoeffElem.one(self.n, self.r)

    def zero(self) -> CoeffElem:
        return CoeffElem.zero(self.n, self.r)

    def rep(self, a: int) -> int:
        """representative of a in [1, n]"""
        return (a - 1) % self.n + 1


def _gamma_gamma(t: _Table, s: str, c: Tuple[int, ...]) -> CoeffElem:
    n = t.n
    sw, nw, ne, se = c
    if s == "++++":
        if sw == nw == ne == se:
            return t.zz(0, n) - t.v() * t.zz(n, 0)
        if sw == ne and nw == se:
            return t.g(nw - sw) * (t.zz(n, 0) - t.zz(0, n))
        if sw == se and nw == ne:
            k = (nw - sw) % n
            return (1 - t.v()) * t.zz(k, n - k)
    elif s == "----":
        if c == (0, 0, 0, 0):
            return t.zz(n, 0) - t.v() * t.zz(0, n)
    elif s == "+-+-":
        if sw == ne and nw == se == 0:
            return t.v() * (t.zz(n, 0) - t.zz(0, n))
    elif s == "-+-+":
        if sw == ne == 0 and nw == se:
            return t.zz(n, 0) - t.zz(0, n)
    elif s == "-++-":
        if sw == se == 0 and nw == ne:
            a = t.rep(nw)
            return (1 - t.v()) * t.zz(a, n - a)
    elif s == "+--+":
        if nw == ne == 0 and sw == se:
            a = t.rep(sw)
            return (1 - t.v()) * t.zz(n - a, a)
    return t.zero()


def _delta_delta(t: _Table, s: str, c: Tuple[int, ...]) -> CoeffElem:
    n = t.n
    sw, nw, ne, se = c
    if s == "++++":
        if c == (0, 0, 0, 0):
            return t.zz(n, 0) - t.v() * t.zz(0, n)
    elif s == "----":
        if sw == nw == ne == se:
            return t.zz(0, n) - t.v() * t.zz(n, 0)
        if sw == se and nw == ne:
            k = (sw - nw) % n
            return (1 - t.v()) * t.zz(n - k, k)
        if sw == ne and nw == se:
            return t.g(sw - nw) * (t.zz(n, 0) - t.zz(0, n))
    elif s == "+-+-":
        if sw == ne == 0 and nw == se:
            return t.v() * (t.zz(n, 0) - t.zz(0, n))
    elif s == "-++-":
        if nw == ne == 0 and sw == se:
            a = t.rep(sw)
            return (1 - t.v()) * t.zz(n - a + 1, a - 1)
    elif s == "-+-+":
        if sw == ne and nw == se == 0:
            return t.zz(n, 0) - t.zz(0, n)
    elif s == "+--+":
        if sw == se == 0 and nw == ne:
            a = t.rep(nw)
            return (1 - t.v()) * t.zz(a - 1, n - a + 1)
    return t.zero()


def _gamma_delta(t: _Table, s: str, c: Tuple[int, ...]) -> CoeffElem:
    n = t.n
    a, b, cc, d = c
    if s == "++++":
        if a == cc and b == d == 0:
            return t.zz(n, 0) - t.v() * t.zz(0, n)
    elif s == "----":
        if a == cc == 0 and b == d:
            return t.zz(n, 0) - t.v() * t.zz(0, n)
    elif s == "+-+-":
        if a == cc and b == d:
            if (a + b - 1) % n == 0:
                return t.v(2) * t.zz(0, n) - t.zz(n, 0)
            return t.g(a + b - 1) * (t.zz(n, 0) - t.v() * t.zz(0, n))
        if (a + b - 1) % n == 0 and (cc + d - 1) % n == 0:
            e = (a - cc) % n
            mono = t.zz(n - e, e)
            # branch order as tabulated; the two degenerate cases exclude
            # each other once a != c
            if a * d == 0 or (a * b * cc * d != 0 and a > cc):
                return (t.v() - 1) * mono
            if b * cc == 0 or (a * b * cc * d != 0 and a < cc):
                return t.v() * (t.v() - 1) * mono
    elif s == "-+-+":
        if c == (0, 0, 0, 0):
            return t.zz(n, 0) - t.zz(0, n)
    elif s == "-++-":
        if a == b == 0 and (cc + d - 1) % n == 0:
            ra, rb = t.rep(cc), t.rep(d)
            return (1 - t.v()) * t.zz(ra, rb - 1)
    elif s == "+--+":
        if cc == d == 0 and (a + b - 1) % n == 0:
            ra, rb = t.rep(b), t.rep(a)
            return (1 - t.v()) * t.zz(ra - 1, rb)
    return t.zero()


def _delta_gamma(t: _Table, s: str, c: Tuple[int, ...]) -> CoeffElem:
    n = t.n
    a, b, cc, d = c
    head = t.zz(0, n) - t.v(n) * t.zz(n, 0)
    if s == "++++":
        if a == cc == 0 and b == d:
            return head
    elif s == "----":
        if a == cc and b == d == 0:
            return head
    elif s == "+-+-":
        if c == (0, 0, 0, 0):
            return t.zz(0, n) - t.v(n + 1) * t.zz(n, 0)
    elif s == "-+-+":
        if a == cc and b == d:
            if (a + b - 1) % n == 0:
                return t.v(n - 1) * t.zz(n, 0) - t.zz(0, n)
            # division by g(a + b - 1) written as g(n - (a + b - 1)) / v
            return head * t.g(n - (a + b - 1)) * t.v(-1)
        if (a + b - 1) % n == 0 and (cc + d - 1) % n == 0:
            e = (cc - a) % n
            return (1 - t.v()) * t.v(e - 1) * t.zz(e, n - e)
    elif s == "-++-":
        if cc == d == 0 and (a + b - 1) % n == 0:
            ra, rb = t.rep(b), t.rep(a)
            return (1 - t.v()) * t.v(ra - 1) * t.zz(ra, rb - 1)
    elif s == "+--+":
        if a == b == 0 and (cc + d - 1) % n == 0:
            ra, rb = t.rep(cc), t.rep(d)
            return (1 - t.v()) * t.v(ra - 1) * t.zz(ra - 1, rb)
    return t.zero()


_TABLES = {
    (RowType.GAMMA, RowType.GAMMA): _gamma_gamma,
    (RowType.DELTA, RowType.DELTA): _delta_delta,
    (RowType.GAMMA, RowType.DELTA): _gamma_delta,
    (RowType.DELTA, RowType.GAMMA): _delta_gamma,
}


@lru_cache(maxsize=None)
def tilted_weight(
    X: RowType,
    Y: RowType,
    p: TiltedPattern,
    n: int,
    z1: int = 0,
    z2: int = 1,
    nvars: Optional[int] = None,
) -> CoeffElem:
    """
    Boltzmann weight of a tilted vertex

    Parameters:
        X (:obj:`RowType`): type of the line through SW and NE
        Y (:obj:`RowType`): type of the line through NW and SE
        p (:obj:`TiltedPattern`): the vertex
        n (:obj:`int`): charge modulus
        z1 (:obj:`int`): variable index of the X line parameter
        z2 (:obj:`int`): variable index of the Y line parameter
        nvars (:obj:`int`, optional): number of z variables, defaults to
            ``max(z1, z2) + 1``

    Returns:
        :obj:`CoeffElem`: the weight, zero for patterns not in the table
    """
    if (X, Y) not in _TABLES:
        raise TypeError(f"({X!r}, {Y!r}) is not a pair of row types")
    r = nvars if nvars is not None else max(z1, z2) + 1
    spins, charges = p.table_order()
    reduced = tuple(c % n for c in charges)
    return _TABLES[(X, Y)](_Table(n, z1, z2, r), spins, reduced)


def tilted_catalogue(
    X: RowType, Y: RowType, n: int
) -> List[Tuple[TiltedPattern, CoeffElem]]:
    """every tilted pattern with nonzero weight, charges in 0..n-1"""
    out = []
    for spins in product((PLUS, MINUS), repeat=4):
        text = spins_to_text(spins)
        for charges in product(range(n), repeat=4):
            p = TiltedPattern.from_text(text, charges)
            w = tilted_weight(X, Y, p, n)
            if w:
                out.append((p, w))
    return out


# ----------------------------------------------------------------------------
# calibration
# ----------------------------------------------------------------------------
def calibrate_conventions(charge_slots: str = "left-right") -> Dict[str, object]:
    """
    Check the slot conventions against a fully labelled state and the
    smallest Yang-Baxter equation

    The labelled state is the 3 x 6 Gamma state for lambda = (3, 2, 0) with
    n = 2 from :obj:`metaice.lattice.labelled_state`. Every vertex must be
    admissible with nonzero weight and the first row must carry the charges
    1 0 1 0 0 1 0. Then the Gamma/Gamma Yang-Baxter equation is checked at
    n = 1.

    Parameters:
        charge_slots (:obj:`str`): ``'left-right'`` reads the derived charges
            into the (left, right) slots, ``'right-left'`` swaps them

    Returns:
        :obj:`dict`: a summary of what was checked

    Raises:
        CalibrationError: naming the first vertex or case that fails
    """
    # imported here to avoid a circular import
    from metaice.lattice import labelled_state
    from metaice.verify import verify_ybe

    if charge_slots not in ("left-right", "right-left"):
        raise ValueError(f"unknown charge slot order {charge_slots!r}")
    state = labelled_state()
    spec = state.spec
    expected = (1, 0, 1, 0, 0, 1, 0)
    if state.charges[0] != expected:
        raise CalibrationError(
            f"row 1 charges {state.charges[0]} differ from {expected}"
        )
    checked = 0
    for row in range(spec.num_rows):
        row_type, z = spec.rows[row]
        for pos in range(spec.M):
            p = state.vertex(row, pos)
            if charge_slots == "right-left":
                p = VertexPattern(p.spins, p.charges[::-1])
            if not row_weight(row_type, p, z, spec.n, spec.nvars):
                raise CalibrationError(
                    f"vertex at row {row + 1}, column {spec.column_of(pos)} "
                    f"({classify_vertex(p)}, charges {p.charges}) has zero "
                    "weight"
                )
            checked += 1
    report = verify_ybe(RowType.GAMMA, RowType.GAMMA, 1)
    if not report.passed:
        raise CalibrationError(
            f"Yang-Baxter check failed at {report.failures[0]['boundary']}"
        )
    logger.info("conventions calibrated on %d vertices", checked)
    return {
        "row_slots": "spins (top, right, bottom, left), charges (left, right)",
        "tilted_slots": "X line sw-ne, Y line nw-se",
        "vertices_checked": checked,
        "ybe_cases": report.cases,
    }
