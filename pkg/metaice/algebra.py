"""
The algebra module implements exact arithmetic for Boltzmann weights and
partition functions.

Every weight lives in the ring

.. math::
    \\mathbb{Q}[v^{\\pm 1}][z_1^{\\pm 1}, \\ldots, z_r^{\\pm 1}]

extended by formal Gauss sum symbols :math:`g(1), \\ldots, g(n-1)` subject to
:math:`g(a) g(n-a) = v`, with :math:`g(0)` identified with :math:`-v`.
Elements are kept in a canonical form so that equality of elements is
equality of their term sets.

There are three public types.

    * :obj:`CoeffElem`, an exact element of the ring
    * :obj:`EvalPoint`, a consistent substitution of nonzero rationals
    * :obj:`GMonomial`, the exponent vector of a product of g symbols

"""

import re
from fractions import Fraction
from functools import lru_cache
from typing import (
    Dict,
    Iterator,
    List,
    Mapping,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
    Union,
)

import numpy as np
import sympy

# exponent of g(a) is stored at index a - 1
GMonomial = Tuple[int, ...]
Scalar = Union[int, Fraction]
_Key = Tuple[Tuple[int, ...], int, GMonomial]


class Term(NamedTuple):
    coeff: Fraction
    v_pow: int
    z_pows: Tuple[int, ...]
    gmono: GMonomial


def normalize_g(raw: Mapping[int, int], n: int) -> Tuple[int, GMonomial]:
    """
    Reduce a product of g symbols to normal form

    Each pair g(a)g(n-a) is replaced by v. When n is even, pairs of g(n/2)
    are replaced by v as well.

    Parameters:
        raw (:obj:`dict`): map from residue a in 1..n-1 to a non-negative
            exponent
        n (:obj:`int`): the charge modulus

    Returns:
        :obj:`tuple`: (extra power of v, normal form exponent vector)

    Raises:
        ValueError: if an index is outside 1..n-1 or an exponent is negative
    """
    exps = [0] * (n - 1)
    for a, e in raw.items():
        if not 1 <= a <= n - 1:
            raise ValueError(f"g index {a} outside 1..{n - 1}")
        if e < 0:
            raise ValueError(f"g exponent {e} must be non-negative")
        exps[a - 1] += e
    return _reduce(tuple(exps), n)


@lru_cache(maxsize=None)
def _reduce(exps: GMonomial, n: int) -> Tuple[int, GMonomial]:
    out = list(exps)
    extra = 0
    for a in range(1, n // 2 + 1):
        b = n - a
        if a < b:
            k = min(out[a - 1], out[b - 1])
            out[a - 1] -= k
            out[b - 1] -= k
        else:
            k = out[a - 1] // 2
            out[a - 1] -= 2 * k
        extra += k
    return extra, tuple(out)


@lru_cache(maxsize=None)
def _gmul(g1: GMonomial, g2: GMonomial, n: int) -> Tuple[int, GMonomial]:
    return _reduce(tuple(x + y for x, y in zip(g1, g2)), n)


def _as_fraction(value: object) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
        raise TypeError(f"{value!r} is not an exact rational")
    return Fraction(value)


class CoeffElem(object):
    """An exact element of the coefficient ring

    Instances are immutable. Arithmetic with plain integers and
    :obj:`fractions.Fraction` promotes the scalar into the ring; arithmetic
    between elements of different rings raises a :obj:`ValueError`.

    Parameters:
        n (:obj:`int`): charge modulus, at least 1
        nvars (:obj:`int`): number of z variables, at least 1
        terms (:obj:`dict`, optional): map from (z_pows, v_pow, gmono) to a
            rational coefficient. The g part must already be in normal form.
    """

    __slots__ = ("_n", "_nvars", "_terms", "_hash")

    def __init__(
        self,
        n: int,
        nvars: int,
        terms: Optional[Mapping[_Key, Scalar]] = None,
    ) -> None:
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"modulus must be a positive integer, not {n!r}")
        if not isinstance(nvars, int) or nvars < 1:
            raise ValueError(
                f"variable count must be a positive integer, not {nvars!r}"
            )
        self._n = n
        self._nvars = nvars
        self._hash: Optional[int] = None
        self._terms: Dict[_Key, Fraction] = {}
        for key, coeff in (terms or {}).items():
            z_pows, v_pow, gmono = key
            if len(z_pows) != nvars or len(gmono) != n - 1:
                raise ValueError(f"term key {key} does not fit the ring")
            if _reduce(tuple(gmono), n)[0]:
                raise ValueError(f"g monomial {gmono} is not in normal form")
            c = _as_fraction(coeff)
            if c:
                self._terms[(tuple(z_pows), int(v_pow), tuple(gmono))] = c

    @classmethod
    def _raw(cls, n: int, nvars: int, terms: Dict[_Key, Fraction]) -> "CoeffElem":
        # skips validation; callers guarantee normal form and nonzero coeffs
        obj = cls.__new__(cls)
        obj._n = n
        obj._nvars = nvars
        obj._hash = None
        obj._terms = terms
        return obj

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------
    @classmethod
    def zero(cls, n: int, nvars: int) -> "CoeffElem":
        return cls(n, nvars)

    @classmethod
    def const(cls, value: Scalar, n: int, nvars: int) -> "CoeffElem":
        return cls.monomial(n, nvars, coeff=value)

    @classmethod
    def one(cls, n: int, nvars: int) -> "CoeffElem":
        return cls.const(1, n, nvars)

    @classmethod
    def monomial(
        cls,
        n: int,
        nvars: int,
        coeff: Scalar = 1,
        v_pow: int = 0,
        z_pows: Optional[Sequence[int]] = None,
        g: Optional[Mapping[int, int]] = None,
    ) -> "CoeffElem":
        """
        Build coeff * v^v_pow * z^z_pows * prod g(a)^e

        The g part may be any product of g symbols with residues taken
        mod n; g(0) factors contribute -v each.
        """
        z = tuple(z_pows) if z_pows is not None else (0,) * nvars
        if len(z) != nvars:
            raise ValueError(f"expected {nvars} z exponents, got {len(z)}")
        c = _as_fraction(coeff)
        raw: Dict[int, int] = {}
        for a, e in (g or {}).items():
            a %= n
            if a == 0:
                c *= (-1) ** e
                v_pow += e
            else:
                raw[a] = raw.get(a, 0) + e
        extra, gmono = normalize_g(raw, n)
        return cls(n, nvars, {(z, v_pow + extra, gmono): c})

    @classmethod
    def z(cls, index: int, n: int, nvars: int, power: int = 1) -> "CoeffElem":
        """the variable z_{index + 1} raised to power"""
        if not 0 <= index < nvars:
            raise ValueError(f"variable index {index} outside 0..{nvars - 1}")
        pows = [0] * nvars
        pows[index] = power
        return cls.monomial(n, nvars, z_pows=pows)

    @classmethod
    def v(cls, n: int, nvars: int, power: int = 1) -> "CoeffElem":
        return cls.monomial(n, nvars, v_pow=power)

    @classmethod
    def g(cls, a: int, n: int, nvars: int) -> "CoeffElem":
        """the Gauss sum symbol g(a mod n), with g(0) = -v"""
        return cls.monomial(n, nvars, g={a: 1})

    # ------------------------------------------------------------------
    # read-only properties
    # ------------------------------------------------------------------
    @property
    def n(self) -> int:
        return self._n

    @property
    def nvars(self) -> int:
        return self._nvars

    @property
    def terms(self) -> Tuple[Term, ...]:
        """
        Terms in canonical order

        The order is lexicographic by z exponents, then by v exponent, then
        by g exponents.

        Returns:
            :obj:`tuple` of :obj:`Term`
        """
        return tuple(
            Term(c, v, z, g)
            for (z, v, g), c in sorted(self._terms.items(), key=lambda t: t[0])
        )

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def has_g(self) -> bool:
        return any(any(g) for (_, _, g) in self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    # ------------------------------------------------------------------
    # ring operations
    # ------------------------------------------------------------------
    def _coerce(self, other: object) -> "CoeffElem":
        if isinstance(other, CoeffElem):
            if other._n != self._n or other._nvars != self._nvars:
                raise ValueError(
                    f"ring mismatch: (n={self._n}, r={self._nvars}) and "
                    f"(n={other._n}, r={other._nvars})"
                )
            return other
        return CoeffElem.const(_as_fraction(other), self._n, self._nvars)

    def __add__(self, other: object) -> "CoeffElem":
        try:
            rhs = self._coerce(other)
        except TypeError:
            return NotImplemented
        if not rhs._terms:
            return self
        if not self._terms:
            return rhs
        terms = dict(self._terms)
        for key, c in rhs._terms.items():
            s = terms.get(key, 0) + c
            if s:
                terms[key] = s
            else:
                terms.pop(key, None)
        return CoeffElem._raw(self._n, self._nvars, terms)

    __radd__ = __add__

    def __neg__(self) -> "CoeffElem":
        return CoeffElem._raw(
            self._n, self._nvars, {k: -c for k, c in self._terms.items()}
        )

    def __sub__(self, other: object) -> "CoeffElem":
        try:
            rhs = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> "CoeffElem":
        return (-self) + other

    def __mul__(self, other: object) -> "CoeffElem":
        try:
            rhs = self._coerce(other)
        except TypeError:
            return NotImplemented
        if not self._terms or not rhs._terms:
            return CoeffElem._raw(self._n, self._nvars, {})
        n = self._n
        terms: Dict[_Key, Fraction] = {}
        for (z1, v1, g1), c1 in self._terms.items():
            for (z2, v2, g2), c2 in rhs._terms.items():
                if n > 1:
                    extra, g = _gmul(g1, g2, n)
                else:
                    extra, g = 0, g1
                key = (
                    tuple(a + b for a, b in zip(z1, z2)),
                    v1 + v2 + extra,
                    g,
                )
                s = terms.get(key, 0) + c1 * c2
                if s:
                    terms[key] = s
                else:
                    terms.pop(key, None)
        return CoeffElem._raw(n, self._nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "CoeffElem":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = CoeffElem.one(self._n, self._nvars)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CoeffElem):
            return (
                self._n == other._n
                and self._nvars == other._nvars
                and self._terms == other._terms
            )
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._terms == CoeffElem.const(other, self._n, self._nvars)._terms
        return NotImplemented

    def __ne__(self, other: object) -> bool:
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(
                (self._n, self._nvars, frozenset(self._terms.items()))
            )
        return self._hash

    # ------------------------------------------------------------------
    # substitutions
    # ------------------------------------------------------------------
    def evaluate(self, point: "EvalPoint") -> Fraction:
        """
        Substitute the values of an evaluation point

        Parameters:
            point (:obj:`EvalPoint`): must have the same modulus and number of
                z values as the element

        Returns:
            :obj:`fractions.Fraction`: the exact value

        Raises:
            ValueError: if the point does not fit the ring
        """
        if point.n != self._n or len(point.z_vals) != self._nvars:
            raise ValueError(
                f"point (n={point.n}, r={len(point.z_vals)}) does not fit "
                f"ring (n={self._n}, r={self._nvars})"
            )
        total = Fraction(0)
        for (z, v, g), c in self._terms.items():
            value = c * point.v_val ** v
            for zi, e in zip(point.z_vals, z):
                if e:
                    value *= zi ** e
            for a, e in enumerate(g, start=1):
                if e:
                    value *= point.g_vals[a] ** e
            total += value
        return total

    def at_v_zero(self) -> "CoeffElem":
        """the specialization v = 0 of an element without negative v powers"""
        if any(v < 0 for (_, v, _) in self._terms):
            raise ValueError("cannot set v = 0 in an element with v^-1")
        return CoeffElem._raw(
            self._n,
            self._nvars,
            {k: c for k, c in self._terms.items() if k[1] == 0},
        )

    def permute_variables(self, perm: Sequence[int]) -> "CoeffElem":
        """
        Rename variables: z_{i+1} becomes z_{perm[i]+1}

        The result lives in a ring with ``max(perm) + 1`` variables when that
        exceeds the current count.
        """
        nvars = max(self._nvars, max(perm) + 1)
        if len(perm) != self._nvars or len(set(perm)) != len(perm):
            raise ValueError(f"{perm} is not an injective relabelling")
        terms: Dict[_Key, Fraction] = {}
        for (z, v, g), c in self._terms.items():
            new = [0] * nvars
            for i, e in enumerate(z):
                new[perm[i]] = e
            terms[(tuple(new), v, g)] = c
        return CoeffElem._raw(self._n, nvars, terms)

    # ------------------------------------------------------------------
    # sympy bridge
    # ------------------------------------------------------------------
    def to_sympy(self) -> sympy.Expr:
        zs = sympy.symbols(f"z1:{self._nvars + 1}")
        v = sympy.Symbol("v")
        gs = sympy.symbols(f"g1:{self._n}") if self._n > 1 else ()
        expr = sympy.Integer(0)
        for (z, vp, g), c in self._terms.items():
            term = sympy.Rational(c.numerator, c.denominator) * v ** vp
            for sym, e in zip(zs, z):
                term *= sym ** e
            for sym, e in zip(gs, g):
                term *= sym ** e
            expr += term
        return expr

    @classmethod
    def from_sympy(cls, expr: sympy.Expr, n: int, nvars: int) -> "CoeffElem":
        """
        Convert a sympy Laurent polynomial in z1..zr and v

        Raises:
            ValueError: if the expression is not a Laurent polynomial in those
                symbols
        """
        zs = sympy.symbols(f"z1:{nvars + 1}")
        v = sympy.Symbol("v")
        gens = list(zs) + [v]
        num, den = sympy.fraction(sympy.together(sympy.expand(expr)))
        den_poly = sympy.Poly(den, *gens)
        if not den_poly.is_monomial:
            raise ValueError(f"{expr} is not a Laurent polynomial")
        (den_exp, den_coeff), = den_poly.terms()
        result = cls.zero(n, nvars)
        for exp, coeff in sympy.Poly(num, *gens).terms():
            q = sympy.Rational(coeff) / sympy.Rational(den_coeff)
            shifted = [a - b for a, b in zip(exp, den_exp)]
            result = result + cls.monomial(
                n,
                nvars,
                coeff=Fraction(int(q.p), int(q.q)),
                v_pow=shifted[-1],
                z_pows=shifted[:-1],
            )
        return result

    # ------------------------------------------------------------------
    # text
    # ------------------------------------------------------------------
    def to_text(self) -> str:
        """
        Canonical text rendering

        Terms sharing z and g exponents are grouped with a polynomial in v as
        their coefficient, e.g. ``z1^2*z2 - v*z1*z2^2 + (1-v)*g1*z1``. Groups
        appear in decreasing order of (z exponents, g exponents).
        """
        if not self._terms:
            return "0"
        groups: Dict[Tuple[Tuple[int, ...], GMonomial], Dict[int, Fraction]] = {}
        for (z, v, g), c in self._terms.items():
            groups.setdefault((z, g), {})[v] = c
        pieces: List[Tuple[bool, str]] = []
        for (z, g) in sorted(groups, reverse=True):
            mono = _render_monomial(z, g)
            vpoly = groups[(z, g)]
            if len(vpoly) == 1:
                (vp, c), = vpoly.items()
                factors = []
                vpart = _power("v", vp)
                if abs(c) != 1 or (not vpart and not mono):
                    factors.append(_render_fraction(abs(c)))
                factors += [f for f in (vpart, mono) if f]
                pieces.append((c < 0, "*".join(factors)))
            else:
                inner = _render_vpoly(vpoly)
                body = f"({inner})" + (f"*{mono}" if mono else "")
                pieces.append((False, body))
        out = ("-" if pieces[0][0] else "") + pieces[0][1]
        for negative, body in pieces[1:]:
            out += (" - " if negative else " + ") + body
        return out

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return (
            f"{self.__class__.__name__}('{self.to_text()}', "
            f"n={self._n}, nvars={self._nvars})"
        )

    @classmethod
    def parse(cls, text: str, n: int, nvars: int) -> "CoeffElem":
        """
        Parse a polynomial expression in z1..zr, v and g1..g(n-1)

        Accepts the canonical rendering and, more generally, sums, products,
        integer powers, parentheses and rational literals.

        Raises:
            ValueError: on malformed text or out-of-range symbols
        """
        return _Parser(text, n, nvars).parse()


def _power(symbol: str, exponent: int) -> str:
    if exponent == 0:
        return ""
    if exponent == 1:
        return symbol
    return f"{symbol}^{exponent}"


def _render_monomial(z: Sequence[int], g: GMonomial) -> str:
    factors = [_power(f"g{a}", e) for a, e in enumerate(g, start=1)]
    factors += [_power(f"z{i}", e) for i, e in enumerate(z, start=1)]
    return "*".join(f for f in factors if f)


def _render_fraction(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _render_vpoly(vpoly: Mapping[int, Fraction]) -> str:
    out = ""
    for i, vp in enumerate(sorted(vpoly)):
        c = vpoly[vp]
        vpart = _power("v", vp)
        mag = abs(c)
        if not vpart:
            body = _render_fraction(mag)
        elif mag == 1:
            body = vpart
        else:
            body = f"{_render_fraction(mag)}*{vpart}"
        if i == 0:
            out = ("-" if c < 0 else "") + body
        else:
            out += ("-" if c < 0 else "+") + body
    return out


_TOKEN = re.compile(r"\s*(\d+|z\d+|g\d+|v|\^|\*|/|\+|-|\(|\))")


class _Parser(object):
    """recursive descent parser for polynomial text"""

    def __init__(self, text: str, n: int, nvars: int) -> None:
        self.n = n
        self.nvars = nvars
        self.tokens = self._tokenize(text)
        self.pos = 0

    @staticmethod
    def _tokenize(text: str) -> List[str]:
        tokens = []
        pos = 0
        stripped = text.rstrip()
        while pos < len(stripped):
            match = _TOKEN.match(stripped, pos)
            if match is None:
                raise ValueError(f"unexpected character at {pos} in {text!r}")
            tokens.append(match.group(1))
            pos = match.end()
        if not tokens:
            raise ValueError("empty polynomial text")
        return tokens

    def _peek(self) -> Optional[str]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _take(self) -> str:
        tok = self._peek()
        if tok is None:
            raise ValueError("unexpected end of polynomial text")
        self.pos += 1
        return tok

    def parse(self) -> CoeffElem:
        value = self._expr()
        if self._peek() is not None:
            raise ValueError(f"unexpected token {self._peek()!r}")
        return value

    def _expr(self) -> CoeffElem:
        value = self._term()
        while self._peek() in ("+", "-"):
            op = self._take()
            rhs = self._term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def _term(self) -> CoeffElem:
        value = self._unary()
        while self._peek() in ("*", "/"):
            op = self._take()
            rhs = self._unary()
            if op == "*":
                value = value * rhs
            else:
                value = value * (1 / _constant_of(rhs))
        return value

    def _unary(self) -> CoeffElem:
        if self._peek() == "-":
            self._take()
            return -self._unary()
        return self._power()

    def _power(self) -> CoeffElem:
        tok = self._take()
        exponent = 1
        if self._peek() == "^":
            self._take()
            sign = -1 if self._peek() == "-" else 1
            if sign < 0:
                self._take()
            digits = self._take()
            if not digits.isdigit():
                raise ValueError(f"bad exponent {digits!r}")
            exponent = sign * int(digits)
        n, r = self.n, self.nvars
        if tok == "(":
            inner = self._expr()
            if self._take() != ")":
                raise ValueError("unbalanced parenthesis")
            return inner ** exponent
        if tok.isdigit():
            return CoeffElem.const(Fraction(int(tok)) ** exponent, n, r)
        if tok == "v":
            return CoeffElem.v(n, r, exponent)
        if tok[0] == "z":
            return CoeffElem.z(int(tok[1:]) - 1, n, r, exponent)
        if tok[0] == "g":
            a = int(tok[1:])
            if not 1 <= a <= n - 1 or exponent < 0:
                raise ValueError(f"g symbol {tok}^{exponent} is not in the ring")
            return CoeffElem.monomial(n, r, g={a: exponent})
        raise ValueError(f"unexpected token {tok!r}")


def _constant_of(elem: CoeffElem) -> Fraction:
    terms = elem.terms
    if len(terms) != 1 or terms[0].v_pow or any(terms[0].z_pows) or any(
        terms[0].gmono
    ):
        raise ValueError("only division by a nonzero rational constant")
    return terms[0].coeff


class EvalPoint(object):
    """
    A consistent substitution for the ring

    Parameters:
        n (:obj:`int`): charge modulus
        z_vals (:obj:`list`): nonzero rationals, one per z variable
        v_val (:obj:`Fraction`): nonzero rational value of v
        g_vals (:obj:`dict`): nonzero rational value of g(a) for every a in
            0..n-1

    Raises:
        ValueError: if a value is zero, g(0) != -v, or g(a)g(n-a) != v
    """

    def __init__(
        self,
        n: int,
        z_vals: Sequence[Scalar],
        v_val: Scalar,
        g_vals: Mapping[int, Scalar],
    ) -> None:
        self._n = n
        self._z_vals = tuple(_as_fraction(z) for z in z_vals)
        self._v_val = _as_fraction(v_val)
        self._g_vals = {a: _as_fraction(g) for a, g in g_vals.items()}
        self.__validate()

    def __validate(self) -> None:
        if not self._z_vals:
            raise ValueError("an evaluation point needs at least one z value")
        if any(z == 0 for z in self._z_vals) or self._v_val == 0:
            raise ValueError("z and v values must be nonzero")
        if set(self._g_vals) != set(range(self._n)):
            raise ValueError(f"g values must be given for 0..{self._n - 1}")
        if any(g == 0 for g in self._g_vals.values()):
            raise ValueError("g values must be nonzero")
        if self._g_vals[0] != -self._v_val:
            raise ValueError("g(0) must equal -v")
        for a in range(1, self._n):
            if self._g_vals[a] * self._g_vals[self._n - a] != self._v_val:
                raise ValueError(f"g({a})g({self._n - a}) must equal v")

    @property
    def n(self) -> int:
        return self._n

    @property
    def z_vals(self) -> Tuple[Fraction, ...]:
        return self._z_vals

    @property
    def v_val(self) -> Fraction:
        return self._v_val

    @property
    def g_vals(self) -> Dict[int, Fraction]:
        return dict(self._g_vals)

    def __repr__(self) -> str:
        zs = ", ".join(str(z) for z in self._z_vals)
        return f"{self.__class__.__name__}(n={self._n}, z=({zs}), v={self._v_val})"


def _random_rational(rng: np.random.Generator) -> Fraction:
    numerator = int(rng.integers(1, 60)) * (1 if rng.integers(0, 2) else -1)
    return Fraction(numerator, int(rng.integers(1, 40)))


def sample_point(n: int, r: int, seed: int) -> EvalPoint:
    """
    Draw a random consistent evaluation point

    v is the square of a random nonzero rational t, so that g(n/2) = t is
    available when n is even. For every a < n - a, g(a) is random and
    g(n - a) = v / g(a).

    Parameters:
        n (:obj:`int`): charge modulus
        r (:obj:`int`): number of z variables
        seed (:obj:`int`): seed for :obj:`numpy.random.default_rng`

    Returns:
        :obj:`EvalPoint`: identical for identical arguments
    """
    if n < 1 or r < 1:
        raise ValueError("n and r must be positive")
    rng = np.random.default_rng(seed)
    t = _random_rational(rng)
    v = t * t
    z_vals = [_random_rational(rng) for _ in range(r)]
    g_vals: Dict[int, Fraction] = {0: -v}
    for a in range(1, n // 2 + 1):
        if a < n - a:
            g_vals[a] = _random_rational(rng)
            g_vals[n - a] = v / g_vals[a]
        else:
            g_vals[a] = t
    return EvalPoint(n, z_vals, v, g_vals)


def iter_points(n: int, r: int, seed: int, count: int) -> Iterator[EvalPoint]:
    """count independent points drawn with seeds seed, seed + 1, ..."""
    for k in range(count):
        yield sample_point(n, r, seed + k)
