from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from metaice.algebra import (
    CoeffElem,
    EvalPoint,
    iter_points,
    normalize_g,
    sample_point,
)


@st.composite
def elements(draw, n, nvars=2, max_terms=4):
    """random ring elements built from monomials with small exponents"""
    total = CoeffElem.zero(n, nvars)
    for _ in range(draw(st.integers(0, max_terms))):
        g = {}
        if n > 1:
            g = draw(
                st.dictionaries(
                    st.integers(1, n - 1), st.integers(0, 3), max_size=2
                )
            )
        total = total + CoeffElem.monomial(
            n,
            nvars,
            coeff=draw(st.integers(-5, 5)),
            v_pow=draw(st.integers(-2, 3)),
            z_pows=draw(st.lists(st.integers(-1, 3), min_size=nvars, max_size=nvars)),
            g=g,
        )
    return total


def test_g_pair_reduces_to_v():
    for n in range(2, 7):
        for a in range(1, n):
            prod = CoeffElem.g(a, n, 1) * CoeffElem.g(n - a, n, 1)
            assert prod == CoeffElem.v(n, 1), f"g({a})g({n - a}) != v for n={n}"


def test_g_zero_is_minus_v():
    for n in (1, 2, 5):
        assert CoeffElem.g(0, n, 1) == -CoeffElem.v(n, 1)
        assert CoeffElem.g(n, n, 1) == -CoeffElem.v(n, 1)


def test_normalize_g():
    assert normalize_g({1: 1, 2: 1}, 3) == (1, (0, 0))
    assert normalize_g({1: 2}, 2) == (1, (0,))
    assert normalize_g({2: 3}, 4) == (1, (0, 1, 0))
    assert normalize_g({1: 2, 3: 1}, 4) == (1, (1, 0, 0))
    assert normalize_g({1: 1}, 3) == (0, (1, 0))


@pytest.mark.parametrize("raw", [{0: 1}, {3: 1}, {1: -1}])
def test_normalize_g_invalid(raw):
    with pytest.raises(ValueError):
        normalize_g(raw, 3)


@settings(max_examples=1000, deadline=None)
@given(
    st.integers(2, 6).flatmap(
        lambda n: st.tuples(
            st.just(n), st.lists(st.integers(1, n - 1), max_size=6)
        )
    ),
    st.randoms(use_true_random=False),
)
def test_g_normal_form_is_confluent(data, random):
    n, indices = data
    one = CoeffElem.one(n, 1)
    forward = one
    for a in indices:
        forward = forward * CoeffElem.g(a, n, 1)
    shuffled = list(indices)
    random.shuffle(shuffled)
    backward = one
    for a in shuffled:
        backward = backward * CoeffElem.g(a, n, 1)
    assert forward == backward
    assert forward == CoeffElem.monomial(n, 1, g={a: indices.count(a) for a in set(indices)})


@settings(max_examples=200, deadline=None)
@given(
    st.integers(2, 6).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.dictionaries(st.integers(1, n - 1), st.integers(0, 5), max_size=n - 1),
        )
    ),
    st.integers(0, 10_000),
)
def test_g_normal_form_keeps_the_value(data, seed):
    n, raw = data
    point = sample_point(n, 1, seed)
    g = point.g_vals
    direct = Fraction(1)
    for a, e in raw.items():
        direct *= g[a] ** e
    extra, mono = normalize_g(raw, n)
    reduced = point.v_val ** extra
    for a, e in enumerate(mono, start=1):
        reduced *= g[a] ** e
    assert reduced == direct
    assert CoeffElem.monomial(n, 1, g=raw).evaluate(point) == direct


def test_canonical_text(ring):
    assert str(ring("z1 - v*z2")) == "z1 - v*z2"
    assert str(ring("z1 - z1*v")) == "(1-v)*z1"
    assert str(ring("z2*z1^2 + z1*z2^2")) == "z1^2*z2 + z1*z2^2"
    assert str(ring("0")) == "0"
    assert str(ring("z1 - z1")) == "0"
    assert str(ring("1/2*v^-1")) == "1/2*v^-1"


def test_text_with_g():
    e = CoeffElem.parse("g1*z1 - v*g2", 3, 2)
    assert e.has_g()
    assert CoeffElem.parse(str(e), 3, 2) == e


@pytest.mark.parametrize(
    "text",
    ["z1", "v", "(1-v)*z1", "z1^2 - v^2*z2^2", "-3/4*v*z1*z2^-1", "(z1 - v*z2)^3"],
)
def test_parse_round_trip(ring, text):
    e = ring(text)
    assert ring(str(e)) == e, f"{text} did not survive rendering as {e}"


@pytest.mark.parametrize("text", ["", "z1 +", "z3", "(z1", "z1 $ z2", "z1/z2", "g1"])
def test_parse_invalid(ring, text):
    with pytest.raises(ValueError):
        ring(text)


def test_predicates(ring):
    assert ring("0").is_zero()
    assert not ring("0")
    assert ring("-2*v*z1").is_monomial()
    assert not ring("z1 - v*z2").is_monomial()
    assert not ring("z1").has_g()


def test_ring_mismatch():
    with pytest.raises(ValueError):
        CoeffElem.one(2, 2) + CoeffElem.one(3, 2)
    with pytest.raises(ValueError):
        CoeffElem.one(2, 2) * CoeffElem.one(2, 3)


def test_scalar_promotion(ring):
    assert ring("z1") + 1 == ring("1 + z1")
    assert 1 - ring("v") == ring("1 - v")
    assert 2 * ring("z2") == ring("2*z2")
    assert ring("3") == 3
    with pytest.raises(TypeError):
        ring("z1") + 0.5


def test_power(ring):
    assert ring("z1 - z2") ** 2 == ring("z1^2 - 2*z1*z2 + z2^2")
    assert ring("z1") ** 0 == 1
    with pytest.raises(ValueError):
        ring("z1") ** -1


def test_immutable(ring):
    e = ring("z1")
    with pytest.raises(AttributeError):
        e.n = 3


def test_permute_variables(ring):
    assert ring("z1 - v*z2").permute_variables([1, 0]) == ring("z2 - v*z1")
    widened = ring("z1 - v*z2").permute_variables([2, 0])
    assert widened.nvars == 3
    assert widened == CoeffElem.parse("z3 - v*z1", 1, 3)
    with pytest.raises(ValueError):
        ring("z1").permute_variables([0, 0])


def test_at_v_zero(ring):
    assert ring("z1 - v*z2 + v^2").at_v_zero() == ring("z1")
    with pytest.raises(ValueError):
        ring("v^-1").at_v_zero()


def test_sympy_bridge(ring):
    e = ring("z1^2 - v*z1*z2 + 1/3*v^-1")
    z1, z2, v = sympy.symbols("z1 z2 v")
    assert sympy.simplify(e.to_sympy() - (z1 ** 2 - v * z1 * z2 + v ** -1 / 3)) == 0
    assert CoeffElem.from_sympy(e.to_sympy(), 1, 2) == e
    with pytest.raises(ValueError):
        CoeffElem.from_sympy(1 / (z1 - z2), 1, 2)


def test_evaluate(ring, point):
    e = CoeffElem.parse("z1 - v*z2 + g1*g2", 3, 2)
    expected = point.z_vals[0] - point.v_val * point.z_vals[1] + point.v_val
    assert e.evaluate(point) == expected
    with pytest.raises(ValueError):
        ring("z1").evaluate(point)


@settings(max_examples=100, deadline=None)
@given(
    st.sampled_from([1, 2, 3, 4]).flatmap(
        lambda n: st.tuples(st.just(n), elements(n), elements(n))
    ),
    st.integers(0, 10_000),
)
def test_evaluation_is_a_ring_homomorphism(data, seed):
    n, a, b = data
    p = sample_point(n, 2, seed)
    assert (a + b).evaluate(p) == a.evaluate(p) + b.evaluate(p)
    assert (a * b).evaluate(p) == a.evaluate(p) * b.evaluate(p)


@settings(max_examples=50, deadline=None)
@given(
    st.sampled_from([1, 2, 3, 4]).flatmap(
        lambda n: st.tuples(st.just(n), elements(n))
    )
)
def test_rendering_is_canonical(data):
    n, a = data
    assert CoeffElem.parse(str(a), n, 2) == a


def test_sample_point_is_deterministic():
    p = sample_point(4, 3, seed=7)
    q = sample_point(4, 3, seed=7)
    assert p.z_vals == q.z_vals
    assert p.v_val == q.v_val
    assert p.g_vals == q.g_vals
    assert p.g_vals[2] ** 2 == p.v_val
    assert p.g_vals[1] * p.g_vals[3] == p.v_val


def test_iter_points():
    points = list(iter_points(2, 2, seed=3, count=4))
    assert len(points) == 4
    assert points[1].z_vals == sample_point(2, 2, seed=4).z_vals


def test_eval_point_validation():
    good = {0: Fraction(-4), 1: Fraction(2)}
    EvalPoint(2, [1, 2], 4, good)
    with pytest.raises(ValueError):
        EvalPoint(2, [1, 2], 4, {0: Fraction(4), 1: Fraction(2)})
    with pytest.raises(ValueError):
        EvalPoint(2, [1, 2], 4, {0: Fraction(-4), 1: Fraction(3)})
    with pytest.raises(ValueError):
        EvalPoint(2, [0, 2], 4, good)
    with pytest.raises(ValueError):
        EvalPoint(2, [1, 2], 4, {0: Fraction(-4)})
    with pytest.raises(TypeError):
        EvalPoint(2, [1.5, 2], 4, good)
