from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from totdom.polynomial import (
    ONE, X, ZERO, Polynomial, add, analyze_sequence, count_distinct_real_roots, evaluate,
    format_poly, is_all_real_rooted, is_log_concave, is_symmetric, is_unimodal, mul, pow_,
    scale_shift, squarefree_part,
)

ints = st.integers(-50, 50)
polys = st.lists(ints, max_size=7).map(Polynomial)
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)


def P(*c):
    return Polynomial(c)


# -- arithmetic --------------------------------------------------------------


def test_mul_binomial():
    assert mul(X + 1, X + 1) == P(1, 2, 1)


def test_pow_book_n1():
    # (x(x+1) + x)^2
    assert pow_(X * (X + 1) + X, 2) == P(0, 0, 4, 4, 1)


def test_add_identity():
    p = P(3, 0, -2, 5)
    assert add(p, ZERO) == p


def test_pow_zero_exponent_and_shift():
    assert pow_(P(7, 3), 0) == ONE
    assert scale_shift(P(1, 2), 3) == P(0, 0, 0, 1, 2)
    with pytest.raises(ValueError):
        pow_(X, -1)


def test_trailing_zeros_trimmed():
    assert P(1, 2, 0, 0).coeffs == (1, 2)
    assert Polynomial([0, 0]).coeffs == ()
    assert ZERO.degree == -1


def test_no_overflow():
    p = (X + 1) ** 200
    assert p[100] == comb(200, 100)
    assert p.to_json()[100] == str(p[100])
    assert p.to_json()[1] == 200
    assert Polynomial.from_json(p.to_json()) == p


def test_immutable():
    with pytest.raises(AttributeError):
        X.coeffs = (1,)


@pytest.mark.parametrize("p, x0, value", [
    (P(3, 3, 1), -1, 1),
    (ZERO, Fraction(7, 3), 0),
    (X * (X + 1) ** 3 - X, 1, 7),
])
def test_evaluate(p, x0, value):
    assert evaluate(p, x0) == value


@pytest.mark.parametrize("p, text", [
    (P(0, 0, 3, 3, 1), "x^4+3x^3+3x^2"),
    (ZERO, "0"),
    (P(-1, 1), "x-1"),
    (P(5), "5"),
    (P(0, -2, 0, -1), "-x^3-2x"),
])
def test_format(p, text):
    assert format_poly(p) == text


@given(polys, polys, polys)
def test_ring_laws(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@settings(max_examples=50)
@given(polys, st.integers(0, 4), st.integers(0, 4))
def test_pow_adds_exponents(p, a, b):
    assert pow_(p, a + b) == pow_(p, a) * pow_(p, b)


@given(polys, polys, rationals)
def test_evaluate_is_multiplicative(p, q, x0):
    assert evaluate(p * q, x0) == evaluate(p, x0) * evaluate(q, x0)


# -- sequence analysis -------------------------------------------------------


def test_analyze_star3():
    v = analyze_sequence(P(0, 0, 3, 3, 1))
    assert v.unimodal and v.mode == 2
    assert v.log_concave and not v.symmetric
    assert v.window == (2, 4)


def test_analyze_c4():
    v = analyze_sequence(P(0, 0, 4, 4, 1))
    assert v.unimodal and v.log_concave


def test_analyze_valley():
    v = analyze_sequence(P(1, 0, 1))
    assert not v.unimodal and v.mode is None
    assert v.first_violation == 1
    assert not v.log_concave and v.lc_violation == 1
    assert v.symmetric


def test_analyze_zero_convention():
    v = analyze_sequence(ZERO)
    assert v.unimodal and v.mode == 0 and v.log_concave and v.symmetric


def test_analyze_symmetric_window():
    v = analyze_sequence(X**3 * (X + 1) ** 4)
    assert v.symmetric and v.unimodal and v.mode == 5


def test_mode_is_smallest():
    assert analyze_sequence(P(1, 3, 3, 1)).mode == 1
    assert analyze_sequence(P(1, 1, 1)).mode == 0


def test_internal_zeros_break_log_concave_implies_unimodal():
    v = analyze_sequence(P(1, 0, 0, 1))
    assert v.log_concave and not v.unimodal


def test_unimodal_full_window_counts_leading_zeros():
    v = analyze_sequence(P(0, 0, 2, 5, 1))
    assert v.unimodal and v.unimodal_full


positive_seq = st.lists(st.integers(1, 60), min_size=1, max_size=9)


@given(positive_seq)
def test_log_concave_positive_implies_unimodal(seq):
    if is_log_concave(seq):
        assert is_unimodal(seq)


@st.composite
def real_rooted(draw, max_factors=6):
    """Products of (x + a) with positive integer a: real roots, positive coefficients."""
    roots = draw(st.lists(st.integers(1, 9), min_size=1, max_size=max_factors))
    p = ONE
    for a in roots:
        p = p * (X + a)
    return p


@given(real_rooted())
def test_real_rooted_implies_log_concave_implies_unimodal(p):
    assert is_all_real_rooted(p)
    v = analyze_sequence(p)
    assert v.log_concave and v.unimodal


def _random_log_concave(draw):
    if draw(st.booleans()):
        return draw(real_rooted(max_factors=5))
    seq = draw(positive_seq)
    if not is_log_concave(seq):
        seq = seq[:1]
    return Polynomial(seq)


@settings(max_examples=200)
@given(st.data())
def test_product_of_log_concave_is_log_concave(data):
    f = _random_log_concave(data.draw)
    g = _random_log_concave(data.draw)
    assert analyze_sequence(f * g).log_concave


@settings(max_examples=200)
@given(st.data())
def test_product_of_symmetric_unimodal_is_symmetric_unimodal(data):
    def draw_su():
        half = data.draw(st.lists(st.integers(1, 20), min_size=1, max_size=4))
        half.sort()
        mid = [data.draw(st.integers(half[-1], 25))] if data.draw(st.booleans()) else []
        return Polynomial(half + mid + half[::-1])

    f, g = draw_su(), draw_su()
    assert is_symmetric(f.coeffs) and is_unimodal(f.coeffs)
    v = analyze_sequence(f * g)
    assert v.symmetric and v.unimodal


@settings(max_examples=100)
@given(st.data())
def test_log_concave_times_unimodal_is_unimodal(data):
    f = _random_log_concave(data.draw)
    peak = data.draw(st.integers(1, 30))
    up = sorted(data.draw(st.lists(st.integers(1, peak), max_size=4)))
    down = sorted(data.draw(st.lists(st.integers(1, peak), max_size=4)), reverse=True)
    g = Polynomial(up + [peak] + down)
    assert analyze_sequence(f * g).unimodal


# -- real roots --------------------------------------------------------------


@pytest.mark.parametrize("p, count", [
    (X**2 - 1, 2),
    (P(3, 3, 1), 0),
    (X**3 * (X + 1) ** 4, 2),
    (X + 5, 1),
    (P(7), 0),
])
def test_count_distinct_real_roots(p, count):
    assert count_distinct_real_roots(p) == count


@pytest.mark.parametrize("p, expected", [
    (X**3 * (X + 1) ** 4, True),
    (X**2 * P(3, 3, 1), False),
    (X + 5, True),
    ((X - 1) ** 3 * (X + 2), True),
])
def test_is_all_real_rooted(p, expected):
    assert is_all_real_rooted(p) is expected


def test_zero_rejected():
    with pytest.raises(ValueError):
        count_distinct_real_roots(ZERO)
    with pytest.raises(ValueError):
        is_all_real_rooted(ZERO)


@st.composite
def known_roots(draw):
    """(polynomial, number of distinct real roots) built from chosen factors."""
    roots = draw(st.lists(st.fractions(min_value=-20, max_value=20, max_denominator=5), max_size=5))
    mults = draw(st.lists(st.integers(1, 3), min_size=len(roots), max_size=len(roots)))
    quads = draw(st.lists(st.integers(1, 30), max_size=2))
    p = Polynomial([draw(st.sampled_from([1, -3, 7]))])
    for r, k in zip(roots, mults):
        # (den * x - num)^k
        p = p * Polynomial([-r.numerator, r.denominator]) ** k
    for c in quads:
        p = p * (X**2 + c)  # no real roots
    return p, len(set(roots))


@settings(max_examples=150)
@given(known_roots())
def test_sturm_count_matches_construction(case):
    p, distinct = case
    assert count_distinct_real_roots(p) == distinct
    assert count_distinct_real_roots(squarefree_part(p)) == distinct


def test_squarefree_part():
    assert squarefree_part(X**3 * (X + 1) ** 4) == X * (X + 1)
    assert squarefree_part(P(0, 0, 2)) == X
