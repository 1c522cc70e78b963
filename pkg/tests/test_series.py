from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catpoly.errors import (
    BadSqrtConstantTerm,
    InternalInconsistency,
    NonUnitDivisor,
    OrderMismatch,
)
from catpoly.mpoly import Caps, MPoly
from catpoly.series import Series

CAPS = Caps.for_order(8)


def series_from_terms(spec, order=5):
    """spec: list per x-order of (coeff, dp, dq, dv) tuples."""
    coeffs = []
    for terms in spec:
        acc = MPoly.zero()
        for (c, dp, dq, dv) in terms:
            acc = acc + MPoly.monomial(c, dp, dq, dv)
        coeffs.append(acc)
    while len(coeffs) < order:
        coeffs.append(MPoly.zero())
    return Series(order, coeffs[:order], CAPS)


term = st.tuples(
    st.integers(min_value=-4, max_value=4),
    st.integers(min_value=0, max_value=2),
    st.integers(min_value=0, max_value=2),
    st.integers(min_value=0, max_value=2),
)
series_strategy = st.lists(st.lists(term, max_size=3), min_size=1, max_size=5).map(
    series_from_terms
)


# MPoly basics ------------------------------------------------------------------


def test_mpoly_zero_fraction_normalization():
    m = MPoly.scalar(Fraction(6, 3))
    assert m.terms == {0: 2}
    assert MPoly.scalar(Fraction(0, 5)).terms == {}


def test_mpoly_addition_cancels():
    a = MPoly.monomial(2, 1, 0, 0)
    b = MPoly.monomial(-2, 1, 0, 0)
    assert (a + b).terms == {}


def test_mpoly_mul_and_str():
    a = MPoly.monomial(1, 0, 1, 0) + MPoly.scalar(1)  # 1 + q
    b = MPoly.monomial(1, 0, 0, 1)  # v
    assert str(a * b) == "v+qv"


def test_mpoly_derivative():
    m = MPoly.monomial(3, 0, 4, 0)  # 3q^4
    assert m.derivative("q") == MPoly.monomial(12, 0, 3, 0)
    assert m.derivative("p").terms == {}


def test_mpoly_eval_one_merges():
    m = MPoly.monomial(1, 0, 2, 1) + MPoly.monomial(1, 0, 2, 0)  # q^2 v + q^2
    assert m.eval_one("v") == MPoly.monomial(2, 0, 2, 0)


def test_mpoly_subst_v_monomial():
    m = MPoly.monomial(1, 0, 0, 2)  # v^2
    assert m.subst_v_monomial(3) == MPoly.monomial(1, 0, 6, 2)
    assert m.subst_v_to_q() == MPoly.monomial(1, 0, 2, 0)


# arithmetic properties -----------------------------------------------------------


@settings(max_examples=40, deadline=None)
@given(series_strategy, series_strategy, series_strategy)
def test_mul_associative_distributive(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=40, deadline=None)
@given(series_strategy, series_strategy)
def test_mul_commutative(a, b):
    assert a * b == b * a


@settings(max_examples=25, deadline=None)
@given(series_strategy)
def test_div_roundtrip(a):
    b = series_from_terms([[(1, 0, 0, 0)], [(2, 1, 0, 0), (1, 0, 1, 1)]])
    assert (a * b).div(b) == a


@settings(max_examples=25, deadline=None)
@given(series_strategy)
def test_sqrt_squares_back(a):
    one = series_from_terms([[(1, 0, 0, 0)]])
    shifted = Series(a.order, [MPoly.zero()] + a.coeffs[:-1], a.caps)
    s = one + shifted
    root = s.sqrt()
    assert root * root == s


def test_sqrt_defining_identity():
    s = Series.from_x_polynomial(8, [1, -2, -3], CAPS)
    root = s.sqrt()
    assert root * root == s


def test_sqrt_requires_unit_constant():
    with pytest.raises(BadSqrtConstantTerm):
        Series.from_x_polynomial(4, [2, 1], CAPS).sqrt()


def test_div_requires_invertible_constant():
    num = Series.from_x_polynomial(4, [1], CAPS)
    den = Series.from_x_polynomial(4, [0, 1], CAPS)
    with pytest.raises(NonUnitDivisor):
        num.div(den)


def test_div_by_nonscalar_unit():
    # (1 - v) is invertible under the caps
    one_minus_v = MPoly.scalar(1) - MPoly.monomial(1, 0, 0, 1)
    den = Series.from_x_polynomial(4, [one_minus_v], CAPS)
    num = Series.from_x_polynomial(4, [MPoly.scalar(1)], CAPS)
    q = num.div(den)
    assert q * den == num
    # the inverse of (1-v) is the truncated geometric series in v
    assert q.coeff(0) == MPoly({k: 1 for k in range(CAPS.v + 1)})


def test_order_mismatch_raises():
    a = Series.from_x_polynomial(4, [1], CAPS)
    b = Series.from_x_polynomial(5, [1], CAPS)
    with pytest.raises(OrderMismatch):
        a + b


def test_coeff_out_of_range():
    a = Series.from_x_polynomial(4, [1], CAPS)
    with pytest.raises(OrderMismatch):
        a.coeff(4)


# marker operations ------------------------------------------------------------


def test_subst_x_scale_monomial_action():
    s = Series.from_x_polynomial(4, [0, 1, 1], CAPS)  # x + x^2
    scaled = s.subst_x_scale(1)
    assert scaled.coeff(1) == MPoly.monomial(1, 0, 1, 0)
    assert scaled.coeff(2) == MPoly.monomial(1, 0, 2, 0)


def test_subst_x_scale_respects_qcap():
    caps = Caps.for_order(3)
    s = Series.from_x_polynomial(3, [0, 1, 1], caps)
    scaled = s.subst_x_scale(caps.q)  # x-coefficient q^cap survives, x^2 dies
    assert scaled.coeff(1) == MPoly.monomial(1, 0, caps.q, 0)
    assert not scaled.coeff(2)


def test_derivative_term_by_term():
    v2 = MPoly.monomial(1, 0, 0, 2)
    s = Series.from_x_polynomial(3, [0, v2], CAPS)
    d = s.derivative("v")
    assert d.coeff(1) == MPoly.monomial(2, 0, 0, 1)


def test_scale_by_rational():
    s = Series.from_x_polynomial(3, [2, 4], CAPS)
    half = s.scale(Fraction(1, 2))
    assert half.scalar_coeffs() == [1, 2, 0]


# exactness guards ----------------------------------------------------------------


def test_divide_by_x_power_guard():
    s = Series.from_x_polynomial(4, [0, 1, 1], CAPS)
    shifted = s.divide_by_x_power(1)
    assert shifted.order == 3
    assert shifted.scalar_coeffs() == [1, 1, 0]
    with pytest.raises(InternalInconsistency):
        s.divide_by_x_power(2)


def test_divide_coeffs_monomial_guard():
    p3 = MPoly.monomial(4, 3, 0, 0)
    s = Series.from_x_polynomial(3, [p3], CAPS)
    q = s.divide_coeffs_monomial(2, 3, 0, 0)
    assert q.coeff(0) == MPoly.scalar(2)
    with pytest.raises(InternalInconsistency):
        s.divide_coeffs_monomial(2, 4, 0, 0)


def test_monomial_divide_exact_rational():
    m = MPoly.monomial(3, 2, 0, 0)
    half = m.divide_monomial(2, 2, 0, 0)
    assert half == MPoly.scalar(Fraction(3, 2))
