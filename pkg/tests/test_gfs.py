import pytest

from catpoly import gfs
from catpoly.errors import DepthTooShallow, NoConvergence
from catpoly.mpoly import MPoly
from catpoly.series import Series
from catpoly.words import (
    WordClass,
    enumerate_words,
    stat_area,
    stat_inter,
    stat_last,
    stat_sper,
)

# independent oracles ----------------------------------------------------------


def motzkin_by_recurrence(n):
    m = [1, 1]
    while len(m) <= n:
        k = len(m)
        m.append(m[k - 1] + sum(m[i] * m[k - 2 - i] for i in range(k - 1)))
    return m[n]


def trinomial_by_power(n):
    poly = [1]
    for _ in range(n):
        out = [0] * (len(poly) + 2)
        for i, c in enumerate(poly):
            out[i] += c
            out[i + 1] += c
            out[i + 2] += c
        poly = out
    return poly[n]


def histogram_poly(n, cls, stat):
    out = MPoly.zero()
    for w in enumerate_words(n, cls):
        out = out + MPoly.monomial(1, 0, stat(w), 0)
    return out


def triple_histogram(n):
    out = MPoly.zero()
    for w in enumerate_words(n, WordClass.AVOID_GEQ_GEQ):
        out = out + MPoly.monomial(1, stat_sper(w), stat_area(w), stat_last(w))
    return out


def mono(c, dp=0, dq=0, dv=0):
    return MPoly.monomial(c, dp, dq, dv)


# base series --------------------------------------------------------------------


def test_gf_motzkin_values():
    assert gfs.gf_motzkin(6).scalar_coeffs() == [1, 1, 2, 4, 9, 21]
    m = gfs.gf_motzkin(25)
    for n in range(25):
        assert m.coeff(n).as_scalar() == motzkin_by_recurrence(n)


def test_gf_trinomial_values():
    assert gfs.gf_trinomial(6).scalar_coeffs() == [1, 1, 3, 7, 19, 51]
    t = gfs.gf_trinomial(25)
    for n in range(25):
        assert t.coeff(n).as_scalar() == trinomial_by_power(n)


# total sequences -----------------------------------------------------------------

H_VALUES = [0, 1, 4, 12, 34, 94, 258, 707, 1940, 5337]
S_VALUES = [2, 7, 21, 62, 180, 522, 1512, 4384, 12726, 36995]
U_VALUES = [1, 5, 19, 66, 218, 701, 2215, 6919, 21438, 66034]
P_VALUES = [0, 0, 2, 13, 59, 230, 830, 2858, 9547, 31227]


@pytest.mark.parametrize("builder,expected", [
    (gfs.gf_h, H_VALUES),
    (gfs.gf_s, S_VALUES),
    (gfs.gf_u, U_VALUES),
    (gfs.gf_p, P_VALUES),
])
def test_total_series_printed_values(builder, expected):
    series = builder(11)
    assert series.coeff(0).as_scalar() == 0
    assert [series.coeff(n).as_scalar() for n in range(1, 11)] == expected


def test_totals_match_brute_force_sums():
    for n in range(1, 10):
        words = list(enumerate_words(n))
        assert gfs.gf_h(n + 1).coeff(n).as_scalar() == sum(stat_last(w) for w in words)
        assert gfs.gf_s(n + 1).coeff(n).as_scalar() == sum(stat_sper(w) for w in words)
        assert gfs.gf_u(n + 1).coeff(n).as_scalar() == sum(stat_area(w) for w in words)
        assert gfs.gf_p(n + 1).coeff(n).as_scalar() == sum(stat_inter(w) for w in words)


# multivariate master --------------------------------------------------------------


def test_master_pqv_bold_coefficients():
    m = gfs.master_pqv(6)
    last = m.eval_one("p").eval_one("q")
    assert last.coeff(4) == mono(2) + mono(3, 0, 0, 1) + mono(3, 0, 0, 2) + mono(1, 0, 0, 3)
    sper = m.eval_one("q").eval_one("v")
    assert sper.coeff(4) == mono(2, 6) + mono(6, 7) + mono(1, 8)


def test_master_pqv_counts():
    plain = gfs.master_pqv(10).eval_one("p").eval_one("q").eval_one("v")
    for n in range(1, 10):
        assert plain.coeff(n).as_scalar() == motzkin_by_recurrence(n)


def test_master_pqv_equals_triple_histograms():
    m = gfs.master_pqv(8)
    for n in range(1, 8):
        assert m.coeff(n) == triple_histogram(n)


def test_master_specializations_match_closed_forms():
    m = gfs.master_pqv(9)
    assert m.eval_one("q") == gfs.cf_C_sper_v(9)
    assert m.eval_one("q").eval_one("v") == gfs.cf_S(9)
    assert m.eval_one("p").eval_one("q") == gfs.cf_C_last(9)


# closed forms from the kernel method ----------------------------------------------


def test_cf_S_series():
    s = gfs.cf_S(6)
    assert s.coeff(1) == mono(1, 2)
    assert s.coeff(2) == mono(1, 3) + mono(1, 4)
    assert s.coeff(3) == mono(3, 5) + mono(1, 6)
    assert s.coeff(4) == mono(2, 6) + mono(6, 7) + mono(1, 8)
    assert s.coeff(5) == mono(10, 8) + mono(10, 9) + mono(1, 10)


def test_cf_S_row_sums_are_motzkin():
    s = gfs.cf_S(12).eval_one("p")
    for n in range(1, 12):
        assert s.coeff(n).as_scalar() == motzkin_by_recurrence(n)


def test_cf_C_sper_v_series():
    c = gfs.cf_C_sper_v(5)
    assert c.coeff(3) == mono(1, 5) + mono(2, 5, 0, 1) + mono(1, 6, 0, 2)
    assert c.coeff(4) == (
        mono(1, 6) + mono(1, 6, 0, 1) + mono(1, 7) + mono(2, 7, 0, 1)
        + mono(3, 7, 0, 2) + mono(1, 8, 0, 3)
    )
    assert c.eval_one("v") == gfs.cf_S(5)


def test_cf_C_last_series():
    c = gfs.cf_C_last(6)
    assert c.coeff(1) == mono(1)
    assert c.coeff(4) == mono(2) + mono(3, 0, 0, 1) + mono(3, 0, 0, 2) + mono(1, 0, 0, 3)
    assert c.coeff(5) == (
        mono(4) + mono(6, 0, 0, 1) + mono(6, 0, 0, 2) + mono(4, 0, 0, 3) + mono(1, 0, 0, 4)
    )
    plain = c.eval_one("v")
    for n in range(1, 6):
        assert plain.coeff(n).as_scalar() == motzkin_by_recurrence(n)


def test_cf_C_last_histogram():
    c = gfs.cf_C_last(9)
    for n in range(1, 9):
        hist = MPoly.zero()
        for w in enumerate_words(n):
            hist = hist + mono(1, 0, 0, stat_last(w))
        assert c.coeff(n) == hist


# kernel root ----------------------------------------------------------------------


def test_kernel_root_annihilates():
    assert gfs.kernel_residual(14).is_zero()


def test_kernel_root_at_p1():
    order = 12
    v0 = gfs.kernel_root_v0(order).eval_one("p")
    caps = v0.caps
    motz = gfs.gf_motzkin(order, caps)
    one_plus_x = Series.from_x_polynomial(order, [1, 1], caps)
    numerator = Series.from_x_polynomial(order, [1], caps) + motz.mul_monomial(1, x_shift=1)
    assert v0 == numerator.div(one_plus_x)
    assert v0.coeff(0).as_scalar() == 1


# rising-tail series (B and H flavours) ----------------------------------------------


def test_sum_B_low_coefficients():
    b = gfs.sum_B(6)
    assert b.coeff(1) == mono(1, 0, 1, 0)
    assert b.coeff(2) == mono(1, 0, 3, 0)
    assert b.coeff(3) == mono(1, 0, 4, 0) + mono(1, 0, 6, 0)
    assert b.coeff(4) == mono(1, 0, 6, 0) + mono(1, 0, 7, 0) + mono(1, 0, 8, 0) + mono(1, 0, 10, 0)


def test_sum_B_matches_enumeration():
    b = gfs.sum_B(10)
    for n in range(1, 10):
        assert b.coeff(n) == histogram_poly(n, WordClass.CLASS_B, stat_area)


def test_contfrac_equals_sum():
    for order in (4, 8, 12):
        assert gfs.cf_B_contfrac(order, order) == gfs.sum_B(order)
    assert gfs.cf_B_contfrac(5, 9) == gfs.sum_B(5)


def test_contfrac_depth_guard():
    with pytest.raises(DepthTooShallow):
        gfs.cf_B_contfrac(8, 7)


def test_prod_area_series():
    pa = gfs.prod_area(7)
    assert pa.coeff(3) == mono(2, 0, 4, 0) + mono(1, 0, 5, 0) + mono(1, 0, 6, 0)
    assert pa.coeff(5).coefficient(0, 9, 0) == 5
    at_one = pa.eval_one("q")
    for n in range(1, 7):
        assert at_one.coeff(n).as_scalar() == motzkin_by_recurrence(n)


def test_prod_area_matches_enumeration():
    pa = gfs.prod_area(10)
    for n in range(1, 10):
        assert pa.coeff(n) == histogram_poly(n, WordClass.AVOID_GEQ_GEQ, stat_area)


def test_sum_H_low_coefficients():
    h = gfs.sum_H(6)
    assert h.coeff(1) == mono(1)
    assert h.coeff(2) == mono(1)
    assert h.coeff(3) == mono(1) + mono(1, 0, 1, 0)
    assert h.coeff(4) == mono(1) + mono(1, 0, 1, 0) + mono(1, 0, 2, 0) + mono(1, 0, 3, 0)


def test_sum_H_matches_enumeration():
    h = gfs.sum_H(10)
    for n in range(1, 10):
        assert h.coeff(n) == histogram_poly(n, WordClass.CLASS_B, stat_inter)


def test_prod_interior_series():
    pi = gfs.prod_interior(7)
    assert pi.coeff(5).coefficient(0, 3, 0) == 5
    assert pi.coeff(2) == mono(2)


def test_prod_interior_matches_enumeration():
    pi = gfs.prod_interior(10)
    for n in range(1, 10):
        assert pi.coeff(n) == histogram_poly(n, WordClass.AVOID_GEQ_GEQ, stat_inter)


def test_master_interior():
    m = gfs.master_interior_qv(9)
    assert m.eval_one("v") == gfs.prod_interior(9)
    plain = m.eval_one("v").eval_one("q")
    for n in range(1, 9):
        assert plain.coeff(n).as_scalar() == motzkin_by_recurrence(n)


def test_master_interior_last_letter_histogram():
    m = gfs.master_interior_qv(8)
    for n in range(1, 8):
        hist = MPoly.zero()
        for w in enumerate_words(n):
            hist = hist + mono(1, 0, stat_inter(w), stat_last(w))
        assert m.coeff(n) == hist


# derivative identities ----------------------------------------------------------


# fixed-point guard ------------------------------------------------------------


def test_fixed_point_no_convergence_guard():
    # an operator that keeps changing its own inputs can never stabilize;
    # the solver must refuse rather than loop forever
    from catpoly.mpoly import Caps
    from catpoly.series import Series  # noqa: F401  (same import path as the solver)

    caps = Caps.for_order(4)
    counter = {"n": 0}

    def contributions(coeffs, n):
        counter["n"] += 1
        return MPoly.scalar(counter["n"])

    with pytest.raises(NoConvergence):
        gfs._solve_fixed_point(4, caps, [MPoly.zero()], contributions)


def test_derivative_identity_semiperimeter():
    d = gfs.cf_S(31).derivative("p").eval_one("p")
    g = gfs.gf_s(31)
    for n in range(1, 31):
        assert d.coeff(n) == g.coeff(n)


def test_derivative_identity_last_letter():
    d = gfs.cf_C_last(31).derivative("v").eval_one("v")
    g = gfs.gf_h(31)
    for n in range(1, 31):
        assert d.coeff(n) == g.coeff(n)


def test_derivative_identity_area_and_interior():
    du = gfs.prod_area(10).derivative("q").eval_one("q")
    gu = gfs.gf_u(10)
    dp = gfs.prod_interior(10).derivative("q").eval_one("q")
    gp = gfs.gf_p(10)
    for n in range(1, 10):
        assert du.coeff(n) == gu.coeff(n)
        assert dp.coeff(n) == gp.coeff(n)
