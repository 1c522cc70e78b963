"""Constructors for every generating function of the library.

Conventions: x marks the length, p the semiperimeter, v the last letter;
q marks the area in the area-flavoured series and the number of interior
points in the interior-flavoured ones (the two families never mix).
Internally each constructor may work at a padded order so that guarded
divisions by powers of x lose nothing.
"""

from fractions import Fraction

from .errors import DepthTooShallow, NoConvergence
from .mpoly import Caps, MPoly
from .series import Series

_HALF = Fraction(1, 2)


def _sqrt_base(order, caps):
    """sqrt(1 - 2x - 3x^2)."""
    return Series.from_x_polynomial(order, [1, -2, -3], caps).sqrt()


def gf_motzkin(order, caps=None):
    """Motzkin number series (1 - x - sqrt(1-2x-3x^2)) / (2x^2)."""
    work = order + 2
    caps = caps or Caps.for_order(work)
    num = Series.from_x_polynomial(work, [1, -1], caps) - _sqrt_base(work, caps)
    return num.divide_by_x_power(2).scale(_HALF)


def gf_trinomial(order, caps=None):
    """Central trinomial series 1 / sqrt(1-2x-3x^2)."""
    caps = caps or Caps.for_order(order)
    return _sqrt_base(order, caps).inverse()


def gf_h(order, caps=None):
    """Series of the last-letter totals h(n)."""
    work = order + 4
    caps = caps or Caps.for_order(work)
    s = _sqrt_base(work, caps)
    left = Series.from_x_polynomial(work, [-1, 2], caps) * s
    num = left + Series.from_x_polynomial(work, [1, -3, 0, 2], caps)
    num = num * Series.from_x_polynomial(work, [1, 1], caps)
    return num.divide_by_x_power(4).scale(_HALF)


def gf_s(order, caps=None):
    """Series of the semiperimeter totals s(n)."""
    work = order + 2
    caps = caps or Caps.for_order(work)
    trino = gf_trinomial(work, caps)
    num = Series.from_x_polynomial(work, [3, -4, -5], caps) * trino
    num = num + Series.from_x_polynomial(work, [-3, 1], caps)
    return num.divide_by_x_power(2).scale(_HALF)


def _total_over_shifted_kernel(order, caps, sqrt_factor, plain_part):
    # common tail of gf_u / gf_p: divide by 2x^4(3x^2 + 2x - 1)
    work = order + 4
    s = _sqrt_base(work, caps)
    num = Series.from_x_polynomial(work, sqrt_factor, caps) * s
    num = num + Series.from_x_polynomial(work, plain_part, caps)
    unit = Series.from_x_polynomial(work, [-1, 2, 3], caps)
    return num.div(unit).divide_by_x_power(4).scale(_HALF)


def gf_u(order, caps=None):
    """Series of the area totals u(n)."""
    caps = caps or Caps.for_order(order + 4)
    return _total_over_shifted_kernel(
        order, caps, [-1, 3, 1, -2], [1, -4, 0, 7, 2]
    )


def gf_p(order, caps=None):
    """Series of the interior-point totals p(n)."""
    caps = caps or Caps.for_order(order + 4)
    return _total_over_shifted_kernel(
        order, caps, [-1, 3, 5, -8, -8], [1, -4, -4, 17, 12, -10, -6]
    )


# -- multivariate masters (fixed-point solutions of the functional equations) --


def _geom_qv(caps):
    """Truncated geometric series 1/(1-qv) = sum_k (qv)^k under the caps."""
    top = min(caps.v, caps.q)
    return MPoly({(k << 21) | k: 1 for k in range(top + 1)})


def _solve_fixed_point(order, caps, base, contributions):
    """Iterate F -> base + sum of contributions(F) until the series is stable.

    ``contributions(F, n)`` returns the x^n coefficient of the non-constant
    right-hand side, which by construction only reads F at orders n-1 and
    n-2; once those inputs stop changing the output cannot change, so the
    iteration tracks the changed set instead of recomputing every order.
    A final full application re-checks stability against the operator
    itself, so a contribution function that breaks the locality contract
    fails loudly instead of returning a non-fixed point.
    """

    def rhs(coeffs, n):
        head = base[n] if n < len(base) else MPoly.zero()
        return head + contributions(coeffs, n)

    coeffs = [MPoly.zero() for _ in range(order)]
    pending = set(range(order))
    for _ in range(order + 1):
        if not pending:
            break
        changed = set()
        for n in sorted(pending):
            new = rhs(coeffs, n)
            if new != coeffs[n]:
                coeffs[n] = new
                changed.add(n)
        pending = {m for n in changed for m in (n + 1, n + 2) if m < order}
    else:
        raise NoConvergence(order)
    if any(rhs(coeffs, n) != coeffs[n] for n in range(order)):
        raise NoConvergence(order)
    return Series(order, coeffs, caps)


def master_pqv(order, caps=None):
    """Length/semiperimeter/area/last-letter master series.

    Solves, by fixed point, the self-substitution equation whose right side
    feeds the series back at v:=q, v:=qv and v:=q^2 v with the prefactors
    p^2 q x, p^3 q^2 x^2, p^3q^3x^2/(1-qv), p^2q^2xv and -p^3q^5x^2v^2/(1-qv).
    """
    caps = caps or Caps.for_order(order)
    capkey = caps.key
    geom = _geom_qv(caps)
    g_plus = geom.mul_monomial(1, 3, 3, 0, capkey)
    g_minus = geom.mul_monomial(1, 3, 5, 2, capkey)
    base = [MPoly.zero(), MPoly.monomial(1, 2, 1, 0), MPoly.monomial(1, 3, 2, 0)]

    def contributions(coeffs, n):
        out = MPoly.zero()
        if n >= 1:
            out = out + coeffs[n - 1].subst_v_monomial(1, capkey).mul_monomial(
                1, 2, 2, 1, capkey
            )
        if n >= 2:
            prev = coeffs[n - 2]
            out = out + prev.subst_v_to_q(capkey).mul(g_plus, capkey)
            out = out - prev.subst_v_monomial(2, capkey).mul(g_minus, capkey)
        return out

    return _solve_fixed_point(order, caps, base, contributions)


def master_interior_qv(order, caps=None):
    """Length/interior-points/last-letter master series (q marks interior points)."""
    caps = caps or Caps.for_order(order)
    capkey = caps.key
    geom = _geom_qv(caps)
    g_minus = geom.mul_monomial(1, 0, 2, 2, capkey)
    base = [MPoly.zero(), MPoly.scalar(1), MPoly.scalar(1)]

    def contributions(coeffs, n):
        out = MPoly.zero()
        if n >= 1:
            out = out + coeffs[n - 1].subst_v_monomial(1, capkey).mul_monomial(
                1, 0, 0, 1, capkey
            )
        if n >= 2:
            prev = coeffs[n - 2]
            out = out + prev.subst_v_to_q(capkey).mul(geom, capkey)
            out = out - prev.subst_v_monomial(2, capkey).mul(g_minus, capkey)
        return out

    return _solve_fixed_point(order, caps, base, contributions)


# -- closed forms from the kernel method ---------------------------------------


def _sqrt_sper_kernel(order, caps):
    """sqrt(1 - 2p^2 x + (p^4 - 4p^3) x^2)."""
    x2 = MPoly.monomial(1, 4, 0, 0) + MPoly.monomial(-4, 3, 0, 0)
    base = Series.from_x_polynomial(order, [1, MPoly.monomial(-2, 2, 0, 0), x2], caps)
    return base.sqrt()


def cf_S(order, caps=None):
    """Length/semiperimeter series in closed form."""
    work = order + 2
    caps = caps or Caps.for_order(work)
    poly = Series.from_x_polynomial(
        work, [1, MPoly.monomial(-1, 2, 0, 0), MPoly.monomial(-2, 3, 0, 0)], caps
    )
    num = poly - _sqrt_sper_kernel(work, caps)
    return num.divide_by_x_power(2).divide_coeffs_monomial(2, 3, 0, 0)


def cf_C_sper_v(order, caps=None):
    """Length/semiperimeter/last-letter series in closed form."""
    caps = caps or Caps.for_order(order)
    p2 = MPoly.monomial(1, 2, 0, 0)
    p2v = MPoly.monomial(1, 2, 0, 1)
    p3v = MPoly.monomial(1, 3, 0, 1)
    num = Series.from_x_polynomial(
        order, [1, p2 - p2v.scale(2), p3v.scale(-2)], caps
    ) - _sqrt_sper_kernel(order, caps)
    one_minus_v = MPoly.scalar(1) - MPoly.monomial(1, 0, 0, 1)
    den = Series.from_x_polynomial(
        order,
        [
            one_minus_v.scale(2),
            MPoly.monomial(-2, 2, 0, 1) + MPoly.monomial(2, 2, 0, 2),
            MPoly.monomial(2, 3, 0, 2),
        ],
        caps,
    )
    return num.div(den)


def cf_C_last(order, caps=None):
    """Length/last-letter series in closed form (built on the Motzkin series)."""
    caps = caps or Caps.for_order(order + 2)
    motz = gf_motzkin(order, caps)
    v = MPoly.monomial(1, 0, 0, 1)
    one_minus_v = MPoly.scalar(1) - v
    num = Series.from_x_polynomial(order, [0, one_minus_v, -v], caps)
    num = num + motz.mul_monomial(1, x_shift=2)
    den = Series.from_x_polynomial(
        order,
        [one_minus_v, (-v).mul(one_minus_v), v.mul(v)],
        caps,
    )
    return num.div(den)


def kernel_root_v0(order, caps=None):
    """Small root of the semiperimeter kernel, as a series in x.

    Substituting it for v annihilates the kernel (checked via
    kernel_residual, in denominator-cleared form).
    """
    work = order + 1
    caps = caps or Caps.for_order(work)
    num = Series.from_x_polynomial(
        work, [1, MPoly.monomial(1, 2, 0, 0)], caps
    ) - _sqrt_sper_kernel(work, caps)
    root = num.divide_by_x_power(1).divide_coeffs_monomial(2, 2, 0, 0)
    unit = Series.from_x_polynomial(order, [1, MPoly.monomial(1, 1, 0, 0)], caps)
    return root.div(unit)


def kernel_residual(order, caps=None):
    """(1 - v0)(1 - p^2 x v0) + p^3 x^2 v0^2, which must vanish mod x^order.

    This is the kernel 1 - p^2 x v + p^3 x^2 v^2/(1-v) multiplied through
    by (1 - v): the root has constant term 1, so 1/(1 - v0) is not itself
    a power series and the cleared form is the faithful annihilation test.
    """
    v0 = kernel_root_v0(order, caps)
    caps = v0.caps
    one = Series.from_x_polynomial(order, [1], caps)
    p2xv0 = v0.mul_monomial(1, 2, 0, 0, x_shift=1)
    p3x2v0sq = (v0 * v0).mul_monomial(1, 3, 0, 0, x_shift=2)
    return (one - v0) * (one - p2xv0) + p3x2v0sq


# -- area flavour ---------------------------------------------------------------


def _geom_q_power(step, caps):
    """1/(1 - q^step) as a q-power series under the caps."""
    return MPoly({(k << 21): 1 for k in range(0, caps.q + 1, step)} if step else {0: 1})


def sum_B(order, caps=None):
    """Length/area series of the words whose last two letters strictly rise.

    Ratio of two alternating sums whose j-th terms carry x^j and the
    partial products of (1 - q^i + q^(2i)) / (1 - q^i).
    """
    caps = caps or Caps.for_order(order)
    capkey = caps.key
    num = Series.zero(order, caps)
    den = Series.zero(order, caps)
    prod = MPoly.scalar(1)
    for j in range(1, order):
        if j > 1:
            i = j - 1
            factor = (
                MPoly.scalar(1)
                - MPoly.monomial(1, 0, i, 0)
                + MPoly.monomial(1, 0, 2 * i, 0)
            ).mul(_geom_q_power(i, caps), capkey)
            prod = prod.mul(factor, capkey)
        sign = 1 if j % 2 == 1 else -1
        num.coeffs[j] = prod.mul_monomial(sign, 0, j, 0, capkey)
        den.coeffs[j] = num.coeffs[j].mul(_geom_q_power(j, caps), capkey)
    one = Series.from_x_polynomial(order, [1], caps)
    return num.div(one - den)


def cf_B_contfrac(order, depth, caps=None):
    """The same series evaluated from its continued fraction, bottom-up.

    Level j carries q^j x, so any depth >= order reproduces sum_B exactly.
    """
    if depth < order:
        raise DepthTooShallow(f"depth {depth} < order {order}")
    caps = caps or Caps.for_order(order)
    one = Series.from_x_polynomial(order, [1], caps)

    def level(j):
        return Series.from_x_polynomial(order, [1, MPoly.monomial(1, 0, j, 0)], caps)

    d = level(depth)
    for j in range(depth - 1, 0, -1):
        # (1 + q^j x) - (1 + q^j x) q^(j+1) x / d
        lvl = level(j)
        d = lvl - lvl.mul_monomial(1, 0, j + 1, 0, x_shift=1).div(d)
    result = one.div(one - Series.from_x_polynomial(order, [0, MPoly.monomial(1, 0, 1, 0)], caps).div(d))
    return result - one


def prod_area(order, caps=None):
    """Length/area series of all avoiding words: the telescoped product form."""
    caps = caps or Caps.for_order(order)
    one = Series.from_x_polynomial(order, [1], caps)
    b = sum_B(order, caps)
    acc = Series.zero(order, caps)
    partial = one
    for i in range(1, order):
        partial = partial * (one + b.subst_x_scale(i - 1))
        acc = acc + partial.mul_monomial(1, 0, i * (i + 1) // 2, 0, x_shift=i)
    return acc


# -- interior-point flavour ------------------------------------------------------


def sum_H(order, caps=None):
    """Length/interior-points series of the strictly-rising-tail words."""
    caps = caps or Caps.for_order(order)
    capkey = caps.key
    num = Series.zero(order, caps)
    den = Series.zero(order, caps)
    prod = MPoly.scalar(1)
    for j in range(1, order):
        if j > 1:
            i = j - 1
            factor = MPoly.monomial(1, 0, i - 1, 0) - _geom_q_power(i, caps)
            prod = prod.mul(factor, capkey)
        num.coeffs[j] = prod
        den.coeffs[j] = prod.mul(_geom_q_power(j, caps), capkey)
    one = Series.from_x_polynomial(order, [1], caps)
    return num.div(one - den)


def prod_interior(order, caps=None):
    """Length/interior-points series of all avoiding words."""
    caps = caps or Caps.for_order(order)
    one = Series.from_x_polynomial(order, [1], caps)
    h = sum_H(order, caps)
    acc = Series.zero(order, caps)
    partial = one
    for i in range(1, order):
        partial = partial * (one + h.subst_x_scale(i - 1))
        acc = acc + partial.mul_monomial(1, 0, (i - 2) * (i - 1) // 2, 0, x_shift=i)
    return acc
