"""Power series in x truncated at a fixed order, with MPoly coefficients.

A series of order N carries the coefficients of x^0 .. x^(N-1).  All
operations truncate at that order and at the per-variable caps, both of
which commute with ring arithmetic.  Operands of binary operations must
share order and caps.
"""

from fractions import Fraction

from . import backend, mpoly
from .errors import (
    BadSqrtConstantTerm,
    InternalInconsistency,
    OrderMismatch,
)
from .mpoly import Caps, MPoly

_HALF = Fraction(1, 2)


class Series:
    __slots__ = ("order", "coeffs", "caps")

    def __init__(self, order, coeffs=None, caps=None):
        if order < 1:
            raise ValueError("series order must be >= 1")
        self.order = order
        self.caps = caps if caps is not None else Caps.for_order(order)
        if coeffs is None:
            self.coeffs = [MPoly.zero() for _ in range(order)]
        else:
            if len(coeffs) != order:
                raise ValueError("coefficient count must equal order")
            self.coeffs = list(coeffs)

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, order, caps=None):
        return cls(order, None, caps)

    @classmethod
    def from_x_polynomial(cls, order, poly_coeffs, caps=None):
        """Series whose x^n coefficient is poly_coeffs[n] (scalar or MPoly)."""
        s = cls.zero(order, caps)
        for n, c in enumerate(poly_coeffs):
            if n >= order:
                break
            s.coeffs[n] = c if isinstance(c, MPoly) else MPoly.scalar(c)
        return s

    def copy(self):
        return Series(self.order, list(self.coeffs), self.caps)

    # -- basics ----------------------------------------------------------

    def coeff(self, n):
        """The MPoly coefficient of x^n."""
        if not 0 <= n < self.order:
            raise OrderMismatch(f"coefficient {n} outside order {self.order}")
        return self.coeffs[n]

    def scalar_coeffs(self):
        return [c.as_scalar() for c in self.coeffs]

    def __eq__(self, other):
        if isinstance(other, Series):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def __repr__(self):
        inner = " + ".join(f"({c})x^{n}" for n, c in enumerate(self.coeffs) if c)
        return f"Series[{self.order}]({inner or '0'})"

    def is_zero(self):
        return not any(self.coeffs)

    def _check_compatible(self, other):
        if self.order != other.order or self.caps != other.caps:
            raise OrderMismatch(
                f"operands disagree: order {self.order} vs {other.order}, "
                f"caps {self.caps} vs {other.caps}"
            )

    # -- linear operations -------------------------------------------------

    def __add__(self, other):
        self._check_compatible(other)
        return Series(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)], self.caps)

    def __sub__(self, other):
        self._check_compatible(other)
        return Series(self.order, [a - b for a, b in zip(self.coeffs, other.coeffs)], self.caps)

    def __neg__(self):
        return Series(self.order, [-c for c in self.coeffs], self.caps)

    def scale(self, r):
        return Series(self.order, [c.scale(r) for c in self.coeffs], self.caps)

    # -- multiplicative operations ------------------------------------------

    def __mul__(self, other):
        self._check_compatible(other)
        capkey = self.caps.key
        n = self.order
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n):
            acc = {}
            for i in range(k + 1):
                ai = a[i].terms
                if ai:
                    backend.mul_into(acc, ai, b[k - i].terms, capkey)
            out.append(MPoly(acc))
        return Series(n, out, self.caps)

    def mul_monomial(self, c, dp=0, dq=0, dv=0, x_shift=0):
        """Multiply by c * x^x_shift * p^dp q^dq v^dv."""
        capkey = self.caps.key
        out = [MPoly.zero()] * min(x_shift, self.order)
        for n in range(self.order - x_shift):
            out.append(self.coeffs[n].mul_monomial(c, dp, dq, dv, capkey))
        return Series(self.order, out, self.caps)

    def div(self, other):
        """Series division; the divisor's constant term must be invertible."""
        self._check_compatible(other)
        capkey = self.caps.key
        bound = self.caps.p + self.caps.q + self.caps.v + 2
        inv0 = mpoly.invert(other.coeffs[0], capkey, bound)
        n = self.order
        b = other.coeffs
        out = []
        for k in range(n):
            acc = {}
            for i in range(k):
                qi = out[i].terms
                if qi:
                    backend.mul_into(acc, qi, b[k - i].terms, capkey)
            residue = self.coeffs[k] - MPoly(acc)
            out.append(residue.mul(inv0, capkey))
        return Series(n, out, self.caps)

    def inverse(self):
        one = Series.from_x_polynomial(self.order, [1], self.caps)
        return one.div(self)

    def sqrt(self):
        """Square root of a series with constant term exactly 1."""
        if self.coeffs[0] != MPoly.scalar(1):
            raise BadSqrtConstantTerm(f"constant term is {self.coeffs[0]}, not 1")
        capkey = self.caps.key
        out = [MPoly.scalar(1)]
        for k in range(1, self.order):
            acc = {}
            for i in range(1, k):
                backend.mul_into(acc, out[i].terms, out[k - i].terms, capkey)
            out.append((self.coeffs[k] - MPoly(acc)).scale(_HALF))
        return Series(self.order, out, self.caps)

    # -- marker operations ----------------------------------------------------

    def derivative(self, var):
        return Series(self.order, [c.derivative(var) for c in self.coeffs], self.caps)

    def eval_one(self, var):
        return Series(self.order, [c.eval_one(var) for c in self.coeffs], self.caps)

    def subst_x_scale(self, j):
        """x -> x * q^j."""
        if j == 0:
            return self
        capkey = self.caps.key
        out = [c.mul_monomial(1, 0, j * n, 0, capkey) for n, c in enumerate(self.coeffs)]
        return Series(self.order, out, self.caps)

    def subst_v_monomial(self, k):
        """v -> q^k * v."""
        capkey = self.caps.key
        return Series(self.order, [c.subst_v_monomial(k, capkey) for c in self.coeffs], self.caps)

    def subst_v_to_q(self):
        """v -> q."""
        capkey = self.caps.key
        return Series(self.order, [c.subst_v_to_q(capkey) for c in self.coeffs], self.caps)

    # -- exactness-guarded divisions ----------------------------------------

    def divide_by_x_power(self, k):
        """Divide by x^k; the k lowest coefficients must vanish.

        The result is honest about what is known: its order drops by k.
        """
        for n in range(k):
            if self.coeffs[n]:
                raise InternalInconsistency(
                    f"x^{n} coefficient {self.coeffs[n]} nonzero; cannot divide by x^{k}"
                )
        return Series(self.order - k, self.coeffs[k:], self.caps)

    def divide_coeffs_monomial(self, c, dp=0, dq=0, dv=0):
        """Divide every coefficient by c * p^dp q^dq v^dv, exactly."""
        return Series(
            self.order,
            [co.divide_monomial(c, dp, dq, dv) for co in self.coeffs],
            self.caps,
        )

    def truncate(self, order):
        if order > self.order:
            raise OrderMismatch(f"cannot extend order {self.order} to {order}")
        return Series(order, self.coeffs[:order], self.caps)
