"""Integer closed forms and asymptotic/expected-value diagnostics.

Every count here is a linear combination of central trinomial
coefficients (plus a power of 3 for the area and interior-point totals),
halved; the halving is guarded so that a transcription slip fails loudly
instead of silently corrupting output.
"""

import math
from fractions import Fraction
from functools import lru_cache

from .errors import InternalInconsistency


@lru_cache(maxsize=None)
def trinomial(n: int) -> int:
    """Central trinomial coefficient: [x^n] (1 + x + x^2)^n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return sum(math.comb(n, k) * math.comb(n - k, k) for k in range(n // 2 + 1))


@lru_cache(maxsize=None)
def motzkin(n: int) -> int:
    """n-th Motzkin number via the binomial sum; the division is exact."""
    if n < 0:
        raise ValueError("n must be >= 0")
    total = sum(
        math.comb(n + 1, i) * math.comb(n + 1 - i, i + 1)
        for i in range(n // 2 + 1)
    )
    q, r = divmod(total, n + 1)
    if r:
        raise InternalInconsistency(f"motzkin({n}): sum {total} not divisible by {n + 1}")
    return q


def _halved(name, n, value):
    q, r = divmod(value, 2)
    if r:
        raise InternalInconsistency(f"{name}({n}): odd numerator {value}")
    return q


def h_closed(n: int) -> int:
    """Total of the last letter over all avoiding words of length n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    T = [trinomial(n + k) for k in range(5)]
    return _halved("h_closed", n, -6 * T[0] - 7 * T[1] + 3 * T[2] + 3 * T[3] - T[4])


def s_closed(n: int) -> int:
    """Total semiperimeter over all avoiding words of length n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    T = [trinomial(n + k) for k in range(3)]
    return _halved("s_closed", n, -5 * T[0] - 4 * T[1] + 3 * T[2])


def u_closed(n: int) -> int:
    """Total area over all avoiding words of length n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    T = [trinomial(n + k) for k in range(5)]
    return _halved("u_closed", n, 3 ** (n + 1) + 2 * T[1] - T[2] - 3 * T[3] + T[4])


def p_closed(n: int) -> int:
    """Total number of interior points over all avoiding words of length n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    T = [trinomial(n + k) for k in range(5)]
    return _halved(
        "p_closed", n, 3 ** (n + 1) + 8 * T[0] + 8 * T[1] - 5 * T[2] - 3 * T[3] + T[4]
    )


# -- diagnostics (floating point; no exactness claimed) ------------------------


def asym_h(n: int) -> float:
    """Leading-order approximation of h_closed(n)."""
    return 2.0 * math.sqrt(3.0 / math.pi) * 3.0 ** (n + 1) / n**1.5


def asym_s(n: int) -> float:
    """Leading-order approximation of s_closed(n)."""
    return 2.5 * math.sqrt(3.0 / math.pi) * 3.0**n / math.sqrt(n)


def asym_up(n: int) -> float:
    """Leading-order approximation of both u_closed(n) and p_closed(n)."""
    return 3.0 ** (n + 1) / 2.0


def expected_last(n: int) -> Fraction:
    """Mean last letter over the avoiding words of length n (exact)."""
    return Fraction(h_closed(n), motzkin(n))


def expected_sper(n: int) -> Fraction:
    """Mean semiperimeter over the avoiding words of length n (exact)."""
    return Fraction(s_closed(n), motzkin(n))
