"""Pure-Python term-merge kernel.

Sparse polynomials in the markers (p, q, v) are dicts mapping a packed
exponent key to a nonzero coefficient (int or Fraction).  The packed
layout, shared with the compiled twin in ``_termops.pyx``:

    bits  0..19  v exponent      bit 20  guard
    bits 21..40  q exponent      bit 41  guard
    bits 42..51  p exponent      bit 52  guard

Guard bits let a single subtraction test all three per-variable caps at
once: for a product key ``k`` and a cap key carrying the guard bits set,
``(capkey - k) & GUARDS == GUARDS`` iff every exponent of ``k`` is within
its cap.  Caps are kept well below half the field widths, so sums of two
in-cap keys never carry across fields.
"""

VSHIFT = 0
QSHIFT = 21
PSHIFT = 42

VGUARD = 1 << 20
QGUARD = 1 << 41
PGUARD = 1 << 52
GUARDS = VGUARD | QGUARD | PGUARD

PFIELD = 10
QFIELD = 20
VFIELD = 20

MAXCAP_P = (1 << PFIELD) // 2 - 1
MAXCAP_Q = (1 << QFIELD) // 2 - 1
MAXCAP_V = (1 << VFIELD) // 2 - 1


def cap_key(cap_p, cap_q, cap_v):
    """Pack per-variable caps together with the guard bits."""
    if not (0 <= cap_p <= MAXCAP_P and 0 <= cap_q <= MAXCAP_Q and 0 <= cap_v <= MAXCAP_V):
        raise ValueError(f"caps out of range: {(cap_p, cap_q, cap_v)}")
    return PGUARD | (cap_p << PSHIFT) | QGUARD | (cap_q << QSHIFT) | VGUARD | cap_v


def mul_into(acc, a, b, capkey):
    """acc += a*b, dropping products whose exponents exceed the caps.

    ``acc``, ``a``, ``b`` are packed-key term dicts; ``acc`` is mutated.
    Zero coefficients may be left behind; callers clean them up.
    """
    if not a or not b:
        return
    if len(a) > len(b):
        a, b = b, a
    guards = GUARDS
    get = acc.get
    for k1, c1 in a.items():
        head = capkey - k1
        for k2, c2 in b.items():
            if (head - k2) & guards != guards:
                continue
            k = k1 + k2
            cur = get(k)
            if cur is None:
                acc[k] = c1 * c2
            else:
                acc[k] = cur + c1 * c2
