"""Sparse polynomials in the three markers p, q, v over exact rationals.

p marks the semiperimeter, q the area (or the interior points, depending
on the series being built) and v the value of the last letter.  Terms are
stored as a dict from a packed exponent key (see ``_termops_py`` for the
layout) to a nonzero int or Fraction coefficient, so equality is plain
dict equality and the hot multiply kernel can run on machine integers.
"""

from fractions import Fraction
from typing import NamedTuple

from . import backend
from ._termops_py import (
    GUARDS,
    MAXCAP_P,
    MAXCAP_Q,
    MAXCAP_V,
    PSHIFT,
    QSHIFT,
    VSHIFT,
    cap_key,
)
from .errors import InternalInconsistency, NonUnitDivisor

_PMASK = (1 << 10) - 1
_QMASK = (1 << 20) - 1
_VMASK = (1 << 20) - 1

_SHIFTS = {"p": PSHIFT, "q": QSHIFT, "v": VSHIFT}
_MASKS = {"p": _PMASK, "q": _QMASK, "v": _VMASK}


def pack(dp=0, dq=0, dv=0):
    """Pack an exponent triple into a single integer key."""
    if dp < 0 or dq < 0 or dv < 0 or dp > MAXCAP_P or dq > MAXCAP_Q or dv > MAXCAP_V:
        raise ValueError(f"exponents out of range: {(dp, dq, dv)}")
    return (dp << PSHIFT) | (dq << QSHIFT) | dv


def unpack(key):
    return (key >> PSHIFT) & _PMASK, (key >> QSHIFT) & _QMASK, key & _VMASK


class Caps(NamedTuple):
    """Per-variable degree bounds under which all series arithmetic runs.

    Truncating every exponent above its cap is a quotient-ring map, so it
    commutes with ring operations; the defaults below are the exact maxima
    the statistics can reach at length N (semiperimeter 2N, area N(N+1)/2,
    last letter N-1), so no genuine term is ever dropped.
    """

    p: int
    q: int
    v: int

    @classmethod
    def for_order(cls, order):
        return cls(p=min(2 * order, MAXCAP_P), q=min(order * (order + 1) // 2, MAXCAP_Q), v=min(order, MAXCAP_V))

    @property
    def key(self):
        return cap_key(self.p, self.q, self.v)


CAPS_UNBOUNDED = Caps(MAXCAP_P, MAXCAP_Q, MAXCAP_V)


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _cleaned(d):
    return {k: _norm(c) for k, c in d.items() if c != 0}


class MPoly:
    """Immutable-by-convention sparse polynomial in p, q, v."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = _cleaned(terms) if terms else {}

    @classmethod
    def _raw(cls, terms):
        # internal: terms already cleaned
        m = object.__new__(cls)
        m.terms = terms
        return m

    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def scalar(cls, c):
        c = _norm(c)
        return cls._raw({0: c} if c != 0 else {})

    @classmethod
    def monomial(cls, c, dp=0, dq=0, dv=0):
        c = _norm(c)
        return cls._raw({pack(dp, dq, dv): c} if c != 0 else {})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        get = out.get
        for k, c in other.terms.items():
            cur = get(k)
            s = c if cur is None else cur + c
            if s == 0:
                out.pop(k, None)
            else:
                out[k] = _norm(s)
        return MPoly._raw(out)

    def __sub__(self, other):
        out = dict(self.terms)
        get = out.get
        for k, c in other.terms.items():
            cur = get(k)
            s = -c if cur is None else cur - c
            if s == 0:
                out.pop(k, None)
            else:
                out[k] = _norm(s)
        return MPoly._raw(out)

    def __neg__(self):
        return MPoly._raw({k: -c for k, c in self.terms.items()})

    def mul(self, other, capkey=CAPS_UNBOUNDED.key):
        acc = {}
        backend.mul_into(acc, self.terms, other.terms, capkey)
        return MPoly._raw(_cleaned(acc))

    def __mul__(self, other):
        return self.mul(other)

    def scale(self, c):
        c = _norm(c)
        if c == 0:
            return MPoly.zero()
        if c == 1:
            return self
        return MPoly._raw({k: _norm(v * c) for k, v in self.terms.items()})

    def mul_monomial(self, c, dp=0, dq=0, dv=0, capkey=CAPS_UNBOUNDED.key):
        """Multiply by c * p^dp q^dq v^dv, dropping terms beyond the caps."""
        if c == 0:
            return MPoly.zero()
        shift = pack(dp, dq, dv)
        out = {}
        for k, v in self.terms.items():
            nk = k + shift
            if (capkey - nk) & GUARDS != GUARDS:
                continue
            out[nk] = _norm(v * c)
        return MPoly._raw(_cleaned(out))

    def divide_monomial(self, c, dp=0, dq=0, dv=0):
        """Exact division by c * p^dp q^dq v^dv.

        Raises InternalInconsistency when some term lacks the required
        exponents; this is the loud-failure guard for transcription slips.
        """
        shift = pack(dp, dq, dv)
        out = {}
        for k, v in self.terms.items():
            ep, eq, ev = unpack(k)
            if ep < dp or eq < dq or ev < dv:
                raise InternalInconsistency(
                    f"term p^{ep}q^{eq}v^{ev} not divisible by p^{dp}q^{dq}v^{dv}"
                )
            out[k - shift] = v
        if c != 1:
            inv = Fraction(1, 1) / c
            out = {k: _norm(v * inv) for k, v in out.items()}
        return MPoly._raw(out)

    def eval_one(self, var):
        """Set the given marker to 1 (merging terms)."""
        mask = _MASKS[var] << _SHIFTS[var]
        out = {}
        get = out.get
        for k, c in self.terms.items():
            nk = k & ~mask
            cur = get(nk)
            s = c if cur is None else cur + c
            if s == 0:
                out.pop(nk, None)
            else:
                out[nk] = _norm(s)
        return MPoly._raw(out)

    def subst_v_monomial(self, j, capkey=CAPS_UNBOUNDED.key):
        """v -> q^j * v."""
        if j == 0:
            return self
        out = {}
        get = out.get
        for k, c in self.terms.items():
            ev = k & _VMASK
            nk = k + ((j * ev) << QSHIFT)
            if (capkey - nk) & GUARDS != GUARDS:
                continue
            cur = get(nk)
            out[nk] = c if cur is None else _norm(cur + c)
        return MPoly._raw(_cleaned(out))

    def subst_v_to_q(self, capkey=CAPS_UNBOUNDED.key):
        """v -> q (exponent transfer v^e -> q^e)."""
        out = {}
        get = out.get
        for k, c in self.terms.items():
            ev = k & _VMASK
            nk = (k - ev) + (ev << QSHIFT)
            if (capkey - nk) & GUARDS != GUARDS:
                continue
            cur = get(nk)
            out[nk] = c if cur is None else _norm(cur + c)
        return MPoly._raw(_cleaned(out))

    def derivative(self, var):
        """Formal derivative with respect to one marker."""
        shift = _SHIFTS[var]
        mask = _MASKS[var]
        out = {}
        get = out.get
        for k, c in self.terms.items():
            e = (k >> shift) & mask
            if e == 0:
                continue
            nk = k - (1 << shift)
            cur = get(nk)
            s = c * e if cur is None else cur + c * e
            out[nk] = _norm(s)
        return MPoly._raw(_cleaned(out))

    def degree(self, var):
        shift = _SHIFTS[var]
        mask = _MASKS[var]
        return max(((k >> shift) & mask for k in self.terms), default=0)

    def scalar_part(self):
        return self.terms.get(0, 0)

    def is_scalar(self):
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def as_scalar(self):
        if not self.is_scalar():
            raise ValueError(f"not a scalar polynomial: {self}")
        return self.terms.get(0, 0)

    def coefficient(self, dp=0, dq=0, dv=0):
        return self.terms.get(pack(dp, dq, dv), 0)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms):
            c = self.terms[k]
            ep, eq, ev = unpack(k)
            factors = "".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in (("p", ep), ("q", eq), ("v", ev))
                if e
            )
            if not factors:
                body = str(c)
            elif c == 1:
                body = factors
            elif c == -1:
                body = "-" + factors
            else:
                body = f"{c}{factors}"
            if parts and not body.startswith("-"):
                parts.append("+" + body)
            else:
                parts.append(body)
        return "".join(parts)

    def __repr__(self):
        return f"MPoly({self})"


def invert(m, capkey, iteration_bound):
    """Multiplicative inverse of an MPoly with invertible scalar part.

    Works in the capped quotient ring: the non-scalar part is nilpotent
    there, so a finite Neumann series terminates.
    """
    s = m.scalar_part()
    if s == 0:
        raise NonUnitDivisor(f"no scalar term in {m}")
    inv_s = Fraction(1, 1) / s
    rest = m - MPoly.scalar(s)
    if not rest:
        return MPoly.scalar(inv_s)
    t = rest.scale(-inv_s)  # m = s(1 - t)
    result = MPoly.scalar(1)
    power = MPoly.scalar(1)
    for _ in range(iteration_bound):
        power = power.mul(t, capkey)
        if not power:
            return result.scale(inv_s)
        result = result + power
    raise InternalInconsistency(f"inverse of {m} did not terminate under caps")
