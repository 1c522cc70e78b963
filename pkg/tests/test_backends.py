"""The compiled and pure-Python term kernels must be interchangeable."""

import random
from fractions import Fraction

import pytest

from catpoly import _termops_py, backend
from catpoly.mpoly import Caps, pack

compiled = pytest.importorskip("catpoly._termops", reason="compiled kernel not built")


def random_terms(rng, size, maxdeg):
    out = {}
    for _ in range(size):
        key = pack(rng.randrange(maxdeg), rng.randrange(maxdeg), rng.randrange(maxdeg))
        coeff = rng.randrange(-50, 51)
        if rng.random() < 0.2:
            coeff = Fraction(coeff, rng.randrange(1, 7))
        if coeff:
            out[key] = coeff
    return out


def test_backends_agree_on_random_inputs():
    rng = random.Random(20240817)
    caps = Caps(6, 6, 6)
    for _ in range(200):
        a = random_terms(rng, rng.randrange(0, 12), 5)
        b = random_terms(rng, rng.randrange(0, 12), 5)
        acc_py = {pack(1, 1, 1): 7}
        acc_c = {pack(1, 1, 1): 7}
        _termops_py.mul_into(acc_py, a, b, caps.key)
        compiled.mul_into(acc_c, a, b, caps.key)
        assert acc_py == acc_c


def test_backends_agree_unbounded():
    rng = random.Random(7)
    capkey = Caps(400, 4000, 400).key
    for _ in range(50):
        a = random_terms(rng, 8, 12)
        b = random_terms(rng, 8, 12)
        acc_py, acc_c = {}, {}
        _termops_py.mul_into(acc_py, a, b, capkey)
        compiled.mul_into(acc_c, a, b, capkey)
        assert acc_py == acc_c


def test_cap_filtering_drops_out_of_range_products():
    caps = Caps(2, 2, 2)
    a = {pack(2, 0, 0): 1}
    b = {pack(1, 0, 0): 1, pack(0, 1, 0): 1}
    acc = {}
    compiled.mul_into(acc, a, b, caps.key)
    # p^3 exceeds the cap; p^2 q survives
    assert acc == {pack(2, 1, 0): 1}


def test_selected_backend_reports_name():
    assert backend.BACKEND in ("compiled", "python")
    impls = backend.available_backends()
    assert "python" in impls
