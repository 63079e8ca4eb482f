"""The compiled kernel and the pure fallback must agree operation by operation."""

import random

import pytest

from shufflealg import _kernel_py

compiled = pytest.importorskip("shufflealg._kernel")


def _rand_poly(rng, terms):
    out = {}
    for _ in range(terms):
        out[_kernel_py.pack(rng.randint(0, 12), rng.randint(0, 6))] = rng.randint(-9, 9) or 3
    return out


def test_pack_unpack():
    for eu, et in ((0, 0), (3, 5), (100, 7)):
        assert compiled.unpack(compiled.pack(eu, et)) == (eu, et)
        assert compiled.pack(eu, et) == _kernel_py.pack(eu, et)


def test_kernels_agree():
    rng = random.Random(0)
    for _ in range(200):
        a, b = _rand_poly(rng, rng.randint(0, 8)), _rand_poly(rng, rng.randint(1, 6))
        assert compiled.p_add(a, b) == _kernel_py.p_add(a, b)
        assert compiled.p_sub(a, b) == _kernel_py.p_sub(a, b)
        assert compiled.p_neg(a) == _kernel_py.p_neg(a)
        assert compiled.p_mul(a, b) == _kernel_py.p_mul(a, b)
        prod = _kernel_py.p_mul(a, b)
        assert compiled.p_divexact(prod, b) == _kernel_py.p_divexact(prod, b)
        assert compiled.p_scale(a, 7) == _kernel_py.p_scale(a, 7)


def test_divexact_rejects_nondivisible():
    a = {_kernel_py.pack(1, 0): 1}        # u
    b = {_kernel_py.pack(0, 1): 1}        # t
    assert _kernel_py.p_divexact(a, b) is None
    assert compiled.p_divexact(a, b) is None
    with pytest.raises(ZeroDivisionError):
        _kernel_py.p_divexact(a, {})


def test_big_coefficients_stay_exact():
    big = 10 ** 40
    a = {_kernel_py.pack(2, 1): big}
    b = {_kernel_py.pack(1, 1): big}
    assert compiled.p_mul(a, b) == {_kernel_py.pack(3, 2): big * big}
    assert compiled.p_divexact(compiled.p_mul(a, b), b) == a
