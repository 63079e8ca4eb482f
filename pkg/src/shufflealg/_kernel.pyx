# cython: language_level=3, boundscheck=False, wraparound=False
"""Sparse integer polynomials in (u, t), compiled kernel.

Same contract as _kernel_py: dicts {packed key: nonzero int coefficient},
key = (eu << 32) | et, keys compare in lex order with u before t.
Coefficients stay Python ints (they are unbounded); the speedup comes
from typed loops and avoiding interpreter dispatch.
"""

DEF SHIFT = 32

KEY_SHIFT = 32
KEY_MASK = (1 << 32) - 1

IS_COMPILED = True


def pack(eu, et):
    return (eu << SHIFT) | et


def unpack(key):
    return key >> SHIFT, key & KEY_MASK


cpdef dict p_add(dict a, dict b):
    cdef dict out
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    out = dict(a)
    cdef object k, c, s
    for k, c in b.items():
        s = out.get(k)
        if s is None:
            out[k] = c
        else:
            s = s + c
            if s:
                out[k] = s
            else:
                del out[k]
    return out


cpdef dict p_neg(dict a):
    cdef dict out = {}
    cdef object k, c
    for k, c in a.items():
        out[k] = -c
    return out


cpdef dict p_sub(dict a, dict b):
    cdef dict out = dict(a)
    cdef object k, c, s
    for k, c in b.items():
        s = out.get(k)
        if s is None:
            out[k] = -c
        else:
            s = s - c
            if s:
                out[k] = s
            else:
                del out[k]
    return out


cpdef dict p_scale(dict a, object c):
    cdef dict out = {}
    cdef object k, v
    if c == 0:
        return out
    if c == 1:
        return dict(a)
    for k, v in a.items():
        out[k] = v * c
    return out


cpdef dict p_mul_mono(dict a, object key, object c):
    cdef dict out = {}
    cdef object k, v
    if c == 0:
        return out
    for k, v in a.items():
        out[k + key] = v * c
    return out


cpdef dict p_mul(dict a, dict b):
    cdef dict out = {}
    cdef object ka, ca, kb, cb, k, s
    if not a or not b:
        return out
    if len(a) > len(b):
        a, b = b, a
    if len(a) == 1:
        for ka, ca in a.items():
            return p_mul_mono(b, ka, ca)
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = ka + kb
            s = out.get(k)
            if s is None:
                out[k] = ca * cb
            else:
                s = s + ca * cb
                if s:
                    out[k] = s
                else:
                    del out[k]
    return out


def p_divexact(dict a, dict b):
    """Quotient a/b when b divides a exactly, else None."""
    cdef dict rem, quo
    cdef object ka, ca, kb, cb, kq, cq, k, c, kk, s
    cdef long long eu_a, et_a, eu_b, et_b
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return {}
    kb = max(b)
    cb = b[kb]
    eu_b = kb >> SHIFT
    et_b = kb & KEY_MASK
    rem = dict(a)
    quo = {}
    while rem:
        ka = max(rem)
        ca = rem[ka]
        eu_a = ka >> SHIFT
        et_a = ka & KEY_MASK
        if eu_a < eu_b or et_a < et_b or ca % cb:
            return None
        kq = ((eu_a - eu_b) << SHIFT) | (et_a - et_b)
        cq = ca // cb
        quo[kq] = cq
        for k, c in b.items():
            kk = k + kq
            s = rem.get(kk)
            if s is None:
                rem[kk] = -(c * cq)
            else:
                s = s - c * cq
                if s:
                    rem[kk] = s
                else:
                    del rem[kk]
    return quo
