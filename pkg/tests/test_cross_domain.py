"""Exact computations specialize to fast-mode computations.

Running any operator word exactly and then evaluating every coefficient at
(q0, t0) must agree with running the same word over Fractions from the
start.  This pins down that nothing in the stack depends on the scalar
representation.
"""

import random
from fractions import Fraction

from shufflealg import actions as ac
from shufflealg import combinat as cb
from shufflealg import sweep as sw
from shufflealg import vkspace as vk
from shufflealg.scalars import ExactDomain, FastDomain
from shufflealg.vkspace import VElem

U0 = Fraction(3, 7)
T0 = Fraction(5, 11)


def _specialize(f: VElem, fdom) -> VElem:
    q0 = U0 * U0
    return VElem(fdom, f.k, f.cap,
                 {key: v for key, v in ((key, c.eval_at(q0, T0))
                                        for key, c in f.terms.items()) if v})


def _random_word(rng, k_start, length):
    word = []
    k = k_start
    for _ in range(length):
        choices = [("dp",), ("dps",)]
        if k >= 1:
            choices += [("dm",), ("y", rng.randint(1, k)), ("z", rng.randint(1, k)),
                        ("yt", rng.randint(1, k))]
        if k >= 2:
            choices += [("T", rng.randint(1, k - 1)), ("Ti", rng.randint(1, k - 1))]
        gen = rng.choice(choices)
        word.append(gen)
        k += vk.GEN_ARITY[gen[0]]
    return tuple(reversed(word)), k


def test_random_words_specialize():
    rng = random.Random(2026)
    dom = ExactDomain()
    fdom = FastDomain(u0=U0, t0=T0)
    for _ in range(40):
        k0 = rng.randint(0, 2)
        word, _ = _random_word(rng, k0, rng.randint(1, 6))
        for base_ex, base_fa in zip(vk.spanning_set(dom, k0, 1, cap=8),
                                    vk.spanning_set(fdom, k0, 1, cap=8)):
            got = _specialize(vk.apply_word(base_ex, word), fdom)
            want = vk.apply_word(base_fa, word)
            assert got == want, word


def test_pipeline_outputs_specialize():
    dom = ExactDomain()
    fdom = FastDomain(u0=U0, t0=T0)
    q0 = U0 * U0
    for (m1, n1, g, alpha) in ((1, 2, 2, (1, 1)), (2, 3, 1, (1,)), (1, 1, 3, (2, 1))):
        lhs_ex = ac.lhs_compositional(m1, n1, g, alpha, dom)
        lhs_fa = ac.lhs_compositional(m1, n1, g, alpha, fdom)
        assert {k: c.eval_at(q0, T0) for k, c in lhs_ex.coeffs.items()} == lhs_fa.coeffs
        rhs_ex = cb.rhs_compositional(m1, n1, g, alpha, dom)
        rhs_fa = cb.rhs_compositional(m1, n1, g, alpha, fdom)
        assert {k: c.eval_at(q0, T0) for k, c in rhs_ex.coeffs.items()} == rhs_fa.coeffs


def test_dp_specializes():
    dom = ExactDomain()
    fdom = FastDomain(u0=U0, t0=T0)
    dpe = sw.recursion_dp(3, 2, dom)
    dpf = sw.recursion_dp(3, 2, fdom)
    assert set(dpe.state) == set(dpf.state)
    for key in dpe.state:
        assert _specialize(dpe.state[key], fdom) == dpf.state[key], key
