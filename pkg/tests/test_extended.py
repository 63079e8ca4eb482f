"""Cross-checks beyond the pinned acceptance bounds.

These run the full operator-vs-combinatorics comparison on larger slopes
and denominators; everything stays exact and still takes only seconds.
"""

from fractions import Fraction

import pytest

from shufflealg import actions as ac
from shufflealg import combinat as cb
from shufflealg import verify as vf

EXTENDED_CONFIGS = [
    (1, 4, 1), (4, 1, 1), (2, 5, 1), (5, 2, 1), (3, 4, 1), (4, 3, 1),
    (1, 5, 1), (5, 1, 1), (4, 5, 1), (5, 4, 1), (2, 7, 1), (7, 2, 1),
    (3, 5, 1), (5, 3, 1), (1, 1, 4), (1, 1, 5), (1, 3, 2), (3, 1, 2),
    (1, 4, 2), (2, 3, 2), (3, 2, 2), (1, 2, 3), (2, 1, 3),
]


@pytest.mark.parametrize("m1,n1,g", EXTENDED_CONFIGS)
def test_shuffle_identity_extended(dom, m1, n1, g):
    tower = ac.ActionTower(dom)
    for alpha in vf.compositions_of(g):
        lhs = ac.lhs_compositional(m1, n1, g, alpha, dom, tower)
        rhs = cb.rhs_compositional(m1, n1, g, alpha, dom)
        assert lhs == rhs, alpha
        assert all(c.has_integer_q_degree() for c in lhs.coeffs.values())


def test_mediant_tree_matches_farey_five():
    # four mediant iterations fill in exactly the fifth Farey row of slopes
    level = [((0, 1), (1, 0))]
    vectors = {(0, 1), (1, 0)}
    for _ in range(4):
        nxt = []
        for (left, right) in level:
            mid = (left[0] + right[0], left[1] + right[1])
            vectors.add(mid)
            nxt.extend([(left, mid), (mid, right)])
        level = nxt
    slopes = sorted(Fraction(n, m) if m else Fraction(10 ** 9) for (m, n) in vectors)
    want = [Fraction(x) for x in
            ("0", "1/4", "1/3", "2/5", "1/2", "3/5", "2/3", "3/4", "1",
             "4/3", "3/2", "5/3", "2", "5/2", "3", "4")] + [Fraction(10 ** 9)]
    assert slopes == want
    for (m, n) in vectors - {(0, 1), (1, 0)}:
        word = ac.mediant_decompose(m, n)
        assert word.chain[-1] == (m, n)
        assert len(word.chain) <= 4


def test_fast_mode_prescreens_extended():
    fdom = vf.make_domain("fast", seed=77)
    tower = ac.ActionTower(fdom)
    for (m1, n1, g) in ((2, 5, 1), (1, 2, 3), (3, 2, 2)):
        for alpha in vf.compositions_of(g):
            lhs = ac.lhs_compositional(m1, n1, g, alpha, fdom, tower)
            rhs = cb.rhs_compositional(m1, n1, g, alpha, fdom)
            assert lhs == rhs, (m1, n1, g, alpha)


@pytest.mark.parametrize("m,n", [(3, 5), (4, 4), (2, 6), (3, 6), (4, 5)])
def test_braid_formula_beyond_acceptance(m, n):
    # fast-mode pre-screen of the braid = DP identity at m + n up to 9;
    # the exact run at m + n <= 7 lives in the acceptance suite
    from math import gcd

    from shufflealg import braid as br
    from shufflealg import sweep as sw

    fdom = vf.make_domain("fast", seed=13)
    g = gcd(m, n)
    m1, n1 = m // g, n // g
    dp = sw.recursion_dp(m, n, fdom, with_log=True, keep_states=True)
    for s in range(len(dp.states)):
        lower, upper = dp.stratum_bounds(s)
        for key in vf._changed_keys(dp, s):
            if not key:
                continue
            h = br.safe_height(lower, upper, m1, n1)
            assert br.braid_coloring_value(m1, n1, key, h, fdom, dp.cap) == \
                dp.states[s][key], (s, key)
