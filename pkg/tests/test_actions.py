import pytest

from shufflealg import actions as ac
from shufflealg import combinat as cb
from shufflealg import vkspace as vk
from shufflealg.symfunc import SymFunc
from shufflealg.vkspace import VElem


def test_mediant_examples():
    w = ac.mediant_decompose(1, 1)
    assert w.chain == ((1, 1),) and w.endpoints == ((0, 1), (1, 0))
    w = ac.mediant_decompose(2, 3)
    assert w.chain == ((1, 1), (1, 2), (2, 3))
    assert w.endpoints == ((1, 2), (1, 1))
    left, right = w.endpoints
    assert right[0] * left[1] - left[0] * right[1] == 1
    assert ac.mediant_decompose(0, 1).chain == ()
    with pytest.raises(ValueError):
        ac.mediant_decompose(2, 4)


def test_mediant_replay_invariant():
    for (m, n) in ((2, 3), (3, 2), (1, 4), (5, 2), (3, 4)):
        w = ac.mediant_decompose(m, n)
        assert w.replay() == w.endpoints


def test_base_handles(dom):
    tower = ac.ActionTower(dom)
    one0 = VElem.one(dom, 0, 3)
    assert tower.handle(0, 1, False).dplus(one0) == vk.act_dplus(one0)
    assert tower.handle(1, 0, True).dplus(one0) == vk.act_dplus_star(one0)


def test_replicated_handle_examples(dom):
    tower = ac.ActionTower(dom)
    one0 = VElem.one(dom, 0, 3)
    m_y1 = VElem(dom, 1, 3, {((), (1,)): -dom.one})
    assert tower.handle(1, 1, True).dplus(one0) == m_y1
    assert tower.handle(1, 1, False).dplus(one0) == -m_y1


def test_dplus_star_sign_law(dom):
    # rho_{m,n}(d_+) = -q^k rho*_{m,n}(d_+^*) as actions, m + n <= 5
    tower = ac.ActionTower(dom)
    for m in range(0, 5):
        for n in range(0, 6 - m):
            from math import gcd
            if (m, n) == (0, 0) or gcd(m, n) != 1:
                continue
            hq = tower.handle(m, n, False)
            hs = tower.handle(m, n, True)
            for k in (0, 1, 2):
                for base in vk.spanning_set(dom, k, 2, cap=8):
                    lhs = hq.dplus(base)
                    rhs = hs.dplus(base).scale(-dom.q_power(k))
                    assert lhs == rhs, (m, n, k)


def _pair_intertwining_laws(hq, hs, dom, kmax=2, degree=2):
    for k in range(0, kmax + 1):
        for base in vk.spanning_set(dom, k, degree, cap=degree + k + 4):
            # z_1 d_+ = -t q^(k+1) y_1 d_+^*
            lhs = hs.y1(hq.dplus(base))
            rhs = hq.y1(hs.dplus(base)).scale(-dom.t * dom.q_power(k + 1))
            assert lhs == rhs, f"interchange law at k={k}"
            for i in range(1, k + 1):
                # d_+ z_i = z_{i+1} d_+ and d_+^* y_i = y_{i+1} d_+^*
                assert hq.dplus(hs.y(base, i)) == hs.y(hq.dplus(base), i + 1)
                assert hs.dplus(hq.y(base, i)) == hq.y(hs.dplus(base), i + 1)


def test_replicated_pairs_intertwine(dom):
    tower = ac.ActionTower(dom)
    for (left, mid, right) in (((0, 1), (1, 1), (1, 0)),
                               ((0, 1), (1, 2), (1, 1)),
                               ((1, 1), (2, 1), (1, 0))):
        hq_left = tower.handle(*left, False)
        hs_mid = tower.handle(*mid, True)
        _pair_intertwining_laws(hq_left, hs_mid, dom)
        hq_mid = tower.handle(*mid, False)
        hs_right = tower.handle(*right, True)
        _pair_intertwining_laws(hq_mid, hs_right, dom)


def test_replicated_handles_satisfy_action_relations(dom):
    # T_1 d_+^2 = d_+^2, d_+ T_i = T_{i+1} d_+ and both commutator relations,
    # for a replicated handle of each algebra type
    tower = ac.ActionTower(dom)

    def comm(h, f):
        return h.dplus(vk.act_dminus(f)) - vk.act_dminus(h.dplus(f))

    for (m, n, star) in ((1, 1, False), (1, 1, True), (1, 2, True), (2, 1, False)):
        h = tower.handle(m, n, star)
        q_eff = dom.q_power(-1 if star else 1)
        for k in (0, 1, 2):
            for base in vk.spanning_set(dom, k, 2, cap=k + 6):
                two = h.dplus(h.dplus(base))
                assert h.T(two, 1) == two, (m, n, star, k, "T1 d+^2")
                for i in range(1, k):
                    assert h.dplus(h.T(base, i)) == h.T(h.dplus(base), i + 1), \
                        (m, n, star, k, i, "d+ T")
                if k >= 1:
                    lhs = h.T(comm(h, h.dplus(base)), 1)
                    rhs = h.dplus(comm(h, base)).scale(q_eff)
                    assert lhs == rhs, (m, n, star, k, "high comm")
                if k >= 2:
                    lhs = vk.act_dminus(comm(h, h.T(base, k - 1)))
                    rhs = comm(h, vk.act_dminus(base)).scale(q_eff)
                    assert lhs == rhs, (m, n, star, k, "low comm")


def test_lhs_examples(dom):
    assert ac.lhs_compositional(1, 1, 1, (1,), dom) == SymFunc.e(dom, 1, 1)
    assert ac.lhs_compositional(1, 2, 1, (1,), dom) == SymFunc.e(dom, 2, 2)
    with pytest.raises(ValueError):
        ac.lhs_compositional(1, 1, 1, (), dom)
    with pytest.raises(ValueError):
        ac.lhs_compositional(2, 4, 1, (1,), dom)


def test_lhs_equals_rhs_small(dom):
    for (m1, n1, g, alpha) in ((1, 1, 2, (1, 1)), (1, 1, 2, (2,)),
                               (1, 2, 2, (2,)), (2, 1, 2, (1, 1)), (2, 3, 1, (1,))):
        assert ac.lhs_compositional(m1, n1, g, alpha, dom) == \
            cb.rhs_compositional(m1, n1, g, alpha, dom)


def test_lhs_integer_q_degree(dom):
    out = ac.lhs_compositional(2, 3, 1, (1,), dom)
    assert all(c.has_integer_q_degree() for c in out.coeffs.values())


def test_op_C_D_examples(dom):
    one = SymFunc.one(dom, 4)
    assert ac.op_C(1, one) == SymFunc.h(dom, 4, 1)
    assert ac.op_D(0, one) == one
    for n in range(1, 5):
        want = SymFunc.e(dom, 4, n).scale(dom.monomial((-1) ** n))
        assert ac.op_D(n, one) == want
    with pytest.raises(ValueError):
        ac.op_D(-5, one)


def test_c_alpha_identity(dom):
    for alpha in ((1,), (2,), (1, 1), (2, 1), (3,)):
        ok, lhs, rhs = ac.c_alpha_identity_check(alpha, dom)
        assert ok, (alpha, str(lhs), str(rhs))


def test_nabla_conjugation_examples(dom):
    for bits in ((1, 0), (1, 1, 0, 0), (1, 0, 1, 0)):
        n = len(bits) // 2
        ok, _, _ = ac.nabla_conjugation_check(cb.DyckPath(n, n, bits), dom)
        assert ok, bits
    with pytest.raises(ValueError):
        ac.nabla_conjugation_check(cb.DyckPath(1, 2, (1, 1, 0)), dom)
