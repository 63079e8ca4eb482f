import pytest

from shufflealg import vkspace as vk
from shufflealg.vkspace import VElem


def V(dom, k, terms, cap=6):
    return VElem(dom, k, cap, {key: dom.one for key in terms} if isinstance(terms, list) else terms)


def test_T_examples(dom):
    one2 = VElem.one(dom, 2, 4)
    assert vk.act_T(one2, 1) == one2
    y2 = V(dom, 2, [((), (0, 1))])
    assert vk.act_T(y2, 1) == V(dom, 2, {((), (1, 0)): dom.q})
    y1 = V(dom, 2, [((), (1, 0))])
    assert vk.act_T(y1, 1) == V(dom, 2, {((), (0, 1)): dom.one, ((), (1, 0)): dom.one - dom.q})


def test_T_inverse_composes_to_identity(dom):
    for base in vk.spanning_set(dom, 2, 3):
        assert vk.act_T(vk.act_T(base, 1, inverse=True), 1) == base
        assert vk.act_T(vk.act_T(base, 1), 1, inverse=True) == base


def test_T_index_range(dom):
    with pytest.raises(ValueError):
        vk.act_T(VElem.one(dom, 1, 2), 1)


def test_dminus_examples(dom):
    assert vk.act_dminus(VElem.one(dom, 1, 4)) == VElem.one(dom, 0, 4)
    y1 = V(dom, 1, [((), (1,))])
    assert vk.act_dminus(y1) == V(dom, 0, {((1,), ()): -dom.one})
    y1sq = V(dom, 1, [((), (2,))])
    assert vk.act_dminus(y1sq) == V(dom, 0, [(((1, 1)), ())])
    with pytest.raises(ValueError):
        vk.act_dminus(VElem.one(dom, 0, 4))


def test_dplus_examples(dom):
    one0 = VElem.one(dom, 0, 4)
    m_y1 = vk.act_dplus(one0)
    assert m_y1 == V(dom, 1, {((), (1,)): -dom.one})
    # d_+(-y_1) = y_1 y_2
    assert vk.act_dplus(m_y1) == V(dom, 2, [((), (1, 1))])
    e1 = V(dom, 0, [((1,), ())])
    assert vk.act_dplus(e1) == V(dom, 1, {((1,), (1,)): -dom.one,
                                          ((), (2,)): dom.one - dom.q})


def test_dplus_star_examples(dom):
    assert vk.act_dplus_star(VElem.one(dom, 0, 4)) == VElem.one(dom, 1, 4)
    y1 = V(dom, 1, [((), (1,))])
    assert vk.act_dplus_star(y1) == V(dom, 2, [((), (0, 1))])
    e1 = V(dom, 0, [((1,), ())])
    assert vk.act_dplus_star(e1) == V(dom, 1, {((1,), (0,)): dom.one,
                                               ((), (1,)): (dom.q - dom.one) * dom.t})


def test_derived_operator_examples(dom):
    y1 = V(dom, 1, [((), (1,))])
    assert vk.act_z(y1, 1) == V(dom, 1, {((), (1,)): dom.q * dom.t})
    assert vk.act_z(VElem.one(dom, 1, 4), 1) == VElem(dom, 1, 4)
    f = V(dom, 1, {((1,), (2,)): dom.t})
    assert vk.act_ytilde(f, 1) == V(dom, 1, {((1,), (3,)): dom.t})


def test_y_from_commutator_is_multiplication(dom):
    for k in (1, 2, 3):
        for base in vk.spanning_set(dom, k, 2):
            assert vk.act_y1_from_commutator(base) == vk.act_y(base, 1)


def test_exact_division_assertion(dom):
    with pytest.raises(AssertionError):
        vk._divide_by_step({(0, 1): dom.one}, dom)  # y2 alone is not divisible


def test_word_parsing(dom):
    scalar, word = vk.parse_word("d- d+ T1 T2^-1 y3 z1 ytilde2", dom)
    assert scalar == dom.one
    assert word == (("dm",), ("dp",), ("T", 1), ("Ti", 2), ("y", 3), ("z", 1), ("yt", 2))
    scalar, word = vk.parse_word("q^-1 T1 z1 T1", dom)
    assert scalar == dom.q_power(-1) and word == (("T", 1), ("z", 1), ("T", 1))


def test_word_target_validation():
    assert vk.word_target((("dm",), ("dp",)), 1) == 1
    with pytest.raises(ValueError):
        vk.word_target((("T", 2),), 2)
    with pytest.raises(ValueError):
        vk.word_target((("dm",),), 0)


def test_relation_check_reports_failure(dom):
    rep = vk.relation_check((("T", 1),), (), 2, 2, dom, name="bogus")
    assert not rep.passed and rep.witness is not None


def test_quadratic_relation_explicit(dom):
    # (T_i - 1)(T_i + q) = 0 at k = 2 over degree 2
    lhs = [(dom.one, (("T", 1), ("T", 1))), (dom.q - dom.one, (("T", 1),)),
           (-dom.q, ())]
    rep = vk.relation_check(lhs, [(dom.zero, ())], 2, 2, dom)
    assert rep.passed


def test_intertwining_examples(dom):
    for k in (0, 1, 2):
        scalar = -dom.t * dom.q_power(k + 1)
        rep = vk.relation_check((("z", 1), ("dp",)),
                                [(scalar, (("y", 1), ("dps",)))], k, 2, dom)
        assert rep.passed, k
    rep = vk.relation_check((("dp",), ("z", 1)), (("z", 2), ("dp",)), 2, 2, dom)
    assert rep.passed


@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_all_standard_relations(fdom, k):
    for name, lhs, rhs in vk.standard_relations(fdom, k):
        rep = vk.relation_check(lhs, rhs, k, 3, fdom, name=name)
        assert rep.passed, rep


def test_spanning_set_size(dom):
    # |lam| + |a| <= 2 at k = 1: lam in {(), (1), (2), (1,1)}, a in {0, 1, 2}
    assert len(vk.spanning_set(dom, 1, 2)) == 7
