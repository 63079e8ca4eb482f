import pytest

from shufflealg import combinat as cb
from shufflealg import sweep as sw
from shufflealg.symfunc import SymFunc
from shufflealg.vkspace import VElem


def test_event_sequence_unit():
    evs = sw.event_sequence(cb.DyckPath(1, 1, (1, 0)))
    assert [(e.point, e.kind) for e in evs] == [((0, 1), "A"), ((0, 0), "B")]


def test_event_sequence_nne():
    evs = sw.event_sequence(cb.DyckPath(1, 2, (1, 1, 0)))
    assert [(e.point, e.kind, e.a) for e in evs] == \
        [((0, 2), "A", 0), ((0, 1), "C", 0), ((0, 0), "B", 0)]


def test_event_kinds_figure():
    p = cb.DyckPath(10, 6, (1, 1, 0, 0, 0, 1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0))
    kinds = {e.point: e.kind for e in sw.event_sequence(p)}
    assert kinds[(1, 1)] == "E"
    assert (10, 6) not in kinds          # terminal point emits nothing
    assert kinds[(0, 0)] == "B"
    assert kinds[(0, 2)] == "A"
    assert kinds[(0, 1)] == "C"
    assert kinds[(1, 2)] == "D"


def test_sweep_values(dom):
    assert sw.sweep_path(cb.DyckPath(1, 1, (1, 0)), dom) == SymFunc.e(dom, 1, 1)
    assert sw.sweep_path(cb.DyckPath(1, 2, (1, 1, 0)), dom) == SymFunc.e(dom, 2, 2)


def test_sweep_matches_statistics_formula(dom):
    for m in range(1, 7):
        for n in range(1, 8 - m):
            for p in cb.enumerate_paths(m, n):
                assert sw.sweep_path(p, dom) == cb.path_weight(p, dom), str(p)


def test_dp_unit(dom):
    dp = sw.recursion_dp(1, 1, dom)
    complete = dp.complete_state()
    assert set(complete) == {((0, 1),)}
    assert complete[((0, 1),)] == VElem(dom, 1, 1, {((), (1,)): -dom.one})


def test_dp_square(dom):
    dp = sw.recursion_dp(2, 2, dom)
    complete = dp.complete_state()
    assert set(complete) == {sw.composition_coloring(1, 1, (1, 1)),
                             sw.composition_coloring(1, 1, (2,))}


def test_dp_strand_counts(dom):
    # the V-index of each value always equals the interval count of its key
    dp = sw.recursion_dp(3, 2, dom, keep_states=True)
    for state in dp.states:
        for key, val in state.items():
            assert val.k == len(key)


def test_assemble_matches_rhs(dom):
    for (m1, n1, g) in ((1, 1, 1), (1, 1, 2), (1, 2, 1), (2, 1, 1), (3, 2, 1), (1, 1, 3)):
        dp = sw.recursion_dp(g * m1, g * n1, dom, cap=g * n1)
        for alpha in _compositions(g):
            lhs = sw.assemble_composition(m1, n1, g, alpha, dp, dom)
            rhs = cb.rhs_compositional(m1, n1, g, alpha, dom)
            assert lhs == rhs, (m1, n1, g, alpha)


def test_assemble_t_power(dom):
    # alpha = (2) at slope (1,1) picks up one factor of t from the skipped
    # diagonal point
    dp = sw.recursion_dp(2, 2, dom)
    val = sw.assemble_composition(1, 1, 2, (2,), dp, dom)
    assert val == SymFunc.e(dom, 2, 2).scale(dom.t)


def test_assemble_bad_alpha(dom):
    dp = sw.recursion_dp(2, 2, dom)
    with pytest.raises(ValueError):
        sw.assemble_composition(1, 1, 2, (3,), dp, dom)


def test_dp_grouped_path_sums(dom):
    # per-path sweeps truncated above the diagonal, grouped by touch
    # composition, reproduce the DP values at the composition colorings
    for (m, n) in ((3, 2), (2, 2)):
        m1, n1 = (m, n) if m != n else (1, 1)
        dp = sw.recursion_dp(m, n, dom)
        by_alpha = {}
        for p in cb.enumerate_paths(m, n):
            val = _sweep_until_diagonal(p, dom)
            alpha = cb.touch_composition(p)
            prev = by_alpha.get(alpha)
            by_alpha[alpha] = val if prev is None else prev + val
        for alpha, val in by_alpha.items():
            assert dp.state[sw.composition_coloring(m1, n1, alpha)] == val


def _sweep_until_diagonal(p, dom):
    f = VElem.one(dom, 0, p.n)
    m1, n1 = p.m1, p.n1
    for ev in sw.event_sequence(p):
        x, y = ev.point
        if m1 * y == n1 * x:
            continue  # diagonal events belong to the assembly step
        f = sw.apply_event(f, ev)
    return f


def _compositions(g):
    out = []

    def rec(rem, cur):
        if rem == 0:
            out.append(tuple(cur))
            return
        for a in range(1, rem + 1):
            rec(rem - a, cur + [a])

    rec(g, [])
    return out
