"""Sweep a line of the boundary slope downward across a path, and the
coloring dynamic program that sums the per-path results over all paths.

Event kinds at a lattice point swept by the line:
  A  outer (North-then-East) corner      -> d_+
  B  inner (East-then-North) corner,
     interior diagonal touches, origin   -> d_-
  C  interior point of a vertical run    -> q^{-a} (d_- d_+ - d_+ d_-)/(q-1)
  D  interior point of a horizontal run  -> multiply by q^a
  E  point strictly inside the region    -> multiply by t
with a = number of North steps the line crosses strictly to the right.
The terminal point (m, n) emits no event.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .combinat import DyckPath, SlopeValue, line_height
from .vkspace import VElem, act_dminus, act_dplus


@dataclass(frozen=True)
class SweepEvent:
    point: tuple
    kind: str
    a: int = 0


@dataclass(frozen=True)
class Coloring:
    """DP state: reading-order index of the last processed event + intervals.

    Each interval is (x, y): left endpoint on the vertical line x, right
    endpoint on the horizontal line y.
    """

    stratum: int
    intervals: tuple

    @property
    def k(self) -> int:
        return len(self.intervals)


def _event_kind(p: DyckPath, x: int, y: int) -> str | None:
    if (x, y) == (p.m, p.n):
        return None
    if not p.on_path(x, y):
        return "E"
    if (x, y) == (0, 0):
        return "B"
    idx = p.vertices.index((x, y))
    arrive, depart = p.steps[idx - 1], p.steps[idx]
    return {(1, 0): "A", (0, 1): "B", (1, 1): "C", (0, 0): "D"}[(arrive, depart)]


def _crossing_count_right(p: DyckPath, x: int, y: int) -> int:
    """North steps of p crossed by the line through (x, y), strictly right of it."""
    m1, n1 = p.m1, p.n1
    h = line_height(m1, n1, x, y)
    cnt = 0
    for (x0, y0) in p.north_starts:
        if x0 <= x:
            continue
        at = SlopeValue(Fraction(n1 * x0, m1) + h.r, h.e - x0)
        if SlopeValue(Fraction(y0), 0) < at < SlopeValue(Fraction(y0 + 1), 0):
            cnt += 1
    return cnt


def event_sequence(p: DyckPath) -> list[SweepEvent]:
    """Events of the per-path sweep in processing (descending height) order."""
    m1, n1 = p.m1, p.n1
    events = []
    for x in range(p.m + 1):
        for y in range(p.n + 1):
            if m1 * y < n1 * x or not p.weakly_below(x, y):
                continue
            kind = _event_kind(p, x, y)
            if kind is None:
                continue
            a = _crossing_count_right(p, x, y) if kind in ("C", "D") else 0
            events.append(SweepEvent((x, y), kind, a))
    events.sort(key=lambda ev: line_height(m1, n1, *ev.point), reverse=True)
    return events


def _c_op(f: VElem, a: int) -> VElem:
    dom = f.dom
    comm = act_dminus(act_dplus(f)) - act_dplus(act_dminus(f))
    out = comm.scale(dom.q_power(-a) / (dom.q - dom.one))
    _assert_exact_division(out)
    return out


def _assert_exact_division(f: VElem):
    # coefficients must stay Laurent: a surviving (q-1) denominator means the
    # commutator was not divisible as promised
    for c in f.terms.values():
        if hasattr(c, "den"):
            assert len(c.den) == 1, "commutator not divisible by (q-1)"


def apply_event(f: VElem, ev: SweepEvent) -> VElem:
    dom = f.dom
    if ev.kind == "A":
        return act_dplus(f)
    if ev.kind == "B":
        return act_dminus(f)
    if ev.kind == "C":
        return _c_op(f, ev.a)
    if ev.kind == "D":
        return f.scale(dom.q_power(ev.a))
    if ev.kind == "E":
        return f.scale(dom.t)
    raise ValueError(f"unknown event kind {ev.kind!r}")


def sweep_path(p: DyckPath, dom, cap: int | None = None):
    """Fold the events over 1 in V_0; returns the weight as a SymFunc."""
    if cap is None:
        cap = p.n
    f = VElem.one(dom, 0, cap)
    for ev in event_sequence(p):
        f = apply_event(f, ev)
    assert f.k == 0, "sweep did not return to V_0"
    return f.as_symfunc()


# ------------------------------------------------------------ the coloring DP

def dp_events(m: int, n: int) -> list:
    """Lattice points strictly above the diagonal, in descending height order."""
    g = gcd(m, n)
    m1, n1 = m // g, n // g
    pts = [(x, y) for x in range(m + 1) for y in range(n + 1) if m1 * y > n1 * x]
    pts.sort(key=lambda pt: line_height(m1, n1, *pt), reverse=True)
    return pts


@dataclass
class DpResult:
    m: int
    n: int
    cap: int
    events: list
    state: dict                  # intervals tuple -> VElem, at the final stratum
    log: list | None = None      # per event: list of (kind, src, dst, extra)
    states: list | None = None   # snapshots per stratum, 0 .. len(events)

    def stratum_bounds(self, s: int):
        """Open height interval of stratum s (after processing s events)."""
        g = gcd(self.m, self.n)
        m1, n1 = self.m // g, self.n // g
        upper = line_height(m1, n1, *self.events[s - 1]) if s >= 1 \
            else SlopeValue(Fraction(self.n + 1), 0)
        lower = line_height(m1, n1, *self.events[s]) if s < len(self.events) \
            else SlopeValue(Fraction(0), self.m + 1)
        return lower, upper

    def complete_state(self) -> dict:
        """Final colorings that complete a path, i.e. c_alpha for some alpha."""
        g = gcd(self.m, self.n)
        m1, n1 = self.m // g, self.n // g
        out = {}
        for key, val in self.state.items():
            if not key or key[0][0] != 0 or key[-1][1] != self.n:
                continue
            ok = True
            prev_y = None
            for (x, y) in key:
                if x % m1 or y % n1 or (prev_y is not None and x * n1 != prev_y * m1):
                    ok = False
                    break
                prev_y = y
            if ok:
                out[key] = val
        return out


def _insert_position(intervals, x: int, y: int) -> int:
    pos = sum(1 for (xi, _) in intervals if xi < x)
    pos2 = sum(1 for (_, yi) in intervals if yi < y)
    assert pos == pos2, "new interval would overlap an existing one"
    return pos


def recursion_dp(m: int, n: int, dom, cap: int | None = None,
                 with_log: bool = False, keep_states: bool = False) -> DpResult:
    """Propagate all colorings from the empty one down to the last stratum
    above the diagonal, accumulating sums of per-path operator products."""
    if cap is None:
        cap = n
    events = dp_events(m, n)
    state: dict = {(): VElem.one(dom, 0, cap)}
    log = [] if with_log else None
    states = [dict(state)] if keep_states else None
    for (px, py) in events:
        nxt: dict = {}
        entry = [] if with_log else None

        def put(key, val, kind, src, extra=None):
            prev = nxt.get(key)
            nxt[key] = val if prev is None else prev + val
            if entry is not None:
                entry.append((kind, src, key, extra))

        for key, val in state.items():
            i = next((idx for idx, (_, yi) in enumerate(key) if yi == py), None)
            j = next((idx for idx, (xi, _) in enumerate(key) if xi == px), None)
            k = len(key)
            if i is not None and j is not None:
                assert j == i + 1, "merging intervals are not adjacent"
                merged = key[:i] + ((key[i][0], key[j][1]),) + key[j + 1:]
                put(merged, act_dminus(val), "B", key)
            elif i is not None:
                a = k - 1 - i
                put(key, val.scale(dom.q_power(a)), "D", key, a)
            elif j is not None:
                a = k - 1 - j
                put(key, _c_op(val, a), "C", key, a)
            elif any(xi < px and py < yi for (xi, yi) in key):
                put(key, val.scale(dom.t), "E", key)
            else:
                put(key, val, "keep", key)
                pos = _insert_position(key, px, py)
                newkey = key[:pos] + ((px, py),) + key[pos:]
                put(newkey, act_dplus(val), "A", key, pos)
        state = nxt
        if log is not None:
            log.append(entry)
        if states is not None:
            states.append(dict(state))
    return DpResult(m, n, cap, events, state, log, states)


def composition_coloring(m1: int, n1: int, alpha) -> tuple:
    """The final-stratum coloring with touch composition alpha."""
    acc = 0
    out = []
    for a in alpha:
        out.append((m1 * acc, n1 * (acc + a)))
        acc += a
    return tuple(out)


def assemble_composition(m1: int, n1: int, g: int, alpha, dp: DpResult, dom):
    """t^(sum(alpha_i - 1)) d_-^r applied to the DP value at c_alpha."""
    alpha = tuple(alpha)
    if sum(alpha) != g or any(a < 1 for a in alpha):
        raise ValueError("alpha must be a composition of g")
    key = composition_coloring(m1, n1, alpha)
    if key not in dp.state:
        raise KeyError(f"coloring {key} not reachable in the DP")
    f = dp.state[key]
    for _ in range(len(alpha)):
        f = act_dminus(f)
    f = f.scale(dom.monomial(1, 0, g - len(alpha)))
    return f.as_symfunc()
