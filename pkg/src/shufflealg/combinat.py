"""(m,n)-Dyck paths, their statistics, attack graphs and parking-function sums.

All slope geometry is exact: distances to the boundary line are SlopeValue
pairs (rational part, epsilon coefficient) compared lexicographically, so
the tie-breaking infinitesimal never becomes a float.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd

from . import symfunc as sf
from .symfunc import SymFunc


@dataclass(frozen=True, order=True)
class SlopeValue:
    """r + e*eps with eps an infinitesimal positive tie-breaker.

    Comparison is lexicographic in (r, e).  e is an integer for lattice
    heights; interpolated stratum heights may carry a fractional e.
    """

    r: Fraction
    e: Fraction | int

    def __add__(self, other):
        return SlopeValue(self.r + other.r, self.e + other.e)

    def __sub__(self, other):
        return SlopeValue(self.r - other.r, self.e - other.e)

    def is_positive(self) -> bool:
        return self > SlopeValue(Fraction(0), 0)

    @staticmethod
    def zero():
        return SlopeValue(Fraction(0), 0)


def line_height(m1: int, n1: int, x: int, y: int) -> SlopeValue:
    """h(x, y) = y - (n1/m1 - eps) * x, the sweep height of a lattice point."""
    return SlopeValue(Fraction(y) - Fraction(n1 * x, m1), x)


class DyckPath:
    """Lattice path to (m, n), bit 1 = North, 0 = East, strictly above y = s_- x."""

    __slots__ = ("m", "n", "steps", "__dict__")

    def __init__(self, m: int, n: int, steps):
        steps = tuple(int(b) for b in steps)
        if len(steps) != m + n or sum(steps) != n:
            raise ValueError("step count does not match the endpoint")
        self.m, self.n, self.steps = m, n, steps
        g = gcd(m, n)
        x = y = 0
        for b in steps:
            if b:
                y += 1
            else:
                x += 1
            if (x, y) != (m, n) and (x, y) != (0, 0):
                if not line_height(m // g, n // g, x, y).is_positive():
                    raise ValueError(f"path dips below the boundary line at {(x, y)}")

    @property
    def m1(self) -> int:
        return self.m // gcd(self.m, self.n)

    @property
    def n1(self) -> int:
        return self.n // gcd(self.m, self.n)

    @cached_property
    def vertices(self) -> tuple:
        """Lattice points visited, in path order (length m+n+1)."""
        pts = [(0, 0)]
        x = y = 0
        for b in self.steps:
            x, y = (x, y + 1) if b else (x + 1, y)
            pts.append((x, y))
        return tuple(pts)

    @cached_property
    def north_starts(self) -> tuple:
        return tuple(p for p, b in zip(self.vertices, self.steps) if b)

    @cached_property
    def east_starts(self) -> tuple:
        return tuple(p for p, b in zip(self.vertices, self.steps) if not b)

    def height_at(self, x: int) -> int:
        """Path height over the open column (x-1, x); = full height at x = m."""
        h = 0
        cx = 0
        for b in self.steps:
            if b:
                h += 1
            else:
                cx += 1
                if cx == x + 1:
                    break
        return h

    def on_path(self, x: int, y: int) -> bool:
        v = self.vertices
        for (a, b), (c, d) in zip(v, v[1:]):
            if min(a, c) <= x <= max(a, c) and min(b, d) <= y <= max(b, d):
                return True
        return False

    @cached_property
    def top_at(self) -> tuple:
        """top_at[x] = largest y with (x, y) on the path."""
        out = [0] * (self.m + 1)
        x = y = 0
        for b in self.steps:
            if b:
                y += 1
            else:
                out[x] = y
                x += 1
        out[self.m] = self.n
        return tuple(out)

    def weakly_below(self, x: int, y: int) -> bool:
        return 0 <= x <= self.m and y <= self.top_at[x]

    def __eq__(self, other):
        return isinstance(other, DyckPath) and (self.m, self.n, self.steps) == \
            (other.m, other.n, other.steps)

    def __hash__(self):
        return hash((self.m, self.n, self.steps))

    def __str__(self):
        return "".join(str(b) for b in self.steps)

    __repr__ = __str__


def enumerate_paths(m: int, n: int, alpha=None):
    """All (m,n)-Dyck paths; with alpha, only those with that touch composition."""
    if m < 1 or n < 1:
        raise ValueError("need m, n >= 1")
    g = gcd(m, n)
    m1, n1 = m // g, n // g
    if alpha is not None:
        alpha = tuple(alpha)
        if sum(alpha) != g or any(a < 1 for a in alpha):
            raise ValueError("alpha must be a composition of gcd(m, n)")
    out = []

    def rec(x, y, bits):
        if (x, y) == (m, n):
            p = DyckPath(m, n, bits)
            if alpha is None or touch_composition(p) == alpha:
                out.append(p)
            return
        if y < n:
            rec(x, y + 1, bits + [1])
        # an East step is legal iff the new point stays weakly above the diagonal
        if x < m and m1 * y >= n1 * (x + 1):
            rec(x + 1, y, bits + [0])

    rec(0, 0, [])
    return out


def touch_composition(p: DyckPath) -> tuple:
    """Gaps between consecutive diagonal touch points, in (m1, n1) units."""
    m1, n1 = p.m1, p.n1
    touches = [x // m1 for (x, y) in p.vertices if x * n1 == y * m1 and x % m1 == 0]
    touches = sorted(set(touches))
    return tuple(b - a for a, b in zip(touches, touches[1:]))


def region_points(m: int, n: int, m1: int, n1: int):
    """Lattice points of the rectangle weakly above the diagonal."""
    return [(x, y) for x in range(m + 1) for y in range(n + 1) if m1 * y >= n1 * x]


def reading_order(m: int, n: int):
    """Lattice points ranked by ascending distance to the boundary line."""
    g = gcd(m, n)
    m1, n1 = m // g, n // g
    pts = region_points(m, n, m1, n1)
    pts.sort(key=lambda p: line_height(m1, n1, *p))
    return pts


def _rank_map(p: DyckPath) -> dict:
    return {pt: i for i, pt in enumerate(reading_order(p.m, p.n))}


def attacks(p: DyckPath) -> dict:
    """rank-order position -> set of attacked positions (1-indexed)."""
    ranks = _rank_map(p)
    norths = sorted(p.north_starts, key=lambda pt: ranks[pt])
    pos = {pt: i + 1 for i, pt in enumerate(norths)}
    out = {}
    for pt in norths:
        lo = ranks[pt]
        hi = ranks[(pt[0], pt[1] + 1)]
        out[pos[pt]] = {pos[pt2] for pt2 in norths if lo < ranks[pt2] < hi}
    return out


@dataclass(frozen=True)
class MarkedSquarePath:
    pi_prime: DyckPath
    marks: frozenset


def attack_structure(p: DyckPath) -> MarkedSquarePath:
    """The attack graph as an (n,n)-path, with consecutive-North corners marked."""
    n = p.n
    att = attacks(p)
    # column heights: cells strictly above the diagonal, (i, j) with i < j <= top_i
    heights = []
    prev = 0
    for i in range(1, n + 1):
        top = max(att[i], default=i)
        assert att[i] == set(range(i + 1, top + 1)), "attack set is not an interval"
        top = max(top, prev, i)
        heights.append(top)
        prev = top
    bits = []
    h = 0
    for i in range(1, n + 1):
        bits.extend([1] * (heights[i - 1] - h))
        h = heights[i - 1]
        bits.append(0)
    pi_prime = DyckPath(n, n, bits)
    assert len(_area_cells(pi_prime)) == sum(len(s) for s in att.values()), \
        "attack graph does not bound a square path"
    ranks = _rank_map(p)
    norths = sorted(p.north_starts, key=lambda pt: ranks[pt])
    pos = {pt: i + 1 for i, pt in enumerate(norths)}
    marks = set()
    nset = set(p.north_starts)
    for (x, y) in p.north_starts:
        if (x, y + 1) in nset:
            marks.add((pos[(x, y)], pos[(x, y + 1)]))
    mp = MarkedSquarePath(pi_prime, frozenset(marks))
    for (i, j) in marks:
        assert _is_corner(pi_prime, i, j), "marked pair is not a corner"
    return mp


def _is_corner(pi: DyckPath, i: int, j: int) -> bool:
    # cell (column i, row j) above the path with (i, j-1) and (i+1, j) below
    above = pi.height_at(i - 1) < j
    left_below = pi.height_at(i - 1) >= j - 1
    right_below = i + 1 > pi.n or pi.height_at(i) >= j
    return above and left_below and right_below


def area(p: DyckPath) -> int:
    """Lattice points strictly between the path and the boundary line."""
    g = gcd(p.m, p.n)
    m1, n1 = p.m // g, p.n // g
    cnt = 0
    for (x, y) in region_points(p.m, p.n, m1, n1):
        if line_height(m1, n1, x, y).is_positive() and p.weakly_below(x, y) \
                and not p.on_path(x, y):
            cnt += 1
    return cnt


def dinv(p: DyckPath) -> int:
    """East/North pairs satisfying the arm-leg window (first inequality non-strict)."""
    cnt = 0
    for (xe, ye) in p.east_starts:
        for (xn, yn) in p.north_starts:
            if xn <= xe:
                continue
            a = xn - xe - 1
            l = yn - ye
            if l < 0:
                continue
            # a/(l+1) <= m/n < (a+1)/l
            if a * p.n <= p.m * (l + 1) and p.m * l < (a + 1) * p.n:
                cnt += 1
    return cnt


def dinv_geometric(p: DyckPath) -> int:
    """Same count via existence of a line of the boundary slope meeting both steps."""
    g = gcd(p.m, p.n)
    m1, n1 = p.m // g, p.n // g
    cnt = 0
    for (xe, ye) in p.east_starts:
        for (xn, yn) in p.north_starts:
            if xn <= xe:
                continue
            # heights where slope-s_- lines through the East step meet x = xn
            s_lo = SlopeValue(Fraction(n1 * (xn - xe - 1), m1), -(xn - xe - 1))
            s_hi = SlopeValue(Fraction(n1 * (xn - xe), m1), -(xn - xe))
            if s_hi >= SlopeValue(Fraction(yn - ye), 0) and \
               s_lo <= SlopeValue(Fraction(yn + 1 - ye), 0):
                cnt += 1
    return cnt


def maxtdinv(p: DyckPath) -> int:
    return sum(len(s) for s in attacks(p).values())


def tdinv(p: DyckPath, w) -> int:
    """Attack inversions of a word labelling of the North steps."""
    att = attacks(p)
    return sum(1 for i, s in att.items() for j in s if w[i - 1] > w[j - 1])


def statistics(p: DyckPath) -> dict:
    return {"area": area(p), "dinv": dinv(p), "maxtdinv": maxtdinv(p)}


def is_word_parking_function(p: DyckPath, w) -> bool:
    nset = set(p.north_starts)
    pos = {pt: i + 1 for i, pt in enumerate(sorted(p.north_starts, key=lambda q: _rank_map(p)[q]))}
    for (x, y) in p.north_starts:
        if (x, y + 1) in nset and not w[pos[(x, y)] - 1] > w[pos[(x, y + 1)] - 1]:
            return False
    return True


# ------------------------------------------------------ characteristic function

def _area_cells(pi: DyckPath):
    """Cells (i, j), i < j, weakly below the square path and above the diagonal."""
    n = pi.n
    cells = []
    for i in range(1, n + 1):
        h = pi.height_at(i - 1)
        cells.extend((i, j) for j in range(i + 1, h + 1))
    return cells


def char_function(mp: MarkedSquarePath, dom, cap: int | None = None,
                  full_check: bool = False, budget: int = 2_000_000) -> SymFunc:
    """chi(pi', S): q-weighted sum over S-admissible words.

    The default enumerates one word per monomial (sound because the result
    is symmetric); full_check feeds every word over {1..n}^n through the
    symmetry-asserting aggregator.
    """
    pi, S = mp.pi_prime, mp.marks
    n = pi.n
    if cap is None:
        cap = n
    if n > cap:
        raise ValueError("word length exceeds the degree cap")
    if word_enumeration_size(n) > budget:
        raise ResourceWarning(f"enumeration needs ~{word_enumeration_size(n)} words, "
                              f"over budget {budget}")
    cells = _area_cells(pi)
    attackers = {j: [i for (i, jj) in cells if jj == j] for j in range(1, n + 1)}
    above = {j: [i for (i, jj) in S if jj == j] for j in range(1, n + 1)}

    if full_check:
        if n ** n > budget:
            raise ResourceWarning(f"full check needs {n**n} words, over budget {budget}")
        words = []
        for w in itertools.product(range(1, n + 1), repeat=n):
            if all(w[i - 1] > w[j - 1] for (i, j) in S):
                inv = sum(1 for (i, j) in cells if w[i - 1] > w[j - 1])
                words.append((w, dom.q_power(inv)))
        return sf.from_word_multiset(dom, cap, words, alphabet=n)

    # the m_lam coefficient is the q-count over words where letter i occurs lam[i] times
    coeffs = {}
    for lam in sf.partitions_of(n):
        total = _qcount_words(lam, attackers, above, n, dom)
        if total:
            coeffs[lam] = total
    return SymFunc(dom, cap, coeffs)


def word_enumeration_size(n: int) -> int:
    """Words over {1..n} of length n whose letter multiplicities decrease,
    i.e. one representative per monomial (an ordered-set-partition count)."""
    from math import comb
    fub = [1] + [0] * n
    for i in range(1, n + 1):
        fub[i] = sum(comb(i, j) * fub[i - j] for j in range(1, i + 1))
    return fub[n]


def _qcount_words(lam, attackers, above, n, dom):
    """Sum of q^inv over S-admissible words with letter i used lam[i-1] times."""
    remaining = list(lam) + [0]
    ell = len(lam)
    out = [dom.zero]

    def rec(pos, w, inv):
        if pos > n:
            out[0] = out[0] + dom.q_power(inv)
            return
        for letter in range(1, ell + 1):
            if not remaining[letter - 1]:
                continue
            if any(not w[i - 1] > letter for i in above[pos]):
                continue
            d = sum(1 for i in attackers[pos] if w[i - 1] > letter)
            remaining[letter - 1] -= 1
            w.append(letter)
            rec(pos + 1, w, inv + d)
            w.pop()
            remaining[letter - 1] += 1

    rec(1, [], 0)
    return out[0]


def path_weight(p: DyckPath, dom, cap: int | None = None) -> SymFunc:
    """t^area q^(dinv - maxtdinv) chi(pi', S_pi)."""
    st = statistics(p)
    mp = attack_structure(p)
    chi = char_function(mp, dom, cap=cap if cap is not None else p.n)
    return chi.scale(dom.monomial(1, 2 * (st["dinv"] - st["maxtdinv"]), st["area"]))


def rhs_compositional(m1: int, n1: int, g: int, alpha, dom) -> SymFunc:
    """Sum of path weights over paths with the given touch composition."""
    alpha = tuple(alpha)
    if gcd(m1, n1) != 1 or sum(alpha) != g or any(a < 1 for a in alpha):
        raise ValueError("need coprime (m1, n1) and a composition of g")
    cap = g * n1
    total = SymFunc.zero(dom, cap)
    for p in enumerate_paths(g * m1, g * n1, alpha):
        total = total + path_weight(p, dom, cap=cap)
    return total
