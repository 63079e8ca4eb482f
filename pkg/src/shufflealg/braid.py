"""The positive punctured-torus braid monoid and its operator representation.

Strand positions live on the antidiagonal of the unit torus cell and are
exact rational functions of the tie-breaking infinitesimal eps (EpsRat),
ordered by their behaviour as eps -> 0+.  Braid words evaluate on V_*
through the representation T_i -> q^{-1/2} T_i, y_i -> -y_i,
z_i -> (qt)^{-1} z_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import vkspace as vk
from .combinat import SlopeValue
from .vkspace import VElem


# ------------------------------------------------------------------- EpsRat

def _ptrim(t):
    t = list(t)
    while t and not t[-1]:
        t.pop()
    return tuple(t)


def _padd(a, b):
    n = max(len(a), len(b))
    return _ptrim(tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                        for i in range(n)))


def _pneg(a):
    return tuple(-c for c in a)


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _ptrim(out)


def _pdivmod(a, b):
    # univariate division over Q, b != 0
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b) and _ptrim(a):
        a = list(_ptrim(a))
        if len(a) < len(b):
            break
        c = a[-1] / b[-1]
        d = len(a) - len(b)
        q[d] = c
        for i, y in enumerate(b):
            a[i + d] -= c * y
        a = list(_ptrim(a))
    return _ptrim(q), _ptrim(a)


def _pgcd(a, b):
    a, b = _ptrim(a), _ptrim(b)
    while b:
        _, r = _pdivmod(a, b)
        a, b = b, r
    if a:
        a = tuple(c / a[-1] for c in a)
    return a


class DegenerateGeometry(ArithmeticError):
    """An exact coincidence (point at the puncture, a wall, or a collision)."""


class EpsRat:
    """Rational function of eps, ordered by its germ at eps -> 0+."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=(Fraction(1),)):
        num, den = _ptrim(num), _ptrim(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        g = _pgcd(num, den)
        if len(g) > 1:
            num, _ = _pdivmod(num, g)
            den, _ = _pdivmod(den, g)
        i = next((i for i, c in enumerate(den) if c), None)
        if i is not None and den[i] < 0:
            num, den = _pneg(num), _pneg(den)
        self.num, self.den = num, den

    @staticmethod
    def const(fr) -> "EpsRat":
        fr = Fraction(fr)
        return EpsRat((fr,))

    @staticmethod
    def eps() -> "EpsRat":
        return EpsRat((Fraction(0), Fraction(1)))

    @staticmethod
    def from_slope_value(h: SlopeValue) -> "EpsRat":
        return EpsRat((Fraction(h.r), Fraction(h.e)))

    def __add__(self, other):
        if self.den == other.den:
            return EpsRat(_padd(self.num, other.num), self.den)
        return EpsRat(_padd(_pmul(self.num, other.den), _pmul(other.num, self.den)),
                      _pmul(self.den, other.den))

    def __neg__(self):
        return EpsRat(_pneg(self.num), self.den)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return EpsRat(_pmul(self.num, other.num), _pmul(self.den, other.den))

    def __truediv__(self, other):
        if not other.num:
            raise ZeroDivisionError
        return EpsRat(_pmul(self.num, other.den), _pmul(self.den, other.num))

    def sign(self) -> int:
        # denominator is normalized positive near 0+
        for c in self.num:
            if c:
                return 1 if c > 0 else -1
        return 0

    def __eq__(self, other):
        return isinstance(other, EpsRat) and (self - other).sign() == 0

    def __hash__(self):
        return hash((self.num, self.den))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def floor(self) -> int:
        if not self.den or not self.den[0]:
            raise DegenerateGeometry("pole at eps = 0")
        r0 = (self.num[0] if self.num else Fraction(0)) / self.den[0]
        if r0.denominator != 1:
            return r0.numerator // r0.denominator
        d = (self - EpsRat.const(r0)).sign()
        if d > 0:
            return int(r0)
        if d < 0:
            return int(r0) - 1
        raise DegenerateGeometry("exactly integral value")

    def ceil(self) -> int:
        return -(-self).floor()

    def frac(self) -> "EpsRat":
        return self - EpsRat.const(self.floor())

    def __repr__(self):
        return f"EpsRat({self.num}/{self.den})"


# -------------------------------------------------------------- point configs

@dataclass(frozen=True)
class PointConfig:
    """k labelled points on the antidiagonal, with the slope data."""

    v: tuple          # EpsRat positions in (0, 1), by strand label
    s: EpsRat         # slope (n1/m1 - eps)
    t: EpsRat         # 1/(s+1)

    @property
    def k(self) -> int:
        return len(self.v)

    def sorted_position(self, x: EpsRat) -> int:
        return 1 + sum(1 for w in self.v if w < x)


def make_config(m1: int, n1: int, positions) -> PointConfig:
    s = EpsRat((Fraction(n1, m1), Fraction(-1)))
    t = EpsRat.const(1) / (s + EpsRat.const(1))
    return PointConfig(tuple(positions), s, t)


def opnext(cfg: PointConfig, x: EpsRat) -> EpsRat:
    if x == cfg.t:
        raise DegenerateGeometry("point sits exactly on the departure corner")
    if x < cfg.t:
        return x + (EpsRat.const(1) - cfg.t)
    return x - cfg.t


# --------------------------------------------------------------- braid words

@dataclass(frozen=True)
class BraidWord:
    """Generators in written order; the rightmost one acts first."""

    k: int
    gens: tuple

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.k != other.k:
            raise ValueError("strand count mismatch")
        return BraidWord(self.k, self.gens + other.gens)

    def __str__(self):
        names = {"T": "T{0}", "Ti": "T{0}^-1", "y": "y{0}", "z": "z{0}", "yt": "ytilde{0}"}
        return " ".join(names[g[0]].format(g[1]) for g in self.gens) or "1"


def train_up(a: int, b: int):
    """T_{a up b}; for a > b this is the starred descending train."""
    if a <= b:
        return [("T", i) for i in range(a, b)]
    return [("Ti", i) for i in range(a - 1, b - 1, -1)]


def train_down(a: int, b: int):
    """T_{a down b}; for a < b this is the starred ascending train."""
    if a >= b:
        return [("T", i) for i in range(a - 1, b - 1, -1)]
    return [("Ti", i) for i in range(a, b)]


def star(gens):
    flip = {"T": "Ti", "Ti": "T"}
    return [(flip.get(g[0], g[0]),) + g[1:] for g in gens]


def evaluate(w: BraidWord, f: VElem) -> VElem:
    """Apply the representation; exact u-powers throughout."""
    if w.k != f.k:
        raise ValueError(f"word on {w.k} strands applied to V_{f.k}")
    dom = f.dom
    u_inv = dom.monomial(1, -1, 0)
    qt_inv = dom.one / (dom.q * dom.t)
    for gen in reversed(w.gens):
        kind = gen[0]
        if kind == "T":
            f = vk.act_T(f, gen[1]).scale(u_inv)
        elif kind == "Ti":
            f = vk.act_T(f, gen[1], inverse=True).scale(dom.u)
        elif kind == "y":
            f = -vk.act_y(f, gen[1])
        elif kind == "z":
            f = vk.act_z(f, gen[1]).scale(qt_inv)
        elif kind == "yt":
            f = vk.act_ytilde(f, gen[1]).scale(-dom.q_power(1 - gen[1]))
        else:
            raise ValueError(f"unknown braid generator {gen!r}")
    return f


# ------------------------------------------------------------ elementary moves

def elementary_step(cfg: PointConfig, i: int):
    """Move strand i down the slope to its next antidiagonal crossing."""
    x = cfg.v[i - 1]
    nx = opnext(cfg, x)
    for j, w in enumerate(cfg.v):
        if j != i - 1 and w == nx:
            raise DegenerateGeometry("moved point collides with another strand")
    a = cfg.sorted_position(x)
    newv = cfg.v[:i - 1] + (nx,) + cfg.v[i:]
    new_cfg = PointConfig(newv, cfg.s, cfg.t)
    ap = new_cfg.sorted_position(nx)
    if x < cfg.t:
        gens = tuple(train_down(ap, a)) + (("z", a),)
    else:
        gens = tuple(star(train_up(ap, a))) + (("yt", a),)
    return BraidWord(cfg.k, gens), new_cfg


def trajectories(cfg: PointConfig, alpha) -> list:
    out = []
    for i, a in enumerate(alpha):
        x = cfg.v[i]
        traj = [x]
        for _ in range(a - 1):
            x = opnext(cfg, x)
            traj.append(x)
        out.append(traj)
    return out


def special_braid(cfg: PointConfig, alpha, order=None):
    """b over the index multiset {i repeated alpha_i - 1 times}.

    Admissibility (all trajectory points pairwise distinct and nonzero) is
    checked up front; any order of an admissible multiset yields the same
    monoid element, and the default order moves strand k first.
    """
    alpha = tuple(alpha)
    if len(alpha) != cfg.k or any(a < 1 for a in alpha):
        raise ValueError("alpha must assign a positive crossing count per strand")
    trajs = trajectories(cfg, alpha)
    flat = [p for tr in trajs for p in tr]
    for idx, p in enumerate(flat):
        if p.sign() <= 0 or p >= EpsRat.const(1):
            raise DegenerateGeometry("trajectory leaves the open interval")
        for p2 in flat[idx + 1:]:
            if p == p2:
                raise DegenerateGeometry("trajectories collide")
    if order is None:
        order = [i for i in range(cfg.k, 0, -1) for _ in range(alpha[i - 1] - 1)]
    else:
        order = list(order)
        from collections import Counter
        if Counter(order) != Counter(i for i in range(1, cfg.k + 1)
                                     for _ in range(alpha[i - 1] - 1)):
            raise ValueError("order is not a rearrangement of the move multiset")
    gens: tuple = ()
    cur = cfg
    for i in order:
        w, cur = elementary_step(cur, i)
        gens = w.gens + gens
    return BraidWord(cfg.k, gens), cur


# ------------------------------------------------------------- train rewriting

def sigma_shift(a: int, b: int, c: int) -> int:
    if a <= c < b:
        return c + 1
    if a >= c > b:
        return c - 1
    return c


def rule_instance(rule: str, params: dict):
    """(lhs, rhs) generator lists for one instance of a commutation rule."""
    if rule == "gluing":
        a, b, c = params["a"], params["b"], params["c"]
        return train_up(a, b) + train_up(b, c), train_up(a, c)
    if rule == "collision":
        a, b, c, d = params["a"], params["b"], params["c"], params["d"]
        if b == c:
            raise ValueError("collision rule needs b != c")
        b2 = sigma_shift(d, c, b)
        c2 = sigma_shift(a, b, c)
        a2 = sigma_shift(d, c2, a)
        d2 = sigma_shift(a2, b2, d)
        return (train_up(a, b) + train_down(c, d),
                train_down(c2, d2) + train_up(a2, b2))
    if rule == "overtaking":
        a, b, c, d = params["a"], params["b"], params["c"], params["d"]
        if not (d <= a < c and d <= b < c):
            raise ValueError("overtaking rule needs a, b in [d, c)")
        a2 = sigma_shift(d, c, a)
        b2 = sigma_shift(d, c, b)
        return (train_up(a, b) + train_up(c, d),
                train_up(c, d) + train_up(a2, b2))
    if rule == "Tz":
        a, b = params["a"], params["b"]
        return train_down(a, b) + [("z", b)], [("z", a)] + train_up(a, b)
    if rule == "Tytilde":
        a, b = params["a"], params["b"]
        return train_down(a, b) + [("yt", b)], [("yt", a)] + train_up(a, b)
    raise ValueError(f"unknown rule {rule!r}")


def rewrite_trains(w: BraidWord, rule: str, site: int, params: dict) -> BraidWord:
    """Replace the rule's left side at `site` with its right side."""
    lhs, rhs = rule_instance(rule, params)
    lhs, rhs = tuple(lhs), tuple(rhs)
    if w.gens[site:site + len(lhs)] != lhs:
        raise ValueError(f"word does not match rule {rule} at site {site}")
    return BraidWord(w.k, w.gens[:site] + rhs + w.gens[site + len(lhs):])


# --------------------------------------------------------- creation operators

def expand_ytilde(i: int, k: int):
    """ytilde_i as a word over T^{+-} and y."""
    return (tuple(train_down(i, 1)) + tuple(train_up(1, k)) + (("y", k),)
            + tuple(star(train_down(k, i))))


def expand_y(i: int, k: int):
    """y_i as a word over T^{+-} and ytilde (inverts the previous expansion)."""
    # y_1 = T*_{1 up k} ytilde_k T_{k down 1}; y_{i+1} = T_i^{-1} y_i T_i^{-1}
    word = tuple(star(train_up(1, k))) + (("yt", k),) + tuple(train_down(k, 1))
    for j in range(1, i):
        word = (("Ti", j),) + word + (("Ti", j),)
    return word


def creation_hom(w: BraidWord, which: str) -> BraidWord:
    """phi_+, phi_- or phi_+^* into the monoid on one more strand."""
    k = w.k
    out = []
    if which == "phi_plus":
        pre = []
        for g in w.gens:
            pre.extend(expand_y(g[1], k) if g[0] == "y" else [g])
        shift = {"T": 1, "Ti": 1, "z": 1, "yt": 1}
        for g in pre:
            out.append((g[0], g[1] + shift[g[0]]))
    elif which in ("phi_minus", "phi_plus_star"):
        pre = []
        for g in w.gens:
            pre.extend(expand_ytilde(g[1], k) if g[0] == "yt" else [g])
        delta = 0 if which == "phi_minus" else 1
        for g in pre:
            out.append((g[0], g[1] + delta))
    else:
        raise ValueError(f"unknown creation map {which!r}")
    return BraidWord(k + 1, tuple(out))


# ----------------------------------------------------- braids from colorings

def safe_height(lower: SlopeValue, upper: SlopeValue, m1: int, n1: int) -> SlopeValue:
    """A height strictly between the bounds whose line misses every lattice point."""
    for num, den in ((1, 2), (1, 3), (2, 5), (3, 7), (1, 7), (2, 9), (5, 11), (3, 11)):
        th = Fraction(num, den)
        r = lower.r + (upper.r - lower.r) * th
        e = Fraction(lower.e) + (Fraction(upper.e) - Fraction(lower.e)) * th
        if e.denominator == 1:
            y = r + e * Fraction(n1, m1)
            if y.denominator == 1:
                continue  # the line at this height passes through a lattice point
        return SlopeValue(r, e)
    raise DegenerateGeometry("no safe height found between the strata")


def coloring_geometry(m1: int, n1: int, intervals, h: SlopeValue):
    """Initial positions and crossing counts of a coloring's intervals."""
    he = EpsRat.from_slope_value(h)
    s = EpsRat((Fraction(n1, m1), Fraction(-1)))
    t = EpsRat.const(1) / (s + EpsRat.const(1))
    vs, alphas = [], []
    for (xi, yi) in intervals:
        xa = EpsRat.const(xi)
        xb = (EpsRat.const(yi) - he) / s
        if not xa < xb:
            raise DegenerateGeometry("interval is empty at this height")
        jmin = ((xa / t) + he).ceil()
        jmax = ((xb / t) + he).floor()
        assert jmin <= jmax, "every interval crosses the antidiagonal"
        v = (t * (EpsRat.const(jmax) - he)).frac()
        vs.append(v)
        alphas.append(jmax - jmin + 1)
    cfg = PointConfig(tuple(vs), s, t)
    return cfg, tuple(alphas)


def braid_of_coloring(m1: int, n1: int, intervals, h: SlopeValue):
    """The special braid of a coloring at line height h."""
    cfg, alphas = coloring_geometry(m1, n1, intervals, h)
    word, final_cfg = special_braid(cfg, alphas)
    return word, cfg, final_cfg


def braid_of_dp_coloring(dp, coloring):
    """Braid of a sweep.Coloring, with the height taken inside its stratum."""
    m1, n1 = dp.m // gcd(dp.m, dp.n), dp.n // gcd(dp.m, dp.n)
    h = safe_height(*dp.stratum_bounds(coloring.stratum), m1, n1)
    return braid_of_coloring(m1, n1, coloring.intervals, h)


def _inversions(cfg: PointConfig) -> int:
    labels = sorted(range(1, cfg.k + 1), key=lambda i: cfg.v[i - 1])
    return sum(1 for a in range(len(labels)) for b in range(a + 1, len(labels))
               if labels[a] > labels[b])


def braid_coloring_value(m1: int, n1: int, intervals, h: SlopeValue, dom, cap: int) -> VElem:
    """q^((inv_final - inv_initial)/2) * B_{s,c} applied to d_+^k(1)."""
    word, cfg0, cfg1 = braid_of_coloring(m1, n1, intervals, h)
    k = len(intervals)
    f = VElem.one(dom, 0, cap)
    for _ in range(k):
        f = vk.act_dplus(f)
    g = evaluate(word, f)
    return g.scale(dom.monomial(1, _inversions(cfg1) - _inversions(cfg0), 0))


# ------------------------------------------------------- single strand braids

def single_strand_braid(m: int, n: int) -> BraidWord:
    """One strand descending from near (1-t, t) to near (t, 1-t):
    n-1 horizontal and m-1 vertical wall crossings."""
    if gcd(m, n) != 1 or m < 1 or n < 1:
        raise ValueError("need coprime positive m, n")
    s = EpsRat((Fraction(n, m), Fraction(-1)))
    t = EpsRat.const(1) / (s + EpsRat.const(1))
    cfg = PointConfig((EpsRat.const(1) - t - EpsRat.eps(),), s, t)
    x = cfg.v[0]
    gens: tuple = ()
    horiz = vert = 0
    # the word lives in the free monoid on y_1 and z_1
    for _ in range((m - 1) + (n - 1)):
        if x < t:
            gens = (("z", 1),) + gens
            vert += 1
        else:
            gens = (("y", 1),) + gens
            horiz += 1
        x = opnext(cfg, x)
    assert (horiz, vert) == (n - 1, m - 1), "wall crossing counts are off"
    gap = t - x
    assert gap.sign() > 0 and (not gap.num or gap.num[0] == 0), \
        "strand does not finish just left of the corner"
    return BraidWord(1, gens)


def single_strand_family(m: int, n: int, a: int) -> BraidWord:
    """(b_{m,n} y_1 z_1)^(a-1) b_{m,n}."""
    if a < 1:
        raise ValueError("need a >= 1")
    b = single_strand_braid(m, n)
    loop = b.gens + (("y", 1), ("z", 1))
    return BraidWord(1, loop * (a - 1) + b.gens)
