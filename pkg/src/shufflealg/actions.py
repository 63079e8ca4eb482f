"""The tower of algebra actions indexed by coprime slopes.

Starting from the two base actions (the standard one and its conjugate),
each Farey mediant (m+m', n+n') of an intertwined sector
((m,n), (m',n')) with m'n - mn' = 1 gets a new pair of actions:

    new d_+  = -(qt)^{-1} * z_1 * d_+        (z_1 = partner's y_1)
    new d_+* = - y_1 * d_+*                  (y_1 = partner's y_1)

T and d_- never change.  The y_1 of any handle is recovered from its own
d_+ through the commutator formula, with q inverted on conjugate handles.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from . import vkspace as vk
from .symfunc import SymFunc
from .vkspace import VElem


# ------------------------------------------------------- mediant decomposition

@dataclass(frozen=True)
class MediantWord:
    """Stern-Brocot descent to (m, n): letters over {N, S} plus the final sector."""

    letters: tuple
    endpoints: tuple  # ((m,n) steep side, (m',n') shallow side), m'n - mn' = 1
    chain: tuple      # successive mediants, ending at (m, n) when not a seed

    def replay(self):
        """Recompute the sector from the seed; used by the invariant check."""
        left, right = (0, 1), (1, 0)
        for letter in self.letters:
            mid = (left[0] + right[0], left[1] + right[1])
            if letter == "S":
                right = mid
            elif letter == "N":
                left = mid
            else:
                raise ValueError(f"bad letter {letter!r}")
        return left, right


def mediant_decompose(m: int, n: int) -> MediantWord:
    if m < 0 or n < 0 or (m, n) == (0, 0) or gcd(m, n) != 1:
        raise ValueError("need m, n >= 0 coprime and not both zero")
    if (m, n) in ((0, 1), (1, 0)):
        return MediantWord((), ((0, 1), (1, 0)), ())
    left, right = (0, 1), (1, 0)
    letters = []
    chain = []
    while True:
        mid = (left[0] + right[0], left[1] + right[1])
        chain.append(mid)
        if mid == (m, n):
            word = MediantWord(tuple(letters), (left, right), tuple(chain))
            assert word.replay() == (left, right)
            return word
        # steeper than the mediant <=> n*mid_m - m*mid_n > 0
        if n * mid[0] - m * mid[1] > 0:
            right = mid
            letters.append("S")
        else:
            left = mid
            letters.append("N")


# ------------------------------------------------------------- action handles

class ActionHandle:
    """One action of the pair at slope (m, n).

    star=False: an action of the q-algebra (T_i as is);
    star=True: an action of the conjugate algebra (T_i inverted).
    """

    def __init__(self, m, n, star, dplus):
        self.m, self.n, self.star = m, n, star
        self._dplus = dplus

    def dplus(self, f: VElem) -> VElem:
        return self._dplus(f)

    @staticmethod
    def dminus(f: VElem) -> VElem:
        return vk.act_dminus(f)

    def T(self, f: VElem, i: int, inverse: bool = False) -> VElem:
        return vk.act_T(f, i, inverse=(inverse != self.star))

    def y1(self, f: VElem) -> VElem:
        """The handle's own y_1, from the commutator formula."""
        dom = f.dom
        k = f.k
        g = f
        for j in range(1, k):
            g = vk.act_T(g, j, inverse=self.star)
        comm = self.dplus(vk.act_dminus(g)) - vk.act_dminus(self.dplus(g))
        if self.star:
            scale = dom.q_power(k) / (dom.one - dom.q)
        else:
            scale = dom.one / (dom.q_power(k - 1) * (dom.q - dom.one))
        return comm.scale(scale)

    def y(self, f: VElem, i: int) -> VElem:
        """y_i via the Hecke recursion from y_1."""
        if not 1 <= i <= f.k:
            raise ValueError(f"y_{i} undefined on V_{f.k}")
        dom = f.dom
        if i == 1:
            return self.y1(f)
        # q-algebra: y_{i+1} = q T_i^{-1} y_i T_i^{-1}; conjugate: q -> q^{-1}
        inv = not self.star
        g = vk.act_T(f, i - 1, inverse=inv)
        g = self.y(g, i - 1)
        g = vk.act_T(g, i - 1, inverse=inv)
        return g.scale(dom.q_power(-1 if self.star else 1))

    def word(self, f: VElem, gens) -> VElem:
        """Apply a generator word (written order, rightmost first) under this action."""
        for gen in reversed(gens):
            kind = gen[0]
            if kind == "dp":
                f = self.dplus(f)
            elif kind == "dm":
                f = vk.act_dminus(f)
            elif kind == "T":
                f = self.T(f, gen[1])
            elif kind == "Ti":
                f = self.T(f, gen[1], inverse=True)
            elif kind == "y":
                f = self.y(f, gen[1])
            else:
                raise ValueError(f"generator {gen!r} not available on a handle")
        return f


class ActionTower:
    """Memoized handles for all requested coprime slopes."""

    def __init__(self, dom):
        self.dom = dom
        base_q = ActionHandle(0, 1, False, vk.act_dplus)
        base_star = ActionHandle(1, 0, True, vk.act_dplus_star)
        self._handles = {(0, 1, False): base_q, (1, 0, True): base_star}

    def handle(self, m: int, n: int, star: bool) -> ActionHandle:
        key = (m, n, bool(star))
        hit = self._handles.get(key)
        if hit is not None:
            return hit
        if (m, n) == (1, 0) and not star:
            base = self.handle(1, 0, True)
            h = ActionHandle(1, 0, False,
                             lambda f: base.dplus(f).scale(-self.dom.q_power(f.k)))
        elif (m, n) == (0, 1) and star:
            base = self.handle(0, 1, False)
            h = ActionHandle(0, 1, True,
                             lambda f: base.dplus(f).scale(-self.dom.q_power(-f.k)))
        else:
            word = mediant_decompose(m, n)
            left, right = word.endpoints
            h = self._replicate(left, right, m, n, star)
        self._handles[key] = h
        return h

    def _replicate(self, left, right, m, n, star) -> ActionHandle:
        rho = self.handle(left[0], left[1], False)
        rho_star = self.handle(right[0], right[1], True)
        dom = self.dom
        if star:
            def dplus(f, _a=rho, _b=rho_star):
                return -_a.y1(_b.dplus(f))
        else:
            scale = -(dom.q_power(-1) / dom.t)

            def dplus(f, _a=rho, _b=rho_star, _s=scale):
                return _b.y1(_a.dplus(f)).scale(_s)
        return ActionHandle(m, n, star, dplus)


def build_action(dom, m: int, n: int, star: bool = False,
                 tower: ActionTower | None = None) -> ActionHandle:
    if gcd(m, n) != 1:
        raise ValueError("slope components must be coprime")
    if tower is None:
        tower = ActionTower(dom)
    return tower.handle(m, n, star)


# ----------------------------------------------------------- main evaluations

def lhs_compositional(m1: int, n1: int, g: int, alpha, dom,
                      tower: ActionTower | None = None) -> SymFunc:
    """(-1)^(g(m1+1)) q^(r-g) * rho*_{m1,n1}(d_-^r y^(alpha-1) d_+^r) applied to 1."""
    alpha = tuple(alpha)
    r = len(alpha)
    if gcd(m1, n1) != 1 or sum(alpha) != g or any(a < 1 for a in alpha):
        raise ValueError("need coprime (m1, n1) and a composition of g")
    h = build_action(dom, m1, n1, star=True, tower=tower)
    f = VElem.one(dom, 0, g * n1)
    for _ in range(r):
        f = h.dplus(f)
    for i, a in enumerate(alpha):
        for _ in range(a - 1):
            f = h.y(f, i + 1)
    for _ in range(r):
        f = vk.act_dminus(f)
    sign = -dom.one if (g * (m1 + 1)) % 2 else dom.one
    f = f.scale(sign * dom.q_power(r - g))
    return f.as_symfunc()


def op_D(n: int, f: SymFunc) -> SymFunc:
    """D_n F = F[X + (q-1)(t-1)/z] pExp[-zX] |_{z^n}, truncated at the cap."""
    from . import symfunc as sf
    dom = f.dom
    if n < -f.cap:
        raise ValueError("index below -cap")
    # (q-1)(t-1) = qt - q - t + 1, four signed monomial terms on z^{-1}
    alphabet = [sf.AlphaTerm(is_x=True),
                sf.AlphaTerm(sign=1, eu=2, et=1, aux=(("z", -1),)),
                sf.AlphaTerm(sign=-1, eu=2, aux=(("z", -1),)),
                sf.AlphaTerm(sign=-1, et=1, aux=(("z", -1),)),
                sf.AlphaTerm(sign=1, aux=(("z", -1),))]
    pieces = sf.plethystic_substitute(f, alphabet)
    pexp = sf.pexp_coefficients(dom, f.cap, sf.AlphaTerm(sign=-1, aux=(("z", 1),), is_x=True),
                                "z", 0, f.cap + n)
    out = SymFunc.zero(dom, f.cap)
    for aux, g in pieces.items():
        j = dict(aux).get("z", 0)  # j <= 0
        i = n - j
        if i in pexp:
            out = out + g * pexp[i]
    return out


def op_C(a: int, f: SymFunc) -> SymFunc:
    """(C_a F) = (-q)^(1-a) F[X + (q^{-1}-1)z] pExp[z^{-1}X] z^a |_{z^0}."""
    from . import symfunc as sf
    dom = f.dom
    alphabet = [sf.AlphaTerm(is_x=True),
                sf.AlphaTerm(sign=1, eu=-2, aux=(("z", 1),)),
                sf.AlphaTerm(sign=-1, aux=(("z", 1),))]
    pieces = sf.plethystic_substitute(f, alphabet)
    out = SymFunc.zero(dom, f.cap)
    for aux, g in pieces.items():
        j = dict(aux).get("z", 0)
        i = j + a
        if i < 0 or i > f.cap:
            continue
        out = out + g * SymFunc.h(dom, f.cap, i)
    sign = dom.monomial((-1) ** ((1 - a) % 2), 2 * (1 - a), 0)
    return out.scale(sign)


def c_alpha_constant_term(alpha, dom, cap: int | None = None) -> SymFunc:
    """C_{alpha_1} ... C_{alpha_r} 1 by iterated constant-term extraction."""
    alpha = tuple(alpha)
    if cap is None:
        cap = sum(alpha)
    f = SymFunc.one(dom, cap)
    for a in reversed(alpha):
        f = op_C(a, f)
    return f


def c_alpha_identity_check(alpha, dom, tower: ActionTower | None = None):
    """Constant-term C_alpha vs the conjugate-action word at slope (0, 1)."""
    alpha = tuple(alpha)
    if not alpha:
        raise ValueError("alpha must be nonempty")
    k = sum(alpha)
    r = len(alpha)
    lhs = c_alpha_constant_term(alpha, dom)
    h = build_action(dom, 0, 1, star=True, tower=tower)
    f = VElem.one(dom, 0, k)
    for _ in range(r):
        f = h.dplus(f)
    for i, a in enumerate(alpha):
        for _ in range(a - 1):
            f = h.y(f, i + 1)
    for _ in range(r):
        f = vk.act_dminus(f)
    sign = -dom.one if k % 2 else dom.one
    rhs = f.as_symfunc().scale(sign * dom.q_power(r - k))
    return lhs == rhs, lhs, rhs


def nabla_conjugation_check(path, dom):
    """The two realizations of the conjugated path operator agree on 1.

    Follows the (n,n) path right to left, applying d_- for North steps and
    either -(qt)^{-1} z_1 d_+ or q^k y_1 d_+* for East steps.
    """
    if path.m != path.n:
        raise ValueError("need an (n,n) path")
    dom_scale = -(dom.q_power(-1) / dom.t)

    def east1(f):
        return vk.act_z(vk.act_dplus(f), 1).scale(dom_scale)

    def east2(f):
        return vk.act_y(vk.act_dplus_star(f), 1).scale(dom.q_power(f.k))

    a = b = VElem.one(dom, 0, path.n)
    for bit in reversed(path.steps):
        if bit:
            a = vk.act_dminus(a)
            b = vk.act_dminus(b)
        else:
            a = east1(a)
            b = east2(b)
    return a == b, a, b
