"""Exact scalars: rational functions in u and t over the integers, u^2 = q.

Every coefficient in the library is a CoefRat (exact mode) or a Fraction
(fast mode, all scalars evaluated at a fixed rational point up front).
Both are immutable and support +, -, *, /, ** and truthiness, so the rest
of the code is generic over the scalar type via a Domain object.
"""

from __future__ import annotations

import os
import random
from fractions import Fraction

if os.environ.get("SHUFFLEALG_PURE_KERNEL"):
    from . import _kernel_py as K
else:
    try:
        from . import _kernel as K  # type: ignore[no-redef]
    except ImportError:
        from . import _kernel_py as K

pack = K.pack
unpack = K.unpack

_ONE = {0: 1}


class CoefRatError(ArithmeticError):
    pass


def _int_content(p):
    from math import gcd
    g = 0
    for c in p.values():
        g = gcd(g, c)
        if g == 1:
            return 1
    return g


def _mono_content_key(p):
    eu = min(k >> K.KEY_SHIFT for k in p)
    et = min(k & K.KEY_MASK for k in p)
    return pack(eu, et)


def _sympy_gcd(a, b):
    # Slow path, only reached when neither argument divides the other.
    from sympy import ZZ
    from sympy.polys.rings import ring
    R, _, _ = ring("u,t", ZZ)
    pa = R.from_dict({unpack(k): c for k, c in a.items()})
    pb = R.from_dict({unpack(k): c for k, c in b.items()})
    g = pa.gcd(pb)
    return {pack(*mono): int(c) for mono, c in g.to_dict().items()}


def _normalize(num, den):
    if not den:
        raise CoefRatError("zero denominator")
    if not num:
        return {}, dict(_ONE)
    kc = _mono_content_key(num)
    kd = _mono_content_key(den)
    common = pack(min(kc >> K.KEY_SHIFT, kd >> K.KEY_SHIFT),
                  min(kc & K.KEY_MASK, kd & K.KEY_MASK))
    if common:
        num = {k - common: c for k, c in num.items()}
        den = {k - common: c for k, c in den.items()}
    from math import gcd
    g = gcd(_int_content(num), _int_content(den))
    if g > 1:
        num = {k: c // g for k, c in num.items()}
        den = {k: c // g for k, c in den.items()}
    if den != _ONE and den != {0: -1}:
        q = K.p_divexact(num, den)
        if q is not None:
            num, den = q, dict(_ONE)
        else:
            q = K.p_divexact(den, num)
            if q is not None:
                num, den = dict(_ONE), q
            else:
                g = _sympy_gcd(num, den)
                if len(g) > 1 or g != _ONE:
                    num = K.p_divexact(num, g)
                    den = K.p_divexact(den, g)
                    assert num is not None and den is not None
    if den[max(den)] < 0:
        num = K.p_neg(num)
        den = K.p_neg(den)
    return num, den


class CoefRat:
    """Normalized fraction of integer polynomials in u, t."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _normalized=False):
        if den is None:
            den = dict(_ONE)
        if not _normalized:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den

    # -- constructors ------------------------------------------------
    @staticmethod
    def from_int(n: int) -> "CoefRat":
        return CoefRat({0: n} if n else {}, dict(_ONE), _normalized=True)

    @staticmethod
    def from_fraction(fr) -> "CoefRat":
        fr = Fraction(fr)
        num = {0: fr.numerator} if fr.numerator else {}
        return CoefRat(num, {0: fr.denominator}, _normalized=True)

    @staticmethod
    def monomial(c: int, eu: int = 0, et: int = 0) -> "CoefRat":
        """c * u^eu * t^et, Laurent exponents allowed."""
        if c == 0:
            return CoefRat.from_int(0)
        nu, du = (eu, 0) if eu >= 0 else (0, -eu)
        nt, dt = (et, 0) if et >= 0 else (0, -et)
        return CoefRat({pack(nu, nt): c}, {pack(du, dt): 1}, _normalized=c > 0 or bool(pack(du, dt)))

    # -- arithmetic --------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, CoefRat):
            return NotImplemented
        if self.den == other.den:
            num = K.p_add(self.num, other.num)
            if self.den == _ONE:
                return CoefRat(num, dict(_ONE), _normalized=True)
            return CoefRat(num, dict(self.den))
        num = K.p_add(K.p_mul(self.num, other.den), K.p_mul(other.num, self.den))
        return CoefRat(num, K.p_mul(self.den, other.den))

    def __neg__(self):
        return CoefRat(K.p_neg(self.num), dict(self.den), _normalized=True)

    def __sub__(self, other):
        if not isinstance(other, CoefRat):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, CoefRat):
            return NotImplemented
        if self.den == _ONE and other.den == _ONE:
            return CoefRat(K.p_mul(self.num, other.num), dict(_ONE), _normalized=True)
        return CoefRat(K.p_mul(self.num, other.num), K.p_mul(self.den, other.den))

    def __truediv__(self, other):
        if not isinstance(other, CoefRat):
            return NotImplemented
        if not other.num:
            raise CoefRatError("division by zero")
        return CoefRat(K.p_mul(self.num, other.den), K.p_mul(self.den, other.num))

    def __pow__(self, n: int):
        if n < 0:
            if not self.num:
                raise CoefRatError("division by zero")
            base = CoefRat(dict(self.den), dict(self.num))
            n = -n
        else:
            base = self
        out = CoefRat.from_int(1)
        for _ in range(n):
            out = out * base
        return out

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, int):
            other = CoefRat.from_int(other)
        if not isinstance(other, CoefRat):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((tuple(sorted(self.num.items())), tuple(sorted(self.den.items()))))

    # -- predicates and views ----------------------------------------
    def is_one(self) -> bool:
        return self.num == _ONE and self.den == _ONE

    def has_integer_q_degree(self) -> bool:
        """True iff every monomial's u-exponent is even (both num and den)."""
        return all((k >> K.KEY_SHIFT) % 2 == 0 for k in self.num) and \
            all((k >> K.KEY_SHIFT) % 2 == 0 for k in self.den)

    def eval_at(self, q0, t0) -> Fraction:
        """Exact value at q = q0, t = t0 (u = sqrt(q0) when needed)."""
        q0, t0 = Fraction(q0), Fraction(t0)
        if self.has_integer_q_degree():
            u2 = None
        else:
            u2 = _rational_sqrt(q0)
            if u2 is None:
                raise CoefRatError("q0 has no rational square root and u occurs with odd exponent")

        def ev(p):
            s = Fraction(0)
            for k, c in p.items():
                eu, et = unpack(k)
                if eu % 2 == 0:
                    s += c * q0 ** (eu // 2) * t0 ** et
                else:
                    s += c * u2 ** eu * t0 ** et
            return s

        dv = ev(self.den)
        if dv == 0:
            raise CoefRatError("denominator vanishes at the evaluation point")
        return ev(self.num) / dv

    def __str__(self):
        s = _poly_str(self.num)
        if self.den != _ONE:
            s += " / " + _poly_str(self.den)
        return s

    __repr__ = __str__


def _rational_sqrt(fr: Fraction):
    from math import isqrt
    if fr < 0:
        return None
    a, b = isqrt(fr.numerator), isqrt(fr.denominator)
    if a * a == fr.numerator and b * b == fr.denominator:
        return Fraction(a, b)
    return None


def _poly_str(p) -> str:
    if not p:
        return "0"
    parts = []
    for k in sorted(p, reverse=True):
        c = p[k]
        eu, et = unpack(k)
        factors = []
        if eu:
            factors.append("u" if eu == 1 else f"u^{eu}")
        if et:
            factors.append("t" if et == 1 else f"t^{et}")
        if not factors:
            body = str(abs(c))
        else:
            body = "*".join(factors)
            if abs(c) != 1:
                body = f"{abs(c)}*{body}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


def parse_scalar_token(tok: str, dom):
    """Parse tokens like 'q', 'q^-1', 't^2', '-1', '3', 'u', 'q*t'."""
    out = dom.one
    for piece in tok.split("*"):
        piece = piece.strip()
        neg = piece.startswith("-")
        if neg:
            piece = piece[1:]
        if "^" in piece:
            base, _, e = piece.partition("^")
            e = int(e)
        else:
            base, e = piece, 1
        if base == "q":
            f = dom.monomial(1, 2 * e, 0)
        elif base == "u":
            f = dom.monomial(1, e, 0)
        elif base == "t":
            f = dom.monomial(1, 0, e)
        elif base.isdigit():
            f = dom.from_fraction(Fraction(int(base)) ** e)
        else:
            raise ValueError(f"bad scalar token {tok!r}")
        if neg:
            f = -f
        out = out * f
    return out


class ExactDomain:
    """Scalar factory for exact mode (CoefRat everywhere)."""

    name = "exact"

    def __init__(self):
        self.zero = CoefRat.from_int(0)
        self.one = CoefRat.from_int(1)
        self.u = CoefRat.monomial(1, 1, 0)
        self.t = CoefRat.monomial(1, 0, 1)
        self.q = CoefRat.monomial(1, 2, 0)
        self.cache: dict = {}

    @staticmethod
    def monomial(c: int, eu: int = 0, et: int = 0):
        return CoefRat.monomial(c, eu, et)

    @staticmethod
    def from_int(n: int):
        return CoefRat.from_int(n)

    @staticmethod
    def from_fraction(fr):
        return CoefRat.from_fraction(fr)

    def q_power(self, j: int):
        return self.monomial(1, 2 * j, 0)

    @staticmethod
    def to_str(s) -> str:
        return str(s)


class FastDomain:
    """Scalar factory for fast mode: everything is a Fraction at (q0, t0).

    q0 = u0^2 for a random rational u0, so odd u-powers stay exact.  Fast
    mode is a pre-screen only; identities it accepts must be re-proved in
    exact mode.
    """

    name = "fast"

    def __init__(self, u0=None, t0=None, seed=None):
        rng = random.Random(seed)
        if u0 is None:
            u0 = Fraction(rng.randint(2, 19), rng.randint(2, 19) * 7 + 1)
        if t0 is None:
            t0 = Fraction(rng.randint(2, 19), rng.randint(2, 19) * 5 + 2)
        self.u0 = Fraction(u0)
        self.t0 = Fraction(t0)
        self.zero = Fraction(0)
        self.one = Fraction(1)
        self.u = self.u0
        self.t = self.t0
        self.q = self.u0 * self.u0
        self.cache: dict = {}

    def monomial(self, c: int, eu: int = 0, et: int = 0):
        return c * self.u0 ** eu * self.t0 ** et

    @staticmethod
    def from_int(n: int):
        return Fraction(n)

    @staticmethod
    def from_fraction(fr):
        return Fraction(fr)

    def q_power(self, j: int):
        return self.q ** j

    @staticmethod
    def to_str(s) -> str:
        return str(s)


def arith(a: CoefRat, b: CoefRat, kind: str) -> CoefRat:
    """Thin named wrapper over the operators (CLI surface)."""
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "div":
        return a / b
    raise ValueError(f"unknown arith kind {kind!r}")
