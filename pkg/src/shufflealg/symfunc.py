"""Symmetric functions in the monomial basis, with plethystic substitution.

SymFunc stores a map {partition: scalar} truncated at a total-degree cap.
Basis conversions route through power sums, whose transition matrices are
computed once per degree with Fraction coefficients (domain independent).
Plethysm uses the lambda-ring rule: q, t, u and the auxiliary variables
(y_i, z) are rank one, so p_r pulls them out raised to the r-th power.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import factorial


# ----------------------------------------------------------------- partitions

@lru_cache(maxsize=None)
def partitions_of(n: int, max_part: int | None = None) -> tuple[tuple[int, ...], ...]:
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def zee(mu) -> int:
    """Order of the centralizer of a permutation of cycle type mu."""
    out, last, run = 1, None, 0
    for part in mu:
        if part == last:
            run += 1
        else:
            last, run = part, 1
        out *= part * run
    return out


# ------------------------------------------------- power sum <-> monomial

@lru_cache(maxsize=None)
def _m_mul_p(lam: tuple, r: int) -> dict:
    """m_lam * p_r in the monomial basis (integer coefficients)."""
    out: dict = {}
    seen = set()
    for idx in range(len(lam) + 1):
        v = lam[idx] if idx < len(lam) else 0
        if v in seen:
            continue
        seen.add(v)
        if idx < len(lam):
            new = lam[:idx] + (v + r,) + lam[idx + 1:]
        else:
            new = lam + (r,)
        new = tuple(sorted(new, reverse=True))
        mult = new.count(v + r)
        out[new] = out.get(new, 0) + mult
    return out


@lru_cache(maxsize=None)
def p_to_mono(mu: tuple) -> dict:
    """p_mu expanded in the monomial basis (integer coefficients)."""
    state = {(): 1}
    for r in mu:
        nxt: dict = {}
        for lam, c in state.items():
            for lam2, c2 in _m_mul_p(lam, r).items():
                nxt[lam2] = nxt.get(lam2, 0) + c * c2
        state = nxt
    return state


def _invert_by_partitions(rows: dict, n: int) -> dict:
    """Invert a {partition: {partition: Fraction}} matrix on degree n."""
    keys = list(partitions_of(n))
    size = len(keys)
    idx = {lam: i for i, lam in enumerate(keys)}
    mat = [[Fraction(rows[a].get(b, 0)) for b in keys] for a in keys]
    inv = [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]
    for col in range(size):
        piv = next(r for r in range(col, size) if mat[r][col] != 0)
        mat[col], mat[piv] = mat[piv], mat[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        pc = mat[col][col]
        mat[col] = [x / pc for x in mat[col]]
        inv[col] = [x / pc for x in inv[col]]
        for r in range(size):
            if r != col and mat[r][col]:
                f = mat[r][col]
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    out = {}
    for a in keys:
        row = {}
        for b in keys:
            v = inv[idx[a]][idx[b]]
            if v:
                row[b] = v
        out[a] = row
    return out


@lru_cache(maxsize=None)
def _mono_to_p_matrix(n: int) -> dict:
    rows = {mu: {lam: Fraction(c) for lam, c in p_to_mono(mu).items()}
            for mu in partitions_of(n)}
    return _invert_by_partitions(rows, n)


def mono_to_p(lam: tuple) -> dict:
    """m_lam in the power sum basis (Fraction coefficients)."""
    return _mono_to_p_matrix(sum(lam))[lam]


@lru_cache(maxsize=None)
def h_to_p(n: int) -> dict:
    return {mu: Fraction(1, zee(mu)) for mu in partitions_of(n)}


@lru_cache(maxsize=None)
def e_to_p(n: int) -> dict:
    return {mu: Fraction((-1) ** (n - len(mu)), zee(mu)) for mu in partitions_of(n)}


def _prod_to_p(single, lam: tuple) -> dict:
    """Expand a product basis (h_lam or e_lam) into power sums."""
    state = {(): Fraction(1)}
    for part in lam:
        nxt: dict = {}
        for mu, c in state.items():
            for nu, c2 in single(part).items():
                key = tuple(sorted(mu + nu, reverse=True))
                nxt[key] = nxt.get(key, 0) + c * c2
        state = nxt
    return state


@lru_cache(maxsize=None)
def _p_to_basis_matrix(n: int, which: str) -> dict:
    single = h_to_p if which == "h" else e_to_p
    rows = {lam: _prod_to_p(single, lam) for lam in partitions_of(n)}
    return _invert_by_partitions(rows, n)


@lru_cache(maxsize=None)
def mono_mult_table(lam: tuple, mu: tuple) -> dict:
    """Structure constants of m_lam * m_mu in the monomial basis."""
    if sum(lam) == 0:
        return {mu: 1}
    if sum(mu) == 0:
        return {lam: 1}
    if sum(lam) > sum(mu) or (sum(lam) == sum(mu) and lam > mu):
        return mono_mult_table(mu, lam)
    nvars = len(lam) + len(mu)
    pl = set(itertools.permutations(lam + (0,) * (nvars - len(lam))))
    pm = set(itertools.permutations(mu + (0,) * (nvars - len(mu))))
    out: dict = {}
    for a in pl:
        for b in pm:
            g = tuple(x + y for x, y in zip(a, b))
            if all(g[i] >= g[i + 1] for i in range(nvars - 1)):
                key = tuple(x for x in g if x)
                out[key] = out.get(key, 0) + 1
    return out


# ------------------------------------------------------------------ SymFunc

class SymFunc:
    """Graded symmetric function, monomial basis, degree-capped."""

    __slots__ = ("dom", "cap", "coeffs")

    def __init__(self, dom, cap: int, coeffs: dict | None = None):
        self.dom = dom
        self.cap = cap
        self.coeffs = {} if coeffs is None else coeffs

    @staticmethod
    def zero(dom, cap):
        return SymFunc(dom, cap)

    @staticmethod
    def one(dom, cap):
        return SymFunc(dom, cap, {(): dom.one})

    @staticmethod
    def from_terms(dom, cap, items) -> "SymFunc":
        out: dict = {}
        for lam, c in items:
            if sum(lam) > cap or not c:
                continue
            s = out.get(lam)
            s = c if s is None else s + c
            if s:
                out[lam] = s
            elif lam in out:
                del out[lam]
        return SymFunc(dom, cap, out)

    @staticmethod
    def h(dom, cap, n: int) -> "SymFunc":
        if n > cap:
            return SymFunc(dom, cap)
        table = _p_basis_to_mono(h_to_p(n))
        return SymFunc(dom, cap, {lam: dom.from_fraction(c) for lam, c in table.items()})

    @staticmethod
    def e(dom, cap, n: int) -> "SymFunc":
        if n > cap:
            return SymFunc(dom, cap)
        return SymFunc(dom, cap, {(1,) * n: dom.one} if n else {(): dom.one})

    def __add__(self, other):
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            s = out.get(lam)
            s = c if s is None else s + c
            if s:
                out[lam] = s
            elif lam in out:
                del out[lam]
        return SymFunc(self.dom, self.cap, out)

    def __neg__(self):
        return SymFunc(self.dom, self.cap, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s) -> "SymFunc":
        if not s:
            return SymFunc(self.dom, self.cap)
        return SymFunc(self.dom, self.cap, {k: c * s for k, c in self.coeffs.items()})

    def __mul__(self, other):
        out: dict = {}
        for lam, c in self.coeffs.items():
            for mu, c2 in other.coeffs.items():
                if sum(lam) + sum(mu) > self.cap:
                    continue
                cc = c * c2
                for nu, n in mono_mult_table(lam, mu).items():
                    s = out.get(nu)
                    v = cc * self.dom.from_int(n)
                    s = v if s is None else s + v
                    if s:
                        out[nu] = s
                    elif nu in out:
                        del out[nu]
        return SymFunc(self.dom, self.cap, out)

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def degree(self) -> int:
        return max((sum(lam) for lam in self.coeffs), default=0)

    def homogeneous(self, d: int) -> "SymFunc":
        return SymFunc(self.dom, self.cap,
                       {lam: c for lam, c in self.coeffs.items() if sum(lam) == d})

    def map_coeffs(self, f) -> "SymFunc":
        out = {}
        for lam, c in self.coeffs.items():
            v = f(c)
            if v:
                out[lam] = v
        return SymFunc(self.dom, self.cap, out)

    def __str__(self):
        if not self.coeffs:
            return "0"
        bits = []
        for lam in sorted(self.coeffs, key=lambda l: (sum(l), l)):
            bits.append(f"({self.dom.to_str(self.coeffs[lam])})*m{list(lam)}")
        return " + ".join(bits)

    __repr__ = __str__

    def to_json(self) -> dict:
        terms = [{"partition": list(lam), "coef": self.dom.to_str(c)}
                 for lam, c in sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0]), kv[0]))]
        return {"basis": "m", "cap": self.cap, "terms": terms}


def _p_basis_to_mono(pdict: dict) -> dict:
    out: dict = {}
    for mu, c in pdict.items():
        for lam, n in p_to_mono(mu).items():
            v = out.get(lam, Fraction(0)) + c * n
            if v:
                out[lam] = v
            elif lam in out:
                del out[lam]
    return out


def basis_convert(f: SymFunc, to: str) -> dict:
    """Coefficients of f in the requested basis; round-trips exactly."""
    if to in ("m", "monomial"):
        return dict(f.coeffs)
    dom = f.dom
    out: dict = {}
    by_degree: dict = {}
    for lam, c in f.coeffs.items():
        by_degree.setdefault(sum(lam), {})[lam] = c
    for n, part in by_degree.items():
        pcoef: dict = {}
        for lam, c in part.items():
            for mu, fr in mono_to_p(lam).items():
                s = pcoef.get(mu, dom.zero) + c * dom.from_fraction(fr)
                if s:
                    pcoef[mu] = s
                elif mu in pcoef:
                    del pcoef[mu]
        if to in ("p", "powersum"):
            out.update(pcoef)
            continue
        which = "h" if to in ("h", "homogeneous") else "e"
        if to not in ("h", "homogeneous", "e", "elementary"):
            raise ValueError(f"unknown basis {to!r}")
        mat = _p_to_basis_matrix(n, which)
        for mu, c in pcoef.items():
            for lam, fr in mat[mu].items():
                s = out.get(lam, dom.zero) + c * dom.from_fraction(fr)
                if s:
                    out[lam] = s
                elif lam in out:
                    del out[lam]
    return out


def from_basis(dom, cap: int, basis: str, coeffs: dict) -> SymFunc:
    """Build a SymFunc from coefficients in basis m/p/h/e."""
    if basis in ("m", "monomial"):
        return SymFunc(dom, cap, {lam: c for lam, c in coeffs.items() if c and sum(lam) <= cap})
    out = SymFunc.zero(dom, cap)
    for lam, c in coeffs.items():
        if basis in ("p", "powersum"):
            table = _p_basis_to_mono({lam: Fraction(1)})
        elif basis in ("h", "homogeneous"):
            table = _p_basis_to_mono(_prod_to_p(h_to_p, lam))
        elif basis in ("e", "elementary"):
            table = _p_basis_to_mono(_prod_to_p(e_to_p, lam))
        else:
            raise ValueError(f"unknown basis {basis!r}")
        out = out + SymFunc.from_terms(dom, cap,
                                       ((m, c * dom.from_fraction(fr)) for m, fr in table.items()))
    return out


# ------------------------------------------------------------------ plethysm

def m_expand_one_var(dom, lam: tuple, sign: int):
    """Expansion of m_lam[X + sign*(q-1)*y] as [(j, {partition: scalar})].

    j is the exponent of the single auxiliary variable y; entry j carries
    the symmetric-function coefficient of y^j.
    """
    key = ("m1v", lam, sign)
    hit = dom.cache.get(key)
    if hit is not None:
        return hit
    acc: dict = {}
    for mu, fr in mono_to_p(lam).items():
        base = dom.from_fraction(fr)
        ell = len(mu)
        for mask in range(1 << ell):
            j = 0
            rest = []
            c = base
            for i in range(ell):
                if mask & (1 << i):
                    j += mu[i]
                    factor = dom.q_power(mu[i]) - dom.one
                    if sign < 0:
                        factor = -factor
                    c = c * factor
                else:
                    rest.append(mu[i])
            key2 = tuple(sorted(rest, reverse=True))
            slot = acc.setdefault(j, {})
            s = slot.get(key2, dom.zero) + c
            if s:
                slot[key2] = s
            elif key2 in slot:
                del slot[key2]
    out = []
    for j in sorted(acc):
        mdict: dict = {}
        for mu, c in acc[j].items():
            for lam2, n in p_to_mono(mu).items():
                s = mdict.get(lam2, dom.zero) + c * dom.from_int(n)
                if s:
                    mdict[lam2] = s
                elif lam2 in mdict:
                    del mdict[lam2]
        if mdict:
            out.append((j, mdict))
    dom.cache[key] = out
    return out


class AlphaTerm:
    """One additive term of a plethystic alphabet: sign * u^eu * t^et * aux * [X].

    aux is a tuple of (variable name, integer exponent); the scalar part
    must be a signed monomial so the rank-one rule applies.
    """

    __slots__ = ("sign", "eu", "et", "aux", "is_x")

    def __init__(self, sign=1, eu=0, et=0, aux=(), is_x=False):
        if sign not in (1, -1):
            raise ValueError("alphabet terms must carry a signed monomial scalar")
        self.sign = sign
        self.eu = eu
        self.et = et
        self.aux = tuple(sorted(aux))
        self.is_x = is_x


def x_alphabet() -> list:
    return [AlphaTerm(is_x=True)]


def x_plus_qm1_times(var: str, sign: int = 1) -> list:
    """Alphabet X + sign*(q-1)*var, split into signed monomial terms."""
    return [AlphaTerm(is_x=True),
            AlphaTerm(sign=sign, eu=2, aux=((var, 1),)),
            AlphaTerm(sign=-sign, aux=((var, 1),))]


def plethystic_substitute(f: SymFunc, alphabet: list) -> dict:
    """f[alphabet] collected as {aux monomial: SymFunc}.

    Keys are sorted tuples of (variable, exponent); the empty tuple holds
    the pure Sym[X] part.  Truncation at f.cap applies to the X-degree.
    """
    dom = f.dom
    out: dict = {}

    def add(aux, lam, c):
        if sum(lam) > f.cap or not c:
            return
        slot = out.setdefault(aux, {})
        s = slot.get(lam, dom.zero) + c
        if s:
            slot[lam] = s
        elif lam in slot:
            del slot[lam]

    for lam, coef in f.coeffs.items():
        for mu, fr in mono_to_p(lam).items():
            base = coef * dom.from_fraction(fr)
            # expand the product over parts of mu, one alphabet term per part
            states = [((), (), dom.one)]  # (sorted rest-partition, aux dict items, scalar)
            for r in mu:
                nxt = []
                for rest, aux, c in states:
                    for term in alphabet:
                        sc = dom.monomial(term.sign, term.eu * r, term.et * r)
                        aux2 = dict(aux)
                        for var, e in term.aux:
                            aux2[var] = aux2.get(var, 0) + e * r
                        rest2 = rest + (r,) if term.is_x else rest
                        nxt.append((rest2, tuple(sorted(aux2.items())), c * sc))
                states = nxt
            for rest, aux, c in states:
                restp = tuple(sorted(rest, reverse=True))
                cc = base * c
                if not cc:
                    continue
                aux = tuple((v, e) for v, e in aux if e)
                for lam2, n in p_to_mono(restp).items():
                    add(aux, lam2, cc * dom.from_int(n))
    return {aux: SymFunc(dom, f.cap, slot) for aux, slot in out.items() if slot}


def pexp_coefficients(dom, cap: int, term: AlphaTerm, var: str, lo: int, hi: int) -> dict:
    """Coefficients of var^i, lo <= i <= hi, in pExp[term * X].

    term must mention only `var` in its aux part.  Uses pExp[A] = sum h_n[A]
    and h_n[-B] = (-1)^n e_n[B] for rank-one B.
    """
    if not term.is_x:
        raise ValueError("pexp_coefficients expects a term containing X")
    evar = dict(term.aux).get(var, 0)
    if set(v for v, _ in term.aux) - {var}:
        raise ValueError("term mentions a variable other than the requested one")
    out = {}
    for n in range(0, cap + 1):
        i = evar * n
        if i < lo or i > hi:
            continue
        sc = dom.monomial(1, term.eu * n, term.et * n)
        if term.sign < 0:
            g = SymFunc.e(dom, cap, n).scale(sc * dom.monomial((-1) ** n))
        else:
            g = SymFunc.h(dom, cap, n).scale(sc)
        if g:
            prev = out.get(i)
            out[i] = g if prev is None else prev + g
    return out


def from_word_multiset(dom, cap: int, words, alphabet: int | None = None) -> SymFunc:
    """Aggregate (content multiset, coefficient) pairs into a SymFunc.

    Asserts the input is symmetric: all multisets with the same shape must
    accumulate the same total coefficient.
    """
    totals: dict = {}
    size = None
    for content, coef in words:
        ms = tuple(sorted(content))
        if size is None:
            size = len(ms)
        elif len(ms) != size:
            raise ValueError("all content multisets must have equal size")
        totals[ms] = totals.get(ms, dom.zero) + coef
    if size is None:
        return SymFunc.zero(dom, cap)
    if size > cap:
        raise ValueError("word size exceeds the degree cap")
    if alphabet is None:
        alphabet = max((max(ms) for ms in totals), default=0)
    by_shape: dict = {}
    for ms, c in totals.items():
        shape = tuple(sorted((ms.count(v) for v in set(ms)), reverse=True))
        by_shape.setdefault(shape, {})[ms] = c
    coeffs = {}
    for shape, table in by_shape.items():
        expected = None
        n_multisets = _count_multisets(shape, alphabet)
        values = list(table.values())
        if len(values) < n_multisets:
            values.append(dom.zero)  # some multiset of this shape is absent
        for v in values:
            if expected is None:
                expected = v
            elif v != expected:
                raise ValueError(f"inconsistent coefficients on shape {shape}: input not symmetric")
        if expected:
            coeffs[shape] = expected
    return SymFunc(dom, cap, coeffs)


def _count_multisets(shape: tuple, alphabet: int) -> int:
    # distinct letter-multisets over {1..alphabet} whose multiplicity partition is `shape`
    mults: dict = {}
    for s in shape:
        mults[s] = mults.get(s, 0) + 1
    remaining = alphabet
    out = 1
    for s, cnt in mults.items():
        out *= _binom(remaining, cnt)
        remaining -= cnt
    return out


def _binom(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return factorial(n) // (factorial(k) * factorial(n - k))
