"""Batch verification: relation suites, sweep and braid cross-checks, and
the compositional shuffle identity itself.

Every suite returns a machine-readable dict {suite, cases, failures: [...]}
with deterministic ordering.  Exact mode is authoritative; fast mode
evaluates all scalars at a random rational point and is only a pre-screen.
"""

from __future__ import annotations

import json
import os
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction as Fr
from math import gcd

from . import actions as ac
from . import braid as br
from . import combinat as cb
from . import sweep as sw
from . import vkspace as vk
from .scalars import ExactDomain, FastDomain
from .vkspace import VElem


def make_domain(mode: str, seed=None):
    if mode == "exact":
        return ExactDomain()
    if mode == "fast":
        return FastDomain(seed=seed)
    raise ValueError(f"unknown mode {mode!r}")


def compositions_of(g: int):
    out = []

    def rec(rem, cur):
        if rem == 0:
            out.append(tuple(cur))
            return
        for a in range(1, rem + 1):
            rec(rem - a, cur + [a])

    rec(g, [])
    return out


# ------------------------------------------------------------------- suites

def relations_suite(dom, kmax: int = 3, degree: int = 3) -> dict:
    failures = []
    cases = 0
    for k in range(0, kmax + 1):
        for name, lhs, rhs in vk.standard_relations(dom, k):
            rep = vk.relation_check(lhs, rhs, k, degree, dom, name=name)
            cases += 1
            if not rep.passed:
                failures.append({"id": name, "witness": str(rep.witness)})
    return {"suite": "relations", "cases": cases, "failures": failures}


def sweep_suite(dom, total_max: int = 9) -> dict:
    """sweep_path == t^area q^(dinv-maxtdinv) chi for every path, m+n <= total_max."""
    failures = []
    cases = 0
    for m in range(1, total_max):
        for n in range(1, total_max - m + 1):
            for p in cb.enumerate_paths(m, n):
                cases += 1
                lhs = sw.sweep_path(p, dom)
                rhs = cb.path_weight(p, dom)
                if lhs != rhs:
                    failures.append({"id": f"sweep({m},{n})/{p}",
                                     "witness": f"lhs={lhs} rhs={rhs}"})
    return {"suite": "sweep", "cases": cases, "failures": failures}


def coloring_suite(dom, total_max: int = 9) -> dict:
    """assemble_composition == rhs_compositional for g(m1+n1) <= total_max."""
    failures = []
    cases = 0
    for m1 in range(1, total_max):
        for n1 in range(1, total_max):
            if gcd(m1, n1) != 1:
                continue
            g = 1
            while g * (m1 + n1) <= total_max:
                dp = sw.recursion_dp(g * m1, g * n1, dom, cap=g * n1)
                for alpha in compositions_of(g):
                    cases += 1
                    lhs = sw.assemble_composition(m1, n1, g, alpha, dp, dom)
                    rhs = cb.rhs_compositional(m1, n1, g, alpha, dom)
                    if lhs != rhs:
                        failures.append({"id": f"coloring({m1},{n1},{g},{alpha})",
                                         "witness": f"lhs={lhs} rhs={rhs}"})
                g += 1
    return {"suite": "coloring", "cases": cases, "failures": failures}


def _changed_keys(dp: sw.DpResult, s: int):
    """Colorings whose value or braid changed entering stratum s."""
    if s == 0:
        return list(dp.states[0])
    seen = []
    for kind, _src, dst, _extra in dp.log[s - 1]:
        if kind != "keep" and dst not in seen:
            seen.append(dst)
    return seen


def braid_formula_suite(dom, total_max: int = 7, q_degree_check: bool = True) -> dict:
    """DP values match the braid evaluations at every reachable coloring."""
    failures = []
    cases = 0
    for m in range(1, total_max):
        for n in range(1, total_max - m + 1):
            g = gcd(m, n)
            m1, n1 = m // g, n // g
            dp = sw.recursion_dp(m, n, dom, with_log=True, keep_states=True)
            for s in range(len(dp.states)):
                lower, upper = dp.stratum_bounds(s)
                for key in _changed_keys(dp, s):
                    if not key:
                        continue
                    cases += 1
                    h = br.safe_height(lower, upper, m1, n1)
                    rhs = br.braid_coloring_value(m1, n1, key, h, dom, dp.cap)
                    lhs = dp.states[s][key]
                    if lhs != rhs:
                        failures.append({"id": f"main({m},{n})@{s}:{key}",
                                         "witness": f"dp={lhs} braid={rhs}"})
                    elif q_degree_check and hasattr(dom, "u") and dom.name == "exact":
                        if not all(c.has_integer_q_degree() for c in rhs.terms.values()):
                            failures.append({"id": f"qdeg({m},{n})@{s}:{key}",
                                             "witness": str(rhs)})
    return {"suite": "braid_formula", "cases": cases, "failures": failures}


def _dplus_power(dom, k: int, cap: int) -> VElem:
    f = VElem.one(dom, 0, cap)
    for _ in range(k):
        f = vk.act_dplus(f)
    return f


def braid_transition_suite(dom, total_max: int = 7) -> dict:
    """The four braid transformation identities on every DP transition."""
    failures = []
    cases = 0
    u_inv = dom.monomial(1, -1, 0)
    for m in range(1, total_max):
        for n in range(1, total_max - m + 1):
            g = gcd(m, n)
            m1, n1 = m // g, n // g
            dp = sw.recursion_dp(m, n, dom, with_log=True, keep_states=True)
            for s, entry in enumerate(dp.log):
                lo_src, up_src = dp.stratum_bounds(s)
                lo_dst, up_dst = dp.stratum_bounds(s + 1)
                h_src = br.safe_height(lo_src, up_src, m1, n1)
                h_dst = br.safe_height(lo_dst, up_dst, m1, n1)
                px, py = dp.events[s]
                done = set()

                def braid_at(key, h):
                    word, cfg0, _ = br.braid_of_coloring(m1, n1, key, h)
                    return word

                for kind, src, dst, extra in entry:
                    if kind == "keep" or (kind, dst) in done:
                        continue
                    done.add((kind, dst))
                    cases += 1
                    k_dst = len(dst)
                    B = braid_at(dst, h_dst)
                    val_dst = br.evaluate(B, _dplus_power(dom, k_dst, dp.cap))
                    if kind == "A":
                        Bp = braid_at(src, h_src)
                        want = vk.act_dplus(br.evaluate(Bp, _dplus_power(dom, len(src), dp.cap)))
                    elif kind == "C":
                        Bp = braid_at(src, h_src)
                        base = br.evaluate(Bp, _dplus_power(dom, len(src), dp.cap))
                        comm = vk.act_dminus(vk.act_dplus(base)) - vk.act_dplus(vk.act_dminus(base))
                        want = comm.scale(dom.monomial(1, 1 - k_dst, 0) / (dom.q - dom.one))
                    elif kind == "D":
                        Bp = braid_at(src, h_src)
                        base = br.evaluate(Bp, _dplus_power(dom, len(src), dp.cap))
                        want = base.scale(dom.monomial(1, k_dst - 1, 0))
                    elif kind in ("B", "E"):
                        # both geometric predecessors of dst, regardless of which
                        # transition was recorded: E-source = dst itself, B-source
                        # = dst with the interval through the event point split
                        idx = next(ii for ii, (xi, yi) in enumerate(dst)
                                   if xi < px and py < yi)
                        xi, yi = dst[idx]
                        b_src = dst[:idx] + ((xi, py), (px, yi)) + dst[idx + 1:]
                        Bpp = braid_at(dst, h_src)
                        Bp = braid_at(b_src, h_src)
                        term_e = br.evaluate(Bpp, _dplus_power(dom, k_dst, dp.cap)).scale(dom.t)
                        term_b = vk.act_dminus(
                            br.evaluate(Bp, _dplus_power(dom, k_dst + 1, dp.cap))).scale(u_inv)
                        want = term_e + term_b
                    else:
                        raise AssertionError(kind)
                    if val_dst != want:
                        failures.append({"id": f"rule{kind}({m},{n})@{s}:{dst}",
                                         "witness": f"braid={val_dst} recursion={want}"})
    return {"suite": "braid_transitions", "cases": cases, "failures": failures}


def _random_admissible_config(rng, kmax=3, moves_max=4):
    """Random slope, positions and crossing counts with all orders admissible."""
    while True:
        m1 = rng.randint(1, 3)
        n1 = rng.randint(1, 3)
        if gcd(m1, n1) != 1:
            continue
        k = rng.randint(1, kmax)
        denom = rng.choice([17, 19, 23, 29])
        nums = rng.sample(range(1, denom), k)
        cfg = br.make_config(m1, n1, [br.EpsRat.const(Fr(a, denom)) for a in nums])
        alpha = [1] * k
        for _ in range(rng.randint(0, moves_max)):
            alpha[rng.randrange(k)] += 1
        try:
            br.trajectories(cfg, alpha)
            word, _ = br.special_braid(cfg, tuple(alpha))
        except br.DegenerateGeometry:
            continue
        return cfg, tuple(alpha)


def specialbraids_suite(dom, cases: int = 100, seed: int = 20260810) -> dict:
    """Order independence of special braids under evaluation."""
    rng = random.Random(seed)
    failures = []
    done = 0
    while done < cases:
        cfg, alpha = _random_admissible_config(rng)
        moves = [i for i in range(1, cfg.k + 1) for _ in range(alpha[i - 1] - 1)]
        if not moves:
            continue
        done += 1
        rng.shuffle(moves)
        w1, _ = br.special_braid(cfg, alpha)
        w2, _ = br.special_braid(cfg, alpha, order=moves)
        f = _dplus_power(dom, cfg.k, 3)
        a = br.evaluate(w1, f)
        b = br.evaluate(w2, f)
        if a != b:
            failures.append({"id": f"order({alpha},{moves})", "witness": f"{a} vs {b}"})
    return {"suite": "specialbraids", "cases": done, "failures": failures}


def trains_suite(dom, cases: int = 100, seed: int = 1234) -> dict:
    """Random instances of the train commutation rules, checked by evaluation."""
    rng = random.Random(seed)
    rules = ["gluing", "collision", "overtaking", "Tz", "Tytilde"]
    failures = []
    done = 0
    while done < cases:
        rule = rules[done % len(rules)]
        k = rng.randint(2, 4)
        ab = lambda: rng.randint(1, k)
        if rule == "gluing":
            params = {"a": ab(), "b": ab(), "c": ab()}
        elif rule == "collision":
            params = {"a": ab(), "b": ab(), "c": ab(), "d": ab()}
            if params["b"] == params["c"]:
                continue
        elif rule == "overtaking":
            d = rng.randint(1, k - 1)
            c = rng.randint(d + 1, k)
            if c - d < 1:
                continue
            params = {"a": rng.randint(d, c - 1), "b": rng.randint(d, c - 1), "c": c, "d": d}
        else:
            params = {"a": ab(), "b": ab()}
        try:
            lhs, rhs = br.rule_instance(rule, params)
        except ValueError:
            continue
        done += 1
        wl, wr = br.BraidWord(k, tuple(lhs)), br.BraidWord(k, tuple(rhs))
        # also exercise the in-place rewriter on the lhs word
        assert br.rewrite_trains(wl, rule, 0, params) == wr
        for f in (vk.VElem.one(dom, k, 3), _dplus_power(dom, k, 3)):
            a = br.evaluate(wl, f)
            b = br.evaluate(wr, f)
            if a != b:
                failures.append({"id": f"{rule}{params}@k={k}", "witness": f"{a} vs {b}"})
                break
    return {"suite": "trains", "cases": done, "failures": failures}


def braid_presentation_suite(dom, kmax: int = 3, degree: int = 2) -> dict:
    """Defining relations of the braid monoid under the representation."""
    failures = []
    cases = 0
    T = lambda i: ("T", i)
    Ti = lambda i: ("Ti", i)
    y = lambda i: ("y", i)
    z = lambda i: ("z", i)
    yt = lambda i: ("yt", i)
    for k in range(1, kmax + 1):
        rels = []
        for i in range(1, k):
            rels.append((f"TT^-1 k={k} i={i}", (T(i), Ti(i)), ()))
        for i in range(1, k - 1):
            rels.append((f"braid k={k} i={i}", (T(i), T(i + 1), T(i)), (T(i + 1), T(i), T(i + 1))))
        for i in range(1, k):
            for j in range(i + 2, k):
                rels.append((f"Tcomm k={k}", (T(i), T(j)), (T(j), T(i))))
        for fam, lab in ((y, "y"), (z, "z"), (yt, "yt")):
            for i in range(1, k + 1):
                for j in range(1, k):
                    if i not in (j, j + 1):
                        rels.append((f"{lab}{i}T{j} k={k}", (fam(i), T(j)), (T(j), fam(i))))
            for i in range(1, k + 1):
                for j in range(i + 1, k + 1):
                    rels.append((f"{lab}comm k={k}", (fam(i), fam(j)), (fam(j), fam(i))))
        for i in range(1, k):
            rels.append((f"yrec k={k} i={i}", (y(i + 1),), (Ti(i), y(i), Ti(i))))
            rels.append((f"zrec k={k} i={i}", (z(i + 1),), (T(i), z(i), T(i))))
            rels.append((f"ytrec k={k} i={i}", (yt(i + 1),), (T(i), yt(i), T(i))))
        if k >= 2:
            rels.append((f"mixed k={k}", (z(1), T(1), y(1), Ti(1)),
                         (Ti(1), y(1), Ti(1), z(1))))
            rels.append((f"yt-mixed k={k}", (yt(1), T(1), z(1)),
                         (T(1), z(1), T(1), yt(1), T(1))))
        for name, lw, rw in rels:
            cases += 1
            bad = None
            for f in vk.spanning_set(dom, k, degree):
                a = br.evaluate(br.BraidWord(k, tuple(lw)), f)
                b = br.evaluate(br.BraidWord(k, tuple(rw)), f)
                if a != b:
                    bad = (str(f), str(a), str(b))
                    break
            if bad:
                failures.append({"id": name, "witness": str(bad)})
    return {"suite": "braid_presentation", "cases": cases, "failures": failures}


def braid_suite(dom) -> dict:
    """Presentation + creation-map identities at small size."""
    out = braid_presentation_suite(dom)
    sub = creation_suite(dom)
    out["cases"] += sub["cases"]
    out["failures"].extend(sub["failures"])
    out["suite"] = "braid"
    return out


def creation_suite(dom, cases: int = 12, seed: int = 99) -> dict:
    """phi_+ geometric identity and the phi_- / phi_+^* conjugation equations."""
    rng = random.Random(seed)
    failures = []
    done = 0
    while done < cases:
        cfg, alpha = _random_admissible_config(rng, kmax=2, moves_max=3)
        k = cfg.k
        B, _ = br.special_braid(cfg, alpha)
        try:
            checks = _creation_checks(cfg, alpha, B)
        except br.DegenerateGeometry:
            continue
        done += 1
        for name, k2, lw, rw in checks:
            f = _dplus_power(dom, k2, 3)
            a = br.evaluate(br.BraidWord(k2, tuple(lw)), f)
            b = br.evaluate(br.BraidWord(k2, tuple(rw)), f)
            if a != b:
                failures.append({"id": f"{name}#{done}", "witness": f"{a} vs {b}"})
    return {"suite": "creation", "cases": done, "failures": failures}


def _creation_checks(cfg, alpha, B):
    """Build (name, strands, lhs, rhs) word pairs for the three creation maps."""
    checks = []
    k = cfg.k
    # phi_plus: extra fixed point left of every trajectory point
    flat = [p for tr in br.trajectories(cfg, alpha) for p in tr]
    x0 = br.EpsRat.const(min(p.num[0] / p.den[0] for p in flat) / 2)
    if any(x0 == p for p in flat):
        raise br.DegenerateGeometry("left guard collides")
    cfg_plus = br.PointConfig((x0,) + cfg.v, cfg.s, cfg.t)
    Bp, _ = br.special_braid(cfg_plus, (1,) + alpha,
                             order=[i + 1 for i in range(k, 0, -1)
                                    for _ in range(alpha[i - 1] - 1)])
    checks.append(("phi_plus", k + 1, Bp.gens, br.creation_hom(B, "phi_plus").gens))

    # phi_minus: extra fixed point at the finish corner (t, 1-t)
    cfg_minus = br.PointConfig(cfg.v + (cfg.t,), cfg.s, cfg.t)
    traj = br.trajectories(cfg_minus, alpha + (1,))
    flat2 = [p for tr in traj for p in tr]
    if len({(p.num, p.den) for p in flat2}) != len(flat2):
        raise br.DegenerateGeometry("finish guard collides")
    Bm, cfgm_final = br.special_braid(cfg_minus, alpha + (1,),
                                      order=[i for i in range(k, 0, -1)
                                             for _ in range(alpha[i - 1] - 1)])
    i0 = cfg_minus.sorted_position(cfg.t)
    i1 = cfgm_final.sorted_position(cfg.t)
    lhs = tuple(br.star(br.train_down(k + 1, i1))) + Bm.gens
    rhs = br.creation_hom(B, "phi_minus").gens + tuple(br.star(br.train_down(k + 1, i0)))
    checks.append(("phi_minus", k + 1, lhs, rhs))

    # phi_plus_star: extra fixed point at the start corner (1-t, t)
    pstart = br.EpsRat.const(1) - cfg.t
    cfg_star = br.PointConfig(cfg.v + (pstart,), cfg.s, cfg.t)
    traj = br.trajectories(cfg_star, alpha + (1,))
    flat3 = [p for tr in traj for p in tr]
    if len({(p.num, p.den) for p in flat3}) != len(flat3):
        raise br.DegenerateGeometry("start guard collides")
    Bs, cfgs_final = br.special_braid(cfg_star, alpha + (1,),
                                      order=[i for i in range(k, 0, -1)
                                             for _ in range(alpha[i - 1] - 1)])
    i0 = cfg_star.sorted_position(pstart)
    i1 = cfgs_final.sorted_position(pstart)
    lhs = Bs.gens + tuple(br.train_down(i0, 1))
    rhs = tuple(br.train_down(i1, 1)) + br.creation_hom(B, "phi_plus_star").gens
    checks.append(("phi_plus_star", k + 1, lhs, rhs))
    return checks


SUITES = {
    "relations": lambda dom: relations_suite(dom),
    "sweep": lambda dom: sweep_suite(dom, total_max=6),
    "coloring": lambda dom: coloring_suite(dom, total_max=6),
    "braid_formula": lambda dom: braid_formula_suite(dom, total_max=5),
    "braid": braid_suite,
    "trains": lambda dom: trains_suite(dom),
    "specialbraids": lambda dom: specialbraids_suite(dom),
}


def run_suite(name: str, dom) -> dict:
    """Run one named suite, or all of them."""
    if name == "all":
        reports = [run_suite(nm, dom) for nm in sorted(SUITES)]
        return {"suite": "all",
                "cases": sum(r["cases"] for r in reports),
                "failures": [f for r in reports for f in r["failures"]],
                "suites": reports}
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
    return SUITES[name](dom)


# ------------------------------------------------------------ shuffle verify

@dataclass
class JobConfig:
    m1: int
    n1: int
    g: int
    alpha: tuple | None = None       # None = all compositions of g
    cap: int | None = None
    mode: str = "exact"
    jobs: int = 1
    out: str | None = None
    seed: int | None = None
    budget: int = 50_000_000
    cache_dir: str | None = field(default_factory=lambda: os.environ.get("SHUFFLEALG_CACHE_DIR"))

    def __post_init__(self):
        if gcd(self.m1, self.n1) != 1:
            raise ValueError("m1, n1 must be coprime")
        if self.cap is None:
            self.cap = self.g * self.n1
        if self.cap < self.g * self.n1:
            raise ValueError("cap must be at least g*n1")


def _shuffle_entry(payload) -> dict:
    """One composition's comparison; top level so process pools can run it."""
    m1, n1, g, alpha, mode, seed = payload
    dom = make_domain(mode, seed=seed)
    t0 = time.monotonic()
    lhs = ac.lhs_compositional(m1, n1, g, alpha, dom)
    rhs = cb.rhs_compositional(m1, n1, g, alpha, dom)
    return _compare_entry(alpha, lhs, rhs, dom, mode, t0)


def _compare_entry(alpha, lhs, rhs, dom, mode, t0) -> dict:
    equal = lhs == rhs
    q_ok = True
    if mode == "exact":
        q_ok = all(c.has_integer_q_degree() for c in lhs.coeffs.values())
    entry = {"alpha": list(alpha), "equal": equal, "integer_q_degree": q_ok,
             "seconds": round(time.monotonic() - t0, 4)}
    if not equal:
        entry["lhs"] = lhs.to_json()
        entry["rhs"] = rhs.to_json()
        entry["diff"] = _coeff_diff(lhs, rhs, dom)
    return entry


def verify_shuffle(cfg: JobConfig) -> dict:
    """Compare both sides of the compositional identity for each composition.

    Compositions whose enumeration exceeds the budget are skipped and listed
    in the report rather than attempted.
    """
    alphas = [tuple(cfg.alpha)] if cfg.alpha else compositions_of(cfg.g)
    alphas.sort()
    skipped = []
    per_word = cb.word_enumeration_size(cfg.g * cfg.n1)
    if per_word * _path_count_bound(cfg) > cfg.budget:
        skipped = [list(a) for a in alphas]
        return {"m1": cfg.m1, "n1": cfg.n1, "g": cfg.g, "mode": cfg.mode,
                "cap": cfg.cap, "ok": False, "results": [],
                "skipped": skipped,
                "skip_reason": f"estimated work exceeds budget {cfg.budget}"}
    if cfg.jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        payloads = [(cfg.m1, cfg.n1, cfg.g, alpha, cfg.mode, cfg.seed)
                    for alpha in alphas]
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            results = list(pool.map(_shuffle_entry, payloads))
    else:
        dom = make_domain(cfg.mode, seed=cfg.seed)
        tower = ac.ActionTower(dom)
        cached_dp = _load_dp_cache(cfg, dom)
        results = []
        for alpha in alphas:
            t0 = time.monotonic()
            lhs = ac.lhs_compositional(cfg.m1, cfg.n1, cfg.g, alpha, dom, tower)
            if cached_dp is not None:
                rhs = sw.assemble_composition(cfg.m1, cfg.n1, cfg.g, alpha, cached_dp, dom)
            else:
                rhs = cb.rhs_compositional(cfg.m1, cfg.n1, cfg.g, alpha, dom)
            results.append(_compare_entry(alpha, lhs, rhs, dom, cfg.mode, t0))
    ok_all = all(e["equal"] and e["integer_q_degree"] for e in results)
    return {"m1": cfg.m1, "n1": cfg.n1, "g": cfg.g, "mode": cfg.mode,
            "cap": cfg.cap, "ok": ok_all, "results": results, "skipped": skipped}


def _path_count_bound(cfg: JobConfig) -> int:
    from math import comb
    return comb(cfg.g * (cfg.m1 + cfg.n1), cfg.g * cfg.m1)


def _coeff_diff(lhs, rhs, dom):
    keys = sorted(set(lhs.coeffs) | set(rhs.coeffs), key=lambda l: (sum(l), l))
    out = []
    for lam in keys:
        a = lhs.coeffs.get(lam, dom.zero)
        b = rhs.coeffs.get(lam, dom.zero)
        if a != b:
            out.append({"partition": list(lam), "lhs": dom.to_str(a), "rhs": dom.to_str(b)})
    return out


def _dp_cache_path(cfg: JobConfig):
    if not cfg.cache_dir or cfg.mode != "exact":
        return None
    os.makedirs(cfg.cache_dir, exist_ok=True)
    return os.path.join(cfg.cache_dir,
                        f"dp_{cfg.m1 * cfg.g}x{cfg.n1 * cfg.g}_cap{cfg.cap}.json")


def _load_dp_cache(cfg: JobConfig, dom):
    """DP results memoized per (m,n) so several alpha queries share one run."""
    m, n = cfg.m1 * cfg.g, cfg.n1 * cfg.g
    path = _dp_cache_path(cfg)
    if path and os.path.exists(path):
        with open(path) as fh:
            payload = json.load(fh)
        state = {tuple(tuple(iv) for iv in item["key"]): _velem_from_json(item["value"], dom)
                 for item in payload["state"]}
        return sw.DpResult(m, n, payload["cap"], [tuple(e) for e in payload["events"]], state)
    dp = sw.recursion_dp(m, n, dom, cap=cfg.cap)
    if path:
        payload = {"m": m, "n": n, "cap": dp.cap,
                   "events": [list(e) for e in dp.events],
                   "state": [{"key": [list(iv) for iv in key],
                              "value": _velem_to_json(val)}
                             for key, val in sorted(dp.state.items())]}
        with open(path, "w") as fh:
            json.dump(payload, fh)
    return dp


def _velem_to_json(f: VElem) -> dict:
    return {"k": f.k, "cap": f.cap,
            "terms": [{"partition": list(lam), "ys": list(ys), "coef": str(c)}
                      for (lam, ys), c in sorted(f.terms.items())]}


def _velem_from_json(payload: dict, dom) -> VElem:
    terms = {}
    for item in payload["terms"]:
        terms[(tuple(item["partition"]), tuple(item["ys"]))] = _parse_coefrat(item["coef"], dom)
    return VElem(dom, payload["k"], payload["cap"], terms)


def _parse_coefrat(text: str, dom):
    num, _, den = text.partition(" / ")
    out = _parse_poly(num, dom)
    if den:
        out = out / _parse_poly(den, dom)
    return out


def _parse_poly(text: str, dom):
    from .scalars import parse_scalar_token
    text = text.replace("- ", "+ -").replace("+ ", "+")
    total = dom.zero
    for piece in text.split("+"):
        piece = piece.strip()
        if not piece:
            continue
        total = total + parse_scalar_token(piece, dom)
    return total
