"""Command-line interface.

Subcommands: paths (enum/stats/chi), actions (build/lhs), sweep (path/dp),
braid (eval/of-coloring), verify (shuffle/suite).  All output is JSON with
deterministic ordering; exit status is nonzero when a verification fails.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import actions as ac
from . import braid as br
from . import combinat as cb
from . import sweep as sw
from . import verify as vf
from . import vkspace as vk


def _emit(payload, out=None):
    text = json.dumps(payload, indent=2, sort_keys=True)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _parse_path(text: str) -> cb.DyckPath:
    bits = [int(c) for c in text.strip()]
    return cb.DyckPath(bits.count(0), bits.count(1), bits)


def _parse_alpha(text: str) -> tuple:
    return tuple(int(x) for x in text.split(","))


def cmd_paths(args):
    dom = vf.make_domain(args.mode, seed=args.seed)
    if args.paths_cmd == "enum":
        alpha = _parse_alpha(args.alpha) if args.alpha else None
        paths = cb.enumerate_paths(args.m, args.n, alpha)
        _emit({"m": args.m, "n": args.n,
               "alpha": list(alpha) if alpha else None,
               "count": len(paths),
               "paths": sorted(str(p) for p in paths)}, args.out)
    elif args.paths_cmd == "stats":
        p = _parse_path(args.path)
        st = cb.statistics(p)
        mp = cb.attack_structure(p)
        _emit({"path": str(p), "m": p.m, "n": p.n,
               "touch_composition": list(cb.touch_composition(p)),
               "area": st["area"], "dinv": st["dinv"], "maxtdinv": st["maxtdinv"],
               "pi_prime": str(mp.pi_prime),
               "marks": sorted(list(c) for c in mp.marks)}, args.out)
    else:  # chi
        p = _parse_path(args.path)
        mp = cb.attack_structure(p)
        chi = cb.char_function(mp, dom)
        payload = {"path": str(p), "chi": chi.to_json()}
        if args.weighted:
            payload["weight"] = cb.path_weight(p, dom).to_json()
        _emit(payload, args.out)
    return 0


def cmd_actions(args):
    dom = vf.make_domain(args.mode, seed=args.seed)
    if args.actions_cmd == "build":
        word = ac.mediant_decompose(args.m, args.n)
        tower = ac.ActionTower(dom)
        handle = tower.handle(args.m, args.n, args.star)
        probe = handle.dplus(vk.VElem.one(dom, 0, max(2, args.n)))
        _emit({"m": args.m, "n": args.n, "star": bool(args.star),
               "letters": list(word.letters),
               "sector": [list(word.endpoints[0]), list(word.endpoints[1])],
               "mediants": [list(c) for c in word.chain],
               "dplus_on_1": str(probe)}, args.out)
    else:  # lhs
        alpha = _parse_alpha(args.alpha)
        val = ac.lhs_compositional(args.m1, args.n1, args.g, alpha, dom)
        _emit({"m1": args.m1, "n1": args.n1, "g": args.g, "alpha": list(alpha),
               "lhs": val.to_json()}, args.out)
    return 0


def cmd_sweep(args):
    dom = vf.make_domain(args.mode, seed=args.seed)
    if args.sweep_cmd == "path":
        p = _parse_path(args.path)
        events = sw.event_sequence(p)
        val = sw.sweep_path(p, dom)
        _emit({"path": str(p),
               "events": [{"point": list(e.point), "kind": e.kind, "a": e.a}
                          for e in events],
               "value": val.to_json()}, args.out)
    else:  # dp
        dp = sw.recursion_dp(args.m, args.n, dom)
        payload = {"m": args.m, "n": args.n,
                   "events": [list(e) for e in dp.events],
                   "colorings": len(dp.state)}
        if args.emit_colorings:
            payload["state"] = [{"intervals": [list(iv) for iv in key],
                                 "value": str(val)}
                                for key, val in sorted(dp.state.items())]
        _emit(payload, args.out)
    return 0


def cmd_braid(args):
    dom = vf.make_domain(args.mode, seed=args.seed)
    if args.braid_cmd == "eval":
        _, gens = vk.parse_word(args.word)
        word = br.BraidWord(args.k, gens)
        f = vk.VElem.one(dom, 0, args.cap)
        for _ in range(args.k):
            f = vk.act_dplus(f)
        val = br.evaluate(word, f)
        _emit({"word": str(word), "k": args.k,
               "on": f"d_+^{args.k}(1)", "value": str(val)}, args.out)
    else:  # of-coloring
        from math import gcd
        with open(args.coloring) as fh:
            data = json.load(fh)
        intervals = tuple(tuple(iv) for iv in data["intervals"])
        events = sw.dp_events(args.m, args.n)
        stratum = data.get("stratum", len(events))
        bounds_holder = sw.DpResult(args.m, args.n, args.n, events, {})
        lower, upper = bounds_holder.stratum_bounds(stratum)
        g = gcd(args.m, args.n)
        h = br.safe_height(lower, upper, args.m // g, args.n // g)
        word, cfg0, cfg1 = br.braid_of_coloring(args.m // g, args.n // g, intervals, h)
        _emit({"m": args.m, "n": args.n, "intervals": [list(iv) for iv in intervals],
               "stratum": stratum, "braid": str(word),
               "inv_initial": br._inversions(cfg0),
               "inv_final": br._inversions(cfg1)}, args.out)
    return 0


def cmd_verify(args):
    if args.verify_cmd == "shuffle":
        cfg = vf.JobConfig(m1=args.m1, n1=args.n1, g=args.g,
                           alpha=_parse_alpha(args.alpha) if args.alpha else None,
                           cap=args.cap, mode=args.mode, jobs=args.jobs,
                           out=args.out, seed=args.seed)
        report = vf.verify_shuffle(cfg)
        _emit(report, args.out)
        return 0 if report["ok"] else 1
    dom = vf.make_domain(args.mode, seed=args.seed)
    if args.verify_cmd == "relation":
        lhs = vk.parse_word(args.lhs, dom)
        rhs = vk.parse_word(args.rhs, dom)
        rep = vk.relation_check([lhs], [rhs], args.k, args.degree, dom,
                                name=f"{args.lhs} = {args.rhs}")
        _emit({"relation": rep.name, "k": args.k, "degree": args.degree,
               "passed": rep.passed, "cases": rep.cases,
               "witness": rep.witness}, args.out)
        return 0 if rep.passed else 1
    try:
        report = vf.run_suite(args.name, dom)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(report, args.out)
    return 0 if not report["failures"] else 1


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="shufflealg",
                                 description="Exact Dyck-path-algebra calculator")
    ap.add_argument("--mode", choices=("exact", "fast"), default="exact")
    ap.add_argument("--seed", type=int, default=None, help="fast-mode evaluation point seed")
    ap.add_argument("--out", default=None, help="write JSON report to this file")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("paths")
    ps = p.add_subparsers(dest="paths_cmd", required=True)
    q = ps.add_parser("enum")
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--alpha", default=None)
    q = ps.add_parser("stats")
    q.add_argument("--path", required=True)
    q = ps.add_parser("chi")
    q.add_argument("--path", required=True)
    q.add_argument("--weighted", action="store_true")
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("actions")
    ps = p.add_subparsers(dest="actions_cmd", required=True)
    q = ps.add_parser("build")
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--star", action="store_true")
    q = ps.add_parser("lhs")
    q.add_argument("--m1", type=int, required=True)
    q.add_argument("--n1", type=int, required=True)
    q.add_argument("--g", type=int, required=True)
    q.add_argument("--alpha", required=True)
    p.set_defaults(func=cmd_actions)

    p = sub.add_parser("sweep")
    ps = p.add_subparsers(dest="sweep_cmd", required=True)
    q = ps.add_parser("path")
    q.add_argument("--path", required=True)
    q = ps.add_parser("dp")
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--emit-colorings", action="store_true")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("braid")
    ps = p.add_subparsers(dest="braid_cmd", required=True)
    q = ps.add_parser("eval")
    q.add_argument("--word", required=True)
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--cap", type=int, default=6)
    q = ps.add_parser("of-coloring")
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--coloring", required=True, help="JSON file with intervals")
    p.set_defaults(func=cmd_braid)

    p = sub.add_parser("verify")
    ps = p.add_subparsers(dest="verify_cmd", required=True)
    q = ps.add_parser("shuffle")
    q.add_argument("--m1", type=int, required=True)
    q.add_argument("--n1", type=int, required=True)
    q.add_argument("--g", type=int, required=True)
    q.add_argument("--alpha", default=None)
    q.add_argument("--cap", type=int, default=None)
    q.add_argument("--jobs", type=int, default=1)
    q = ps.add_parser("suite")
    q.add_argument("name", help="relations|sweep|coloring|braid_formula|braid|trains|specialbraids|all")
    q = ps.add_parser("relation")
    q.add_argument("--lhs", required=True, help='e.g. "z1 d+"')
    q.add_argument("--rhs", required=True)
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--degree", type=int, default=2)
    p.set_defaults(func=cmd_verify)

    args = ap.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
