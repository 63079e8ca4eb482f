"""Benchmark the compiled polynomial kernel against the pure-Python fallback.

Micro section: raw dict-polynomial operations, both modules side by side.
Macro section: a realistic exact workload run in subprocesses, selecting the
kernel through SHUFFLEALG_PURE_KERNEL.

Usage: python benchmarks/bench_kernel.py [--macro-scale N]
"""

import argparse
import os
import random
import subprocess
import sys
import time

from shufflealg import _kernel_py

try:
    from shufflealg import _kernel
except ImportError:
    _kernel = None


def random_poly(rng, terms, max_eu=24, max_et=10):
    out = {}
    for _ in range(terms):
        key = _kernel_py.pack(rng.randint(0, max_eu), rng.randint(0, max_et))
        out[key] = rng.randint(-10**6, 10**6) or 1
    return out


def micro(kernel, label, pairs, reps=40):
    t0 = time.perf_counter()
    for _ in range(reps):
        for a, b in pairs:
            kernel.p_add(a, b)
    t_add = time.perf_counter() - t0
    t0 = time.perf_counter()
    for _ in range(reps):
        for a, b in pairs:
            kernel.p_mul(a, b)
    t_mul = time.perf_counter() - t0
    t0 = time.perf_counter()
    for _ in range(reps):
        for a, b in pairs:
            kernel.p_divexact(kernel.p_mul(a, b), b)
    t_div = time.perf_counter() - t0
    print(f"  {label:<10} add {t_add:7.3f}s   mul {t_mul:7.3f}s   mul+divexact {t_div:7.3f}s")
    return t_add, t_mul, t_div


MACRO_SNIPPET = """
import time
from shufflealg import scalars
from shufflealg.scalars import ExactDomain
from shufflealg import verify
t0 = time.perf_counter()
dom = ExactDomain()
verify.sweep_suite(dom, total_max={scale})
verify.braid_formula_suite(dom, total_max={tm_scale})
verify.relations_suite(dom, kmax=3, degree=2)
print(f"kernel compiled={{scalars.K.IS_COMPILED}} elapsed={{time.perf_counter() - t0:.2f}}s")
"""


def macro(scale):
    for label, env in (("compiled", {}), ("pure", {"SHUFFLEALG_PURE_KERNEL": "1"})):
        cmd = [sys.executable, "-c", MACRO_SNIPPET.format(scale=scale, tm_scale=scale - 2)]
        res = subprocess.run(cmd, env={**os.environ, **env},
                             capture_output=True, text=True, check=True)
        print(f"  {label:<10} {res.stdout.strip()}")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--macro-scale", type=int, default=8)
    args = ap.parse_args()
    rng = random.Random(42)
    pairs = [(random_poly(rng, 30), random_poly(rng, 12)) for _ in range(50)]
    print("micro (50 poly pairs, 40 reps):")
    t_py = micro(_kernel_py, "pure", pairs)
    if _kernel is not None:
        t_cy = micro(_kernel, "compiled", pairs)
        print("  speedups:  " + "   ".join(f"{a / b:4.2f}x" for a, b in zip(t_py, t_cy)))
    else:
        print("  compiled kernel not built; skipping comparison")
    print(f"macro (sweep suite m+n<={args.macro_scale} + braid/relation checks):")
    macro(args.macro_scale)


if __name__ == "__main__":
    main()
